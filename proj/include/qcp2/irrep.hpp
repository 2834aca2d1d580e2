#pragma once

// Finite-dimensional irreducible *-representations of U_q(su(3)), realized
// from the closed-form matrix elements on the weight basis (j1, j2, m), with
// verification of the defining relations, the Casimir spectrum, branching to
// U_q(u(2)) and the lowering-word construction of an orthonormal basis.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcp2/matrix.hpp"
#include "qcp2/qscalar.hpp"
#include "qcp2/radical.hpp"
#include "qcp2/report.hpp"
#include "qcp2/uqword.hpp"

namespace qcp2 {

struct IrrepLabel {
  int n1 = 0, n2 = 0;
  long dim() const { return (long)(n1 + 1) * (n2 + 1) * (n1 + n2 + 2) / 2; }
  std::string str() const { return "(" + std::to_string(n1) + "," + std::to_string(n2) + ")"; }
};

struct WeightIndex {
  int j1 = 0, j2 = 0, m2 = 0;  // m = m2/2
  bool operator<(const WeightIndex& o) const {
    if (j1 != o.j1) return j1 < o.j1;
    if (j2 != o.j2) return j2 < o.j2;
    return m2 < o.m2;
  }
  bool operator==(const WeightIndex& o) const { return j1 == o.j1 && j2 == o.j2 && m2 == o.m2; }
  std::string str() const {
    std::ostringstream os;
    os << "(" << j1 << "," << j2 << "," << m2 << "/2)";
    return os.str();
  }
};

// sqrt(num/den) as an exact radical scalar
inline RScalar sqrt_of_fraction(const QScalar& num, const QScalar& den) {
  return RScalar::sqrt_of(num * den) * RScalar(den).inverse();
}

class Irrep {
public:
  IrrepLabel label;
  BigFloat q;
  std::vector<WeightIndex> basis;  // lexicographic in (j1, j2, m)

  Irrep(IrrepLabel lab, const BigFloat& qval) : label(lab), q(qval) {
    for (int j1 = 0; j1 <= lab.n1; ++j1)
      for (int j2 = 0; j2 <= lab.n2; ++j2)
        for (int m2 = -(j1 + j2); m2 <= j1 + j2; m2 += 2) basis.push_back({j1, j2, m2});
    if ((long)basis.size() != lab.dim())
      throw QError("irrep dimension mismatch for " + lab.str());
    for (size_t i = 0; i < basis.size(); ++i) index_[key(basis[i])] = i;
    build();
  }

  size_t dim() const { return basis.size(); }
  size_t index_of(const WeightIndex& w) const {
    auto it = index_.find(key(w));
    if (it == index_.end()) throw QError("inadmissible weight index " + w.str());
    return it->second;
  }
  bool admissible(int j1, int j2, int m2) const {
    return index_.count(key({j1, j2, m2})) != 0;
  }
  size_t highest_weight() const { return index_of({label.n1, 0, label.n1}); }

  const Mat<BigFloat>& gen(UqGen g) const {
    switch (g) {
      case UqGen::K1: return K1;
      case UqGen::K1i: return K1i;
      case UqGen::K2: return K2;
      case UqGen::K2i: return K2i;
      case UqGen::E1: return E1;
      case UqGen::E2: return E2;
      case UqGen::F1: return F1;
      case UqGen::F2: return F2;
    }
    throw QError("unknown generator");
  }

  Mat<BigFloat> rep_mono(const UqMono& m) const {
    Mat<BigFloat> r = Mat<BigFloat>::identity(dim());
    for (auto g : m) r = r * gen(g);
    return r;
  }
  Mat<BigFloat> rep(const UqWord& w) const {
    Mat<BigFloat> r(dim(), dim());
    for (auto& [m, c] : w.terms()) r = r + c.eval_q(q) * rep_mono(m);
    return r;
  }

  // --- relation suite -------------------------------------------------------

  Report verify_relations(const BigFloat& tol) const {
    Report rep;
    rep.suite = "uqsu3-reps " + label.str();
    auto res = [&](const std::string& n, const Mat<BigFloat>& m) {
      rep.add(Check::residual_check(n + " " + label.str(), "uqsu3-relations",
                                    (double)max_abs(m), (double)tol));
    };
    BigFloat qq = q, qi = 1 / q, qh = sqrt(q);
    res("[K1,K2]", commutator(K1, K2));
    res("K1 E1 K1^-1 - q E1", K1 * E1 * K1i - qq * E1);
    res("K2 E2 K2^-1 - q E2", K2 * E2 * K2i - qq * E2);
    res("K1 E2 K1^-1 - q^-1/2 E2", K1 * E2 * K1i - (1 / qh) * E2);
    res("K2 E1 K2^-1 - q^-1/2 E1", K2 * E1 * K2i - (1 / qh) * E1);
    Mat<BigFloat> c1 = commutator(E1, F1) - (1 / (qq - qi)) * (K1 * K1 - K1i * K1i);
    Mat<BigFloat> c2 = commutator(E2, F2) - (1 / (qq - qi)) * (K2 * K2 - K2i * K2i);
    res("[E1,F1] - (K1^2-K1^-2)/(q-q^-1)", c1);
    res("[E2,F2] - (K2^2-K2^-2)/(q-q^-1)", c2);
    res("[E1,F2]", commutator(E1, F2));
    res("[E2,F1]", commutator(E2, F1));
    BigFloat q2 = qq + qi;
    res("serre E1E1E2", E1 * E1 * E2 - q2 * (E1 * E2 * E1) + E2 * E1 * E1);
    res("serre E2E2E1", E2 * E2 * E1 - q2 * (E2 * E1 * E2) + E1 * E2 * E2);
    res("serre F1F1F2", F1 * F1 * F2 - q2 * (F1 * F2 * F1) + F2 * F1 * F1);
    res("F1 = E1^t", F1 - E1.transpose());
    res("F2 = E2^t", F2 - E2.transpose());
    bool kpos = true;
    for (size_t i = 0; i < dim(); ++i)
      if (!(K1(i, i) > 0 && K2(i, i) > 0)) kpos = false;
    rep.add(kpos ? Check::ok("K diagonal positive " + label.str(), "uqsu3-relations")
                 : Check::fail("K diagonal positive " + label.str(), "uqsu3-relations"));
    return rep;
  }

  // --- Casimir --------------------------------------------------------------

  Mat<BigFloat> h_diag(const Rational& power) const {
    // H = (K1 K2^-1)^(2/3); this returns H^power realized diagonally
    Mat<BigFloat> H(dim(), dim());
    for (size_t i = 0; i < dim(); ++i) {
      auto& w = basis[i];
      // H eigenvalue: q^( m - (j1-j2)/2 - (n2-n1)/3 )
      Rational e = Rational(w.m2, 2) - Rational(w.j1 - w.j2, 2) - Rational(label.n2 - label.n1, 3);
      H(i, i) = q_pow(q, e * power);
    }
    return H;
  }

  Mat<BigFloat> casimir_matrix() const {
    BigFloat qq = q, qi = 1 / q;
    Mat<BigFloat> H = h_diag(1), Hi = h_diag(-1), H2 = h_diag(2), H2i = h_diag(-2);
    Mat<BigFloat> KK = K1 * K2;
    Mat<BigFloat> qKK = qq * KK, qKKi = qi * (K1i * K2i);
    Mat<BigFloat> id = Mat<BigFloat>::identity(dim());
    BigFloat d = qq - qi;
    Mat<BigFloat> part1 =
        (1 / (d * d)) * ((H + Hi) * (qKK * qKK + qKKi * qKKi) + H2 + H2i - BigFloat(6) * id);
    Mat<BigFloat> part2 = (qq * (H * (K2 * K2)) + qi * (Hi * (K2i * K2i))) * (F1 * E1) +
                          (qq * (Hi * (K1 * K1)) + qi * (H * (K1i * K1i))) * (F2 * E2);
    auto qc = [&](const Mat<BigFloat>& a, const Mat<BigFloat>& b) { return a * b - qi * (b * a); };
    Mat<BigFloat> part3 =
        qq * (H * (qc(F2, F1) * qc(E1, E2))) + qq * (Hi * (qc(F1, F2) * qc(E2, E1)));
    return part1 + part2 + part3;
  }

  // exact spectrum value [ (n1-n2)/3 ]^2 + [ (2n1+n2)/3 + 1 ]^2 + [ (n1+2n2)/3 + 1 ]^2
  static RScalar casimir_spectrum_exact(IrrepLabel lab) {
    auto sq = [](const RScalar& x) { return x * x; };
    return sq(q_number_frac(Rational(lab.n1 - lab.n2, 3))) +
           sq(q_number_frac(Rational(2 * lab.n1 + lab.n2, 3) + 1)) +
           sq(q_number_frac(Rational(lab.n1 + 2 * lab.n2, 3) + 1));
  }

  Report verify_casimir(const BigFloat& tol) const {
    Report rep;
    rep.suite = "casimir " + label.str();
    Mat<BigFloat> C = casimir_matrix();
    BigFloat expect = casimir_spectrum_exact(label).eval_q(q);
    Mat<BigFloat> dev = C - expect * Mat<BigFloat>::identity(dim());
    rep.add(Check::residual_check("casimir scalar matches spectrum " + label.str(),
                                  "casimir-spectrum", (double)max_abs(dev), (double)tol));
    return rep;
  }

  // --- branching to U_q(u(2)) ----------------------------------------------

  // multiset of (2l, 2N) with multiplicities
  std::map<std::pair<int, int>, int> branch_to_u2(const BigFloat& tol) const {
    Mat<BigFloat> Csu2 = F1 * E1;
    BigFloat d = q - 1 / q;
    std::map<std::pair<int, int>, int> hits;
    for (size_t i = 0; i < dim(); ++i) {
      BigFloat c = Csu2(i, i) + (q * K1(i, i) * K1(i, i) + (1 / q) * K1i(i, i) * K1i(i, i) - 2) / (d * d);
      BigFloat L = K1(i, i) * K2(i, i) * K2(i, i);
      int l2 = -1, N2 = 0;
      for (int cand = 0; cand <= label.n1 + label.n2; ++cand) {
        BigFloat lam = q_number_num(q, Rational(cand + 1, 2));
        if (abs(c - lam * lam) < tol) { l2 = cand; break; }
      }
      bool nfound = false;
      for (int cand = -3 * (label.n1 + label.n2) - 2; cand <= 3 * (label.n1 + label.n2) + 2; ++cand) {
        if (abs(L - q_pow(q, Rational(cand, 2))) < tol) { N2 = cand; nfound = true; break; }
      }
      if (l2 < 0 || !nfound) throw QError("branching: eigenvalue clustering failed; raise precision");
      hits[{l2, N2}]++;
    }
    std::map<std::pair<int, int>, int> mult;
    for (auto& [k, c] : hits) {
      if (c % (k.first + 1) != 0) throw QError("branching: block size not divisible by 2l+1");
      mult[k] = c / (k.first + 1);
    }
    return mult;
  }

  // enumeration of the branching rule (the independent oracle)
  static std::map<std::pair<int, int>, int> branch_rule(IrrepLabel lab) {
    std::map<std::pair<int, int>, int> mult;
    for (int l2 = 0; l2 <= lab.n1 + lab.n2; ++l2) {
      int lo2 = std::max(-l2, l2 - 2 * lab.n2);
      int hi2 = std::min(l2, 2 * lab.n1 - l2);
      for (int idx2 = lo2; idx2 <= hi2; idx2 += 2) {
        int N2 = 3 * idx2 + 2 * (lab.n2 - lab.n1);
        mult[{l2, N2}]++;
      }
    }
    return mult;
  }

  Report verify_branching(const BigFloat& tol) const {
    Report rep;
    rep.suite = "branching " + label.str();
    auto got = branch_to_u2(tol);
    auto expect = branch_rule(label);
    bool same = got == expect;
    long dimsum = 0;
    for (auto& [k, c] : got) dimsum += (long)c * (k.first + 1);
    rep.add(same ? Check::ok("branching multiset matches rule " + label.str(), "branching-u2")
                 : Check::fail("branching multiset matches rule " + label.str(), "branching-u2"));
    rep.add(dimsum == (long)dim()
                ? Check::ok("branching dimension count " + label.str(), "branching-u2")
                : Check::fail("branching dimension count " + label.str(), "branching-u2"));
    bool integrality = true;
    for (auto& [k, c] : got)
      if ((k.first + k.second) % 2 != 0) integrality = false;  // l + N must be an integer
    rep.add(integrality ? Check::ok("l+N integral " + label.str(), "branching-u2")
                        : Check::fail("l+N integral " + label.str(), "branching-u2"));
    return rep;
  }

  // --- lowering words -------------------------------------------------------

  // the element X_{j1,j2,m} mapping the highest weight vector to |j1,j2,m>
  static UqWord lowering_word(IrrepLabel lab, const WeightIndex& t) {
    int n1 = lab.n1, n2 = lab.n2;
    long l2 = t.j1 + t.j2;
    // normalization^2, kept exact as a fraction
    QScalar num = q_number(l2 + 1) * q_factorial((l2 + t.m2) / 2) * q_factorial(n2 - t.j2) *
                  q_factorial(t.j1) * q_factorial(n1 + t.j2 + 1) * q_factorial(n2 + t.j1 + 1);
    QScalar den = q_factorial((l2 - t.m2) / 2) * q_factorial(n1 - t.j1) * q_factorial(t.j2) *
                  q_factorial(n1) * q_factorial(n2) * q_factorial(n1 + n2 + 1);
    RScalar norm = sqrt_of_fraction(num, den);

    UqWord F1 = UqWord::gen(UqGen::F1), F2 = UqWord::gen(UqGen::F2);
    UqWord qcFF = UqWord::q_comm(F2, F1);
    UqWord sum;
    for (long k = 0; k <= n1 - t.j1; ++k) {
      RScalar coef =
          RScalar(QScalar::q_power(Rational(-k * (l2 + k + 1))) * q_binomial(n1 - t.j1, k)) *
          RScalar(q_factorial(l2 + k + 1)).inverse();
      UqWord w = UqWord::one();
      for (long i = 0; i < (l2 - t.m2) / 2 + k; ++i) w = w * F1;
      for (long i = 0; i < n1 - t.j1 - k; ++i) w = w * qcFF;
      for (long i = 0; i < t.j2 + k; ++i) w = w * F2;
      sum += coef * w;
    }
    return norm * sum;
  }

  Report verify_lowering_words(const BigFloat& tol) const {
    Report report;
    report.suite = "lowering words " + label.str();
    Mat<BigFloat> up(dim(), 1);
    up(highest_weight(), 0) = 1;
    BigFloat worst = 0;
    for (size_t t = 0; t < dim(); ++t) {
      UqWord w = lowering_word(label, basis[t]);
      Mat<BigFloat> v = rep(w) * up;
      for (size_t i = 0; i < dim(); ++i) {
        BigFloat want = (i == t) ? BigFloat(1) : BigFloat(0);
        BigFloat dev = abs(v(i, 0) - want);
        if (dev > worst) worst = dev;
      }
    }
    report.add(Check::residual_check("X words reproduce the weight basis " + label.str(),
                                     "lowering-word-basis", (double)worst, (double)tol));
    return report;
  }

  // exact square of a raising/lowering generator entry (radical-free check data)
  RScalar exact_entry_square(UqGen g, size_t row, size_t col) const {
    auto& s = basis[col];
    auto& t = basis[row];
    long l2 = s.j1 + s.j2;
    auto frac = [&](Rational x) { return q_number_frac(x); };
    if (g == UqGen::E1) {
      if (!(t.j1 == s.j1 && t.j2 == s.j2 && t.m2 == s.m2 + 2)) return RScalar::zero();
      return frac(Rational(l2 - s.m2, 2)) * frac(Rational(l2 + s.m2, 2) + 1);
    }
    if (g == UqGen::E2) {
      RScalar A2 = (frac(label.n1 - s.j1) * frac(label.n2 + s.j1 + 2) * frac(s.j1 + 1)) /
                   (frac(l2 + 1) * frac(l2 + 2));
      RScalar B2 = l2 == 0 ? RScalar::one()
                           : (frac(label.n1 + s.j2 + 1) * frac(label.n2 - s.j2 + 1) * frac(s.j2)) /
                                 (frac(l2) * frac(l2 + 1));
      if (t.j1 == s.j1 + 1 && t.j2 == s.j2 && t.m2 == s.m2 - 1)
        return frac(Rational(l2 - s.m2, 2) + 1) * A2;
      if (t.j1 == s.j1 && t.j2 == s.j2 - 1 && t.m2 == s.m2 - 1)
        return frac(Rational(l2 + s.m2, 2)) * B2;
      return RScalar::zero();
    }
    throw QError("exact_entry_square: unsupported generator");
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["label"] = {label.n1, label.n2};
    j["dim"] = dim();
    j["basis"] = nlohmann::ordered_json::array();
    for (auto& w : basis) j["basis"].push_back({w.j1, w.j2, w.m2});
    auto dump = [&](const Mat<BigFloat>& m) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        rows.push_back(row);
      }
      return rows;
    };
    j["mats"]["K1"] = dump(K1);
    j["mats"]["K2"] = dump(K2);
    j["mats"]["E1"] = dump(E1);
    j["mats"]["E2"] = dump(E2);
    j["mats"]["F1"] = dump(F1);
    j["mats"]["F2"] = dump(F2);
    return j;
  }

  Mat<BigFloat> K1, K1i, K2, K2i, E1, E2, F1, F2;

private:
  std::map<long, size_t> index_;

  static long key(const WeightIndex& w) {
    return ((long)w.j1 * 1000 + w.j2) * 1000 + (w.m2 + 500);
  }

  BigFloat qn(const Rational& x) const { return q_number_num(q, x); }

  void build() {
    size_t n = dim();
    K1 = Mat<BigFloat>(n, n); K1i = Mat<BigFloat>(n, n);
    K2 = Mat<BigFloat>(n, n); K2i = Mat<BigFloat>(n, n);
    E1 = Mat<BigFloat>(n, n); E2 = Mat<BigFloat>(n, n);
    for (size_t i = 0; i < n; ++i) {
      auto& w = basis[i];
      Rational e1(w.m2, 2);
      Rational e2 = Rational(3 * (w.j1 - w.j2), 4) + Rational(label.n2 - label.n1, 2) - Rational(w.m2, 4);
      K1(i, i) = q_pow(q, e1);
      K1i(i, i) = q_pow(q, -e1);
      K2(i, i) = q_pow(q, e2);
      K2i(i, i) = q_pow(q, -e2);
    }
    for (size_t i = 0; i < n; ++i) {
      auto& w = basis[i];
      long l2 = w.j1 + w.j2;
      // E1 |j1,j2,m> = sqrt([l-m][l+m+1]) |j1,j2,m+1>
      if (admissible(w.j1, w.j2, w.m2 + 2)) {
        BigFloat c = sqrt(qn(Rational(l2 - w.m2, 2)) * qn(Rational(l2 + w.m2, 2) + 1));
        E1(index_of({w.j1, w.j2, w.m2 + 2}), i) = c;
      }
      // E2: A branch raises j1, B branch lowers j2, both lower m by 1/2
      if (w.j1 + 1 <= label.n1 && admissible(w.j1 + 1, w.j2, w.m2 - 1)) {
        BigFloat A = sqrt(qn(label.n1 - w.j1) * qn(label.n2 + w.j1 + 2) * qn(w.j1 + 1) /
                          (qn(l2 + 1) * qn(l2 + 2)));
        BigFloat c = sqrt(qn(Rational(l2 - w.m2, 2) + 1)) * A;
        E2(index_of({w.j1 + 1, w.j2, w.m2 - 1}), i) = c;
      }
      if (w.j2 - 1 >= 0 && admissible(w.j1, w.j2 - 1, w.m2 - 1)) {
        BigFloat B = l2 == 0 ? BigFloat(1)
                             : sqrt(qn(label.n1 + w.j2 + 1) * qn(label.n2 - w.j2 + 1) * qn(w.j2) /
                                    (qn(l2) * qn(l2 + 1)));
        BigFloat c = sqrt(qn(Rational(l2 + w.m2, 2))) * B;
        E2(index_of({w.j1, w.j2 - 1, w.m2 - 1}), i) = c;
      }
    }
    F1 = E1.transpose();
    F2 = E2.transpose();
  }
};

}  // namespace qcp2
