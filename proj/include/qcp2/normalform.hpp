#pragma once

// Exact symbolic model of the quantized coordinate algebra on SU(3): elements
// are kept as linear combinations of PBW-ordered monomials in the nine
// generators u^i_j (row-major order u11 < u12 < ... < u33), with radical
// scalar coefficients.
//
// Normalization runs in two layers:
//   1. straightening: the quadratic exchange relations rewrite any word into
//      sorted monomials; the correction terms of the (q - q^-1) rule are
//      strictly smaller in deglex order on exponent vectors, so this
//      terminates;
//   2. determinant reduction: the cubic relation (quantum determinant = 1)
//      eliminates every sorted monomial containing u11, u22 and u33
//      simultaneously. Reduction is Groebner-style: the identity
//      u11 u22 u33 * m' = m' - sum_{pi != id} (-q)^{l(pi)} (pi-word) * m'
//      is straightened, the target monomial m is its unique deglex-leading
//      term with a unit coefficient, and m is replaced by the rest. All
//      replacement monomials are strictly deglex-smaller, so this terminates.
//
// Monomials are stored as strings over the letters 0..8, letter = 3*(i-1)+(j-1).

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcp2/bigfloat.hpp"
#include "qcp2/radical.hpp"

namespace qcp2 {

using Word = std::string;
using NFMap = std::map<Word, RScalar>;

inline char u_letter(int i, int j) {  // 1-based row/column
  if (i < 1 || i > 3 || j < 1 || j > 3) throw QError("generator index out of range");
  return static_cast<char>(3 * (i - 1) + (j - 1));
}

namespace nfdetail {

inline long& rewrite_budget() {
  thread_local long budget = 1000000;
  return budget;
}

inline void add_term(NFMap& m, const Word& w, const RScalar& c) {
  if (c.is_zero()) return;
  auto it = m.find(w);
  if (it == m.end()) m.emplace(w, c);
  else {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

// pure straightening in the quantum-matrix algebra (no determinant relation)
inline void straighten(const Word& w0, const RScalar& c0, NFMap& out, long& steps) {
  const QScalar qi = QScalar::q_power(-1);
  const QScalar qmqi = QScalar::q_power(1) - QScalar::q_power(-1);
  NFMap pending;
  add_term(pending, w0, c0);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Word w = std::move(node.key());
    RScalar c = std::move(node.mapped());
    if (c.is_zero()) continue;
    size_t p = 0;
    bool sorted = true;
    for (; p + 1 < w.size(); ++p)
      if (w[p] > w[p + 1]) { sorted = false; break; }
    if (sorted) { add_term(out, w, c); continue; }
    if (--steps < 0) throw QError("rewriting step budget exceeded on word of length " +
                                  std::to_string(w.size()));
    int a = w[p], b = w[p + 1];
    int ra = a / 3, ca = a % 3, rb = b / 3, cb = b % 3;
    Word sw = w;
    std::swap(sw[p], sw[p + 1]);
    if (ra == rb || ca == cb) {
      add_term(pending, sw, c * qi);
    } else if (ca < cb) {  // ra > rb here: commuting pair
      add_term(pending, sw, c);
    } else {  // ra > rb, ca > cb: exchange with correction
      add_term(pending, sw, c);
      Word cw = w;
      cw[p] = static_cast<char>(3 * rb + ca);
      cw[p + 1] = static_cast<char>(3 * ra + cb);
      add_term(pending, cw, RScalar(-qmqi) * c);
    }
  }
}

inline bool has_diag_triple(const Word& w) {
  bool a = false, b = false, c = false;
  for (char ch : w) {
    if (ch == 0) a = true;
    else if (ch == 4) b = true;
    else if (ch == 8) c = true;
  }
  return a && b && c;
}

// replacement of a sorted monomial containing the full diagonal triple,
// memoized per word
inline const NFMap& det_replacement(const Word& m, long& steps);

inline void det_reduce(NFMap& acc, long& steps) {
  bool again = true;
  while (again) {
    again = false;
    for (auto it = acc.begin(); it != acc.end(); ++it) {
      if (!has_diag_triple(it->first)) continue;
      Word m = it->first;
      RScalar c = it->second;
      acc.erase(it);
      const NFMap& repl = det_replacement(m, steps);
      for (auto& [w, rc] : repl) add_term(acc, w, c * rc);
      again = true;
      break;
    }
  }
}

inline const NFMap& det_replacement(const Word& m, long& steps) {
  thread_local std::map<Word, NFMap> cache;
  auto hit = cache.find(m);
  if (hit != cache.end()) return hit->second;

  Word mstar = m;
  mstar.erase(mstar.find(char(0)), 1);
  mstar.erase(mstar.find(char(4)), 1);
  mstar.erase(mstar.find(char(8)), 1);

  Word lead;
  lead.push_back(0); lead.push_back(4); lead.push_back(8);
  NFMap R;
  straighten(lead + mstar, RScalar::one(), R, steps);
  auto lit = R.find(m);
  if (lit == R.end()) throw QError("determinant reduction lost its leading monomial");
  RScalar lambda = lit->second;
  QScalar lq = lambda.as_qscalar();
  if (!lq.is_monomial()) throw QError("determinant reduction pivot is not a unit");
  RScalar lam_inv = RScalar(lq.inv_monomial());
  R.erase(lit);

  NFMap result;
  // + m'
  add_term(result, mstar, RScalar::one());
  // + sum over non-identity permutation words
  struct PTerm { Rational sign; int pw; Word w; };
  static const std::vector<std::pair<int, Word>> fives = [] {
    std::vector<std::pair<int, Word>> v;
    auto W = [](int a, int b, int c) { Word w; w.push_back(a); w.push_back(b); w.push_back(c); return w; };
    v.push_back({1, W(1, 3, 8)});   // +q
    v.push_back({1, W(0, 5, 7)});   // +q
    v.push_back({-2, W(1, 5, 6)});  // -q^2
    v.push_back({-2, W(2, 3, 7)});  // -q^2
    v.push_back({3, W(2, 4, 6)});   // +q^3
    return v;
  }();
  for (auto& [code, w3] : fives) {
    int e = std::abs(code);
    Rational sgn = code < 0 ? -1 : 1;
    NFMap piece;
    straighten(w3 + mstar, RScalar(QScalar::monomial(sgn, e * kDefaultRootOrder)), piece, steps);
    for (auto& [w, c] : piece) add_term(result, w, c);
  }
  // - (R - lambda m)
  for (auto& [w, c] : R) add_term(result, w, -c);
  for (auto& [w, c] : result) c = lam_inv * c;
  // the replacement itself may contain reducible monomials; the caller loops
  return cache.emplace(std::move(const_cast<Word&>(m)), std::move(result)).first->second;
}

inline NFMap normalize_word(const Word& w, const RScalar& c) {
  long steps = rewrite_budget();
  NFMap out;
  straighten(w, c, out, steps);
  det_reduce(out, steps);
  return out;
}

}  // namespace nfdetail

class NormalForm {
public:
  NormalForm() = default;
  explicit NormalForm(const RScalar& c) {
    if (!c.is_zero()) t_[Word{}] = c;
  }
  explicit NormalForm(const QScalar& c) : NormalForm(RScalar(c)) {}

  static NormalForm one() { return NormalForm(RScalar::one()); }
  static NormalForm zero() { return NormalForm(); }
  static NormalForm generator(int i, int j) {  // u^i_j, 1-based
    NormalForm f;
    f.t_[Word(1, u_letter(i, j))] = RScalar::one();
    return f;
  }
  static NormalForm monomial(const Word& w, const RScalar& c) {
    NormalForm f;
    for (auto& [mw, mc] : nfdetail::normalize_word(w, c)) nfdetail::add_term(f.t_, mw, mc);
    return f;
  }

  // sphere coordinates z_i = u^3_i and their stars (quantum minors)
  static NormalForm z(int i) { return generator(3, i); }
  static const NormalForm& z_star(int i) {
    static const std::array<NormalForm, 3> zs = [] {
      std::array<NormalForm, 3> a;
      for (int i = 1; i <= 3; ++i) a[i - 1] = star_of_generator(3, i);
      return a;
    }();
    return zs.at(i - 1);
  }
  static NormalForm p(int i, int j) { return z_star(i) * z(j); }

  const NFMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_scalar() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
  RScalar scalar_part() const {
    auto it = t_.find(Word{});
    return it == t_.end() ? RScalar::zero() : it->second;
  }
  size_t num_terms() const { return t_.size(); }
  long max_degree() const {
    long d = 0;
    for (auto& [w, c] : t_) d = std::max<long>(d, (long)w.size());
    return d;
  }

  NormalForm& operator+=(const NormalForm& o) {
    for (auto& [w, c] : o.t_) nfdetail::add_term(t_, w, c);
    return *this;
  }
  NormalForm& operator-=(const NormalForm& o) {
    for (auto& [w, c] : o.t_) nfdetail::add_term(t_, w, -c);
    return *this;
  }
  friend NormalForm operator+(NormalForm a, const NormalForm& b) { a += b; return a; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { a -= b; return a; }
  friend NormalForm operator-(const NormalForm& a) {
    NormalForm r;
    for (auto& [w, c] : a.t_) r.t_[w] = -c;
    return r;
  }
  friend NormalForm operator*(const NormalForm& a, const NormalForm& b) {
    NormalForm r;
    for (auto& [wa, ca] : a.t_)
      for (auto& [wb, cb] : b.t_) {
        RScalar c = ca * cb;
        if (c.is_zero()) continue;
        for (auto& [w, rc] : nfdetail::normalize_word(wa + wb, c)) nfdetail::add_term(r.t_, w, rc);
      }
    return r;
  }
  NormalForm& operator*=(const NormalForm& o) { *this = *this * o; return *this; }
  friend NormalForm operator*(const RScalar& s, NormalForm a) {
    if (s.is_zero()) return NormalForm();
    for (auto& [w, c] : a.t_) c = s * c;
    return a;
  }
  friend NormalForm operator*(const QScalar& s, NormalForm a) { return RScalar(s) * std::move(a); }

  NormalForm pow(unsigned n) const {
    NormalForm r = one(), b = *this;
    while (n) { if (n & 1) r = r * b; b = b * b; n >>= 1; }
    return r;
  }

  bool operator==(const NormalForm& o) const { return (*this - o).is_zero(); }
  bool operator!=(const NormalForm& o) const { return !(*this == o); }

  // *-structure: antilinear anti-homomorphism fixed by the quantum minors
  NormalForm star() const {
    NormalForm r;
    for (auto& [w, c] : t_) {
      NormalForm piece(c);  // coefficients are real scalars in q
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int i = *it / 3 + 1, j = *it % 3 + 1;
        piece = piece * star_of_generator(i, j);
      }
      r += piece;
    }
    return r;
  }

  // numeric coefficient vector, indexed by PBW monomial
  std::map<Word, BigFloat> numeric(const BigFloat& q) const {
    std::map<Word, BigFloat> m;
    for (auto& [w, c] : t_) {
      BigFloat v = c.eval_q(q);
      if (v != 0) m[w] = v;
    }
    return m;
  }

  std::string render() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [w, c] : t_) {
      if (!first) s += " + ";
      first = false;
      std::string mono = render_word(w);
      if (mono.empty()) s += "(" + c.render() + ")";
      else if (c == RScalar::one()) s += mono;
      else s += "(" + c.render() + ")*" + mono;
    }
    return s;
  }

  static std::string render_word(const Word& w) {
    std::string s;
    size_t i = 0;
    while (i < w.size()) {
      size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!s.empty()) s += "*";
      s += "u" + std::to_string(w[i] / 3 + 1) + std::to_string(w[i] % 3 + 1);
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
    return s;
  }

  static NormalForm star_of_generator(int i, int j) {
    int k1, k2, l1, l2;
    complement(i, k1, k2);
    complement(j, l1, l2);
    QScalar sign = QScalar::q_power(Rational(j - i));
    if ((j - i) % 2 != 0) sign = -sign;  // (-q)^(j-i)
    NormalForm m1 = generator(k1, l1) * generator(k2, l2);
    NormalForm m2 = generator(k1, l2) * generator(k2, l1);
    return sign * (m1 - QScalar::q_power(1) * m2);
  }

private:
  NFMap t_;

  static void complement(int i, int& a, int& b) {
    switch (i) {
      case 1: a = 2; b = 3; return;
      case 2: a = 1; b = 3; return;
      case 3: a = 1; b = 2; return;
    }
    throw QError("bad index");
  }
};

inline void set_rewrite_budget(long steps) { nfdetail::rewrite_budget() = steps; }

}  // namespace qcp2
