#pragma once

// Line bundles over the quantum projective plane: the column vectors Psi_N,
// the monopole projections P_N = Psi_N Psi_N^dag, the partition-of-unity
// identities behind Psi^dag Psi = 1, the identification of the entries with
// matrix coefficients of (0,N)-type irreps, and equivariance of P_N.

#include <array>

#include "qcp2/actions.hpp"
#include "qcp2/normalform.hpp"
#include "qcp2/report.hpp"

namespace qcp2 {

struct PsiVector {
  int N = 0;
  std::vector<std::array<int, 3>> idx;   // (j,k,l), j+k+l = |N|, lexicographic
  std::vector<NormalForm> entries;       // psi^N_{j,k,l}
  size_t dim() const { return entries.size(); }
};

inline long bundle_dim(int N) { return (long)(std::abs(N) + 1) * (std::abs(N) + 2) / 2; }

inline NormalForm z_monomial(int j, int k, int l) {
  return NormalForm::z(1).pow(j) * NormalForm::z(2).pow(k) * NormalForm::z(3).pow(l);
}

inline PsiVector build_psi(int N, int bound = 5) {
  if (std::abs(N) > bound)
    throw QError("bundle charge " + std::to_string(N) + " beyond configured bound " +
                 std::to_string(bound));
  PsiVector psi;
  psi.N = N;
  int n = std::abs(N);
  for (int j = 0; j <= n; ++j)
    for (int k = 0; j + k <= n; ++k) {
      int l = n - j - k;
      psi.idx.push_back({j, k, l});
      RScalar root = RScalar::sqrt_of(q_trinomial(j, k, l));
      if (N >= 0) {
        psi.entries.push_back(root * z_monomial(j, k, l).star());
      } else {
        QScalar pref = QScalar::q_power(Rational(-N + j - l));
        psi.entries.push_back((root * RScalar(pref)) * z_monomial(j, k, l));
      }
    }
  if ((long)psi.entries.size() != bundle_dim(N)) throw QError("psi size mismatch");
  return psi;
}

struct ProjectionMatrix {
  int N = 0;
  size_t d = 0;
  std::vector<NormalForm> e;  // row-major d x d
  NormalForm& at(size_t i, size_t j) { return e[i * d + j]; }
  const NormalForm& at(size_t i, size_t j) const { return e[i * d + j]; }
};

inline ProjectionMatrix build_projection(const PsiVector& psi) {
  ProjectionMatrix P;
  P.N = psi.N;
  P.d = psi.dim();
  P.e.resize(P.d * P.d);
  std::vector<NormalForm> stars(P.d);
  for (size_t j = 0; j < P.d; ++j) stars[j] = psi.entries[j].star();
  for (size_t i = 0; i < P.d; ++i)
    for (size_t j = 0; j < P.d; ++j) P.at(i, j) = psi.entries[i] * stars[j];
  return P;
}

// --- exact verification suites ----------------------------------------------

inline Report verify_partition_of_unity(int N) {
  Report rep;
  rep.suite = "partition of unity N=" + std::to_string(N);
  if (N < 0) throw QError("partition identities are stated for N >= 0");
  NormalForm s1, s2;
  for (int j = 0; j <= N; ++j)
    for (int k = 0; j + k <= N; ++k) {
      int l = N - j - k;
      NormalForm zm = z_monomial(j, k, l);
      NormalForm zs = zm.star();
      s1 += q_trinomial(j, k, l) * (zm * zs);
      s2 += (QScalar::q_power(Rational(2 * (j - l))) * q_trinomial(j, k, l)) * (zs * zm);
    }
  rep.add(s1 == NormalForm::one()
              ? Check::ok("sum [j,k,l]! z^jkl (z^jkl)* = 1, N=" + std::to_string(N),
                          "partition-of-unity")
              : Check::fail("first partition identity N=" + std::to_string(N),
                            "partition-of-unity", (s1 - NormalForm::one()).render()));
  NormalForm want = NormalForm(QScalar::q_power(Rational(-2 * N)));
  rep.add(s2 == want ? Check::ok("sum q^2(j-l) [j,k,l]! (z^jkl)* z^jkl = q^-2N, N=" +
                                     std::to_string(N),
                                 "partition-of-unity")
                     : Check::fail("second partition identity N=" + std::to_string(N),
                                   "partition-of-unity", (s2 - want).render()));
  return rep;
}

inline Report verify_psi_norm(const PsiVector& psi) {
  Report rep;
  rep.suite = "psi normalization N=" + std::to_string(psi.N);
  NormalForm s;
  for (auto& e : psi.entries) s += e.star() * e;
  rep.add(s == NormalForm::one()
              ? Check::ok("Psi^dag Psi = 1, N=" + std::to_string(psi.N), "psi-normalization")
              : Check::fail("Psi^dag Psi = 1, N=" + std::to_string(psi.N), "psi-normalization",
                            s.render()));
  // the rows of Psi^dag are charge-N sections; the entries of Psi itself
  // carry the opposite charge
  bool memb = true;
  for (auto& e : psi.entries)
    if (!membership_sigma0(e, -psi.N) || !membership_sigma0(e.star(), psi.N)) memb = false;
  rep.add(memb ? Check::ok("entries lie in the charge-N line bundle sections",
                           "sigma0N-membership")
               : Check::fail("entries lie in the charge-N line bundle sections",
                             "sigma0N-membership"));
  return rep;
}

inline Report verify_projector(const ProjectionMatrix& P) {
  Report rep;
  rep.suite = "projector N=" + std::to_string(P.N);
  bool idem = true, herm = true, memb = true;
  for (size_t i = 0; i < P.d && idem; ++i)
    for (size_t j = 0; j < P.d; ++j) {
      NormalForm s;
      for (size_t k = 0; k < P.d; ++k) s += P.at(i, k) * P.at(k, j);
      if (!(s == P.at(i, j))) { idem = false; break; }
    }
  for (size_t i = 0; i < P.d && herm; ++i)
    for (size_t j = 0; j < P.d; ++j)
      if (!(P.at(i, j).star() == P.at(j, i))) { herm = false; break; }
  for (size_t i = 0; i < P.d && memb; ++i)
    for (size_t j = 0; j < P.d; ++j)
      if (!membership_test(P.at(i, j), SubalgebraTag::ProjPlane)) { memb = false; break; }
  rep.add(idem ? Check::ok("P^2 = P, N=" + std::to_string(P.N), "projector-idempotent")
               : Check::fail("P^2 = P, N=" + std::to_string(P.N), "projector-idempotent"));
  rep.add(herm ? Check::ok("P = P*, N=" + std::to_string(P.N), "projector-selfadjoint")
               : Check::fail("P = P*, N=" + std::to_string(P.N), "projector-selfadjoint"));
  rep.add(memb ? Check::ok("entries in the base algebra, N=" + std::to_string(P.N),
                           "projector-membership")
               : Check::fail("entries in the base algebra, N=" + std::to_string(P.N),
                             "projector-membership"));
  // trace formula (N >= 0 form)
  if (P.N >= 0) {
    NormalForm tr;
    for (size_t i = 0; i < P.d; ++i) tr += P.at(i, i);
    NormalForm want;
    int N = P.N;
    for (int j = 0; j <= N; ++j)
      for (int k = 0; j + k <= N; ++k) {
        int l = N - j - k;
        QScalar coef = QScalar::q_power(Rational(-(j * k + k * l + l * j))) *
                       q_factorial(N).div_exact(q_factorial(j) * q_factorial(k) * q_factorial(l));
        NormalForm zl = NormalForm::z(3).pow(l), zk = NormalForm::z(2).pow(k),
                   zj = NormalForm::z(1).pow(j);
        want += coef * (zl.star() * zk.star() * zj.star() * zj * zk * zl);
      }
    rep.add(tr == want ? Check::ok("trace of P matches the closed form, N=" + std::to_string(P.N),
                                   "projector-trace")
                       : Check::fail("trace formula N=" + std::to_string(P.N), "projector-trace"));
  }
  return rep;
}

// Psi entries as starred matrix coefficients of the (0,N) / (-N,0) irrep
inline WeightIndex psi_weight_index(int N, const std::array<int, 3>& jkl) {
  if (N >= 0) return WeightIndex{0, jkl[0] + jkl[1], jkl[1] - jkl[0]};
  return WeightIndex{jkl[0] + jkl[1], 0, jkl[0] - jkl[1]};
}
inline IrrepLabel psi_label(int N) {
  return N >= 0 ? IrrepLabel{0, N} : IrrepLabel{-N, 0};
}
// relative phase between psi entries and starred matrix coefficients; the
// identification is on the nose for N >= 0 and carries (-1)^k for N < 0
inline int psi_pw_sign(int N, const std::array<int, 3>& jkl) {
  return (N >= 0 || jkl[1] % 2 == 0) ? 1 : -1;
}

inline Report verify_psi_peter_weyl(const PsiVector& psi) {
  Report rep;
  rep.suite = "psi Peter-Weyl N=" + std::to_string(psi.N);
  IrrepLabel lab = psi_label(psi.N);
  WeightIndex row{0, 0, 0};
  bool all = true;
  std::string badat;
  for (size_t a = 0; a < psi.dim(); ++a) {
    WeightIndex col = psi_weight_index(psi.N, psi.idx[a]);
    NormalForm t = peter_weyl_element(lab, row, col);
    NormalForm expect = QScalar(Rational(psi_pw_sign(psi.N, psi.idx[a]))) * t.star();
    if (!(psi.entries[a] == expect)) {
      all = false;
      badat = "(" + std::to_string(psi.idx[a][0]) + "," + std::to_string(psi.idx[a][1]) + "," +
              std::to_string(psi.idx[a][2]) + ")";
    }
  }
  rep.add(all ? Check::ok("psi entries = starred matrix coefficients, N=" + std::to_string(psi.N),
                          "psi-peter-weyl")
              : Check::fail("psi vs matrix coefficients, N=" + std::to_string(psi.N),
                            "psi-peter-weyl", "mismatch at " + badat));
  return rep;
}

// exact eigen-relations of Psi under the right action
inline Report verify_psi_right_relations(const PsiVector& psi) {
  Report rep;
  rep.suite = "psi right action N=" + std::to_string(psi.N);
  int N = psi.N;
  bool k2ok = true, su2ok = true, hol = true, lok = true;
  for (auto& e : psi.entries) {
    if (!(right_action(e, UqGen::K2) == QScalar::q_power(Rational(-N, 2)) * e)) k2ok = false;
    if (!(right_action(e, UqGen::E1).is_zero() && right_action(e, UqGen::F1).is_zero() &&
          right_action(e, UqGen::K1) == e))
      su2ok = false;
    // holomorphicity: Psi <| E2 = 0 for N >= 0, Psi <| F2 = 0 for N <= 0
    NormalForm h = N >= 0 ? right_action(e, UqGen::E2) : right_action(e, UqGen::F2);
    if (!h.is_zero()) hol = false;
    NormalForm es = e.star();
    NormalForm L = right_action(
        right_action(right_action(es, UqGen::K1), UqGen::K2), UqGen::K2);
    if (!(L == QScalar::q_power(Rational(N)) * es)) lok = false;
  }
  rep.add(k2ok ? Check::ok("Psi <| K2 = q^(-N/2) Psi", "psi-charge")
               : Check::fail("Psi <| K2 = q^(-N/2) Psi", "psi-charge"));
  rep.add(su2ok ? Check::ok("Psi is su(2)-invariant on the right", "psi-charge")
                : Check::fail("Psi su(2) invariance", "psi-charge"));
  rep.add(hol ? Check::ok("holomorphicity of Psi", "psi-holomorphic")
              : Check::fail("holomorphicity of Psi", "psi-holomorphic"));
  rep.add(lok ? Check::ok("Psi^dag <| K1K2^2 = q^N Psi^dag", "psi-charge")
              : Check::fail("Psi^dag charge eigenvalue", "psi-charge"));
  return rep;
}

// numeric equivariance: h |> psi_a = sum_b rho(S(h))_{ab} psi_b
inline Report verify_psi_equivariance(const PsiVector& psi, const BigFloat& q,
                                      const BigFloat& tol) {
  Report rep;
  rep.suite = "psi equivariance N=" + std::to_string(psi.N);
  IrrepLabel lab = psi_label(psi.N);
  Irrep irr(lab, q);
  // numeric coefficient tables of the entries
  std::vector<std::map<Word, BigFloat>> nums(psi.dim());
  for (size_t a = 0; a < psi.dim(); ++a) nums[a] = psi.entries[a].numeric(q);
  auto sofh = [&](UqGen g) -> Mat<BigFloat> {  // rho(S(g))
    switch (g) {
      case UqGen::K1: return irr.K1i;
      case UqGen::K2: return irr.K2i;
      case UqGen::E1: return (-q) * irr.E1;
      case UqGen::E2: return (-q) * irr.E2;
      case UqGen::F1: return (-1 / q) * irr.F1;
      case UqGen::F2: return (-1 / q) * irr.F2;
      default: throw QError("unexpected generator");
    }
  };
  for (auto g : {UqGen::K1, UqGen::K2, UqGen::E1, UqGen::E2, UqGen::F1, UqGen::F2}) {
    Mat<BigFloat> S = sofh(g);
    BigFloat worst = 0;
    for (size_t a = 0; a < psi.dim(); ++a) {
      std::map<Word, BigFloat> lhs = left_action(g, psi.entries[a]).numeric(q);
      size_t ia = irr.index_of(psi_weight_index(psi.N, psi.idx[a]));
      int sa = psi_pw_sign(psi.N, psi.idx[a]);
      for (size_t b = 0; b < psi.dim(); ++b) {
        size_t ib = irr.index_of(psi_weight_index(psi.N, psi.idx[b]));
        BigFloat c = S(ia, ib) * sa * psi_pw_sign(psi.N, psi.idx[b]);
        if (c == 0) continue;
        for (auto& [w, v] : nums[b]) lhs[w] -= c * v;
      }
      for (auto& [w, v] : lhs) {
        BigFloat av = abs(v);
        if (av > worst) worst = av;
      }
    }
    rep.add(Check::residual_check(
        std::string("equivariance under generator ") + std::to_string((int)g) +
            " N=" + std::to_string(psi.N),
        "psi-equivariance", (double)worst, (double)tol));
  }
  return rep;
}

}  // namespace qcp2
