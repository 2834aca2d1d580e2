#pragma once

// Canonical left and right actions of the symmetry algebra on the quantized
// coordinate ring, the twisted left action L_h a = a <| S^-1(h), membership
// predicates for the sphere / projective-plane subalgebras, the sphere
// relation suite, and matrix coefficients of irreps inside the algebra.

#include "qcp2/irrep.hpp"
#include "qcp2/normalform.hpp"
#include "qcp2/report.hpp"
#include "qcp2/uqword.hpp"

namespace qcp2 {

namespace actdetail {

// weight exponent (in units of 1/2) of a single letter under K_i
inline int right_k_weight2(char letter, int i) {  // u^j_k <| K_i
  int j = letter / 3 + 1;
  return (i + 1 == j ? 1 : 0) - (i == j ? 1 : 0);
}
inline int left_k_weight2(char letter, int i) {  // K_i |> u^j_k
  int k = letter % 3 + 1;
  return (i + 1 == k ? 1 : 0) - (i == k ? 1 : 0);
}

}  // namespace actdetail

// single-generator right action on a normal form
inline NormalForm right_action(const NormalForm& a, UqGen g) {
  using namespace actdetail;
  NormalForm out;
  bool kgen = is_k(g);
  int i = (g == UqGen::K1 || g == UqGen::K1i || g == UqGen::E1 || g == UqGen::F1) ? 1 : 2;
  int sign = (g == UqGen::K1i || g == UqGen::K2i) ? -1 : 1;
  for (auto& [w, c] : a.terms()) {
    if (kgen) {
      int tw2 = 0;
      for (char l : w) tw2 += right_k_weight2(l, i);
      out += NormalForm::monomial(w, c * RScalar(QScalar::q_power(Rational(sign * tw2, 2))));
      continue;
    }
    bool raising = is_e(g);
    for (size_t pos = 0; pos < w.size(); ++pos) {
      char l = w[pos];
      int row = l / 3 + 1, col = l % 3 + 1;
      char rep;
      if (raising) {  // u^j_k <| E_i = delta_{i+1,j} u^i_k
        if (row != i + 1) continue;
        rep = u_letter(i, col);
      } else {  // u^j_k <| F_i = delta_{i,j} u^{i+1}_k
        if (row != i) continue;
        rep = u_letter(i + 1, col);
      }
      int pre2 = 0, post2 = 0;
      for (size_t t = 0; t < pos; ++t) pre2 -= right_k_weight2(w[t], i);
      for (size_t t = pos + 1; t < w.size(); ++t) post2 += right_k_weight2(w[t], i);
      Word nw = w;
      nw[pos] = rep;
      out += NormalForm::monomial(nw, c * RScalar(QScalar::q_power(Rational(pre2 + post2, 2))));
    }
  }
  return out;
}

inline NormalForm left_action(UqGen g, const NormalForm& a) {
  using namespace actdetail;
  NormalForm out;
  bool kgen = is_k(g);
  int i = (g == UqGen::K1 || g == UqGen::K1i || g == UqGen::E1 || g == UqGen::F1) ? 1 : 2;
  int sign = (g == UqGen::K1i || g == UqGen::K2i) ? -1 : 1;
  for (auto& [w, c] : a.terms()) {
    if (kgen) {
      int tw2 = 0;
      for (char l : w) tw2 += left_k_weight2(l, i);
      out += NormalForm::monomial(w, c * RScalar(QScalar::q_power(Rational(sign * tw2, 2))));
      continue;
    }
    bool raising = is_e(g);
    for (size_t pos = 0; pos < w.size(); ++pos) {
      char l = w[pos];
      int row = l / 3 + 1, col = l % 3 + 1;
      char rep;
      if (raising) {  // E_i |> u^j_k = delta_{i,k} u^j_{i+1}
        if (col != i) continue;
        rep = u_letter(row, i + 1);
      } else {  // F_i |> u^j_k = delta_{i+1,k} u^j_i
        if (col != i + 1) continue;
        rep = u_letter(row, i);
      }
      int pre2 = 0, post2 = 0;
      for (size_t t = 0; t < pos; ++t) pre2 -= left_k_weight2(w[t], i);
      for (size_t t = pos + 1; t < w.size(); ++t) post2 += left_k_weight2(w[t], i);
      Word nw = w;
      nw[pos] = rep;
      out += NormalForm::monomial(nw, c * RScalar(QScalar::q_power(Rational(pre2 + post2, 2))));
    }
  }
  return out;
}

inline NormalForm right_action(const NormalForm& a, const UqMono& m) {
  NormalForm r = a;
  for (auto g : m) r = right_action(r, g);
  return r;
}
inline NormalForm left_action(const UqMono& m, const NormalForm& a) {
  NormalForm r = a;
  for (auto it = m.rbegin(); it != m.rend(); ++it) r = left_action(*it, r);
  return r;
}
inline NormalForm right_action(const NormalForm& a, const UqWord& w) {
  NormalForm r;
  for (auto& [m, c] : w.terms()) r += c * right_action(a, m);
  return r;
}
inline NormalForm left_action(const UqWord& w, const NormalForm& a) {
  NormalForm r;
  for (auto& [m, c] : w.terms()) r += c * left_action(m, a);
  return r;
}

// L_h a = a <| S^-1(h); a unitary left action twisted by the antipode
inline NormalForm twisted_left(const UqWord& h, const NormalForm& a) {
  return right_action(a, h.antipode_inv());
}

// counit of an algebra element (evaluation at the identity of the group)
inline RScalar nf_counit(const NormalForm& a) {
  RScalar s;
  for (auto& [w, c] : a.terms()) {
    bool diag = true;
    for (char l : w)
      if (l % 4 != 0) { diag = false; break; }  // diagonal letters are 0, 4, 8
    if (diag) s += c;
  }
  return s;
}

// --- subalgebra membership --------------------------------------------------

enum class SubalgebraTag { FullSUq3, Sphere5, ProjPlane };

inline bool invariant_su2_right(const NormalForm& a) {
  return right_action(a, UqGen::K1) == a && right_action(a, UqGen::E1).is_zero() &&
         right_action(a, UqGen::F1).is_zero();
}

inline bool membership_test(const NormalForm& a, SubalgebraTag tag) {
  switch (tag) {
    case SubalgebraTag::FullSUq3: return true;
    case SubalgebraTag::Sphere5: return invariant_su2_right(a);
    case SubalgebraTag::ProjPlane:
      return invariant_su2_right(a) && right_action(a, UqGen::K2) == a;
  }
  return false;
}

// membership in Sigma_{0,N}: su(2)-invariant with charge eigenvalue q^N
inline bool membership_sigma0(const NormalForm& a, int N) {
  if (!invariant_su2_right(a)) return false;
  NormalForm L = right_action(right_action(right_action(a, UqGen::K1), UqGen::K2), UqGen::K2);
  return L == QScalar::q_power(Rational(N)) * a;
}

// --- relation suite ---------------------------------------------------------

inline Report verify_sphere_relations() {
  Report rep;
  rep.suite = "suq3-algebra";
  QScalar q = QScalar::q_power(1);
  auto zero_check = [&](const std::string& n, const std::string& anchor, const NormalForm& f) {
    rep.add(f.is_zero() ? Check::ok(n, anchor)
                        : Check::fail(n, anchor, "residual " + f.render()));
  };
  auto z = [](int i) { return NormalForm::z(i); };
  auto zs = [](int i) { return NormalForm::z_star(i); };

  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      zero_check("z" + std::to_string(i) + " z" + std::to_string(j) + " exchange",
                 "sphere-relations", z(i) * z(j) - q * (z(j) * z(i)));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j)
        zero_check("z" + std::to_string(i) + "* z" + std::to_string(j) + " exchange",
                   "sphere-relations", zs(i) * z(j) - q * (z(j) * zs(i)));
  zero_check("[z1*,z1]", "sphere-relations", zs(1) * z(1) - z(1) * zs(1));
  QScalar om = QScalar::one() - q * q;
  zero_check("[z2*,z2] = (1-q^2) z1 z1*", "sphere-relations",
             zs(2) * z(2) - z(2) * zs(2) - om * (z(1) * zs(1)));
  zero_check("[z3*,z3] = (1-q^2)(z1 z1* + z2 z2*)", "sphere-relations",
             zs(3) * z(3) - z(3) * zs(3) - om * (z(1) * zs(1) + z(2) * zs(2)));
  zero_check("sum z_i z_i* = 1", "sphere-relations",
             z(1) * zs(1) + z(2) * zs(2) + z(3) * zs(3) - NormalForm::one());
  zero_check("q^4 z1* z1 + q^2 z2* z2 + z3* z3 = 1", "sphere-relations",
             q.pow(4) * (zs(1) * z(1)) + q.pow(2) * (zs(2) * z(2)) + zs(3) * z(3) -
                 NormalForm::one());

  // projective plane generators and relations
  auto P = [](int i, int j) { return NormalForm::p(i, j); };
  auto sgn = [](int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          if (i != l && j != k) {
            NormalForm lhs = P(i, j) * P(k, l) -
                             QScalar::q_power(Rational(sgn(i - k) + sgn(l - j))) * (P(k, l) * P(i, j));
            zero_check("p-exchange " + std::to_string(i) + std::to_string(j) + "," +
                           std::to_string(k) + std::to_string(l),
                       "projplane-relations", lhs);
          }
        }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        if (i == k) continue;
        NormalForm rhs = QScalar::q_power(Rational(sgn(i - j) + sgn(k - j) + 1)) * (P(j, k) * P(i, j));
        NormalForm corr;
        for (int l = 1; l < j; ++l) corr += P(i, l) * P(l, k);
        zero_check("p-fusion " + std::to_string(i) + std::to_string(j) + "," + std::to_string(j) +
                       std::to_string(k),
                   "projplane-relations", P(i, j) * P(j, k) - rhs + om * corr);
      }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      QScalar q2s = QScalar::q_power(Rational(2 * sgn(i - j)));
      NormalForm sum1, sum2;
      for (int l = 1; l < i; ++l) sum1 += P(j, l) * P(l, j);
      for (int l = 1; l < j; ++l) sum2 += P(i, l) * P(l, i);
      zero_check("p-diagonal " + std::to_string(i) + std::to_string(j), "projplane-relations",
                 P(i, j) * P(j, i) - q2s * (P(j, i) * P(i, j)) - om * (q2s * sum1 - sum2));
    }

  // the tautological projection: P^2 = P = P*, q-trace 1
  bool proj_ok = true, star_ok = true;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      NormalForm entry;
      for (int k = 1; k <= 3; ++k) entry += P(i, k) * P(k, j);
      if (!(entry == P(i, j))) proj_ok = false;
      if (!(P(i, j).star() == P(j, i))) star_ok = false;
    }
  rep.add(proj_ok ? Check::ok("P^2 = P entrywise", "tautological-projection")
                  : Check::fail("P^2 = P entrywise", "tautological-projection"));
  rep.add(star_ok ? Check::ok("P = P* entrywise", "tautological-projection")
                  : Check::fail("P = P* entrywise", "tautological-projection"));
  zero_check("Tr_q(P) = 1", "q-trace",
             q.pow(4) * P(1, 1) + q.pow(2) * P(2, 2) + P(3, 3) - NormalForm::one());

  // membership of the generators
  bool memb = true;
  for (int i = 1; i <= 3; ++i) {
    if (!membership_test(z(i), SubalgebraTag::Sphere5)) memb = false;
    for (int j = 1; j <= 3; ++j)
      if (!membership_test(P(i, j), SubalgebraTag::ProjPlane)) memb = false;
  }
  rep.add(memb ? Check::ok("generators pass membership predicates", "subalgebra-membership")
               : Check::fail("generators pass membership predicates", "subalgebra-membership"));
  return rep;
}

// unitarity of the defining corepresentation
inline Report verify_unitarity_identities() {
  Report rep;
  rep.suite = "unitarity";
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      NormalForm s1, s2;
      for (int j = 1; j <= 3; ++j) {
        s1 += NormalForm::generator(a, j) * NormalForm::generator(b, j).star();
        s2 += QScalar::q_power(Rational(2 * (a - j))) *
              (NormalForm::generator(a, j).star() * NormalForm::generator(b, j));
      }
      NormalForm want = a == b ? NormalForm::one() : NormalForm::zero();
      rep.add((s1 == want) ? Check::ok("row unitarity " + std::to_string(a) + std::to_string(b),
                                       "corepresentation-unitarity")
                           : Check::fail("row unitarity " + std::to_string(a) + std::to_string(b),
                                         "corepresentation-unitarity"));
      rep.add((s2 == want) ? Check::ok("weighted column unitarity " + std::to_string(a) +
                                           std::to_string(b),
                                       "corepresentation-unitarity")
                           : Check::fail("weighted column unitarity " + std::to_string(a) +
                                             std::to_string(b),
                                         "corepresentation-unitarity"));
    }
  return rep;
}

// --- Peter-Weyl matrix coefficients ----------------------------------------

// t^{n1,n2}_{i,j} = X_j |> {(u^1_1)*}^{n1} (u^3_3)^{n2} <| (X_i)*
inline NormalForm peter_weyl_element(IrrepLabel label, const WeightIndex& i, const WeightIndex& j) {
  NormalForm base = NormalForm::star_of_generator(1, 1).pow(label.n1) *
                    NormalForm::generator(3, 3).pow(label.n2);
  UqWord xj = Irrep::lowering_word(label, j);
  UqWord xi_star = Irrep::lowering_word(label, i).star();
  return right_action(left_action(xj, base), xi_star);
}

}  // namespace qcp2
