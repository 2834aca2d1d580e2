#pragma once

// q-combinatorics verification: the three-term recursion of the trinomial
// coefficients (vertices of a q-deformed Pascal tetrahedron) and its companion
// q-number identity, checked exactly.

#include "qcp2/qscalar.hpp"
#include "qcp2/report.hpp"

namespace qcp2 {

// c_{j,k,l} with c = 0 for a negative index
inline QScalar trinomial_or_zero(long j, long k, long l, int root = kDefaultRootOrder) {
  if (j < 0 || k < 0 || l < 0) return QScalar::zero(root);
  return q_trinomial(j, k, l, root);
}

// For all j+k+l <= nmax, checks
//   c_{j,k,l} = q^{-2(k+l)} c_{j-1,k,l} + q^{-2l} c_{j,k-1,l} + c_{j,k,l-1}
// and  [j+k+l] = q^{-k-l}[j] + q^{j-l}[k] + q^{j+k}[l].
inline Report verify_trinomial_recursion(long nmax, int root = kDefaultRootOrder) {
  Report rep;
  rep.suite = "qcoeff";
  for (long n = 1; n <= nmax; ++n) {
    bool rec_ok = true, id_ok = true;
    std::string bad;
    for (long j = 0; j <= n; ++j)
      for (long k = 0; j + k <= n; ++k) {
        long l = n - j - k;
        QScalar lhs = q_trinomial(j, k, l, root);
        QScalar rhs = QScalar::q_power(Rational(-2 * (k + l)), root) * trinomial_or_zero(j - 1, k, l, root) +
                      QScalar::q_power(Rational(-2 * l), root) * trinomial_or_zero(j, k - 1, l, root) +
                      trinomial_or_zero(j, k, l - 1, root);
        if (!(lhs == rhs)) {
          rec_ok = false;
          bad = "(" + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
        }
        QScalar id_lhs = q_number(j + k + l, root);
        QScalar id_rhs = QScalar::q_power(Rational(-k - l), root) * q_number(j, root) +
                         QScalar::q_power(Rational(j - l), root) * q_number(k, root) +
                         QScalar::q_power(Rational(j + k), root) * q_number(l, root);
        if (!(id_lhs == id_rhs)) {
          id_ok = false;
          bad = "(" + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
        }
      }
    rep.add(rec_ok ? Check::ok("trinomial-recursion N=" + std::to_string(n), "q-trinomial-recursion")
                   : Check::fail("trinomial-recursion N=" + std::to_string(n), "q-trinomial-recursion",
                                 "fails at " + bad));
    rep.add(id_ok ? Check::ok("three-term q-number identity N=" + std::to_string(n),
                              "q-number-three-term")
                  : Check::fail("three-term q-number identity N=" + std::to_string(n),
                                "q-number-three-term", "fails at " + bad));
  }
  return rep;
}

}  // namespace qcp2
