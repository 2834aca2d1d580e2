#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qcp2/bigfloat.hpp"
#include "qcp2/qcoeff.hpp"
#include "qcp2/radical.hpp"

using namespace qcp2;

TEST_CASE("q-number basics") {
  CHECK(q_number(0).is_zero());
  CHECK(q_number(1).is_one());
  // [2] = q + q^-1
  QScalar q = QScalar::q_power(1), qi = QScalar::q_power(-1);
  CHECK(q_number(2) == q + qi);
  // [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)
  for (long n = 1; n <= 8; ++n) {
    QScalar s = QScalar::zero();
    for (long k = 0; k < n; ++k) s += QScalar::q_power(Rational(n - 1 - 2 * k));
    CHECK(q_number(n) == s);
  }
  // [-x] = -[x]; at fractional arguments [x] is an exact Laurent fraction
  for (int n = -9; n <= 9; ++n) CHECK(q_number(Rational(-n)) == -q_number(Rational(n)));
  for (int tw = -9; tw <= 9; ++tw) {
    Rational x(tw, 2);
    CHECK(q_number_frac(-x) == -q_number_frac(x));
    Rational y(tw, 3);
    CHECK(q_number_frac(-y) == -q_number_frac(y));
  }
  // classical limit
  for (long n = 0; n <= 12; ++n) CHECK(q_number(n).at_one() == n);
}

TEST_CASE("q-number numeric evaluation at q=0.5") {
  set_precision_bits(200);
  BigFloat q = BigFloat(1) / 2;
  for (long n = 1; n <= 10; ++n) {
    BigFloat direct = (pow(q, (int)n) - pow(1 / q, (int)n)) / (q - 1 / q);
    BigFloat viapoly = q_number(n).eval_q(q);
    CHECK(abs(direct - viapoly) / abs(direct) < BigFloat("1e-30"));
  }
}

TEST_CASE("q-binomial and q-trinomial") {
  CHECK(q_binomial(2, 1) == q_number(2));
  // symmetry of the trinomial in its three arguments
  for (long j = 0; j <= 3; ++j)
    for (long k = 0; k <= 3; ++k)
      for (long l = 0; l <= 3; ++l) {
        QScalar a = q_trinomial(j, k, l);
        CHECK(a == q_trinomial(k, j, l));
        CHECK(a == q_trinomial(l, k, j));
      }
  CHECK(q_trinomial(0, 0, 5).is_one());
  // [1,1,0]! = q^-1 [2] = 1 + q^-2
  CHECK(q_trinomial(1, 1, 0) == QScalar::one() + QScalar::q_power(-2));
}

TEST_CASE("trinomial recursion and companion identity") {
  auto rep = verify_trinomial_recursion(4);
  CHECK(rep.all_pass());
  // N=1 base cases
  CHECK(q_trinomial(1, 0, 0).is_one());
  CHECK(q_trinomial(0, 1, 0).is_one());
  CHECK(q_trinomial(0, 0, 1).is_one());
  // the identity at (1,1,0): [2] = q^-1 [1] + q [1]
  CHECK(q_number(2) == QScalar::q_power(-1) * q_number(1) + QScalar::q_power(1) * q_number(1));
}

TEST_CASE("exact division aborts on remainder") {
  QScalar a = q_number(3), b = q_number(2);
  CHECK_THROWS_AS(a.div_exact(b), QError);
  CHECK((a * b).div_exact(b) == a);
}

TEST_CASE("radical scalars cancel in pairs") {
  auto r2 = RScalar::sqrt_of(q_number(2));
  CHECK(r2 * r2 == RScalar(q_number(2)));
  auto r3 = RScalar::sqrt_of(q_number(3));
  // (sqrt a sqrt b)^2 = a b
  auto ab = r2 * r3;
  CHECK(ab * ab == RScalar(q_number(2) * q_number(3)));
  // sqrt(a) * sqrt(b) * sqrt(a) * sqrt(b) has no radical left
  CHECK((r2 * r3 * r2 * r3).is_rational_free());
  // sqrt of a perfect square collapses
  CHECK(RScalar::sqrt_of(q_number(2) * q_number(2)) == RScalar(q_number(2)));
}

TEST_CASE("radical scalars with random tags", "[property]") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    long a = 1 + rng() % 7, b = 1 + rng() % 7, c = 1 + rng() % 5;
    QScalar ra = q_factorial(a), rb = q_trinomial(b, c, 1);
    auto sa = RScalar::sqrt_of(ra), sb = RScalar::sqrt_of(rb);
    auto prod = sa * sb * sa * sb;
    CHECK(prod.is_rational_free());
    CHECK(prod == RScalar(ra * rb));
  }
}

TEST_CASE("radical denominators") {
  RScalar inv2 = RScalar(q_number(2)).inverse();
  CHECK(inv2 * RScalar(q_number(2)) == RScalar::one());
  // [2]^(-1/2) = sqrt([2]) / [2]
  RScalar is2 = RScalar::sqrt_of(q_number(2)).inverse();
  CHECK(is2 * RScalar::sqrt_of(q_number(2)) == RScalar::one());
  set_precision_bits(200);
  BigFloat q = BigFloat(1) / 2;
  BigFloat v = is2.eval_q(q);
  BigFloat expect = 1 / sqrt(q + 1 / q);
  CHECK(abs(v - expect) < BigFloat("1e-50"));
}

TEST_CASE("rendering") {
  CHECK(q_number(2).render() == "q^-1 + q");
  CHECK(QScalar::q_power(Rational(1, 2)).render() == "q^(1/2)");
  CHECK(q_trinomial(1, 1, 0).render() == "q^-2 + 1");
  CHECK(QScalar(Rational(-3, 2)).render() == "-3/2");
}
