#include <catch2/catch_amalgamated.hpp>

#include "qcp2/exterior.hpp"

using namespace qcp2;

namespace {
const WedgeCoeffs& WP() {
  static const WedgeCoeffs w = WedgeCoeffs::paper_point();
  return w;
}
}

TEST_CASE("diamond dimensions") {
  int dims[3][3] = {{1, 2, 1}, {2, 4, 2}, {1, 2, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(vdim({i, j}) == dims[i][j]);
  CHECK(vdim({0, 3}) == 0);
}

TEST_CASE("mu map values") {
  auto e2 = [](int k) { std::vector<RScalar> v(2); v[k] = RScalar::one(); return v; };
  // mu0(e1, e2) = q^(1/2) [2]^(-1/2)
  RScalar want = RScalar(QScalar::q_power(Rational(1, 2))) * RScalar::sqrt_of(q_number(2)).inverse();
  CHECK(mu0(e2(0), e2(1)) == want);
  CHECK(mu0(e2(0), e2(0)).is_zero());
  // first term of mu4: q on (e1, e3-slot)
  std::vector<RScalar> a(3), b(3);
  a[0] = RScalar::one();
  b[2] = RScalar::one();
  CHECK(mu4(a, b) == RScalar(QScalar::q_power(1)));
}

TEST_CASE("mu identities") {
  auto rep = check_mu_identities();
  INFO(rep.text());
  CHECK(rep.all_pass());
}

TEST_CASE("solved coefficient family") {
  auto& W = WP();
  // c1 = q^(-1/4), c2 = q^(3/4) at s = 1 with plus signs
  CHECK(W.c1 == RScalar(QScalar::q_power(Rational(-1, 4))));
  CHECK(W.c2 == RScalar(QScalar::q_power(Rational(3, 4))));
  CHECK(W.c3 == -RScalar::sqrt_of(q_number(2)));
  CHECK(W.c4 == W.c0);
  // q -> 1: (c1,c2,c3,c4) -> (1,1,-sqrt2,sqrt2)
  CHECK(W.c1.at_one() == RScalar::one());
  CHECK(W.c2.at_one() == RScalar::one());
  CHECK(W.c3.at_one() == -RScalar::sqrt_of(QScalar(Rational(2))));
  CHECK(W.c4.at_one() == RScalar::sqrt_of(QScalar(Rational(2))));
  // unsupported scale is a configuration error
  CHECK_THROWS_AS(solve_coefficients(RScalar(Rational(1))), QError);
}

TEST_CASE("wedge basics") {
  auto& W = WP();
  // e1 ^ e2 in (0,1)x(0,1) = c0 [2]^(-1/2) q^(1/2)
  VForm a = VForm::basis({0, 1}, 0), b = VForm::basis({0, 1}, 1);
  VForm ab = wedge(W, a, b);
  RScalar want = W.c0 * RScalar(QScalar::q_power(Rational(1, 2))) *
                 RScalar::sqrt_of(q_number(2)).inverse();
  CHECK(ab.c[0] == want);
  // scalar unit acts as identity
  VForm one = VForm::basis({0, 0}, 0);
  for (auto& B : diamond())
    for (int k = 0; k < vdim(B); ++k) {
      CHECK(wedge(W, one, VForm::basis(B, k)) == VForm::basis(B, k));
      CHECK(wedge(W, VForm::basis(B, k), one) == VForm::basis(B, k));
    }
  // out-of-diamond wedge is the zero form
  CHECK(wedge(W, VForm::basis({0, 2}, 0), VForm::basis({0, 1}, 0)).c.empty());
  // (1,0) basis e1 wedge (0,0,0,1) in (1,1): -q^{3s/2} c4/([2] c2) e1 in (2,1)
  VForm v10 = VForm::basis({1, 0}, 0), w4 = VForm::basis({1, 1}, 3);
  VForm r = wedge(W, v10, w4);
  RScalar coef = -(RScalar(QScalar::q_power(Rational(3, 2))) * W.c4 *
                   (RScalar(q_number(2)) * W.c2).inverse());
  CHECK(r.deg == Bidegree{2, 1});
  CHECK(r.c[0] == coef);
  CHECK(r.c[1].is_zero());
  // the analogous product in (0,1)x(1,1) -> (1,2): -c0 c2^-1 [2]^-1 e1
  VForm v01 = VForm::basis({0, 1}, 0);
  VForm r2 = wedge(W, v01, w4);
  RScalar coef2 = -(W.c0 * (RScalar(q_number(2)) * W.c2).inverse());
  CHECK(r2.c[0] == coef2);
  CHECK(r2.c[1].is_zero());
}

TEST_CASE("exhaustive associativity") {
  auto rep = check_associativity(WP());
  INFO(rep.text());
  CHECK(rep.all_pass());
}

TEST_CASE("a perturbed coefficient family breaks associativity") {
  auto& W = WP();
  WedgeCoeffs bad = W;
  bad.d0 = RScalar(Rational(2)) * bad.d0;
  auto rep = check_associativity(bad);
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("alternate sign and scale points remain associative") {
  for (int s : {1, -1})
    for (int sign1 : {1, -1}) {
      auto W = WedgeCoeffs::solved(RScalar::sqrt_of(q_number(2)), s, sign1, 1);
      auto rep = check_associativity(W);
      INFO("s=" << s << " sign1=" << sign1 << "\n" << rep.text());
      CHECK(rep.all_pass());
    }
}

TEST_CASE("graded commutativity at q = 1") {
  auto rep = check_q1_graded_commutativity(WP());
  INFO(rep.text());
  CHECK(rep.all_pass());
}

TEST_CASE("graded involution") {
  // J on spin-1/2: (v1,v2) -> (-q^-1/2 v2, q^1/2 v1)
  auto j = j_map({RScalar::one(), RScalar::zero()});
  CHECK(j[0].is_zero());
  CHECK(j[1] == RScalar(QScalar::q_power(Rational(1, 2))));
  auto rep = check_star_involution(WP());
  INFO(rep.text());
  CHECK(rep.all_pass());
}

TEST_CASE("hodge star") {
  auto rep = check_hodge(WP());
  INFO(rep.text());
  CHECK(rep.all_pass());
  // hodge^2 = -id on (0,1)
  auto& W = WP();
  for (int k = 0; k < 2; ++k) {
    VForm v = VForm::basis({0, 1}, k);
    CHECK(hodge(W, hodge(W, v)) == RScalar(Rational(-1)) * v);
  }
  // anti-selfdual direction: *(0,w4) = -(0,w4)
  VForm w4 = VForm::basis({1, 1}, 3);
  CHECK(hodge(W, w4) == RScalar(Rational(-1)) * w4);
  // selfdual direction
  VForm w1 = VForm::basis({1, 1}, 0);
  CHECK(hodge(W, w1) == w1);
}

TEST_CASE("J intertwiner and mu compatibility") {
  auto rep = check_j_intertwiner();
  INFO(rep.text());
  CHECK(rep.all_pass());
}

TEST_CASE("degree one generation") {
  auto rep = check_degree_one_generation(WP());
  INFO(rep.text());
  CHECK(rep.all_pass());
  // the (0,1)x(1,0) -> (1,1) map is invertible: 4 independent products
  auto& W = WP();
  std::vector<std::vector<RScalar>> m(4, std::vector<RScalar>(4));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      VForm w = wedge(W, VForm::basis({0, 1}, a), VForm::basis({1, 0}, b));
      for (int t = 0; t < 4; ++t) m[t][a * 2 + b] = w.c[t];
    }
  CHECK(rscalar_rank(m) == 4);
}
