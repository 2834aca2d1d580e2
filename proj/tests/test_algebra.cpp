#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qcp2/actions.hpp"
#include "qcp2/parser.hpp"

using namespace qcp2;

TEST_CASE("straightening basics") {
  // u12 u11 = q^-1 u11 u12
  NormalForm lhs = NormalForm::generator(1, 2) * NormalForm::generator(1, 1);
  NormalForm rhs = QScalar::q_power(-1) * (NormalForm::generator(1, 1) * NormalForm::generator(1, 2));
  CHECK(lhs == rhs);
  // u22 u11 = u11 u22 - (q - q^-1) u12 u21
  NormalForm l2 = NormalForm::generator(2, 2) * NormalForm::generator(1, 1);
  NormalForm r2 = NormalForm::generator(1, 1) * NormalForm::generator(2, 2) -
                  (QScalar::q_power(1) - QScalar::q_power(-1)) *
                      (NormalForm::generator(1, 2) * NormalForm::generator(2, 1));
  CHECK(l2 == r2);
  // commuting pair: u13 u21 = u21 u13
  CHECK(NormalForm::generator(1, 3) * NormalForm::generator(2, 1) ==
        NormalForm::generator(2, 1) * NormalForm::generator(1, 3));
}

TEST_CASE("quantum determinant reduces to 1") {
  auto u = [](int i, int j) { return NormalForm::generator(i, j); };
  QScalar q = QScalar::q_power(1), q2 = q * q, q3 = q2 * q;
  NormalForm det = u(1, 1) * u(2, 2) * u(3, 3) - q * (u(1, 1) * u(2, 3) * u(3, 2)) -
                   q * (u(1, 2) * u(2, 1) * u(3, 3)) + q2 * (u(1, 2) * u(2, 3) * u(3, 1)) +
                   q2 * (u(1, 3) * u(2, 1) * u(3, 2)) - q3 * (u(1, 3) * u(2, 2) * u(3, 1));
  CHECK(det == NormalForm::one());
  // a padded variant: u12 * det = u12
  CHECK(u(1, 2) * det == u(1, 2));
  CHECK(det * u(2, 3) == u(2, 3));
}

TEST_CASE("star structure") {
  // (u^1_1)* = u22 u33 - q u23 u32
  NormalForm expect = NormalForm::generator(2, 2) * NormalForm::generator(3, 3) -
                      QScalar::q_power(1) * (NormalForm::generator(2, 3) * NormalForm::generator(3, 2));
  CHECK(NormalForm::generator(1, 1).star() == expect);
  CHECK(NormalForm::one().star() == NormalForm::one());
  // star is an anti-homomorphism after normalization
  NormalForm z1z2 = NormalForm::z(1) * NormalForm::z(2);
  CHECK(z1z2.star() == NormalForm::z(2).star() * NormalForm::z(1).star());
}

TEST_CASE("star is involutive and antimultiplicative on random elements", "[property]") {
  std::mt19937 rng(7);
  auto rand_mono = [&](int len) {
    NormalForm f = NormalForm::one();
    for (int i = 0; i < len; ++i)
      f = f * NormalForm::generator(1 + rng() % 3, 1 + rng() % 3);
    return f;
  };
  int fail_inv = 0, fail_anti = 0;
  for (int trial = 0; trial < 200; ++trial) {
    NormalForm a = rand_mono(1 + rng() % 2);
    NormalForm b = rand_mono(1 + rng() % 2);
    NormalForm ab = a * b;
    if (!(ab.star().star() == ab)) ++fail_inv;
    if (!(ab.star() == b.star() * a.star())) ++fail_anti;
  }
  CHECK(fail_inv == 0);
  CHECK(fail_anti == 0);
}

TEST_CASE("confluence under randomized rewriting order", "[property]") {
  // normalize products of randomly generated words by multiplying the letters
  // in different associativity orders; all must agree
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    int len = 2 + rng() % 5;  // length <= 6
    std::vector<std::pair<int, int>> letters;
    for (int i = 0; i < len; ++i) letters.push_back({1 + rng() % 3, 1 + rng() % 3});
    // left-to-right product
    NormalForm l2r = NormalForm::one();
    for (auto [i, j] : letters) l2r = l2r * NormalForm::generator(i, j);
    // right-to-left product
    NormalForm r2l = NormalForm::one();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      r2l = NormalForm::generator(it->first, it->second) * r2l;
    // random split recursion
    std::function<NormalForm(int, int)> split = [&](int lo, int hi) -> NormalForm {
      if (lo == hi) return NormalForm::generator(letters[lo].first, letters[lo].second);
      int mid = lo + (int)(rng() % (unsigned)(hi - lo));
      return split(lo, mid) * split(mid + 1, hi);
    };
    NormalForm rnd = split(0, len - 1);
    REQUIRE(l2r == r2l);
    REQUIRE(l2r == rnd);
  }
}

TEST_CASE("canonical actions on generators") {
  // u^3_k <| E_2 = u^2_k
  for (int k = 1; k <= 3; ++k)
    CHECK(right_action(NormalForm::generator(3, k), UqGen::E2) == NormalForm::generator(2, k));
  // 1 <| E_1 = 0
  CHECK(right_action(NormalForm::one(), UqGen::E1).is_zero());
  // z_i <| F_2 = 0
  for (int i = 1; i <= 3; ++i) CHECK(right_action(NormalForm::z(i), UqGen::F2).is_zero());
  // left and right actions commute
  NormalForm a = NormalForm::p(1, 2) * NormalForm::z(3);
  for (auto h : {UqGen::E1, UqGen::F2, UqGen::K1}) {
    for (auto k : {UqGen::E2, UqGen::F1, UqGen::K2}) {
      CHECK(left_action(h, right_action(a, k)) == right_action(left_action(h, a), k));
    }
  }
}

TEST_CASE("module-algebra property of the actions", "[property]") {
  std::mt19937 rng(99);
  auto rand_small = [&]() {
    switch (rng() % 4) {
      case 0: return NormalForm::z(1 + rng() % 3);
      case 1: return NormalForm::z_star(1 + rng() % 3);
      case 2: return NormalForm::generator(1 + rng() % 3, 1 + rng() % 3);
      default: return NormalForm::p(1 + rng() % 3, 1 + rng() % 3);
    }
  };
  QScalar qh = QScalar::q_power(Rational(1, 2)), qhi = QScalar::q_power(Rational(-1, 2));
  for (int trial = 0; trial < 24; ++trial) {
    NormalForm a = rand_small(), b = rand_small();
    NormalForm ab = a * b;
    for (int i = 1; i <= 2; ++i) {
      UqGen E = i == 1 ? UqGen::E1 : UqGen::E2;
      UqGen K = i == 1 ? UqGen::K1 : UqGen::K2;
      UqGen Ki = i == 1 ? UqGen::K1i : UqGen::K2i;
      // (ab) <| E = (a <| E)(b <| K) + (a <| K^-1)(b <| E)
      NormalForm lhs = right_action(ab, E);
      NormalForm rhs = right_action(a, E) * right_action(b, K) +
                       right_action(a, Ki) * right_action(b, E);
      REQUIRE(lhs == rhs);
      // E |> (ab) = (E |> a)(K |> b) + (K^-1 |> a)(E |> b)
      NormalForm lhs2 = left_action(E, ab);
      NormalForm rhs2 = left_action(E, a) * left_action(K, b) +
                        left_action(Ki, a) * left_action(E, b);
      REQUIRE(lhs2 == rhs2);
    }
  }
  (void)qh; (void)qhi;
}

TEST_CASE("sphere and projective plane relation suite") {
  Report rep = verify_sphere_relations();
  INFO(rep.text());
  CHECK(rep.all_pass());
}

TEST_CASE("unitarity identities") {
  Report rep = verify_unitarity_identities();
  INFO(rep.text());
  CHECK(rep.all_pass());
}

TEST_CASE("membership tests") {
  CHECK(membership_test(NormalForm::p(1, 2), SubalgebraTag::ProjPlane));
  CHECK_FALSE(membership_test(NormalForm::z(1), SubalgebraTag::ProjPlane));
  CHECK(membership_sigma0(NormalForm::z(1), 1));
  CHECK(membership_test(NormalForm::one(), SubalgebraTag::ProjPlane));
  CHECK(membership_sigma0(NormalForm::one(), 0));
  CHECK(membership_test(NormalForm::z(2), SubalgebraTag::Sphere5));
  CHECK_FALSE(membership_test(NormalForm::generator(1, 1), SubalgebraTag::Sphere5));
}

TEST_CASE("parser") {
  CHECK(parse_expr("z[1]*zs[1] + z[2]*zs[2] + z[3]*zs[3]") == NormalForm::one());
  CHECK(parse_expr("u[1,1]") == NormalForm::generator(1, 1));
  CHECK(parse_expr("z[2]*z[1]") ==
        QScalar::q_power(-1) * (NormalForm::z(1) * NormalForm::z(2)));
  CHECK(parse_expr("q^(1/2)*q^(1/2)") == NormalForm(QScalar::q_power(1)));
  CHECK(parse_expr("p[1,2]") == NormalForm::p(1, 2));
  CHECK(parse_expr("2/3 * u[1,2]^2") ==
        QScalar(Rational(2, 3)) * (NormalForm::generator(1, 2) * NormalForm::generator(1, 2)));
  CHECK_THROWS_AS(parse_expr("z[4]"), QError);
  CHECK_THROWS_AS(parse_expr("w[1]"), QError);
}

TEST_CASE("twisted left action and Peter-Weyl elements") {
  set_precision_bits(200);
  // L_h on the identity is counit
  CHECK(twisted_left(u2_charge(), NormalForm::one()) == NormalForm::one());
  // t^{0,1}_{up,up} = u33, t^{1,0}_{up,up} = (u11)*
  WeightIndex up01{0, 0, 0};
  CHECK(peter_weyl_element({0, 1}, up01, up01) == NormalForm::generator(3, 3));
  WeightIndex up10{1, 0, 1};
  CHECK(peter_weyl_element({1, 0}, up10, up10) == NormalForm::star_of_generator(1, 1));
  // counit of t_{ij} is delta_{ij}
  Irrep rep({0, 1}, BigFloat(1) / 2);
  for (auto& wi : rep.basis)
    for (auto& wj : rep.basis) {
      RScalar eps = nf_counit(peter_weyl_element({0, 1}, wi, wj));
      CHECK(eps == (wi == wj ? RScalar::one() : RScalar::zero()));
    }
}

TEST_CASE("Peter-Weyl elements transform by the representation matrices") {
  set_precision_bits(200);
  BigFloat q = BigFloat(1) / 2;
  IrrepLabel lab{0, 1};
  Irrep rep(lab, q);
  // h |> t_{ij} = sum_k t_{ik} rho_{kj}(h);  t_{ij} <| h = sum_k rho_{ik}(h) t_{kj}
  std::vector<std::vector<NormalForm>> t(rep.dim(), std::vector<NormalForm>(rep.dim()));
  for (size_t i = 0; i < rep.dim(); ++i)
    for (size_t j = 0; j < rep.dim(); ++j)
      t[i][j] = peter_weyl_element(lab, rep.basis[i], rep.basis[j]);
  BigFloat tol("1e-45");
  for (auto g : {UqGen::K1, UqGen::K2, UqGen::E1, UqGen::E2, UqGen::F1, UqGen::F2}) {
    const Mat<BigFloat>& rho = rep.gen(g);
    for (size_t i = 0; i < rep.dim(); ++i)
      for (size_t j = 0; j < rep.dim(); ++j) {
        auto lhs = left_action(g, t[i][j]).numeric(q);
        std::map<Word, BigFloat> rhs;
        for (size_t k = 0; k < rep.dim(); ++k) {
          if (rho(k, j) == 0) continue;
          for (auto& [w, v] : t[i][k].numeric(q)) rhs[w] += v * rho(k, j);
        }
        for (auto& [w, v] : rhs) {
          lhs[w] -= v;
        }
        for (auto& [w, v] : lhs) REQUIRE(abs(v) < tol);

        auto lhs2 = right_action(t[i][j], g).numeric(q);
        std::map<Word, BigFloat> rhs2;
        for (size_t k = 0; k < rep.dim(); ++k) {
          if (rho(i, k) == 0) continue;
          for (auto& [w, v] : t[k][j].numeric(q)) rhs2[w] += v * rho(i, k);
        }
        for (auto& [w, v] : rhs2) lhs2[w] -= v;
        for (auto& [w, v] : lhs2) REQUIRE(abs(v) < tol);
      }
  }
}
