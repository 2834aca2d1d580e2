#include <catch2/catch_amalgamated.hpp>

#include "qcp2/irrep.hpp"

using namespace qcp2;

namespace {
BigFloat half() { return BigFloat(1) / 2; }
}

TEST_CASE("dimension formula matches enumeration") {
  set_precision_bits(200);
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 + n1 <= 4; ++n2) {
      Irrep rep({n1, n2}, half());
      CHECK((long)rep.dim() == IrrepLabel{n1, n2}.dim());
    }
  CHECK(IrrepLabel{0, 0}.dim() == 1);
  CHECK(IrrepLabel{0, 1}.dim() == 3);
  CHECK(IrrepLabel{1, 1}.dim() == 8);
}

TEST_CASE("trivial representation") {
  set_precision_bits(200);
  Irrep rep({0, 0}, half());
  CHECK(rep.dim() == 1);
  CHECK(rep.E1(0, 0) == 0);
  CHECK(rep.E2(0, 0) == 0);
  CHECK(rep.K1(0, 0) == 1);
  CHECK(rep.K2(0, 0) == 1);
  CHECK(rep.verify_relations(BigFloat("1e-60")).all_pass());
}

TEST_CASE("defining relations hold numerically") {
  set_precision_bits(200);
  BigFloat tol("1e-40");
  for (auto qv : {BigFloat(1) / 2, BigFloat(9) / 10}) {
    Irrep r01({0, 1}, qv);
    CHECK(r01.verify_relations(tol).all_pass());
    Irrep r21({2, 1}, qv);
    CHECK(r21.verify_relations(tol).all_pass());
  }
}

TEST_CASE("K1 eigenvalues on the adjoint") {
  set_precision_bits(200);
  Irrep rep({1, 1}, half());
  std::multiset<int> m2s;
  for (auto& w : rep.basis) m2s.insert(w.m2);
  CHECK(m2s == std::multiset<int>{-2, -1, -1, 0, 0, 1, 1, 2});
}

TEST_CASE("Casimir is scalar with the predicted value") {
  set_precision_bits(200);
  BigFloat tol("1e-35");
  // (0,0): [0]^2 + [1]^2 + [1]^2 = 2
  CHECK(Irrep::casimir_spectrum_exact({0, 0}) == RScalar(Rational(2)));
  for (auto qv : {BigFloat(1) / 2, BigFloat(7) / 10}) {
    for (auto lab : {IrrepLabel{1, 0}, IrrepLabel{1, 1}, IrrepLabel{0, 2}}) {
      Irrep rep(lab, qv);
      CHECK(rep.verify_casimir(tol).all_pass());
    }
  }
  // classical limit at q -> 1, exactly: the spectrum value tends to
  // 2*[(n1^2+n2^2+n1 n2)/3 + n1+n2] + 2, an affine shift of the classical
  // su(3) Casimir eigenvalue
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n1 + n2 <= 4; ++n2) {
      RScalar s = Irrep::casimir_spectrum_exact({n1, n2}).at_one();
      Rational classical = Rational(n1 * n1 + n2 * n2 + n1 * n2, 3) + n1 + n2;
      CHECK(s == RScalar(2 * classical + 2));
    }
}

TEST_CASE("branching to u(2)") {
  set_precision_bits(200);
  BigFloat tol("1e-30");
  // (0,0) -> {(0,0)}
  CHECK(Irrep::branch_rule({0, 0}) == std::map<std::pair<int, int>, int>{{{0, 0}, 1}});
  // (0,1) -> sigma_{1/2,-1/2} + sigma_{0,1}
  CHECK(Irrep::branch_rule({0, 1}) ==
        std::map<std::pair<int, int>, int>{{{0, 2}, 1}, {{1, -1}, 1}});
  for (int n1 = 0; n1 <= 2; ++n1)
    for (int n2 = 0; n1 + n2 <= 3; ++n2) {
      Irrep rep({n1, n2}, half());
      CHECK(rep.verify_branching(tol).all_pass());
      // sum over the multiset of (2l+1) equals the dimension
      long s = 0;
      for (auto& [k, c] : Irrep::branch_rule({n1, n2})) s += (long)c * (k.first + 1);
      CHECK(s == (long)rep.dim());
    }
}

TEST_CASE("lowering words act as the orthonormal basis") {
  set_precision_bits(200);
  BigFloat tol("1e-30");
  for (auto lab : {IrrepLabel{0, 1}, IrrepLabel{1, 0}, IrrepLabel{1, 1}}) {
    Irrep rep(lab, half());
    CHECK(rep.verify_lowering_words(tol).all_pass());
  }
  // highest weight target: the word is the identity with coefficient 1
  UqWord w = Irrep::lowering_word({2, 1}, {2, 0, 2});
  REQUIRE(w.terms().size() == 1);
  CHECK(w.terms().begin()->first.empty());
  CHECK(w.terms().begin()->second == RScalar::one());
}

TEST_CASE("matrix element <0|E2 F2|0> = [N] in (0,N)") {
  set_precision_bits(200);
  BigFloat qv = half();
  for (int N = 1; N <= 4; ++N) {
    Irrep rep({0, N}, qv);
    size_t z = rep.index_of({0, 0, 0});
    Mat<BigFloat> M = rep.E2 * rep.F2;
    CHECK(abs(M(z, z) - q_number_num(qv, Rational(N))) < BigFloat("1e-40"));
    // intermediate identity: <0|E2 E1 F1 F2|0> = <0|E2 F2|0>
    Mat<BigFloat> M2 = rep.E2 * rep.E1 * rep.F1 * rep.F2;
    CHECK(abs(M2(z, z) - M(z, z)) < BigFloat("1e-40"));
  }
}

TEST_CASE("exact entry squares match the numeric matrices") {
  set_precision_bits(200);
  BigFloat qv = BigFloat(3) / 10;
  Irrep rep({1, 1}, qv);
  for (auto g : {UqGen::E1, UqGen::E2})
    for (size_t i = 0; i < rep.dim(); ++i)
      for (size_t j = 0; j < rep.dim(); ++j) {
        BigFloat num = rep.gen(g)(i, j);
        RScalar ex = rep.exact_entry_square(g, i, j);
        CHECK(abs(num * num - ex.eval_q(qv)) < BigFloat("1e-45"));
      }
}

TEST_CASE("Hopf structure on formal words") {
  for (auto g : {UqGen::K1, UqGen::K2, UqGen::E1, UqGen::E2, UqGen::F1, UqGen::F2}) {
    UqWord w = UqWord::gen(g);
    CHECK(w.antipode().antipode_inv() == w);
    CHECK(w.antipode_inv().antipode() == w);
    CHECK(w.star().star() == w);
  }
  // counit: 1 on K's, 0 on E/F, multiplicative on evaluation
  CHECK(UqWord::gen(UqGen::K1).counit() == RScalar::one());
  CHECK(UqWord::gen(UqGen::E2).counit().is_zero());
  UqWord L = u2_charge();
  CHECK(L.counit() == RScalar::one());
  CHECK((L * UqWord::gen(UqGen::F1)).counit().is_zero());
  // coproduct of E1: two Sweedler terms E1(x)K1 + K1^-1(x)E1
  auto cp = UqWord::coproduct_mono({UqGen::E1});
  REQUIRE(cp.size() == 2);
  CHECK(cp[0] == std::pair<UqMono, UqMono>{{UqGen::E1}, {UqGen::K1}});
  CHECK(cp[1] == std::pair<UqMono, UqMono>{{UqGen::K1i}, {UqGen::E1}});
  // star is an anti-homomorphism: (E1 E2)* = F2 F1
  CHECK((UqWord::gen(UqGen::E1) * UqWord::gen(UqGen::E2)).star() ==
        UqWord::gen(UqGen::F2) * UqWord::gen(UqGen::F1));
}
