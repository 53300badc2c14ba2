#include "helpers.hpp"
#include "orelim/random.hpp"
#include "orelim/resultant.hpp"

#include "../oracle/oracle.hpp"

using namespace orelim;

namespace {

struct Gf5 {
  FieldPtr k = FieldCtx::create(5, 1);
  Automorphism id{k, 0};
  OrePoly c(std::uint64_t v) const { return OrePoly::constant(id, FieldElem{v}); }
  OrePoly x1() const { return OrePoly::monomial(id, k->one(), 1); }
  // x2 - a(x1)
  BivarOrePoly linear(const OrePoly& a) const { return BivarOrePoly(id, id, {-a, c(1)}); }
};

}  // namespace

TEST(Resultant, SylvesterShape) {
  Gf5 g;
  const auto s = sylvester_matrix(g.linear(g.x1()), g.linear(g.c(2)));
  EXPECT_EQ(s.n, 1);
  EXPECT_EQ(s.m, 1);
  EXPECT_EQ(s.inner, OreMatrix(g.id, 2, {g.c(1), -g.x1(), g.c(1), -g.c(2)}));
}

TEST(Resultant, SylvesterShiftedRows) {
  // deg f = 1, deg g = 2: rows x2*f, f, g
  auto k = FieldCtx::create(2, 8);
  Automorphism s1(k, 1), s2(k, 3);
  Rng rng(5);
  const auto f = random_bivar(s1, s2, 2, 1, 1, rng);
  const auto h = random_bivar(s1, s2, 2, 2, 2, rng);
  const auto s = sylvester_matrix(f, h);
  ASSERT_EQ(s.inner.size(), 3u);
  const auto shifted = f.shift_left(1);
  EXPECT_EQ(shifted.coeff_x2(1), f.coeff_x2(0).map_coeffs(s2));
  for (std::size_t c = 0; c < 3; ++c) {
    EXPECT_EQ(s.inner(0, c), shifted.coeff_x2(2 - c));
    EXPECT_EQ(s.inner(1, c), f.coeff_x2(2 - c));
    EXPECT_EQ(s.inner(2, c), h.coeff_x2(2 - c));
  }
}

TEST(Resultant, SylvesterErrors) {
  Gf5 g;
  EXPECT_CODE(sylvester_matrix(g.linear(g.x1()), BivarOrePoly(g.id, g.id)), ErrorCode::ZeroPolynomial);
  const BivarOrePoly c1(g.id, g.id, {g.c(1)}), c2(g.id, g.id, {g.x1()});
  EXPECT_CODE(sylvester_matrix(c1, c2), ErrorCode::BothConstant);
  auto k4 = FieldCtx::create(2, 2);
  const auto other = BivarOrePoly::x2_pow(Automorphism(k4, 1), Automorphism(k4, 1), 1);
  EXPECT_CODE(sylvester_matrix(g.linear(g.x1()), other), ErrorCode::RingMismatch);
}

TEST(Resultant, Gf5Example) {
  Gf5 g;
  const auto det = res_x2_direct(g.linear(g.x1()), g.linear(g.c(2)));
  EXPECT_EQ(det.degree, 1);
  EXPECT_FALSE(det.is_zero);
  EXPECT_EQ(make_monic(det.rep).to_string("x1"), "x1 + 3");
  const auto expected = oracle::classical_resultant({{0, 4}, {1}}, {{3}, {1}}, 5);
  const auto got = oracle::to_prime_poly(det.rep);
  EXPECT_TRUE(got == expected || got == oracle::prime_neg(expected, 5));
}

TEST(Resultant, ConstantPartner) {
  // res(f, c) = c^n for a constant c (commutative case).
  Gf5 g;
  const BivarOrePoly f(g.id, g.id, {g.x1(), g.c(2), g.c(1)});
  const BivarOrePoly c(g.id, g.id, {g.c(3)});
  EXPECT_EQ(res_x2_direct(f, c).rep, g.c(4));
}

TEST(Resultant, CommonRightFactorVanishes) {
  auto k = FieldCtx::create(2, 4);
  Automorphism s(k, 1);
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = random_bivar(s, s, 1, 1, 2, rng);
    const auto u = random_bivar(s, s, 1, 0, 1, rng), v = random_bivar(s, s, 1, 0, 1, rng);
    const auto det = res_x2_direct(u * h, v * h);
    EXPECT_TRUE(det.is_zero);
  }
}

TEST(Resultant, CommutativeMatchesClassical) {
  auto k = FieldCtx::create(7, 1);
  Automorphism id(k, 0);
  Rng rng(9);
  int nonzero = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_bivar(id, id, 3, 0, 3, rng), h = random_bivar(id, id, 3, 1, 3, rng);
    const auto got = oracle::to_prime_poly(res_x2_direct(f, h).rep);
    const auto expected =
        oracle::classical_resultant(oracle::to_commutative(f), oracle::to_commutative(h), 7);
    EXPECT_TRUE(got == expected || got == oracle::prime_neg(expected, 7));
    nonzero += !expected.empty();
  }
  EXPECT_GT(nonzero, 30);
}

TEST(Resultant, DegreeBound) {
  auto k = FieldCtx::create(2, 8);
  Automorphism s1(k, 1), s2(k, 1);
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_bivar(s1, s2, 3, 1, 3, rng), h = random_bivar(s1, s2, 3, 1, 3, rng);
    const auto det = res_x2_direct(f, h);
    if (!det.is_zero) {
      EXPECT_LE(det.degree, sylvester_degree_bound(f, h));
    }
  }
}
