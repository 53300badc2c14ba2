#include "helpers.hpp"
#include "orelim/json_io.hpp"
#include "orelim/modres.hpp"
#include "orelim/random.hpp"

#include "../oracle/oracle.hpp"

using namespace orelim;
using orelim::test::Gf4;

TEST(ModRes, PlanWithoutExtension) {
  Gf4 g;
  // D = 1 * 1 + 1 * 0 = 1 < 2
  const auto x1 = BivarOrePoly::x1_pow(g.frob, g.frob, 1);
  const auto x2 = BivarOrePoly::x2_pow(g.frob, g.frob, 1);
  const auto one = BivarOrePoly::constant(g.frob, g.frob, g.one);
  const auto plan = plan_modular(x2 + x1, x2 + one);
  EXPECT_EQ(plan.degree_bound, 1);
  EXPECT_EQ(plan.work_field()->order(), 4u);
  EXPECT_EQ(plan.points, (std::vector<FieldElem>{g.one, g.w}));
}

TEST(ModRes, PlanExtendsForLargerBound) {
  Gf4 g;
  // D = 1 * 3 = 3 -> least even M > 3 is 4
  const auto x1 = BivarOrePoly::x1_pow(g.frob, g.frob, 3);
  const auto x2 = BivarOrePoly::x2_pow(g.frob, g.frob, 1);
  const auto one = BivarOrePoly::constant(g.frob, g.frob, g.one);
  const auto plan = plan_modular(x2 + x1, x2 + one);
  EXPECT_EQ(plan.degree_bound, 3);
  EXPECT_EQ(plan.work_field()->degree(), 4u);
  EXPECT_EQ(plan.points.size(), 4u);
  EXPECT_GT(plan.sigma1.order(), 3u);
  for (std::uint64_t a = 0; a < 4; ++a) {
    EXPECT_EQ(plan.sigma1(plan.ext.embed(FieldElem{a})), plan.ext.embed(g.frob(FieldElem{a})));
    EXPECT_EQ(plan.sigma2(plan.ext.embed(FieldElem{a})), plan.ext.embed(g.frob(FieldElem{a})));
  }
}

TEST(ModRes, PlanForConstants) {
  Gf4 g;
  const auto x2 = BivarOrePoly::x2_pow(g.frob, g.frob, 1);
  const auto w = BivarOrePoly::constant(g.frob, g.frob, g.w);
  const auto plan = plan_modular(x2 + w, x2 + BivarOrePoly::constant(g.frob, g.frob, g.one));
  EXPECT_EQ(plan.degree_bound, 0);
  EXPECT_EQ(plan.points.size(), 2u);
}

TEST(ModRes, PlanIdentityOverPrimeField) {
  auto k = FieldCtx::create(5, 1);
  Automorphism id(k, 0);
  const auto x1 = BivarOrePoly::x1_pow(id, id, 1);
  const auto x2 = BivarOrePoly::x2_pow(id, id, 1);
  const auto plan = plan_modular(x2 - x1, x2 - BivarOrePoly::constant(id, id, k->from_int(2)));
  EXPECT_EQ(plan.work_field()->degree(), 2u);
  EXPECT_EQ(plan.sigma1.exponent(), 1u);
  EXPECT_EQ(plan.sigma2.exponent(), 0u);
}

TEST(ModRes, PlanFailsWhenNoLiftExists) {
  // sigma1 = id on GF(4) only lifts to even Frobenius exponents, whose order
  // on GF(2^M) is at most M / 2; a large bound pushes M past 63.
  Gf4 g;
  const auto x1 = BivarOrePoly::x1_pow(g.id, g.frob, 40);
  const auto x2 = BivarOrePoly::x2_pow(g.id, g.frob, 1);
  EXPECT_CODE(plan_modular(x2 + x1, x2), ErrorCode::PlanFailure);
}

TEST(ModRes, BadEvaluation) {
  auto k = FieldCtx::create(2, 8);
  Automorphism s(k, 1);
  const auto x2 = BivarOrePoly::x2_pow(s, s, 1);
  const auto x1 = BivarOrePoly::x1_pow(s, s, 1);
  const auto plan = plan_modular(x2 * x1, x2 + BivarOrePoly::constant(s, s, k->one()));
  EXPECT_FALSE(check_bad_eval(x2 * x1, plan));
  EXPECT_FALSE(check_bad_eval(x2, plan));

  // x1^8 - 1 acts as sigma^8 - id, i.e. a -> a^(2^8) - a, zero on GF(2^8).
  ModularPlan reduced;
  reduced.base = k;
  reduced.ext = extend_field(k, 8);
  reduced.sigma1 = s;
  reduced.sigma2 = s;
  reduced.points = k->prime_basis();
  const auto lead = BivarOrePoly::x1_pow(s, s, 8) - BivarOrePoly::constant(s, s, k->one());
  EXPECT_TRUE(op_matrix(eval_uni(lead.coeff_x2(0)), *k).is_zero());
  EXPECT_TRUE(check_bad_eval(x2 * lead, reduced));
}

TEST(ModRes, ChainSerialMatchesParallel) {
  auto k = FieldCtx::create(2, 16);
  Automorphism s(k, 1);
  Rng rng(19);
  std::vector<LinearizedOp> chain;
  for (int i = 0; i < 5; ++i) chain.emplace_back(random_ore(s, 3, rng));
  std::vector<FieldElem> points;
  for (int i = 0; i < 97; ++i) points.push_back(random_elem(*k, rng));
  const auto serial = evaluate_chain_serial(chain, points);
  for (int threads : {1, 2, 4, 7}) EXPECT_EQ(evaluate_chain(chain, points, threads), serial);
  // d1(d2(...)) ordering
  for (std::size_t j = 0; j < points.size(); ++j) {
    FieldElem v = points[j];
    for (std::size_t i = chain.size(); i-- > 0;) v = chain[i].apply(v);
    EXPECT_EQ(serial[j], v);
  }
}

TEST(ModRes, MooreRecovery) {
  auto k = FieldCtx::create(3, 5);
  Automorphism s(k, 2);
  Rng rng(29);
  const auto points = k->prime_basis();
  for (int trial = 0; trial < 30; ++trial) {
    const OrePoly r = random_ore(s, 4, rng);
    std::vector<FieldElem> values;
    for (auto a : points) values.push_back(eval_uni(r).apply(a));
    const auto coeffs = solve_moore(s, points, values, static_cast<std::size_t>(r.degree()) + 1);
    EXPECT_EQ(OrePoly(s, coeffs), r);
    EXPECT_EQ(solve_moore(s, points, values, static_cast<std::size_t>(r.degree()) + 1, 3), coeffs);
  }
  const std::vector<FieldElem> dependent{k->one(), k->from_int(2)};
  EXPECT_CODE(solve_moore(s, dependent, std::vector<FieldElem>{k->one(), k->one()}, 2),
              ErrorCode::SingularMooreSystem);
}

TEST(ModRes, Gf5Example) {
  auto k = FieldCtx::create(5, 1);
  Automorphism id(k, 0);
  const auto x1 = BivarOrePoly::x1_pow(id, id, 1);
  const auto x2 = BivarOrePoly::x2_pow(id, id, 1);
  const auto r = res_x2_modular(x2 - x1, x2 - BivarOrePoly::constant(id, id, k->from_int(2)));
  EXPECT_TRUE(r.in_base_field);
  EXPECT_EQ(make_monic(r.det.rep).to_string("x1"), "x1 + 3");
}

TEST(ModRes, MatchesDirect) {
  for (auto [p, m, e1, e2] : {std::tuple{2u, 8u, 1u, 3u}, {3u, 4u, 1u, 2u}, {5u, 2u, 1u, 1u},
                              {2u, 4u, 3u, 0u}}) {
    auto k = FieldCtx::create(p, m);
    Automorphism s1(k, e1), s2(k, e2);
    Rng rng(p * 31 + m);
    for (int trial = 0; trial < 8; ++trial) {
      const auto f = random_bivar(s1, s2, 2, 1, 2, rng), h = random_bivar(s1, s2, 2, 1, 2, rng);
      const auto direct = res_x2_direct(f, h);
      const auto mod = res_x2_modular(f, h);
      EXPECT_TRUE(mod.in_base_field);
      EXPECT_EQ(mod.det.rep, direct.rep);
      EXPECT_EQ(mod.det.degree, direct.degree);
      const auto serial = evaluate_chain_serial(mod.chain, mod.plan.points);
      for (std::size_t j = 0; j < serial.size(); ++j) EXPECT_EQ(mod.evals[j].value, serial[j]);
    }
  }
}

TEST(ModRes, CommutativeMatchesClassical) {
  auto k = FieldCtx::create(3, 1);
  Automorphism id(k, 0);
  Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_bivar(id, id, 2, 1, 2, rng), h = random_bivar(id, id, 2, 1, 2, rng);
    const auto got = oracle::to_prime_poly(res_x2_modular(f, h).det.rep);
    const auto expected =
        oracle::classical_resultant(oracle::to_commutative(f), oracle::to_commutative(h), 3);
    EXPECT_TRUE(got == expected || got == oracle::prime_neg(expected, 3));
  }
}

TEST(ModRes, CommonFactorRecoversZero) {
  auto k = FieldCtx::create(2, 4);
  Automorphism s(k, 1);
  Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = random_bivar(s, s, 1, 1, 1, rng);
    const auto u = random_bivar(s, s, 1, 0, 1, rng), v = random_bivar(s, s, 1, 1, 1, rng);
    const auto r = res_x2_modular(u * h, v * h);
    EXPECT_TRUE(r.det.is_zero);
    for (const auto& e : r.evals) EXPECT_EQ(e.value, k->zero());
  }
}

TEST(ModRes, ConjugacyAudit) {
  Gf4 g;
  std::vector<FieldElem> all{g.one, g.w, g.w1};
  auto report = conjugacy_audit(all, g.frob);
  ASSERT_EQ(report.classes.size(), 1u);
  EXPECT_EQ(report.classes[0].members.size(), 3u);
  EXPECT_EQ(report.classes[0].norm, g.one);

  auto k9 = FieldCtx::create(3, 2);
  std::vector<FieldElem> nine;
  for (std::uint64_t a = 1; a < 9; ++a) nine.push_back(FieldElem{a});
  report = conjugacy_audit(nine, Automorphism(k9, 1));
  ASSERT_EQ(report.classes.size(), 2u);
  EXPECT_EQ(report.classes[0].norm, k9->from_int(1));
  EXPECT_EQ(report.classes[1].norm, k9->from_int(2));
  EXPECT_EQ(report.classes[0].members.size(), 4u);

  all.push_back(g.zero);
  report = conjugacy_audit(all, g.frob);
  EXPECT_EQ(report.zero_points, 1u);
  EXPECT_EQ(to_json(report, *g.k)["note"], "ZeroElement");
}

TEST(ModRes, PlanJson) {
  Gf4 g;
  const auto x1 = BivarOrePoly::x1_pow(g.frob, g.frob, 3);
  const auto x2 = BivarOrePoly::x2_pow(g.frob, g.frob, 1);
  const auto j = to_json(plan_modular(x2 + x1, x2));
  EXPECT_EQ(j["degree_bound"], 3);
  EXPECT_EQ(j["points"].size(), 4u);
  EXPECT_EQ(j["base_field"], "GF(2^2; modulus = 1 + t + t^2)");
}
