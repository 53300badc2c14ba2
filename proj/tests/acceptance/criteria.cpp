#include "criteria.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "../oracle/oracle.hpp"
#include "orelim/error.hpp"
#include "orelim/modres.hpp"
#include "orelim/random.hpp"
#include "orelim/trials.hpp"

namespace orelim::acceptance {
namespace {

// Fixed seeds keep the gate reproducible.
constexpr std::uint64_t kSeed = 0x5eed'a11ceULL;

struct Tally {
  std::size_t checked = 0;
  std::string first_failure;
  void fail(const std::string& why) {
    if (first_failure.empty()) first_failure = why;
  }
  Outcome finish(const std::string& what) const {
    Outcome o;
    o.pass = first_failure.empty();
    o.detail = o.pass ? std::to_string(checked) + " " + what : first_failure;
    return o;
  }
};

bool equal_up_to_sign(const oracle::PrimePoly& a, const oracle::PrimePoly& b, std::uint64_t p) {
  return a == b || a == oracle::prime_neg(b, p);
}

std::string show(const BivarOrePoly& f) { return f.to_string(); }

Outcome a1_commutative() {
  auto k = FieldCtx::create(7, 1);
  const Automorphism id(k, 0);
  Rng rng(kSeed + 1);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const auto f = random_bivar(id, id, 3, 0, 3, rng);
    const auto g = random_bivar(id, id, 3, 1, 3, rng);
    const auto got = oracle::to_prime_poly(res_x2_direct(f, g).rep);
    const auto expected =
        oracle::classical_resultant(oracle::to_commutative(f), oracle::to_commutative(g), 7);
    ++t.checked;
    if (!equal_up_to_sign(got, expected, 7)) t.fail("mismatch for f = " + show(f) + ", g = " + show(g));
  }
  return t.finish("pairs agree with the classical resultant");
}

Outcome a2_common_factor() {
  auto k = FieldCtx::create(2, 4);
  Rng rng(kSeed + 2);
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const Automorphism s1(k, 1 + i % 3), s2(k, 1 + (i / 3) % 3);
    const auto h = random_bivar(s1, s2, 2, 1, 2, rng);
    const auto u = random_bivar(s1, s2, 1, 0, 2, rng);
    const auto v = random_bivar(s1, s2, 1, 0, 2, rng);
    ++t.checked;
    if (!res_x2_direct(u * h, v * h).is_zero) t.fail("nonzero eliminant for h = " + show(h));
  }
  return t.finish("common-factor pairs vanish");
}

Outcome a3_operator_identity() {
  auto k = FieldCtx::create(2, 8);
  Rng rng(kSeed + 3);
  Tally t;
  std::size_t points = 0;
  for (int i = 0; i < 50; ++i) {
    const Automorphism s1(k, 1 + 2 * (i % 4)), s2(k, i % 8);
    const auto f = random_bivar(s1, s2, 2, 1, 2, rng);
    const auto g = random_bivar(s1, s2, 2, 1, 2, rng);
    const auto direct = res_x2_direct(f, g);
    const auto mod = res_x2_modular(f, g);
    const auto op = eval_uni(embed_ore(direct.rep, mod.plan.ext.embed, mod.plan.sigma1));
    const auto chain = evaluate_chain_serial(mod.chain, mod.plan.points);
    ++t.checked;
    for (std::size_t j = 0; j < chain.size(); ++j) {
      ++points;
      if (op.apply(mod.plan.points[j]) != chain[j]) t.fail("chain value differs for f = " + show(f));
    }
  }
  return t.finish("instances, " + std::to_string(points) + " points");
}

Outcome a4_modular_equals_direct() {
  struct Case {
    unsigned p, m;
    std::vector<unsigned> coprime;
  };
  const std::vector<Case> cases{{2, 8, {1, 3, 5, 7}}, {3, 4, {1, 3}}, {5, 2, {1}}};
  Rng rng(kSeed + 4);
  Tally t;
  for (const auto& c : cases) {
    auto k = FieldCtx::create(c.p, c.m);
    for (int i = 0; i < 50; ++i) {
      const Automorphism s1(k, c.coprime[static_cast<std::size_t>(i) % c.coprime.size()]);
      const Automorphism s2(k, static_cast<unsigned>(i) % c.m);
      const auto f = random_bivar(s1, s2, 2, 1, 2, rng);
      const auto g = random_bivar(s1, s2, 2, 1, 2, rng);
      ++t.checked;
      try {
        const auto mod = res_x2_modular(f, g);
        if (!mod.in_base_field || !(mod.det.rep == res_x2_direct(f, g).rep))
          t.fail(k->spec() + ": mismatch for f = " + show(f) + ", g = " + show(g));
      } catch (const Error& e) {
        t.fail(k->spec() + ": " + std::string(to_string(e.code())) + " for f = " + show(f));
      }
    }
  }
  return t.finish("instances agree coefficient-for-coefficient");
}

Outcome a5_pivot_invariance() {
  auto k = FieldCtx::create(2, 4);
  const Automorphism s(k, 1);
  Rng rng(kSeed + 5);
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const auto m = random_matrix(s, 1 + static_cast<std::size_t>(i) % 5, 3, rng);
    const auto a = dieudonne_det(m, {PivotRule::MinDegree, 0});
    const auto b = dieudonne_det(m, {PivotRule::FirstNonzero, 0});
    const auto c = dieudonne_det(m, {PivotRule::Random, kSeed + static_cast<std::uint64_t>(i)});
    ++t.checked;
    if (!det_surrogates_equal(a, b).ok() || !det_surrogates_equal(a, c).ok())
      t.fail("pivot-dependent determinant for\n" + m.to_string());
  }
  return t.finish("matrices, 3 pivot rules");
}

Outcome a6_eval_morphism() {
  auto k = FieldCtx::create(2, 8);
  Rng rng(kSeed + 6);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const Automorphism s1(k, static_cast<unsigned>(i) % 8), s2(k, static_cast<unsigned>(i / 8) % 8);
    const auto f = random_ore(s1, 5, rng), g = random_ore(s1, 5, rng);
    ++t.checked;
    if (!(eval_uni(f * g) == compose(eval_uni(f), eval_uni(g))))
      t.fail("eval_uni not multiplicative on " + f.to_string() + ", " + g.to_string());
    const auto bf = random_bivar(s1, s2, 3, 0, 3, rng), bg = random_bivar(s1, s2, 3, 0, 3, rng);
    ++t.checked;
    if (!(eval_bivar(bf * bg) == eval_bivar(bf) * eval_bivar(bg)))
      t.fail("eval_bivar not multiplicative on " + show(bf) + ", " + show(bg));
  }
  return t.finish("products checked formally");
}

Outcome a7_conjugacy() {
  Tally t;
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
    auto k = FieldCtx::create(p, m);
    for (unsigned e = 0; e < m; ++e) {
      const Automorphism s(k, e);
      std::vector<FieldElem> all;
      for (std::uint64_t a = 1; a < k->order(); ++a) all.push_back(FieldElem{a});
      std::vector<std::vector<FieldElem>> by_norm;
      for (auto& c : conjugacy_audit(all, s).classes) by_norm.push_back(c.members);
      std::sort(by_norm.begin(), by_norm.end());
      ++t.checked;
      if (by_norm != oracle::brute_conjugacy(s))
        t.fail(k->spec() + ", sigma exponent " + std::to_string(e) + ": partitions differ");
    }
  }
  return t.finish("(field, sigma) partitions agree");
}

Outcome a8_signed_swaps() {
  Tally t;
  auto k5 = FieldCtx::create(5, 1);
  const Automorphism id(k5, 0);
  OreMatrix m = OreMatrix::identity(id, 2);
  row_swap_signed(m, 0, 1);
  const OrePoly one = OrePoly::constant(id, k5->one()), zero(id);
  ++t.checked;
  if (!(m == OreMatrix(id, 2, {zero, -one, one, zero}))) t.fail("swap of I2 gave\n" + m.to_string());

  auto k = FieldCtx::create(3, 2);
  Rng rng(kSeed + 8);
  for (int i = 0; i < 50; ++i) {
    const Automorphism s(k, static_cast<unsigned>(i) % 2);
    const std::size_t n = 2 + static_cast<std::size_t>(i) % 4;
    const auto a = random_matrix(s, n, 3, rng);
    OreMatrix b = a;
    for (int sw = 0; sw < 10; ++sw) {
      const std::size_t r1 = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      std::size_t r2 = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
      if (r2 >= r1) ++r2;
      row_swap_signed(b, r1, r2);
    }
    ++t.checked;
    if (!det_surrogates_equal(dieudonne_det(a), dieudonne_det(b)).ok())
      t.fail("surrogates changed under signed swaps of\n" + a.to_string());
  }
  return t.finish("checks (identity plus swapped matrices)");
}

Outcome a9_division() {
  Tally t;
  const std::vector<std::pair<FieldPtr, unsigned>> rings{
      {FieldCtx::create(2, 8), 1}, {FieldCtx::create(2, 8), 5}, {FieldCtx::create(3, 4), 1},
      {FieldCtx::create(5, 2), 1}, {FieldCtx::create(7, 1), 0}};
  Rng rng(kSeed + 9);
  for (int i = 0; i < 10000; ++i) {
    const auto& [k, e] = rings[static_cast<std::size_t>(i) % rings.size()];
    const Automorphism s(k, e);
    const OrePoly a = rng() % 8 == 0 ? OrePoly(s) : random_ore(s, 8, rng);
    const OrePoly b = random_ore(s, 5, rng);
    const auto qr = right_divmod(a, b);
    ++t.checked;
    if (!(oracle::naive_ore_mul(qr.quotient, b) + qr.remainder == a) || qr.remainder.degree() >= b.degree())
      t.fail("bad division of " + a.to_string() + " by " + b.to_string());
  }
  return t.finish("divisions reconstructed");
}

Outcome a10_bench() {
  TrialSpec spec;
  spec.field = FieldCtx::create(2, 8);
  spec.sigma1 = 1;
  spec.sigma2 = 3;
  spec.degree = 3;
  spec.trials = 20;
  spec.seed = kSeed + 10;
  const auto rows = run_trials(spec);
  Tally t;
  long long direct = 0, modular = 0;
  for (const auto& r : rows) {
    (r.method == "direct" ? direct : modular) += r.micros;
    if (r.method != "modular") continue;
    ++t.checked;
    if (r.verdict != "ok") t.fail("trial " + std::to_string(r.trial) + ": " + r.verdict);
  }
  std::ostringstream timing;
  timing << "trials agree; total direct " << direct / 1000 << " ms, modular " << modular / 1000 << " ms";
  return t.finish(timing.str());
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"A1", "commutative specialization", 30, a1_commutative},
      {"A2", "common right factor vanishing", 60, a2_common_factor},
      {"A3", "eliminant operator equals chain value", 60, a3_operator_identity},
      {"A4", "modular equals direct", 120, a4_modular_equals_direct},
      {"A5", "determinant surrogates across pivot rules", 60, a5_pivot_invariance},
      {"A6", "evaluation is a ring morphism", 30, a6_eval_morphism},
      {"A7", "sigma-conjugacy classification", 10, a7_conjugacy},
      {"A8", "signed permutation", 10, a8_signed_swaps},
      {"A9", "Euclidean right division", 30, a9_division},
      {"A10", "benchmark verdicts", 120, a10_bench},
  };
  return all;
}

bool run_all(std::ostream& out, const std::vector<std::string>& only) {
  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    o.id = c.id;
    o.title = c.title;
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.seconds > c.budget_seconds) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
    }
    all_pass = all_pass && o.pass;
    out << (o.pass ? "PASS " : "FAIL ") << std::left << std::setw(4) << o.id << ' ' << o.title << ": "
        << o.detail << " [" << std::fixed << std::setprecision(2) << o.seconds << " s]" << std::endl;
  }
  return all_pass;
}

}  // namespace orelim::acceptance
