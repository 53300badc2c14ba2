#include "orelim/modres.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "orelim/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orelim {
namespace {

int resolve_threads(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

constexpr std::uint64_t kOrderLimit = std::uint64_t{1} << 63;

bool fits(std::uint64_t p, unsigned degree) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < degree; ++i) {
    if (q > (kOrderLimit - 1) / p) return false;
    q *= p;
  }
  return true;
}

// Operator-entry Sylvester matrix built from OpBivarPoly products with x2^k.
OreMatrix operator_sylvester(const OpBivarPoly& f, const OpBivarPoly& g) {
  const int n = f.degree_x2(), m = g.degree_x2();
  const std::size_t dim = static_cast<std::size_t>(n + m);
  const Automorphism& s1 = f.sigma1();
  OreMatrix mat(s1, dim);
  auto x2_pow = [&](int k) {
    std::vector<LinearizedOp> c(static_cast<std::size_t>(k) + 1, LinearizedOp(OrePoly(s1)));
    c.back() = LinearizedOp(OrePoly::constant(s1, s1.ctx().one()));
    return OpBivarPoly(s1, f.sigma2(), std::move(c));
  };
  auto fill_row = [&](std::size_t row, const OpBivarPoly& shifted) {
    const auto& c = shifted.coeffs();
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t power = dim - 1 - col;
      if (power < c.size()) mat(row, col) = c[power].formal();
    }
  };
  for (int i = 1; i <= m; ++i) fill_row(static_cast<std::size_t>(i - 1), x2_pow(m - i) * f);
  for (int i = 1; i <= n; ++i) fill_row(static_cast<std::size_t>(m + i - 1), x2_pow(n - i) * g);
  return mat;
}

// Gaussian elimination for a consistent full-column-rank system over a field.
std::vector<FieldElem> solve_dense(const FieldCtx& k, std::vector<FieldElem> a,
                                   std::vector<FieldElem> b, std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c].packed == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[piv * cols + j]);
      std::swap(b[r], b[piv]);
    }
    const FieldElem inv = k.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = k.mul(a[r * cols + j], inv);
    b[r] = k.mul(b[r], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const FieldElem f = a[i * cols + c];
      if (f.packed == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = k.sub(a[i * cols + j], k.mul(f, a[r * cols + j]));
      b[i] = k.sub(b[i], k.mul(f, b[r]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < cols) fail(ErrorCode::SingularMooreSystem, "Moore system has dependent columns");
  for (std::size_t i = r; i < rows; ++i)
    if (b[i].packed != 0) fail(ErrorCode::SingularMooreSystem, "Moore system is inconsistent");
  std::vector<FieldElem> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace

ModularPlan plan_modular(const BivarOrePoly& f, const BivarOrePoly& g) {
  // Reuses the Sylvester preconditions (ring, zero inputs, degenerate degrees).
  if (!f.same_ring(g)) fail(ErrorCode::RingMismatch, "plan_modular: operands in different rings");
  if (f.is_zero() || g.is_zero()) fail(ErrorCode::ZeroPolynomial, "plan_modular: zero input");
  if (f.degree_x2() == 0 && g.degree_x2() == 0)
    fail(ErrorCode::BothConstant, "plan_modular: both inputs are constant in x2");

  const FieldPtr& base = f.sigma1().field();
  const std::uint64_t p = base->characteristic();
  const unsigned m = base->degree();
  const unsigned e1 = f.sigma1().exponent();
  const int bound = sylvester_degree_bound(f, g);

  for (unsigned big = m; fits(p, big); big += m) {
    for (unsigned lift = e1; lift < big; lift += m) {
      const unsigned order = big / std::gcd(lift, big);
      if (static_cast<int>(order) <= bound) continue;
      ModularPlan plan;
      plan.base = base;
      plan.ext = extend_field(base, big);
      plan.sigma1 = Automorphism(plan.ext.field, lift);
      plan.sigma2 = Automorphism(plan.ext.field, f.sigma2().exponent());
      plan.points = plan.ext.field->prime_basis();
      plan.degree_bound = bound;
      return plan;
    }
  }
  fail(ErrorCode::PlanFailure,
       "no extension of GF(" + std::to_string(p) + "^" + std::to_string(m) +
           ") below 2^63 elements lifts sigma1 to an automorphism of order > " +
           std::to_string(bound));
}

OrePoly embed_ore(const OrePoly& a, const Embedding& embed, const Automorphism& sigma) {
  std::vector<FieldElem> c;
  c.reserve(a.coeffs().size());
  for (auto x : a.coeffs()) c.push_back(embed(x));
  return OrePoly(sigma, std::move(c));
}

BivarOrePoly embed_bivar(const BivarOrePoly& f, const ModularPlan& plan) {
  std::vector<OrePoly> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(embed_ore(a, plan.ext.embed, plan.sigma1));
  return BivarOrePoly(plan.sigma1, plan.sigma2, std::move(c));
}

bool check_bad_eval(const BivarOrePoly& f, const ModularPlan& plan) {
  const OrePoly lead = embed_ore(f.leading_x2(), plan.ext.embed, plan.sigma1);
  return op_matrix(eval_uni(lead), *plan.work_field()).is_zero();
}

std::vector<FieldElem> evaluate_chain_serial(std::span<const LinearizedOp> chain,
                                             std::span<const FieldElem> points) {
  std::vector<FieldElem> out(points.begin(), points.end());
  for (auto& v : out)
    for (std::size_t i = chain.size(); i-- > 0;) v = chain[i].apply(v);
  return out;
}

std::vector<FieldElem> evaluate_chain(std::span<const LinearizedOp> chain,
                                      std::span<const FieldElem> points, int threads) {
  std::vector<FieldElem> out(points.begin(), points.end());
  if (!chain.empty())
    for (auto a : points)
      if (!chain.front().ctx().contains(a))
        fail(ErrorCode::ContextMismatch, "chain evaluated outside its field");
  const auto count = static_cast<std::int64_t>(out.size());
  const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(static) num_threads(nt) if (nt > 1)
  for (std::int64_t j = 0; j < count; ++j) {
    FieldElem v = out[j];
    for (std::size_t i = chain.size(); i-- > 0;) v = chain[i].apply(v);
    out[j] = v;
  }
  return out;
}

std::vector<FieldElem> moore_matrix(const Automorphism& sigma, std::span<const FieldElem> points,
                                    std::size_t unknowns, int threads) {
  std::vector<FieldElem> mat(points.size() * unknowns);
  const auto rows = static_cast<std::int64_t>(points.size());
  const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(static) num_threads(nt) if (nt > 1)
  for (std::int64_t j = 0; j < rows; ++j) {
    FieldElem x = points[j];
    for (std::size_t i = 0; i < unknowns; ++i) {
      mat[j * unknowns + i] = x;
      x = sigma(x);
    }
  }
  return mat;
}

std::vector<FieldElem> solve_moore(const Automorphism& sigma, std::span<const FieldElem> points,
                                   std::span<const FieldElem> values, std::size_t unknowns,
                                   int threads) {
  if (points.size() != values.size())
    fail(ErrorCode::IndexOutOfRange, "solve_moore: points and values differ in length");
  if (unknowns == 0) return {};
  return solve_dense(sigma.ctx(), moore_matrix(sigma, points, unknowns, threads),
                     std::vector<FieldElem>(values.begin(), values.end()), points.size(),
                     unknowns);
}

ModularResult res_x2_modular(const BivarOrePoly& f, const BivarOrePoly& g,
                             const ModularOptions& opts) {
  ModularResult res;
  res.plan = plan_modular(f, g);
  const ModularPlan& plan = res.plan;
  if (check_bad_eval(f, plan) || check_bad_eval(g, plan))
    fail(ErrorCode::BadEvaluation, "leading x2-coefficient vanishes as an operator");

  const OpBivarPoly fe = eval_bivar(embed_bivar(f, plan));
  const OpBivarPoly ge = eval_bivar(embed_bivar(g, plan));
  if (fe.degree_x2() != f.degree_x2() || ge.degree_x2() != g.degree_x2())
    fail(ErrorCode::BadEvaluation, "evaluation changed an x2-degree");

  Triangularization tri = triangularize(operator_sylvester(fe, ge), opts.pivot);
  const OreMatrix& u = tri.upper;
  bool singular = false;
  int chain_degree = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    res.chain.emplace_back(u(i, i));
    if (u(i, i).is_zero())
      singular = true;
    else
      chain_degree += u(i, i).degree();
  }

  const auto values = evaluate_chain(res.chain, plan.points, opts.threads);
  for (std::size_t j = 0; j < values.size(); ++j) res.evals.push_back({plan.points[j], values[j]});

  std::vector<FieldElem> coeffs;
  if (!singular) {
    if (chain_degree > plan.degree_bound)
      fail(ErrorCode::PlanFailure, "diagonal degree exceeds the planned bound");
    coeffs = solve_moore(plan.sigma1, plan.points, values,
                         static_cast<std::size_t>(chain_degree) + 1, opts.threads);
  }
  res.rep_work = OrePoly(plan.sigma1, coeffs);

  // Back to the input ring when every coefficient lies in the base field.
  std::vector<FieldElem> base_coeffs;
  for (auto c : res.rep_work.coeffs()) {
    auto pre = plan.ext.embed.preimage(c);
    if (!pre) {
      res.in_base_field = false;
      break;
    }
    base_coeffs.push_back(*pre);
  }
  res.det.rep = res.in_base_field ? OrePoly(f.sigma1(), std::move(base_coeffs)) : res.rep_work;
  res.det.is_zero = res.det.rep.is_zero();
  res.det.degree = res.det.rep.degree();
  for (std::size_t i = 0; i < u.size(); ++i) res.det.diagonal.push_back(u(i, i));
  res.det.op_log = std::move(tri.log);
  return res;
}

ConjugacyReport conjugacy_audit(std::span<const FieldElem> points, const Automorphism& sigma) {
  ConjugacyReport report;
  std::map<FieldElem, std::vector<FieldElem>> by_norm;
  for (auto a : points) {
    if (a.packed == 0) {
      ++report.zero_points;
      continue;
    }
    by_norm[sigma_norm(sigma, a)].push_back(a);
  }
  for (auto& [norm, members] : by_norm) report.classes.push_back({norm, std::move(members)});
  return report;
}

}  // namespace orelim
