#include "orelim/skewdet.hpp"

#include <random>
#include <sstream>

#include "orelim/error.hpp"

namespace orelim {

OreMatrix::OreMatrix(Automorphism sigma, std::size_t n)
    : sigma_(std::move(sigma)), n_(n), e_(n * n, OrePoly(sigma_)) {}

OreMatrix::OreMatrix(Automorphism sigma, std::size_t n, std::vector<OrePoly> entries)
    : sigma_(std::move(sigma)), n_(n), e_(std::move(entries)) {
  if (e_.size() != n * n) fail(ErrorCode::IndexOutOfRange, "OreMatrix: entry count is not n*n");
  for (const auto& a : e_)
    if (!(a.sigma() == sigma_)) fail(ErrorCode::RingMismatch, "OreMatrix: mixed rings");
}

OreMatrix OreMatrix::identity(const Automorphism& sigma, std::size_t n) {
  OreMatrix m(sigma, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = OrePoly::constant(sigma, sigma.ctx().one());
  return m;
}

std::string OreMatrix::to_string(const std::string& var) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string(var);
    os << ']';
  }
  os << ']';
  return os.str();
}

void row_addmul(OreMatrix& m, std::size_t i, std::size_t j, const OrePoly& q) {
  if (i >= m.size() || j >= m.size()) fail(ErrorCode::IndexOutOfRange, "row_addmul: row index");
  if (i == j) fail(ErrorCode::EqualRows, "row_addmul: source and target row coincide");
  if (!(q.sigma() == m.sigma())) fail(ErrorCode::RingMismatch, "row_addmul: multiplier ring");
  if (q.is_zero()) return;
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (m(i, c).is_zero()) continue;
    m(j, c) = m(j, c) + q * m(i, c);
  }
}

void row_swap_signed(OreMatrix& m, std::size_t i, std::size_t j) {
  if (i >= m.size() || j >= m.size() || i == j)
    fail(ErrorCode::IndexOutOfRange, "row_swap_signed: need two distinct valid rows");
  // Same effect as E_ij(1) E_ji(-1) E_ij(1).
  for (std::size_t c = 0; c < m.size(); ++c) {
    OrePoly old_j = std::move(m(j, c));
    m(j, c) = std::move(m(i, c));
    m(i, c) = -old_j;
  }
}

void apply_row_op(OreMatrix& m, const RowOp& op) {
  if (op.kind == RowOp::Kind::AddMul)
    row_addmul(m, op.i, op.j, op.q);
  else
    row_swap_signed(m, op.i, op.j);
}

Triangularization triangularize(OreMatrix m, PivotOptions opts) {
  const std::size_t n = m.size();
  std::vector<RowOp> log;
  std::mt19937_64 rng(opts.seed);
  std::vector<std::size_t> cand;

  for (std::size_t k = 0; k < n; ++k) {
    bool first_round = true;
    for (;;) {
      // Later rounds only look at remainders, all of lower degree than the
      // current pivot, so every round strictly lowers the pivot degree.
      cand.clear();
      for (std::size_t r = first_round ? k : k + 1; r < n; ++r)
        if (!m(r, k).is_zero()) cand.push_back(r);
      if (cand.empty()) break;

      std::size_t piv = cand.front();
      switch (opts.rule) {
        case PivotRule::MinDegree:
          for (auto r : cand)
            if (m(r, k).degree() < m(piv, k).degree()) piv = r;
          break;
        case PivotRule::FirstNonzero:
          break;
        case PivotRule::Random:
          piv = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)];
          break;
      }
      if (piv != k) {
        row_swap_signed(m, piv, k);
        log.push_back({RowOp::Kind::SignedSwap, piv, k, OrePoly(m.sigma())});
      }
      for (std::size_t r = k + 1; r < n; ++r) {
        if (m(r, k).is_zero()) continue;
        OrePoly q = right_divmod(m(r, k), m(k, k)).quotient;
        if (q.is_zero()) continue;
        OrePoly neg_q = -q;
        row_addmul(m, k, r, neg_q);
        log.push_back({RowOp::Kind::AddMul, k, r, std::move(neg_q)});
      }
      first_round = false;
    }
  }
  return {std::move(m), std::move(log)};
}

DetResult det_from_triangular(Triangularization tri) {
  const OreMatrix& u = tri.upper;
  DetResult d{OrePoly(u.sigma()), true, kNegInfDegree, {}, std::move(tri.log)};
  d.diagonal.reserve(u.size());
  bool singular = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    d.diagonal.push_back(u(i, i));
    singular = singular || u(i, i).is_zero();
  }
  if (singular) return d;
  OrePoly rep = OrePoly::constant(u.sigma(), u.sigma().ctx().one());
  for (const auto& di : d.diagonal) rep = rep * di;
  d.rep = std::move(rep);
  d.is_zero = false;
  d.degree = d.rep.degree();
  return d;
}

DetResult dieudonne_det(const OreMatrix& m, PivotOptions opts) {
  return det_from_triangular(triangularize(m, opts));
}

SurrogateVerdict det_surrogates_equal(const DetResult& a, const DetResult& b) {
  SurrogateVerdict v;
  v.zero_agrees = a.is_zero == b.is_zero;
  v.degree_agrees = a.degree == b.degree;
  if (a.rep.sigma().is_identity() && b.rep.sigma().is_identity() && a.rep.same_ring(b.rep))
    v.rep_agrees_up_to_sign = a.rep == b.rep || a.rep == -b.rep;
  return v;
}

std::vector<DetResult> dieudonne_det_batch(const std::vector<OreMatrix>& ms, PivotOptions opts) {
  std::vector<DetResult> out(ms.size());
  const auto count = static_cast<std::int64_t>(ms.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) out[i] = dieudonne_det(ms[i], opts);
  return out;
}

}  // namespace orelim
