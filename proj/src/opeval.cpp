#include "orelim/opeval.hpp"

#include "orelim/error.hpp"

namespace orelim {

FieldElem LinearizedOp::apply(FieldElem a) const {
  const FieldCtx& k = ctx();
  if (!k.contains(a)) fail(ErrorCode::ContextMismatch, "operator applied outside its field");
  FieldElem acc = k.zero(), x = a;
  const auto& c = formal_.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].packed != 0) acc = k.add(acc, k.mul(c[i], x));
    if (i + 1 < c.size()) x = sigma()(x);
  }
  return acc;
}

LinearizedOp eval_uni(const OrePoly& f) { return LinearizedOp(f); }

FieldElem op_apply(const LinearizedOp& op, FieldElem a) { return op.apply(a); }

OpBivarPoly::OpBivarPoly(Automorphism sigma1, Automorphism sigma2, std::vector<LinearizedOp> coeffs)
    : sigma1_(std::move(sigma1)), sigma2_(std::move(sigma2)), c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().formal().is_zero()) c_.pop_back();
}

OpBivarPoly operator*(const OpBivarPoly& f, const OpBivarPoly& g) {
  if (!(f.sigma1_ == g.sigma1_) || !(f.sigma2_ == g.sigma2_))
    fail(ErrorCode::RingMismatch, "operator polynomials over different rings");
  std::vector<LinearizedOp> out;
  if (!f.c_.empty() && !g.c_.empty()) {
    out.assign(f.c_.size() + g.c_.size() - 1, LinearizedOp(OrePoly(f.sigma1_)));
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
      // sigma1^k x2^i = x2^i sigma1^k, while x2^i c = sigma2^i(c) x2^i
      const Automorphism twist(f.sigma2_.field(),
                               static_cast<std::uint64_t>(i) * f.sigma2_.exponent());
      for (std::size_t j = 0; j < g.c_.size(); ++j) {
        const LinearizedOp moved(g.c_[j].formal().map_coeffs(twist));
        out[i + j] = out[i + j] + compose(f.c_[i], moved);
      }
    }
  }
  return OpBivarPoly(f.sigma1_, f.sigma2_, std::move(out));
}

OpBivarPoly eval_bivar(const BivarOrePoly& f) {
  std::vector<LinearizedOp> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(eval_uni(a));
  return OpBivarPoly(f.sigma1(), f.sigma2(), std::move(c));
}

GfpMatrix op_matrix(const LinearizedOp& op, const FieldCtx& field) {
  if (!op.ctx().same_field(field))
    fail(ErrorCode::ContextMismatch, "op_matrix: operator belongs to another field");
  const unsigned m = field.degree();
  GfpMatrix mat(field.characteristic(), m, m);
  const auto basis = field.prime_basis();
  for (unsigned j = 0; j < m; ++j) {
    const auto col = field.coeffs(op.apply(basis[j]));
    for (unsigned i = 0; i < m; ++i) mat(i, j) = col[i];
  }
  return mat;
}

bool detect_kernel_collision(const LinearizedOp& op) {
  const int d = op.formal().degree();
  return d != kNegInfDegree && d >= static_cast<int>(op.sigma().order());
}

}  // namespace orelim
