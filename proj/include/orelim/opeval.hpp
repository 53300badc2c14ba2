#pragma once

// Operator evaluation x -> sigma: skew polynomials become additive maps
// a -> sum c_i sigma^i(a) on the coefficient field.

#include <string>
#include <vector>

#include "orelim/bivar.hpp"
#include "orelim/gfp_matrix.hpp"

namespace orelim {

/// A formal sigma-polynomial, kept unreduced (no quotient by sigma^ord - 1).
class LinearizedOp {
 public:
  LinearizedOp() = default;
  explicit LinearizedOp(OrePoly formal) : formal_(std::move(formal)) {}

  const OrePoly& formal() const noexcept { return formal_; }
  const Automorphism& sigma() const noexcept { return formal_.sigma(); }
  const FieldCtx& ctx() const noexcept { return formal_.ctx(); }

  /// sum c_i sigma^i(a)
  FieldElem apply(FieldElem a) const;

  /// (L1 o L2)(a) = L1(L2(a)); formally the skew product.
  friend LinearizedOp compose(const LinearizedOp& l1, const LinearizedOp& l2) {
    return LinearizedOp(l1.formal_ * l2.formal_);
  }
  friend LinearizedOp operator+(const LinearizedOp& l1, const LinearizedOp& l2) {
    return LinearizedOp(l1.formal_ + l2.formal_);
  }
  friend bool operator==(const LinearizedOp&, const LinearizedOp&) = default;

  std::string to_string() const { return formal_.to_string("sigma"); }

 private:
  OrePoly formal_;
};

LinearizedOp eval_uni(const OrePoly& f);
FieldElem op_apply(const LinearizedOp& op, FieldElem a);

/// sum_i a_i(sigma1) x2^i.
class OpBivarPoly {
 public:
  OpBivarPoly() = default;
  OpBivarPoly(Automorphism sigma1, Automorphism sigma2, std::vector<LinearizedOp> coeffs);

  const Automorphism& sigma1() const noexcept { return sigma1_; }
  const Automorphism& sigma2() const noexcept { return sigma2_; }
  const std::vector<LinearizedOp>& coeffs() const noexcept { return c_; }
  int degree_x2() const noexcept {
    return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1;
  }

  /// x2 commutes with sigma1 and twists field constants by sigma2.
  friend OpBivarPoly operator*(const OpBivarPoly& f, const OpBivarPoly& g);
  friend bool operator==(const OpBivarPoly&, const OpBivarPoly&) = default;

 private:
  Automorphism sigma1_;
  Automorphism sigma2_;
  std::vector<LinearizedOp> c_;
};

OpBivarPoly eval_bivar(const BivarOrePoly& f);

/// Matrix of a -> op(a) over GF(p), columns indexed by the power basis of
/// the operator's field. `field` must be that field.
GfpMatrix op_matrix(const LinearizedOp& op, const FieldCtx& field);

/// True when the formal degree reaches the order of sigma, so that point
/// values cannot tell the formal polynomial apart from a lower-degree one.
bool detect_kernel_collision(const LinearizedOp& op);

}  // namespace orelim
