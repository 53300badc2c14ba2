#pragma once

// Matrices over A[x; sigma], Euclidean triangularization by elementary row
// operations, and the Dieudonne determinant through a polynomial
// representative.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orelim/ore_poly.hpp"

namespace orelim {

class OreMatrix {
 public:
  OreMatrix() = default;
  /// n x n zero matrix over the ring of sigma.
  OreMatrix(Automorphism sigma, std::size_t n);
  /// Row-major entries; all must share one ring.
  OreMatrix(Automorphism sigma, std::size_t n, std::vector<OrePoly> entries);

  static OreMatrix identity(const Automorphism& sigma, std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const Automorphism& sigma() const noexcept { return sigma_; }

  const OrePoly& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  OrePoly& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

  friend bool operator==(const OreMatrix& a, const OreMatrix& b) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  Automorphism sigma_;
  std::size_t n_ = 0;
  std::vector<OrePoly> e_;
};

/// One recorded elementary operation.
struct RowOp {
  enum class Kind { AddMul, SignedSwap };
  Kind kind;
  std::size_t i;  // source row
  std::size_t j;  // target row
  OrePoly q;      // AddMul only
};

/// row_j <- row_j + q * row_i (0-based rows).
void row_addmul(OreMatrix& m, std::size_t i, std::size_t j, const OrePoly& q);
/// row_j <- row_i, row_i <- -row_j.
void row_swap_signed(OreMatrix& m, std::size_t i, std::size_t j);
void apply_row_op(OreMatrix& m, const RowOp& op);

enum class PivotRule { MinDegree, FirstNonzero, Random };

struct PivotOptions {
  PivotRule rule = PivotRule::MinDegree;
  std::uint64_t seed = 0;  // PivotRule::Random only
};

struct Triangularization {
  OreMatrix upper;
  std::vector<RowOp> log;
};

/// Upper-triangular form using only row_addmul and row_swap_signed.
Triangularization triangularize(OreMatrix m, PivotOptions opts = {});

struct DetResult {
  OrePoly rep;  // diagonal product in row order
  bool is_zero = true;
  int degree = kNegInfDegree;
  std::vector<OrePoly> diagonal;
  std::vector<RowOp> op_log;
};

DetResult dieudonne_det(const OreMatrix& m, PivotOptions opts = {});
/// Same as dieudonne_det once the triangular form is known.
DetResult det_from_triangular(Triangularization tri);

/// Computable stand-ins for equality modulo commutators.
struct SurrogateVerdict {
  bool zero_agrees = false;
  bool degree_agrees = false;
  /// Only decided when sigma is the identity (commutative entries).
  std::optional<bool> rep_agrees_up_to_sign;

  bool ok() const noexcept {
    return zero_agrees && degree_agrees && rep_agrees_up_to_sign.value_or(true);
  }
};

SurrogateVerdict det_surrogates_equal(const DetResult& a, const DetResult& b);

/// Batch determinants; OpenMP over matrices, results in input order.
std::vector<DetResult> dieudonne_det_batch(const std::vector<OreMatrix>& ms,
                                           PivotOptions opts = {});

}  // namespace orelim
