#pragma once

// Univariate skew polynomials A[x; sigma] with x a = sigma(a) x.

#include <climits>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orelim/field.hpp"

namespace orelim {

/// Degree of the zero polynomial.
inline constexpr int kNegInfDegree = INT_MIN;

/// Dense skew polynomial sum c_i x^i, coefficients written on the left.
/// The same type represents formal sigma-polynomials sum c_i sigma^i, whose
/// product is operator composition.
class OrePoly {
 public:
  OrePoly() = default;
  explicit OrePoly(Automorphism sigma) : sigma_(std::move(sigma)) {}
  OrePoly(Automorphism sigma, std::vector<FieldElem> coeffs);

  static OrePoly constant(const Automorphism& sigma, FieldElem c);
  /// c * x^k
  static OrePoly monomial(const Automorphism& sigma, FieldElem c, std::size_t k);

  const Automorphism& sigma() const noexcept { return sigma_; }
  const FieldCtx& ctx() const noexcept { return sigma_.ctx(); }
  const std::vector<FieldElem>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept {
    return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1;
  }
  /// Coefficient of x^i, zero past the end.
  FieldElem coeff(std::size_t i) const noexcept {
    return i < c_.size() ? c_[i] : FieldElem{};
  }
  FieldElem leading() const noexcept { return c_.empty() ? FieldElem{} : c_.back(); }

  bool same_ring(const OrePoly& other) const noexcept { return sigma_ == other.sigma_; }

  OrePoly operator-() const;
  friend OrePoly operator+(const OrePoly& f, const OrePoly& g);
  friend OrePoly operator-(const OrePoly& f, const OrePoly& g);
  /// (a_i x^i)(b_j x^j) = a_i sigma^i(b_j) x^(i+j)
  friend OrePoly operator*(const OrePoly& f, const OrePoly& g);
  /// Left scalar multiple c * f.
  friend OrePoly operator*(FieldElem c, const OrePoly& f);

  friend bool operator==(const OrePoly& f, const OrePoly& g) {
    return f.same_ring(g) && f.c_ == g.c_;
  }

  /// Coefficient-wise image under a field automorphism: used for the
  /// sigma_2-twist of x1-polynomials, which fixes x1.
  OrePoly map_coeffs(const Automorphism& tau) const;

  /// "(t + 1)*x^2 + t*x + 1" with the given indeterminate name.
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize() noexcept;

  Automorphism sigma_;
  std::vector<FieldElem> c_;
};

struct DivMod {
  OrePoly quotient;
  OrePoly remainder;
};

/// a = q * b + r with deg r < deg b; q multiplies b from the left.
DivMod right_divmod(const OrePoly& a, const OrePoly& b);
/// a = b * q + r with deg r < deg b.
DivMod left_divmod(const OrePoly& a, const OrePoly& b);
/// Monic greatest common right divisor.
OrePoly gcrd(const OrePoly& f, const OrePoly& g);
/// lc(f)^-1 * f.
OrePoly make_monic(const OrePoly& f);

void require_same_ring(const OrePoly& f, const OrePoly& g, const char* where);

}  // namespace orelim
