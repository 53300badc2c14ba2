#pragma once

// The Ore algebra A[x1; sigma1][x2; sigma2] with x1 x2 = x2 x1.

#include <cstddef>
#include <string>
#include <vector>

#include "orelim/ore_poly.hpp"

namespace orelim {

/// sum_i a_i(x1) x2^i, each a_i an OrePoly over (field, sigma1).
class BivarOrePoly {
 public:
  BivarOrePoly() = default;
  BivarOrePoly(Automorphism sigma1, Automorphism sigma2);
  BivarOrePoly(Automorphism sigma1, Automorphism sigma2, std::vector<OrePoly> coeffs);

  static BivarOrePoly constant(const Automorphism& sigma1, const Automorphism& sigma2,
                               FieldElem c);
  /// x1^i x2^j
  static BivarOrePoly x1_pow(const Automorphism& sigma1, const Automorphism& sigma2,
                             std::size_t i);
  static BivarOrePoly x2_pow(const Automorphism& sigma1, const Automorphism& sigma2,
                             std::size_t j);

  const Automorphism& sigma1() const noexcept { return sigma1_; }
  const Automorphism& sigma2() const noexcept { return sigma2_; }
  const FieldCtx& ctx() const noexcept { return sigma1_.ctx(); }
  const std::vector<OrePoly>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept { return c_.empty(); }
  /// deg_{x2}; kNegInfDegree for zero.
  int degree_x2() const noexcept {
    return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1;
  }
  /// max_i deg_{x1} a_i; kNegInfDegree for zero.
  int degree_x1() const noexcept;
  /// Coefficient of x2^i (zero outside the stored range).
  OrePoly coeff_x2(std::size_t i) const;
  OrePoly leading_x2() const;

  bool same_ring(const BivarOrePoly& o) const noexcept {
    return sigma1_ == o.sigma1_ && sigma2_ == o.sigma2_;
  }

  BivarOrePoly operator-() const;
  friend BivarOrePoly operator+(const BivarOrePoly& f, const BivarOrePoly& g);
  friend BivarOrePoly operator-(const BivarOrePoly& f, const BivarOrePoly& g);
  /// (a(x1) x2^i)(b(x1) x2^j) = a(x1) sigma2^i(b(x1)) x2^(i+j)
  friend BivarOrePoly operator*(const BivarOrePoly& f, const BivarOrePoly& g);

  friend bool operator==(const BivarOrePoly& f, const BivarOrePoly& g) {
    return f.same_ring(g) && f.c_ == g.c_;
  }

  /// x2^k * f: the coefficient of x2^(i+k) is sigma2^k(a_i).
  BivarOrePoly shift_left(std::size_t k) const;

  /// "(x1 + t)*x2^2 + (t*x1)*x2 + 1"
  std::string to_string() const;

 private:
  void normalize();

  Automorphism sigma1_;
  Automorphism sigma2_;
  std::vector<OrePoly> c_;
};

}  // namespace orelim
