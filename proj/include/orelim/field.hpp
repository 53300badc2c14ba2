#pragma once

// Exact arithmetic in GF(p^m) and its Frobenius automorphisms.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orelim/gfp_matrix.hpp"

namespace orelim {

/// An element of GF(p^m). The coordinates c_0..c_{m-1} with respect to the
/// power basis 1, t, ..., t^(m-1) are packed as the integer sum c_i p^i, so
/// every value lies in [0, p^m). Arithmetic goes through FieldCtx.
struct FieldElem {
  std::uint64_t packed = 0;

  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// GF(p^m) = GF(p)[t] / (modulus). Immutable once built, shared by pointer.
class FieldCtx {
 public:
  /// Validates p and the modulus. Without a modulus the lexicographically
  /// least monic irreducible of degree m is chosen, ordering candidates by
  /// the packed value of their low coefficients.
  static FieldPtr create(std::uint64_t p, unsigned m,
                         std::optional<std::vector<std::uint64_t>> modulus = {});

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint64_t order() const noexcept { return order_; }
  /// Monic modulus, low coefficient first, size m + 1.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  bool same_field(const FieldCtx& other) const noexcept;
  bool contains(FieldElem a) const noexcept { return a.packed < order_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  /// The class of t (for m = 1 this is the root of the linear modulus).
  FieldElem gen() const noexcept { return gen_; }
  /// Image of an integer in the prime subfield.
  FieldElem from_int(std::int64_t v) const noexcept;
  FieldElem from_coeffs(std::span<const std::uint64_t> coeffs) const;
  std::vector<std::uint64_t> coeffs(FieldElem a) const;

  FieldElem add(FieldElem a, FieldElem b) const noexcept;
  FieldElem sub(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg(FieldElem a) const noexcept;
  FieldElem mul(FieldElem a, FieldElem b) const noexcept;
  /// Throws ZeroElement on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;
  /// a^(p^e), e taken mod m.
  FieldElem frobenius(FieldElem a, std::uint64_t e) const noexcept;

  /// Power basis 1, t, ..., t^(m-1).
  std::vector<FieldElem> prime_basis() const;

  /// Canonical text, highest power first: "t^2 + 2*t + 1", "0".
  std::string to_string(FieldElem a) const;
  /// "GF(p^m; modulus = c_0 + c_1*t + ... + t^m)".
  std::string spec() const;

 private:
  FieldCtx(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus);

  void unpack(FieldElem a, std::uint64_t* out) const noexcept;
  FieldElem pack(const std::uint64_t* digits) const noexcept;
  FieldElem mul_slow(FieldElem a, FieldElem b) const noexcept;
  void build_frobenius_tables();
  void build_log_tables();

  std::uint64_t p_;
  unsigned m_;
  std::uint64_t order_;
  std::vector<std::uint64_t> modulus_;
  std::uint64_t binary_reduction_ = 0;  // p == 2: modulus minus leading bit
  FieldElem gen_{};
  // frobenius_digits_[e][i * m + j]: coordinate j of (t^i)^(p^e).
  std::vector<std::vector<std::uint64_t>> frobenius_digits_;
  std::vector<std::vector<FieldElem>> frobenius_images_;
  std::vector<std::uint32_t> exp_table_;
  std::vector<std::uint32_t> log_table_;
};

/// Frobenius power a -> a^(p^e) on a fixed field.
class Automorphism {
 public:
  Automorphism() = default;
  Automorphism(FieldPtr field, std::uint64_t e);

  const FieldPtr& field() const noexcept { return field_; }
  const FieldCtx& ctx() const noexcept { return *field_; }
  unsigned exponent() const noexcept { return e_; }
  /// Order of the automorphism: m / gcd(e, m).
  unsigned order() const noexcept;
  bool is_identity() const noexcept { return e_ == 0; }

  FieldElem operator()(FieldElem a) const noexcept {
    return field_->frobenius(a, e_);
  }
  /// sigma^k for any integer k (negative powers wrap through the order).
  FieldElem power_apply(std::int64_t k, FieldElem a) const noexcept;

  Automorphism compose(const Automorphism& other) const;
  Automorphism inverse() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.e_ == b.e_ &&
           (a.field_ == b.field_ ||
            (a.field_ && b.field_ && a.field_->same_field(*b.field_)));
  }

 private:
  FieldPtr field_;
  unsigned e_ = 0;
};

/// sigma(a), rejecting values that cannot belong to sigma's field.
FieldElem apply_aut(const Automorphism& sigma, FieldElem a);

/// a * sigma(a) * ... * sigma^(k-1)(a) with k the order of sigma. Two nonzero
/// elements are sigma-conjugate exactly when these agree.
FieldElem sigma_norm(const Automorphism& sigma, FieldElem a);

/// Field homomorphism GF(p^m) -> GF(p^M) fixed by the image of t.
class Embedding {
 public:
  Embedding() = default;
  Embedding(FieldPtr from, FieldPtr to, FieldElem image_of_gen);

  const FieldPtr& source() const noexcept { return from_; }
  const FieldPtr& target() const noexcept { return to_; }
  FieldElem image_of_gen() const noexcept { return image_of_gen_; }

  FieldElem operator()(FieldElem a) const;
  /// Inverse image, or nullopt when b lies outside the embedded subfield.
  std::optional<FieldElem> preimage(FieldElem b) const;

 private:
  FieldPtr from_;
  FieldPtr to_;
  FieldElem image_of_gen_{};
  std::vector<FieldElem> powers_;  // image of t^i
  GfpMatrix columns_;              // M x m, coordinates of powers_
};

struct Extension {
  FieldPtr field;
  Embedding embed;
};

/// GF(p^m) -> GF(p^M) for m | M. The target uses the default modulus and t
/// is sent to the least (by packed value) root of the source modulus.
/// Results are memoized per (source field, M).
Extension extend_field(const FieldPtr& base, unsigned target_degree);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace orelim
