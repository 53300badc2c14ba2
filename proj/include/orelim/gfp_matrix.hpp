#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orelim {

/// Dense matrix over the prime field GF(p), row-major, entries in [0, p).
class GfpMatrix {
 public:
  GfpMatrix() = default;
  GfpMatrix(std::uint64_t p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static GfpMatrix identity(std::uint64_t p, std::size_t n);

  std::uint64_t modulus() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint64_t& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  std::uint64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const noexcept;
  std::size_t rank() const;

  /// Solves A x = b for a full-column-rank A; nullopt when b is not in the
  /// column space.
  std::optional<std::vector<std::uint64_t>> solve(
      const std::vector<std::uint64_t>& b) const;

  friend GfpMatrix operator*(const GfpMatrix& a, const GfpMatrix& b);
  friend bool operator==(const GfpMatrix& a, const GfpMatrix& b) = default;

  std::string to_string() const;

 private:
  std::uint64_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> data_;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return (s >= p || s < a) ? s - p : s;
}
inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  return powmod(a, p - 2, p);
}

}  // namespace detail
}  // namespace orelim
