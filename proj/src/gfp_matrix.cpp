#include "orelim/gfp_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "orelim/error.hpp"

namespace orelim {
namespace detail {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

GfpMatrix GfpMatrix::identity(std::uint64_t p, std::size_t n) {
  GfpMatrix id(p, n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1 % p;
  return id;
}

bool GfpMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::uint64_t v) { return v == 0; });
}

std::size_t GfpMatrix::rank() const {
  GfpMatrix a = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && a(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a(r, j), a(piv, j));
    const std::uint64_t inv = detail::invmod(a(r, c), p_);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (a(i, c) == 0) continue;
      const std::uint64_t f = detail::mulmod(a(i, c), inv, p_);
      for (std::size_t j = c; j < cols_; ++j)
        a(i, j) = detail::submod(a(i, j), detail::mulmod(f, a(r, j), p_), p_);
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<std::uint64_t>> GfpMatrix::solve(
    const std::vector<std::uint64_t>& b) const {
  if (b.size() != rows_)
    fail(ErrorCode::IndexOutOfRange, "GfpMatrix::solve: size mismatch");
  // Augmented elimination to reduced row echelon form.
  const std::size_t w = cols_ + 1;
  std::vector<std::uint64_t> a(rows_ * w);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) a[i * w + j] = (*this)(i, j);
    a[i * w + cols_] = b[i] % p_;
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && a[piv * w + c] == 0) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < w; ++j) std::swap(a[r * w + j], a[piv * w + j]);
    const std::uint64_t inv = detail::invmod(a[r * w + c], p_);
    for (std::size_t j = 0; j < w; ++j) a[r * w + j] = detail::mulmod(a[r * w + j], inv, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || a[i * w + c] == 0) continue;
      const std::uint64_t f = a[i * w + c];
      for (std::size_t j = 0; j < w; ++j)
        a[i * w + j] =
            detail::submod(a[i * w + j], detail::mulmod(f, a[r * w + j], p_), p_);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows_; ++i)
    if (a[i * w + cols_] != 0) return std::nullopt;
  std::vector<std::uint64_t> x(cols_, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i * w + cols_];
  return x;
}

GfpMatrix operator*(const GfpMatrix& a, const GfpMatrix& b) {
  if (a.cols_ != b.rows_ || a.p_ != b.p_)
    fail(ErrorCode::ContextMismatch, "GfpMatrix product: shape or modulus mismatch");
  GfpMatrix c(a.p_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c(i, j) = detail::addmod(c(i, j), detail::mulmod(aik, b(k, j), a.p_), a.p_);
    }
  return c;
}

std::string GfpMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace orelim
