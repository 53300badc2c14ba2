#include "orelim/resultant.hpp"

#include <algorithm>

#include "orelim/error.hpp"

namespace orelim {

SylvesterMatrix sylvester_matrix(const BivarOrePoly& f, const BivarOrePoly& g) {
  if (!f.same_ring(g)) fail(ErrorCode::RingMismatch, "sylvester_matrix: operands in different rings");
  if (f.is_zero() || g.is_zero())
    fail(ErrorCode::ZeroPolynomial, "sylvester_matrix: zero input polynomial");
  const int n = f.degree_x2(), m = g.degree_x2();
  if (n == 0 && m == 0)
    fail(ErrorCode::BothConstant, "sylvester_matrix: both inputs are constant in x2");

  const std::size_t dim = static_cast<std::size_t>(n + m);
  OreMatrix mat(f.sigma1(), dim);
  auto fill_row = [&](std::size_t row, const BivarOrePoly& shifted) {
    for (std::size_t c = 0; c < dim; ++c) mat(row, c) = shifted.coeff_x2(dim - 1 - c);
  };
  for (int i = 1; i <= m; ++i) fill_row(static_cast<std::size_t>(i - 1), f.shift_left(m - i));
  for (int i = 1; i <= n; ++i) fill_row(static_cast<std::size_t>(m + i - 1), g.shift_left(n - i));
  return {std::move(mat), n, m};
}

DetResult res_x2_direct(const BivarOrePoly& f, const BivarOrePoly& g, PivotOptions opts) {
  return dieudonne_det(sylvester_matrix(f, g).inner, opts);
}

int sylvester_degree_bound(const BivarOrePoly& f, const BivarOrePoly& g) {
  const int n = std::max(f.degree_x2(), 0), m = std::max(g.degree_x2(), 0);
  const int a = std::max(f.degree_x1(), 0), b = std::max(g.degree_x1(), 0);
  return m * a + n * b;
}

}  // namespace orelim
