#include "orelim/random.hpp"

namespace orelim {

FieldElem random_elem(const FieldCtx& field, Rng& rng) {
  return FieldElem{std::uniform_int_distribution<std::uint64_t>(0, field.order() - 1)(rng)};
}

FieldElem random_nonzero(const FieldCtx& field, Rng& rng) {
  return FieldElem{std::uniform_int_distribution<std::uint64_t>(1, field.order() - 1)(rng)};
}

OrePoly random_ore(const Automorphism& sigma, int max_degree, Rng& rng, bool exact) {
  const int d = exact ? max_degree : std::uniform_int_distribution<int>(0, max_degree)(rng);
  std::vector<FieldElem> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = random_elem(sigma.ctx(), rng);
  c.back() = random_nonzero(sigma.ctx(), rng);
  return OrePoly(sigma, std::move(c));
}

BivarOrePoly random_bivar(const Automorphism& sigma1, const Automorphism& sigma2, int max_x1,
                          int min_x2, int max_x2, Rng& rng) {
  const int d2 = std::uniform_int_distribution<int>(min_x2, max_x2)(rng);
  std::vector<OrePoly> c;
  for (int i = 0; i <= d2; ++i) {
    if (i < d2 && std::uniform_int_distribution<int>(0, 4)(rng) == 0)
      c.emplace_back(sigma1);
    else
      c.push_back(random_ore(sigma1, max_x1, rng));
  }
  return BivarOrePoly(sigma1, sigma2, std::move(c));
}

OreMatrix random_matrix(const Automorphism& sigma, std::size_t n, int max_degree, Rng& rng) {
  OreMatrix m(sigma, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::uniform_int_distribution<int>(0, 3)(rng) != 0) m(i, j) = random_ore(sigma, max_degree, rng);
  return m;
}

}  // namespace orelim
