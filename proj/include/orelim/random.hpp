#pragma once

// Seeded generators for property tests and benchmarks.

#include <random>

#include "orelim/bivar.hpp"
#include "orelim/skewdet.hpp"

namespace orelim {

using Rng = std::mt19937_64;

FieldElem random_elem(const FieldCtx& field, Rng& rng);
FieldElem random_nonzero(const FieldCtx& field, Rng& rng);

/// Degree uniform in [0, max_degree] (exactly max_degree when exact); the
/// leading coefficient is nonzero.
OrePoly random_ore(const Automorphism& sigma, int max_degree, Rng& rng, bool exact = false);

/// deg_{x2} uniform in [min_x2, max_x2] with nonzero leading x2-coefficient;
/// every x2-coefficient has x1-degree at most max_x1.
BivarOrePoly random_bivar(const Automorphism& sigma1, const Automorphism& sigma2, int max_x1,
                          int min_x2, int max_x2, Rng& rng);

/// Entries of degree <= max_degree, each zero with probability 1/4.
OreMatrix random_matrix(const Automorphism& sigma, std::size_t n, int max_degree, Rng& rng);

}  // namespace orelim
