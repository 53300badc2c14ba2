#pragma once

// Brute-force references for the test suites. Nothing here calls the skew
// multiplication, the triangularization or the Frobenius tables it checks.

#include <cstdint>
#include <vector>

#include "orelim/bivar.hpp"

namespace orelim::oracle {

/// Commutative polynomial over GF(p), low coefficient first, trimmed.
using PrimePoly = std::vector<std::uint64_t>;
/// Commutative bivariate polynomial: index = power of x2, entry = x1-poly.
using CommBivar = std::vector<PrimePoly>;

PrimePoly prime_add(const PrimePoly& a, const PrimePoly& b, std::uint64_t p);
PrimePoly prime_neg(const PrimePoly& a, std::uint64_t p);
PrimePoly prime_mul(const PrimePoly& a, const PrimePoly& b, std::uint64_t p);

/// Read-off of a polynomial over a prime field GF(p) (m = 1).
PrimePoly to_prime_poly(const OrePoly& f);
CommBivar to_commutative(const BivarOrePoly& f);

/// Cofactor-expansion determinant over GF(p)[x].
PrimePoly classical_det(const std::vector<std::vector<PrimePoly>>& m, std::uint64_t p);
/// Textbook Sylvester resultant with respect to x2. Throws ZeroPolynomial.
PrimePoly classical_resultant(const CommBivar& f, const CommBivar& g, std::uint64_t p);
CommBivar comm_bivar_mul(const CommBivar& f, const CommBivar& g, std::uint64_t p);

/// sigma^k(a) computed as a^(p^(e k)) by plain exponentiation.
FieldElem pow_frobenius(const Automorphism& sigma, std::uint64_t k, FieldElem a);

/// Term-by-term product, commuting x past one coefficient at a time.
OrePoly naive_ore_mul(const OrePoly& f, const OrePoly& g);
/// Term-by-term product in A[x1; sigma1][x2; sigma2].
BivarOrePoly naive_bivar_mul(const BivarOrePoly& f, const BivarOrePoly& g);

/// Classes of a ~ sigma(c) a c^-1 over nonzero c, each sorted, classes
/// ordered by their least element. Throws FieldTooLarge above 2^12.
std::vector<std::vector<FieldElem>> brute_conjugacy(const Automorphism& sigma);

}  // namespace orelim::oracle
