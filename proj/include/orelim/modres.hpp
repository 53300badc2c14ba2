#pragma once

// Elimination by operator evaluation: the diagonal of the operator-entry
// Sylvester matrix is applied as a composition chain at a GF(p)-basis of the
// working field, and the eliminant's coefficients are recovered from the
// Moore system sum_i r_i sigma1^i(a_j) = value_j.

#include <cstddef>
#include <span>
#include <vector>

#include "orelim/opeval.hpp"
#include "orelim/resultant.hpp"

namespace orelim {

struct ModularPlan {
  FieldPtr base;
  Extension ext;         // working field GF(p^M) and the embedding into it
  Automorphism sigma1;   // lift of sigma1 to the working field
  Automorphism sigma2;   // lift of sigma2 to the working field
  std::vector<FieldElem> points;  // GF(p)-basis of the working field
  int degree_bound = 0;           // D; D < order(sigma1)

  const FieldPtr& work_field() const noexcept { return ext.field; }
};

/// Chooses the least M with m | M, admitting a lift sigma1' = Frobenius(e')
/// with e' = e1 (mod m) whose order on GF(p^M) exceeds the degree bound.
/// For gcd(e1, M) = 1 this is the least M > D.
ModularPlan plan_modular(const BivarOrePoly& f, const BivarOrePoly& g);

/// Carries f into the working field with the lifted automorphisms.
BivarOrePoly embed_bivar(const BivarOrePoly& f, const ModularPlan& plan);
OrePoly embed_ore(const OrePoly& a, const Embedding& embed, const Automorphism& sigma);

/// True iff the leading x2-coefficient of f acts as the zero map on the
/// working field.
bool check_bad_eval(const BivarOrePoly& f, const ModularPlan& plan);

struct PartialEval {
  FieldElem point;
  FieldElem value;
};

/// d_1*(d_2*( ... d_k*(a))) for every point; reference implementation.
std::vector<FieldElem> evaluate_chain_serial(std::span<const LinearizedOp> chain,
                                             std::span<const FieldElem> points);
/// OpenMP over points; identical output for every thread count.
/// threads <= 0 uses the OpenMP default.
std::vector<FieldElem> evaluate_chain(std::span<const LinearizedOp> chain,
                                      std::span<const FieldElem> points, int threads = 0);

/// Moore matrix (sigma^i(a_j)), one row per point, `unknowns` columns.
std::vector<FieldElem> moore_matrix(const Automorphism& sigma, std::span<const FieldElem> points,
                                    std::size_t unknowns, int threads = 0);

/// Coefficients r_0..r_{unknowns-1} with sum_i r_i sigma^i(a_j) = values_j.
/// Throws SingularMooreSystem if the columns are dependent or the system is
/// inconsistent.
std::vector<FieldElem> solve_moore(const Automorphism& sigma, std::span<const FieldElem> points,
                                   std::span<const FieldElem> values, std::size_t unknowns,
                                   int threads = 0);

struct ModularOptions {
  PivotOptions pivot{};
  int threads = 0;
};

struct ModularResult {
  DetResult det;         // representative mapped back to the input ring when possible
  bool in_base_field = true;
  OrePoly rep_work;      // representative over the working field
  ModularPlan plan;
  std::vector<LinearizedOp> chain;  // diagonal operators d_i(sigma1)
  std::vector<PartialEval> evals;
};

ModularResult res_x2_modular(const BivarOrePoly& f, const BivarOrePoly& g,
                             const ModularOptions& opts = {});

struct ConjugacyClass {
  FieldElem norm;
  std::vector<FieldElem> members;
};

struct ConjugacyReport {
  std::vector<ConjugacyClass> classes;  // sorted by norm
  std::size_t zero_points = 0;          // zero has no class
};

/// Groups points by sigma_norm, i.e. by sigma-conjugacy class.
ConjugacyReport conjugacy_audit(std::span<const FieldElem> points, const Automorphism& sigma);

}  // namespace orelim
