#pragma once

// Timed direct-vs-modular runs on random inputs, one CSV row per method.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "orelim/field.hpp"

namespace orelim {

struct TrialSpec {
  FieldPtr field;
  unsigned sigma1 = 1;
  unsigned sigma2 = 1;
  int degree = 2;  // bound on deg_{x1}; deg_{x2} is drawn from [1, degree]
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  int threads = 0;
};

struct TrialRow {
  std::size_t trial = 0;
  std::string method;  // "direct" or "modular"
  long long micros = 0;
  int degree = 0;      // kNegInfDegree when the eliminant vanishes
  bool is_zero = false;
  std::string verdict; // "ok", "mismatch" or the error code of a failed run
};

std::vector<TrialRow> run_trials(const TrialSpec& spec);

/// Header `trial,method,micros,degree,is_zero,verdict`; degree -inf as "-inf".
void write_csv(std::ostream& out, const std::vector<TrialRow>& rows);

}  // namespace orelim
