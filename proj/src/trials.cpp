#include "orelim/trials.hpp"

#include <chrono>
#include <ostream>

#include "orelim/error.hpp"
#include "orelim/modres.hpp"
#include "orelim/random.hpp"

namespace orelim {
namespace {

using Clock = std::chrono::steady_clock;

long long micros_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

}  // namespace

std::vector<TrialRow> run_trials(const TrialSpec& spec) {
  if (spec.trials == 0) fail(ErrorCode::IndexOutOfRange, "trials must be at least 1");
  const Automorphism s1(spec.field, spec.sigma1), s2(spec.field, spec.sigma2);
  Rng rng(spec.seed);
  std::vector<TrialRow> rows;
  for (std::size_t t = 0; t < spec.trials; ++t) {
    const BivarOrePoly f = random_bivar(s1, s2, spec.degree, 1, spec.degree, rng);
    const BivarOrePoly g = random_bivar(s1, s2, spec.degree, 1, spec.degree, rng);

    TrialRow direct{t, "direct", 0, 0, false, "ok"};
    auto start = Clock::now();
    const DetResult d = res_x2_direct(f, g);
    direct.micros = micros_since(start);
    direct.degree = d.degree;
    direct.is_zero = d.is_zero;

    TrialRow modular{t, "modular", 0, 0, false, "ok"};
    start = Clock::now();
    try {
      const ModularResult r = res_x2_modular(f, g, {.pivot = {}, .threads = spec.threads});
      modular.micros = micros_since(start);
      modular.degree = r.det.degree;
      modular.is_zero = r.det.is_zero;
      if (!r.in_base_field || !(r.det.rep == d.rep)) modular.verdict = "mismatch";
    } catch (const Error& e) {
      modular.micros = micros_since(start);
      modular.verdict = std::string(to_string(e.code()));
    }
    direct.verdict = modular.verdict;
    rows.push_back(direct);
    rows.push_back(modular);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<TrialRow>& rows) {
  out << "trial,method,micros,degree,is_zero,verdict\n";
  for (const auto& r : rows) {
    out << r.trial << ',' << r.method << ',' << r.micros << ',';
    if (r.is_zero)
      out << "-inf";
    else
      out << r.degree;
    out << ',' << (r.is_zero ? "true" : "false") << ',' << r.verdict << '\n';
  }
}

}  // namespace orelim
