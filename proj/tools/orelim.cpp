// orelim: eliminate x2 from a pair of bivariate Ore polynomials.
//
// Exit codes: 0 ok, 2 usage, 3 parse, 4 math domain, 5 internal (including
// a failed `verify`).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "orelim/error.hpp"
#include "orelim/json_io.hpp"
#include "orelim/modres.hpp"
#include "orelim/parse.hpp"
#include "orelim/trials.hpp"

#ifdef ORELIM_WITH_VERIFY
#include "criteria.hpp"
#endif

namespace {

using namespace orelim;
using nlohmann::json;

enum Exit { kOk = 0, kUsage = 2, kParse = 3, kDomain = 4, kInternal = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EliminateArgs {
  std::string field, f, g, method = "direct", pivot = "min-degree";
  unsigned sigma1 = 1, sigma2 = 1;
  bool json = false;
  int threads = 0;
  std::optional<std::uint64_t> seed;
};

struct BenchArgs {
  std::string field = "GF(2^8)";
  unsigned sigma1 = 1, sigma2 = 1;
  int degree = 2;
  long long trials = 10;
  int threads = 0;
  std::optional<std::uint64_t> seed;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv("ORE_ELIM_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used, 0);
    if (env[used] != '\0') throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("ORE_ELIM_SEED is not an integer: ") + env);
  }
}

PivotOptions pivot_options(const EliminateArgs& a) {
  if (a.pivot == "min-degree") return {PivotRule::MinDegree, 0};
  if (a.pivot == "first-nonzero") return {PivotRule::FirstNonzero, 0};
  return {PivotRule::Random, resolve_seed(a.seed)};
}

long long micros_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string eliminant_text(const DetResult& d) {
  return d.is_zero ? "0" : make_monic(d.rep).to_string("x1");
}

json method_json(const std::string& method, const DetResult& d, long long micros) {
  json j = to_json(d);
  j["method"] = method;
  j["eliminant"] = eliminant_text(d);
  j["micros"] = micros;
  return j;
}

void print_text(std::ostream& out, const std::string& method, const DetResult& d, long long micros) {
  out << "method: " << method << '\n'
      << "eliminant: " << eliminant_text(d) << '\n'
      << "representative: " << d.rep.to_string("x1") << '\n'
      << "degree: " << (d.is_zero ? std::string("-inf") : std::to_string(d.degree)) << '\n'
      << "is_zero: " << (d.is_zero ? "true" : "false") << '\n'
      << "micros: " << micros << '\n';
}

int cmd_eliminate(const EliminateArgs& a) {
  const FieldPtr field = parse_field(a.field);
  const Automorphism s1(field, a.sigma1), s2(field, a.sigma2);
  const BivarOrePoly f = parse_bivar(s1, s2, a.f);
  const BivarOrePoly g = parse_bivar(s1, s2, a.g);
  const PivotOptions pivot = pivot_options(a);

  json report{{"field", field->spec()},
              {"sigma1", s1.exponent()},
              {"sigma2", s2.exponent()},
              {"f", f.to_string()},
              {"g", g.to_string()},
              {"results", json::array()}};
  std::ostringstream text;
  text << "field: " << field->spec() << '\n'
       << "sigma1: " << s1.exponent() << "\nsigma2: " << s2.exponent() << '\n'
       << "f: " << f.to_string() << "\ng: " << g.to_string() << '\n';

  std::optional<DetResult> direct;
  if (a.method == "direct" || a.method == "both") {
    const auto start = std::chrono::steady_clock::now();
    direct = res_x2_direct(f, g, pivot);
    const long long us = micros_since(start);
    report["results"].push_back(method_json("direct", *direct, us));
    text << '\n';
    print_text(text, "direct", *direct, us);
  }
  if (a.method == "modular" || a.method == "both") {
    const auto start = std::chrono::steady_clock::now();
    const ModularResult r = res_x2_modular(f, g, {pivot, a.threads});
    const long long us = micros_since(start);
    json j = method_json("modular", r.det, us);
    j["in_base_field"] = r.in_base_field;
    j["plan"] = to_json(r.plan);
    j["audit"] = to_json(conjugacy_audit(r.plan.points, r.plan.sigma1), *r.plan.work_field());
    report["results"].push_back(std::move(j));
    text << '\n';
    print_text(text, "modular", r.det, us);
    text << "work_field: " << r.plan.work_field()->spec() << '\n';
    if (direct) {
      const bool ok = r.in_base_field && r.det.rep == direct->rep;
      report["verdict"] = ok ? "ok" : "mismatch";
      text << "\nverdict: " << (ok ? "ok" : "mismatch") << '\n';
    }
  }
  if (a.json)
    std::cout << report.dump(2) << '\n';
  else
    std::cout << text.str();
  return kOk;
}

int cmd_bench(const BenchArgs& a) {
  if (a.trials < 1) throw UsageError("--trials must be at least 1");
  if (a.degree < 1) throw UsageError("--degree must be at least 1");
  TrialSpec spec;
  spec.field = parse_field(a.field);
  spec.sigma1 = a.sigma1;
  spec.sigma2 = a.sigma2;
  spec.degree = a.degree;
  spec.trials = static_cast<std::size_t>(a.trials);
  spec.seed = resolve_seed(a.seed);
  spec.threads = a.threads;
  const auto rows = run_trials(spec);
  write_csv(std::cout, rows);
  long long direct = 0, modular = 0;
  std::size_t agree = 0;
  for (const auto& r : rows) {
    (r.method == "direct" ? direct : modular) += r.micros;
    agree += r.method == "modular" && r.verdict == "ok";
  }
  std::cerr << "agree " << agree << "/" << spec.trials << ", direct " << direct << " us, modular "
            << modular << " us\n";
  return agree == spec.trials ? kOk : kInternal;
}

int cmd_verify([[maybe_unused]] const std::vector<std::string>& only) {
#ifdef ORELIM_WITH_VERIFY
  return acceptance::run_all(std::cout, only) ? kOk : kInternal;
#else
  std::cerr << "error[internal]: built without the acceptance suite (ORELIM_BUILD_TESTS=OFF)\n";
  return kInternal;
#endif
}

void report_error(bool as_json, const std::string& code, const std::string& msg, int line = 0,
                  int column = 0) {
  std::cerr << "error[" << code << "]";
  if (line > 0) std::cerr << " at " << line << ':' << column;
  std::cerr << ": " << msg << '\n';
  if (as_json) {
    json e{{"code", code}, {"message", msg}};
    if (line > 0) {
      e["line"] = line;
      e["column"] = column;
    }
    std::cout << json{{"error", e}}.dump(2) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elimination for bivariate Ore polynomials over finite fields"};
  app.require_subcommand(1);

  EliminateArgs el;
  auto* elim = app.add_subcommand("eliminate", "Compute res_x2(f, g)");
  elim->add_option("--field", el.field, "e.g. \"GF(2^8)\" or \"GF(3^2; modulus = t^2 + 1)\"")->required();
  elim->add_option("--sigma1", el.sigma1, "Frobenius exponent of sigma1")->capture_default_str();
  elim->add_option("--sigma2", el.sigma2, "Frobenius exponent of sigma2")->capture_default_str();
  elim->add_option("--f", el.f, "first polynomial in x1, x2, t")->required();
  elim->add_option("--g", el.g, "second polynomial in x1, x2, t")->required();
  elim->add_option("--method", el.method)
      ->check(CLI::IsMember({"direct", "modular", "both"}))
      ->capture_default_str();
  elim->add_option("--pivot", el.pivot)
      ->check(CLI::IsMember({"min-degree", "first-nonzero", "random"}))
      ->capture_default_str();
  elim->add_option("--seed", el.seed, "seed for --pivot random (falls back to ORE_ELIM_SEED)");
  elim->add_option("--threads", el.threads, "threads for chain evaluation (0 = OpenMP default)")
      ->check(CLI::NonNegativeNumber);
  elim->add_flag("--json", el.json, "machine-readable output");

  BenchArgs bn;
  auto* bench = app.add_subcommand("bench", "Time direct against modular elimination, CSV on stdout");
  bench->add_option("--field", bn.field)->capture_default_str();
  bench->add_option("--sigma1", bn.sigma1)->capture_default_str();
  bench->add_option("--sigma2", bn.sigma2)->capture_default_str();
  bench->add_option("--degree", bn.degree, "bound on both degrees of the random inputs")->capture_default_str();
  bench->add_option("--trials", bn.trials)->capture_default_str();
  bench->add_option("--seed", bn.seed, "falls back to ORE_ELIM_SEED, then 0");
  bench->add_option("--threads", bn.threads)->check(CLI::NonNegativeNumber);

  std::vector<std::string> only;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("criteria", only, "subset such as A1 A4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const bool as_json = elim->parsed() && el.json;
  try {
    if (elim->parsed()) return cmd_eliminate(el);
    if (bench->parsed()) return cmd_bench(bn);
    return cmd_verify(only);
  } catch (const UsageError& e) {
    report_error(as_json, "usage", e.what());
    return kUsage;
  } catch (const orelim::ParseError& e) {
    report_error(as_json, "ParseError", e.what(), e.line(), e.column());
    return kParse;
  } catch (const Error& e) {
    const std::string code(to_string(e.code()));
    report_error(as_json, code, e.what());
    return e.code() == ErrorCode::ParseError ? kParse : kDomain;
  } catch (const std::exception& e) {
    report_error(as_json, "internal", e.what());
    return kInternal;
  }
}
