// Command-line front end: gamma values, truncated sums, single checks,
// certificate verification and batch suites.
//
// Exit codes: 0 all asserted checks hold, 1 a check failed, 2 usage or
// domain error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "supercong/certificate.hpp"
#include "supercong/congruence.hpp"
#include "supercong/gamma.hpp"
#include "supercong/report.hpp"

using namespace supercong;

namespace {

constexpr int kHolds = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

Execution execution(bool serial) { return serial ? Execution::Serial : Execution::Parallel; }

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw ConfigError("format must be json or csv");
}

struct GammaArgs {
  std::uint64_t p = 0;
  int precision = 0;
  std::string x;
  bool serial = false;
};

int run_gamma(const GammaArgs& a) {
  const ContextPtr ctx = make_context(a.p, a.precision);
  const PadicNum g = gamma_rational(parse_rational(a.x), ctx, execution(a.serial));
  std::cout << "v=" << g.valuation() << " u=" << g.unit() << " (mod " << a.p << "^"
            << a.precision << ")\n";
  return kHolds;
}

struct SumArgs {
  std::uint64_t p = 0;
  int precision = 0;
  std::uint64_t m = 0;
  bool exact = false;
  bool serial = false;
};

int run_sum(const SumArgs& a) {
  const ContextPtr ctx = make_context(a.p, a.precision);
  const PadicNum s = sum_padic(a.m, ctx, execution(a.serial));
  std::cout << "S(" << a.m << ") = " << s.to_string_mod(a.precision) << " (mod " << a.p << "^"
            << a.precision << ")\n";
  if (a.exact) std::cout << "exact: " << to_string(sum_exact(a.m)) << "\n";
  return kHolds;
}

struct CheckArgs {
  std::string tag;
  std::uint64_t p = 0;
  long r = 0;
  int guard = 4;
  std::uint64_t desk_cap = kDefaultDeskCap;
  std::string out;
  std::string format = "json";
};

int run_check(const CheckArgs& a, bool r_given) {
  const auto tag = parse_tag(a.tag);
  if (!tag) throw ConfigError("unknown case '" + a.tag + "'");
  TheoremCase c{*tag, a.p, a.r};
  if (!c.uses_r()) {
    c.r = 1;
  } else if (!r_given) {
    throw ConfigError(tag_name(*tag) + " needs --r");
  }
  RunConfig config;
  config.guard_digits = a.guard;
  config.desk_cap = a.desk_cap;
  config.validate();
  const CongruenceReport report = check(c, config.engine());
  std::cout << summary_line(report) << "\n";
  if (!a.out.empty()) write_output(a.out, render({report}, parse_format(a.format)));
  if (report.skipped) return kHolds;
  return report.holds ? kHolds : kFailed;
}

struct CertifyArgs {
  std::string path;
  long grid = 25;
  bool serial = false;
};

// Returns true when both verifications pass; prints one verdict line.
bool certify(const Certificate& c, long grid, Execution exec, std::ostream& out) {
  bool symbolic = false;
  std::string reason;
  try {
    symbolic = verify_certificate_symbolic(c);
  } catch (const std::exception& e) {
    reason = e.what();
  }
  const auto failure = first_grid_failure(c, grid, exec);
  out << "symbolic: " << (symbolic ? "PASS" : "FAIL") << ", numeric: "
      << (failure ? "FAIL" : "PASS") << "\n";
  if (!reason.empty()) out << "  symbolic check: " << reason << "\n";
  if (failure) {
    out << "  first numeric failure at n=" << failure->first << ", k=" << failure->second << "\n";
  }
  return symbolic && !failure;
}

int run_certify(const CertifyArgs& a) {
  Certificate c;
  try {
    c = load_certificate(a.path);
  } catch (const ParseError& e) {
    std::cerr << a.path << ":" << e.line() << ":" << e.column() << ": " << e.message() << "\n";
    return kUsage;
  }
  if (a.grid < 0) throw ConfigError("--grid must be non-negative");
  const bool ok = certify(c, a.grid, execution(a.serial), std::cout);
  std::cout << "wz pair: " << (is_wz_pair(c) ? "yes" : "no") << "\n";
  return ok ? kHolds : kFailed;
}

struct SuiteArgs {
  std::string config_path;
  std::optional<int> workers;
  std::string out;
  std::string format;
  std::optional<std::uint64_t> desk_cap;
  std::optional<int> guard;
  std::string cases;
  bool no_timing = false;
};

int run_suite(const SuiteArgs& a) {
  std::string path = a.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("SUPERCONG_CONFIG")) path = env;
  }
  RunConfig config = path.empty() ? RunConfig{} : load_config(path);
  if (a.workers) config.workers = *a.workers;
  if (!a.out.empty()) config.output_path = a.out;
  if (!a.format.empty()) config.set("output_format", a.format);
  if (a.desk_cap) config.desk_cap = *a.desk_cap;
  if (a.guard) config.guard_digits = *a.guard;
  if (!a.cases.empty()) config.cases = parse_case_list(a.cases);
  config.validate();

  const std::vector<TheoremCase> cases = config.cases.empty() ? default_battery() : config.cases;
  const auto reports = batch(cases, config.workers, config.engine());

  int failures = 0;
  int skipped = 0;
  int informational = 0;
  for (const auto& r : reports) {
    std::cerr << summary_line(r) << "\n";
    if (asserted_failure(r)) ++failures;
    if (r.skipped) ++skipped;
    if (r.informational) ++informational;
  }
  for (const auto& cert_path : config.certificate_paths) {
    std::cerr << cert_path << ": ";
    try {
      if (!certify(load_certificate(cert_path), config.certificate_grid, Execution::Parallel,
                   std::cerr)) {
        ++failures;
      }
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      ++failures;
    }
  }
  std::cerr << reports.size() << " cases, " << failures << " asserted failures, " << skipped
            << " skipped, " << informational << " informational\n";
  write_output(config.output_path, render(reports, config.output_format, !a.no_timing));
  return failures == 0 ? kHolds : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic verification of truncated (8n+1)(1/4)_n^4/(1)_n^4 supercongruences"};
  app.require_subcommand(1);

  GammaArgs gamma_args;
  auto* gamma_cmd = app.add_subcommand("gamma", "Morita Gamma_p(x) modulo p^prec");
  gamma_cmd->add_option("--p", gamma_args.p, "odd prime")->required();
  gamma_cmd->add_option("--prec", gamma_args.precision, "digits of precision")->required();
  gamma_cmd->add_option("--x", gamma_args.x, "rational argument, e.g. 1/4")->required();
  gamma_cmd->add_flag("--serial", gamma_args.serial, "use the serial kernel");

  SumArgs sum_args;
  auto* sum_cmd = app.add_subcommand("sum", "S(m) modulo p^prec");
  sum_cmd->add_option("--p", sum_args.p, "odd prime")->required();
  sum_cmd->add_option("--prec", sum_args.precision, "digits of precision")->required();
  sum_cmd->add_option("--m", sum_args.m, "truncation index")->required();
  sum_cmd->add_flag("--exact", sum_args.exact, "also print the exact rational (m <= 2000)");
  sum_cmd->add_flag("--serial", sum_args.serial, "use the serial kernel");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "check one congruence case");
  check_cmd->add_option("--case", check_args.tag, "case tag, e.g. thm1_1, g2, lemma3_2")
      ->required();
  check_cmd->add_option("--p", check_args.p, "prime")->required();
  auto* r_opt = check_cmd->add_option("--r", check_args.r, "exponent r");
  check_cmd->add_option("--guard", check_args.guard, "guard digits");
  check_cmd->add_option("--desk-cap", check_args.desk_cap, "largest admissible p^r");
  check_cmd->add_option("--out", check_args.out, "report file");
  check_cmd->add_option("--format", check_args.format, "json or csv");

  CertifyArgs certify_args;
  auto* certify_cmd = app.add_subcommand("certify", "verify a Zeilberger certificate file");
  certify_cmd->add_option("file", certify_args.path, "certificate file")->required();
  certify_cmd->add_option("--grid", certify_args.grid, "numeric grid bound n_max");
  certify_cmd->add_flag("--serial", certify_args.serial, "use the serial grid check");

  SuiteArgs suite_args;
  auto* suite_cmd = app.add_subcommand("suite", "run a batch of cases (default: full battery)");
  suite_cmd->add_option("--config", suite_args.config_path,
                        "key = value config file (default: $SUPERCONG_CONFIG)");
  suite_cmd->add_option("--workers", suite_args.workers, "concurrent cases");
  suite_cmd->add_option("--out", suite_args.out, "report file (default: stdout)");
  suite_cmd->add_option("--format", suite_args.format, "json or csv");
  suite_cmd->add_option("--desk-cap", suite_args.desk_cap, "largest admissible p^r");
  suite_cmd->add_option("--guard", suite_args.guard, "guard digits");
  suite_cmd->add_option("--cases", suite_args.cases, "TAG:p[:r],... instead of the battery");
  suite_cmd->add_flag("--no-timing", suite_args.no_timing, "omit wall_ms (comparable output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kHolds : kUsage;
  }

  try {
    if (*gamma_cmd) return run_gamma(gamma_args);
    if (*sum_cmd) return run_sum(sum_args);
    if (*check_cmd) return run_check(check_args, r_opt->count() > 0);
    if (*certify_cmd) return run_certify(certify_args);
    if (*suite_cmd) return run_suite(suite_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
