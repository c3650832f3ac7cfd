#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hhverify/harness.hpp"

namespace hhverify::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error(ErrorCode::ConfigInvalid, "bad " + what + " value '" + s + "'");
  return v;
}

Interval parse_interval(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw Error(ErrorCode::ConfigInvalid, "interval must be lo,hi");
  Interval iv{parse_double(parts[0], "interval"), parse_double(parts[1], "interval")};
  try {
    validate_interval(iv);
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigInvalid, e.what());
  }
  return iv;
}

std::vector<int> parse_dims(const std::string& s) {
  std::vector<int> dims;
  for (const auto& p : split(s, ',')) {
    const double v = parse_double(p, "dim");
    if (v != static_cast<int>(v)) throw Error(ErrorCode::ConfigInvalid, "dim must be an integer");
    dims.push_back(static_cast<int>(v));
  }
  return dims;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void print_summary(std::ostream& out, const RunSummary& s) {
  out << "checks: " << s.total_checks << "  pass: " << s.passes << "  violations: " << s.violations
      << "  skipped: " << s.skips << '\n';
  if (s.total_checks > 0) {
    out << "worst margin: " << format_double(s.worst_margin) << " (" << s.worst_context << ")\n";
  }
  out << "wall time: " << format_double(s.wall_time) << " s\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Randomized verification of Hermite-Hadamard type operator inequalities", "hhverify"};
  app.require_subcommand(1);

  std::string suite = "all", dims, interval, functions = "sweep", report, format = "json";
  int trials = 250, probes = 8, panels = QuadratureSpec{}.panels, nodes = QuadratureSpec{}.nodes_per_panel;
  std::uint64_t seed = kDefaultSeed;
  Tolerance tol;
  bool allow_signed = false;
  unsigned threads = 0;

  auto* verify = app.add_subcommand("verify", "Run inequality suites on random Hermitian matrices");
  verify->add_option("--suite", suite, "Comma separated suite ids or 'all'");
  verify->add_option("--dim", dims, "Comma separated dimensions");
  verify->add_option("--trials", trials, "Random (A, B) pairs per dimension");
  verify->add_option("--probes", probes, "Unit vectors per pair");
  verify->add_option("--interval", interval, "Spectral interval lo,hi");
  verify->add_option("--functions", functions, "Function pair f,g or 'sweep'");
  verify->add_option("--seed", seed, "Master seed");
  verify->add_option("--tol-abs", tol.abs, "Absolute tolerance");
  verify->add_option("--tol-rel", tol.rel, "Relative tolerance");
  verify->add_option("--quad-panels", panels, "Quadrature panels");
  verify->add_option("--quad-nodes", nodes, "Gauss-Legendre nodes per panel");
  verify->add_option("--report", report, "Report output path");
  verify->add_option("--format", format, "json or csv");
  verify->add_flag("--allow-signed", allow_signed, "Also run suites that assume f, g >= 0 on signed functions");
  verify->add_option("--threads", threads, "Worker threads (0 = HHVERIFY_THREADS or hardware)");

  std::string cert_function, cert_interval = "0,1";
  int cert_dim = 2, cert_trials = 1000;
  std::uint64_t cert_seed = kDefaultSeed;
  auto* certify = app.add_subcommand("certify-convex", "Search for operator convexity violations");
  certify->add_option("--function", cert_function, "Catalog function id")->required();
  certify->add_option("--interval", cert_interval, "Interval lo,hi");
  certify->add_option("--dim", cert_dim, "Matrix dimension");
  certify->add_option("--trials", cert_trials, "Random trials");
  certify->add_option("--seed", cert_seed, "Master seed");

  std::uint64_t ex_seed = kDefaultSeed;
  std::string ex_report, ex_format = "json";
  int ex_trials = 250;
  auto* example = app.add_subcommand("example", "Run the identity/square worked example");
  example->add_option("--seed", ex_seed, "Master seed");
  example->add_option("--report", ex_report, "Report output path");
  example->add_option("--format", ex_format, "json or csv");
  example->add_option("--trials", ex_trials, "Trials per dimension and interval");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (verify->parsed()) {
      SuiteConfig config;
      config.suites = split(suite, ',');
      if (!dims.empty()) config.dims = parse_dims(dims);
      config.trials = trials;
      config.probes = probes;
      if (!interval.empty()) config.interval = parse_interval(interval);
      if (functions != "sweep") {
        const auto ids = split(functions, ',');
        if (ids.size() != 2) throw Error(ErrorCode::ConfigInvalid, "--functions expects f,g or sweep");
        config.functions = std::make_pair(ids[0], ids[1]);
      }
      config.seed = seed;
      config.tol = tol;
      config.quad = {panels, nodes};
      config.report_path = report;
      config.format = parse_report_format(format);
      config.allow_signed = allow_signed;
      config.threads = threads;
      const SuiteRun run = run_suite(config);
      print_summary(out, run.summary);
      return run.summary.exit_code();
    }
    if (certify->parsed()) {
      const CertifyOutcome outcome =
          certify_convex_command(cert_function, parse_interval(cert_interval), cert_dim, cert_trials, cert_seed);
      out << outcome.function.id() << " [" << to_string(outcome.function.convexity()) << "]: "
          << to_string(outcome.verdict.status) << " after "
          << outcome.verdict.trials_used << " trials\n";
      if (outcome.verdict.counterexample) {
        const auto& ce = *outcome.verdict.counterexample;
        out << "counterexample: trial " << ce.trial_index << ", lambda " << format_double(ce.lambda)
            << ", min eigenvalue of gap " << format_double(ce.min_eig_of_gap) << '\n';
      }
      if (outcome.replayed_gap) out << "replayed gap: " << format_double(*outcome.replayed_gap) << '\n';
      out << (outcome.matches ? "matches catalog tag\n" : "MISMATCH with catalog tag\n");
      return outcome.exit_code();
    }
    ExampleConfig config;
    config.seed = ex_seed;
    config.report_path = ex_report;
    config.format = parse_report_format(ex_format);
    config.trials = ex_trials;
    const SuiteRun run = example_command(config);
    print_summary(out, run.summary);
    return run.summary.exit_code();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hhverify::cli
