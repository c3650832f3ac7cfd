#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hhverify/catalog.hpp"
#include "hhverify/inequalities.hpp"
#include "hhverify/quadrature.hpp"
#include "hhverify/report.hpp"

namespace hhverify {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr Interval kDefaultInterval{0.0, 1.0};
inline constexpr Interval kDefaultAsyncInterval{-1.0, 0.0};

/// Suite ids in canonical report order.
const std::vector<std::string>& known_suites();
/// Suites that default to the asynchronous interval.
bool is_async_suite(std::string_view id);

struct SuiteConfig {
  std::vector<std::string> suites{"all"};
  std::vector<int> dims{1, 2, 4, 8};
  int trials = 250;
  int probes = 8;
  /// Unset: [0,1], or [-1,0] for the asynchronous suites.
  std::optional<Interval> interval;
  /// Unset: sweep all catalog entries.
  std::optional<std::pair<std::string, std::string>> functions;
  std::uint64_t seed = kDefaultSeed;
  Tolerance tol;
  QuadratureSpec quad;
  std::string report_path;
  ReportFormat format = ReportFormat::Json;
  /// Run the midpoint, cross-product and synchrony bounds on signed functions too.
  bool allow_signed = false;
  /// 0 defers to HHVERIFY_THREADS, then to the hardware.
  unsigned threads = 0;
  int lemma_grid_points = 101;

  /// Throws ConfigInvalid on unknown ids, empty or non-positive counts, bad
  /// intervals or quadrature settings.
  void validate() const;
};

struct RunSummary {
  int total_checks = 0;
  int passes = 0;
  int violations = 0;
  int skips = 0;
  double worst_margin = 0.0;
  std::string worst_context;
  double wall_time = 0.0;

  /// 0 when no violation was recorded, else 2.
  int exit_code() const { return violations == 0 ? 0 : 2; }
};

struct SuiteRun {
  std::vector<InequalityReport> records;
  RunSummary summary;
};

std::vector<std::string> expand_suites(const std::vector<std::string>& requested);

RunSummary summarize(const std::vector<InequalityReport>& records);

/// Worker count: requested, else HHVERIFY_THREADS (0 = auto), else hardware.
unsigned resolve_thread_count(unsigned requested);

/// Draws every (suite, functions, dim, trial, probe) check, sorts records
/// canonically and writes the report when a path is configured.
SuiteRun run_suite(const SuiteConfig& config);

struct CertifyOutcome {
  ScalarFunction function;
  ConvexityVerdict verdict;
  /// Violation expected from the catalog tag; unset for UNKNOWN.
  std::optional<bool> expect_violation;
  bool matches = true;
  /// Gap recomputed from the stored counterexample.
  std::optional<double> replayed_gap;

  int exit_code() const { return matches ? 0 : 2; }
};

CertifyOutcome certify_convex_command(std::string_view function_id, const Interval& interval, int dim, int trials,
                                      std::uint64_t seed);

struct ExampleConfig {
  std::uint64_t seed = kDefaultSeed;
  std::vector<int> dims{1, 2, 3, 4};
  int trials = 250;
  int probes = 8;
  std::string report_path;
  ReportFormat format = ReportFormat::Json;
  QuadratureSpec quad;
  Tolerance tol;
};

SuiteRun example_command(const ExampleConfig& config);

}  // namespace hhverify
