#include "hhverify/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include "hhverify/sampling.hpp"

namespace hhverify {

namespace {

constexpr std::string_view kExampleSuite = "example-3";
constexpr int kMaxDim = 64;
constexpr int kMaxProbes = 256;

enum class SuiteKind { Single, Pair, Example };

SuiteKind kind_of(std::string_view id) {
  if (id == "thm1-chain" || id == "lemma-2.1") return SuiteKind::Single;
  if (id == kExampleSuite) return SuiteKind::Example;
  return SuiteKind::Pair;
}

bool is_remark_suite(std::string_view id) { return id.starts_with("rem-"); }

bool needs_nonnegative(std::string_view id) { return id == "thm3-2.2"; }

bool signed_opt_in_suite(std::string_view id) {
  return id == "thm4-2.7" || id == "thm5-2.9" || is_remark_suite(id);
}

std::string suite_of_record(const std::string& record_id) { return record_id.substr(0, record_id.find('/')); }

bool operator_convex(const ScalarFunction& f) { return f.convexity() == ConvexityClass::OperatorConvex; }

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> ids{
      "thm1-chain", "lemma-2.1", "thm3-2.2", "thm4-2.7", "thm5-2.9", "thm6-3.1", "chain-3.2", "chain-3.3",
      "rem-3.4",    "rem-3.5",   "rem-3.6",  "rem-3.7",  "rem-3.8",  "rem-3.9",  "example-3"};
  return ids;
}

bool is_async_suite(std::string_view id) {
  return id == "chain-3.3" || id == "rem-3.7" || id == "rem-3.8" || id == "rem-3.9";
}

std::vector<std::string> expand_suites(const std::vector<std::string>& requested) {
  const auto& known = known_suites();
  std::vector<bool> selected(known.size(), false);
  for (const auto& id : requested) {
    if (id == "all") {
      for (std::size_t i = 0; i < known.size(); ++i) selected[i] = selected[i] || known[i] != kExampleSuite;
      continue;
    }
    const auto it = std::find(known.begin(), known.end(), id);
    if (it == known.end()) throw Error(ErrorCode::ConfigInvalid, "unknown suite id '" + id + "'");
    selected[static_cast<std::size_t>(it - known.begin())] = true;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < known.size(); ++i) {
    if (selected[i]) out.push_back(known[i]);
  }
  return out;
}

void SuiteConfig::validate() const {
  auto invalid = [](const std::string& what) { return Error(ErrorCode::ConfigInvalid, what); };
  if (suites.empty()) throw invalid("no suites selected");
  expand_suites(suites);
  if (dims.empty()) throw invalid("dimension list is empty");
  for (int d : dims) {
    if (d < 1 || d > kMaxDim) throw invalid("dimension " + std::to_string(d) + " outside [1, 64]");
  }
  if (trials < 1) throw invalid("trials must be >= 1");
  if (probes < 1 || probes > kMaxProbes) throw invalid("probes must be in [1, 256]");
  if (lemma_grid_points < 3) throw invalid("lemma grid needs >= 3 points");
  if (!(tol.abs >= 0.0) || !(tol.rel >= 0.0) || !std::isfinite(tol.abs) || !std::isfinite(tol.rel)) {
    throw invalid("tolerances must be finite and nonnegative");
  }
  try {
    if (interval) validate_interval(*interval);
    quad.validate();
    if (functions) {
      find_function(functions->first);
      find_function(functions->second);
    }
  } catch (const Error& e) {
    throw invalid(e.what());
  }
}

RunSummary summarize(const std::vector<InequalityReport>& records) {
  RunSummary s;
  bool have_worst = false;
  for (const auto& r : records) {
    if (r.verdict == Verdict::Skip) {
      ++s.skips;
      continue;
    }
    ++s.total_checks;
    if (r.verdict == Verdict::Pass) {
      ++s.passes;
    } else {
      ++s.violations;
    }
    if (!have_worst || r.margin < s.worst_margin) {
      have_worst = true;
      s.worst_margin = r.margin;
      std::ostringstream os;
      os << r.id << " dim=" << r.context.dim << " trial=" << r.context.trial << " probe=" << r.context.probe
         << " functions=";
      for (std::size_t i = 0; i < r.context.functions.size(); ++i) os << (i ? "," : "") << r.context.functions[i];
      s.worst_context = os.str();
    }
  }
  return s;
}

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HHVERIFY_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct Subject {
  std::vector<ScalarFunction> functions;

  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    for (const auto& f : functions) out.push_back(f.id());
    return out;
  }
};

struct PlanEntry {
  int suite_index;
  std::string suite;
  Interval interval;
  std::optional<SynchronyVerdict> synchrony;
};

struct WorkItem {
  SuiteKind kind;
  int subject_index;
  int dim_index;
  int trial;
};

// Sort key: suite, subject, dim, trial, probe, emission order.
using RecordKey = std::tuple<int, int, int, int, int, int>;

struct KeyedRecord {
  RecordKey key;
  InequalityReport report;
};

/// Returns the reason the suite cannot run on this subject, if any.
std::optional<std::string> skip_reason(const SuiteConfig& config, const std::string& suite, const Subject& subject,
                                       const Interval& interval, std::optional<SynchronyVerdict>& synchrony) {
  for (const auto& f : subject.functions) {
    if (!f.domain().contains(interval)) {
      return "interval " + to_string(interval) + " outside domain of " + f.id();
    }
  }
  const bool convex = std::all_of(subject.functions.begin(), subject.functions.end(), operator_convex);
  const bool nonnegative = std::all_of(subject.functions.begin(), subject.functions.end(),
                                       [&](const ScalarFunction& f) { return f.nonnegative_on(interval); });

  if (kind_of(suite) == SuiteKind::Single) {
    if (!convex) return subject.functions.front().id() + " is not tagged operator convex";
    return std::nullopt;
  }

  const ScalarFunction& f = subject.functions[0];
  const ScalarFunction& g = subject.functions[1];
  synchrony = check_synchronous(f, g, interval);
  if (suite == "thm6-3.1") {
    if (synchrony->cls == SynchronyClass::Neither) return "pair is neither synchronous nor asynchronous";
    return std::nullopt;
  }
  if (suite == "chain-3.2" && synchrony->cls != SynchronyClass::Synchronous) return "pair is not synchronous";
  if (suite == "chain-3.3" && synchrony->cls != SynchronyClass::Asynchronous) return "pair is not asynchronous";
  if (suite == "chain-3.2" || suite == "chain-3.3") return std::nullopt;

  if (!convex) return "pair is not tagged operator convex";
  if (needs_nonnegative(suite) && !nonnegative) return "requires f, g >= 0 on the interval";
  if (signed_opt_in_suite(suite) && !nonnegative && !config.allow_signed) {
    return "signed functions need --allow-signed";
  }
  if (is_remark_suite(suite)) {
    const bool wants_sync = !is_async_suite(suite);
    const SynchronyClass need = wants_sync ? SynchronyClass::Synchronous : SynchronyClass::Asynchronous;
    if (synchrony->cls != need) return wants_sync ? "pair is not synchronous" : "pair is not asynchronous";
  }
  return std::nullopt;
}

class SuiteRunner {
 public:
  explicit SuiteRunner(const SuiteConfig& config) : config_(config) {
    config_.validate();
    suites_ = expand_suites(config_.suites);
    build_subjects();
    build_plan();
  }

  std::vector<InequalityReport> run() {
    std::vector<WorkItem> items;
    for (const auto& [kind, subject_index] : group_order_) {
      for (int d = 0; d < static_cast<int>(config_.dims.size()); ++d) {
        for (int trial = 0; trial < config_.trials; ++trial) items.push_back({kind, subject_index, d, trial});
      }
    }

    std::vector<std::vector<KeyedRecord>> results(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= items.size()) break;
        try {
          results[i] = run_item(items[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    const unsigned n_threads =
        static_cast<unsigned>(std::min<std::size_t>(resolve_thread_count(config_.threads), std::max<std::size_t>(1, items.size())));
    if (n_threads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(n_threads);
      for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    std::vector<KeyedRecord> all = std::move(skips_);
    for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(all));
    run_examples(all);
    std::stable_sort(all.begin(), all.end(), [](const KeyedRecord& l, const KeyedRecord& r) { return l.key < r.key; });

    std::vector<InequalityReport> out;
    out.reserve(all.size());
    for (auto& k : all) out.push_back(std::move(k.report));
    return out;
  }

 private:
  void build_subjects() {
    std::vector<ScalarFunction> pool;
    if (config_.functions) {
      pool.push_back(find_function(config_.functions->first));
      if (config_.functions->second != config_.functions->first) pool.push_back(find_function(config_.functions->second));
      singles_ = {};
      for (const auto& f : pool) singles_.push_back({{f}});
      pairs_.push_back({{find_function(config_.functions->first), find_function(config_.functions->second)}});
      return;
    }
    pool = builtin_catalog();
    for (const auto& f : pool) singles_.push_back({{f}});
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i; j < pool.size(); ++j) pairs_.push_back({{pool[i], pool[j]}});
    }
  }

  Interval interval_for(const std::string& suite) const {
    if (config_.interval) return *config_.interval;
    return is_async_suite(suite) ? kDefaultAsyncInterval : kDefaultInterval;
  }

  void build_plan() {
    const auto& known = known_suites();
    for (const auto& suite : suites_) {
      const int suite_index = static_cast<int>(std::find(known.begin(), known.end(), suite) - known.begin());
      const SuiteKind kind = kind_of(suite);
      if (kind == SuiteKind::Example) {
        example_suite_index_ = suite_index;
        continue;
      }
      const auto& subjects = kind == SuiteKind::Single ? singles_ : pairs_;
      for (int s = 0; s < static_cast<int>(subjects.size()); ++s) {
        const Interval interval = interval_for(suite);
        std::optional<SynchronyVerdict> synchrony;
        const auto reason = skip_reason(config_, suite, subjects[s], interval, synchrony);
        if (reason) {
          InequalityReport r = skip_report(suite, *reason);
          r.context.functions = subjects[s].ids();
          r.context.interval = interval;
          skips_.push_back({{suite_index, s, -1, -1, -1, 0}, std::move(r)});
          continue;
        }
        auto& group = plan_[{kind, s}];
        if (group.empty()) group_order_.push_back({kind, s});
        group.push_back({suite_index, suite, interval, synchrony});
      }
    }
  }

  std::vector<KeyedRecord> run_item(const WorkItem& item) const {
    const Subject& subject = (item.kind == SuiteKind::Single ? singles_ : pairs_)[item.subject_index];
    const auto& entries = plan_.at({item.kind, item.subject_index});
    const int dim = config_.dims[item.dim_index];

    struct Draw {
      HermitianMatrix a;
      HermitianMatrix b;
      std::uint64_t seed_a;
      std::uint64_t seed_b;
    };
    std::map<std::pair<double, double>, Draw> draws;
    std::map<std::pair<double, double>, PairContext> contexts;
    std::map<std::pair<double, double>, std::vector<HermitianMatrix>> phi_grids;
    std::vector<UnitVector> probes;
    std::vector<std::uint64_t> probe_seeds;
    const TrialSpec base{dim, {}, config_.seed, static_cast<std::uint64_t>(item.trial)};
    for (int p = 0; p < config_.probes; ++p) {
      probe_seeds.push_back(base.sub_seed(probe_stream(p)));
      probes.push_back(random_unit_vector(dim, probe_seeds.back()));
    }

    auto draw_for = [&](const Interval& interval) -> const Draw& {
      const auto key = std::make_pair(interval.lo, interval.hi);
      auto it = draws.find(key);
      if (it == draws.end()) {
        const std::uint64_t sa = base.sub_seed(Stream::MatrixA);
        const std::uint64_t sb = base.sub_seed(Stream::MatrixB);
        it = draws.emplace(key, Draw{random_hermitian(dim, interval, sa), random_hermitian(dim, interval, sb), sa, sb}).first;
      }
      return it->second;
    };
    auto context_for = [&](const Interval& interval) -> const PairContext& {
      const auto key = std::make_pair(interval.lo, interval.hi);
      auto it = contexts.find(key);
      if (it == contexts.end()) {
        const Draw& d = draw_for(interval);
        it = contexts.emplace(key, PairContext(subject.functions[0], subject.functions[1], d.a, d.b, config_.quad)).first;
      }
      return it->second;
    };

    std::vector<KeyedRecord> out;
    auto push = [&](const PlanEntry& e, int probe, int seq, InequalityReport r, const Draw& d) {
      r.context.dim = dim;
      r.context.functions = subject.ids();
      r.context.interval = e.interval;
      r.context.trial = item.trial;
      r.context.probe = probe;
      r.context.subseeds = {{"A", d.seed_a}, {"B", d.seed_b}};
      if (probe >= 0) r.context.subseeds["x"] = probe_seeds[static_cast<std::size_t>(probe)];
      out.push_back({{e.suite_index, item.subject_index, item.dim_index, item.trial, probe, seq}, std::move(r)});
    };

    for (const auto& e : entries) {
      const Draw& d = draw_for(e.interval);
      if (e.suite == "thm1-chain") {
        push(e, -1, 0, check_hh_chain(subject.functions[0], d.a, d.b, config_.quad, config_.tol).summary(), d);
        continue;
      }
      if (e.suite == "lemma-2.1") {
        const auto key = std::make_pair(e.interval.lo, e.interval.hi);
        auto it = phi_grids.find(key);
        if (it == phi_grids.end()) {
          it = phi_grids.emplace(key, phi_grid(subject.functions[0], d.a, d.b, config_.lemma_grid_points)).first;
        }
        for (int p = 0; p < config_.probes; ++p) push(e, p, 0, check_phi_convexity(it->second, probes[p], config_.tol), d);
        continue;
      }
      if (e.suite == "thm6-3.1") {
        for (int p = 0; p < config_.probes; ++p) {
          push(e, p, 0,
               check_cebysev(subject.functions[0], subject.functions[1], d.a, probes[p], *e.synchrony, config_.tol), d);
        }
        continue;
      }
      const PairContext& ctx = context_for(e.interval);
      for (int p = 0; p < config_.probes; ++p) {
        const UnitVector& x = probes[p];
        if (e.suite == "thm3-2.2") {
          push(e, p, 0, check_product_upper(ctx, x, config_.tol), d);
        } else if (e.suite == "thm4-2.7") {
          push(e, p, 0, check_midpoint_product(ctx, x, config_.tol), d);
        } else if (e.suite == "thm5-2.9") {
          push(e, p, 0, check_cross_product(ctx, x, config_.tol), d);
        } else if (e.suite == "chain-3.2" || e.suite == "chain-3.3") {
          auto pair = check_mnp_chain(ctx, x, *e.synchrony, config_.tol);
          push(e, p, 0, std::move(pair[0]), d);
          push(e, p, 1, std::move(pair[1]), d);
        } else if (is_remark_suite(e.suite)) {
          int seq = 0;
          for (auto& r : check_remark_bounds(ctx, x, *e.synchrony, config_.tol)) {
            if (suite_of_record(r.id) == e.suite) push(e, p, seq++, std::move(r), d);
          }
        }
      }
    }
    return out;
  }

  void run_examples(std::vector<KeyedRecord>& all) const {
    if (!example_suite_index_) return;
    for (int d = 0; d < static_cast<int>(config_.dims.size()); ++d) {
      auto reports = run_paper_example(config_.dims[d], config_.trials, config_.seed, config_.probes, config_.quad,
                                       config_.tol);
      int seq = 0;
      for (auto& r : reports) {
        all.push_back({{*example_suite_index_, 0, d, r.context.trial, r.context.probe, seq++}, std::move(r)});
      }
    }
  }

  SuiteConfig config_;
  std::vector<std::string> suites_;
  std::vector<Subject> singles_;
  std::vector<Subject> pairs_;
  std::map<std::pair<SuiteKind, int>, std::vector<PlanEntry>> plan_;
  std::vector<std::pair<SuiteKind, int>> group_order_;
  std::vector<KeyedRecord> skips_;
  std::optional<int> example_suite_index_;
};

}  // namespace

SuiteRun run_suite(const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SuiteRunner runner(config);
  SuiteRun run;
  run.records = runner.run();
  run.summary = summarize(run.records);
  if (!config.report_path.empty()) write_report(config.report_path, run.records, config.format);
  run.summary.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

CertifyOutcome certify_convex_command(std::string_view function_id, const Interval& interval, int dim, int trials,
                                      std::uint64_t seed) {
  ScalarFunction f = find_function(function_id);
  if (dim < 1 || trials < 1) throw Error(ErrorCode::ConfigInvalid, "dim and trials must be >= 1");
  try {
    validate_interval(interval);
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigInvalid, e.what());
  }
  if (!f.domain().contains(interval)) {
    throw Error(ErrorCode::ConfigInvalid,
                "interval " + to_string(interval) + " outside domain " + to_string(f.domain()) + " of " + f.id());
  }
  ConvexityVerdict verdict = certify_operator_convex(f, interval, dim, trials, seed);

  std::optional<bool> expect;
  switch (f.convexity()) {
    case ConvexityClass::OperatorConvex: expect = false; break;
    case ConvexityClass::NotOperatorConvex: expect = true; break;
    case ConvexityClass::OperatorConcave: expect = !f.is_affine(); break;
    case ConvexityClass::Unknown: break;
  }
  CertifyOutcome out{std::move(f), std::move(verdict), expect, true, std::nullopt};
  const bool violated = out.verdict.status == ConvexityStatus::Violated;
  out.matches = !expect || *expect == violated;
  if (out.verdict.counterexample) {
    const auto& ce = *out.verdict.counterexample;
    out.replayed_gap = convexity_gap(out.function, ce.a, ce.b, ce.lambda);
  }
  return out;
}

SuiteRun example_command(const ExampleConfig& config) {
  if (config.dims.empty() || config.trials < 1 || config.probes < 1) {
    throw Error(ErrorCode::ConfigInvalid, "example needs at least one dim, trial and probe");
  }
  for (int d : config.dims) {
    if (d < 1 || d > kMaxDim) throw Error(ErrorCode::ConfigInvalid, "dimension outside [1, 64]");
  }
  const auto start = std::chrono::steady_clock::now();
  SuiteRun run;
  for (int d : config.dims) {
    auto reports = run_paper_example(d, config.trials, config.seed, config.probes, config.quad, config.tol);
    std::move(reports.begin(), reports.end(), std::back_inserter(run.records));
  }
  run.summary = summarize(run.records);
  if (!config.report_path.empty()) write_report(config.report_path, run.records, config.format);
  run.summary.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

}  // namespace hhverify
