#include "hhverify/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hhverify/sampling.hpp"

namespace hhverify {

namespace {

constexpr Interval kFullBox{-kCatalogBound, kCatalogBound};
constexpr Interval kPositiveBox{kSingularGuard, kCatalogBound};

Monotonicity affine_monotonicity(double slope) {
  return slope < 0.0 ? Monotonicity::Decreasing : Monotonicity::Increasing;
}

bool affine_nonnegative(double slope, double intercept, const Interval& d) {
  return std::min(slope * d.lo + intercept, slope * d.hi + intercept) >= 0.0;
}

std::string number_id(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::optional<double> parse_double(std::string_view s) {
  // std::from_chars for double is unavailable in some libstdc++ builds.
  std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

ScalarFunction affine(double slope, double intercept, ConvexityClass convexity, std::string id,
                      Interval domain) {
  if (id.empty()) id = "affine:" + number_id(slope) + ":" + number_id(intercept);
  return ScalarFunction(
      std::move(id), domain, [slope, intercept](double t) { return slope * t + intercept; }, convexity,
      affine_nonnegative(slope, intercept, domain), affine_monotonicity(slope), {intercept, slope});
}

ScalarFunction power(double r, std::string id) {
  if (!(r >= 1.0 && r <= 2.0)) {
    throw Error(ErrorCode::InvalidFunction, "power exponent must lie in [1, 2], got " + number_id(r));
  }
  std::vector<double> poly;
  if (r == 1.0) poly = {0.0, 1.0};
  if (r == 2.0) poly = {0.0, 0.0, 1.0};
  if (id.empty()) id = "power:" + number_id(r);
  return ScalarFunction(
      std::move(id), Interval{0.0, kCatalogBound}, [r](double t) { return std::pow(t, r); },
      ConvexityClass::OperatorConvex, true, Monotonicity::Increasing, std::move(poly));
}

std::vector<ScalarFunction> builtin_catalog() {
  std::vector<ScalarFunction> out;
  out.push_back(affine(1.0, 0.0, ConvexityClass::OperatorConvex, "identity"));
  out.push_back(affine(0.0, 1.0, ConvexityClass::OperatorConvex, "constant"));
  out.push_back(affine(-1.0, kCatalogBound, ConvexityClass::OperatorConvex, "reflect"));
  out.push_back(affine(1.0, 0.0, ConvexityClass::OperatorConcave, "affine-concave"));
  out.emplace_back("square", kFullBox, [](double t) { return t * t; }, ConvexityClass::OperatorConvex, true,
                   Monotonicity::Nonmonotone, std::vector<double>{0.0, 0.0, 1.0});
  out.emplace_back("cube", kFullBox, [](double t) { return t * t * t; }, ConvexityClass::NotOperatorConvex,
                   false, Monotonicity::Increasing, std::vector<double>{0.0, 0.0, 0.0, 1.0});
  out.push_back(power(1.5, "power-1.5"));
  out.emplace_back("inverse", kPositiveBox, [](double t) { return 1.0 / t; }, ConvexityClass::OperatorConvex,
                   true, Monotonicity::Decreasing);
  out.emplace_back("xlogx", kPositiveBox, [](double t) { return t * std::log(t); },
                   ConvexityClass::OperatorConvex, false, Monotonicity::Nonmonotone);
  out.emplace_back("sqrt", Interval{0.0, kCatalogBound}, [](double t) { return std::sqrt(t); },
                   ConvexityClass::OperatorConcave, true, Monotonicity::Increasing);
  return out;
}

ScalarFunction find_function(std::string_view id) {
  for (auto& f : builtin_catalog()) {
    if (f.id() == id) return f;
  }
  auto fail = [&] { return Error(ErrorCode::UnknownFunction, "unknown function id '" + std::string(id) + "'"); };
  if (id.starts_with("affine:")) {
    const std::string_view rest = id.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw fail();
    const auto slope = parse_double(rest.substr(0, colon));
    const auto intercept = parse_double(rest.substr(colon + 1));
    if (!slope || !intercept) throw fail();
    return affine(*slope, *intercept, ConvexityClass::OperatorConvex, std::string(id));
  }
  if (id.starts_with("power:")) {
    const auto r = parse_double(id.substr(6));
    if (!r) throw fail();
    return power(*r);
  }
  throw fail();
}

std::string_view to_string(SynchronyClass c) {
  switch (c) {
    case SynchronyClass::Synchronous: return "SYNCHRONOUS";
    case SynchronyClass::Asynchronous: return "ASYNCHRONOUS";
    case SynchronyClass::Neither: return "NEITHER";
  }
  return "NEITHER";
}

SynchronyVerdict check_synchronous(const ScalarFunction& f, const ScalarFunction& g, const Interval& interval,
                                   int grid_points) {
  validate_interval(interval);
  if (grid_points < 2) throw Error(ErrorCode::ParameterOutOfRange, "synchrony grid needs >= 2 points");
  if (!f.domain().contains(interval) || !g.domain().contains(interval)) {
    throw Error(ErrorCode::DomainViolation, "interval " + to_string(interval) + " not inside domains of '" +
                                                f.id() + "' and '" + g.id() + "'");
  }
  std::vector<double> ts(grid_points), fv(grid_points), gv(grid_points);
  const double step = interval.width() / (grid_points - 1);
  for (int i = 0; i < grid_points; ++i) {
    ts[i] = (i + 1 == grid_points) ? interval.hi : interval.lo + i * step;
    fv[i] = f(ts[i]);
    gv[i] = g(ts[i]);
  }

  SynchronyVerdict verdict;
  for (int i = 0; i < grid_points && !(verdict.breaks_synchrony && verdict.breaks_asynchrony); ++i) {
    for (int j = i + 1; j < grid_points; ++j) {
      const double product = (fv[i] - fv[j]) * (gv[i] - gv[j]);
      if (product < -kSynchronySlack && !verdict.breaks_synchrony) verdict.breaks_synchrony = {{ts[i], ts[j]}};
      if (product > kSynchronySlack && !verdict.breaks_asynchrony) verdict.breaks_asynchrony = {{ts[i], ts[j]}};
    }
  }
  if (!verdict.breaks_synchrony) {
    verdict.cls = SynchronyClass::Synchronous;
  } else if (!verdict.breaks_asynchrony) {
    verdict.cls = SynchronyClass::Asynchronous;
  } else {
    verdict.cls = SynchronyClass::Neither;
  }
  return verdict;
}

std::string_view to_string(ConvexityStatus s) {
  return s == ConvexityStatus::Violated ? "VIOLATED" : "NO_VIOLATION_FOUND";
}

double convexity_gap(const ScalarFunction& f, const HermitianMatrix& a, const HermitianMatrix& b,
                     double lambda) {
  const HermitianMatrix mixed_arg = segment_point(a, b, lambda);
  const HermitianMatrix chord = (1.0 - lambda) * apply_function(f, a) + lambda * apply_function(f, b);
  const HermitianMatrix gap = chord - apply_function(f, mixed_arg);
  return spectral_decompose(gap).min_eigenvalue();
}

ConvexityVerdict certify_operator_convex(const ScalarFunction& f, const Interval& interval, int dim, int trials,
                                         std::uint64_t seed) {
  validate_interval(interval);
  if (!f.domain().contains(interval)) {
    throw Error(ErrorCode::DomainViolation,
                "interval " + to_string(interval) + " not inside domain " + to_string(f.domain()));
  }
  if (dim < 1 || trials < 1) throw Error(ErrorCode::ParameterOutOfRange, "dim and trials must be >= 1");

  ConvexityVerdict verdict;
  verdict.worst_gap = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    const TrialSpec spec{dim, interval, seed, static_cast<std::uint64_t>(trial)};
    const HermitianMatrix a = random_hermitian(dim, interval, spec.sub_seed(Stream::MatrixA));
    const HermitianMatrix b = random_hermitian(dim, interval, spec.sub_seed(Stream::MatrixB));
    const HermitianMatrix fa = apply_function(f, a);
    const HermitianMatrix fb = apply_function(f, b);
    const double threshold = kCertifyTol * std::max({1.0, spectral_norm(fa), spectral_norm(fb)});
    verdict.trials_used = trial + 1;

    for (const double lambda : {0.5, random_unit_interval(spec.sub_seed(Stream::Lambda))}) {
      const HermitianMatrix chord = (1.0 - lambda) * fa + lambda * fb;
      const HermitianMatrix gap = chord - apply_function(f, segment_point(a, b, lambda));
      const double min_eig = spectral_decompose(gap).min_eigenvalue();
      verdict.worst_gap = std::min(verdict.worst_gap, min_eig);
      if (min_eig < -threshold) {
        verdict.status = ConvexityStatus::Violated;
        verdict.counterexample = ConvexityCounterexample{a, b, lambda, min_eig, static_cast<std::uint64_t>(trial)};
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace hhverify
