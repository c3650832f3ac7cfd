#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hhverify/hermitian.hpp"
#include "hhverify/scalar_function.hpp"

namespace hhverify {

/// Working box for catalog domains; singular functions start at kSingularGuard.
inline constexpr double kCatalogBound = 10.0;
inline constexpr double kSingularGuard = 1e-3;
inline constexpr int kDefaultSynchronyGrid = 201;
inline constexpr double kSynchronySlack = 1e-12;
inline constexpr double kCertifyTol = 1e-9;

/// t -> slope * t + intercept on [-kCatalogBound, kCatalogBound] unless a
/// domain is given. Affine maps are both operator convex and operator
/// concave; `convexity` selects which tag the entry carries.
ScalarFunction affine(double slope, double intercept,
                      ConvexityClass convexity = ConvexityClass::OperatorConvex,
                      std::string id = {},
                      Interval domain = {-kCatalogBound, kCatalogBound});

/// t -> t^r on [0, kCatalogBound]; operator convex for r in [1, 2].
ScalarFunction power(double r, std::string id = {});

/// Fixed catalog entries:
///   identity, constant, reflect (10 - t), square, cube, power-1.5,
///   inverse, xlogx, sqrt, affine-concave (t tagged operator concave).
std::vector<ScalarFunction> builtin_catalog();

/// Catalog lookup by id. Also accepts the parameterized forms
/// "affine:<slope>:<intercept>" and "power:<r>".
ScalarFunction find_function(std::string_view id);

enum class SynchronyClass { Synchronous, Asynchronous, Neither };
std::string_view to_string(SynchronyClass c);

struct SynchronyVerdict {
  SynchronyClass cls = SynchronyClass::Neither;
  /// A grid pair (t, s) with (f(t)-f(s))(g(t)-g(s)) < -slack, if any.
  std::optional<std::pair<double, double>> breaks_synchrony;
  /// A grid pair with product > slack, if any.
  std::optional<std::pair<double, double>> breaks_asynchrony;
};

SynchronyVerdict check_synchronous(const ScalarFunction& f, const ScalarFunction& g,
                                   const Interval& interval, int grid_points = kDefaultSynchronyGrid);

enum class ConvexityStatus { NoViolationFound, Violated };
std::string_view to_string(ConvexityStatus s);

struct ConvexityCounterexample {
  HermitianMatrix a;
  HermitianMatrix b;
  double lambda;
  /// min-eig of (1-lambda) f(A) + lambda f(B) - f((1-lambda) A + lambda B).
  double min_eig_of_gap;
  std::uint64_t trial_index;
};

struct ConvexityVerdict {
  ConvexityStatus status = ConvexityStatus::NoViolationFound;
  std::optional<ConvexityCounterexample> counterexample;
  int trials_used = 0;
  /// Smallest gap eigenvalue seen across all trials.
  double worst_gap = 0.0;
};

/// Smallest eigenvalue of the operator-convexity gap at (A, B, lambda).
double convexity_gap(const ScalarFunction& f, const HermitianMatrix& a, const HermitianMatrix& b,
                     double lambda);

/// Randomized falsifier for operator convexity on `interval`. Each trial
/// draws (A, B) with spectra in the interval and tests lambda = 1/2 and a
/// uniform lambda; the first trial whose gap drops below
/// -kCertifyTol * max(1, ‖f(A)‖, ‖f(B)‖) is returned as the counterexample.
ConvexityVerdict certify_operator_convex(const ScalarFunction& f, const Interval& interval, int dim,
                                         int trials, std::uint64_t seed);

}  // namespace hhverify
