#include "hhverify/scalar_function.hpp"

#include <cmath>
#include <utility>

namespace hhverify {

std::string_view to_string(ConvexityClass c) {
  switch (c) {
    case ConvexityClass::OperatorConvex: return "OPERATOR_CONVEX";
    case ConvexityClass::OperatorConcave: return "OPERATOR_CONCAVE";
    case ConvexityClass::NotOperatorConvex: return "NOT_OPERATOR_CONVEX";
    case ConvexityClass::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "INCREASING";
    case Monotonicity::Decreasing: return "DECREASING";
    case Monotonicity::Nonmonotone: return "NONMONOTONE";
  }
  return "NONMONOTONE";
}

namespace {

template <typename Fn>
void for_each_grid_point(const Interval& interval, Fn&& fn) {
  const double step = interval.width() / (kFunctionGridPoints - 1);
  for (int i = 0; i < kFunctionGridPoints; ++i) {
    const double t = (i + 1 == kFunctionGridPoints) ? interval.hi : interval.lo + i * step;
    fn(t);
  }
}

}  // namespace

ScalarFunction::ScalarFunction(std::string id, Interval domain, Rule rule, ConvexityClass convexity,
                               bool nonnegative_on_domain, Monotonicity monotonicity,
                               std::vector<double> polynomial)
    : id_(std::move(id)),
      domain_(domain),
      rule_(std::move(rule)),
      convexity_(convexity),
      nonnegative_(nonnegative_on_domain),
      monotonicity_(monotonicity),
      polynomial_(std::move(polynomial)) {
  validate_interval(domain_);
  if (!rule_) throw Error(ErrorCode::InvalidFunction, id_ + ": empty rule");
  for_each_grid_point(domain_, [&](double t) {
    const double v = rule_(t);
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::InvalidFunction, id_ + ": non-finite value on its domain grid");
    }
    if (nonnegative_ && v < -kNonnegativeSlack) {
      throw Error(ErrorCode::InvalidFunction, id_ + ": flagged nonnegative but takes negative values");
    }
  });
}

bool ScalarFunction::nonnegative_on(const Interval& interval) const {
  if (nonnegative_ && domain_.contains(interval)) return true;
  bool ok = true;
  for_each_grid_point(interval, [&](double t) { ok = ok && rule_(t) >= -kNonnegativeSlack; });
  return ok;
}

Monotonicity ScalarFunction::monotonicity_on(const Interval& interval) const {
  bool up = true;
  bool down = true;
  double prev = rule_(interval.lo);
  for_each_grid_point(interval, [&](double t) {
    const double v = rule_(t);
    if (v < prev - kNonnegativeSlack) up = false;
    if (v > prev + kNonnegativeSlack) down = false;
    prev = v;
  });
  if (up) return Monotonicity::Increasing;
  if (down) return Monotonicity::Decreasing;
  return Monotonicity::Nonmonotone;
}

}  // namespace hhverify
