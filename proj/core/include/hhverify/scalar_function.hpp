#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hhverify/common.hpp"

namespace hhverify {

enum class ConvexityClass { OperatorConvex, OperatorConcave, NotOperatorConvex, Unknown };

/// Weak monotonicity: Increasing means non-decreasing.
enum class Monotonicity { Increasing, Decreasing, Nonmonotone };

std::string_view to_string(ConvexityClass c);
std::string_view to_string(Monotonicity m);

/// A real function on a closed interval together with the metadata the
/// checkers rely on. Construction validates that the rule is finite on a
/// 1001-point grid and that the nonnegativity flag agrees with that grid.
class ScalarFunction {
 public:
  using Rule = std::function<double(double)>;

  ScalarFunction(std::string id, Interval domain, Rule rule, ConvexityClass convexity,
                 bool nonnegative_on_domain, Monotonicity monotonicity,
                 std::vector<double> polynomial = {});

  const std::string& id() const { return id_; }
  const Interval& domain() const { return domain_; }
  ConvexityClass convexity() const { return convexity_; }
  bool nonnegative_on_domain() const { return nonnegative_; }
  Monotonicity monotonicity() const { return monotonicity_; }

  /// Ascending monomial coefficients when the rule is a polynomial, else empty.
  const std::vector<double>& polynomial() const { return polynomial_; }
  bool is_polynomial() const { return !polynomial_.empty(); }
  bool is_affine() const { return is_polynomial() && polynomial_.size() <= 2; }

  double operator()(double t) const { return rule_(t); }

  /// Nonnegativity restricted to a sub-interval (grid check unless the domain flag is set).
  bool nonnegative_on(const Interval& interval) const;
  /// Weak monotonicity on a sub-interval, decided on a 1001-point grid.
  Monotonicity monotonicity_on(const Interval& interval) const;

 private:
  std::string id_;
  Interval domain_;
  Rule rule_;
  ConvexityClass convexity_;
  bool nonnegative_;
  Monotonicity monotonicity_;
  std::vector<double> polynomial_;
};

inline constexpr int kFunctionGridPoints = 1001;
inline constexpr double kNonnegativeSlack = 1e-12;

}  // namespace hhverify
