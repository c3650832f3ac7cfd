#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hhverify/hermitian.hpp"
#include "hhverify/scalar_function.hpp"

namespace hhverify {

/// Composite Gauss-Legendre rule on [0, 1].
struct QuadratureSpec {
  int panels = 8;
  int nodes_per_panel = 8;

  int total_nodes() const { return panels * nodes_per_panel; }
  /// Same rule at half the panel width.
  QuadratureSpec refined() const { return {panels * 2, nodes_per_panel}; }
  /// panels >= 1, nodes_per_panel in [2, 16], total nodes <= 1e6.
  void validate() const;
};

struct QuadratureNode {
  double t;
  double weight;
};

/// Nodes and weights on [-1, 1], ascending in t; n in [2, 16].
std::span<const QuadratureNode> gauss_legendre(int n);

/// Nodes mapped onto [0, 1], panel by panel.
std::vector<QuadratureNode> composite_rule(const QuadratureSpec& spec);

template <typename T>
struct IntegralResult {
  T value;
  /// |Q(spec) - Q(spec.refined())|, spectral norm for matrix values.
  double error_estimate = 0.0;
};

using ScalarIntegral = IntegralResult<double>;
using MatrixIntegral = IntegralResult<HermitianMatrix>;

/// Integrates a scalar callable over [0, 1] with the spec and its refinement.
template <typename Fn>
ScalarIntegral integrate_scalar(const QuadratureSpec& spec, Fn&& fn) {
  spec.validate();
  auto sum = [&](const QuadratureSpec& s) {
    double acc = 0.0;
    for (const auto& node : composite_rule(s)) acc += node.weight * fn(node.t);
    return acc;
  };
  const double coarse = sum(spec);
  const double fine = sum(spec.refined());
  return {coarse, std::abs(coarse - fine)};
}

/// f and (optionally) g evaluated by functional calculus at every node of
/// a rule and of its refinement along S(t) = (1 - t) from + t to.
class SegmentProfile {
 public:
  SegmentProfile(const ScalarFunction& f, const ScalarFunction* g, const HermitianMatrix& from,
                 const HermitianMatrix& to, const QuadratureSpec& spec);

  bool has_second() const { return has_g_; }

  /// ∫ <f(S(t)) x, x> dt, or g when `second` is set.
  ScalarIntegral form_integral(const UnitVector& x, bool second = false) const;
  /// ∫ <f(S(t)) x, x> <g(S(t)) x, x> dt.
  ScalarIntegral product_of_forms_integral(const UnitVector& x) const;
  /// ∫ <f(S(t)) g(S(t)) x, x> dt.
  ScalarIntegral form_of_product_integral(const UnitVector& x) const;
  /// ∫ f(S(t)) dt as a matrix, or g when `second` is set.
  MatrixIntegral operator_integral(bool second = false) const;

 private:
  struct Level {
    std::vector<double> weights;
    std::vector<HermitianMatrix> f_values;
    std::vector<HermitianMatrix> g_values;
    std::vector<HermitianMatrix> fg_values;
  };

  template <typename Fn>
  ScalarIntegral integrate_levels(Fn&& per_node) const;

  Level coarse_;
  Level fine_;
  bool has_g_ = false;
};

/// ∫₀¹ f((1 - t) A + t B) dt.
MatrixIntegral integrate_operator_segment(const ScalarFunction& f, const HermitianMatrix& a,
                                          const HermitianMatrix& b, const QuadratureSpec& spec = {});

/// ∫₀¹ <f(t A + (1 - t) B) x, x> dt.
ScalarIntegral integrate_scalar_form(const ScalarFunction& f, const HermitianMatrix& a, const HermitianMatrix& b,
                                     const UnitVector& x, const QuadratureSpec& spec = {});

/// ∫₀¹ <f(t A + (1 - t) B) x, x> <g(t A + (1 - t) B) x, x> dt.
ScalarIntegral integrate_scalar_product_form(const ScalarFunction& f, const ScalarFunction& g,
                                             const HermitianMatrix& a, const HermitianMatrix& b,
                                             const UnitVector& x, const QuadratureSpec& spec = {});

}  // namespace hhverify
