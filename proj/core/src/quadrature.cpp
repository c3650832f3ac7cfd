#include "hhverify/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace hhverify {

namespace {

constexpr int kMinNodes = 2;
constexpr int kMaxNodes = 16;

// Newton iteration on P_n starting from the Chebyshev-like initial guess.
std::vector<QuadratureNode> compute_gauss_legendre(int n) {
  std::vector<QuadratureNode> out(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    out[i] = {-z, w};
    out[n - 1 - i] = {z, w};
  }
  if (n % 2 == 1) out[n / 2].t = 0.0;
  return out;
}

const std::array<std::vector<QuadratureNode>, kMaxNodes + 1>& rule_table() {
  static const auto table = [] {
    std::array<std::vector<QuadratureNode>, kMaxNodes + 1> t;
    for (int n = kMinNodes; n <= kMaxNodes; ++n) t[n] = compute_gauss_legendre(n);
    return t;
  }();
  return table;
}

double form(const HermitianMatrix& m, const ComplexVector& x) {
  return x.dot(m.matrix() * x).real();
}

}  // namespace

void QuadratureSpec::validate() const {
  if (panels < 1) throw Error(ErrorCode::ParameterOutOfRange, "quadrature panels must be >= 1");
  if (nodes_per_panel < kMinNodes || nodes_per_panel > kMaxNodes) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "quadrature nodes per panel must be in [2, 16], got " + std::to_string(nodes_per_panel));
  }
  if (static_cast<long long>(panels) * nodes_per_panel > 1'000'000) {
    throw Error(ErrorCode::ParameterOutOfRange, "quadrature node count exceeds 1e6");
  }
}

std::span<const QuadratureNode> gauss_legendre(int n) {
  if (n < kMinNodes || n > kMaxNodes) {
    throw Error(ErrorCode::ParameterOutOfRange, "Gauss-Legendre order must be in [2, 16]");
  }
  return rule_table()[n];
}

std::vector<QuadratureNode> composite_rule(const QuadratureSpec& spec) {
  spec.validate();
  const auto base = gauss_legendre(spec.nodes_per_panel);
  const double h = 1.0 / spec.panels;
  std::vector<QuadratureNode> out;
  out.reserve(static_cast<std::size_t>(spec.total_nodes()));
  for (int p = 0; p < spec.panels; ++p) {
    const double left = p * h;
    for (const auto& node : base) {
      out.push_back({left + 0.5 * h * (node.t + 1.0), 0.5 * h * node.weight});
    }
  }
  return out;
}

SegmentProfile::SegmentProfile(const ScalarFunction& f, const ScalarFunction* g, const HermitianMatrix& from,
                               const HermitianMatrix& to, const QuadratureSpec& spec)
    : has_g_(g != nullptr) {
  require_same_dim(from, to);
  auto fill = [&](Level& level, const QuadratureSpec& s) {
    const auto nodes = composite_rule(s);
    level.weights.reserve(nodes.size());
    level.f_values.reserve(nodes.size());
    for (const auto& node : nodes) {
      const SpectralDecomposition spectrum = spectral_decompose(segment_point(from, to, node.t));
      level.weights.push_back(node.weight);
      level.f_values.push_back(apply_function(f, spectrum));
      if (g != nullptr) {
        level.g_values.push_back(apply_function(*g, spectrum));
        level.fg_values.push_back(
            HermitianMatrix::symmetrized(level.f_values.back().matrix() * level.g_values.back().matrix()));
      }
    }
  };
  fill(coarse_, spec);
  fill(fine_, spec.refined());
}

template <typename Fn>
ScalarIntegral SegmentProfile::integrate_levels(Fn&& per_node) const {
  auto sum = [&](const Level& level) {
    double acc = 0.0;
    for (std::size_t k = 0; k < level.weights.size(); ++k) acc += level.weights[k] * per_node(level, k);
    return acc;
  };
  const double coarse = sum(coarse_);
  const double fine = sum(fine_);
  return {coarse, std::abs(coarse - fine)};
}

ScalarIntegral SegmentProfile::form_integral(const UnitVector& x, bool second) const {
  if (second && !has_g_) throw Error(ErrorCode::ParameterOutOfRange, "profile has no second function");
  require_same_dim(coarse_.f_values.front(), x);
  const ComplexVector& v = x.vector();
  return integrate_levels([&](const Level& level, std::size_t k) {
    return form(second ? level.g_values[k] : level.f_values[k], v);
  });
}

ScalarIntegral SegmentProfile::product_of_forms_integral(const UnitVector& x) const {
  if (!has_g_) throw Error(ErrorCode::ParameterOutOfRange, "profile has no second function");
  require_same_dim(coarse_.f_values.front(), x);
  const ComplexVector& v = x.vector();
  return integrate_levels([&](const Level& level, std::size_t k) {
    return form(level.f_values[k], v) * form(level.g_values[k], v);
  });
}

ScalarIntegral SegmentProfile::form_of_product_integral(const UnitVector& x) const {
  if (!has_g_) throw Error(ErrorCode::ParameterOutOfRange, "profile has no second function");
  require_same_dim(coarse_.f_values.front(), x);
  const ComplexVector& v = x.vector();
  return integrate_levels([&](const Level& level, std::size_t k) { return form(level.fg_values[k], v); });
}

MatrixIntegral SegmentProfile::operator_integral(bool second) const {
  if (second && !has_g_) throw Error(ErrorCode::ParameterOutOfRange, "profile has no second function");
  auto sum = [&](const Level& level) {
    const auto& values = second ? level.g_values : level.f_values;
    ComplexMatrix acc = ComplexMatrix::Zero(values.front().dim(), values.front().dim());
    for (std::size_t k = 0; k < values.size(); ++k) acc += level.weights[k] * values[k].matrix();
    return HermitianMatrix::symmetrized(acc);
  };
  HermitianMatrix coarse = sum(coarse_);
  const HermitianMatrix fine = sum(fine_);
  const double err = spectral_norm(coarse - fine);
  return {std::move(coarse), err};
}

MatrixIntegral integrate_operator_segment(const ScalarFunction& f, const HermitianMatrix& a,
                                          const HermitianMatrix& b, const QuadratureSpec& spec) {
  return SegmentProfile(f, nullptr, a, b, spec).operator_integral();
}

ScalarIntegral integrate_scalar_form(const ScalarFunction& f, const HermitianMatrix& a, const HermitianMatrix& b,
                                     const UnitVector& x, const QuadratureSpec& spec) {
  return SegmentProfile(f, nullptr, b, a, spec).form_integral(x);
}

ScalarIntegral integrate_scalar_product_form(const ScalarFunction& f, const ScalarFunction& g,
                                             const HermitianMatrix& a, const HermitianMatrix& b,
                                             const UnitVector& x, const QuadratureSpec& spec) {
  return SegmentProfile(f, &g, b, a, spec).product_of_forms_integral(x);
}

}  // namespace hhverify
