#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hhverify/catalog.hpp"
#include "hhverify/common.hpp"
#include "hhverify/hermitian.hpp"
#include "hhverify/quadrature.hpp"

namespace hhverify {

enum class Verdict { Pass, Violation, Skip };
std::string_view to_string(Verdict v);

/// Endpoint order of the segment an inequality integrates along.
enum class Orientation {
  None,
  AToB,  // (1 - t) A + t B
  BToA,  // t A + (1 - t) B
};
std::string_view to_string(Orientation o);

/// Where a check came from; filled by the harness, empty for direct calls.
struct ReportContext {
  int dim = 0;
  std::vector<std::string> functions;
  Interval interval;
  int trial = -1;
  int probe = -1;
  std::map<std::string, std::uint64_t> subseeds;
};

struct InequalityReport {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  /// rhs - lhs; the inequality reads lhs <= rhs.
  double margin = 0.0;
  /// Total slack, quadrature error included.
  double tolerance = 0.0;
  double quad_error = 0.0;
  Verdict verdict = Verdict::Pass;
  Orientation orientation = Orientation::None;
  /// Reason for a SKIP.
  std::string note;
  ReportContext context;
};

/// PASS iff rhs - lhs >= -tolerance.
InequalityReport make_report(std::string id, double lhs, double rhs, double tolerance, double quad_error,
                             Orientation orientation);
InequalityReport skip_report(std::string id, std::string reason);

/// M(A,B)(x), N(A,B)(x), P(A,B)(x).
struct FunctionalTriple {
  double m_value = 0.0;
  double n_value = 0.0;
  double p_value = 0.0;
};

/// Everything the two-function checkers need for one (f, g, A, B): endpoint
/// and midpoint functional calculus plus a sampled segment
/// S(t) = t A + (1 - t) B. Reused across unit-vector probes.
class PairContext {
 public:
  PairContext(const ScalarFunction& f, const ScalarFunction& g, const HermitianMatrix& a, const HermitianMatrix& b,
              const QuadratureSpec& spec = {});

  const ScalarFunction& f() const { return f_; }
  const ScalarFunction& g() const { return g_; }
  const HermitianMatrix& a() const { return a_; }
  const HermitianMatrix& b() const { return b_; }
  Index dim() const { return a_.dim(); }

  const HermitianMatrix& f_a() const { return f_a_; }
  const HermitianMatrix& f_b() const { return f_b_; }
  const HermitianMatrix& g_a() const { return g_a_; }
  const HermitianMatrix& g_b() const { return g_b_; }
  const HermitianMatrix& f_mid() const { return f_mid_; }
  const HermitianMatrix& g_mid() const { return g_mid_; }
  /// f(A) g(A) + f(B) g(B).
  const HermitianMatrix& endpoint_product_sum() const { return fg_sum_; }
  /// f((A+B)/2) g((A+B)/2).
  const HermitianMatrix& mid_product() const { return fg_mid_; }

  const SegmentProfile& profile() const { return profile_; }
  const MatrixIntegral& f_integral() const { return f_integral_; }
  const MatrixIntegral& g_integral() const { return g_integral_; }

  /// [min eigenvalue, max eigenvalue] over both endpoints.
  Interval spectral_hull() const { return hull_; }
  /// f, g >= 0 on the spectral hull.
  bool nonnegative_on_spectra() const;

 private:
  PairContext(const ScalarFunction& f, const ScalarFunction& g, const HermitianMatrix& a, const HermitianMatrix& b,
              const QuadratureSpec& spec, const SpectralDecomposition& sa, const SpectralDecomposition& sb,
              const SpectralDecomposition& smid);

  ScalarFunction f_;
  ScalarFunction g_;
  HermitianMatrix a_;
  HermitianMatrix b_;
  HermitianMatrix f_a_, f_b_, g_a_, g_b_, f_mid_, g_mid_, fg_sum_, fg_mid_;
  SegmentProfile profile_;
  MatrixIntegral f_integral_;
  MatrixIntegral g_integral_;
  Interval hull_;
};

FunctionalTriple compute_mnp(const PairContext& ctx, const UnitVector& x);
FunctionalTriple compute_mnp(const ScalarFunction& f, const ScalarFunction& g, const HermitianMatrix& a,
                             const HermitianMatrix& b, const UnitVector& x);

/// The refinement chain for one operator convex function, in operator order:
///   f((A+B)/2) <= [f((3A+B)/4) + f((A+3B)/4)]/2 <= ∫ f((1-t)A + tB) dt
///              <= [f((A+B)/2) + (f(A)+f(B))/2]/2 <= (f(A)+f(B))/2.
struct ChainReport {
  std::array<HermitianMatrix, 5> stages;
  /// links[k] compares stages[k] with stages[k+1].
  std::array<OrderVerdict, 4> links;
  /// stages[0] <= stages[2] and stages[2] <= stages[4].
  std::array<OrderVerdict, 2> outer;
  double quad_error = 0.0;

  bool passes() const;
  /// Smallest min-eig(stage_{k+1} - stage_k) across the four links.
  double worst_slack() const;
  /// Flattened to a report: lhs 0, rhs = worst slack.
  InequalityReport summary() const;
};

ChainReport check_hh_chain(const ScalarFunction& f, const HermitianMatrix& a, const HermitianMatrix& b,
                           const QuadratureSpec& spec = {}, const Tolerance& tol = {});

/// Midpoint convexity of phi(t) = <f((1-t)A + tB) x, x> over every adjacent
/// grid triple; margin is the smallest slack.
InequalityReport check_phi_convexity(const ScalarFunction& f, const HermitianMatrix& a, const HermitianMatrix& b,
                                     const UnitVector& x, int grid_points = 101, const Tolerance& tol = {});

/// f((1-t)A + tB) on an equispaced grid of t in [0, 1], for reuse across probes.
std::vector<HermitianMatrix> phi_grid(const ScalarFunction& f, const HermitianMatrix& a, const HermitianMatrix& b,
                                      int grid_points = 101);
InequalityReport check_phi_convexity(std::span<const HermitianMatrix> grid, const UnitVector& x,
                                     const Tolerance& tol = {});

/// ∫ <f x,x><g x,x> dt <= M/3 + N/6.
InequalityReport check_product_upper(const PairContext& ctx, const UnitVector& x, const Tolerance& tol = {});
/// <f(mid) x,x><g(mid) x,x> <= ½ ∫ <f x,x><g x,x> dt + M/12 + N/6.
InequalityReport check_midpoint_product(const PairContext& ctx, const UnitVector& x, const Tolerance& tol = {});
/// <f(mid)x,x> ∫<g x,x> + <g(mid)x,x> ∫<f x,x>
///   <= ½ ∫ <f x,x><g x,x> dt + M/12 + N/6 + <f(mid)x,x><g(mid)x,x>.
InequalityReport check_cross_product(const PairContext& ctx, const UnitVector& x, const Tolerance& tol = {});

InequalityReport check_product_upper(const ScalarFunction& f, const ScalarFunction& g, const HermitianMatrix& a,
                                     const HermitianMatrix& b, const UnitVector& x, const QuadratureSpec& spec = {},
                                     const Tolerance& tol = {});
InequalityReport check_midpoint_product(const ScalarFunction& f, const ScalarFunction& g, const HermitianMatrix& a,
                                        const HermitianMatrix& b, const UnitVector& x,
                                        const QuadratureSpec& spec = {}, const Tolerance& tol = {});
InequalityReport check_cross_product(const ScalarFunction& f, const ScalarFunction& g, const HermitianMatrix& a,
                                     const HermitianMatrix& b, const UnitVector& x, const QuadratureSpec& spec = {},
                                     const Tolerance& tol = {});

/// <f(A)g(A)x,x> against <f(A)x,x><g(A)x,x>: >= when synchronous, <= when
/// asynchronous. lhs is the side expected to be smaller.
InequalityReport check_cebysev(const ScalarFunction& f, const ScalarFunction& g, const HermitianMatrix& a,
                               const UnitVector& x, const SynchronyVerdict& synchrony, const Tolerance& tol = {});

/// N <= M <= P when synchronous, N >= M >= P when asynchronous.
std::array<InequalityReport, 2> check_mnp_chain(const PairContext& ctx, const UnitVector& x,
                                                const SynchronyVerdict& synchrony, const Tolerance& tol = {});
std::array<InequalityReport, 2> check_mnp_chain(const ScalarFunction& f, const ScalarFunction& g,
                                                const HermitianMatrix& a, const HermitianMatrix& b,
                                                const UnitVector& x, const SynchronyVerdict& synchrony,
                                                const Tolerance& tol = {});

/// The synchrony-specialized bounds. Synchronous: rem-3.4 (+ /link),
/// rem-3.5, rem-3.6; asynchronous: rem-3.7 (+ /link), rem-3.8, rem-3.9.
/// Displays that put an operator product inside the form also get a
/// "/pf" record using the product of forms in that position.
std::vector<InequalityReport> check_remark_bounds(const PairContext& ctx, const UnitVector& x,
                                                  const SynchronyVerdict& synchrony, const Tolerance& tol = {});
std::vector<InequalityReport> check_remark_bounds(const ScalarFunction& f, const ScalarFunction& g,
                                                  const HermitianMatrix& a, const HermitianMatrix& b,
                                                  const UnitVector& x, const SynchronyVerdict& synchrony,
                                                  const QuadratureSpec& spec = {}, const Tolerance& tol = {});

/// Worked example with f(t) = t, g(t) = t^2.
/// Synchronous case: ∫ <S x,x><S^2 x,x> dt <= ½ <(A^3 + B^3) x, x>.
InequalityReport check_example_sync(const HermitianMatrix& a, const HermitianMatrix& b, const UnitVector& x,
                                    const QuadratureSpec& spec = {}, const Tolerance& tol = {});
/// Asynchronous case: <((A+B)/2)^3 x,x> <= ½ ∫ <S x,x><S^2 x,x> dt + ¼ N(A,B)(x).
InequalityReport check_example_async(const HermitianMatrix& a, const HermitianMatrix& b, const UnitVector& x,
                                     const QuadratureSpec& spec = {}, const Tolerance& tol = {});

inline constexpr Interval kExampleSyncInterval{0.0, 1.0};
inline constexpr Interval kExampleAsyncInterval{-1.0, 0.0};

/// Both example cases over `trials` random pairs with `probes` unit vectors
/// each; reports carry their context and sub-seeds.
std::vector<InequalityReport> run_paper_example(int dim, int trials, std::uint64_t seed, int probes = 8,
                                                const QuadratureSpec& spec = {}, const Tolerance& tol = {});

}  // namespace hhverify
