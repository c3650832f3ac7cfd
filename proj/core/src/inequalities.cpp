#include "hhverify/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <utility>

#include "hhverify/sampling.hpp"

namespace hhverify {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Violation: return "VIOLATION";
    case Verdict::Skip: return "SKIP";
  }
  return "SKIP";
}

std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::None: return "none";
    case Orientation::AToB: return "(1-t)A+tB";
    case Orientation::BToA: return "tA+(1-t)B";
  }
  return "none";
}

InequalityReport make_report(std::string id, double lhs, double rhs, double tolerance, double quad_error,
                             Orientation orientation) {
  InequalityReport r;
  r.id = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.tolerance = tolerance;
  r.quad_error = quad_error;
  r.orientation = orientation;
  r.verdict = r.margin >= -tolerance ? Verdict::Pass : Verdict::Violation;
  return r;
}

InequalityReport skip_report(std::string id, std::string reason) {
  InequalityReport r;
  r.id = std::move(id);
  r.verdict = Verdict::Skip;
  r.note = std::move(reason);
  return r;
}

namespace {

double scale_of(std::initializer_list<double> terms) {
  double s = 1.0;
  for (double v : terms) s = std::max(s, std::abs(v));
  return s;
}

double form(const HermitianMatrix& m, const UnitVector& x) { return quadratic_form(m, x); }

HermitianMatrix midpoint(const HermitianMatrix& a, const HermitianMatrix& b) { return segment_point(a, b, 0.5); }

HermitianMatrix product(const HermitianMatrix& p, const HermitianMatrix& q) {
  return HermitianMatrix::symmetrized(p.matrix() * q.matrix());
}

void require_classified(const SynchronyVerdict& synchrony) {
  if (synchrony.cls == SynchronyClass::Neither) {
    throw Error(ErrorCode::ParameterOutOfRange, "check needs a synchronous or asynchronous pair");
  }
}

}  // namespace

PairContext::PairContext(const ScalarFunction& f, const ScalarFunction& g, const HermitianMatrix& a,
                         const HermitianMatrix& b, const QuadratureSpec& spec)
    : PairContext(f, g, a, b, spec, spectral_decompose(a), spectral_decompose(b),
                  spectral_decompose(midpoint(a, b))) {}

PairContext::PairContext(const ScalarFunction& f, const ScalarFunction& g, const HermitianMatrix& a,
                         const HermitianMatrix& b, const QuadratureSpec& spec, const SpectralDecomposition& sa,
                         const SpectralDecomposition& sb, const SpectralDecomposition& smid)
    : f_(f),
      g_(g),
      a_(a),
      b_(b),
      f_a_(apply_function(f, sa)),
      f_b_(apply_function(f, sb)),
      g_a_(apply_function(g, sa)),
      g_b_(apply_function(g, sb)),
      f_mid_(apply_function(f, smid)),
      g_mid_(apply_function(g, smid)),
      fg_sum_(product(f_a_, g_a_) + product(f_b_, g_b_)),
      fg_mid_(product(f_mid_, g_mid_)),
      profile_(f, &g, b, a, spec),
      f_integral_(profile_.operator_integral(false)),
      g_integral_(profile_.operator_integral(true)),
      hull_{std::min(sa.min_eigenvalue(), sb.min_eigenvalue()), std::max(sa.max_eigenvalue(), sb.max_eigenvalue())} {}

bool PairContext::nonnegative_on_spectra() const { return f_.nonnegative_on(hull_) && g_.nonnegative_on(hull_); }

FunctionalTriple compute_mnp(const PairContext& ctx, const UnitVector& x) {
  const double fa = form(ctx.f_a(), x);
  const double fb = form(ctx.f_b(), x);
  const double ga = form(ctx.g_a(), x);
  const double gb = form(ctx.g_b(), x);
  return {fa * ga + fb * gb, fa * gb + fb * ga, form(ctx.endpoint_product_sum(), x)};
}

FunctionalTriple compute_mnp(const ScalarFunction& f, const ScalarFunction& g, const HermitianMatrix& a,
                             const HermitianMatrix& b, const UnitVector& x) {
  require_same_dim(a, b);
  require_same_dim(a, x);
  const HermitianMatrix fa = apply_function(f, a);
  const HermitianMatrix fb = apply_function(f, b);
  const HermitianMatrix ga = apply_function(g, a);
  const HermitianMatrix gb = apply_function(g, b);
  const double fax = form(fa, x);
  const double fbx = form(fb, x);
  const double gax = form(ga, x);
  const double gbx = form(gb, x);
  return {fax * gax + fbx * gbx, fax * gbx + fbx * gax, form(product(fa, ga) + product(fb, gb), x)};
}

// --- Refinement chain ---

bool ChainReport::passes() const {
  return std::all_of(links.begin(), links.end(), [](const OrderVerdict& v) { return v.holds_leq(); });
}

double ChainReport::worst_slack() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& link : links) worst = std::min(worst, link.witness_min_eig);
  return worst;
}

InequalityReport ChainReport::summary() const {
  const auto worst = std::min_element(links.begin(), links.end(), [](const OrderVerdict& l, const OrderVerdict& r) {
    return l.witness_min_eig + l.tolerance_used < r.witness_min_eig + r.tolerance_used;
  });
  return make_report("thm1-chain", 0.0, worst->witness_min_eig, worst->tolerance_used, quad_error,
                     Orientation::AToB);
}

ChainReport check_hh_chain(const ScalarFunction& f, const HermitianMatrix& a, const HermitianMatrix& b,
                           const QuadratureSpec& spec, const Tolerance& tol) {
  require_same_dim(a, b);
  const HermitianMatrix fa = apply_function(f, a);
  const HermitianMatrix fb = apply_function(f, b);
  const HermitianMatrix f_mid = apply_function(f, midpoint(a, b));
  const HermitianMatrix f_quarter = apply_function(f, segment_point(a, b, 0.25));
  const HermitianMatrix f_three_quarter = apply_function(f, segment_point(a, b, 0.75));
  MatrixIntegral integral = integrate_operator_segment(f, a, b, spec);
  const HermitianMatrix endpoint_mean = 0.5 * (fa + fb);

  ChainReport report{
      {f_mid, 0.5 * (f_quarter + f_three_quarter), integral.value, 0.5 * (f_mid + endpoint_mean), endpoint_mean},
      {},
      {},
      integral.error_estimate};
  const double slack = tol.abs + integral.error_estimate;
  for (std::size_t k = 0; k < report.links.size(); ++k) {
    report.links[k] = loewner_compare(report.stages[k], report.stages[k + 1], tol.rel, slack);
  }
  report.outer[0] = loewner_compare(report.stages[0], report.stages[2], tol.rel, slack);
  report.outer[1] = loewner_compare(report.stages[2], report.stages[4], tol.rel, slack);
  return report;
}

// --- Convexity of phi ---

std::vector<HermitianMatrix> phi_grid(const ScalarFunction& f, const HermitianMatrix& a, const HermitianMatrix& b,
                                      int grid_points) {
  require_same_dim(a, b);
  if (grid_points < 3) throw Error(ErrorCode::ParameterOutOfRange, "phi convexity grid needs >= 3 points");
  std::vector<HermitianMatrix> grid;
  grid.reserve(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i) {
    const double t = (i + 1 == grid_points) ? 1.0 : static_cast<double>(i) / (grid_points - 1);
    grid.push_back(apply_function(f, segment_point(a, b, t)));
  }
  return grid;
}

InequalityReport check_phi_convexity(std::span<const HermitianMatrix> grid, const UnitVector& x,
                                     const Tolerance& tol) {
  if (grid.size() < 3) throw Error(ErrorCode::ParameterOutOfRange, "phi convexity grid needs >= 3 points");
  std::vector<double> phi(grid.size());
  double scale = 1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    phi[i] = form(grid[i], x);
    scale = std::max(scale, std::abs(phi[i]));
  }
  std::size_t worst = 1;
  double worst_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < phi.size(); ++i) {
    const double slack = 0.5 * (phi[i - 1] + phi[i + 1]) - phi[i];
    if (slack < worst_slack) {
      worst_slack = slack;
      worst = i;
    }
  }
  return make_report("lemma-2.1", phi[worst], 0.5 * (phi[worst - 1] + phi[worst + 1]), tol.threshold(scale), 0.0,
                     Orientation::AToB);
}

InequalityReport check_phi_convexity(const ScalarFunction& f, const HermitianMatrix& a, const HermitianMatrix& b,
                                     const UnitVector& x, int grid_points, const Tolerance& tol) {
  require_same_dim(a, x);
  return check_phi_convexity(phi_grid(f, a, b, grid_points), x, tol);
}

// --- Product bounds ---

InequalityReport check_product_upper(const PairContext& ctx, const UnitVector& x, const Tolerance& tol) {
  const FunctionalTriple mnp = compute_mnp(ctx, x);
  const ScalarIntegral pf = ctx.profile().product_of_forms_integral(x);
  const double lhs = pf.value;
  const double rhs = mnp.m_value / 3.0 + mnp.n_value / 6.0;
  const double scale = scale_of({lhs, rhs, mnp.m_value, mnp.n_value});
  return make_report("thm3-2.2", lhs, rhs, tol.threshold(scale, pf.error_estimate), pf.error_estimate,
                     Orientation::BToA);
}

InequalityReport check_midpoint_product(const PairContext& ctx, const UnitVector& x, const Tolerance& tol) {
  const FunctionalTriple mnp = compute_mnp(ctx, x);
  const ScalarIntegral pf = ctx.profile().product_of_forms_integral(x);
  const double lhs = form(ctx.f_mid(), x) * form(ctx.g_mid(), x);
  const double rhs = 0.5 * pf.value + mnp.m_value / 12.0 + mnp.n_value / 6.0;
  const double err = 0.5 * pf.error_estimate;
  const double scale = scale_of({lhs, rhs, pf.value, mnp.m_value, mnp.n_value});
  return make_report("thm4-2.7", lhs, rhs, tol.threshold(scale, err), err, Orientation::BToA);
}

InequalityReport check_cross_product(const PairContext& ctx, const UnitVector& x, const Tolerance& tol) {
  const FunctionalTriple mnp = compute_mnp(ctx, x);
  const ScalarIntegral pf = ctx.profile().product_of_forms_integral(x);
  const ScalarIntegral int_f = ctx.profile().form_integral(x, false);
  const ScalarIntegral int_g = ctx.profile().form_integral(x, true);
  const double fm = form(ctx.f_mid(), x);
  const double gm = form(ctx.g_mid(), x);
  const double lhs = fm * int_g.value + gm * int_f.value;
  const double rhs = 0.5 * pf.value + mnp.m_value / 12.0 + mnp.n_value / 6.0 + fm * gm;
  const double err = std::abs(fm) * int_g.error_estimate + std::abs(gm) * int_f.error_estimate + 0.5 * pf.error_estimate;
  const double scale = scale_of({lhs, rhs, fm * int_g.value, gm * int_f.value, pf.value, mnp.m_value, mnp.n_value, fm * gm});
  return make_report("thm5-2.9", lhs, rhs, tol.threshold(scale, err), err, Orientation::BToA);
}

InequalityReport check_product_upper(const ScalarFunction& f, const ScalarFunction& g, const HermitianMatrix& a,
                                     const HermitianMatrix& b, const UnitVector& x, const QuadratureSpec& spec,
                                     const Tolerance& tol) {
  return check_product_upper(PairContext(f, g, a, b, spec), x, tol);
}

InequalityReport check_midpoint_product(const ScalarFunction& f, const ScalarFunction& g, const HermitianMatrix& a,
                                        const HermitianMatrix& b, const UnitVector& x, const QuadratureSpec& spec,
                                        const Tolerance& tol) {
  return check_midpoint_product(PairContext(f, g, a, b, spec), x, tol);
}

InequalityReport check_cross_product(const ScalarFunction& f, const ScalarFunction& g, const HermitianMatrix& a,
                                     const HermitianMatrix& b, const UnitVector& x, const QuadratureSpec& spec,
                                     const Tolerance& tol) {
  return check_cross_product(PairContext(f, g, a, b, spec), x, tol);
}

// --- Cebysev inequality and the M/N/P chains ---

InequalityReport check_cebysev(const ScalarFunction& f, const ScalarFunction& g, const HermitianMatrix& a,
                               const UnitVector& x, const SynchronyVerdict& synchrony, const Tolerance& tol) {
  require_classified(synchrony);
  require_same_dim(a, x);
  const SpectralDecomposition spectrum = spectral_decompose(a);
  const HermitianMatrix fa = apply_function(f, spectrum);
  const HermitianMatrix ga = apply_function(g, spectrum);
  const double product_form = form(product(fa, ga), x);
  const double forms_product = form(fa, x) * form(ga, x);
  const double scale = scale_of({product_form, forms_product});
  if (synchrony.cls == SynchronyClass::Synchronous) {
    return make_report("thm6-3.1", forms_product, product_form, tol.threshold(scale), 0.0, Orientation::None);
  }
  return make_report("thm6-3.1", product_form, forms_product, tol.threshold(scale), 0.0, Orientation::None);
}

std::array<InequalityReport, 2> check_mnp_chain(const PairContext& ctx, const UnitVector& x,
                                                const SynchronyVerdict& synchrony, const Tolerance& tol) {
  require_classified(synchrony);
  const FunctionalTriple t = compute_mnp(ctx, x);
  const double tolerance = tol.threshold(scale_of({t.m_value, t.n_value, t.p_value}));
  if (synchrony.cls == SynchronyClass::Synchronous) {
    return {make_report("chain-3.2/nm", t.n_value, t.m_value, tolerance, 0.0, Orientation::None),
            make_report("chain-3.2/mp", t.m_value, t.p_value, tolerance, 0.0, Orientation::None)};
  }
  return {make_report("chain-3.3/nm", t.m_value, t.n_value, tolerance, 0.0, Orientation::None),
          make_report("chain-3.3/mp", t.p_value, t.m_value, tolerance, 0.0, Orientation::None)};
}

std::array<InequalityReport, 2> check_mnp_chain(const ScalarFunction& f, const ScalarFunction& g,
                                                const HermitianMatrix& a, const HermitianMatrix& b,
                                                const UnitVector& x, const SynchronyVerdict& synchrony,
                                                const Tolerance& tol) {
  require_classified(synchrony);
  const FunctionalTriple t = compute_mnp(f, g, a, b, x);
  const double tolerance = tol.threshold(scale_of({t.m_value, t.n_value, t.p_value}));
  if (synchrony.cls == SynchronyClass::Synchronous) {
    return {make_report("chain-3.2/nm", t.n_value, t.m_value, tolerance, 0.0, Orientation::None),
            make_report("chain-3.2/mp", t.m_value, t.p_value, tolerance, 0.0, Orientation::None)};
  }
  return {make_report("chain-3.3/nm", t.m_value, t.n_value, tolerance, 0.0, Orientation::None),
          make_report("chain-3.3/mp", t.p_value, t.m_value, tolerance, 0.0, Orientation::None)};
}

// --- Synchrony-specialized bounds ---

std::vector<InequalityReport> check_remark_bounds(const PairContext& ctx, const UnitVector& x,
                                                  const SynchronyVerdict& synchrony, const Tolerance& tol) {
  require_classified(synchrony);
  const FunctionalTriple mnp = compute_mnp(ctx, x);
  const ScalarIntegral pf = ctx.profile().product_of_forms_integral(x);
  const ScalarIntegral op = ctx.profile().form_of_product_integral(x);
  const ScalarIntegral int_f = ctx.profile().form_integral(x, false);
  const ScalarIntegral int_g = ctx.profile().form_integral(x, true);
  const double fm = form(ctx.f_mid(), x);
  const double gm = form(ctx.g_mid(), x);
  const double fgm = form(ctx.mid_product(), x);
  const double cross_forms = fm * int_g.value + gm * int_f.value;
  const double cross_err = std::abs(fm) * int_g.error_estimate + std::abs(gm) * int_f.error_estimate;
  const double thm3_rhs = mnp.m_value / 3.0 + mnp.n_value / 6.0;
  const bool nonnegative = ctx.nonnegative_on_spectra();

  std::vector<InequalityReport> out;
  auto emit = [&](const char* id, double lhs, double rhs, double err, std::initializer_list<double> terms) {
    double scale = scale_of({lhs, rhs});
    for (double v : terms) scale = std::max(scale, std::abs(v));
    out.push_back(make_report(id, lhs, rhs, tol.threshold(scale, err), err,
                              err > 0.0 ? Orientation::BToA : Orientation::None));
  };

  if (synchrony.cls == SynchronyClass::Synchronous) {
    if (nonnegative) {
      emit("rem-3.4", pf.value, 0.5 * mnp.p_value, pf.error_estimate, {mnp.p_value});
    } else {
      out.push_back(skip_report("rem-3.4", "requires f, g >= 0 on the spectra"));
    }
    emit("rem-3.4/link", thm3_rhs, 0.5 * mnp.p_value, 0.0, {mnp.m_value, mnp.n_value, mnp.p_value});
    emit("rem-3.5", fm * gm, 0.5 * op.value + 0.25 * mnp.p_value, 0.5 * op.error_estimate, {op.value, mnp.p_value});
    emit("rem-3.5/pf", fm * gm, 0.5 * pf.value + 0.25 * mnp.p_value, 0.5 * pf.error_estimate,
         {pf.value, mnp.p_value});
    emit("rem-3.6", cross_forms, 0.5 * op.value + 0.25 * mnp.p_value + fgm, cross_err + 0.5 * op.error_estimate,
         {op.value, mnp.p_value, fgm});
    emit("rem-3.6/pf", cross_forms, 0.5 * pf.value + 0.25 * mnp.p_value + fm * gm,
         cross_err + 0.5 * pf.error_estimate, {pf.value, mnp.p_value, fm * gm});
    return out;
  }

  if (nonnegative) {
    emit("rem-3.7", op.value, 0.5 * mnp.n_value, op.error_estimate, {mnp.n_value});
    emit("rem-3.7/pf", pf.value, 0.5 * mnp.n_value, pf.error_estimate, {mnp.n_value});
  } else {
    out.push_back(skip_report("rem-3.7", "requires f, g >= 0 on the spectra"));
    out.push_back(skip_report("rem-3.7/pf", "requires f, g >= 0 on the spectra"));
  }
  emit("rem-3.7/link", thm3_rhs, 0.5 * mnp.n_value, 0.0, {mnp.m_value, mnp.n_value});
  emit("rem-3.8", fgm, 0.5 * pf.value + 0.25 * mnp.n_value, 0.5 * pf.error_estimate, {pf.value, mnp.n_value});
  emit("rem-3.8/pf", fm * gm, 0.5 * pf.value + 0.25 * mnp.n_value, 0.5 * pf.error_estimate,
       {pf.value, mnp.n_value});

  // <[f(mid) ∫g + g(mid) ∫f] x, x>: the operator is not Hermitian in
  // general, so its real part (the form of the Hermitian part) is used.
  const ComplexMatrix mixed = ctx.f_mid().matrix() * ctx.g_integral().value.matrix() +
                              ctx.g_mid().matrix() * ctx.f_integral().value.matrix();
  const double mixed_form = x.vector().dot(mixed * x.vector()).real();
  const double mixed_err = spectral_norm(ctx.f_mid()) * ctx.g_integral().error_estimate +
                           spectral_norm(ctx.g_mid()) * ctx.f_integral().error_estimate;
  emit("rem-3.9", mixed_form, 0.5 * pf.value + 0.25 * mnp.n_value + fm * gm, mixed_err + 0.5 * pf.error_estimate,
       {pf.value, mnp.n_value, fm * gm});
  emit("rem-3.9/pf", cross_forms, 0.5 * pf.value + 0.25 * mnp.n_value + fm * gm,
       cross_err + 0.5 * pf.error_estimate, {pf.value, mnp.n_value, fm * gm});
  return out;
}

std::vector<InequalityReport> check_remark_bounds(const ScalarFunction& f, const ScalarFunction& g,
                                                  const HermitianMatrix& a, const HermitianMatrix& b,
                                                  const UnitVector& x, const SynchronyVerdict& synchrony,
                                                  const QuadratureSpec& spec, const Tolerance& tol) {
  return check_remark_bounds(PairContext(f, g, a, b, spec), x, synchrony, tol);
}

// --- Worked example ---

namespace {

PairContext example_context(const HermitianMatrix& a, const HermitianMatrix& b, const QuadratureSpec& spec) {
  return PairContext(find_function("identity"), find_function("square"), a, b, spec);
}

/// M, N, P from the closed forms in A, A^2, A^3, checked against the
/// functional-calculus values.
FunctionalTriple example_mnp(const PairContext& ctx, const UnitVector& x) {
  const ComplexMatrix& am = ctx.a().matrix();
  const ComplexMatrix& bm = ctx.b().matrix();
  const HermitianMatrix a2 = HermitianMatrix::symmetrized(am * am);
  const HermitianMatrix b2 = HermitianMatrix::symmetrized(bm * bm);
  const HermitianMatrix cubes = HermitianMatrix::symmetrized(am * am * am + bm * bm * bm);
  const double ax = form(ctx.a(), x);
  const double bx = form(ctx.b(), x);
  const FunctionalTriple closed{ax * form(a2, x) + bx * form(b2, x), ax * form(b2, x) + bx * form(a2, x),
                                form(cubes, x)};

  const FunctionalTriple generic = compute_mnp(ctx, x);
  const double scale = std::max({1.0, spectral_norm(ctx.a()), spectral_norm(ctx.b())});
  const double limit = 1e-12 * scale * scale * scale;
  if (std::abs(closed.m_value - generic.m_value) > limit || std::abs(closed.n_value - generic.n_value) > limit ||
      std::abs(closed.p_value - generic.p_value) > limit) {
    throw Error(ErrorCode::ConsistencyFailure, "example M/N/P closed forms disagree with functional calculus");
  }
  return closed;
}

InequalityReport example_sync(const PairContext& ctx, const UnitVector& x, const Tolerance& tol) {
  const FunctionalTriple mnp = example_mnp(ctx, x);
  const ScalarIntegral pf = ctx.profile().product_of_forms_integral(x);
  const double rhs = 0.5 * mnp.p_value;
  return make_report("example-3/sync", pf.value, rhs, tol.threshold(scale_of({pf.value, rhs}), pf.error_estimate),
                     pf.error_estimate, Orientation::BToA);
}

InequalityReport example_async(const PairContext& ctx, const UnitVector& x, const Tolerance& tol) {
  const FunctionalTriple mnp = example_mnp(ctx, x);
  const ScalarIntegral pf = ctx.profile().product_of_forms_integral(x);
  const ComplexMatrix& mm = ctx.f_mid().matrix();  // f is the identity, so f((A+B)/2) = (A+B)/2
  const double lhs = form(HermitianMatrix::symmetrized(mm * mm * mm), x);
  const double rhs = 0.5 * pf.value + 0.25 * mnp.n_value;
  const double err = 0.5 * pf.error_estimate;
  return make_report("example-3/async", lhs, rhs, tol.threshold(scale_of({lhs, rhs, pf.value, mnp.n_value}), err),
                     err, Orientation::BToA);
}

}  // namespace

InequalityReport check_example_sync(const HermitianMatrix& a, const HermitianMatrix& b, const UnitVector& x,
                                    const QuadratureSpec& spec, const Tolerance& tol) {
  return example_sync(example_context(a, b, spec), x, tol);
}

InequalityReport check_example_async(const HermitianMatrix& a, const HermitianMatrix& b, const UnitVector& x,
                                     const QuadratureSpec& spec, const Tolerance& tol) {
  return example_async(example_context(a, b, spec), x, tol);
}

std::vector<InequalityReport> run_paper_example(int dim, int trials, std::uint64_t seed, int probes,
                                                const QuadratureSpec& spec, const Tolerance& tol) {
  if (dim < 1 || trials < 1 || probes < 1) {
    throw Error(ErrorCode::ConfigInvalid, "example needs dim, trials and probes >= 1");
  }
  std::vector<InequalityReport> out;
  out.reserve(static_cast<std::size_t>(2 * trials * probes));
  for (int trial = 0; trial < trials; ++trial) {
    for (const bool sync : {true, false}) {
      const Interval interval = sync ? kExampleSyncInterval : kExampleAsyncInterval;
      // Even/odd trial keys keep the two cases on independent streams.
      const TrialSpec ts{dim, interval, seed, static_cast<std::uint64_t>(2 * trial + (sync ? 0 : 1))};
      const std::uint64_t seed_a = ts.sub_seed(Stream::MatrixA);
      const std::uint64_t seed_b = ts.sub_seed(Stream::MatrixB);
      const PairContext ctx =
          example_context(random_hermitian(dim, interval, seed_a), random_hermitian(dim, interval, seed_b), spec);
      for (int probe = 0; probe < probes; ++probe) {
        const std::uint64_t seed_x = ts.sub_seed(probe_stream(probe));
        const UnitVector x = random_unit_vector(dim, seed_x);
        InequalityReport r = sync ? example_sync(ctx, x, tol) : example_async(ctx, x, tol);
        r.context.dim = dim;
        r.context.functions = {"identity", "square"};
        r.context.interval = interval;
        r.context.trial = trial;
        r.context.probe = probe;
        r.context.subseeds = {{"A", seed_a}, {"B", seed_b}, {"x", seed_x}};
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

}  // namespace hhverify
