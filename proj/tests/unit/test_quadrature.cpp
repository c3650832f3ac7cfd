#include <doctest.h>

#include <cmath>

#include "hhverify/catalog.hpp"
#include "hhverify/quadrature.hpp"
#include "hhverify/sampling.hpp"
#include "oracles.hpp"

using namespace hhverify;

namespace {

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

HermitianMatrix scalar(double v) { return HermitianMatrix::diagonal({v}); }

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("Gauss-Legendre tables") {
  for (int n = 2; n <= 16; ++n) {
    const auto rule = gauss_legendre(n);
    REQUIRE(static_cast<int>(rule.size()) == n);
    double w = 0.0;
    for (const auto& node : rule) w += node.weight;
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
    // exact for t^(2n-2) on [-1, 1]
    double m = 0.0;
    for (const auto& node : rule) m += node.weight * std::pow(node.t, 2 * n - 2);
    CHECK(m == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gauss_legendre(1), Error);
  CHECK_THROWS_AS(gauss_legendre(17), Error);
}

TEST_CASE("spec validation") {
  CHECK_NOTHROW(QuadratureSpec{}.validate());
  CHECK_THROWS_AS((QuadratureSpec{0, 8}.validate()), Error);
  CHECK_THROWS_AS((QuadratureSpec{8, 1}.validate()), Error);
  CHECK_THROWS_AS((QuadratureSpec{8, 17}.validate()), Error);
  CHECK_THROWS_AS((QuadratureSpec{200000, 8}.validate()), Error);
  CHECK(QuadratureSpec{3, 4}.refined().panels == 6);
  const auto rule = composite_rule({4, 3});
  CHECK(rule.size() == 12);
  double w = 0.0;
  for (const auto& n : rule) {
    CHECK(n.t > 0.0);
    CHECK(n.t < 1.0);
    w += n.weight;
  }
  CHECK(w == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("scalar integration and its error estimate") {
  const auto r = integrate_scalar({}, [](double t) { return std::exp(t); });
  CHECK(std::abs(r.value - (std::exp(1.0) - 1.0)) < 1e-14);
  const auto poly = integrate_scalar({1, 2}, [](double t) { return t * t * t; });
  CHECK(poly.value == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(poly.error_estimate < 1e-15);
}

TEST_CASE("operator integral examples") {
  const auto sq = find_function("square");
  const auto r = integrate_operator_segment(sq, scalar(0), scalar(1));
  CHECK(r.value(0, 0).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  for (int dim = 1; dim <= 6; ++dim) {
    const auto a = random_hermitian(dim, {-2, 3}, derive_seed(1, dim, 0, 1));
    const auto b = random_hermitian(dim, {-2, 3}, derive_seed(1, dim, 0, 2));
    const double scale = std::max({1.0, spectral_norm(a), spectral_norm(b)});
    const auto aff = integrate_operator_segment(affine(2.5, -1.0), a, b);
    const ComplexMatrix expect = 2.5 * 0.5 * (a.matrix() + b.matrix()) - ComplexMatrix::Identity(dim, dim);
    CHECK(max_diff(aff.value.matrix(), expect) <= 1e-12 * scale);
    CHECK(aff.error_estimate <= 1e-12 * scale);
  }
}

TEST_CASE("square integral matches its closed form") {
  const auto sq = find_function("square");
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    const int dim = 1 + static_cast<int>(trial % 8);
    const auto a = random_hermitian(dim, {-10, 10}, derive_seed(2, dim, trial, 1));
    const auto b = random_hermitian(dim, {-10, 10}, derive_seed(2, dim, trial, 2));
    const double scale = std::max({1.0, spectral_norm(a), spectral_norm(b)});
    const auto r = integrate_operator_segment(sq, a, b);
    CHECK(max_diff(r.value.matrix(), oracle::square_segment_integral(a.matrix(), b.matrix())) <=
          1e-10 * scale * scale);
  }
}

TEST_CASE("operator integral is symmetric in its endpoints") {
  for (const char* id : {"square", "inverse", "xlogx", "power-1.5"}) {
    const auto f = find_function(id);
    const auto a = random_hermitian(4, {0.5, 2}, derive_seed(4, 4, 0, 1));
    const auto b = random_hermitian(4, {0.5, 2}, derive_seed(4, 4, 0, 2));
    const auto ab = integrate_operator_segment(f, a, b).value;
    const auto ba = integrate_operator_segment(f, b, a).value;
    const double scale = std::max(1.0, spectral_norm(ab));
    CAPTURE(id);
    CHECK(max_diff(ab.matrix(), ba.matrix()) <= 1e-12 * scale);
  }
}

TEST_CASE("scalar form examples") {
  const auto id = find_function("identity");
  const auto sq = find_function("square");
  const auto one = find_function("constant");
  const auto x1 = UnitVector::basis(1, 0);
  CHECK(integrate_scalar_form(id, scalar(0), scalar(1), x1).value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(integrate_scalar_product_form(id, sq, scalar(0), scalar(1), x1).value == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(integrate_scalar_product_form(id, id, scalar(0), scalar(1), x1).value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(integrate_scalar_product_form(one, one, scalar(0), scalar(1), x1).value == doctest::Approx(1.0));

  const auto a = random_hermitian(3, {-1, 1}, 11);
  const auto b = random_hermitian(3, {-1, 1}, 12);
  const auto x = random_unit_vector(3, 13);
  CHECK(integrate_scalar_form(one, a, b, x).value == doctest::Approx(1.0).epsilon(1e-14));
  const auto lin = integrate_scalar_form(affine(3.0, 1.0), a, b, x, {1, 2});
  CHECK(lin.error_estimate <= 1e-14);
  CHECK(lin.value == doctest::Approx(1.5 * (quadratic_form(a, x) + quadratic_form(b, x)) + 1.0).epsilon(1e-13));
}

TEST_CASE("polynomial exactness of the product form") {
  // deg f + deg g = 5 <= 2k - 1 with k = 3 nodes
  const auto sq = find_function("square");
  const auto cube = find_function("cube");
  for (int dim = 1; dim <= 5; ++dim) {
    const auto a = random_hermitian(dim, {-1, 2}, derive_seed(6, dim, 0, 1));
    const auto b = random_hermitian(dim, {-1, 2}, derive_seed(6, dim, 0, 2));
    const auto x = random_unit_vector(dim, derive_seed(6, dim, 0, 1000));
    const auto coarse = integrate_scalar_product_form(sq, cube, a, b, x, {1, 3});
    const auto fine = integrate_scalar_product_form(sq, cube, a, b, x, {32, 16});
    const double scale = std::max(1.0, std::abs(fine.value));
    CHECK(std::abs(coarse.value - fine.value) <= 1e-12 * scale);
  }
}

TEST_CASE("error estimate shrinks under refinement") {
  const auto x = UnitVector::basis(1, 0);
  for (const char* id : {"inverse", "xlogx", "sqrt", "power-1.5"}) {
    const auto f = find_function(id);
    double prev = INFINITY;
    for (int panels : {1, 2, 4, 8}) {
      const double e = integrate_scalar_form(f, scalar(0.05), scalar(3.0), x, {panels, 4}).error_estimate;
      CAPTURE(id);
      CAPTURE(panels);
      CHECK((e < prev || e <= 1e-14));
      prev = e;
    }
  }
}

TEST_CASE("dimension-1 integrals agree with the trapezoid oracle") {
  const auto cat = builtin_catalog();
  for (const auto& f : cat) {
    for (const auto& g : cat) {
      const Interval iv{std::max({0.5, f.domain().lo, g.domain().lo}), 2.0};
      const double a = iv.lo + 0.2;
      const double b = iv.hi - 0.1;
      const auto x = UnitVector::basis(1, 0);
      oracle::ScalarCase sc{[&](double t) { return f(t); }, [&](double t) { return g(t); }, a, b};
      CAPTURE(f.id());
      CAPTURE(g.id());
      CHECK(std::abs(integrate_scalar_form(f, scalar(a), scalar(b), x).value - sc.int_f()) <= 1e-8);
      CHECK(std::abs(integrate_scalar_product_form(f, g, scalar(a), scalar(b), x).value - sc.int_fg()) <= 1e-8);
      const double op = integrate_operator_segment(f, scalar(a), scalar(b)).value(0, 0).real();
      CHECK(std::abs(op - oracle::trapezoid([&](double t) { return f((1 - t) * a + t * b); })) <= 1e-8);
    }
  }
}

TEST_CASE("segment profile rejects mismatched inputs") {
  const auto sq = find_function("square");
  CHECK_THROWS_AS(integrate_operator_segment(sq, HermitianMatrix::identity(2), HermitianMatrix::identity(3)), Error);
  CHECK_THROWS_AS(integrate_operator_segment(find_function("sqrt"), scalar(-1), scalar(1)), Error);
}

}  // TEST_SUITE
