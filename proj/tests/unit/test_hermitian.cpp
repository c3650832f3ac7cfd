#include <doctest.h>

#include <cmath>
#include <limits>

#include "hhverify/catalog.hpp"
#include "hhverify/hermitian.hpp"
#include "hhverify/sampling.hpp"
#include "oracles.hpp"

using namespace hhverify;

namespace {

ComplexMatrix swap2() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

ScalarFunction poly(std::string id, std::vector<double> c) {
  auto rule = [c](double t) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  };
  return ScalarFunction(std::move(id), {-10, 10}, rule, ConvexityClass::Unknown, false, Monotonicity::Nonmonotone, c);
}

}  // namespace

TEST_SUITE("hermitian") {

TEST_CASE("construction validates symmetry and finiteness") {
  ComplexMatrix m(2, 2);
  m << 1, Complex(0, 1), Complex(0, -1), 2;
  CHECK_NOTHROW(HermitianMatrix{m});

  ComplexMatrix bad(2, 2);
  bad << 1, 2, 3, 4;
  CHECK_THROWS_AS(HermitianMatrix{bad}, Error);
  try {
    HermitianMatrix{bad};
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }

  ComplexMatrix nan = ComplexMatrix::Zero(2, 2);
  nan(0, 0) = std::numeric_limits<double>::quiet_NaN();
  try {
    HermitianMatrix{nan};
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonFiniteEntries);
  }

  ComplexMatrix rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(HermitianMatrix{rect}, Error);
}

TEST_CASE("tiny asymmetry is symmetrized away") {
  ComplexMatrix m = swap2();
  m(0, 1) += 1e-12;
  const HermitianMatrix h(m);
  CHECK(h(0, 1) == h(1, 0));
}

TEST_CASE("spectral_decompose examples") {
  SUBCASE("diagonal input") {
    const auto s = spectral_decompose(HermitianMatrix::diagonal({3.0, 1.0}));
    CHECK(s.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(s.eigenvalues(1) == doctest::Approx(3.0));
    CHECK(std::abs(s.eigenvectors(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(s.eigenvectors(0, 1)) == doctest::Approx(1.0));
  }
  SUBCASE("swap matrix") {
    const auto s = spectral_decompose(HermitianMatrix(swap2()));
    CHECK(s.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(s.eigenvalues(1) == doctest::Approx(1.0));
    const double r = 1.0 / std::sqrt(2.0);
    // eigenvectors are fixed up to a phase
    CHECK(std::abs(s.eigenvectors(0, 0) + s.eigenvectors(1, 0)) < 1e-12);
    CHECK(std::abs(std::abs(s.eigenvectors(0, 0)) - r) < 1e-12);
    CHECK(std::abs(s.eigenvectors(0, 1) - s.eigenvectors(1, 1)) < 1e-12);
  }
  SUBCASE("identity") {
    const auto s = spectral_decompose(HermitianMatrix::identity(5));
    for (Index i = 0; i < 5; ++i) CHECK(s.eigenvalues(i) == doctest::Approx(1.0));
    CHECK(s.residual <= kSpectralTol);
  }
}

TEST_CASE("spectral_decompose invariants on random matrices") {
  for (int dim = 1; dim <= 8; ++dim) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const HermitianMatrix a = random_hermitian(dim, {-3, 5}, derive_seed(7, dim, seed, 1));
      const auto s = spectral_decompose(a);
      const double scale = std::max(1.0, s.norm());
      const ComplexMatrix rebuilt = s.eigenvectors * s.eigenvalues.cast<Complex>().asDiagonal() *
                                    s.eigenvectors.adjoint();
      CHECK((rebuilt - a.matrix()).norm() <= kSpectralTol * scale);
      CHECK((s.eigenvectors.adjoint() * s.eigenvectors - ComplexMatrix::Identity(dim, dim)).norm() <= kSpectralTol);
      for (Index i = 1; i < dim; ++i) CHECK(s.eigenvalues(i - 1) <= s.eigenvalues(i));
      const auto again = spectral_decompose(a);
      CHECK(again.eigenvalues == s.eigenvalues);
    }
  }
}

TEST_CASE("apply_function examples") {
  const HermitianMatrix a(swap2());
  CHECK(max_diff(apply_function(find_function("square"), a).matrix(), ComplexMatrix::Identity(2, 2)) < 1e-12);
  CHECK(max_diff(apply_function(find_function("identity"), a).matrix(), a.matrix()) < 1e-12);
  CHECK(max_diff(apply_function(find_function("constant"), a).matrix(), ComplexMatrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("apply_function rejects spectra outside the domain") {
  const HermitianMatrix a = HermitianMatrix::diagonal({-1.0, 2.0});
  try {
    apply_function(find_function("sqrt"), a);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainViolation);
  }
}

TEST_CASE("functional calculus is multiplicative on polynomials") {
  const auto p = poly("p", {1.0, -2.0, 0.5});
  const auto q = poly("q", {0.0, 3.0, 0.0, -1.0});
  const auto pq = poly("pq", {0.0, 3.0, -6.0, 0.5, 2.0, -0.5});
  for (int dim = 1; dim <= 8; ++dim) {
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
      const auto a = random_hermitian(dim, {-2, 2}, derive_seed(11, dim, trial, 1));
      const ComplexMatrix lhs = apply_function(pq, a).matrix();
      const ComplexMatrix rhs = apply_function(p, a).matrix() * apply_function(q, a).matrix();
      const double scale = std::max({1.0, lhs.norm(), rhs.norm()});
      CHECK(max_diff(lhs, rhs) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("pointwise order carries to the operator order") {
  // t^2 >= 2t - 1 everywhere, so A^2 >= 2A - I
  const auto sq = find_function("square");
  const auto tangent = affine(2.0, -1.0);
  for (int dim = 1; dim <= 8; ++dim) {
    const auto a = random_hermitian(dim, {-3, 3}, derive_seed(3, dim, 0, 1));
    CHECK(loewner_compare(apply_function(tangent, a), apply_function(sq, a), 1e-9).holds_leq());
  }
}

TEST_CASE("loewner_compare examples") {
  CHECK(loewner_compare(HermitianMatrix::diagonal({0.0, 0.0}), HermitianMatrix::diagonal({1.0, 2.0}), 1e-9).relation ==
        Relation::Leq);
  CHECK(loewner_compare(HermitianMatrix::diagonal({1.0, 2.0}), HermitianMatrix::diagonal({0.0, 0.0}), 1e-9).relation ==
        Relation::Geq);
  const auto inc = loewner_compare(HermitianMatrix::diagonal({0.0, 1.0}), HermitianMatrix::diagonal({1.0, 0.0}), 1e-9);
  CHECK(inc.relation == Relation::Incomparable);
  CHECK(inc.witness_min_eig == doctest::Approx(-1.0));
  const auto a = HermitianMatrix(swap2());
  CHECK(loewner_compare(a, a, 1e-9).relation == Relation::Equal);
  CHECK(loewner_compare(a, a, 1e-9).holds_leq());
}

TEST_CASE("loewner_compare verdict matches its witness") {
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    const auto a = random_hermitian(3, {0, 1}, derive_seed(5, 3, trial, 1));
    const auto b = random_hermitian(3, {0, 1}, derive_seed(5, 3, trial, 2));
    const auto v = loewner_compare(a, b, 1e-9);
    const double m = oracle::min_eig(b.matrix() - a.matrix());
    CHECK(v.witness_min_eig == doctest::Approx(m).epsilon(1e-9));
    CHECK(v.holds_leq() == (m >= -v.tolerance_used));
  }
}

TEST_CASE("quadratic_form examples") {
  const auto d = HermitianMatrix::diagonal({0.0, 1.0});
  CHECK(quadratic_form(d, UnitVector::basis(2, 0)) == 0.0);
  ComplexVector v(2);
  v << 1, 1;
  CHECK(quadratic_form(d, UnitVector::normalized(v)) == doctest::Approx(0.5));
  for (std::uint64_t s = 0; s < 10; ++s) {
    CHECK(quadratic_form(HermitianMatrix::identity(4), random_unit_vector(4, s)) == doctest::Approx(1.0));
  }
}

TEST_CASE("quadratic_form is a Rayleigh quotient") {
  for (int dim = 1; dim <= 8; ++dim) {
    for (std::uint64_t trial = 0; trial < 25; ++trial) {
      const auto a = random_hermitian(dim, {-4, 1}, derive_seed(9, dim, trial, 1));
      const auto x = random_unit_vector(dim, derive_seed(9, dim, trial, 1000));
      const auto s = spectral_decompose(a);
      const double q = quadratic_form(a, x);
      CHECK(q >= s.min_eigenvalue() - 1e-12);
      CHECK(q <= s.max_eigenvalue() + 1e-12);
      CHECK(q == doctest::Approx(oracle::form(a.matrix(), x.vector()).real()).epsilon(1e-12));
    }
  }
}

TEST_CASE("unit vectors are validated") {
  ComplexVector v(2);
  v << 1, 1;
  try {
    UnitVector{v};
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnitVector);
  }
  CHECK_THROWS_AS(quadratic_form(HermitianMatrix::identity(3), UnitVector::basis(2, 0)), Error);
}

TEST_CASE("segment_point examples and errors") {
  const auto a = HermitianMatrix::diagonal({0.0, 0.0});
  const auto b = HermitianMatrix::diagonal({2.0, 4.0});
  CHECK(max_diff(segment_point(a, b, 0.0).matrix(), a.matrix()) == 0.0);
  CHECK(max_diff(segment_point(a, b, 1.0).matrix(), b.matrix()) == 0.0);
  CHECK(max_diff(segment_point(a, b, 0.5).matrix(), HermitianMatrix::diagonal({1.0, 2.0}).matrix()) < 1e-15);

  ComplexMatrix half(2, 2);
  half << 0.5, 0.5, 0.5, 0.5;
  CHECK(max_diff(segment_point(HermitianMatrix(swap2()), HermitianMatrix::identity(2), 0.5).matrix(), half) < 1e-15);

  try {
    segment_point(a, b, 1.5);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParameterOutOfRange);
  }
  try {
    segment_point(a, HermitianMatrix::identity(3), 0.5);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimMismatch);
  }
}

TEST_CASE("segment points keep spectra in the interval") {
  const Interval iv{-1.5, 2.5};
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    const int dim = 1 + static_cast<int>(trial % 8);
    const auto a = random_hermitian(dim, iv, derive_seed(13, dim, trial, 1));
    const auto b = random_hermitian(dim, iv, derive_seed(13, dim, trial, 2));
    const double t = random_unit_interval(derive_seed(13, dim, trial, 3));
    const auto s = spectral_decompose(segment_point(a, b, t));
    CHECK(s.min_eigenvalue() >= iv.lo - 1e-12 * 4);
    CHECK(s.max_eigenvalue() <= iv.hi + 1e-12 * 4);
  }
}

}  // TEST_SUITE
