#pragma once

#include <complex>
#include <initializer_list>
#include <span>

#include <Eigen/Dense>

#include "hhverify/common.hpp"
#include "hhverify/scalar_function.hpp"

namespace hhverify {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kSpectralTol = 1e-9;
inline constexpr double kUnitTol = 1e-12;
inline constexpr double kDomainGuardTol = 1e-9;
inline constexpr double kFormImagTol = 1e-12;

/// Complex Hermitian matrix; the finite-dimensional selfadjoint operator.
///
/// Every instance is exactly Hermitian in floating point: inputs are
/// replaced by (M + M*)/2 on construction, which makes the (i,j) and (j,i)
/// entries exact conjugates and the diagonal exactly real.
class HermitianMatrix {
 public:
  /// Validates finiteness and approximate Hermitian symmetry
  /// (max |M - M*| <= kHermitianTol * max(1, ||M||)), then symmetrizes.
  explicit HermitianMatrix(const ComplexMatrix& m);

  /// Symmetrizes without the symmetry tolerance check. Intended for values
  /// that are Hermitian up to round-off (products of commuting functions of
  /// the same matrix, sums, reconstructions). Finiteness is still enforced.
  static HermitianMatrix symmetrized(const ComplexMatrix& m);

  static HermitianMatrix identity(Index n);
  static HermitianMatrix zero(Index n);
  static HermitianMatrix diagonal(std::span<const double> values);
  static HermitianMatrix diagonal(std::initializer_list<double> values);
  static HermitianMatrix real_symmetric(const Eigen::MatrixXd& m);

  Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }

  HermitianMatrix operator+(const HermitianMatrix& other) const;
  HermitianMatrix operator-(const HermitianMatrix& other) const;
  HermitianMatrix operator*(double s) const;
  friend HermitianMatrix operator*(double s, const HermitianMatrix& a) { return a * s; }

 private:
  struct Unchecked {};
  HermitianMatrix(Unchecked, ComplexMatrix m) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

/// Eigen-decomposition U diag(lambda) U* with ascending eigenvalues.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
  double residual = 0.0;

  double min_eigenvalue() const { return eigenvalues(0); }
  double max_eigenvalue() const { return eigenvalues(eigenvalues.size() - 1); }
  /// Spectral norm, max |lambda|.
  double norm() const;
};

/// Unit vector in C^n, |‖x‖ - 1| <= kUnitTol.
class UnitVector {
 public:
  explicit UnitVector(ComplexVector v);

  /// Rescales a nonzero vector to unit length.
  static UnitVector normalized(const ComplexVector& v);
  static UnitVector basis(Index n, Index i);

  Index dim() const { return v_.size(); }
  const ComplexVector& vector() const { return v_; }

 private:
  ComplexVector v_;
};

enum class Relation { Leq, Geq, Incomparable, Equal };
std::string_view to_string(Relation r);

struct OrderVerdict {
  Relation relation = Relation::Incomparable;
  /// Smallest eigenvalue of (B - A).
  double witness_min_eig = 0.0;
  /// Largest eigenvalue of (B - A); GEQ is decided on its negation.
  double witness_max_eig = 0.0;
  double tolerance_used = 0.0;

  /// True for LEQ and EQUAL.
  bool holds_leq() const { return relation == Relation::Leq || relation == Relation::Equal; }
};

SpectralDecomposition spectral_decompose(const HermitianMatrix& a);

/// Spectral norm, computed from the eigenvalues.
double spectral_norm(const HermitianMatrix& a);

/// f(A) = U diag(f(lambda_i)) U*. Eigenvalues within kDomainGuardTol of the
/// domain ends are clamped onto the domain before evaluation.
HermitianMatrix apply_function(const ScalarFunction& f, const HermitianMatrix& a);
HermitianMatrix apply_function(const ScalarFunction& f, const SpectralDecomposition& spectrum);

/// Loewner comparison. LEQ iff min-eig(B - A) >= -(tol * max(1, ‖A‖, ‖B‖) + extra_slack);
/// GEQ symmetric; both means EQUAL.
OrderVerdict loewner_compare(const HermitianMatrix& a, const HermitianMatrix& b, double tol,
                             double extra_slack = 0.0);

/// Real part of x* A x. Throws ConsistencyFailure if the imaginary part
/// exceeds kFormImagTol * max(1, ‖A‖).
double quadratic_form(const HermitianMatrix& a, const UnitVector& x);

/// (1 - t) A + t B for t in [0, 1].
HermitianMatrix segment_point(const HermitianMatrix& a, const HermitianMatrix& b, double t);

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b);
void require_same_dim(const HermitianMatrix& a, const UnitVector& x);

}  // namespace hhverify
