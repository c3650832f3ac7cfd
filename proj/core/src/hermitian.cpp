#include "hhverify/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace hhverify {

namespace {

void require_finite(const ComplexMatrix& m) {
  if (!m.allFinite()) throw Error(ErrorCode::NonFiniteEntries, "matrix has non-finite entries");
}

ComplexMatrix symmetrize(const ComplexMatrix& m) {
  return (m + m.adjoint()) * 0.5;
}

double guard(double end) { return kDomainGuardTol * std::max(1.0, std::abs(end)); }

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw Error(ErrorCode::DimMismatch, "Hermitian matrix must be square with dim >= 1");
  }
  require_finite(m);
  m_ = symmetrize(m);
  const double skew = (m - m.adjoint()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, spectral_norm(*this));
  if (skew > kHermitianTol * scale) {
    std::ostringstream os;
    os << "max |M - M*| = " << skew << " exceeds tolerance " << kHermitianTol * scale;
    throw Error(ErrorCode::NotHermitian, os.str());
  }
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw Error(ErrorCode::DimMismatch, "Hermitian matrix must be square with dim >= 1");
  }
  require_finite(m);
  return HermitianMatrix(Unchecked{}, symmetrize(m));
}

HermitianMatrix HermitianMatrix::identity(Index n) {
  return HermitianMatrix(Unchecked{}, ComplexMatrix::Identity(n, n));
}

HermitianMatrix HermitianMatrix::zero(Index n) {
  return HermitianMatrix(Unchecked{}, ComplexMatrix::Zero(n, n));
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Index>(values.size()), static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) m(static_cast<Index>(i), static_cast<Index>(i)) = values[i];
  return symmetrized(m);
}

HermitianMatrix HermitianMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

HermitianMatrix HermitianMatrix::real_symmetric(const Eigen::MatrixXd& m) {
  return HermitianMatrix(ComplexMatrix(m.cast<Complex>()));
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& other) const {
  require_same_dim(*this, other);
  return symmetrized(m_ + other.m_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& other) const {
  require_same_dim(*this, other);
  return symmetrized(m_ - other.m_);
}

HermitianMatrix HermitianMatrix::operator*(double s) const { return symmetrized(m_ * s); }

double SpectralDecomposition::norm() const {
  return std::max(std::abs(min_eigenvalue()), std::abs(max_eigenvalue()));
}

UnitVector::UnitVector(ComplexVector v) : v_(std::move(v)) {
  if (v_.size() < 1) throw Error(ErrorCode::DimMismatch, "unit vector must have dim >= 1");
  if (!v_.allFinite()) throw Error(ErrorCode::NonFiniteEntries, "unit vector has non-finite entries");
  if (std::abs(v_.norm() - 1.0) > kUnitTol) {
    throw Error(ErrorCode::NotUnitVector, "vector norm " + std::to_string(v_.norm()) + " is not 1");
  }
}

UnitVector UnitVector::normalized(const ComplexVector& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::NotUnitVector, "cannot normalize a zero or non-finite vector");
  }
  return UnitVector(v / n);
}

UnitVector UnitVector::basis(Index n, Index i) {
  if (i < 0 || i >= n) throw Error(ErrorCode::ParameterOutOfRange, "basis index out of range");
  return UnitVector(ComplexVector::Unit(n, i));
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Leq: return "LEQ";
    case Relation::Geq: return "GEQ";
    case Relation::Incomparable: return "INCOMPARABLE";
    case Relation::Equal: return "EQUAL";
  }
  return "INCOMPARABLE";
}

SpectralDecomposition spectral_decompose(const HermitianMatrix& a) {
  const ComplexMatrix& m = a.matrix();
  require_finite(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  SpectralDecomposition out;
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  const ComplexMatrix rebuilt =
      out.eigenvectors * out.eigenvalues.cast<Complex>().asDiagonal() * out.eigenvectors.adjoint();
  out.residual = (rebuilt - m).norm();
  const double scale = std::max(1.0, out.norm());
  if (!(out.residual <= kSpectralTol * scale)) {
    throw Error(ErrorCode::ConvergenceFailure,
                "reconstruction residual " + std::to_string(out.residual) + " exceeds tolerance");
  }
  return out;
}

double spectral_norm(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

HermitianMatrix apply_function(const ScalarFunction& f, const SpectralDecomposition& spectrum) {
  const Interval& dom = f.domain();
  const Index n = spectrum.eigenvalues.size();
  RealVector values(n);
  for (Index i = 0; i < n; ++i) {
    const double lambda = spectrum.eigenvalues(i);
    if (lambda < dom.lo - guard(dom.lo) || lambda > dom.hi + guard(dom.hi) || !std::isfinite(lambda)) {
      std::ostringstream os;
      os.precision(17);
      os << "eigenvalue " << lambda << " outside domain " << to_string(dom) << " of '" << f.id() << "'";
      throw Error(ErrorCode::DomainViolation, os.str());
    }
    values(i) = f(std::clamp(lambda, dom.lo, dom.hi));
  }
  const ComplexMatrix& u = spectrum.eigenvectors;
  return HermitianMatrix::symmetrized(u * values.cast<Complex>().asDiagonal() * u.adjoint());
}

HermitianMatrix apply_function(const ScalarFunction& f, const HermitianMatrix& a) {
  return apply_function(f, spectral_decompose(a));
}

OrderVerdict loewner_compare(const HermitianMatrix& a, const HermitianMatrix& b, double tol,
                             double extra_slack) {
  require_same_dim(a, b);
  const HermitianMatrix diff = b - a;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(diff.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  const RealVector& ev = solver.eigenvalues();
  const double scale = std::max({1.0, spectral_norm(a), spectral_norm(b)});

  OrderVerdict verdict;
  verdict.witness_min_eig = ev(0);
  verdict.witness_max_eig = ev(ev.size() - 1);
  verdict.tolerance_used = tol * scale + extra_slack;
  const bool leq = verdict.witness_min_eig >= -verdict.tolerance_used;
  const bool geq = -verdict.witness_max_eig >= -verdict.tolerance_used;
  if (leq && geq) {
    verdict.relation = Relation::Equal;
  } else if (leq) {
    verdict.relation = Relation::Leq;
  } else if (geq) {
    verdict.relation = Relation::Geq;
  } else {
    verdict.relation = Relation::Incomparable;
  }
  return verdict;
}

double quadratic_form(const HermitianMatrix& a, const UnitVector& x) {
  require_same_dim(a, x);
  const Complex value = x.vector().dot(a.matrix() * x.vector());
  if (std::abs(value.imag()) > kFormImagTol) {
    const double bound = kFormImagTol * std::max(1.0, spectral_norm(a));
    if (std::abs(value.imag()) > bound) {
      throw Error(ErrorCode::ConsistencyFailure,
                  "quadratic form has imaginary part " + std::to_string(value.imag()));
    }
  }
  return value.real();
}

HermitianMatrix segment_point(const HermitianMatrix& a, const HermitianMatrix& b, double t) {
  require_same_dim(a, b);
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "segment parameter t=" + std::to_string(t) + " not in [0,1]");
  }
  return HermitianMatrix::symmetrized((1.0 - t) * a.matrix() + t * b.matrix());
}

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimMismatch,
                "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) + " differ");
  }
}

void require_same_dim(const HermitianMatrix& a, const UnitVector& x) {
  if (a.dim() != x.dim()) {
    throw Error(ErrorCode::DimMismatch,
                "matrix dim " + std::to_string(a.dim()) + " and vector dim " + std::to_string(x.dim()) + " differ");
  }
}

}  // namespace hhverify
