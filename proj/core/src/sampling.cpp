#include "hhverify/sampling.hpp"

#include <cmath>
#include <random>

namespace hhverify {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t dim, std::uint64_t trial_index,
                          std::uint64_t stream_tag) {
  std::uint64_t h = mix64(master_seed);
  h = mix64(h ^ dim);
  h = mix64(h ^ trial_index);
  return mix64(h ^ stream_tag);
}

namespace {

ComplexMatrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

HermitianMatrix random_hermitian(int dim, const Interval& interval, std::uint64_t sub_seed) {
  validate_interval(interval);
  if (dim < 1) throw Error(ErrorCode::ParameterOutOfRange, "dim must be >= 1");
  std::mt19937_64 rng(sub_seed);

  const ComplexMatrix g = gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }

  std::uniform_real_distribution<double> uniform(interval.lo, interval.hi);
  RealVector lambda(dim);
  for (int i = 0; i < dim; ++i) lambda(i) = uniform(rng);

  return HermitianMatrix::symmetrized(q * lambda.cast<Complex>().asDiagonal() * q.adjoint());
}

UnitVector random_unit_vector(int dim, std::uint64_t sub_seed) {
  if (dim < 1) throw Error(ErrorCode::ParameterOutOfRange, "dim must be >= 1");
  std::mt19937_64 rng(sub_seed);
  ComplexVector v = gaussian_matrix(dim, 1, rng).col(0);
  return UnitVector::normalized(v);
}

double random_unit_interval(std::uint64_t sub_seed) {
  std::mt19937_64 rng(sub_seed);
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace hhverify
