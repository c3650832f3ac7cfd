#pragma once

#include <cstdint>

#include "hhverify/common.hpp"
#include "hhverify/hermitian.hpp"

namespace hhverify {

/// Named random streams within one trial.
enum class Stream : std::uint64_t {
  MatrixA = 1,
  MatrixB = 2,
  Lambda = 3,
  ProbeBase = 1000,  // probe p uses ProbeBase + p
};

inline std::uint64_t probe_stream(int probe) {
  return static_cast<std::uint64_t>(Stream::ProbeBase) + static_cast<std::uint64_t>(probe);
}

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

/// Counter-based sub-seed: a pure function of (master, dim, trial, stream).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t dim, std::uint64_t trial_index,
                          std::uint64_t stream_tag);

struct TrialSpec {
  int dim = 1;
  Interval interval;
  std::uint64_t master_seed = 0;
  std::uint64_t trial_index = 0;

  std::uint64_t sub_seed(std::uint64_t stream_tag) const {
    return derive_seed(master_seed, static_cast<std::uint64_t>(dim), trial_index, stream_tag);
  }
  std::uint64_t sub_seed(Stream stream) const { return sub_seed(static_cast<std::uint64_t>(stream)); }
};

/// Q diag(lambda) Q* with Q Haar-distributed (QR of a complex Gaussian
/// matrix, phases fixed so R has a nonnegative diagonal) and lambda drawn
/// uniformly from the interval.
HermitianMatrix random_hermitian(int dim, const Interval& interval, std::uint64_t sub_seed);

/// Complex Gaussian vector normalized to unit length.
UnitVector random_unit_vector(int dim, std::uint64_t sub_seed);

/// Uniform draw on [0, 1) from a sub-seed.
double random_unit_interval(std::uint64_t sub_seed);

}  // namespace hhverify
