#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hhverify {

enum class ErrorCode {
  NonFiniteEntries,
  ConvergenceFailure,
  DomainViolation,
  DimMismatch,
  ParameterOutOfRange,
  NotHermitian,
  NotUnitVector,
  BadInterval,
  InvalidFunction,
  UnknownFunction,
  ConsistencyFailure,
  ConfigInvalid,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable error code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double width() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }

  /// Membership with an absolute slack on both ends.
  bool contains(double t, double slack = 0.0) const {
    return t >= lo - slack && t <= hi + slack;
  }
  bool contains(const Interval& other) const {
    return other.lo >= lo && other.hi <= hi;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Throws BadInterval unless lo < hi and both ends are finite.
void validate_interval(const Interval& interval);

std::string to_string(const Interval& interval);

/// Relative-plus-absolute tolerance: threshold = abs + rel * scale + extra.
struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-9;

  double threshold(double scale, double extra = 0.0) const {
    return abs + rel * scale + extra;
  }
};

}  // namespace hhverify
