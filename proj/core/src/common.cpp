#include "hhverify/common.hpp"

#include <cmath>
#include <sstream>

namespace hhverify {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFiniteEntries: return "NON_FINITE_ENTRIES";
    case ErrorCode::ConvergenceFailure: return "CONVERGENCE_FAILURE";
    case ErrorCode::DomainViolation: return "DOMAIN_VIOLATION";
    case ErrorCode::DimMismatch: return "DIM_MISMATCH";
    case ErrorCode::ParameterOutOfRange: return "PARAMETER_OUT_OF_RANGE";
    case ErrorCode::NotHermitian: return "NOT_HERMITIAN";
    case ErrorCode::NotUnitVector: return "NOT_UNIT_VECTOR";
    case ErrorCode::BadInterval: return "BAD_INTERVAL";
    case ErrorCode::InvalidFunction: return "INVALID_FUNCTION";
    case ErrorCode::UnknownFunction: return "UNKNOWN_FUNCTION";
    case ErrorCode::ConsistencyFailure: return "CONSISTENCY_FAILURE";
    case ErrorCode::ConfigInvalid: return "CONFIG_INVALID";
    case ErrorCode::Io: return "IO_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void validate_interval(const Interval& interval) {
  if (!std::isfinite(interval.lo) || !std::isfinite(interval.hi) || !(interval.lo < interval.hi)) {
    throw Error(ErrorCode::BadInterval, "interval " + to_string(interval) + " must satisfy lo < hi");
  }
}

std::string to_string(const Interval& interval) {
  std::ostringstream os;
  os.precision(17);
  os << '[' << interval.lo << ", " << interval.hi << ']';
  return os.str();
}

}  // namespace hhverify
