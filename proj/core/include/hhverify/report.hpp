#pragma once

#include <span>
#include <string>
#include <string_view>

#include "hhverify/inequalities.hpp"

namespace hhverify {

enum class ReportFormat { Json, Csv };

ReportFormat parse_report_format(std::string_view text);
std::string_view to_string(ReportFormat format);

/// JSON array, one object per check, fields in the order
/// id, dim, trial, probe, functions, interval, orientation, lhs, rhs,
/// margin, tolerance, quad_error, verdict, subseeds (+ note for SKIP).
std::string to_json(std::span<const InequalityReport> records);

/// Same field order with a header row; functions, interval and subseeds
/// are packed into single ';'-separated cells.
std::string to_csv(std::span<const InequalityReport> records);

/// Throws Error(Io) when the file cannot be written.
void write_report(const std::string& path, std::span<const InequalityReport> records, ReportFormat format);

}  // namespace hhverify
