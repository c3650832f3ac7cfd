#include "hhverify/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hhverify {

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  throw Error(ErrorCode::ConfigInvalid, "report format must be json or csv, got '" + std::string(text) + "'");
}

std::string_view to_string(ReportFormat format) { return format == ReportFormat::Csv ? "csv" : "json"; }

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json number_or_null(const InequalityReport& r, double v) {
  if (r.verdict == Verdict::Skip) return nullptr;
  return v;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_json(std::span<const InequalityReport> records) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) {
    ordered_json o;
    o["id"] = r.id;
    o["dim"] = r.context.dim;
    o["trial"] = r.context.trial;
    o["probe"] = r.context.probe;
    o["functions"] = r.context.functions;
    o["interval"] = {r.context.interval.lo, r.context.interval.hi};
    o["orientation"] = std::string(to_string(r.orientation));
    o["lhs"] = number_or_null(r, r.lhs);
    o["rhs"] = number_or_null(r, r.rhs);
    o["margin"] = number_or_null(r, r.margin);
    o["tolerance"] = number_or_null(r, r.tolerance);
    o["quad_error"] = number_or_null(r, r.quad_error);
    o["verdict"] = std::string(to_string(r.verdict));
    ordered_json seeds = ordered_json::object();
    for (const auto& [name, seed] : r.context.subseeds) seeds[name] = seed;
    o["subseeds"] = std::move(seeds);
    if (r.verdict == Verdict::Skip) o["note"] = r.note;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string to_csv(std::span<const InequalityReport> records) {
  std::ostringstream os;
  os << "id,dim,trial,probe,functions,interval,orientation,lhs,rhs,margin,tolerance,quad_error,verdict,subseeds\n";
  for (const auto& r : records) {
    std::string functions;
    for (std::size_t i = 0; i < r.context.functions.size(); ++i) {
      if (i) functions += ';';
      functions += r.context.functions[i];
    }
    std::string seeds;
    for (const auto& [name, seed] : r.context.subseeds) {
      if (!seeds.empty()) seeds += ';';
      seeds += name + "=" + std::to_string(seed);
    }
    const bool skip = r.verdict == Verdict::Skip;
    auto num = [&](double v) { return skip ? std::string() : fmt_double(v); };
    os << csv_cell(r.id) << ',' << r.context.dim << ',' << r.context.trial << ',' << r.context.probe << ','
       << csv_cell(functions) << ',' << fmt_double(r.context.interval.lo) << ';' << fmt_double(r.context.interval.hi)
       << ',' << csv_cell(std::string(to_string(r.orientation))) << ',' << num(r.lhs) << ',' << num(r.rhs) << ','
       << num(r.margin) << ',' << num(r.tolerance) << ',' << num(r.quad_error) << ',' << to_string(r.verdict) << ','
       << csv_cell(seeds) << '\n';
  }
  return os.str();
}

void write_report(const std::string& path, std::span<const InequalityReport> records, ReportFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open report file '" + path + "'");
  out << (format == ReportFormat::Json ? to_json(records) : to_csv(records));
  if (!out) throw Error(ErrorCode::Io, "failed writing report file '" + path + "'");
}

}  // namespace hhverify
