#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "seicp/model.hpp"

namespace seicp {

/// One solve, as written to JSON, CSV and Markdown.
struct ReportRow {
  std::string problem;
  std::string model;
  std::string algo;
  double lambda = 0.0;
  int iters = 0;
  double cpu_s = 0.0;
  double c = 0.0;
  bool converged = false;
  /// Empty on success; otherwise the failure message and the numeric fields are meaningless.
  std::string error;
};

ReportRow make_row(const std::string& problem, const SolveReport& rep);

nlohmann::json to_json(const ReportRow& row);
/// Full report including the eigenvector and, when present, the trace.
nlohmann::json to_json(const std::string& problem, const SolveReport& rep, bool with_trace);

struct BenchSummary {
  std::vector<ReportRow> rows;
  double avg_cpu = 0.0;
  double avg_iters = 0.0;
  double avg_c = 0.0;
  int failures = 0;
};

/// Arithmetic means over rows without an error.
BenchSummary summarize(std::vector<ReportRow> rows);

std::string render_csv(const std::vector<ReportRow>& rows);
/// Table with an "avg" row appended.
std::string render_markdown(const BenchSummary& s);

/// Inverse of render_csv. Throws ParseError.
std::vector<ReportRow> parse_csv(const std::string& text);
/// Reads the body of a table produced by render_markdown, skipping the avg row.
std::vector<ReportRow> parse_markdown(const std::string& text);

}  // namespace seicp
