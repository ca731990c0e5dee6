#include "seicp/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "seicp/error.hpp"

namespace seicp {

namespace {

const char* const kColumns[] = {"problem", "model", "algo", "lambda", "iters",
                                "cpu_s",   "c",     "converged", "error"};
constexpr std::size_t kColumnCount = std::size(kColumns);

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> cells(const ReportRow& r) {
  return {r.problem, r.model,     r.algo, fmt(r.lambda),
          std::to_string(r.iters), fmt(r.cpu_s), fmt(r.c), r.converged ? "true" : "false",
          r.error};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

double to_double(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": bad number '" + s + "'");
}

ReportRow from_cells(const std::vector<std::string>& f, int line) {
  if (f.size() != kColumnCount)
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": expected " +
                                           std::to_string(kColumnCount) + " fields");
  ReportRow r;
  r.problem = f[0];
  r.model = f[1];
  r.algo = f[2];
  r.lambda = to_double(f[3], line);
  r.iters = static_cast<int>(to_double(f[4], line));
  r.cpu_s = to_double(f[5], line);
  r.c = to_double(f[6], line);
  if (f[7] != "true" && f[7] != "false")
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": bad flag '" + f[7] + "'");
  r.converged = f[7] == "true";
  r.error = f[8];
  return r;
}

std::vector<std::string> split_csv_line(const std::string& s, int line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (quoted) {
      if (ch == '"' && i + 1 < s.size() && s[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": open quote");
  out.push_back(std::move(cur));
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(' ') - b + 1);
}

}  // namespace

ReportRow make_row(const std::string& problem, const SolveReport& rep) {
  ReportRow r;
  r.problem = problem;
  r.model = to_string(rep.model);
  r.algo = to_string(rep.algo);
  r.lambda = rep.lambda;
  r.iters = rep.iterations;
  r.cpu_s = rep.cpu_seconds;
  r.c = rep.c;
  r.converged = rep.converged;
  return r;
}

nlohmann::json to_json(const ReportRow& row) {
  nlohmann::json j{{"problem", row.problem}, {"model", row.model}, {"algo", row.algo},
                   {"lambda", row.lambda},   {"iters", row.iters}, {"cpu_s", row.cpu_s},
                   {"c", row.c},             {"converged", row.converged}};
  if (!row.error.empty()) j["error"] = row.error;
  return j;
}

nlohmann::json to_json(const std::string& problem, const SolveReport& rep, bool with_trace) {
  auto j = to_json(make_row(problem, rep));
  j["x"] = rep.x;
  j["line_searches"] = rep.line_searches;
  if (with_trace) {
    auto& t = j["trace"] = nlohmann::json::array();
    for (const auto& e : rep.trace)
      t.push_back({{"objective", e.objective}, {"step", e.step}, {"alpha", e.alpha}});
  }
  return j;
}

BenchSummary summarize(std::vector<ReportRow> rows) {
  BenchSummary s;
  s.rows = std::move(rows);
  int ok = 0;
  for (const auto& r : s.rows) {
    if (!r.error.empty()) {
      ++s.failures;
      continue;
    }
    ++ok;
    s.avg_cpu += r.cpu_s;
    s.avg_iters += r.iters;
    s.avg_c += r.c;
  }
  if (ok > 0) {
    s.avg_cpu /= ok;
    s.avg_iters /= ok;
    s.avg_c /= ok;
  }
  return s;
}

std::string render_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < kColumnCount; ++i) os << (i ? "," : "") << kColumns[i];
  os << '\n';
  for (const auto& r : rows) {
    const auto f = cells(r);
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << csv_escape(f[i]);
    os << '\n';
  }
  return os.str();
}

std::string render_markdown(const BenchSummary& s) {
  std::ostringstream os;
  os << '|';
  for (const char* c : kColumns) os << ' ' << c << " |";
  os << "\n|";
  for (std::size_t i = 0; i < kColumnCount; ++i) os << "---|";
  os << '\n';
  for (const auto& r : s.rows) {
    os << '|';
    for (auto f : cells(r)) {
      for (auto& ch : f)
        if (ch == '|' || ch == '\n') ch = ' ';
      os << ' ' << f << " |";
    }
    os << '\n';
  }
  os << "| avg | | | | " << fmt(s.avg_iters) << " | " << fmt(s.avg_cpu) << " | " << fmt(s.avg_c)
     << " | | |\n";
  return os.str();
}

std::vector<ReportRow> parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = 0;
  std::vector<ReportRow> rows;
  while (std::getline(is, line)) {
    ++n;
    if (n == 1) {
      if (split_csv_line(line, n).size() != kColumnCount)
        throw Error(ErrorKind::ParseError, "line 1: unexpected header");
      continue;
    }
    if (line.empty()) continue;
    rows.push_back(from_cells(split_csv_line(line, n), n));
  }
  return rows;
}

std::vector<ReportRow> parse_markdown(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = 0;
  std::vector<ReportRow> rows;
  while (std::getline(is, line)) {
    ++n;
    if (n <= 2 || line.empty()) continue;
    if (line.front() != '|' || line.back() != '|')
      throw Error(ErrorKind::ParseError, "line " + std::to_string(n) + ": not a table row");
    std::vector<std::string> f;
    std::size_t start = 1;
    for (std::size_t i = 1; i < line.size(); ++i) {
      if (line[i] != '|') continue;
      f.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
    if (!f.empty() && f[0] == "avg") continue;
    rows.push_back(from_cells(f, n));
  }
  return rows;
}

}  // namespace seicp
