#include "seicp/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "seicp/error.hpp"

namespace seicp {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

[[noreturn]] void parse_error(const std::string& source, std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, source + ":" + std::to_string(line) + ": " + msg);
}

// Next non-comment, non-blank line; returns false at EOF.
bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '%') continue;
    return true;
  }
  return false;
}

}  // namespace

SymMatrix read_matrix_market(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) parse_error(source, 1, "empty file");
  ++lineno;

  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || symmetry.empty())
    parse_error(source, lineno, "malformed %%MatrixMarket header");
  object = lower(object);
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (object != "matrix") parse_error(source, lineno, "object must be 'matrix'");
  if (format != "coordinate" && format != "array")
    parse_error(source, lineno, "format must be 'coordinate' or 'array'");
  if (field != "real" && field != "double" && field != "integer")
    throw Error(ErrorKind::UnsupportedFormat, source + ": field '" + field + "' is not supported");
  if (symmetry != "general" && symmetry != "symmetric")
    throw Error(ErrorKind::UnsupportedFormat,
                source + ": symmetry '" + symmetry + "' is not supported");
  const bool symmetric = symmetry == "symmetric";

  if (!next_data_line(in, line, lineno)) parse_error(source, lineno, "missing size line");
  std::istringstream size_line(line);
  long long rows = 0, cols = 0, nnz = 0;
  size_line >> rows >> cols;
  if (format == "coordinate") size_line >> nnz;
  if (!size_line || rows <= 0 || cols <= 0 || nnz < 0)
    parse_error(source, lineno, "malformed size line");
  if (rows != cols)
    throw Error(ErrorKind::InvalidMatrix, source + ": matrix is " + std::to_string(rows) + "x" +
                                              std::to_string(cols) + ", expected square");

  const auto n = static_cast<std::size_t>(rows);
  std::vector<double> dense(n * n, 0.0);

  if (format == "coordinate") {
    for (long long k = 0; k < nnz; ++k) {
      if (!next_data_line(in, line, lineno))
        parse_error(source, lineno, "expected " + std::to_string(nnz) + " entries, found " +
                                        std::to_string(k));
      std::istringstream entry(line);
      long long i = 0, j = 0;
      double v = 0.0;
      entry >> i >> j >> v;
      if (!entry) parse_error(source, lineno, "malformed entry");
      if (i < 1 || j < 1 || i > rows || j > cols)
        parse_error(source, lineno, "index out of range");
      const auto r = static_cast<std::size_t>(i - 1);
      const auto c = static_cast<std::size_t>(j - 1);
      dense[r * n + c] += v;
      if (symmetric && r != c) dense[c * n + r] += v;
    }
  } else {
    // Column-major; symmetric arrays store only the lower triangle.
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t r = symmetric ? c : 0; r < n; ++r) {
        if (!next_data_line(in, line, lineno)) parse_error(source, lineno, "too few array values");
        std::istringstream entry(line);
        double v = 0.0;
        entry >> v;
        if (!entry) parse_error(source, lineno, "malformed value");
        dense[r * n + c] = v;
        if (symmetric) dense[c * n + r] = v;
      }
    }
  }
  return SymMatrix::from_dense(n, dense, /*symmetrize=*/true);
}

SymMatrix read_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return read_matrix_market(in, path.string());
}

void write_matrix_market(std::ostream& out, const SymMatrix& m, const std::string& comment) {
  const std::size_t n = m.size();
  std::size_t nnz = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (m(i, j) != 0.0) ++nnz;
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  if (!comment.empty()) out << "% " << comment << "\n";
  out << n << " " << n << " " << nnz << "\n";
  char buf[64];
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i < n; ++i) {
      if (m(i, j) == 0.0) continue;
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << (i + 1) << " " << (j + 1) << " " << buf << "\n";
    }
  }
}

void write_matrix_market(const std::filesystem::path& path, const SymMatrix& m,
                         const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  write_matrix_market(out, m, comment);
}

}  // namespace seicp
