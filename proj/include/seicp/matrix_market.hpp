#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "seicp/sym_matrix.hpp"

namespace seicp {

/// Reads a real square Matrix Market file (coordinate or array; general or
/// symmetric). General matrices are symmetrized as (A + A^T) / 2.
SymMatrix read_matrix_market(const std::filesystem::path& path);
/// Same as read_matrix_market; `source` names the stream in error messages.
SymMatrix read_matrix_market(std::istream& in, const std::string& source = "<stream>");

/// Writes the lower triangle in coordinate/real/symmetric form.
void write_matrix_market(const std::filesystem::path& path, const SymMatrix& m,
                         const std::string& comment = {});
void write_matrix_market(std::ostream& out, const SymMatrix& m, const std::string& comment = {});

}  // namespace seicp
