#pragma once

#include "tilekit/code.hpp"

#include <iosfwd>
#include <string>

namespace tilekit {

enum class ExportFormat : std::uint8_t { MatrixMarket, Alist };

/// MatrixMarket coordinate-pattern file: rows are checks, columns qubits,
/// 1-based entries sorted by row then column.
void write_matrix_market(const BinaryMatrix& m, std::ostream& out);

/// MacKay-style alist: "n m", max degrees, column and row degree lists, then
/// the 1-based adjacency lists (one line per column, then per row), unpadded.
void write_alist(const BinaryMatrix& m, std::ostream& out);

/// Writes <stem>_hx and <stem>_hz (.mtx or .alist) into dir; returns the two
/// paths. Throws std::invalid_argument on an empty code and
/// std::runtime_error on I/O failure. Output is bit-exact given the canonical
/// qubit and row orderings of build_code.
std::pair<std::string, std::string> export_checks(const StabilizerCode& code, ExportFormat format,
                                                  const std::string& dir,
                                                  const std::string& stem = "checks");

} // namespace tilekit
