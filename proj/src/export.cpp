#include "tilekit/export.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

namespace tilekit {

void write_matrix_market(const BinaryMatrix& m, std::ostream& out) {
    out << "%%MatrixMarket matrix coordinate pattern general\n";
    std::size_t nnz = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        nnz += m.row_weight(r);
    out << m.rows() << " " << m.cols() << " " << nnz << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c : m.row(r).ones())
            out << r + 1 << " " << c + 1 << "\n";
}

void write_alist(const BinaryMatrix& m, std::ostream& out) {
    const std::size_t n = m.cols(), rows = m.rows();
    std::vector<std::vector<std::size_t>> col_adj(n), row_adj(rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c : m.row(r).ones()) {
            col_adj[c].push_back(r + 1);
            row_adj[r].push_back(c + 1);
        }
    std::size_t max_col = 0, max_row = 0;
    for (const auto& a : col_adj)
        max_col = std::max(max_col, a.size());
    for (const auto& a : row_adj)
        max_row = std::max(max_row, a.size());

    out << n << " " << rows << "\n";
    out << max_col << " " << max_row << "\n";
    for (std::size_t c = 0; c < n; ++c)
        out << col_adj[c].size() << (c + 1 < n ? " " : "\n");
    for (std::size_t r = 0; r < rows; ++r)
        out << row_adj[r].size() << (r + 1 < rows ? " " : "\n");
    for (const auto& adj : col_adj) {
        for (std::size_t i = 0; i < adj.size(); ++i)
            out << adj[i] << (i + 1 < adj.size() ? " " : "");
        out << "\n";
    }
    for (const auto& adj : row_adj) {
        for (std::size_t i = 0; i < adj.size(); ++i)
            out << adj[i] << (i + 1 < adj.size() ? " " : "");
        out << "\n";
    }
}

std::pair<std::string, std::string> export_checks(const StabilizerCode& code, ExportFormat format,
                                                  const std::string& dir,
                                                  const std::string& stem) {
    if (code.n() == 0 || code.h_x.rows() == 0 || code.h_z.rows() == 0)
        throw std::invalid_argument("export_checks: nothing to export (empty code)");
    const char* ext = format == ExportFormat::MatrixMarket ? ".mtx" : ".alist";
    std::filesystem::create_directories(dir);
    const auto write_one = [&](const BinaryMatrix& m, const std::string& suffix) {
        const std::string path = (std::filesystem::path(dir) / (stem + suffix + ext)).string();
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("export_checks: cannot open " + path);
        if (format == ExportFormat::MatrixMarket)
            write_matrix_market(m, out);
        else
            write_alist(m, out);
        if (!out)
            throw std::runtime_error("export_checks: write failed for " + path);
        return path;
    };
    return {write_one(code.h_x, "_hx"), write_one(code.h_z, "_hz")};
}

} // namespace tilekit
