#include "tilekit/code.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tilekit {

std::string to_string(DistanceCertainty c) {
    switch (c) {
    case DistanceCertainty::Exact: return "exact";
    case DistanceCertainty::UpperBound: return "upper bound";
    case DistanceCertainty::LowerBound: return "lower bound";
    }
    return "?";
}

namespace {

struct PendingRow {
    Anchor anchor;
    std::vector<std::size_t> support; // column indices, sorted
    std::size_t tile_weight;
};

std::vector<PendingRow> place_rows(const Tile& tile, const std::vector<Anchor>& anchors,
                                   const std::vector<EdgeCoord>& qubits) {
    std::vector<PendingRow> rows;
    rows.reserve(anchors.size());
    for (const auto& a : anchors) {
        PendingRow row{a, {}, tile.weight()};
        for (const auto& e : tile.edges_at(a.first, a.second)) {
            const auto it = std::lower_bound(qubits.begin(), qubits.end(), e);
            if (it != qubits.end() && *it == e)
                row.support.push_back(static_cast<std::size_t>(it - qubits.begin()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

StabilizerCode build_code(const TilePair& pair, const Layout& layout, bool fixpoint_trim,
                          bool revalidate_layout) {
    if (pair.width() != layout.box_w || pair.height() != layout.box_h)
        throw std::invalid_argument("build_code: tile box " + std::to_string(pair.width()) + "x" +
                                    std::to_string(pair.height()) + " does not match layout box " +
                                    std::to_string(layout.box_w) + "x" +
                                    std::to_string(layout.box_h));
    if (auto res = validate_tile_pair(pair); !res)
        throw std::invalid_argument("build_code: invalid tile pair: " + res.message);
    if (revalidate_layout)
        if (auto res = validate_layout(layout); !res)
            throw std::invalid_argument("build_code: invalid layout: " + res.message);

    const std::vector<EdgeCoord>& qubits = layout.qubit_edges;
    auto x_pending = place_rows(pair.x_tile, layout.x_anchors(), qubits);
    auto z_pending = place_rows(pair.z_tile, layout.z_anchors(), qubits);

    // Trim: a qubit stays only when some X row and some Z row cover it; rows
    // emptied by that lose their anchor. One pass suffices (see header), but
    // fixpoint mode loops until stable.
    std::vector<char> keep(qubits.size(), 0);
    TrimStats trim;
    while (true) {
        std::vector<char> covered_x(qubits.size(), 0), covered_z(qubits.size(), 0);
        for (const auto& row : x_pending)
            for (std::size_t c : row.support)
                covered_x[c] = 1;
        for (const auto& row : z_pending)
            for (std::size_t c : row.support)
                covered_z[c] = 1;
        for (std::size_t c = 0; c < qubits.size(); ++c)
            keep[c] = covered_x[c] && covered_z[c];

        bool changed = false;
        for (auto* pending : {&x_pending, &z_pending})
            for (auto& row : *pending) {
                std::erase_if(row.support, [&](std::size_t c) { return !keep[c]; });
                if (row.support.empty())
                    changed = true;
            }
        const auto was_x = x_pending.size(), was_z = z_pending.size();
        std::erase_if(x_pending, [](const PendingRow& r) { return r.support.empty(); });
        std::erase_if(z_pending, [](const PendingRow& r) { return r.support.empty(); });
        trim.x_rows_removed += static_cast<int>(was_x - x_pending.size());
        trim.z_rows_removed += static_cast<int>(was_z - z_pending.size());
        if (!fixpoint_trim || !changed)
            break;
    }

    StabilizerCode code;
    std::vector<std::size_t> col_map(qubits.size(), SIZE_MAX);
    for (std::size_t c = 0; c < qubits.size(); ++c)
        if (keep[c]) {
            col_map[c] = code.qubits.size();
            code.qubits.push_back(qubits[c]);
        }
    trim.qubits_trimmed = static_cast<int>(qubits.size() - code.qubits.size());
    code.trim = trim;

    const std::size_t n = code.qubits.size();
    const auto emit = [&](const std::vector<PendingRow>& pending, BinaryMatrix& mat,
                          std::vector<RowProvenance>& prov, char type) {
        mat = BinaryMatrix(pending.size(), n);
        std::map<std::vector<std::size_t>, std::size_t> seen;
        for (std::size_t r = 0; r < pending.size(); ++r) {
            std::vector<std::size_t> cols;
            cols.reserve(pending[r].support.size());
            for (std::size_t c : pending[r].support) {
                mat.set(r, col_map[c], true);
                cols.push_back(col_map[c]);
            }
            RowProvenance p;
            p.anchor = pending[r].anchor;
            p.type = type;
            p.truncated = cols.size() < pending[r].tile_weight;
            p.duplicate = !seen.emplace(std::move(cols), r).second;
            prov.push_back(p);
        }
    };
    emit(x_pending, code.h_x, code.x_rows, 'X');
    emit(z_pending, code.h_z, code.z_rows, 'Z');
    return code;
}

StabilizerCode code_from_matrices(BinaryMatrix h_x, BinaryMatrix h_z) {
    if (h_x.cols() != h_z.cols())
        throw std::invalid_argument("code_from_matrices: column counts differ");
    StabilizerCode code;
    for (std::size_t c = 0; c < h_x.cols(); ++c)
        code.qubits.push_back({Orientation::H, static_cast<int>(c), 0});
    for (std::size_t r = 0; r < h_x.rows(); ++r)
        code.x_rows.push_back({{static_cast<int>(r), 0}, 'X', false, false});
    for (std::size_t r = 0; r < h_z.rows(); ++r)
        code.z_rows.push_back({{static_cast<int>(r), 0}, 'Z', false, false});
    code.h_x = std::move(h_x);
    code.h_z = std::move(h_z);
    return code;
}

ValidationResult check_commutation(const StabilizerCode& code) {
    const BinaryMatrix prod = mul_mod2(code.h_x, code.h_z.transposed());
    if (prod.is_zero())
        return ValidationResult::accept();
    for (std::size_t r = 0; r < prod.rows(); ++r) {
        if (prod.row_is_zero(r))
            continue;
        const std::size_t c = prod.row(r).lowest_set();
        std::string overlap;
        const BitVec xr = code.h_x.row(r);
        const BitVec zr = code.h_z.row(c);
        for (std::size_t q = 0; q < code.qubits.size(); ++q)
            if (xr.get(q) && zr.get(q))
                overlap += (overlap.empty() ? "" : ", ") + to_string(code.qubits[q]);
        return ValidationResult::reject("X row " + std::to_string(r) + " anticommutes with Z row " +
                                        std::to_string(c) + " (overlap: " + overlap + ")");
    }
    return ValidationResult::accept();
}

int compute_k(const StabilizerCode& code) {
    return code.n() - static_cast<int>(code.h_x.rank()) - static_cast<int>(code.h_z.rank());
}

namespace {

/// ker(opposite) representatives independent modulo rowspace(same).
std::vector<BitVec> logical_reps(const BinaryMatrix& opposite, const BinaryMatrix& same,
                                 std::size_t k) {
    ReducedBasis span(same);
    std::vector<BitVec> out;
    for (BitVec& v : opposite.nullspace_basis()) {
        BitVec residual = span.reduce(v);
        if (residual.is_zero())
            continue;
        span.absorb(residual);
        out.push_back(std::move(residual));
        if (out.size() == k)
            break;
    }
    return out;
}

} // namespace

LogicalBasis logical_basis(const StabilizerCode& code) {
    const int k = compute_k(code);
    if (k < 1)
        throw std::invalid_argument("logical_basis: no logical qubits");
    LogicalBasis basis;
    basis.x = logical_reps(code.h_z, code.h_x, static_cast<std::size_t>(k));
    basis.z = logical_reps(code.h_x, code.h_z, static_cast<std::size_t>(k));
    if (basis.x.size() != static_cast<std::size_t>(k) || basis.z.size() != static_cast<std::size_t>(k))
        throw std::logic_error("logical_basis: rank bookkeeping failed");

    // Symplectic Gram-Schmidt: make <x_i, z_j> the identity.
    for (int i = 0; i < k; ++i) {
        int pa = -1, pb = -1;
        for (int a = i; a < k && pa < 0; ++a)
            for (int b = i; b < k; ++b)
                if (dot(basis.x[a], basis.z[b])) {
                    pa = a;
                    pb = b;
                    break;
                }
        if (pa < 0)
            throw std::logic_error("logical_basis: degenerate pairing");
        std::swap(basis.x[static_cast<std::size_t>(i)], basis.x[static_cast<std::size_t>(pa)]);
        std::swap(basis.z[static_cast<std::size_t>(i)], basis.z[static_cast<std::size_t>(pb)]);
        for (int j = i + 1; j < k; ++j) {
            if (dot(basis.x[static_cast<std::size_t>(j)], basis.z[static_cast<std::size_t>(i)]))
                basis.x[static_cast<std::size_t>(j)] ^= basis.x[static_cast<std::size_t>(i)];
            if (dot(basis.x[static_cast<std::size_t>(i)], basis.z[static_cast<std::size_t>(j)]))
                basis.z[static_cast<std::size_t>(j)] ^= basis.z[static_cast<std::size_t>(i)];
        }
    }
    return basis;
}

} // namespace tilekit
