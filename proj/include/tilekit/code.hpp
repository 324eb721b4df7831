#pragma once

#include "tilekit/gf2.hpp"
#include "tilekit/layout.hpp"
#include "tilekit/tile.hpp"

#include <optional>
#include <vector>

namespace tilekit {

enum class DistanceCertainty : std::uint8_t { Exact, UpperBound, LowerBound };

std::string to_string(DistanceCertainty c);

struct CodeParameters {
    int n = 0;
    int k = 0;
    std::optional<std::pair<int, DistanceCertainty>> d;
};

struct RowProvenance {
    Anchor anchor;
    char type = 'X'; // 'X' or 'Z'
    bool truncated = false; // support smaller than the tile weight
    bool duplicate = false; // identical to an earlier row of the same matrix
};

struct TrimStats {
    int qubits_trimmed = 0;
    int x_rows_removed = 0;
    int z_rows_removed = 0;
};

/// A CSS code assembled from a tile pair on a layout. Immutable after
/// construction; safe to share across threads.
struct StabilizerCode {
    std::vector<EdgeCoord> qubits; // column order of h_x / h_z
    BinaryMatrix h_x;
    BinaryMatrix h_z;
    std::vector<RowProvenance> x_rows;
    std::vector<RowProvenance> z_rows;
    TrimStats trim;

    int n() const { return static_cast<int>(qubits.size()); }
};

/// Places tiles at every anchor, truncates supports to the qubit set, trims
/// uncovered qubits and emptied checks, and indexes the result. Rows are
/// ordered by anchor (y, then x); columns canonically, so exports are
/// bit-exact. Throws std::invalid_argument when the boxes mismatch or either
/// input fails validation.
///
/// Trimming is a single pass: a qubit's coverage depends only on row
/// supports, and rows removed here are exactly the empty ones, so a second
/// pass can never remove more. fixpoint_trim re-runs the pass anyway and is
/// intended for exotic custom layouts. Callers that validated the layout once
/// (the search loop) pass revalidate_layout = false.
StabilizerCode build_code(const TilePair& pair, const Layout& layout, bool fixpoint_trim = false,
                          bool revalidate_layout = true);

/// Test/advanced entry point: wrap raw check matrices (n = columns). Performs
/// no trimming; provenance is synthesized.
StabilizerCode code_from_matrices(BinaryMatrix h_x, BinaryMatrix h_z);

/// Accepts iff h_x ht_z^T vanishes; a rejection names the first anticommuting
/// row pair and their overlapping qubits.
ValidationResult check_commutation(const StabilizerCode& code);

/// k = n - rank(h_x) - rank(h_z).
int compute_k(const StabilizerCode& code);

struct LogicalBasis {
    std::vector<BitVec> x; // in ker(h_z), independent modulo rowspace(h_x)
    std::vector<BitVec> z; // symmetric
};

/// k X-type and k Z-type logical representatives with the pairing matrix
/// <x_i, z_j> normalized to the identity. Throws std::invalid_argument when
/// k = 0.
LogicalBasis logical_basis(const StabilizerCode& code);

} // namespace tilekit
