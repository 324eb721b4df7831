#pragma once

#include "tilekit/distance.hpp"

#include <cstdint>
#include <vector>

namespace tilekit {

enum class SearchMode : std::uint8_t { Exhaustive, Random };

struct SearchConfig {
    int box_w = 3;
    int box_h = 3;
    int weight = 6;
    Layout layout;
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t samples = 0; // Random mode: number of seeded draws
    /// Distance budget schedule: cheap screen for everyone, fine re-estimate
    /// for the kept candidates.
    std::uint64_t coarse_trials = 64;
    std::uint64_t fine_trials = 4096;
    bool pair_sums = true;
    std::uint64_t seed = 0;
    std::size_t top_count = 32;
    int k_min = 1;
    int threads = 0;
};

struct SearchEntry {
    Tile x_tile;
    int n = 0;
    int k = 0;
    int d_hat = 0;            // fine-budget estimator upper bound
    std::uint64_t eff_num = 0; // k * d_hat^2
    std::uint64_t eff_den = 0; // n; efficiency compared as an exact rational
    bool trimmed = false;      // build removed qubits
};

/// Descending efficiency, ties by d_hat descending then tile order.
bool entry_order(const SearchEntry& a, const SearchEntry& b);

struct SearchReport {
    std::vector<SearchEntry> entries;
    std::uint64_t candidates_examined = 0;
    std::uint64_t passed_k = 0;
    SearchConfig config;
};

/// Enumerates X-tile candidates (the Z partner is always the dual; the
/// swapped-role code is counted by the tables, not listed), builds each code,
/// filters by k, screens distances coarsely, refines the survivors, and ranks
/// by kd^2/n. Deterministic for a fixed config at any thread count.
SearchReport run_search(const SearchConfig& cfg);

struct TableEntry {
    Tile x_tile;
    int n = 0;
    int k = 0;
    int d = 0;
};

struct VerifyOutcome {
    TableEntry entry;
    int n = 0;
    int k = 0;
    int d_hat = -1; // -1 when the build never reached estimation (k filter)
    bool pass = false;
};

/// Rebuilds each listed pair on the layout and checks (n, k) exactly and the
/// estimated distance against the claimed value.
std::vector<VerifyOutcome> verify_table(const std::vector<TableEntry>& entries,
                                        const Layout& layout, std::uint64_t trials,
                                        std::uint64_t seed, int threads = 0);

} // namespace tilekit
