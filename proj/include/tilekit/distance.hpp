#pragma once

#include "tilekit/code.hpp"

#include <cstdint>
#include <limits>
#include <optional>

namespace tilekit {

/// X-side distance = lightest X-type logical (in ker h_z, outside rowspace
/// h_x); Z-side symmetric; Min = the code distance.
enum class Side : std::uint8_t { X, Z, Min };

std::string to_string(Side s);

struct DistanceResult {
    int value = -1; // best known weight; -1 when no operator was found
    DistanceCertainty certainty = DistanceCertainty::UpperBound;
    Side side = Side::Min; // the requested side
    std::optional<BitVec> witness;
    std::uint64_t trials_used = 0;
    std::uint64_t nodes_explored = 0;
    std::uint64_t seed = 0;
    /// Proven floor from the exact solver; value == lower_bound means Exact.
    std::optional<int> lower_bound;
};

struct EstimateOptions {
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    /// Also weigh sums of row pairs of each reduced window (better
    /// convergence at quadratic per-trial cost).
    bool pair_sums = true;
    int threads = 0; // <= 0: OpenMP default
};

/// Randomized information-set upper bound. Per trial, the kernel basis is
/// row-randomized and reduced over a random column order; every reduced row
/// (and optionally row-pair sum) outside the stabilizer rowspace is a logical
/// operator whose weight bounds the distance. Deterministic given (seed,
/// trials) for any thread count: trial RNG streams are derived counter-style
/// and the min-reduction is keyed by (weight, trial, row).
DistanceResult estimate_distance(const StabilizerCode& code, Side side,
                                 const EstimateOptions& opts);

/// Single-threaded reference implementation; bit-identical results.
DistanceResult estimate_distance_serial(const StabilizerCode& code, Side side,
                                        const EstimateOptions& opts);

struct ExactOptions {
    /// Enumeration budget in nodes (weighed codewords). Rounds are atomic, so
    /// results are deterministic for a fixed budget and any thread count.
    std::uint64_t max_nodes = std::uint64_t{400} * 1000 * 1000;
    /// Optional wall-clock cap checked between rounds; trades determinism.
    double time_limit_s = 0;
    int threads = 0;
    std::optional<int> initial_upper_bound;
    /// Skip information-set matrices whose rank defect exceeds this (each of
    /// their rounds costs a 2^defect expansion factor).
    int max_defect_bits = 22;
};

/// Growing-threshold exact search: enumerates codewords of the kernel over a
/// chain of disjoint information sets (rank-defect matrices are expanded over
/// their defect space), excluding the stabilizer subcode by membership tests.
/// After completing round r_i on every matrix i, any unseen logical operator
/// weighs at least sum_i (r_i + 1); the search stops when that floor reaches
/// the best witness found, returning Exact, or when the budget runs out,
/// returning the (LowerBound, UpperBound) pair achieved.
DistanceResult exact_distance(const StabilizerCode& code, Side side, const ExactOptions& opts);

/// Estimator pass then exact confirmation per side; d = min over sides,
/// Exact only when both sides finished exactly.
CodeParameters code_distance(const StabilizerCode& code, std::uint64_t trials, std::uint64_t seed,
                             const ExactOptions& exact_opts);

} // namespace tilekit
