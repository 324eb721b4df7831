#pragma once

#include "tilekit/code.hpp"
#include "tilekit/distance.hpp"
#include "tilekit/rng.hpp"

#include <bit>
#include <limits>
#include <vector>

// Test-only oracles, kept independent of the implementation paths they
// check: plain int matrices and textbook elimination.

namespace oracle {

using IntMatrix = std::vector<std::vector<int>>;

inline IntMatrix to_int_matrix(const tilekit::BinaryMatrix& m) {
    IntMatrix out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m.get(r, c);
    return out;
}

// Textbook row reduction over GF(2), no bit packing.
inline std::size_t naive_rank(IntMatrix m) {
    if (m.empty())
        return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = m.size();
        for (std::size_t r = rank; r < m.size(); ++r)
            if (m[r][c]) {
                piv = r;
                break;
            }
        if (piv == m.size())
            continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != rank && m[r][c])
                for (std::size_t j = 0; j < cols; ++j)
                    m[r][j] ^= m[rank][j];
        ++rank;
    }
    return rank;
}

inline std::size_t naive_rank(const tilekit::BinaryMatrix& m) {
    return naive_rank(to_int_matrix(m));
}

// Triple-loop product mod 2.
inline IntMatrix naive_mul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), inner = b.size(), cols = inner ? b[0].size() : 0;
    IntMatrix out(n, std::vector<int>(cols, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            int acc = 0;
            for (std::size_t t = 0; t < inner; ++t)
                acc ^= a[i][t] & b[t][j];
            out[i][j] = acc;
        }
    return out;
}

// Minimum weight over ker(h_opposite) \ rowspace(h_same) by full kernel
// enumeration (gray code). Only for small codes.
inline int brute_force_side_distance(const tilekit::StabilizerCode& code, tilekit::Side side) {
    using namespace tilekit;
    const BinaryMatrix& opp = side == Side::X ? code.h_z : code.h_x;
    const BinaryMatrix& same = side == Side::X ? code.h_x : code.h_z;
    const auto basis = opp.nullspace_basis();
    if (basis.size() > 24)
        throw std::runtime_error("brute force oracle: kernel too large");
    const ReducedBasis stab(same);
    BitVec acc(code.qubits.size());
    int best = std::numeric_limits<int>::max();
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << basis.size()); ++i) {
        acc ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        const int w = static_cast<int>(acc.popcount());
        if (w < best && !stab.contains(acc))
            best = w;
    }
    return best;
}

inline int brute_force_distance(const tilekit::StabilizerCode& code) {
    return std::min(brute_force_side_distance(code, tilekit::Side::X),
                    brute_force_side_distance(code, tilekit::Side::Z));
}

// Seeded random matrix for property tests.
inline tilekit::BinaryMatrix random_matrix(std::size_t rows, std::size_t cols,
                                           std::uint64_t seed) {
    tilekit::Rng rng(seed);
    tilekit::BinaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, rng.coin());
    return m;
}

// Seeded random weight-w tile in a W x H box.
inline tilekit::Tile random_tile(int W, int H, int w, std::uint64_t seed) {
    tilekit::Rng rng(seed);
    std::vector<int> picks(static_cast<std::size_t>(2 * W * H));
    for (std::size_t i = 0; i < picks.size(); ++i)
        picks[i] = static_cast<int>(i);
    rng.shuffle(picks.data(), picks.size());
    std::vector<tilekit::EdgeXY> h, v;
    for (int i = 0; i < w; ++i) {
        const int e = picks[static_cast<std::size_t>(i)];
        const int per_kind = W * H;
        if (e < per_kind)
            h.emplace_back(e % W, e / W);
        else
            v.emplace_back((e - per_kind) % W, (e - per_kind) / W);
    }
    return tilekit::Tile(W, H, std::move(h), std::move(v));
}

} // namespace oracle
