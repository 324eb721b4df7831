#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace tilekit {

/// Bit vector over GF(2). Unused bits of the last word are kept zero so that
/// word-wise operations (xor, popcount, dot) never need masking.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    static BitVec from_indices(std::size_t bits, std::span<const std::size_t> ones);

    std::size_t size() const { return bits_; }
    std::size_t word_count() const { return words_.size(); }
    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    std::size_t popcount() const;
    bool is_zero() const;
    /// Index of the lowest set bit, or size() when zero.
    std::size_t lowest_set() const;
    std::vector<std::size_t> ones() const;

    friend bool operator==(const BitVec&, const BitVec&) = default;

    /// Parity of the overlap <a, b>.
    friend int dot(const BitVec& a, const BitVec& b);

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense bit-packed matrix over GF(2). Row-major, fixed stride.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

    static BinaryMatrix identity(std::size_t n);
    static BinaryMatrix from_rows(std::span<const BitVec> rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t word_stride() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (v)
            data_[r * stride_ + (c >> 6)] |= mask;
        else
            data_[r * stride_ + (c >> 6)] &= ~mask;
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {data_.data() + r * stride_, stride_};
    }
    std::span<std::uint64_t> row_words(std::size_t r) {
        return {data_.data() + r * stride_, stride_};
    }
    BitVec row(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);
    void append_row(const BitVec& v);
    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    std::size_t row_weight(std::size_t r) const;
    bool row_is_zero(std::size_t r) const;
    bool is_zero() const;

    BinaryMatrix transposed() const;

    /// In-place reduced row echelon form with deterministic pivoting
    /// (leftmost nonzero column, first available row). Returns pivot columns.
    std::vector<std::size_t> rref();

    /// Reduced row echelon form processing columns in the given order (a
    /// permutation of [0, cols)). Rows stay in the original column space;
    /// pivot columns are returned in processing order.
    std::vector<std::size_t> rref_ordered(std::span<const std::size_t> column_order);

    std::size_t rank() const;

    /// Basis of {v : M v = 0}. An empty matrix (0 rows) yields the full
    /// standard basis of its column space.
    std::vector<BitVec> nullspace_basis() const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Standard matrix product reduced mod 2. Throws std::invalid_argument on a
/// dimension mismatch.
BinaryMatrix mul_mod2(const BinaryMatrix& a, const BinaryMatrix& b);

/// Cached row-echelon form of a matrix, for repeated rowspace-membership
/// queries. Rows are fully reduced; one row per pivot column.
class ReducedBasis {
public:
    ReducedBasis() = default;
    explicit ReducedBasis(const BinaryMatrix& m);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }

    /// Residual of v after elimination against the basis; zero iff v is in
    /// the rowspace.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const;

    /// Adds v to the basis if independent; returns whether the rank grew.
    bool absorb(BitVec v);

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivots_;
};

/// True iff v is a GF(2) combination of the rows of m. Builds a ReducedBasis
/// per call; use ReducedBasis directly for repeated queries against one m.
bool in_rowspace(const BinaryMatrix& m, const BitVec& v);

} // namespace tilekit
