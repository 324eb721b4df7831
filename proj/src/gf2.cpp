#include "tilekit/gf2.hpp"

#include <algorithm>
#include <bit>

namespace tilekit {

BitVec BitVec::from_indices(std::size_t bits, std::span<const std::size_t> ones) {
    BitVec v(bits);
    for (std::size_t i : ones)
        v.set(i, true);
    return v;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (bits_ != other.bits_)
        throw std::invalid_argument("BitVec xor: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
    return *this;
}

std::size_t BitVec::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_)
        n += std::popcount(w);
    return n;
}

bool BitVec::is_zero() const {
    for (std::uint64_t w : words_)
        if (w)
            return false;
    return true;
}

std::size_t BitVec::lowest_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i])
            return i * 64 + std::countr_zero(words_[i]);
    return bits_;
}

std::vector<std::size_t> BitVec::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

int dot(const BitVec& a, const BitVec& b) {
    if (a.bits_ != b.bits_)
        throw std::invalid_argument("BitVec dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w)
        acc ^= a.words_[w] & b.words_[w];
    return std::popcount(acc) & 1;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::span<const BitVec> rows, std::size_t cols) {
    BinaryMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        m.set_row(r, rows[r]);
    return m;
}

BitVec BinaryMatrix::row(std::size_t r) const {
    BitVec v(cols_);
    std::copy_n(data_.data() + r * stride_, stride_, v.words().data());
    return v;
}

void BinaryMatrix::set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_)
        throw std::invalid_argument("set_row: length mismatch");
    std::copy_n(v.words().data(), stride_, data_.data() + r * stride_);
}

void BinaryMatrix::append_row(const BitVec& v) {
    if (cols_ == 0 && rows_ == 0) {
        cols_ = v.size();
        stride_ = (cols_ + 63) / 64;
    }
    if (v.size() != cols_)
        throw std::invalid_argument("append_row: length mismatch");
    data_.resize((rows_ + 1) * stride_, 0);
    ++rows_;
    set_row(rows_ - 1, v);
}

void BinaryMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    std::uint64_t* d = data_.data() + dst * stride_;
    const std::uint64_t* s = data_.data() + src * stride_;
    for (std::size_t w = 0; w < stride_; ++w)
        d[w] ^= s[w];
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    std::swap_ranges(data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_,
                     data_.begin() + b * stride_);
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const {
    std::size_t n = 0;
    for (std::uint64_t w : row_words(r))
        n += std::popcount(w);
    return n;
}

bool BinaryMatrix::row_is_zero(std::size_t r) const {
    for (std::uint64_t w : row_words(r))
        if (w)
            return false;
    return true;
}

bool BinaryMatrix::is_zero() const {
    for (std::uint64_t w : data_)
        if (w)
            return false;
    return true;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto words = row_words(r);
        for (std::size_t wi = 0; wi < stride_; ++wi) {
            std::uint64_t w = words[wi];
            while (w) {
                const std::size_t c = wi * 64 + std::countr_zero(w);
                t.set(c, r, true);
                w &= w - 1;
            }
        }
    }
    return t;
}

std::vector<std::size_t> BinaryMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < cols_ && next_row < rows_; ++c) {
        std::size_t piv = rows_;
        for (std::size_t r = next_row; r < rows_; ++r) {
            if (get(r, c)) {
                piv = r;
                break;
            }
        }
        if (piv == rows_)
            continue;
        swap_rows(piv, next_row);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != next_row && get(r, c))
                xor_row_into(next_row, r);
        pivots.push_back(c);
        ++next_row;
    }
    return pivots;
}

std::vector<std::size_t> BinaryMatrix::rref_ordered(std::span<const std::size_t> column_order) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c : column_order) {
        if (next_row >= rows_)
            break;
        std::size_t piv = rows_;
        for (std::size_t r = next_row; r < rows_; ++r) {
            if (get(r, c)) {
                piv = r;
                break;
            }
        }
        if (piv == rows_)
            continue;
        swap_rows(piv, next_row);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != next_row && get(r, c))
                xor_row_into(next_row, r);
        pivots.push_back(c);
        ++next_row;
    }
    return pivots;
}

std::size_t BinaryMatrix::rank() const {
    BinaryMatrix copy = *this;
    return copy.rref().size();
}

std::vector<BitVec> BinaryMatrix::nullspace_basis() const {
    BinaryMatrix red = *this;
    const std::vector<std::size_t> pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;

    std::vector<BitVec> basis;
    basis.reserve(cols_ - pivots.size());
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f])
            continue;
        BitVec v(cols_);
        v.set(f, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (red.get(i, f))
                v.set(pivots[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

BinaryMatrix mul_mod2(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mul_mod2: inner dimensions differ");
    BinaryMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto arow = a.row_words(r);
        auto orow = out.row_words(r);
        for (std::size_t wi = 0; wi < arow.size(); ++wi) {
            std::uint64_t w = arow[wi];
            while (w) {
                const std::size_t j = wi * 64 + std::countr_zero(w);
                auto brow = b.row_words(j);
                for (std::size_t k = 0; k < brow.size(); ++k)
                    orow[k] ^= brow[k];
                w &= w - 1;
            }
        }
    }
    return out;
}

ReducedBasis::ReducedBasis(const BinaryMatrix& m) : cols_(m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        absorb(m.row(r));
}

BitVec ReducedBasis::reduce(BitVec v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("ReducedBasis::reduce: length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i]))
            v ^= rows_[i];
    return v;
}

bool ReducedBasis::contains(const BitVec& v) const { return reduce(v).is_zero(); }

bool ReducedBasis::absorb(BitVec v) {
    if (cols_ == 0)
        cols_ = v.size();
    v = reduce(std::move(v));
    if (v.is_zero())
        return false;
    const std::size_t piv = v.lowest_set();
    // Keep earlier rows reduced against the new pivot.
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(piv))
            rows_[i] ^= v;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool in_rowspace(const BinaryMatrix& m, const BitVec& v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("in_rowspace: length mismatch");
    return ReducedBasis(m).contains(v);
}

} // namespace tilekit
