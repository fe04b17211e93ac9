#pragma once

#include <cstdint>
#include <vector>

#include "cvqe/common.hpp"

namespace cvqe::gf2 {

/// Bit vector over GF(2), little-endian: bit i of word i/64 is entry i.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }
    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void xor_with(const BitVec& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    }
    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    /// Index of the lowest set bit, or -1 if zero.
    int lowest_bit() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return static_cast<int>(w) * 64 + __builtin_ctzll(words_[w]);
        return -1;
    }

    bool operator==(const BitVec& other) const {
        return size_ == other.size_ && words_ == other.words_;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

  private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense bit matrix over GF(2) with bit-packed rows. Row-wise XOR is the
/// workhorse of every elimination below.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), bits_(static_cast<std::size_t>(rows) * words_per_row_, 0) {
        if (rows <= 0 || cols <= 0) throw ValidationError("BitMatrix dimensions must be positive");
    }

    static BitMatrix identity(int n) {
        BitMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return (bits_[word_index(r, c)] >> (c & 63)) & 1; }
    void set(int r, int c, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (v)
            bits_[word_index(r, c)] |= mask;
        else
            bits_[word_index(r, c)] &= ~mask;
    }

    void xor_row(int dst, int src) {
        std::uint64_t* d = &bits_[static_cast<std::size_t>(dst) * words_per_row_];
        const std::uint64_t* s = &bits_[static_cast<std::size_t>(src) * words_per_row_];
        for (int w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        std::uint64_t* pa = &bits_[static_cast<std::size_t>(a) * words_per_row_];
        std::uint64_t* pb = &bits_[static_cast<std::size_t>(b) * words_per_row_];
        for (int w = 0; w < words_per_row_; ++w) std::swap(pa[w], pb[w]);
    }

    BitVec row(int r) const {
        BitVec v(cols_);
        for (int w = 0; w < words_per_row_; ++w) v.words()[w] = bits_[static_cast<std::size_t>(r) * words_per_row_ + w];
        return v;
    }
    BitVec column(int c) const {
        BitVec v(rows_);
        for (int r = 0; r < rows_; ++r)
            if (get(r, c)) v.set(r, true);
        return v;
    }
    void set_column(int c, const BitVec& v) {
        for (int r = 0; r < rows_; ++r) set(r, c, v.get(r));
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    /// Matrix-vector product over GF(2); v.size() must equal cols().
    BitVec mul_vec(const BitVec& v) const;
    /// Matrix-matrix product over GF(2).
    BitMatrix mul(const BitMatrix& other) const;

    bool operator==(const BitMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
    }

    const std::uint64_t* row_words(int r) const {
        return &bits_[static_cast<std::size_t>(r) * words_per_row_];
    }
    std::uint64_t* row_words(int r) { return &bits_[static_cast<std::size_t>(r) * words_per_row_]; }
    int words_per_row() const { return words_per_row_; }

  private:
    std::size_t word_index(int r, int c) const {
        return static_cast<std::size_t>(r) * words_per_row_ + (c >> 6);
    }

    int rows_ = 0, cols_ = 0, words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// GF(2) rank via row echelon on a scratch copy.
int rank(const BitMatrix& m);

/// Scans columns of m in the given order and keeps each column that is
/// linearly independent of the columns kept so far, stopping once `limit`
/// columns are kept. Returns the kept column indices in scan order.
std::vector<int> select_independent_columns(const BitMatrix& m, const std::vector<int>& order,
                                            int limit);

/// Inverse of a square matrix over GF(2). Throws ValidationError if singular.
BitMatrix invert(const BitMatrix& m);

/// Given r independent columns a_1..a_r and r independent columns b_1..b_r
/// (each of length n), returns an invertible n-by-n matrix M with
/// M a_i = b_i for all i. Both sets are completed to full bases with
/// standard unit vectors scanned in ascending index; M = B A^{-1}.
BitMatrix basis_map(const std::vector<BitVec>& a_cols, const std::vector<BitVec>& b_cols);

/// Incremental GF(2) independence filter: feed vectors one at a time,
/// keeping a reduced basis. insert() returns true iff the vector was
/// independent of everything inserted before.
class IndependenceFilter {
  public:
    bool insert(BitVec v) {
        reduce(v);
        if (v.is_zero()) return false;
        basis_.push_back(v);
        pivots_.push_back(v.lowest_bit());
        return true;
    }
    bool would_insert(BitVec v) const {
        reduce(v);
        return !v.is_zero();
    }
    int size() const { return static_cast<int>(basis_.size()); }

  private:
    void reduce(BitVec& v) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (v.get(pivots_[i])) v.xor_with(basis_[i]);
    }
    std::vector<BitVec> basis_;
    std::vector<int> pivots_;
};

}  // namespace cvqe::gf2
