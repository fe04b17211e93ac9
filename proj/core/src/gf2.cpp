#include "cvqe/gf2.hpp"

namespace cvqe::gf2 {

BitVec BitMatrix::mul_vec(const BitVec& v) const {
    if (v.size() != cols_) throw ValidationError("mul_vec: size mismatch");
    BitVec out(rows_);
    for (int r = 0; r < rows_; ++r) {
        int bit = 0;
        const std::uint64_t* row = row_words(r);
        for (int w = 0; w < words_per_row_; ++w) bit ^= popcount64(row[w] & v.words()[w]) & 1;
        if (bit) out.set(r, true);
    }
    return out;
}

BitMatrix BitMatrix::mul(const BitMatrix& other) const {
    if (cols_ != other.rows_) throw ValidationError("mul: dimension mismatch");
    BitMatrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r) {
        std::uint64_t* dst = out.row_words(r);
        for (int k = 0; k < cols_; ++k)
            if (get(r, k)) {
                const std::uint64_t* src = other.row_words(k);
                for (int w = 0; w < out.words_per_row(); ++w) dst[w] ^= src[w];
            }
    }
    return out;
}

int rank(const BitMatrix& m) {
    BitMatrix work = m;
    int r = 0;
    for (int c = 0; c < work.cols() && r < work.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < work.rows(); ++i)
            if (work.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        work.swap_rows(pivot, r);
        for (int i = 0; i < work.rows(); ++i)
            if (i != r && work.get(i, c)) work.xor_row(i, r);
        ++r;
    }
    return r;
}

std::vector<int> select_independent_columns(const BitMatrix& m, const std::vector<int>& order,
                                            int limit) {
    std::vector<int> kept;
    IndependenceFilter filter;
    for (int c : order) {
        if (static_cast<int>(kept.size()) >= limit) break;
        if (c < 0 || c >= m.cols()) throw ValidationError("select_independent_columns: bad index");
        if (filter.insert(m.column(c))) kept.push_back(c);
    }
    return kept;
}

BitMatrix invert(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("invert: matrix not square");
    const int n = m.rows();
    BitMatrix work = m;
    BitMatrix inv = BitMatrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (work.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw ValidationError("invert: singular matrix");
        work.swap_rows(pivot, c);
        inv.swap_rows(pivot, c);
        for (int r = 0; r < n; ++r)
            if (r != c && work.get(r, c)) {
                work.xor_row(r, c);
                inv.xor_row(r, c);
            }
    }
    return inv;
}

namespace {

/// Completes the given independent columns to a full basis of GF(2)^n with
/// standard unit vectors (ascending index), returned as an n-by-n matrix
/// whose first columns are the inputs.
BitMatrix complete_basis(const std::vector<BitVec>& cols, int n) {
    BitMatrix out(n, n);
    IndependenceFilter filter;
    int placed = 0;
    for (const auto& c : cols) {
        if (c.size() != n) throw ValidationError("basis_map: column length mismatch");
        if (!filter.insert(c)) throw ValidationError("basis_map: dependent input columns");
        out.set_column(placed++, c);
    }
    for (int i = 0; i < n && placed < n; ++i) {
        BitVec e(n);
        e.set(i, true);
        if (filter.insert(e)) out.set_column(placed++, e);
    }
    if (placed != n) throw InvariantError("basis completion failed");
    return out;
}

}  // namespace

BitMatrix basis_map(const std::vector<BitVec>& a_cols, const std::vector<BitVec>& b_cols) {
    if (a_cols.size() != b_cols.size()) throw ValidationError("basis_map: size mismatch");
    if (a_cols.empty()) throw ValidationError("basis_map: need at least one column");
    const int n = a_cols.front().size();
    BitMatrix a_full = complete_basis(a_cols, n);
    BitMatrix b_full = complete_basis(b_cols, n);
    return b_full.mul(invert(a_full));
}

}  // namespace cvqe::gf2
