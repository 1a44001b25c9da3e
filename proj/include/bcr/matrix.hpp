#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf2_poly.hpp"

namespace bcr {

/// Dense r x n matrix over GF(2), row-major, each row a bit string.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(std::size_t(rows) * words_, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    /// Columns given as r-bit masks (bit i = row i); r <= 64.
    static BinaryMatrix from_columns(int rows, const std::vector<std::uint64_t>& columns) {
        if (rows > 64) throw std::invalid_argument("from_columns supports at most 64 rows");
        BinaryMatrix h(rows, static_cast<int>(columns.size()));
        for (int j = 0; j < h.cols_; ++j)
            for (int i = 0; i < rows; ++i)
                if ((columns[j] >> i) & 1) h.set(i, j, true);
        return h;
    }

    /// Rows given as strings of '0'/'1'.
    static BinaryMatrix from_strings(const std::vector<std::string>& rows) {
        const int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
        BinaryMatrix h(static_cast<int>(rows.size()), n);
        for (int i = 0; i < h.rows_; ++i) {
            if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("ragged matrix rows");
            for (int j = 0; j < n; ++j) {
                if (rows[i][j] != '0' && rows[i][j] != '1') throw std::invalid_argument("matrix entries must be 0/1");
                h.set(i, j, rows[i][j] == '1');
            }
        }
        return h;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    bool get(int i, int j) const noexcept { return (row_ptr(i)[j / 64] >> (j % 64)) & 1; }
    void set(int i, int j, bool v) noexcept {
        auto& w = row_ptr(i)[j / 64];
        const std::uint64_t bit = std::uint64_t{1} << (j % 64);
        w = v ? (w | bit) : (w & ~bit);
    }

    /// Column j as an r-bit mask.
    std::uint64_t column(int j) const {
        if (rows_ > 64) throw std::logic_error("column masks need at most 64 rows");
        std::uint64_t c = 0;
        for (int i = 0; i < rows_; ++i)
            if (get(i, j)) c |= std::uint64_t{1} << i;
        return c;
    }

    std::vector<std::uint64_t> columns() const {
        std::vector<std::uint64_t> out(cols_);
        for (int j = 0; j < cols_; ++j) out[j] = column(j);
        return out;
    }

    /// Row i as a polynomial (bit j = entry j).
    BinaryPolynomial row(int i) const {
        BinaryPolynomial p;
        for (int j = 0; j < cols_; ++j)
            if (get(i, j)) p.set_coeff(j, true);
        return p;
    }

    /// H * v for v an n-bit vector given as a polynomial; r <= 64.
    std::uint64_t multiply(const BinaryPolynomial& v) const {
        std::uint64_t s = 0;
        for (int j = 0; j < cols_; ++j)
            if (v.coeff(j)) s ^= column(j);
        return s;
    }

    void add_row(int dst, int src) noexcept {
        auto* d = row_ptr(dst);
        const auto* s = row_ptr(src);
        for (int w = 0; w < words_; ++w) d[w] ^= s[w];
    }

    void swap_rows(int a, int b) noexcept {
        if (a == b) return;
        auto* x = row_ptr(a);
        auto* y = row_ptr(b);
        for (int w = 0; w < words_; ++w) std::swap(x[w], y[w]);
    }

    BinaryMatrix transpose() const {
        BinaryMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (get(i, j)) t.set(j, i, true);
        return t;
    }

    /// Columns [first, first + count).
    BinaryMatrix column_block(int first, int count) const {
        BinaryMatrix b(rows_, count);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < count; ++j) b.set(i, j, get(i, first + j));
        return b;
    }

    /// Row echelon in place; returns the rank.
    int row_reduce() noexcept {
        int rank = 0;
        for (int j = 0; j < cols_ && rank < rows_; ++j) {
            int pivot = -1;
            for (int i = rank; i < rows_; ++i)
                if (get(i, j)) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) continue;
            swap_rows(rank, pivot);
            for (int i = 0; i < rows_; ++i)
                if (i != rank && get(i, j)) add_row(i, rank);
            ++rank;
        }
        return rank;
    }

    int rank() const {
        BinaryMatrix copy = *this;
        return copy.row_reduce();
    }

    /// Inverse of a square matrix, or nullopt when singular.
    std::optional<BinaryMatrix> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
        const int n = rows_;
        BinaryMatrix aug(n, 2 * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) aug.set(i, j, get(i, j));
            aug.set(i, n + i, true);
        }
        aug.row_reduce();
        for (int i = 0; i < n; ++i)
            if (!aug.get(i, i)) return std::nullopt;
        return aug.column_block(n, n);
    }

    /// Basis of the right kernel {v : H v = 0}, as n-bit polynomials.
    std::vector<BinaryPolynomial> kernel_basis() const {
        BinaryMatrix e = *this;
        const int rank = e.row_reduce();
        std::vector<int> pivot_col(rank, -1);
        std::vector<bool> is_pivot(cols_, false);
        for (int i = 0, j = 0; i < rank; ++i) {
            while (!e.get(i, j)) ++j;
            pivot_col[i] = j;
            is_pivot[j] = true;
        }
        std::vector<BinaryPolynomial> basis;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            BinaryPolynomial v = BinaryPolynomial::monomial(free);
            for (int i = 0; i < rank; ++i)
                if (e.get(i, free)) v.set_coeff(pivot_col[i], true);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

    friend BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
        BinaryMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k)
                if (a.get(i, k)) {
                    auto* d = c.row_ptr(i);
                    const auto* s = b.row_ptr(k);
                    for (int w = 0; w < c.words_; ++w) d[w] ^= s[w];
                }
        return c;
    }

private:
    std::uint64_t* row_ptr(int i) noexcept { return bits_.data() + std::size_t(i) * words_; }
    const std::uint64_t* row_ptr(int i) const noexcept { return bits_.data() + std::size_t(i) * words_; }

    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// One `0x` hex line per row; bit j of a row is column j.
inline std::string dump_matrix(const BinaryMatrix& h) {
    std::string out;
    for (int i = 0; i < h.rows(); ++i) out += to_hex(h.row(i)) + "\n";
    return out;
}

}  // namespace bcr
