#include "segal/nat_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace segal {

NatMatrix::NatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("NatMatrix: negative dimension");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

NatMatrix::NatMatrix(int rows, int cols, std::vector<int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("NatMatrix: negative dimension");
    if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw std::invalid_argument("NatMatrix: entry count does not match dimensions");
    for (int e : entries_)
        if (e < 0) throw std::invalid_argument("NatMatrix: negative entry");
}

MultiIndex NatMatrix::row_sums() const {
    std::vector<int> sums(static_cast<std::size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) sums[static_cast<std::size_t>(i)] += (*this)(i, j);
    return MultiIndex(std::move(sums));
}

MultiIndex NatMatrix::col_sums() const {
    std::vector<int> sums(static_cast<std::size_t>(cols_), 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) sums[static_cast<std::size_t>(j)] += (*this)(i, j);
    return MultiIndex(std::move(sums));
}

Integer NatMatrix::factorial() const {
    Integer f = 1;
    for (int e : entries_) f *= segal::factorial(static_cast<unsigned int>(e));
    return f;
}

std::string NatMatrix::to_string() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) s += ",";
        s += "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) s += ",";
            s += std::to_string((*this)(i, j));
        }
        s += "]";
    }
    return s + "]";
}

bool operator<(const NatMatrix& a, const NatMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                        b.entries_.begin(), b.entries_.end());
}

namespace {

// Fills entries in row-major order, smaller values first, so the output is
// ascending lexicographic without a final sort. col_left tracks the remaining
// column capacity; row_left the unassigned remainder of the current row.
void fill_matrices(int m, int n, int pos, int row_left, std::vector<int>& col_left,
                   std::vector<int>& entries, const MultiIndex& row_sums,
                   std::vector<NatMatrix>& out) {
    if (pos == m * n) {
        out.emplace_back(m, n, entries);
        return;
    }
    const int i = pos / n;
    const int j = pos % n;
    if (j == 0) row_left = row_sums[i];

    // Remaining columns of this row must be able to absorb what this entry
    // does not take.
    int tail_capacity = 0;
    for (int jj = j + 1; jj < n; ++jj) tail_capacity += col_left[static_cast<std::size_t>(jj)];

    const int lo = std::max(0, row_left - tail_capacity);
    const int hi = std::min(row_left, col_left[static_cast<std::size_t>(j)]);
    for (int v = lo; v <= hi; ++v) {
        entries[static_cast<std::size_t>(pos)] = v;
        col_left[static_cast<std::size_t>(j)] -= v;
        fill_matrices(m, n, pos + 1, row_left - v, col_left, entries, row_sums, out);
        col_left[static_cast<std::size_t>(j)] += v;
    }
    entries[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

std::vector<NatMatrix> enumerate_row_col_matrices(const MultiIndex& row_sums,
                                                  const MultiIndex& col_sums) {
    if (row_sums.order() != col_sums.order()) return {};
    const int m = row_sums.size();
    const int n = col_sums.size();
    if (m == 0 || n == 0) {
        // Total sums agree and are zero: the unique (possibly empty) zero matrix.
        return {NatMatrix(m, n)};
    }
    std::vector<int> col_left = col_sums.exponents();
    std::vector<int> entries(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0);
    std::vector<NatMatrix> out;
    fill_matrices(m, n, 0, 0, col_left, entries, row_sums, out);
    return out;
}

}  // namespace segal
