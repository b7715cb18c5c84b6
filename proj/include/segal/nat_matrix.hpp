#ifndef SEGAL_NAT_MATRIX_HPP
#define SEGAL_NAT_MATRIX_HPP

#include <string>
#include <vector>

#include "segal/multi_index.hpp"

namespace segal {

/// m x n matrix over N_0 -- a multi-index with two labels. Row sums and
/// column sums are the usual multi-indices Gamma*1_n and Gamma^t*1_m.
class NatMatrix {
public:
    NatMatrix(int rows, int cols);
    NatMatrix(int rows, int cols, std::vector<int> entries);  // row-major

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int operator()(int i, int j) const { return entries_[index(i, j)]; }

    MultiIndex row_sums() const;  // length rows()
    MultiIndex col_sums() const;  // length cols()

    /// Gamma! = product of entry factorials.
    Integer factorial() const;

    std::string to_string() const;  // "[[1,0],[0,1]]"

    friend bool operator==(const NatMatrix& a, const NatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    /// Lexicographic by row-major entries (dimensions first).
    friend bool operator<(const NatMatrix& a, const NatMatrix& b);

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }

    int rows_, cols_;
    std::vector<int> entries_;
};

/// All Gamma in M_{m x n}(N_0) with the prescribed row and column sums,
/// ascending lexicographic by row-major entries. Empty when the total sums
/// disagree; the 0x0 and all-zero cases yield exactly the zero matrix.
std::vector<NatMatrix> enumerate_row_col_matrices(const MultiIndex& row_sums,
                                                  const MultiIndex& col_sums);

}  // namespace segal

#endif
