#ifndef SEGAL_LINEAR_MAP_HPP
#define SEGAL_LINEAR_MAP_HPP

#include <string>
#include <vector>

#include "segal/nat_matrix.hpp"
#include "segal/rational.hpp"

namespace segal {

/// m x n matrix over the rationals; the linear transformation T: R^n -> R^m.
class LinearMap {
public:
    LinearMap(int rows, int cols);  // zero map
    LinearMap(int rows, int cols, std::vector<Rational> entries);  // row-major

    static LinearMap identity(int size);
    static LinearMap diagonal(const std::vector<Rational>& diag);
    /// 1 x n map y = <c, x>.
    static LinearMap row_vector(const std::vector<Rational>& c);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rational& operator()(int i, int j) const { return entries_[index(i, j)]; }

    LinearMap transpose() const;
    LinearMap operator*(const LinearMap& other) const;  // matrix product
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool is_identity() const;

    /// T^Gamma = prod T_{i,j}^{Gamma_{i,j}} with 0^0 = 1.
    Rational power(const NatMatrix& gamma) const;

    std::string to_string() const;

    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }

    int rows_, cols_;
    std::vector<Rational> entries_;
};

}  // namespace segal

#endif
