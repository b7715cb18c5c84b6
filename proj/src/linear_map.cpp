#include "segal/linear_map.hpp"

#include <stdexcept>

namespace segal {

LinearMap::LinearMap(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("LinearMap: negative dimension");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

LinearMap::LinearMap(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("LinearMap: negative dimension");
    if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw std::invalid_argument("LinearMap: entry count does not match dimensions");
}

LinearMap LinearMap::identity(int size) {
    LinearMap id(size, size);
    for (int i = 0; i < size; ++i) id.entries_[id.index(i, i)] = 1;
    return id;
}

LinearMap LinearMap::diagonal(const std::vector<Rational>& diag) {
    const int n = static_cast<int>(diag.size());
    LinearMap d(n, n);
    for (int i = 0; i < n; ++i) d.entries_[d.index(i, i)] = diag[static_cast<std::size_t>(i)];
    return d;
}

LinearMap LinearMap::row_vector(const std::vector<Rational>& c) {
    return LinearMap(1, static_cast<int>(c.size()), c);
}

LinearMap LinearMap::transpose() const {
    LinearMap t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.entries_[t.index(j, i)] = (*this)(i, j);
    return t;
}

LinearMap LinearMap::operator*(const LinearMap& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("LinearMap: product dimension mismatch (" +
                                    std::to_string(cols_) + " vs " + std::to_string(other.rows_) + ")");
    LinearMap p(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < other.cols_; ++j)
                p.entries_[p.index(i, j)] += a * other(k, j);
        }
    return p;
}

std::vector<Rational> LinearMap::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("LinearMap::apply: vector length mismatch");
    std::vector<Rational> out(static_cast<std::size_t>(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

bool LinearMap::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

Rational LinearMap::power(const NatMatrix& gamma) const {
    if (gamma.rows() != rows_ || gamma.cols() != cols_)
        throw std::invalid_argument("LinearMap::power: exponent matrix dimension mismatch");
    Rational p = 1;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const int e = gamma(i, j);
            if (e > 0) p *= pow((*this)(i, j), static_cast<unsigned int>(e));
        }
    return p;
}

std::string LinearMap::to_string() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) s += ",";
        s += "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) s += ",";
            s += (*this)(i, j).to_string();
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace segal
