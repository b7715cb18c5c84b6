#ifndef SEGAL_MULTI_INDEX_HPP
#define SEGAL_MULTI_INDEX_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "segal/rational.hpp"

namespace segal {

/// Exponent vector in N_0^n. Length is fixed at construction.
///
/// Ordering is lexicographic on the exponent vectors (shorter vectors first
/// when lengths differ), which fixes the deterministic term order used
/// everywhere in the library.
class MultiIndex {
public:
    /// Zero multi-index of the given length.
    explicit MultiIndex(int size);
    MultiIndex(std::initializer_list<int> exponents);
    explicit MultiIndex(std::vector<int> exponents);

    int size() const { return static_cast<int>(exp_.size()); }

    /// |beta| = sum of the exponents.
    int order() const;

    /// beta! = product of entry factorials.
    Integer factorial() const;

    int operator[](int j) const { return exp_[static_cast<std::size_t>(j)]; }
    const std::vector<int>& exponents() const { return exp_; }

    bool is_zero() const { return order() == 0; }

    /// Componentwise beta <= other.
    bool leq(const MultiIndex& other) const;

    /// beta - delta_j; defined only when beta_j >= 1.
    MultiIndex minus_unit(int j) const;
    /// beta + delta_j.
    MultiIndex plus_unit(int j) const;

    /// Concatenation (this, other) -- block index for product measures.
    MultiIndex concat(const MultiIndex& other) const;
    /// Contiguous block [from, from+length).
    MultiIndex slice(int from, int length) const;

    std::string to_string() const;  // "(2,0,1)"

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exp_ == b.exp_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.exp_ != b.exp_; }
    friend bool operator<(const MultiIndex& a, const MultiIndex& b);
    friend bool operator>(const MultiIndex& a, const MultiIndex& b) { return b < a; }

private:
    void validate() const;

    std::vector<int> exp_;
};

/// All beta in N_0^n with |beta| == order, ascending lexicographic.
std::vector<MultiIndex> indices_of_order(int size, int order);

/// All beta in N_0^n with |beta| <= max_order, ascending (order, lex).
std::vector<MultiIndex> indices_up_to_order(int size, int max_order);

/// All gamma <= beta componentwise (including beta itself), ascending lexicographic.
std::vector<MultiIndex> indices_below(const MultiIndex& beta);

/// Product of componentwise binomials C(beta_i, gamma_i); requires gamma <= beta.
Integer binomial_product(const MultiIndex& beta, const MultiIndex& gamma);

}  // namespace segal

#endif
