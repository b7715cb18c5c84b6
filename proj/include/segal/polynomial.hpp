#ifndef SEGAL_POLYNOMIAL_HPP
#define SEGAL_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "segal/linear_map.hpp"
#include "segal/multi_index.hpp"
#include "segal/rational.hpp"

namespace segal {

/// Finitely supported map MultiIndex -> Rational over a fixed variable count.
///
/// Canonical form: zero coefficients are never stored, so two polynomials are
/// equal iff their term maps are equal. Terms iterate in ascending
/// lexicographic exponent order.
class SparsePolynomial {
public:
    explicit SparsePolynomial(int num_vars);  // the zero polynomial

    static SparsePolynomial constant(int num_vars, const Rational& c);
    static SparsePolynomial monomial(const MultiIndex& exponent, const Rational& coeff = Rational(1));
    /// x_j in num_vars variables (j is 0-based).
    static SparsePolynomial variable(int num_vars, int j);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    /// Max |gamma| over the support; -1 for the zero polynomial.
    int total_degree() const;
    std::size_t term_count() const { return terms_.size(); }

    const std::map<MultiIndex, Rational>& terms() const { return terms_; }

    /// Coefficient of x^gamma; exact 0 when absent.
    Rational coefficient(const MultiIndex& gamma) const;
    Rational constant_term() const { return coefficient(MultiIndex(num_vars_)); }

    /// Adds c * x^gamma, keeping the canonical form.
    void add_term(const MultiIndex& gamma, const Rational& c);

    SparsePolynomial operator-() const;
    SparsePolynomial& operator+=(const SparsePolynomial& other);
    SparsePolynomial& operator-=(const SparsePolynomial& other);
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    friend SparsePolynomial operator*(const Rational& c, const SparsePolynomial& p);
    friend SparsePolynomial operator*(const SparsePolynomial& p, const Rational& c) { return c * p; }

    /// d/dx_j, term by term (j is 0-based).
    SparsePolynomial partial_derivative(int j) const;

    Rational eval(const std::vector<Rational>& point) const;

    /// Substitution x_i <- sum_j map(i,j) * y_j; this has map.rows() variables,
    /// the result map.cols().
    SparsePolynomial compose_linear(const LinearMap& map) const;

    /// p^e by repeated multiplication; p^0 = 1.
    SparsePolynomial pow(int e) const;

    /// Re-embeds into new_num_vars variables, variable i becoming offset + i.
    SparsePolynomial shift_vars(int new_num_vars, int offset) const;

    /// Human-readable form, graded-lex descending: "x1^3 - 3*x1".
    std::string to_string() const;

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparsePolynomial& a, const SparsePolynomial& b) { return !(a == b); }

private:
    void check_same_vars(const SparsePolynomial& other, const char* op) const;

    int num_vars_;
    std::map<MultiIndex, Rational> terms_;
};

}  // namespace segal

#endif
