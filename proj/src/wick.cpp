#include "segal/wick.hpp"

#include <string>

#include "segal/segal_polynomials.hpp"
#include "segal/transform.hpp"

namespace segal {

RandomVector::RandomVector(MeasurePtr base_measure, LinearMap rep)
    : base_(std::move(base_measure)), rep_(std::move(rep)) {
    if (!base_) throw std::invalid_argument("RandomVector: null base measure");
    if (rep_.cols() != base_->dimension())
        throw std::invalid_argument("RandomVector: rep has " + std::to_string(rep_.cols()) +
                                    " columns, base dimension is " +
                                    std::to_string(base_->dimension()));
}

RandomVector RandomVector::base_vector(MeasurePtr measure) {
    if (!measure) throw std::invalid_argument("RandomVector: null base measure");
    const int n = measure->dimension();
    return RandomVector(std::move(measure), LinearMap::identity(n));
}

MeasurePtr RandomVector::law() const {
    if (rep_.is_identity()) return base_;
    return std::make_shared<PushforwardMeasure>(base_, rep_);
}

RandomVector RandomVector::transformed(const LinearMap& map) const {
    if (map.cols() != dim())
        throw std::invalid_argument("RandomVector::transformed: map has " +
                                    std::to_string(map.cols()) + " columns, vector has " +
                                    std::to_string(dim()) + " components");
    return RandomVector(base_, map * rep_);
}

WickResult wick_monomial(const RandomVector& y, const MultiIndex& beta) {
    if (beta.size() != y.dim())
        throw std::invalid_argument("wick_monomial: index length " + std::to_string(beta.size()) +
                                    " != vector dimension " + std::to_string(y.dim()));
    const MeasurePtr law = y.law();
    return {segal_polynomial(*law, beta).compose_linear(y.rep())};
}

WickResult wick_polynomial(const RandomVector& y, const SparsePolynomial& q) {
    if (q.num_vars() != y.dim())
        throw std::invalid_argument("wick_polynomial: polynomial has " +
                                    std::to_string(q.num_vars()) + " variables, vector has " +
                                    std::to_string(y.dim()) + " components");
    const MeasurePtr law = y.law();
    SegalFamily family(*law);
    SparsePolynomial out(y.base_dim());
    for (const auto& [alpha, c] : q.terms())
        out += c * family.polynomial(alpha).compose_linear(y.rep());
    return {out};
}

IdentityReport verify_robustness(const RandomVector& x, const LinearMap& map,
                                 const SparsePolynomial& p) {
    if (p.num_vars() != map.rows())
        throw std::invalid_argument("verify_robustness: polynomial has " +
                                    std::to_string(p.num_vars()) + " variables, map has " +
                                    std::to_string(map.rows()) + " rows");
    const SparsePolynomial q = p.compose_linear(map);  // q(x) = p(Tx)
    const RandomVector y = x.transformed(map);
    const SparsePolynomial lhs = wick_polynomial(x, q).value;
    const SparsePolynomial rhs = wick_polynomial(y, p).value;
    return compare_polynomials("Wick robustness, map " + map.to_string() + ", p = " +
                                   p.to_string(),
                               lhs, rhs);
}

IdentityReport wick_multinomial_check(const RandomVector& x, const std::vector<Rational>& c,
                                      int k) {
    if (static_cast<int>(c.size()) != x.dim())
        throw std::invalid_argument("wick_multinomial_check: weight vector length " +
                                    std::to_string(c.size()) + " != vector dimension " +
                                    std::to_string(x.dim()));
    if (k < 0) throw std::invalid_argument("wick_multinomial_check: negative order");

    const LinearMap row = LinearMap::row_vector(c);
    const RandomVector y = x.transformed(row);
    const SparsePolynomial lhs = wick_monomial(y, MultiIndex{k}).value;

    const Integer k_factorial = factorial(static_cast<unsigned int>(k));
    SparsePolynomial rhs(x.base_dim());
    for (const MultiIndex& beta : indices_of_order(x.dim(), k)) {
        Rational weight(k_factorial, beta.factorial());
        for (int j = 0; j < beta.size(); ++j)
            if (beta[j] > 0)
                weight *= pow(c[static_cast<std::size_t>(j)], static_cast<unsigned int>(beta[j]));
        if (weight.is_zero()) continue;
        rhs += weight * wick_monomial(x, beta).value;
    }
    return compare_polynomials("Wick multinomial rule, k = " + std::to_string(k) + ", c = " +
                                   row.to_string(),
                               lhs, rhs);
}

SparsePolynomial counterexample_gap(const MomentProvider& mu) {
    if (mu.dimension() != 1)
        throw std::invalid_argument("counterexample_gap: measure must be one-dimensional");
    // :X^2: for the honest representation ...
    const SparsePolynomial wick_x2 = segal_polynomial(mu, MultiIndex{2});
    // ... versus :Y^1: = Y - E[Y] for the nonlinear substitution Y = X^2,
    // read back as a polynomial in x.
    SparsePolynomial wick_y1 = SparsePolynomial::monomial(MultiIndex{2});
    wick_y1.add_term(MultiIndex{0}, -mu.moment(MultiIndex{2}));
    return wick_x2 - wick_y1;
}

}  // namespace segal
