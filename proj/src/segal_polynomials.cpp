#include "segal/segal_polynomials.hpp"

#include <string>

namespace segal {

const SparsePolynomial& SegalFamily::polynomial(const MultiIndex& beta) const {
    if (beta.size() != measure_.dimension())
        throw std::invalid_argument("SegalFamily: index length " + std::to_string(beta.size()) +
                                    " != measure dimension " +
                                    std::to_string(measure_.dimension()));
    if (beta.order() >= measure_.order_bound())
        throw InsufficientMomentsError("Segal polynomial of order " + std::to_string(beta.order()) +
                                       " needs moments up to that order, but the measure only "
                                       "provides orders < " +
                                       std::to_string(measure_.order_bound()));

    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto it = cache_.find(beta);
    if (it != cache_.end()) return it->second;

    const int n = beta.size();
    SparsePolynomial p(n);
    if (beta.order() == 0) {
        p.add_term(beta, 1);
        return cache_.emplace(beta, std::move(p)).first->second;
    }

    // Leading term x^beta with coefficient 1; makes the family monic.
    p.add_term(beta, 1);

    // Every other non-constant coefficient follows from
    //   gamma_j * c_gamma(beta) = beta_j * c_{gamma - delta_j}(beta - delta_j),
    // descending through the smallest variable present in gamma. Candidates
    // outside {gamma <= beta} vanish, so it suffices to walk the sub-indices.
    for (const MultiIndex& gamma : indices_below(beta)) {
        if (gamma.is_zero() || gamma == beta) continue;
        int j = 0;
        while (gamma[j] == 0) ++j;
        const SparsePolynomial& lower = polynomial(beta.minus_unit(j));
        const Rational c =
            Rational(beta[j]) * lower.coefficient(gamma.minus_unit(j)) / Rational(gamma[j]);
        p.add_term(gamma, c);
    }

    // Constant term: center the polynomial, <p_beta> = 0.
    p.add_term(MultiIndex(n), -expectation(measure_, p));

    return cache_.emplace(beta, std::move(p)).first->second;
}

SparsePolynomial segal_polynomial(const MomentProvider& mu, const MultiIndex& beta) {
    return SegalFamily(mu).polynomial(beta);
}

std::map<MultiIndex, SparsePolynomial> segal_family(const MomentProvider& mu, int max_order) {
    if (max_order >= mu.order_bound())
        throw InsufficientMomentsError("segal_family: max order " + std::to_string(max_order) +
                                       " not below the measure's moment bound " +
                                       std::to_string(mu.order_bound()));
    SegalFamily family(mu);
    std::map<MultiIndex, SparsePolynomial> out;
    for (const MultiIndex& beta : indices_up_to_order(mu.dimension(), max_order))
        out.emplace(beta, family.polynomial(beta));
    return out;
}

IdentityReport verify_generating_identity(const MeasurePtr& mu, const LinearMap& map, int order) {
    if (!mu) throw std::invalid_argument("verify_generating_identity: null measure");
    if (map.cols() != mu->dimension())
        throw std::invalid_argument("verify_generating_identity: map has " +
                                    std::to_string(map.cols()) + " columns, measure dimension is " +
                                    std::to_string(mu->dimension()));
    if (order >= mu->order_bound())
        throw InsufficientMomentsError("verify_generating_identity: order " +
                                       std::to_string(order) + " not below moment bound");

    const int m = map.rows();
    const int n = map.cols();
    const int vars = m + n;  // (xi_1..xi_m, x_1..x_n)

    const auto pushed = std::make_shared<PushforwardMeasure>(mu, map);
    SegalFamily pushed_family(*pushed);
    SegalFamily base_family(*mu);

    // LHS: sum_{|alpha| <= order} p^{mu_T}_alpha(Tx) xi^alpha / alpha!
    SparsePolynomial lhs(vars);
    for (int k = 0; k <= order; ++k) {
        for (const MultiIndex& alpha : indices_of_order(m, k)) {
            const SparsePolynomial in_x =
                pushed_family.polynomial(alpha).compose_linear(map).shift_vars(vars, m);
            const MultiIndex xi_exp = alpha.concat(MultiIndex(n));
            lhs += SparsePolynomial::monomial(xi_exp, Rational(Integer(1), alpha.factorial())) * in_x;
        }
    }

    // RHS: sum_{|beta| <= order} p^mu_beta(x) (T^t xi)^beta / beta!
    const LinearMap transpose = map.transpose();
    std::vector<SparsePolynomial> xi_forms;  // (T^t xi)_j as polynomials in (xi, x)
    for (int j = 0; j < n; ++j) {
        SparsePolynomial form(vars);
        for (int i = 0; i < m; ++i)
            form.add_term(MultiIndex(vars).plus_unit(i), transpose(j, i));
        xi_forms.push_back(std::move(form));
    }
    SparsePolynomial rhs(vars);
    for (int k = 0; k <= order; ++k) {
        for (const MultiIndex& beta : indices_of_order(n, k)) {
            SparsePolynomial term =
                base_family.polynomial(beta).shift_vars(vars, m) *
                SparsePolynomial::constant(vars, Rational(Integer(1), beta.factorial()));
            for (int j = 0; j < n; ++j)
                if (beta[j] > 0) term = term * xi_forms[static_cast<std::size_t>(j)].pow(beta[j]);
            rhs += term;
        }
    }

    return compare_polynomials("generating-function identity, map " + map.to_string() +
                                   ", xi-order <= " + std::to_string(order),
                               lhs, rhs);
}

}  // namespace segal
