#ifndef SEGAL_WICK_HPP
#define SEGAL_WICK_HPP

#include <vector>

#include "segal/linear_map.hpp"
#include "segal/measures.hpp"
#include "segal/polynomial.hpp"
#include "segal/report.hpp"

namespace segal {

/// A vector of random variables Y = rep * X_base, where X_base carries the
/// base measure. The law of Y is automatically the pushforward of the base
/// measure under rep; the identity rep denotes the base vector itself.
///
/// Only linear images are representable. Nonlinear reshuffles (say Y = X^2)
/// have no RandomVector form, which is exactly the hypothesis of the
/// robustness identity enforced at the type level.
class RandomVector {
public:
    RandomVector(MeasurePtr base_measure, LinearMap rep);

    /// The base vector X itself (identity representation).
    static RandomVector base_vector(MeasurePtr measure);

    int base_dim() const { return rep_.cols(); }
    /// Number of components of the vector (rows of rep).
    int dim() const { return rep_.rows(); }

    const MeasurePtr& base_measure() const { return base_; }
    const LinearMap& rep() const { return rep_; }

    /// Law of the vector: the base measure pushed forward through rep.
    MeasurePtr law() const;

    /// T * this, as a new vector over the same base.
    RandomVector transformed(const LinearMap& map) const;

private:
    MeasurePtr base_;
    LinearMap rep_;
};

/// A Wick-ordered random variable, written out as an exact polynomial in the
/// base variables.
struct WickResult {
    SparsePolynomial value;
};

/// :Y^beta: = p^{mu_Y}_beta(Y), expressed in the base variables.
WickResult wick_monomial(const RandomVector& y, const MultiIndex& beta);

/// :q(Y): by linearity over the monomials of q.
WickResult wick_polynomial(const RandomVector& y, const SparsePolynomial& q);

/// Checks :q(X): = :p(Y): for q = p(Tx) and Y = TX -- the robustness of the
/// Wick notation under linear reshuffles of the variables.
IdentityReport verify_robustness(const RandomVector& x, const LinearMap& map,
                                 const SparsePolynomial& p);

/// Checks the multinomial rule :Y^k: = sum_{|beta|=k} (k!/beta!) c^beta :X^beta:
/// for the scalar variable Y = <c, X>.
IdentityReport wick_multinomial_check(const RandomVector& x, const std::vector<Rational>& c, int k);

/// :X^2: minus (Y - E[Y]) for the nonlinear substitution Y = X^2, as an exact
/// polynomial: equals -2<x>*x + 2<x>^2, so it vanishes iff the measure is
/// centered. Nonlinear representations do change the Wick ordering.
SparsePolynomial counterexample_gap(const MomentProvider& mu);

}  // namespace segal

#endif
