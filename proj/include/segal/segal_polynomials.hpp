#ifndef SEGAL_SEGAL_POLYNOMIALS_HPP
#define SEGAL_SEGAL_POLYNOMIALS_HPP

#include <map>
#include <mutex>

#include "segal/linear_map.hpp"
#include "segal/measures.hpp"
#include "segal/polynomial.hpp"
#include "segal/report.hpp"

namespace segal {

/// The monic polynomial family p_beta attached to a measure, uniquely fixed by
///   d p_beta / dx_j = beta_j * p_{beta - delta_j}   for every j, and
///   p_0 = 1,  <p_beta> = 0                          for |beta| >= 1.
///
/// Construction goes by total order: the leading coefficient is 1, every other
/// non-constant coefficient descends through the derivative property via the
/// smallest variable present, and the constant term restores centering.
/// Uniqueness makes any descent variable equivalent; tests check that
/// explicitly rather than assuming it.
///
/// Holds a reference to the measure; the family must not outlive it.
class SegalFamily {
public:
    explicit SegalFamily(const MomentProvider& measure) : measure_(measure) {}

    const MomentProvider& measure() const { return measure_; }

    /// p_beta; requires |beta| < measure().order_bound().
    const SparsePolynomial& polynomial(const MultiIndex& beta) const;

private:
    const MomentProvider& measure_;
    mutable std::recursive_mutex mutex_;
    mutable std::map<MultiIndex, SparsePolynomial> cache_;
};

/// One-shot construction of p_beta for the given measure.
SparsePolynomial segal_polynomial(const MomentProvider& mu, const MultiIndex& beta);

/// All p_beta with |beta| <= max_order, sharing the recursion.
std::map<MultiIndex, SparsePolynomial> segal_family(const MomentProvider& mu, int max_order);

/// Checks G^{mu_T}(xi; Tx) = G^mu(T^t xi; x) with both sides truncated at
/// total xi-degree <= order, as an exact polynomial identity in
/// (xi_1..xi_m, x_1..x_n). The x-degree needs no truncation of its own since
/// deg p_beta = |beta|.
IdentityReport verify_generating_identity(const MeasurePtr& mu, const LinearMap& map, int order);

}  // namespace segal

#endif
