#ifndef SEGAL_TRANSFORM_HPP
#define SEGAL_TRANSFORM_HPP

#include <map>
#include <vector>

#include "segal/linear_map.hpp"
#include "segal/measures.hpp"
#include "segal/multi_index.hpp"
#include "segal/report.hpp"

namespace segal {

/// All transition coefficients A_{alpha,beta} for one alpha; the support sits
/// on |beta| = |alpha|.
struct TransitionRow {
    MultiIndex alpha;
    std::map<MultiIndex, Rational> entries;

    Rational at(const MultiIndex& beta) const {
        auto it = entries.find(beta);
        return it == entries.end() ? Rational(0) : it->second;
    }
};

/// A_{alpha,beta} = sum over Gamma with row sums alpha and column sums beta of
/// (alpha!/Gamma!) T^Gamma. Exactly 0 when |alpha| != |beta| (empty sum).
Rational transition_coefficient(const LinearMap& map, const MultiIndex& alpha,
                                const MultiIndex& beta);

/// The whole row at once: one pass over the Gamma with row sums alpha,
/// grouped by column sums. Expanding (Tx)^alpha via polynomial substitution
/// computes the same row through independent code and serves as its oracle.
TransitionRow transition_row(const LinearMap& map, const MultiIndex& alpha);

/// Exact check of the transformation rule
///   p^{mu_T}_alpha(Tx) = sum_{|beta|=|alpha|} A_{alpha,beta} p^mu_beta(x).
IdentityReport verify_transformation(const MeasurePtr& mu, const LinearMap& map,
                                     const MultiIndex& alpha);

/// verify_transformation for every 0 <= |alpha| <= max_order, sharing the
/// pushforward measure and both polynomial families across the sweep.
std::vector<IdentityReport> verify_transformation_sweep(const MeasurePtr& mu,
                                                        const LinearMap& map, int max_order);

/// Exact check of the order recurrence
///   (beta_l + 1) A_{alpha, beta+delta_l} = sum_k alpha_k T_{k,l} A_{alpha-delta_k, beta}
/// for |alpha| = |beta| + 1 and a column index l (0-based).
IdentityReport verify_recurrence(const LinearMap& map, const MultiIndex& alpha,
                                 const MultiIndex& beta, int ell);

/// For a 0/1 map with exactly one 1 per row, returns beta = T^t alpha, the
/// unique column multi-index with a nonzero transition coefficient.
MultiIndex partial_trace_map(const LinearMap& map, const MultiIndex& alpha);

/// True iff every row has exactly one entry equal to 1 and all others 0.
bool is_partial_trace_shape(const LinearMap& map);

}  // namespace segal

#endif
