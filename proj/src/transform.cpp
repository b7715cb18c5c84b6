#include "segal/transform.hpp"

#include <string>

#include "segal/nat_matrix.hpp"
#include "segal/segal_polynomials.hpp"

namespace segal {

Rational transition_coefficient(const LinearMap& map, const MultiIndex& alpha,
                                const MultiIndex& beta) {
    if (alpha.size() != map.rows() || beta.size() != map.cols())
        throw std::invalid_argument("transition_coefficient: alpha is length " +
                                    std::to_string(alpha.size()) + ", beta length " +
                                    std::to_string(beta.size()) + ", map is " +
                                    std::to_string(map.rows()) + "x" + std::to_string(map.cols()));
    const Rational alpha_factorial = Rational(alpha.factorial());
    Rational sum = 0;
    for (const NatMatrix& gamma : enumerate_row_col_matrices(alpha, beta))
        sum += alpha_factorial / Rational(gamma.factorial()) * map.power(gamma);
    return sum;
}

namespace {

// Walks every Gamma with row sums alpha, row by row, accumulating the weight
// (alpha!/Gamma!) T^Gamma into the bucket of its column-sum multi-index.
// Entries under zero map coefficients are pruned: they force T^Gamma = 0.
void accumulate_row(const LinearMap& map, const MultiIndex& alpha, int row, int col, int row_left,
                    std::vector<int>& col_sums, const Rational& weight, TransitionRow& out) {
    const int m = map.rows();
    const int n = map.cols();
    if (col == n) {
        if (row_left != 0) return;
        if (row + 1 == m) {
            if (!weight.is_zero()) {
                auto [it, inserted] = out.entries.emplace(MultiIndex(col_sums), weight);
                if (!inserted) {
                    it->second += weight;
                    if (it->second.is_zero()) out.entries.erase(it);
                }
            }
            return;
        }
        accumulate_row(map, alpha, row + 1, 0, alpha[row + 1], col_sums, weight, out);
        return;
    }
    const bool zero_entry = map(row, col).is_zero();
    const int hi = (col + 1 == n) ? row_left : (zero_entry ? 0 : row_left);
    const int lo = (col + 1 == n) ? row_left : 0;
    for (int v = lo; v <= hi; ++v) {
        if (zero_entry && v > 0) break;
        Rational next = weight;
        if (v > 0)
            next *= pow(map(row, col), static_cast<unsigned int>(v)) /
                    Rational(factorial(static_cast<unsigned int>(v)));
        col_sums[static_cast<std::size_t>(col)] += v;
        accumulate_row(map, alpha, row, col + 1, row_left - v, col_sums, next, out);
        col_sums[static_cast<std::size_t>(col)] -= v;
    }
}

}  // namespace

TransitionRow transition_row(const LinearMap& map, const MultiIndex& alpha) {
    if (alpha.size() != map.rows())
        throw std::invalid_argument("transition_row: alpha is length " +
                                    std::to_string(alpha.size()) + ", map has " +
                                    std::to_string(map.rows()) + " rows");
    TransitionRow row{alpha, {}};
    if (map.rows() == 0) {
        // No rows: the empty Gamma contributes weight 1 to beta = 0 if it fits.
        if (MultiIndex(map.cols()).order() == alpha.order())
            row.entries.emplace(MultiIndex(map.cols()), Rational(1));
        return row;
    }
    std::vector<int> col_sums(static_cast<std::size_t>(map.cols()), 0);
    accumulate_row(map, alpha, 0, 0, alpha[0], col_sums,
                   Rational(alpha.factorial()), row);
    return row;
}

namespace {

std::vector<IdentityReport> run_transformation_checks(const MeasurePtr& mu, const LinearMap& map,
                                                      const std::vector<MultiIndex>& alphas) {
    if (!mu) throw std::invalid_argument("verify_transformation: null measure");
    if (map.cols() != mu->dimension())
        throw std::invalid_argument("verify_transformation: map has " + std::to_string(map.cols()) +
                                    " columns, measure dimension is " +
                                    std::to_string(mu->dimension()));
    const auto pushed = std::make_shared<PushforwardMeasure>(mu, map);
    SegalFamily pushed_family(*pushed);
    SegalFamily base_family(*mu);

    std::vector<IdentityReport> reports;
    reports.reserve(alphas.size());
    for (const MultiIndex& alpha : alphas) {
        const SparsePolynomial lhs = pushed_family.polynomial(alpha).compose_linear(map);
        SparsePolynomial rhs(map.cols());
        for (const auto& [beta, a] : transition_row(map, alpha).entries)
            rhs += a * base_family.polynomial(beta);
        reports.push_back(compare_polynomials("transformation rule, alpha = " + alpha.to_string() +
                                                  ", map " + map.to_string(),
                                              lhs, rhs));
    }
    return reports;
}

}  // namespace

IdentityReport verify_transformation(const MeasurePtr& mu, const LinearMap& map,
                                     const MultiIndex& alpha) {
    return run_transformation_checks(mu, map, {alpha}).front();
}

std::vector<IdentityReport> verify_transformation_sweep(const MeasurePtr& mu, const LinearMap& map,
                                                        int max_order) {
    return run_transformation_checks(mu, map, indices_up_to_order(map.rows(), max_order));
}

IdentityReport verify_recurrence(const LinearMap& map, const MultiIndex& alpha,
                                 const MultiIndex& beta, int ell) {
    if (alpha.size() != map.rows() || beta.size() != map.cols())
        throw std::invalid_argument("verify_recurrence: index lengths do not match the map");
    if (ell < 0 || ell >= map.cols())
        throw std::invalid_argument("verify_recurrence: column index out of range");
    if (alpha.order() != beta.order() + 1)
        throw std::invalid_argument("verify_recurrence: need |alpha| = |beta| + 1, got |alpha| = " +
                                    std::to_string(alpha.order()) + ", |beta| = " +
                                    std::to_string(beta.order()));

    const Rational lhs =
        Rational(beta[ell] + 1) * transition_coefficient(map, alpha, beta.plus_unit(ell));
    Rational rhs = 0;
    for (int k = 0; k < map.rows(); ++k) {
        if (alpha[k] == 0) continue;  // only rows present in alpha contribute
        rhs += Rational(alpha[k]) * map(k, ell) *
               transition_coefficient(map, alpha.minus_unit(k), beta);
    }
    return compare_values("order recurrence, alpha = " + alpha.to_string() + ", beta = " +
                              beta.to_string() + ", column " + std::to_string(ell),
                          lhs, rhs);
}

bool is_partial_trace_shape(const LinearMap& map) {
    for (int i = 0; i < map.rows(); ++i) {
        int ones = 0;
        for (int j = 0; j < map.cols(); ++j) {
            const Rational& e = map(i, j);
            if (e == Rational(1)) {
                ++ones;
            } else if (!e.is_zero()) {
                return false;
            }
        }
        if (ones != 1) return false;
    }
    return true;
}

MultiIndex partial_trace_map(const LinearMap& map, const MultiIndex& alpha) {
    if (alpha.size() != map.rows())
        throw std::invalid_argument("partial_trace_map: alpha is length " +
                                    std::to_string(alpha.size()) + ", map has " +
                                    std::to_string(map.rows()) + " rows");
    if (!is_partial_trace_shape(map))
        throw std::invalid_argument(
            "partial_trace_map: map must be 0/1 with exactly one 1 per row");
    std::vector<int> beta(static_cast<std::size_t>(map.cols()), 0);
    for (int i = 0; i < map.rows(); ++i)
        for (int j = 0; j < map.cols(); ++j)
            if (map(i, j) == Rational(1)) beta[static_cast<std::size_t>(j)] += alpha[i];
    return MultiIndex(std::move(beta));
}

}  // namespace segal
