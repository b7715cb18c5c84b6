#include "segal/measures.hpp"

#include <algorithm>
#include <string>

namespace segal {

MomentProvider::MomentProvider(int dimension, int order_bound) : dim_(dimension), bound_(order_bound) {
    if (dimension < 0) throw std::invalid_argument("MomentProvider: negative dimension");
    if (order_bound < 1) throw std::invalid_argument("MomentProvider: order bound must be >= 1");
}

Rational MomentProvider::moment(const MultiIndex& beta) const {
    if (beta.size() != dim_)
        throw std::invalid_argument("moment: index length " + std::to_string(beta.size()) +
                                    " != measure dimension " + std::to_string(dim_));
    if (beta.order() >= bound_)
        throw InsufficientMomentsError("moment of order " + std::to_string(beta.order()) +
                                       " requested, but only orders < " + std::to_string(bound_) +
                                       " are defined");
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(beta);
        if (it != cache_.end()) return it->second;
    }
    Rational value = compute_moment(beta);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return cache_.emplace(beta, std::move(value)).first->second;
}

Rational expectation(const MomentProvider& mu, const SparsePolynomial& p) {
    if (p.num_vars() != mu.dimension())
        throw std::invalid_argument("expectation: polynomial has " + std::to_string(p.num_vars()) +
                                    " variables, measure dimension is " +
                                    std::to_string(mu.dimension()));
    Rational sum = 0;
    for (const auto& [gamma, c] : p.terms()) sum += c * mu.moment(gamma);
    return sum;
}

// ---------------------------------------------------------------------------
// DiscreteMeasure

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms)
    : MomentProvider(atoms.empty() ? 0 : static_cast<int>(atoms.front().point.size()),
                     kUnboundedOrder),
      atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("DiscreteMeasure: no atoms");
    Rational total = 0;
    for (const auto& atom : atoms_) {
        if (static_cast<int>(atom.point.size()) != dimension())
            throw std::invalid_argument("DiscreteMeasure: atom point length mismatch");
        if (atom.weight <= Rational(0))
            throw std::invalid_argument("DiscreteMeasure: atom weight must be positive");
        total += atom.weight;
    }
    if (total != Rational(1))
        throw std::invalid_argument("DiscreteMeasure: weights sum to " + total.to_string() +
                                    ", expected 1");
}

std::shared_ptr<DiscreteMeasure> DiscreteMeasure::dirac(std::vector<Rational> point) {
    return std::make_shared<DiscreteMeasure>(
        std::vector<Atom>{Atom{std::move(point), Rational(1)}});
}

Rational DiscreteMeasure::compute_moment(const MultiIndex& beta) const {
    Rational sum = 0;
    for (const auto& atom : atoms_) {
        Rational value = atom.weight;
        for (int i = 0; i < beta.size(); ++i)
            if (beta[i] > 0)
                value *= pow(atom.point[static_cast<std::size_t>(i)],
                             static_cast<unsigned int>(beta[i]));
        sum += value;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// GaussianMeasure

namespace {

// Exact determinant by fraction-free-ish Gaussian elimination on rationals.
Rational rational_determinant(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            const Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
        }
    }
    return det;
}

// Sylvester for semidefiniteness needs every principal minor, not just the
// leading ones ([[0,0],[0,-1]] has all leading minors zero). Exponential in n,
// so only applied for small dimensions.
bool all_principal_minors_nonnegative(const std::vector<std::vector<Rational>>& cov) {
    const int n = static_cast<int>(cov.size());
    for (unsigned int mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        std::vector<std::vector<Rational>> sub(idx.size(), std::vector<Rational>(idx.size()));
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c)
                sub[r][c] = cov[static_cast<std::size_t>(idx[r])][static_cast<std::size_t>(idx[c])];
        if (rational_determinant(std::move(sub)) < Rational(0)) return false;
    }
    return true;
}

}  // namespace

GaussianMeasure::GaussianMeasure(std::vector<Rational> mean,
                                 std::vector<std::vector<Rational>> covariance)
    : MomentProvider(static_cast<int>(mean.size()), kUnboundedOrder),
      mean_(std::move(mean)),
      cov_(std::move(covariance)) {
    const std::size_t n = mean_.size();
    if (cov_.size() != n) throw std::invalid_argument("GaussianMeasure: covariance row count mismatch");
    for (const auto& row : cov_)
        if (row.size() != n) throw std::invalid_argument("GaussianMeasure: covariance is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cov_[i][j] != cov_[j][i])
                throw std::invalid_argument("GaussianMeasure: covariance is not symmetric");
    if (n >= 1 && n <= 8 && !all_principal_minors_nonnegative(cov_))
        throw std::invalid_argument("GaussianMeasure: covariance is not positive semidefinite");
}

std::shared_ptr<GaussianMeasure> GaussianMeasure::standard(int dimension) {
    std::vector<Rational> mean(static_cast<std::size_t>(dimension), Rational(0));
    std::vector<std::vector<Rational>> cov(static_cast<std::size_t>(dimension),
                                           std::vector<Rational>(static_cast<std::size_t>(dimension),
                                                                 Rational(0)));
    for (int i = 0; i < dimension; ++i) cov[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return std::make_shared<GaussianMeasure>(std::move(mean), std::move(cov));
}

const Rational& GaussianMeasure::covariance(int i, int j) const {
    return cov_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

bool GaussianMeasure::centered() const {
    return std::all_of(mean_.begin(), mean_.end(), [](const Rational& m) { return m.is_zero(); });
}

Rational GaussianMeasure::central_moment(const MultiIndex& beta) const {
    if (beta.order() == 0) return 1;
    if (beta.order() % 2 == 1) return 0;
    {
        std::lock_guard<std::mutex> lock(central_mutex_);
        auto it = central_cache_.find(beta);
        if (it != central_cache_.end()) return it->second;
    }
    // Pair the first remaining slot with each other slot: if i is the first
    // variable present, E[z^beta] = sum_j mult_j * Sigma_ij * E[z^(beta-d_i-d_j)]
    // where mult_j counts the slots of variable j excluding the fixed one.
    int first = 0;
    while (beta[first] == 0) ++first;
    const MultiIndex rest = beta.minus_unit(first);
    Rational sum = 0;
    for (int j = 0; j < beta.size(); ++j) {
        const int mult = rest[j];
        if (mult == 0) continue;
        const Rational& sigma = covariance(first, j);
        if (sigma.is_zero()) continue;
        sum += Rational(mult) * sigma * central_moment(rest.minus_unit(j));
    }
    std::lock_guard<std::mutex> lock(central_mutex_);
    return central_cache_.emplace(beta, std::move(sum)).first->second;
}

Rational GaussianMeasure::compute_moment(const MultiIndex& beta) const {
    if (centered()) return central_moment(beta);
    // <x^beta> = sum_{gamma <= beta} prod C(beta_i, gamma_i) mean^(beta-gamma) E[z^gamma]
    Rational sum = 0;
    for (const MultiIndex& gamma : indices_below(beta)) {
        Rational term = Rational(binomial_product(beta, gamma));
        for (int i = 0; i < beta.size(); ++i) {
            const int e = beta[i] - gamma[i];
            if (e > 0) term *= pow(mean_[static_cast<std::size_t>(i)], static_cast<unsigned int>(e));
        }
        if (term.is_zero()) continue;
        sum += term * central_moment(gamma);
    }
    return sum;
}

// ---------------------------------------------------------------------------
// ProductMeasure

namespace {

int sum_dimensions(const std::vector<MeasurePtr>& factors) {
    int d = 0;
    for (const auto& f : factors) {
        if (!f) throw std::invalid_argument("ProductMeasure: null factor");
        d += f->dimension();
    }
    return d;
}

int min_bound(const std::vector<MeasurePtr>& factors) {
    int b = kUnboundedOrder;
    for (const auto& f : factors) b = std::min(b, f->order_bound());
    return b;
}

}  // namespace

ProductMeasure::ProductMeasure(std::vector<MeasurePtr> factors)
    : MomentProvider(sum_dimensions(factors), min_bound(factors)), factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("ProductMeasure: no factors");
}

Rational ProductMeasure::compute_moment(const MultiIndex& beta) const {
    Rational product = 1;
    int offset = 0;
    for (const auto& factor : factors_) {
        product *= factor->moment(beta.slice(offset, factor->dimension()));
        if (product.is_zero()) return 0;
        offset += factor->dimension();
    }
    return product;
}

// ---------------------------------------------------------------------------
// PushforwardMeasure

PushforwardMeasure::PushforwardMeasure(MeasurePtr base, LinearMap map)
    : MomentProvider(map.rows(), base ? base->order_bound() : 1),
      base_(std::move(base)),
      map_(std::move(map)) {
    if (!base_) throw std::invalid_argument("PushforwardMeasure: null base");
    if (map_.cols() != base_->dimension())
        throw std::invalid_argument("PushforwardMeasure: map has " + std::to_string(map_.cols()) +
                                    " columns, base dimension is " +
                                    std::to_string(base_->dimension()));
}

Rational PushforwardMeasure::compute_moment(const MultiIndex& alpha) const {
    // <y^alpha>_{mu_T} = <(Tx)^alpha>_mu
    const SparsePolynomial substituted =
        SparsePolynomial::monomial(alpha).compose_linear(map_);
    return expectation(*base_, substituted);
}

// ---------------------------------------------------------------------------
// TruncatedMeasure

TruncatedMeasure::TruncatedMeasure(MeasurePtr base, int order_bound)
    : MomentProvider(base ? base->dimension() : 0,
                     base ? std::min(order_bound, base->order_bound()) : 1),
      base_(std::move(base)) {
    if (!base_) throw std::invalid_argument("TruncatedMeasure: null base");
}

Rational TruncatedMeasure::compute_moment(const MultiIndex& beta) const {
    return base_->moment(beta);
}

}  // namespace segal
