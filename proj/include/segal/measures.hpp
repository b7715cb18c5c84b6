#ifndef SEGAL_MEASURES_HPP
#define SEGAL_MEASURES_HPP

#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "segal/linear_map.hpp"
#include "segal/multi_index.hpp"
#include "segal/polynomial.hpp"
#include "segal/rational.hpp"

namespace segal {

/// Thrown when a moment of order >= the provider's bound is requested.
/// Out-of-range orders are a hard error, never a silent zero.
class InsufficientMomentsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Order bound for measures admitting moments of every order.
inline constexpr int kUnboundedOrder = std::numeric_limits<int>::max();

/// Source of exact moments <x^beta> of a probability measure on R^n,
/// defined for |beta| < order_bound(). Providers are immutable; the
/// memoization cache is concurrency-safe and idempotent.
class MomentProvider {
public:
    virtual ~MomentProvider() = default;
    MomentProvider(const MomentProvider&) = delete;
    MomentProvider& operator=(const MomentProvider&) = delete;

    int dimension() const { return dim_; }
    int order_bound() const { return bound_; }

    Rational moment(const MultiIndex& beta) const;

protected:
    MomentProvider(int dimension, int order_bound);

    virtual Rational compute_moment(const MultiIndex& beta) const = 0;

private:
    int dim_;
    int bound_;
    mutable std::mutex cache_mutex_;
    mutable std::map<MultiIndex, Rational> cache_;
};

using MeasurePtr = std::shared_ptr<const MomentProvider>;

/// <p>_mu, term by term. Requires deg p < mu.order_bound().
Rational expectation(const MomentProvider& mu, const SparsePolynomial& p);

/// Finitely many atoms with positive rational weights summing to one.
class DiscreteMeasure final : public MomentProvider {
public:
    struct Atom {
        std::vector<Rational> point;
        Rational weight;
    };

    explicit DiscreteMeasure(std::vector<Atom> atoms);

    /// Point mass at the given point.
    static std::shared_ptr<DiscreteMeasure> dirac(std::vector<Rational> point);

    const std::vector<Atom>& atoms() const { return atoms_; }

protected:
    Rational compute_moment(const MultiIndex& beta) const override;

private:
    std::vector<Atom> atoms_;
};

/// Gaussian with rational mean and symmetric positive semidefinite rational
/// covariance. Moments by the pair-partition formula on central moments,
/// extended to nonzero mean by a binomial shift.
class GaussianMeasure final : public MomentProvider {
public:
    GaussianMeasure(std::vector<Rational> mean, std::vector<std::vector<Rational>> covariance);

    static std::shared_ptr<GaussianMeasure> standard(int dimension);

    const std::vector<Rational>& mean() const { return mean_; }
    const Rational& covariance(int i, int j) const;
    bool centered() const;

protected:
    Rational compute_moment(const MultiIndex& beta) const override;

private:
    Rational central_moment(const MultiIndex& beta) const;

    std::vector<Rational> mean_;
    std::vector<std::vector<Rational>> cov_;
    mutable std::mutex central_mutex_;
    mutable std::map<MultiIndex, Rational> central_cache_;
};

/// mu_1 x ... x mu_k on the concatenated variables; moments factorize.
class ProductMeasure final : public MomentProvider {
public:
    explicit ProductMeasure(std::vector<MeasurePtr> factors);

    const std::vector<MeasurePtr>& factors() const { return factors_; }

protected:
    Rational compute_moment(const MultiIndex& beta) const override;

private:
    std::vector<MeasurePtr> factors_;
};

/// Image measure mu_T of the base under a linear map T: moments are base
/// expectations of the substituted monomials.
class PushforwardMeasure final : public MomentProvider {
public:
    PushforwardMeasure(MeasurePtr base, LinearMap map);

    const MomentProvider& base() const { return *base_; }
    const LinearMap& map() const { return map_; }

protected:
    Rational compute_moment(const MultiIndex& alpha) const override;

private:
    MeasurePtr base_;
    LinearMap map_;
};

/// Same moments as the base but with a smaller declared order bound; used to
/// exercise the insufficient-moments contract.
class TruncatedMeasure final : public MomentProvider {
public:
    TruncatedMeasure(MeasurePtr base, int order_bound);

protected:
    Rational compute_moment(const MultiIndex& beta) const override;

private:
    MeasurePtr base_;
};

}  // namespace segal

#endif
