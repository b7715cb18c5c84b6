#ifndef SEGAL_TESTS_FIXTURES_HPP
#define SEGAL_TESTS_FIXTURES_HPP

#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "segal/linear_map.hpp"
#include "segal/measures.hpp"
#include "segal/polynomial.hpp"

namespace segal::testing {

// --- fixture measures -------------------------------------------------------

inline MeasurePtr dirac0(int dim) {
    return DiscreteMeasure::dirac(std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
}

/// Coin flip (1/2) d_0 + (1/2) d_1 on R.
inline MeasurePtr coin() {
    return std::make_shared<DiscreteMeasure>(std::vector<DiscreteMeasure::Atom>{
        {{Rational(0)}, Rational(Integer(1), Integer(2))},
        {{Rational(1)}, Rational(Integer(1), Integer(2))}});
}

/// Asymmetric two-atom measure (1/4) d_{-1} + (3/4) d_2; mean 5/4 != 0.
inline MeasurePtr asymmetric_two_atom() {
    return std::make_shared<DiscreteMeasure>(std::vector<DiscreteMeasure::Atom>{
        {{Rational(-1)}, Rational(Integer(1), Integer(4))},
        {{Rational(2)}, Rational(Integer(3), Integer(4))}});
}

/// Reflection-invariant coin (1/2) d_{-1} + (1/2) d_1.
inline MeasurePtr symmetric_coin() {
    return std::make_shared<DiscreteMeasure>(std::vector<DiscreteMeasure::Atom>{
        {{Rational(-1)}, Rational(Integer(1), Integer(2))},
        {{Rational(1)}, Rational(Integer(1), Integer(2))}});
}

inline MeasurePtr std_gaussian(int dim) { return GaussianMeasure::standard(dim); }

/// Mean (1, -1/2), covariance [[1, 1/2], [1/2, 2]].
inline MeasurePtr shifted_gaussian() {
    const Rational half(Integer(1), Integer(2));
    return std::make_shared<GaussianMeasure>(
        std::vector<Rational>{Rational(1), -half},
        std::vector<std::vector<Rational>>{{Rational(1), half}, {half, Rational(2)}});
}

/// Dirac(0) on R times the standard Gaussian on R.
inline MeasurePtr dirac_times_gaussian() {
    return std::make_shared<ProductMeasure>(std::vector<MeasurePtr>{dirac0(1), std_gaussian(1)});
}

struct NamedMeasure {
    std::string name;
    MeasurePtr measure;
};

/// The standing fixture set used by the identity sweeps.
inline std::vector<NamedMeasure> fixture_measures() {
    return {
        {"dirac0(R^2)", dirac0(2)},
        {"coin", coin()},
        {"two-atom", asymmetric_two_atom()},
        {"symmetric coin", symmetric_coin()},
        {"gaussian(R)", std_gaussian(1)},
        {"gaussian(R^2)", std_gaussian(2)},
        {"gaussian(R^3)", std_gaussian(3)},
        {"shifted gaussian", shifted_gaussian()},
        {"dirac x gaussian", dirac_times_gaussian()},
    };
}

/// Wraps a provider with one overridden moment; everything else passes
/// through. Used to show which moment orders a construction reads.
class PerturbedMeasure final : public MomentProvider {
public:
    PerturbedMeasure(MeasurePtr base, MultiIndex where, Rational value)
        : MomentProvider(base->dimension(), base->order_bound()),
          base_(std::move(base)),
          where_(std::move(where)),
          value_(std::move(value)) {}

protected:
    Rational compute_moment(const MultiIndex& beta) const override {
        return beta == where_ ? value_ : base_->moment(beta);
    }

private:
    MeasurePtr base_;
    MultiIndex where_;
    Rational value_;
};

// --- randomized inputs -------------------------------------------------------

inline Rational random_rational(std::mt19937_64& rng, int max_abs_num = 3, int max_den = 3) {
    const int num = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * max_abs_num + 1)) -
                    max_abs_num;
    const int den = static_cast<int>(rng() % static_cast<std::uint64_t>(max_den)) + 1;
    return Rational(Integer(num), Integer(den));
}

inline LinearMap random_map(std::mt19937_64& rng, int rows, int cols) {
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int k = 0; k < rows * cols; ++k) entries.push_back(random_rational(rng));
    return LinearMap(rows, cols, std::move(entries));
}

/// Random 0/1 matrix with exactly one 1 per row.
inline LinearMap random_partial_trace_map(std::mt19937_64& rng, int rows, int cols) {
    std::vector<Rational> entries(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                                  Rational(0));
    for (int i = 0; i < rows; ++i) {
        const std::size_t j = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(cols));
        entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + j] = 1;
    }
    return LinearMap(rows, cols, std::move(entries));
}

inline MultiIndex random_index(std::mt19937_64& rng, int size, int order) {
    std::vector<int> e(static_cast<std::size_t>(size), 0);
    for (int k = 0; k < order; ++k) ++e[rng() % static_cast<std::uint64_t>(size)];
    return MultiIndex(std::move(e));
}

inline SparsePolynomial random_polynomial(std::mt19937_64& rng, int num_vars, int max_degree,
                                          int num_terms) {
    SparsePolynomial p(num_vars);
    for (int t = 0; t < num_terms; ++t) {
        const int order = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
        p.add_term(random_index(rng, num_vars, order), random_rational(rng));
    }
    return p;
}

}  // namespace segal::testing

#endif
