#include "segal/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace segal {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Cholesky factorization with semidefinite handling: a vanishing pivot zeroes
// its column (degenerate directions sample as exact linear images).
std::vector<std::vector<double>> cholesky(const std::vector<std::vector<double>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = a[i][j];
            for (std::size_t k = 0; k < j; ++k) sum -= l[i][k] * l[j][k];
            if (i == j) {
                if (sum < -1e-12)
                    throw std::invalid_argument("Sampler: covariance is not positive semidefinite");
                l[i][j] = sum > 0.0 ? std::sqrt(sum) : 0.0;
            } else {
                l[i][j] = l[j][j] == 0.0 ? 0.0 : sum / l[j][j];
            }
        }
    }
    return l;
}

}  // namespace

struct Sampler::Plan {
    enum class Kind { Discrete, Gaussian, Product, Pushforward } kind;
    int dimension = 0;

    // Discrete
    std::vector<double> cumulative;                 // cumulative weights, last == 1
    std::vector<std::vector<double>> atom_points;

    // Gaussian
    std::vector<double> mean;
    std::vector<std::vector<double>> chol;

    // Product
    std::vector<std::shared_ptr<const Plan>> factors;

    // Pushforward
    std::shared_ptr<const Plan> base;
    std::vector<std::vector<double>> matrix;  // rows x base-dim
};

namespace {

std::shared_ptr<const Sampler::Plan> make_plan(const MomentProvider& measure);

std::shared_ptr<const Sampler::Plan> plan_discrete(const DiscreteMeasure& m) {
    auto plan = std::make_shared<Sampler::Plan>();
    plan->kind = Sampler::Plan::Kind::Discrete;
    plan->dimension = m.dimension();
    double acc = 0.0;
    for (const auto& atom : m.atoms()) {
        acc += atom.weight.to_double();
        plan->cumulative.push_back(acc);
        std::vector<double> pt;
        pt.reserve(atom.point.size());
        for (const auto& c : atom.point) pt.push_back(c.to_double());
        plan->atom_points.push_back(std::move(pt));
    }
    plan->cumulative.back() = 1.0;  // guard against rounding in the running sum
    return plan;
}

std::shared_ptr<const Sampler::Plan> plan_gaussian(const GaussianMeasure& m) {
    auto plan = std::make_shared<Sampler::Plan>();
    plan->kind = Sampler::Plan::Kind::Gaussian;
    plan->dimension = m.dimension();
    const std::size_t n = static_cast<std::size_t>(m.dimension());
    std::vector<std::vector<double>> cov(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        plan->mean.push_back(m.mean()[i].to_double());
        for (std::size_t j = 0; j < n; ++j)
            cov[i][j] = m.covariance(static_cast<int>(i), static_cast<int>(j)).to_double();
    }
    plan->chol = cholesky(cov);
    return plan;
}

std::shared_ptr<const Sampler::Plan> make_plan(const MomentProvider& measure) {
    if (const auto* d = dynamic_cast<const DiscreteMeasure*>(&measure)) return plan_discrete(*d);
    if (const auto* g = dynamic_cast<const GaussianMeasure*>(&measure)) return plan_gaussian(*g);
    if (const auto* p = dynamic_cast<const ProductMeasure*>(&measure)) {
        auto plan = std::make_shared<Sampler::Plan>();
        plan->kind = Sampler::Plan::Kind::Product;
        plan->dimension = p->dimension();
        for (const auto& factor : p->factors()) plan->factors.push_back(make_plan(*factor));
        return plan;
    }
    if (const auto* f = dynamic_cast<const PushforwardMeasure*>(&measure)) {
        auto plan = std::make_shared<Sampler::Plan>();
        plan->kind = Sampler::Plan::Kind::Pushforward;
        plan->dimension = f->dimension();
        plan->base = make_plan(f->base());
        plan->matrix.assign(static_cast<std::size_t>(f->map().rows()),
                            std::vector<double>(static_cast<std::size_t>(f->map().cols()), 0.0));
        for (int i = 0; i < f->map().rows(); ++i)
            for (int j = 0; j < f->map().cols(); ++j)
                plan->matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    f->map()(i, j).to_double();
        return plan;
    }
    throw std::invalid_argument("Sampler: unsupported measure kind (need discrete, gaussian, "
                                "product, or pushforward)");
}

}  // namespace

Sampler::Sampler(MeasurePtr measure, std::uint64_t seed) : rng_(seed) {
    if (!measure) throw std::invalid_argument("Sampler: null measure");
    plan_ = make_plan(*measure);
}

int Sampler::dimension() const { return plan_->dimension; }

double Sampler::uniform01() {
    // Top 53 bits of the engine output; exact dyadic rational in [0, 1).
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double Sampler::gaussian01() {
    // Box-Muller; u1 shifted into (0, 1] so the log is finite.
    const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

void Sampler::sample_into(const Plan& plan, std::vector<double>& out, std::size_t offset) {
    switch (plan.kind) {
        case Plan::Kind::Discrete: {
            const double u = uniform01();
            const std::size_t idx = static_cast<std::size_t>(
                std::upper_bound(plan.cumulative.begin(), plan.cumulative.end(), u) -
                plan.cumulative.begin());
            const auto& pt = plan.atom_points[std::min(idx, plan.atom_points.size() - 1)];
            std::copy(pt.begin(), pt.end(), out.begin() + static_cast<std::ptrdiff_t>(offset));
            return;
        }
        case Plan::Kind::Gaussian: {
            const std::size_t n = static_cast<std::size_t>(plan.dimension);
            std::vector<double> z(n);
            for (std::size_t i = 0; i < n; ++i) z[i] = gaussian01();
            for (std::size_t i = 0; i < n; ++i) {
                double v = plan.mean[i];
                for (std::size_t k = 0; k <= i; ++k) v += plan.chol[i][k] * z[k];
                out[offset + i] = v;
            }
            return;
        }
        case Plan::Kind::Product: {
            std::size_t pos = offset;
            for (const auto& factor : plan.factors) {
                sample_into(*factor, out, pos);
                pos += static_cast<std::size_t>(factor->dimension);
            }
            return;
        }
        case Plan::Kind::Pushforward: {
            std::vector<double> base(static_cast<std::size_t>(plan.base->dimension));
            sample_into(*plan.base, base, 0);
            for (std::size_t i = 0; i < plan.matrix.size(); ++i) {
                double v = 0.0;
                for (std::size_t j = 0; j < base.size(); ++j) v += plan.matrix[i][j] * base[j];
                out[offset + i] = v;
            }
            return;
        }
    }
}

std::vector<double> Sampler::sample() {
    std::vector<double> out(static_cast<std::size_t>(plan_->dimension), 0.0);
    sample_into(*plan_, out, 0);
    return out;
}

McEstimate monte_carlo_expectation(const SparsePolynomial& p, Sampler& sampler,
                                   std::size_t num_samples) {
    if (num_samples == 0) throw std::invalid_argument("monte_carlo_expectation: zero samples");
    if (p.num_vars() != sampler.dimension())
        throw std::invalid_argument("monte_carlo_expectation: polynomial has " +
                                    std::to_string(p.num_vars()) +
                                    " variables, sampler dimension is " +
                                    std::to_string(sampler.dimension()));

    // Terms flattened to doubles once, outside the hot loop.
    struct Term {
        double coeff;
        std::vector<int> exp;
    };
    std::vector<Term> terms;
    terms.reserve(p.term_count());
    for (const auto& [gamma, c] : p.terms()) terms.push_back({c.to_double(), gamma.exponents()});

    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t s = 0; s < num_samples; ++s) {
        const std::vector<double> x = sampler.sample();
        double value = 0.0;
        for (const Term& t : terms) {
            double term = t.coeff;
            for (std::size_t i = 0; i < t.exp.size(); ++i)
                for (int e = 0; e < t.exp[i]; ++e) term *= x[i];
            value += term;
        }
        sum += value;
        sum_sq += value * value;
    }

    const double n = static_cast<double>(num_samples);
    const double mean = sum / n;
    double stderr_value = 0.0;
    if (num_samples > 1) {
        const double variance = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
        stderr_value = std::sqrt(variance / n);
    }
    return {mean, stderr_value};
}

}  // namespace segal
