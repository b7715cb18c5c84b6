#ifndef SEGAL_SAMPLING_HPP
#define SEGAL_SAMPLING_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "segal/measures.hpp"
#include "segal/polynomial.hpp"

namespace segal {

/// Seeded sampler for the measure kinds this library knows how to draw from:
/// discrete (inverse CDF over cumulative weights), Gaussian (Box-Muller
/// deviates pushed through a Cholesky factor), and products/pushforwards of
/// those. Streams are deterministic for a fixed seed: uniforms come straight
/// from mt19937_64 bits, never from distribution adapters with unspecified
/// algorithms.
class Sampler {
public:
    Sampler(MeasurePtr measure, std::uint64_t seed);

    int dimension() const;

    /// Draws the next point; advances the stream.
    std::vector<double> sample();

    struct Plan;  // per-kind sampling recipe, built once in the constructor

private:
    std::shared_ptr<const Plan> plan_;
    std::mt19937_64 rng_;

    double uniform01();   // [0, 1)
    double gaussian01();  // standard normal via Box-Muller

    void sample_into(const Plan& plan, std::vector<double>& out, std::size_t offset);
};

struct McEstimate {
    double estimate;
    double standard_error;
};

/// Sample mean and standard error of p over num_samples i.i.d. draws.
/// Accumulation order is fixed, so output is byte-identical for fixed seed.
McEstimate monte_carlo_expectation(const SparsePolynomial& p, Sampler& sampler,
                                   std::size_t num_samples);

}  // namespace segal

#endif
