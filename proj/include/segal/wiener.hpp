#ifndef SEGAL_WIENER_HPP
#define SEGAL_WIENER_HPP

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "segal/measures.hpp"
#include "segal/report.hpp"

namespace segal {

/// Continuous function with compact support in (0, b], evaluable exactly at
/// rational points. Exact evaluation keeps the grid Wick identity rational;
/// the Riemann-sum layer converts to double at the edge.
class SampledFunction {
public:
    /// Indicator of (0, b].
    static SampledFunction one(const Rational& b);
    /// Piecewise-linear peak 1 at b/2, vanishing at 0 and b.
    static SampledFunction tent(const Rational& b);
    /// Quadratic bump 4x(b-x)/b^2, peak 1 at b/2.
    static SampledFunction hat(const Rational& b);
    /// Piecewise-linear interpolation through (x, y) nodes, zero outside the
    /// node range; nodes must be strictly increasing in x within (0, b].
    static SampledFunction piecewise_linear(std::vector<std::pair<Rational, Rational>> nodes,
                                            const Rational& b);

    Rational operator()(const Rational& x) const { return eval_(x); }
    const Rational& support_bound() const { return b_; }

private:
    SampledFunction(std::function<Rational(const Rational&)> eval, Rational b)
        : eval_(std::move(eval)), b_(std::move(b)) {}

    std::function<Rational(const Rational&)> eval_;
    Rational b_;
};

/// Equispaced grid i*b/l, i = 1..l, with the Brownian covariance
/// min(i*b/l, j*b/l) kept rational.
class WienerGrid {
public:
    WienerGrid(Rational b, int ell);

    const Rational& b() const { return b_; }
    int ell() const { return ell_; }

    /// Grid point (i+1)*b/l for 0-based i.
    Rational point(int i) const;
    Rational covariance(int i, int j) const;

    /// The centered Gaussian law of (B(s_1), ..., B(s_l)) on the grid.
    std::shared_ptr<const GaussianMeasure> gaussian() const;

private:
    Rational b_;
    int ell_;
};

/// Riemann weights (b/l) f(i b/l) of the approximant to integral f*B: the
/// discretized field is the linear functional with these coefficients on the
/// grid variables.
std::vector<double> discretized_field(const WienerGrid& grid, const SampledFunction& f);

struct RiemannCovarianceReport {
    double riemann_cov;  // double Riemann sum on the grid
    double limit_cov;    // reference at resolution ell_ref
    double gap;          // |riemann_cov - limit_cov|
    int ell;
    int ell_ref;
};

/// Scalar content of the second-order Wick identity on the grid: the
/// covariance Riemann sum sum (b/l)^2 f1(s_i) f2(s_j) min(s_i, s_j) against a
/// reference at 64x the resolution.
RiemannCovarianceReport wick_pair_riemann(const WienerGrid& grid, const SampledFunction& f1,
                                          const SampledFunction& f2);

/// Exact polynomial identity in the grid variables: Wick ordering of the
/// product of the discretized fields Y(f_1)...Y(f_n) equals the weight-matrix
/// instance of the robustness identity. Requires n <= 3 and ell <= 6 so the
/// Gaussian moment work stays at desk scale.
IdentityReport verify_grid_wick_identity(const WienerGrid& grid,
                                         const std::vector<SampledFunction>& functions);

}  // namespace segal

#endif
