#include "segal/wiener.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "segal/wick.hpp"

namespace segal {

SampledFunction SampledFunction::one(const Rational& b) {
    if (b <= Rational(0)) throw std::invalid_argument("SampledFunction: support bound must be > 0");
    return SampledFunction(
        [b](const Rational& x) { return (x > Rational(0) && x <= b) ? Rational(1) : Rational(0); },
        b);
}

SampledFunction SampledFunction::tent(const Rational& b) {
    if (b <= Rational(0)) throw std::invalid_argument("SampledFunction: support bound must be > 0");
    return SampledFunction(
        [b](const Rational& x) {
            if (x <= Rational(0) || x >= b) return Rational(0);
            const Rational half = b / Rational(2);
            return x <= half ? x / half : (b - x) / half;
        },
        b);
}

SampledFunction SampledFunction::hat(const Rational& b) {
    if (b <= Rational(0)) throw std::invalid_argument("SampledFunction: support bound must be > 0");
    return SampledFunction(
        [b](const Rational& x) {
            if (x <= Rational(0) || x >= b) return Rational(0);
            return Rational(4) * x * (b - x) / (b * b);
        },
        b);
}

SampledFunction SampledFunction::piecewise_linear(
    std::vector<std::pair<Rational, Rational>> nodes, const Rational& b) {
    if (b <= Rational(0)) throw std::invalid_argument("SampledFunction: support bound must be > 0");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].first <= Rational(0) || nodes[i].first > b)
            throw std::invalid_argument("SampledFunction: node " + std::to_string(i) +
                                        " lies outside (0, b]");
        if (i > 0 && nodes[i].first <= nodes[i - 1].first)
            throw std::invalid_argument("SampledFunction: node abscissae must be increasing");
    }
    return SampledFunction(
        [nodes = std::move(nodes)](const Rational& x) -> Rational {
            if (nodes.empty() || x < nodes.front().first || x > nodes.back().first)
                return Rational(0);
            auto hi = std::lower_bound(nodes.begin(), nodes.end(), x,
                                       [](const auto& node, const Rational& v) {
                                           return node.first < v;
                                       });
            if (hi->first == x) return hi->second;
            auto lo = hi - 1;
            const Rational t = (x - lo->first) / (hi->first - lo->first);
            return lo->second + t * (hi->second - lo->second);
        },
        b);
}

WienerGrid::WienerGrid(Rational b, int ell) : b_(std::move(b)), ell_(ell) {
    if (b_ <= Rational(0)) throw std::invalid_argument("WienerGrid: b must be > 0");
    if (ell_ < 1) throw std::invalid_argument("WienerGrid: grid count must be >= 1");
}

Rational WienerGrid::point(int i) const {
    if (i < 0 || i >= ell_) throw std::invalid_argument("WienerGrid::point: index out of range");
    return Rational(i + 1) * b_ / Rational(ell_);
}

Rational WienerGrid::covariance(int i, int j) const { return point(std::min(i, j)); }

std::shared_ptr<const GaussianMeasure> WienerGrid::gaussian() const {
    const std::size_t n = static_cast<std::size_t>(ell_);
    std::vector<Rational> mean(n, Rational(0));
    std::vector<std::vector<Rational>> cov(n, std::vector<Rational>(n));
    for (int i = 0; i < ell_; ++i)
        for (int j = 0; j < ell_; ++j)
            cov[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = covariance(i, j);
    return std::make_shared<GaussianMeasure>(std::move(mean), std::move(cov));
}

std::vector<double> discretized_field(const WienerGrid& grid, const SampledFunction& f) {
    if (f.support_bound() > grid.b())
        throw std::invalid_argument("discretized_field: function support exceeds the grid");
    const double step = (grid.b() / Rational(grid.ell())).to_double();
    std::vector<double> weights(static_cast<std::size_t>(grid.ell()), 0.0);
    for (int i = 0; i < grid.ell(); ++i)
        weights[static_cast<std::size_t>(i)] = step * f(grid.point(i)).to_double();
    return weights;
}

namespace {

double riemann_covariance(const Rational& b, int ell, const SampledFunction& f1,
                          const SampledFunction& f2) {
    // sum over the grid of (b/l)^2 f1(s_i) f2(s_j) min(s_i, s_j); the min
    // kernel is split on the diagonal so each factor is evaluated once.
    const double step = (b / Rational(ell)).to_double();
    std::vector<double> v1(static_cast<std::size_t>(ell)), v2(static_cast<std::size_t>(ell)),
        pts(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) {
        const Rational s = Rational(i + 1) * b / Rational(ell);
        v1[static_cast<std::size_t>(i)] = f1(s).to_double();
        v2[static_cast<std::size_t>(i)] = f2(s).to_double();
        pts[static_cast<std::size_t>(i)] = s.to_double();
    }
    double sum = 0.0;
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j)
            sum += v1[static_cast<std::size_t>(i)] * v2[static_cast<std::size_t>(j)] *
                   pts[static_cast<std::size_t>(std::min(i, j))];
    return step * step * sum;
}

}  // namespace

RiemannCovarianceReport wick_pair_riemann(const WienerGrid& grid, const SampledFunction& f1,
                                          const SampledFunction& f2) {
    const int ell = grid.ell();
    const int ell_ref = 64 * ell;
    const double riemann = riemann_covariance(grid.b(), ell, f1, f2);
    const double limit = riemann_covariance(grid.b(), ell_ref, f1, f2);
    return {riemann, limit, std::abs(riemann - limit), ell, ell_ref};
}

IdentityReport verify_grid_wick_identity(const WienerGrid& grid,
                                         const std::vector<SampledFunction>& functions) {
    const int n = static_cast<int>(functions.size());
    if (n < 1 || n > 3)
        throw std::invalid_argument("verify_grid_wick_identity: need 1 to 3 functions");
    if (grid.ell() > 6)
        throw std::invalid_argument("verify_grid_wick_identity: grid count above 6 is out of the "
                                    "exact-arithmetic budget");

    // Weight matrix of the discretized fields: row j holds (b/l) f_j(s_i).
    const Rational step = grid.b() / Rational(grid.ell());
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(grid.ell()));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < grid.ell(); ++i) entries.push_back(step * functions[static_cast<std::size_t>(j)](grid.point(i)));
    const LinearMap weights(n, grid.ell(), std::move(entries));

    const RandomVector grid_vector = RandomVector::base_vector(grid.gaussian());
    // p = y_1 * ... * y_n, the product of the discretized fields.
    const SparsePolynomial product =
        SparsePolynomial::monomial(MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 1)));
    IdentityReport report = verify_robustness(grid_vector, weights, product);
    report.context = "grid Wick identity, l = " + std::to_string(grid.ell()) + ", n = " +
                     std::to_string(n);
    return report;
}

}  // namespace segal
