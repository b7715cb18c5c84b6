#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include "fixtures.hpp"
#include "segal/segal_polynomials.hpp"

using namespace segal;
namespace fx = segal::testing;

TEST_SUITE_BEGIN("segal");

namespace {

SparsePolynomial poly1(std::initializer_list<std::pair<int, int>> terms) {
    SparsePolynomial p(1);
    for (const auto& [exp, coeff] : terms) p.add_term(MultiIndex{exp}, coeff);
    return p;
}

}  // namespace

TEST_CASE("point mass at zero gives plain monomials") {
    for (int dim = 1; dim <= 3; ++dim) {
        const auto dirac = fx::dirac0(dim);
        for (const auto& beta : indices_up_to_order(dim, 4))
            CHECK(segal_polynomial(*dirac, beta) == SparsePolynomial::monomial(beta));
    }
}

TEST_CASE("standard gaussian gives the monic Hermite family") {
    const auto family = segal_family(*fx::std_gaussian(1), 4);
    REQUIRE(family.size() == 5);
    CHECK(family.at(MultiIndex{0}) == poly1({{0, 1}}));
    CHECK(family.at(MultiIndex{1}) == poly1({{1, 1}}));
    CHECK(family.at(MultiIndex{2}) == poly1({{2, 1}, {0, -1}}));
    CHECK(family.at(MultiIndex{3}) == poly1({{3, 1}, {1, -3}}));
    CHECK(family.at(MultiIndex{4}) == poly1({{4, 1}, {2, -6}, {0, 3}}));
}

TEST_CASE("coin measure: p_2 = x^2 - x") {
    CHECK(segal_polynomial(*fx::coin(), MultiIndex{2}) == poly1({{2, 1}, {1, -1}}));
    // Hand recursion: p_1 = x - 1/2.
    SparsePolynomial p1(1);
    p1.add_term(MultiIndex{1}, 1);
    p1.add_term(MultiIndex{0}, Rational(Integer(-1), Integer(2)));
    CHECK(segal_polynomial(*fx::coin(), MultiIndex{1}) == p1);
}

TEST_CASE("family construction") {
    const auto trivial = segal_family(*fx::coin(), 0);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial.at(MultiIndex{0}) == SparsePolynomial::constant(1, 1));

    // Dirac in two variables up to order 2: exactly the six monomials.
    const auto dirac_family = segal_family(*fx::dirac0(2), 2);
    REQUIRE(dirac_family.size() == 6);
    for (const auto& [beta, p] : dirac_family) CHECK(p == SparsePolynomial::monomial(beta));

    // Each family entry coincides with the one-shot construction.
    const auto mu = fx::shifted_gaussian();
    const auto family = segal_family(*mu, 3);
    for (const auto& [beta, p] : family) CHECK(p == segal_polynomial(*mu, beta));
}

TEST_CASE("derivative descent holds exactly on the fixture set") {
    for (const auto& [name, mu] : fx::fixture_measures()) {
        CAPTURE(name);
        SegalFamily family(*mu);
        for (const auto& beta : indices_up_to_order(mu->dimension(), 4)) {
            const SparsePolynomial& p = family.polynomial(beta);
            for (int j = 0; j < mu->dimension(); ++j) {
                SparsePolynomial expected(mu->dimension());
                if (beta[j] > 0)
                    expected = Rational(beta[j]) * family.polynomial(beta.minus_unit(j));
                CHECK(p.partial_derivative(j) == expected);
            }
        }
    }
}

TEST_CASE("centering holds exactly on the fixture set") {
    for (const auto& [name, mu] : fx::fixture_measures()) {
        CAPTURE(name);
        SegalFamily family(*mu);
        for (const auto& beta : indices_up_to_order(mu->dimension(), 4)) {
            if (beta.order() == 0) continue;
            CHECK(expectation(*mu, family.polynomial(beta)) == Rational(0));
        }
    }
}

TEST_CASE("monicity: leading coefficient one, rest of lower total order") {
    for (const auto& [name, mu] : fx::fixture_measures()) {
        CAPTURE(name);
        SegalFamily family(*mu);
        for (const auto& beta : indices_up_to_order(mu->dimension(), 4)) {
            const SparsePolynomial& p = family.polynomial(beta);
            CHECK(p.coefficient(beta) == Rational(1));
            for (const auto& [gamma, c] : p.terms()) {
                if (gamma == beta) continue;
                CHECK(gamma.order() < beta.order());
            }
        }
    }
}

TEST_CASE("descent through any variable gives the same coefficient") {
    // The uniqueness claim behind the construction, checked rather than
    // assumed: for gamma with gamma_j, gamma_j' >= 1 both descents agree and
    // match the stored coefficient.
    for (const auto& [name, mu] : fx::fixture_measures()) {
        if (mu->dimension() < 2) continue;
        CAPTURE(name);
        SegalFamily family(*mu);
        for (const auto& beta : indices_up_to_order(mu->dimension(), 4)) {
            const SparsePolynomial& p = family.polynomial(beta);
            for (const auto& gamma : indices_below(beta)) {
                if (gamma.is_zero() || gamma == beta) continue;
                for (int j = 0; j < mu->dimension(); ++j) {
                    if (gamma[j] == 0) continue;
                    const Rational via_j = Rational(beta[j]) *
                                           family.polynomial(beta.minus_unit(j))
                                               .coefficient(gamma.minus_unit(j)) /
                                           Rational(gamma[j]);
                    CHECK(via_j == p.coefficient(gamma));
                }
            }
        }
    }
}

TEST_CASE("product measures factorize the family") {
    const auto mu1 = fx::coin();
    const auto mu2 = fx::std_gaussian(1);
    const auto product = std::make_shared<ProductMeasure>(std::vector<MeasurePtr>{mu1, mu2});

    SegalFamily family(*product);
    SegalFamily f1(*mu1);
    SegalFamily f2(*mu2);
    for (const auto& beta : indices_up_to_order(2, 4)) {
        const SparsePolynomial expected = f1.polynomial(beta.slice(0, 1)).shift_vars(2, 0) *
                                          f2.polynomial(beta.slice(1, 1)).shift_vars(2, 1);
        CHECK(family.polynomial(beta) == expected);
    }

    // Also across a 1+2 split with a non-product factor on the right.
    const auto mu3 = fx::shifted_gaussian();
    const auto product2 = std::make_shared<ProductMeasure>(std::vector<MeasurePtr>{mu1, mu3});
    SegalFamily family2(*product2);
    SegalFamily f3(*mu3);
    for (const auto& beta : indices_up_to_order(3, 3)) {
        const SparsePolynomial expected = f1.polynomial(beta.slice(0, 1)).shift_vars(3, 0) *
                                          f3.polynomial(beta.slice(1, 2)).shift_vars(3, 1);
        CHECK(family2.polynomial(beta) == expected);
    }
}

TEST_CASE("coefficients only read moments of order <= |beta|") {
    // Perturbing any higher-order moment must leave p_beta untouched.
    const auto base = fx::asymmetric_two_atom();
    for (const auto& beta : indices_up_to_order(1, 3)) {
        for (int higher = beta.order() + 1; higher <= 5; ++higher) {
            const fx::PerturbedMeasure perturbed(base, MultiIndex{higher},
                                                 base->moment(MultiIndex{higher}) + Rational(1));
            CHECK(segal_polynomial(perturbed, beta) == segal_polynomial(*base, beta));
        }
    }
    // Sanity: perturbing a moment of order <= |beta| does change the result.
    const fx::PerturbedMeasure shifted(base, MultiIndex{1},
                                       base->moment(MultiIndex{1}) + Rational(1));
    CHECK(segal_polynomial(shifted, MultiIndex{2}) != segal_polynomial(*base, MultiIndex{2}));
}

TEST_CASE("gaussian families are orthogonal (spot check)") {
    const auto std1 = fx::std_gaussian(1);
    SegalFamily family(*std1);
    for (int j = 0; j <= 3; ++j)
        for (int k = 0; k <= 3; ++k) {
            if (j == k) continue;
            CHECK(expectation(*std1, family.polynomial(MultiIndex{j}) *
                                          family.polynomial(MultiIndex{k})) == Rational(0));
        }

    const auto std2 = fx::std_gaussian(2);
    SegalFamily family2(*std2);
    for (const auto& beta : indices_up_to_order(2, 2))
        for (const auto& gamma : indices_up_to_order(2, 2)) {
            if (beta == gamma) continue;
            CHECK(expectation(*std2, family2.polynomial(beta) * family2.polynomial(gamma)) ==
                  Rational(0));
        }
}

TEST_CASE("missing moments are a hard error") {
    const auto truncated = std::make_shared<TruncatedMeasure>(fx::std_gaussian(1), 3);
    CHECK(segal_polynomial(*truncated, MultiIndex{2}) == poly1({{2, 1}, {0, -1}}));
    CHECK_THROWS_AS(segal_polynomial(*truncated, MultiIndex{3}), InsufficientMomentsError);
    CHECK_THROWS_AS(segal_family(*truncated, 3), InsufficientMomentsError);
    CHECK_THROWS_AS(segal_polynomial(*truncated, MultiIndex{1, 1}), std::invalid_argument);
}

TEST_CASE("shared families and providers are safe under concurrent queries") {
    // Several threads hammer one family (and its measure's moment cache) on
    // overlapping indices; every thread must read the same polynomials as a
    // single-threaded construction.
    const auto mu = fx::shifted_gaussian();
    const auto reference = segal_family(*mu, 5);

    SegalFamily shared(*mu);
    std::atomic<int> mismatches{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < 8; ++w) {
        workers.emplace_back([&, w] {
            std::mt19937_64 rng(static_cast<std::uint64_t>(w));
            for (int round = 0; round < 50; ++round) {
                const MultiIndex beta = fx::random_index(rng, 2, static_cast<int>(rng() % 6));
                if (shared.polynomial(beta) != reference.at(beta)) ++mismatches;
                if (mu->moment(beta) != expectation(*mu, SparsePolynomial::monomial(beta)))
                    ++mismatches;
            }
        });
    }
    for (auto& worker : workers) worker.join();
    CHECK(mismatches.load() == 0);
}

TEST_CASE("generating-function identity at truncated order") {
    std::mt19937_64 rng(31);

    // Order 0: both sides are 1.
    const auto coin = fx::coin();
    CHECK(verify_generating_identity(coin, fx::random_map(rng, 2, 1), 0).ok);

    // Point mass at zero: reduces to the plain multinomial expansion.
    CHECK(verify_generating_identity(fx::dirac0(2), fx::random_map(rng, 2, 2), 3).ok);
    CHECK(verify_generating_identity(fx::dirac0(1), fx::random_map(rng, 3, 1), 3).ok);

    // Standard gaussian on R^2 against the summing map.
    const LinearMap sum_map(1, 2, {Rational(1), Rational(1)});
    CHECK(verify_generating_identity(fx::std_gaussian(2), sum_map, 3).ok);

    // A couple of randomized instances across fixture measures.
    for (const auto& [name, mu] : fx::fixture_measures()) {
        if (mu->dimension() > 2) continue;
        CAPTURE(name);
        const LinearMap t = fx::random_map(rng, 2, mu->dimension());
        CHECK(verify_generating_identity(mu, t, 2).ok);
    }

    CHECK_THROWS_AS(verify_generating_identity(
                        std::make_shared<TruncatedMeasure>(fx::coin(), 2), LinearMap::identity(1), 3),
                    InsufficientMomentsError);
}

TEST_SUITE_END();
