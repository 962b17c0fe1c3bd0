#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <map>

#include "fsc/errors.hpp"
#include "fsc/quadrature.hpp"
#include "oracles.hpp"

using namespace fsc;

namespace {

double apply(const QuadratureRule& rule, int k) {
    double s = 0.0;
    for (int j = 0; j < rule.size(); ++j) {
        s += rule.weights[j] * std::pow(rule.nodes[j], k);
    }
    return s;
}

double abs_moment(const QuadratureRule& rule, int k) {
    double s = 0.0;
    for (int j = 0; j < rule.size(); ++j) {
        s += rule.weights[j] * std::pow(std::abs(rule.nodes[j]), k);
    }
    return s;
}

void check_rule_invariants(const QuadratureRule& rule) {
    REQUIRE(rule.nodes.size() == rule.weights.size());
    double sum = 0.0;
    for (int j = 0; j < rule.size(); ++j) {
        CHECK(rule.nodes[j] > -1.0);
        CHECK(rule.nodes[j] < 1.0);
        CHECK(rule.weights[j] > 0.0);
        if (j > 0) {
            CHECK(rule.nodes[j] > rule.nodes[j - 1]);
        }
        sum += rule.weights[j];
    }
    CHECK(sum == doctest::Approx(jacobi_weight_integral(rule.params)).epsilon(1e-12));
}

} // namespace

TEST_CASE("gauss_legendre closed forms") {
    const auto r1 = gauss_legendre(1);
    CHECK(r1.nodes[0] == doctest::Approx(0.0));
    CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

    const auto r2 = gauss_legendre(2);
    CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-15));

    const auto r3 = gauss_legendre(3);
    CHECK(r3.nodes[0] == doctest::Approx(-std::sqrt(0.6)).epsilon(1e-15));
    CHECK(std::abs(r3.nodes[1]) < 1e-16);
    CHECK(r3.nodes[2] == doctest::Approx(std::sqrt(0.6)).epsilon(1e-15));
    CHECK(r3.weights[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-15));
    CHECK(r3.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-15));

    CHECK(apply(gauss_legendre(5), 8) == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("gauss_jacobi(8, -0.8, 0.8)") {
    const auto rule = gauss_jacobi(8, {-0.8, 0.8});
    check_rule_invariants(rule);
    const double total = 2.0 * std::tgamma(0.2) * std::tgamma(1.8) / std::tgamma(2.0);
    double sum = 0.0;
    for (double w : rule.weights) {
        sum += w;
    }
    CHECK(sum == doctest::Approx(total).epsilon(1e-12));
    CHECK(apply(rule, 14) == doctest::Approx(oracle::jacobi_moment(-0.8, 0.8, 14)).epsilon(1e-12));
}

TEST_CASE("every rule integrates monomials up to degree 2n-1") {
    const JacobiParams families[] = {{0.0, 0.0}, {-0.8, 0.8}, {-0.9, 0.9}, {1.0, 1.0}, {0.4, -0.3}};
    for (const auto& params : families) {
        std::map<int, double> moments;
        for (int k = 0; k < 130; ++k) {
            moments[k] = oracle::jacobi_moment(params.alpha, params.beta, k);
        }
        for (int n : {1, 2, 3, 5, 8, 13, 21, 32, 47, 64}) {
            const auto rule = gauss_jacobi(n, params);
            check_rule_invariants(rule);
            for (int k = 0; k <= 2 * n - 1; ++k) {
                const double got = apply(rule, k);
                // Odd moments of symmetric weights vanish; |x|^k >= x^{k+1} bounds the scale from below.
                const double scale =
                    std::max({std::abs(moments[k]), std::abs(moments[k + 1]), abs_moment(rule, k)});
                INFO("alpha=" << params.alpha << " beta=" << params.beta << " n=" << n << " k=" << k);
                CHECK(std::abs(got - moments[k]) <= 1e-11 * scale);
            }
        }
    }
}

TEST_CASE("nodes interlace between consecutive orders") {
    for (const JacobiParams params : {JacobiParams{-0.8, 0.8}, JacobiParams{1.0, 1.0}}) {
        for (int n = 1; n < 40; ++n) {
            const auto a = gauss_jacobi(n, params);
            const auto b = gauss_jacobi(n + 1, params);
            for (int j = 0; j < n; ++j) {
                CHECK(b.nodes[j] < a.nodes[j]);
                CHECK(a.nodes[j] < b.nodes[j + 1]);
            }
        }
    }
}

TEST_CASE("large rules stay well formed") {
    for (int n : {512, 1024, 1023}) {
        check_rule_invariants(gauss_jacobi(n, {-0.8, 0.8}));
        check_rule_invariants(gauss_jacobi(n, {1.0, 1.0}));
    }
}

TEST_CASE("rules are deterministic") {
    const auto a = gauss_jacobi(37, {-0.3, 0.3});
    const auto b = gauss_jacobi(37, {-0.3, 0.3});
    CHECK(a.nodes == b.nodes);
    CHECK(a.weights == b.weights);
}

TEST_CASE("gauss_jacobi argument errors") {
    CHECK_THROWS_AS(gauss_jacobi(0, kLegendre), ParameterError);
    CHECK_THROWS_AS(gauss_jacobi(4, {-1.0, 0.0}), ParameterError);
}

TEST_CASE("chebyshev_lobatto") {
    const auto x2 = chebyshev_lobatto(2);
    REQUIRE(x2.size() == 3);
    CHECK(x2[0] == -1.0);
    CHECK(x2[1] == 0.0);
    CHECK(x2[2] == 1.0);

    const auto x4 = chebyshev_lobatto(4);
    CHECK(x4[1] == doctest::Approx(-std::cos(std::numbers::pi / 4)).epsilon(1e-15));
    CHECK(x4[2] == 0.0);
    CHECK(x4[3] == doctest::Approx(std::cos(std::numbers::pi / 4)).epsilon(1e-15));

    for (int n : {3, 7, 16, 1024}) {
        const auto x = chebyshev_lobatto(n);
        for (int j = 0; j <= n; ++j) {
            CHECK(x[j] + x[n - j] == 0.0);
            CHECK(x[j] == doctest::Approx(-std::cos(j * std::numbers::pi / n)).epsilon(1e-14));
            if (j > 0) {
                CHECK(x[j] > x[j - 1]);
            }
        }
    }
    CHECK_THROWS_AS(chebyshev_lobatto(1), ParameterError);
}

TEST_CASE("NodeSet validation") {
    CHECK_NOTHROW(NodeSet({-0.5, 0.0, 1.0}));
    CHECK_THROWS_AS(NodeSet({-1.0, 0.0}), ParameterError);
    CHECK_THROWS_AS(NodeSet({0.0, 0.0}), ParameterError);
    CHECK_THROWS_AS(NodeSet({0.5, 0.1}), ParameterError);
    CHECK_THROWS_AS(NodeSet({0.0, 1.5}), ParameterError);
    CHECK_THROWS_AS(NodeSet(std::vector<double>{}), ParameterError);
}
