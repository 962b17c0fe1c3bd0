#include <doctest.h>

#include <cmath>
#include <vector>

#include "fsc/birkhoff.hpp"
#include "fsc/errors.hpp"
#include "fsc/fracops.hpp"
#include "oracles.hpp"

using namespace fsc;

namespace {

std::vector<double> column(const BirkhoffBasis& basis, int j) {
    std::vector<double> c(basis.size());
    for (int n = 0; n < basis.size(); ++n) {
        c[n] = basis.coeffs(n, j);
    }
    return c;
}

// RL D^order B_j at y from the (x+1)-power expansion of B_j.
double power_rule_entry(const BirkhoffBasis& basis, int j, double order, double y) {
    const double mu = basis.mu();
    const auto c = column(basis, j);
    const bool case2 = basis.kind == BirkhoffCase::order_one_to_two;
    const auto poly = oracle::expand_jacobi_series(-mu, mu, c, case2 ? 1 : 0, case2);
    return static_cast<double>(oracle::rl_power_series(mu, poly, order, y));
}

std::vector<double> chebyshev_x(int n) {
    const auto c = chebyshev_lobatto(n);
    return {c.begin() + 1, c.end()};
}

std::vector<double> grid(int count, double lo, double hi) {
    std::vector<double> y(count);
    for (int i = 0; i < count; ++i) {
        y[i] = lo + (hi - lo) * i / (count - 1);
    }
    return y;
}

} // namespace

TEST_CASE("one-node Birkhoff bases") {
    const std::vector<double> y{0.3};
    const auto b1 = birkhoff_basis_case1(0.8, y);
    CHECK(b1.coeffs(0, 0) == doctest::Approx(1.0 / std::tgamma(1.8)).epsilon(1e-14));
    CHECK(b1.mu() == 0.8);
    const auto b2 = birkhoff_basis_case2(1.9, y);
    CHECK(b2.coeffs(0, 0) == doctest::Approx(1.0 / std::tgamma(2.9)).epsilon(1e-14));
    CHECK(b2.mu() == doctest::Approx(0.9));
}

TEST_CASE("case 1 closed form matches the solve") {
    for (double nu : {0.2, 0.5, 0.8}) {
        for (int n : {1, 2, 6, 16, 64}) {
            const auto rule = gauss_legendre(n);
            const auto closed = birkhoff_basis_case1_gl(nu, rule);
            const auto solved = birkhoff_basis_case1(nu, rule.nodes);
            INFO("nu=" << nu << " n=" << n);
            CHECK((closed.coeffs - solved.coeffs).cwiseAbs().maxCoeff() <=
                  1e-12 * std::max(1.0, solved.coeffs.cwiseAbs().maxCoeff()));
        }
    }
}

TEST_CASE("case 2 closed form matches the solve") {
    for (double nu : {1.1, 1.5, 1.9}) {
        for (int n : {1, 2, 5, 16, 63}) {
            const auto rule = gauss_jacobi(n, {1.0, 1.0});
            const auto closed = birkhoff_basis_case2_gj(nu, rule);
            const auto solved = birkhoff_basis_case2(nu, rule.nodes);
            INFO("nu=" << nu << " n=" << n);
            CHECK((closed.coeffs - solved.coeffs).cwiseAbs().maxCoeff() <=
                  1e-12 * std::max(1.0, solved.coeffs.cwiseAbs().maxCoeff()));
        }
    }
}

TEST_CASE("closed forms reject the wrong rule or order") {
    CHECK_THROWS_AS(birkhoff_basis_case1_gl(0.8, gauss_jacobi(4, {1.0, 1.0})), UsageError);
    CHECK_THROWS_AS(birkhoff_basis_case2_gj(1.9, gauss_legendre(4)), UsageError);
    const std::vector<double> y{0.1, 0.2};
    CHECK_THROWS_AS(birkhoff_basis_case1(1.2, y), ParameterError);
    CHECK_THROWS_AS(birkhoff_basis_case2(0.9, y), ParameterError);
    const std::vector<double> dup{0.1, 0.1};
    CHECK_THROWS_AS(birkhoff_basis_case1(0.5, dup), AssemblyError);
    const std::vector<double> edge{0.1, 1.0};
    CHECK_THROWS_AS(birkhoff_basis_case2(1.5, edge), AssemblyError);
}

TEST_CASE("delta property at the y-nodes") {
    const auto c1 = birkhoff_basis_case1_gl(0.8, gauss_legendre(9));
    const Matrix d1 = birkhoff_frac_deriv_matrix(c1, c1.y_nodes);
    CHECK((d1 - Matrix::Identity(9, 9)).cwiseAbs().maxCoeff() <= 1e-12);

    const std::vector<double> y{-0.7, -0.1, 0.2, 0.65};
    const auto c2 = birkhoff_basis_case2(1.4, y);
    const Matrix d2 = birkhoff_frac_deriv_matrix(c2, y);
    CHECK((d2 - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("power-rule oracle reproduces the delta property") {
    for (int n = 1; n <= 10; ++n) {
        const auto c1 = birkhoff_basis_case1_gl(0.8, gauss_legendre(n));
        const auto c2 = birkhoff_basis_case2_gj(1.9, gauss_jacobi(n, {1.0, 1.0}));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const double delta = i == j ? 1.0 : 0.0;
                CHECK(std::abs(power_rule_entry(c1, j, 0.8, c1.y_nodes[i]) - delta) <= 1e-8);
                CHECK(std::abs(power_rule_entry(c2, j, 1.9, c2.y_nodes[i]) - delta) <= 1e-8);
            }
        }
    }
}

TEST_CASE("right-inverse identity, order below one") {
    const double nu = 0.8;
    for (int n : {4, 8, 16, 32}) {
        const auto x = gauss_jacobi(n, {-nu, nu});
        const auto y = gauss_legendre(n);
        const auto l = build_basis_gj(nu, x);
        const auto b = birkhoff_basis_case1_gl(nu, y);
        const Matrix prod = frac_deriv_matrix(l, y.nodes).entries * birkhoff_matrix(b, x.nodes);
        INFO("n=" << n);
        CHECK((prod - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-9);

        // D^(0)_{x->y} B_{y->x} equals B evaluated at the y-nodes.
        const Matrix lhs = value_matrix(l, y.nodes).entries * birkhoff_matrix(b, x.nodes);
        const Matrix rhs = birkhoff_matrix(b, y.nodes);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("right-inverse identity, order between one and two") {
    const double nu = 1.9;
    const double mu = nu - 1.0;
    for (int n : {4, 8, 16, 32}) {
        const auto x = chebyshev_x(n);
        const std::vector<double> xi(x.begin(), x.end() - 1);
        const auto y = gauss_jacobi(n - 1, {1.0, 1.0});
        const auto l = build_basis(mu, x);
        const auto b = birkhoff_basis_case2_gj(nu, y);
        const Matrix d = frac_deriv1p_matrix(l, y.nodes).entries.leftCols(n - 1);
        const Matrix prod = d * birkhoff_matrix(b, xi);
        INFO("n=" << n);
        CHECK((prod - Matrix::Identity(n - 1, n - 1)).cwiseAbs().maxCoeff() <= 1e-9);

        const Matrix lhs0 = value_matrix(l, y.nodes).entries.leftCols(n - 1) * birkhoff_matrix(b, xi);
        CHECK((lhs0 - birkhoff_matrix(b, y.nodes)).cwiseAbs().maxCoeff() <= 1e-9);
        const Matrix lhs1 = deriv1_matrix(l, y.nodes).entries.leftCols(n - 1) * birkhoff_matrix(b, xi);
        CHECK((lhs1 - birkhoff_deriv_matrix(b, y.nodes)).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("boundary values") {
    const std::vector<double> ends{-1.0, 1.0};
    const auto c1 = birkhoff_basis_case1_gl(0.6, gauss_legendre(12));
    const Matrix b1 = birkhoff_matrix(c1, ends);
    CHECK(b1.row(0).cwiseAbs().maxCoeff() == 0.0);

    for (double nu : {1.1, 1.9}) {
        const auto c2 = birkhoff_basis_case2_gj(nu, gauss_jacobi(12, {1.0, 1.0}));
        const Matrix b2 = birkhoff_matrix(c2, ends);
        CHECK(b2.cwiseAbs().maxCoeff() == 0.0);
        // Close to x = 1 the functions approach zero continuously.
        const std::vector<double> near{1.0 - 1e-9};
        CHECK(birkhoff_matrix(c2, near).cwiseAbs().maxCoeff() <= 1e-6);
    }
}

TEST_CASE("derivative matrix agrees with finite differences") {
    const auto y = grid(30, -0.95, 0.95);
    const auto c2 = birkhoff_basis_case2_gj(1.7, gauss_jacobi(10, {1.0, 1.0}));
    const auto c1 = birkhoff_basis_case1_gl(0.4, gauss_legendre(10));
    for (const auto* basis : {&c1, &c2}) {
        const Matrix d = birkhoff_deriv_matrix(*basis, y);
        for (int i = 0; i < 30; ++i) {
            const std::vector<double> lo{y[i] - 1e-6};
            const std::vector<double> hi{y[i] + 1e-6};
            const Matrix fd = (birkhoff_matrix(*basis, hi) - birkhoff_matrix(*basis, lo)) / 2e-6;
            for (int j = 0; j < 10; ++j) {
                CHECK(std::abs(d(i, j) - fd(0, j)) <= 1e-5 * std::max(1.0, std::abs(fd(0, j))));
            }
        }
    }
    const std::vector<double> bad{-1.0};
    CHECK_THROWS_AS(birkhoff_deriv_matrix(c2, bad), DomainError);
}
