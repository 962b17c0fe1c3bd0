#include "fsc/birkhoff.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fsc/errors.hpp"
#include "jacobi_rows.hpp"

namespace fsc {

namespace {

void check_points(std::span<const double> y, bool interior) {
    if (y.empty()) {
        throw AssemblyError("Birkhoff basis needs at least one node");
    }
    for (double yi : y) {
        const bool ok = interior ? (yi > -1.0 && yi < 1.0) : (yi > -1.0 && yi <= 1.0);
        if (!ok) {
            throw AssemblyError(interior ? "Birkhoff nodes must lie strictly inside (-1, 1)"
                                         : "Birkhoff nodes must lie in (-1, 1]");
        }
    }
    std::vector<double> sorted(y.begin(), y.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw AssemblyError("Birkhoff nodes must be distinct");
    }
}

// RL D^nu [(x+1)^nu P_n^{(-nu,nu)}] = Gamma(n+1+nu)/Gamma(n+1) P_n(x)
Vector case1_scale(double nu, int count) {
    Vector g(count);
    for (int n = 0; n < count; ++n) {
        g(n) = gamma_ratio_offset(n + 1.0, nu);
    }
    return g;
}

// RL D^{1+mu} [(x+1)^mu P_{n+1}^{(-mu,mu)}] = Gamma(n+2+mu)/Gamma(n+2) (n+2)/2 P_n^{(1,1)}(x)
Vector case2_scale(double mu, int count) {
    Vector g(count);
    for (int n = 0; n < count; ++n) {
        g(n) = gamma_ratio_offset(n + 2.0, mu) * 0.5 * (n + 2.0);
    }
    return g;
}

constexpr JacobiParams kJacobi11{1.0, 1.0};

Matrix invert_system(const Matrix& system) {
    try {
        return lu_inverse(system);
    } catch (const SingularMatrixError& e) {
        throw AssemblyError(std::string("Birkhoff collocation system is singular: ") + e.what());
    }
}

Vector power_column(std::span<const double> x, double exponent) {
    Vector out(static_cast<Eigen::Index>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) = std::pow(x[i] + 1.0, exponent);
    }
    return out;
}

// Columns P_{n+1}^{(-mu,mu)}(x) - P_{n+1}^{(-mu,mu)}(1), n = 0..count-1.
Matrix shifted_rows(double mu, int count, std::span<const double> x) {
    const JacobiParams params{-mu, mu};
    Matrix rows = detail::jacobi_rows(params, 1, count, x);
    for (int n = 0; n < count; ++n) {
        rows.col(n).array() -= jacobi_at_one(params, n + 1);
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 1.0) {
            rows.row(static_cast<Eigen::Index>(i)).setZero();
        }
    }
    return rows;
}

} // namespace

double BirkhoffBasis::mu() const noexcept {
    return kind == BirkhoffCase::order_below_one ? nu : nu - 1.0;
}

BirkhoffBasis birkhoff_basis_case1(double nu, std::span<const double> y) {
    if (!(nu > 0.0 && nu < 1.0)) {
        throw ParameterError("birkhoff_basis_case1: nu must lie in (0, 1)");
    }
    check_points(y, false);
    const int m = static_cast<int>(y.size());
    const Matrix system = detail::jacobi_rows(kLegendre, 0, m, y) * case1_scale(nu, m).asDiagonal();
    return {nu, BirkhoffCase::order_below_one, {y.begin(), y.end()}, invert_system(system)};
}

BirkhoffBasis birkhoff_basis_case1_gl(double nu, const QuadratureRule& legendre_rule) {
    if (!(nu > 0.0 && nu < 1.0)) {
        throw ParameterError("birkhoff_basis_case1_gl: nu must lie in (0, 1)");
    }
    if (legendre_rule.params != kLegendre) {
        throw UsageError("birkhoff_basis_case1_gl: rule must be Gauss-Legendre");
    }
    const int m = legendre_rule.size();
    const Matrix poly = detail::jacobi_rows(kLegendre, 0, m, legendre_rule.nodes);
    const Vector g = case1_scale(nu, m);
    BirkhoffBasis basis{nu, BirkhoffCase::order_below_one, legendre_rule.nodes, Matrix(m, m)};
    for (int j = 0; j < m; ++j) {
        for (int n = 0; n < m; ++n) {
            basis.coeffs(n, j) = 0.5 * (2.0 * n + 1.0) / g(n) * legendre_rule.weights[j] * poly(j, n);
        }
    }
    return basis;
}

BirkhoffBasis birkhoff_basis_case2(double nu, std::span<const double> y) {
    if (!(nu > 1.0 && nu < 2.0)) {
        throw ParameterError("birkhoff_basis_case2: nu must lie in (1, 2)");
    }
    check_points(y, true);
    const int m = static_cast<int>(y.size());
    const Matrix system =
        detail::jacobi_rows(kJacobi11, 0, m, y) * case2_scale(nu - 1.0, m).asDiagonal();
    return {nu, BirkhoffCase::order_one_to_two, {y.begin(), y.end()}, invert_system(system)};
}

BirkhoffBasis birkhoff_basis_case2_gj(double nu, const QuadratureRule& jacobi11_rule) {
    if (!(nu > 1.0 && nu < 2.0)) {
        throw ParameterError("birkhoff_basis_case2_gj: nu must lie in (1, 2)");
    }
    if (jacobi11_rule.params != kJacobi11) {
        throw UsageError("birkhoff_basis_case2_gj: rule must be Gauss-Jacobi(1, 1)");
    }
    const int m = jacobi11_rule.size();
    const Matrix poly = detail::jacobi_rows(kJacobi11, 0, m, jacobi11_rule.nodes);
    const Vector g = case2_scale(nu - 1.0, m);
    // 1/||P_n^{(1,1)}||^2 = (2n+3)(n+2) / (8(n+1))
    BirkhoffBasis basis{nu, BirkhoffCase::order_one_to_two, jacobi11_rule.nodes, Matrix(m, m)};
    for (int j = 0; j < m; ++j) {
        for (int n = 0; n < m; ++n) {
            const double inv_norm = (2.0 * n + 3.0) * (n + 2.0) / (8.0 * (n + 1.0));
            basis.coeffs(n, j) = inv_norm / g(n) * jacobi11_rule.weights[j] * poly(j, n);
        }
    }
    return basis;
}

Matrix birkhoff_matrix(const BirkhoffBasis& basis, std::span<const double> x) {
    const int m = basis.size();
    const double mu = basis.mu();
    if (basis.kind == BirkhoffCase::order_below_one) {
        return power_column(x, mu).asDiagonal() * detail::jacobi_rows({-mu, mu}, 0, m, x) *
               basis.coeffs;
    }
    return power_column(x, mu).asDiagonal() * shifted_rows(mu, m, x) * basis.coeffs;
}

Matrix birkhoff_deriv_matrix(const BirkhoffBasis& basis, std::span<const double> x) {
    for (double xi : x) {
        if (!(xi > -1.0 && xi < 1.0)) {
            throw DomainError("birkhoff_deriv_matrix: points must lie strictly inside (-1, 1)");
        }
    }
    const int m = basis.size();
    const double mu = basis.mu();
    const JacobiParams params{-mu, mu};
    const bool case1 = basis.kind == BirkhoffCase::order_below_one;
    const Matrix poly = case1 ? detail::jacobi_rows(params, 0, m, x) : shifted_rows(mu, m, x);
    const Matrix dpoly = detail::jacobi_deriv_rows(params, case1 ? 0 : 1, m, x);
    const Matrix rows = (mu * power_column(x, mu - 1.0)).asDiagonal() * poly +
                        power_column(x, mu).asDiagonal() * dpoly;
    return rows * basis.coeffs;
}

Matrix birkhoff_frac_deriv_matrix(const BirkhoffBasis& basis, std::span<const double> y) {
    const int m = basis.size();
    if (basis.kind == BirkhoffCase::order_below_one) {
        return detail::jacobi_rows(kLegendre, 0, m, y) * case1_scale(basis.nu, m).asDiagonal() *
               basis.coeffs;
    }
    return detail::jacobi_rows(kJacobi11, 0, m, y) * case2_scale(basis.mu(), m).asDiagonal() *
           basis.coeffs;
}

} // namespace fsc
