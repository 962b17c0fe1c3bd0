#include "fsc/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fsc/errors.hpp"
#include "jacobi_rows.hpp"

namespace fsc {

namespace {

void check_mu(double mu) {
    if (!(mu > 0.0 && mu < 1.0)) {
        throw ParameterError("fractional basis exponent mu must lie in (0, 1) (got " +
                             std::to_string(mu) + ")");
    }
}

void check_nodes(std::span<const double> x) {
    if (x.empty()) {
        throw AssemblyError("fractional basis needs at least one node");
    }
    for (double xi : x) {
        if (!(xi > -1.0 && xi <= 1.0)) {
            throw AssemblyError("fractional basis nodes must lie in (-1, 1]");
        }
    }
    std::vector<double> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw AssemblyError("fractional basis nodes must be distinct");
    }
}

Vector power_column(std::span<const double> y, double exponent) {
    Vector out(static_cast<Eigen::Index>(y.size()));
    for (std::size_t i = 0; i < y.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) = std::pow(y[i] + 1.0, exponent);
    }
    return out;
}

// Gamma(n+1+mu)/Gamma(n+1), n = 0..count-1.
Vector legendre_image_scale(double mu, int count) {
    Vector g(count);
    for (int n = 0; n < count; ++n) {
        g(n) = gamma_ratio_offset(n + 1.0, mu);
    }
    return g;
}

std::vector<double> to_vector(std::span<const double> y) { return {y.begin(), y.end()}; }

} // namespace

FracBasis build_basis(double mu, std::span<const double> x_nodes) {
    check_mu(mu);
    check_nodes(x_nodes);
    const int n = static_cast<int>(x_nodes.size());
    const JacobiParams params{-mu, mu};

    Matrix vandermonde = power_column(x_nodes, mu).asDiagonal() *
                         detail::jacobi_rows(params, 0, n, x_nodes);
    FracBasis basis{mu, to_vector(x_nodes), Matrix{}};
    try {
        basis.coeffs = lu_inverse(vandermonde);
    } catch (const SingularMatrixError& e) {
        throw AssemblyError(std::string("fractional Vandermonde system is singular: ") + e.what());
    }
    return basis;
}

FracBasis build_basis_gj(double mu, const QuadratureRule& rule) {
    check_mu(mu);
    if (rule.params != JacobiParams{-mu, mu}) {
        throw UsageError("build_basis_gj: quadrature rule must be Gauss-Jacobi(-mu, mu)");
    }
    const int n = rule.size();
    const JacobiParams params{-mu, mu};
    Matrix poly = detail::jacobi_rows(params, 0, n, rule.nodes);

    // 1 / ||P_k||^2 = (2k+1) (k!)^2 / (2 Gamma(k+1-mu) Gamma(k+1+mu))
    Vector inv_norm(n);
    for (int k = 0; k < n; ++k) {
        inv_norm(k) = 0.5 * (2.0 * k + 1.0) *
                      std::exp(2.0 * log_gamma(k + 1.0) - log_gamma(k + 1.0 - mu) -
                               log_gamma(k + 1.0 + mu));
    }
    FracBasis basis{mu, rule.nodes, Matrix(n, n)};
    for (int j = 0; j < n; ++j) {
        const double node_scale = rule.weights[j] / std::pow(rule.nodes[j] + 1.0, mu);
        for (int k = 0; k < n; ++k) {
            basis.coeffs(k, j) = inv_norm(k) * node_scale * poly(j, k);
        }
    }
    return basis;
}

DiffMatrix value_matrix(const FracBasis& basis, std::span<const double> y) {
    const Matrix rows = power_column(y, basis.mu).asDiagonal() *
                        detail::jacobi_rows(basis.params(), 0, basis.size(), y);
    return {DiffOrder::value, rows * basis.coeffs, to_vector(y)};
}

DiffMatrix deriv1_matrix(const FracBasis& basis, std::span<const double> y) {
    for (double yi : y) {
        if (!(yi > -1.0 && yi < 1.0)) {
            throw DomainError("deriv1_matrix: evaluation points must lie strictly inside (-1, 1)");
        }
    }
    const int n = basis.size();
    const double mu = basis.mu;
    const Matrix poly = detail::jacobi_rows(basis.params(), 0, n, y);
    const Matrix dpoly = detail::jacobi_deriv_rows(basis.params(), 0, n, y);
    const Matrix rows = (mu * power_column(y, mu - 1.0)).asDiagonal() * poly +
                        power_column(y, mu).asDiagonal() * dpoly;
    return {DiffOrder::first_derivative, rows * basis.coeffs, to_vector(y)};
}

DiffMatrix frac_deriv_matrix(const FracBasis& basis, std::span<const double> y) {
    const int n = basis.size();
    const Matrix rows = detail::jacobi_rows(kLegendre, 0, n, y) *
                        legendre_image_scale(basis.mu, n).asDiagonal();
    return {DiffOrder::mu, rows * basis.coeffs, to_vector(y)};
}

DiffMatrix frac_deriv1p_matrix(const FracBasis& basis, std::span<const double> y) {
    const int n = basis.size();
    const Matrix rows = detail::jacobi_deriv_rows(kLegendre, 0, n, y) *
                        legendre_image_scale(basis.mu, n).asDiagonal();
    return {DiffOrder::one_plus_mu, rows * basis.coeffs, to_vector(y)};
}

} // namespace fsc
