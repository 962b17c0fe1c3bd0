#pragma once

#include <span>
#include <vector>

#include "fsc/linsolve.hpp"
#include "fsc/quadrature.hpp"

namespace fsc {

/// mu-fractional Lagrange basis on nodes x_1..x_N.
///
/// Each cardinal function is stored through its Jacobi expansion
///   l_j(x) = (x+1)^mu * sum_n coeffs(n, j) P_n^{(-mu,mu)}(x),  n = 0..N-1,
/// so that l_j(x_i) = delta_ij.
struct FracBasis {
    double mu = 0.0;
    std::vector<double> nodes;
    Matrix coeffs;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(nodes.size()); }
    [[nodiscard]] JacobiParams params() const noexcept { return {-mu, mu}; }
};

enum class DiffOrder { value, first_derivative, mu, one_plus_mu };

/// Rows indexed by evaluation points y_i, columns by basis functions j.
struct DiffMatrix {
    DiffOrder order = DiffOrder::value;
    Matrix entries;
    std::vector<double> y_points;
};

/// Coefficients from the generalized Vandermonde system
/// (x_i+1)^mu P_{n}^{(-mu,mu)}(x_i) alpha = I, solved by one LU factorization.
/// Nodes need not be sorted but must be distinct and lie in (-1, 1].
FracBasis build_basis(double mu, std::span<const double> x_nodes);

/// Closed-form coefficients when x are the Gauss-Jacobi(-mu, mu) nodes.
FracBasis build_basis_gj(double mu, const QuadratureRule& rule);

/// [l_j(y_i)]
DiffMatrix value_matrix(const FracBasis& basis, std::span<const double> y);

/// [d/dx l_j(y_i)]; every y_i must be strictly inside (-1, 1).
DiffMatrix deriv1_matrix(const FracBasis& basis, std::span<const double> y);

/// [RL D^mu l_j(y_i)] = sum_n coeffs(n, j) Gamma(n+1+mu)/Gamma(n+1) P_n(y_i).
DiffMatrix frac_deriv_matrix(const FracBasis& basis, std::span<const double> y);

/// [RL D^{1+mu} l_j(y_i)], the y-derivative of frac_deriv_matrix.
/// A one-node basis yields a zero matrix.
DiffMatrix frac_deriv1p_matrix(const FracBasis& basis, std::span<const double> y);

} // namespace fsc
