#pragma once

#include <span>
#include <vector>

#include "fsc/fracops.hpp"
#include "fsc/linsolve.hpp"
#include "fsc/quadrature.hpp"

namespace fsc {

enum class BirkhoffCase {
    /// nu in (0, 1): match RL D^nu at N points.
    order_below_one,
    /// nu = 1 + mu in (1, 2): p(1) = 0 plus RL D^nu at N-1 interior points.
    order_one_to_two,
};

/// Birkhoff interpolation basis B_j for the RL fractional derivative.
///
/// Case order_below_one:  B_j(x) = (x+1)^nu  sum_n coeffs(n,j) P_n^{(-nu,nu)}(x), n = 0..M-1.
/// Case order_one_to_two: B_j(x) = (x+1)^mu  sum_n coeffs(n,j) (P_{n+1}^{(-mu,mu)}(x) - P_{n+1}^{(-mu,mu)}(1)),
///                        mu = nu - 1, n = 0..M-1.
/// In both cases RL D^nu B_j(y_i) = delta_ij, M = y_nodes.size().
struct BirkhoffBasis {
    double nu = 0.0;
    BirkhoffCase kind = BirkhoffCase::order_below_one;
    std::vector<double> y_nodes;
    Matrix coeffs;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(y_nodes.size()); }
    /// Exponent of the (x+1) prefactor: nu in case 1, nu - 1 in case 2.
    [[nodiscard]] double mu() const noexcept;
};

/// Solves sum_n coeffs(n,j) Gamma(n+nu)/Gamma(n) P_{n-1}(y_i) = delta_ij.
BirkhoffBasis birkhoff_basis_case1(double nu, std::span<const double> y);

/// Closed form for Gauss-Legendre y-nodes.
BirkhoffBasis birkhoff_basis_case1_gl(double nu, const QuadratureRule& legendre_rule);

/// Solves sum_n coeffs(n,j) Gamma(n+1+mu)/Gamma(n+1) (n+1)/2 P_{n-1}^{(1,1)}(y_i) = delta_ij.
BirkhoffBasis birkhoff_basis_case2(double nu, std::span<const double> y);

/// Closed form for Gauss-Jacobi(1,1) y-nodes.
BirkhoffBasis birkhoff_basis_case2_gj(double nu, const QuadratureRule& jacobi11_rule);

/// [B_j(x_i)] for either case.
Matrix birkhoff_matrix(const BirkhoffBasis& basis, std::span<const double> x);

/// [d/dx B_j(x_i)]; x strictly inside (-1, 1).
Matrix birkhoff_deriv_matrix(const BirkhoffBasis& basis, std::span<const double> x);

/// [RL D^nu B_j(y_i)] evaluated through the Legendre / Jacobi(1,1) image;
/// equals the identity at the basis' own y-nodes.
Matrix birkhoff_frac_deriv_matrix(const BirkhoffBasis& basis, std::span<const double> y);

} // namespace fsc
