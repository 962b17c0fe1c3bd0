#pragma once

#include <Eigen/Dense>

namespace fsc {

/// Dense real matrix used for every collocation and integration matrix.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// X solving A X = B by LU with partial pivoting.
/// Throws SingularMatrixError when a pivot magnitude falls below 1e-300.
Matrix lu_solve(const Matrix& a, const Matrix& b);

/// Explicit inverse through the same factorization (B = I).
Matrix lu_inverse(const Matrix& a);

/// Spectral condition number sigma_max / sigma_min from a full SVD.
/// Returns +infinity when sigma_min == 0.
double cond2(const Matrix& a);

enum class IterStatus { converged, max_iterations, breakdown };

const char* to_string(IterStatus status) noexcept;

struct IterReport {
    Vector solution;
    /// Half-steps count as 0.5: convergence after the first half of iteration k reports k - 0.5.
    double iterations = 0.0;
    /// ||b - A x|| / ||b|| for the returned solution.
    double relative_residual = 0.0;
    IterStatus status = IterStatus::max_iterations;

    [[nodiscard]] bool converged() const noexcept { return status == IterStatus::converged; }
};

/// Unpreconditioned BiCGSTAB from x0 = 0 with fixed shadow residual r0.
///
/// The recursive residual is tested after each half-step; when it drops below
/// tol * ||b|| the true residual is recomputed and must also satisfy the test.
/// On non-convergence the iterate with the smallest residual seen is returned.
/// `maxit < 0` selects maxit = dimension.
IterReport bicgstab(const Matrix& a, const Vector& b, double tol, int maxit = -1);

} // namespace fsc
