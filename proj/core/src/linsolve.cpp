#include "fsc/linsolve.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fsc/errors.hpp"

namespace fsc {

namespace {

constexpr double kPivotFloor = 1e-300;
constexpr double kBreakdownFloor = 1e-290;

Eigen::PartialPivLU<Matrix> factorize(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw UsageError("lu: matrix must be square (" + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ")");
    }
    Eigen::PartialPivLU<Matrix> lu(a);
    const auto diag = lu.matrixLU().diagonal();
    for (Eigen::Index i = 0; i < diag.size(); ++i) {
        if (!(std::abs(diag(i)) >= kPivotFloor)) {
            throw SingularMatrixError("lu: zero pivot at column " + std::to_string(i));
        }
    }
    return lu;
}

} // namespace

Matrix lu_solve(const Matrix& a, const Matrix& b) {
    if (b.rows() != a.rows()) {
        throw UsageError("lu_solve: right-hand side has " + std::to_string(b.rows()) +
                         " rows, expected " + std::to_string(a.rows()));
    }
    return factorize(a).solve(b);
}

Matrix lu_inverse(const Matrix& a) {
    return factorize(a).solve(Matrix::Identity(a.rows(), a.cols()));
}

double cond2(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw UsageError("cond2: matrix must be square");
    }
    if (a.size() == 0) {
        return 1.0;
    }
    Eigen::BDCSVD<Matrix> svd(a);
    const auto& s = svd.singularValues();
    const double smax = s(0);
    const double smin = s(s.size() - 1);
    if (smin == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return smax / smin;
}

const char* to_string(IterStatus status) noexcept {
    switch (status) {
    case IterStatus::converged:
        return "converged";
    case IterStatus::max_iterations:
        return "max-iterations";
    case IterStatus::breakdown:
        return "breakdown";
    }
    return "unknown";
}

IterReport bicgstab(const Matrix& a, const Vector& b, double tol, int maxit) {
    if (a.rows() != a.cols() || b.size() != a.rows()) {
        throw UsageError("bicgstab: dimension mismatch");
    }
    if (!(tol > 0.0)) {
        throw UsageError("bicgstab: tolerance must be positive");
    }
    const Eigen::Index n = a.rows();
    if (maxit < 0) {
        maxit = static_cast<int>(n);
    }

    IterReport report;
    report.solution = Vector::Zero(n);
    const double bnorm = b.norm();
    if (bnorm == 0.0) {
        report.status = IterStatus::converged;
        return report;
    }
    const double target = tol * bnorm;

    Vector x = Vector::Zero(n);
    Vector r = b;
    const Vector shadow = r;
    Vector p = Vector::Zero(n);
    Vector v = Vector::Zero(n);
    double rho_prev = 1.0;
    double alpha = 1.0;
    double omega = 1.0;

    Vector best_x = x;
    double best_res = bnorm;
    double best_iter = 0.0;

    auto finish = [&](const Vector& sol, double res, double iters, IterStatus status) {
        report.solution = sol;
        report.relative_residual = res / bnorm;
        report.iterations = iters;
        report.status = status;
        return report;
    };
    auto give_up = [&](IterStatus status) {
        const double true_res = (b - a * best_x).norm();
        return finish(best_x, true_res, best_iter, status);
    };

    for (int it = 1; it <= maxit; ++it) {
        const double rho = shadow.dot(r);
        if (!(std::abs(rho) >= kBreakdownFloor) || !std::isfinite(rho)) {
            return give_up(IterStatus::breakdown);
        }
        if (it == 1) {
            p = r;
        } else {
            const double beta = (rho / rho_prev) * (alpha / omega);
            p = r + beta * (p - omega * v);
        }
        v.noalias() = a * p;
        const double shadow_v = shadow.dot(v);
        if (!(std::abs(shadow_v) >= kBreakdownFloor) || !std::isfinite(shadow_v)) {
            return give_up(IterStatus::breakdown);
        }
        alpha = rho / shadow_v;

        // First half-step.
        const Vector x_half = x + alpha * p;
        Vector s = r - alpha * v;
        double res = s.norm();
        if (res <= target) {
            const Vector true_s = b - a * x_half;
            const double true_res = true_s.norm();
            if (true_res <= target) {
                return finish(x_half, true_res, it - 0.5, IterStatus::converged);
            }
            s = true_s;
            res = true_res;
        }
        if (res < best_res) {
            best_res = res;
            best_x = x_half;
            best_iter = it - 0.5;
        }

        // Second half-step.
        const Vector t = a * s;
        const double tt = t.squaredNorm();
        if (!(tt >= kBreakdownFloor) || !std::isfinite(tt)) {
            return give_up(IterStatus::breakdown);
        }
        omega = t.dot(s) / tt;
        x = x_half + omega * s;
        r = s - omega * t;
        res = r.norm();
        if (res <= target) {
            const Vector true_r = b - a * x;
            const double true_res = true_r.norm();
            if (true_res <= target) {
                return finish(x, true_res, it, IterStatus::converged);
            }
            r = true_r;
            res = true_res;
        }
        if (res < best_res) {
            best_res = res;
            best_x = x;
            best_iter = it;
        }
        if (!(std::abs(omega) >= kBreakdownFloor)) {
            return give_up(IterStatus::breakdown);
        }
        rho_prev = rho;
    }
    return give_up(IterStatus::max_iterations);
}

} // namespace fsc
