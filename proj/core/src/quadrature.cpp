#include "fsc/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fsc/errors.hpp"

namespace fsc {

NodeSet::NodeSet(std::vector<double> points) : points_(std::move(points)) {
    if (points_.empty()) {
        throw ParameterError("NodeSet: at least one point is required");
    }
    if (!(points_.front() > -1.0) || !(points_.back() <= 1.0)) {
        throw ParameterError("NodeSet: points must lie in (-1, 1]");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (!(points_[i] > points_[i - 1])) {
            throw ParameterError("NodeSet: points must be strictly increasing");
        }
    }
}

double jacobi_weight_integral(const JacobiParams& params) {
    params.validate();
    const double a = params.alpha;
    const double b = params.beta;
    return std::exp((a + b + 1.0) * std::numbers::ln2 + log_gamma(a + 1.0) + log_gamma(b + 1.0) -
                    log_gamma(a + b + 2.0));
}

namespace {

constexpr int kMaxNewtonSteps = 100;
constexpr double kNewtonTolerance = 1e-15;
constexpr int kPolishSteps = 8;

struct PolishValue {
    long double p;
    long double dp;
};

// Extended-precision recurrence used only to polish roots and form weights:
// close to x = +-1 the weight depends on 1 - x^2, which a double node resolves
// only to about 1e-16 / (1 - |x|) relative accuracy.
long double jacobi_ld(long double a, long double b, int n, long double x) {
    long double prev = 1.0L;
    if (n == 0) {
        return prev;
    }
    long double cur = (a + 1.0L) + 0.5L * (a + b + 2.0L) * (x - 1.0L);
    for (int k = 2; k <= n; ++k) {
        const long double s = 2.0L * k + a + b;
        const long double next = ((s - 1.0L) * (s * (s - 2.0L) * x + a * a - b * b) * cur -
                                  2.0L * (k + a - 1.0L) * (k + b - 1.0L) * s * prev) /
                                 (2.0L * k * (k + a + b) * (s - 2.0L));
        prev = cur;
        cur = next;
    }
    return cur;
}

PolishValue jacobi_pair_ld(long double a, long double b, int n, long double x) {
    const long double p = jacobi_ld(a, b, n, x);
    const long double dp = 0.5L * (n + a + b + 1.0L) * jacobi_ld(a + 1.0L, b + 1.0L, n - 1, x);
    return {p, dp};
}

} // namespace

QuadratureRule gauss_jacobi(int n, const JacobiParams& params) {
    params.validate();
    if (n < 1) {
        throw ParameterError("gauss_jacobi: n must be at least 1");
    }
    const double a = params.alpha;
    const double b = params.beta;

    QuadratureRule rule;
    rule.params = params;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));

    // 2^{a+b+1} Gamma(n+a+1) Gamma(n+b+1) / (Gamma(n+a+b+1) n!)
    const double scale = std::exp2(a + b + 1.0) * gamma_ratio_offset(n + 1.0, a) /
                         gamma_ratio_offset(n + b + 1.0, a);
    const double angle_den = n + 0.5 * (a + b + 1.0);

    for (int k = 0; k < n; ++k) {
        // Szego-type angle estimate, ascending from -1.
        double x = -std::cos(std::numbers::pi * (k + 0.75 + 0.5 * b) / angle_den);
        if (k > 0 && x <= rule.nodes[k - 1]) {
            x = rule.nodes[k - 1] + 1e-3 * (1.0 - rule.nodes[k - 1]);
        }
        double dp = 0.0;
        bool converged = false;
        for (int step = 0; step < kMaxNewtonSteps; ++step) {
            const double p = jacobi_eval(params, n, x);
            dp = jacobi_deriv(params, n, x);
            double deflate = 0.0;
            for (int i = 0; i < k; ++i) {
                deflate += 1.0 / (x - rule.nodes[i]);
            }
            const double delta = p / (dp - p * deflate);
            x -= delta;
            if (std::abs(delta) <= kNewtonTolerance) {
                converged = true;
                break;
            }
        }
        if (!converged || !(std::abs(x) < 1.0)) {
            throw NumericalFailure("gauss_jacobi: Newton iteration failed for node " +
                                   std::to_string(k) + " of " + std::to_string(n));
        }
        rule.nodes[k] = x;
    }
    const long double la = a;
    const long double lb = b;
    for (int k = 0; k < n; ++k) {
        long double x = rule.nodes[k];
        PolishValue v = jacobi_pair_ld(la, lb, n, x);
        for (int step = 0; step < kPolishSteps; ++step) {
            const long double delta = v.p / v.dp;
            x -= delta;
            v = jacobi_pair_ld(la, lb, n, x);
            if (std::abs(delta) <= 4.0L * std::numeric_limits<long double>::epsilon() * (1.0L - std::abs(x))) {
                break;
            }
        }
        rule.nodes[k] = static_cast<double>(x);
        rule.weights[k] = static_cast<double>(scale / ((1.0L - x) * (1.0L + x) * v.dp * v.dp));
    }
    for (int k = 1; k < n; ++k) {
        if (!(rule.nodes[k] > rule.nodes[k - 1])) {
            throw NumericalFailure("gauss_jacobi: nodes not strictly increasing (n=" +
                                   std::to_string(n) + ")");
        }
    }
    return rule;
}

QuadratureRule gauss_legendre(int n) { return gauss_jacobi(n, kLegendre); }

std::vector<double> chebyshev_lobatto(int n) {
    if (n < 2) {
        throw ParameterError("chebyshev_lobatto: N must be at least 2");
    }
    // -cos(j pi / N) == sin(pi (2j - N) / (2N)); the sine form is exactly odd in (2j - N).
    std::vector<double> x(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        x[j] = std::sin(std::numbers::pi * (2 * j - n) / (2.0 * n));
    }
    return x;
}

} // namespace fsc
