#include "fsc/orthopoly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fsc/errors.hpp"

namespace fsc {

void JacobiParams::validate() const {
    if (!(alpha > -1.0) || !(beta > -1.0)) {
        throw ParameterError("Jacobi parameters must satisfy alpha > -1 and beta > -1 (got alpha=" +
                             std::to_string(alpha) + ", beta=" + std::to_string(beta) + ")");
    }
}

void jacobi_eval_all(const JacobiParams& params, int nmax, double x, double* out) {
    params.validate();
    if (nmax < 0) {
        throw ParameterError("jacobi_eval_all: nmax must be non-negative");
    }
    const double a = params.alpha;
    const double b = params.beta;
    out[0] = 1.0;
    if (nmax == 0) {
        return;
    }
    out[1] = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    const double ab = a + b;
    const double a2b2 = a * a - b * b;
    for (int n = 1; n < nmax; ++n) {
        const double dn = n;
        const double c = 2.0 * dn + ab;
        const double denom = 2.0 * (dn + 1.0) * (dn + ab + 1.0) * c;
        const double lin = (c + 1.0) * (c * (c + 2.0) * x + a2b2);
        const double prev = 2.0 * (dn + a) * (dn + b) * (c + 2.0);
        out[n + 1] = (lin * out[n] - prev * out[n - 1]) / denom;
    }
}

std::vector<double> jacobi_eval_all(const JacobiParams& params, int nmax, double x) {
    if (nmax < 0) {
        throw ParameterError("jacobi_eval_all: nmax must be non-negative");
    }
    std::vector<double> out(static_cast<std::size_t>(nmax) + 1);
    jacobi_eval_all(params, nmax, x, out.data());
    return out;
}

double jacobi_eval(const JacobiParams& params, int n, double x) {
    params.validate();
    if (n < 0) {
        throw ParameterError("jacobi_eval: degree must be non-negative");
    }
    if (n == 0) {
        return 1.0;
    }
    // Same recurrence as jacobi_eval_all, keeping only two terms.
    const double a = params.alpha;
    const double b = params.beta;
    const double ab = a + b;
    const double a2b2 = a * a - b * b;
    double p0 = 1.0;
    double p1 = (a + 1.0) + 0.5 * (ab + 2.0) * (x - 1.0);
    for (int k = 1; k < n; ++k) {
        const double dk = k;
        const double c = 2.0 * dk + ab;
        const double denom = 2.0 * (dk + 1.0) * (dk + ab + 1.0) * c;
        const double p2 = ((c + 1.0) * (c * (c + 2.0) * x + a2b2) * p1 -
                           2.0 * (dk + a) * (dk + b) * (c + 2.0) * p0) /
                          denom;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double jacobi_deriv(const JacobiParams& params, int n, double x) {
    params.validate();
    if (n < 0) {
        throw ParameterError("jacobi_deriv: degree must be non-negative");
    }
    if (n == 0) {
        return 0.0;
    }
    const JacobiParams shifted{params.alpha + 1.0, params.beta + 1.0};
    return 0.5 * (n + params.alpha + params.beta + 1.0) * jacobi_eval(shifted, n - 1, x);
}

double jacobi_at_one(const JacobiParams& params, int n) {
    params.validate();
    if (n < 0) {
        throw ParameterError("jacobi_at_one: degree must be non-negative");
    }
    // binom(n+a, n) = Gamma(n+a+1) / (Gamma(n+1) Gamma(a+1)); all arguments positive.
    return std::exp(log_gamma(n + params.alpha + 1.0) - log_gamma(n + 1.0) -
                    log_gamma(params.alpha + 1.0));
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double log_gamma_lanczos(double x) {
    // Valid for x >= 0.5.
    const double z = x - 1.0;
    double sum = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("log_gamma: argument must be a positive finite number (got " +
                          std::to_string(x) + ")");
    }
    if (x == 1.0 || x == 2.0) {
        return 0.0;
    }
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x), with sin(pi x) > 0 on (0, 1/2).
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
               log_gamma_lanczos(1.0 - x);
    }
    return log_gamma_lanczos(x);
}

double gamma_ratio(double num, double den) {
    return gamma_ratio_offset(den, num - den);
}

double gamma_ratio_offset(double x, double a) {
    if (!(x > 0.0) || !(x + a > 0.0) || !std::isfinite(x) || !std::isfinite(a)) {
        throw DomainError("gamma_ratio: arguments must be positive and finite (got x=" +
                          std::to_string(x) + ", a=" + std::to_string(a) + ")");
    }
    if (a == 0.0) {
        return 1.0;
    }
    // Shift up until the Stirling series converges to double precision.
    constexpr double kStirlingMin = 12.0;
    double prod = 1.0;
    while (std::min(x, x + a) < kStirlingMin) {
        prod *= x / (x + a);
        x += 1.0;
    }
    // lnGamma(x+a) - lnGamma(x) from Stirling's series, differenced term by term.
    constexpr std::array<double, 8> kStirling{
        1.0 / 12.0,  -1.0 / 360.0,     1.0 / 1260.0, -1.0 / 1680.0,
        1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
    };
    double diff = (x - 0.5) * std::log1p(a / x) + a * std::log(x + a) - a;
    const double inv_xa = 1.0 / (x + a);
    const double inv_x = 1.0 / x;
    double pa = inv_xa;
    double px = inv_x;
    for (double c : kStirling) {
        diff += c * (pa - px);
        pa *= inv_xa * inv_xa;
        px *= inv_x * inv_x;
    }
    return prod * std::exp(diff);
}

} // namespace fsc
