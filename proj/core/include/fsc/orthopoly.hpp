#pragma once

#include <vector>

namespace fsc {

/// Exponents of the Jacobi weight (1-x)^alpha (1+x)^beta.
struct JacobiParams {
    double alpha = 0.0;
    double beta = 0.0;

    /// Throws ParameterError unless alpha > -1 and beta > -1.
    void validate() const;

    friend bool operator==(const JacobiParams&, const JacobiParams&) = default;
};

inline constexpr JacobiParams kLegendre{0.0, 0.0};

/// P_0^{(a,b)}(x), ..., P_nmax^{(a,b)}(x) by the three-term recurrence.
std::vector<double> jacobi_eval_all(const JacobiParams& params, int nmax, double x);

/// Fills `out` (size nmax+1) without allocating.
void jacobi_eval_all(const JacobiParams& params, int nmax, double x, double* out);

/// P_n^{(a,b)}(x).
double jacobi_eval(const JacobiParams& params, int n, double x);

/// d/dx P_n^{(a,b)}(x) = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}(x).
double jacobi_deriv(const JacobiParams& params, int n, double x);

/// P_n^{(a,b)}(1) = binom(n+a, n), evaluated through log-gamma.
double jacobi_at_one(const JacobiParams& params, int n);

/// Natural log of Gamma(x) for x > 0 (Lanczos, g = 7, nine coefficients).
double log_gamma(double x);

/// Gamma(num) / Gamma(den) for positive arguments, safe for large arguments.
double gamma_ratio(double num, double den);

/// Gamma(x + a) / Gamma(x) with x > 0 and x + a > 0. Keeps full relative
/// accuracy for large x because x + a is never formed inside a log-gamma.
double gamma_ratio_offset(double x, double a);

} // namespace fsc
