#pragma once

#include <vector>

namespace fsc {

/// c * (x+1)^sigma with sigma > -1.
struct PowerTerm {
    double coeff = 0.0;
    double sigma = 0.0;
};

/// Finite sum of generalized powers of (x+1), the function class closed under
/// the left-sided RL derivative with base point -1.
///
/// Terms are kept sorted by exponent with like exponents merged; terms whose
/// coefficient cancels to exactly zero are removed.
class GeneralizedPowerSum {
public:
    GeneralizedPowerSum() = default;
    explicit GeneralizedPowerSum(std::vector<PowerTerm> terms);

    /// Taylor series of exp(x+1) truncated at the first K with 2^{K+1}/(K+1)! < 1e-16.
    static GeneralizedPowerSum exp_shifted();

    /// Number of exp(x+1) terms kept by exp_shifted().
    static int exp_truncation_order();

    [[nodiscard]] const std::vector<PowerTerm>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }

    /// Coefficient of the (x+1)^sigma term, 0 when absent.
    [[nodiscard]] double coefficient(double sigma) const noexcept;

    [[nodiscard]] double operator()(double x) const;

    /// Term-wise d/dx.
    [[nodiscard]] GeneralizedPowerSum derivative() const;

    GeneralizedPowerSum& operator+=(const GeneralizedPowerSum& other);
    GeneralizedPowerSum& operator*=(double scale);

    friend GeneralizedPowerSum operator+(GeneralizedPowerSum lhs, const GeneralizedPowerSum& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend GeneralizedPowerSum operator*(double scale, GeneralizedPowerSum rhs) {
        rhs *= scale;
        return rhs;
    }

private:
    void normalize();

    std::vector<PowerTerm> terms_;
};

/// Left-sided RL derivative of order nu > 0 on [-1, x], term by term:
///   c (x+1)^s -> c Gamma(s+1)/Gamma(s+1-nu) (x+1)^{s-nu}.
/// Terms with s+1-nu a non-positive integer vanish. Throws DomainError when a
/// surviving term would have exponent <= -1.
GeneralizedPowerSum rl_power_rule(double nu, const GeneralizedPowerSum& f);

} // namespace fsc
