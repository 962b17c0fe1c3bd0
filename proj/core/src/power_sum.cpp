#include "fsc/power_sum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fsc/errors.hpp"
#include "fsc/orthopoly.hpp"

namespace fsc {

GeneralizedPowerSum::GeneralizedPowerSum(std::vector<PowerTerm> terms) : terms_(std::move(terms)) {
    for (const auto& t : terms_) {
        if (!(t.sigma > -1.0) || !std::isfinite(t.coeff)) {
            throw DomainError("power sum exponents must exceed -1 (got " + std::to_string(t.sigma) +
                              ")");
        }
    }
    normalize();
}

void GeneralizedPowerSum::normalize() {
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const PowerTerm& l, const PowerTerm& r) { return l.sigma < r.sigma; });
    std::vector<PowerTerm> merged;
    merged.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!merged.empty() && merged.back().sigma == t.sigma) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [](const PowerTerm& t) { return t.coeff == 0.0; });
    terms_ = std::move(merged);
}

int GeneralizedPowerSum::exp_truncation_order() {
    // Smallest K with 2^{K+1}/(K+1)! < 1e-16 (x+1 <= 2 on the interval).
    int k = 0;
    double next = 2.0;
    while (!(next < 1e-16)) {
        ++k;
        next *= 2.0 / (k + 1);
    }
    return k;
}

GeneralizedPowerSum GeneralizedPowerSum::exp_shifted() {
    const int order = exp_truncation_order();
    std::vector<PowerTerm> terms;
    terms.reserve(static_cast<std::size_t>(order) + 1);
    double inv_factorial = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            inv_factorial /= k;
        }
        terms.push_back({inv_factorial, static_cast<double>(k)});
    }
    return GeneralizedPowerSum(std::move(terms));
}

double GeneralizedPowerSum::coefficient(double sigma) const noexcept {
    for (const auto& t : terms_) {
        if (t.sigma == sigma) {
            return t.coeff;
        }
    }
    return 0.0;
}

double GeneralizedPowerSum::operator()(double x) const {
    const double base = x + 1.0;
    double sum = 0.0;
    for (const auto& t : terms_) {
        sum += t.coeff * std::pow(base, t.sigma);
    }
    return sum;
}

GeneralizedPowerSum GeneralizedPowerSum::derivative() const {
    std::vector<PowerTerm> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.sigma == 0.0) {
            continue;
        }
        const double sigma = t.sigma - 1.0;
        if (!(sigma > -1.0)) {
            throw DomainError("power sum derivative: exponent " + std::to_string(sigma) +
                              " is not integrable");
        }
        out.push_back({t.coeff * t.sigma, sigma});
    }
    return GeneralizedPowerSum(std::move(out));
}

GeneralizedPowerSum& GeneralizedPowerSum::operator+=(const GeneralizedPowerSum& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    normalize();
    return *this;
}

GeneralizedPowerSum& GeneralizedPowerSum::operator*=(double scale) {
    for (auto& t : terms_) {
        t.coeff *= scale;
    }
    normalize();
    return *this;
}

GeneralizedPowerSum rl_power_rule(double nu, const GeneralizedPowerSum& f) {
    if (!(nu > 0.0)) {
        throw ParameterError("rl_power_rule: order must be positive");
    }
    std::vector<PowerTerm> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        const double shifted = t.sigma + 1.0 - nu;
        if (shifted <= 0.0 && shifted == std::round(shifted)) {
            continue; // 1/Gamma pole: the derivative of this term vanishes
        }
        const double sigma = t.sigma - nu;
        if (!(sigma > -1.0)) {
            throw DomainError("rl_power_rule: term (x+1)^" + std::to_string(t.sigma) +
                              " maps to non-integrable exponent " + std::to_string(sigma));
        }
        out.push_back({t.coeff * gamma_ratio_offset(shifted, nu), sigma});
    }
    return GeneralizedPowerSum(std::move(out));
}

} // namespace fsc
