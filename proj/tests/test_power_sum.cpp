#include <doctest.h>

#include <cmath>

#include "fsc/errors.hpp"
#include "fsc/power_sum.hpp"

using namespace fsc;

namespace {

// Gamma(x) for x > 0 by shifting the argument into [1, 2) and using std::tgamma there.
long double gamma_by_recurrence(long double x) {
    long double scale = 1.0L;
    while (x >= 2.0L) {
        x -= 1.0L;
        scale *= x;
    }
    while (x < 1.0L) {
        scale /= x;
        x += 1.0L;
    }
    return scale * std::tgamma(x);
}

} // namespace

TEST_CASE("terms are sorted, merged and pruned") {
    GeneralizedPowerSum s({{1.0, 2.0}, {3.0, 0.5}, {-1.0, 2.0}, {4.0, 0.5}});
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms()[0].sigma == 0.5);
    CHECK(s.coefficient(0.5) == 7.0);
    CHECK(s.coefficient(2.0) == 0.0);
    CHECK_THROWS_AS(GeneralizedPowerSum({{1.0, -1.0}}), DomainError);
}

TEST_CASE("exp_shifted") {
    const auto e = GeneralizedPowerSum::exp_shifted();
    const int k = GeneralizedPowerSum::exp_truncation_order();
    CHECK(static_cast<int>(e.terms().size()) == k + 1);
    CHECK(std::pow(2.0, k + 1) / std::tgamma(k + 2.0) < 1e-16);
    CHECK(std::pow(2.0, k) / std::tgamma(k + 1.0) >= 1e-16);
    for (double x = -1.0; x <= 1.0; x += 0.125) {
        CHECK(e(x) == doctest::Approx(std::exp(x + 1.0)).epsilon(1e-15));
    }
}

TEST_CASE("arithmetic and derivative") {
    GeneralizedPowerSum a({{2.0, 1.5}});
    GeneralizedPowerSum b({{1.0, 0.0}, {-2.0, 1.5}});
    const auto c = a + b;
    REQUIRE(c.terms().size() == 1);
    CHECK(c.coefficient(0.0) == 1.0);
    const auto d = 3.0 * a;
    CHECK(d.coefficient(1.5) == 6.0);
    const auto da = a.derivative();
    CHECK(da.coefficient(0.5) == 3.0);
    CHECK(GeneralizedPowerSum({{5.0, 0.0}}).derivative().empty());
    CHECK(a(0.0) == 2.0);
    CHECK(a(-1.0) == 0.0);
}

TEST_CASE("RL power rule") {
    const double sigma = 46.0 / 7.0;
    const auto r = rl_power_rule(0.8, GeneralizedPowerSum({{1.0, sigma}}));
    REQUIRE(r.terms().size() == 1);
    CHECK(r.terms()[0].sigma == doctest::Approx(sigma - 0.8).epsilon(1e-15));
    const long double ref = gamma_by_recurrence(53.0L / 7.0L) / gamma_by_recurrence(53.0L / 7.0L - 0.8L);
    CHECK(r.terms()[0].coeff == doctest::Approx(static_cast<double>(ref)).epsilon(1e-13));

    const auto lin = rl_power_rule(1.5, GeneralizedPowerSum({{1.0, 1.0}}));
    CHECK(lin.coefficient(-0.5) == doctest::Approx(1.0 / std::tgamma(0.5)).epsilon(1e-14));

    // Constants under an order below one give (x+1)^{-nu}/Gamma(1-nu).
    const auto c = rl_power_rule(0.3, GeneralizedPowerSum({{2.0, 0.0}}));
    CHECK(c.coefficient(-0.3) == doctest::Approx(2.0 / std::tgamma(0.7)).epsilon(1e-14));

    CHECK_THROWS_AS(rl_power_rule(1.9, GeneralizedPowerSum({{1.0, 0.0}})), DomainError);
    CHECK_THROWS_AS(rl_power_rule(0.0, GeneralizedPowerSum({{1.0, 1.0}})), ParameterError);

    // Gamma pole: D^1 of a constant vanishes, D^2 of (x+1) vanishes.
    CHECK(rl_power_rule(1.0, GeneralizedPowerSum({{1.0, 0.0}})).empty());
    CHECK(rl_power_rule(1.0, GeneralizedPowerSum({{1.0, 0.0}, {1.0, 2.0}})).coefficient(1.0) ==
          doctest::Approx(2.0).epsilon(1e-15));
}
