#include "doctest.h"
#include "pkenum/asymptotics.hpp"
#include "pkenum/errors.hpp"
#include "pkenum/structures.hpp"

using namespace pkenum;

TEST_CASE("exponents and rho") {
    CHECK(subexp_exponent(4) == mpq_class(21, 2));
    CHECK(subexp_exponent(5) == 18);
    CHECK(subexp_exponent(2) == mpq_class(3, 2));
    CHECK(rho(4) == mpq_class(1, 6));
}

TEST_CASE("growth rates") {
    const std::vector<std::string> expected = {"6.52900", "8.64830", "10.71759", "12.76349", "14.79631"};
    for (int k = 4; k <= 8; ++k) {
        const auto r = solve_gamma(k, 4);
        CHECK(r.growth_rate.to_fixed(5) == expected[k - 4]);
        CHECK(r.residual.to_double() < 1e-12);
        CHECK(mpq_class(r.gamma_lower) <= r.gamma.to_rational());
        CHECK(r.gamma.to_rational() <= r.gamma_upper);
        CHECK_FALSE(r.extrapolated);
        CHECK_FALSE(r.theta2_reaches_rho);
    }
    CHECK(solve_gamma(10, 4).extrapolated);
}

TEST_CASE("growth rate grows as the constraints loosen") {
    for (int k = 3; k <= 6; ++k) {
        const double g4 = k > 3 ? solve_gamma(k, 4).growth_rate.to_double() : 0.0;
        const double g3 = solve_gamma(k, 3).growth_rate.to_double();
        const double g2 = solve_gamma(k, 2).growth_rate.to_double();
        CHECK(g4 < g3);
        CHECK(g3 < g2);
        CHECK(g2 < 2.0 * (k - 1) + 1.0);
    }
}

TEST_CASE("precision changes stay inside the interval width") {
    const auto a = ratio_diagnostic(4, 60, 70, {60, 1e-12});
    const auto b = ratio_diagnostic(4, 60, 70, {90, 1e-12});
    for (int n = 60; n <= 70; ++n) {
        const double va = a.at(n).value(), vb = b.at(n).value();
        CHECK(std::abs(va - vb) / va < 1e-12);
    }
}

TEST_CASE("insufficient precision is reported") {
    CHECK_THROWS_AS(ratio_diagnostic(4, 140, 150, {20, 1e-40}), PrecisionError);
}

TEST_CASE("asymptotic estimate tracks the counts") {
    const auto sing = solve_gamma(4, 4);
    const auto counts = t4_inclusion_exclusion(4, 120).values;
    const auto d = ratio_diagnostic(4, counts, 100, 120, sing);
    const Real c(d.at(120).lower);
    const Real est = asymptotic_estimate(sing, 120, c);
    const double ratio = est.to_double() / counts[120].get_d();
    CHECK(ratio == doctest::Approx(1.0).epsilon(1e-9));
    const double step = asymptotic_estimate(sing, 121, c).to_double() / est.to_double();
    CHECK(step == doctest::Approx(sing.growth_rate.to_double()).epsilon(0.1));
}
