#include "doctest.h"

#include <etaq/bessel.hpp>

#include <cmath>
#include <numbers>

using namespace etaq;

namespace {

constexpr BesselOrder kOrders[] = {BesselOrder::one, BesselOrder::three_halves};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("I_kappa against the standard library") {
    for (const auto o : kOrders) {
        const double nu = kappa_value(o);
        for (int i = 1; i <= 400; ++i) {
            const double x = 0.1 * i;
            CAPTURE(x);
            CHECK(rel(bessel_i(o, x), std::cyl_bessel_i(nu, x)) < 1e-12);
            CHECK(rel(bessel_i_scaled(o, x), std::exp(-x) * std::cyl_bessel_i(nu, x)) < 1e-12);
        }
    }
    CHECK(bessel_i(BesselOrder::one, 0.0) == 0.0);
    CHECK(std::isfinite(bessel_i_scaled(BesselOrder::one, 1e6)));
}

TEST_CASE("I_1 series and asymptotic branches meet at the crossover") {
    const double x = kBesselI1Crossover;
    CHECK(rel(bessel_i_series(BesselOrder::one, x), bessel_i1_asymptotic(x)) < 1e-12);
    for (double y = 15.0; y <= 200.0; y += 5.0) CHECK(rel(bessel_i1_asymptotic(y), std::cyl_bessel_i(1.0, y)) < 1e-12);
}

TEST_CASE("I_{3/2} closed form") {
    for (int i = 1; i <= 200; ++i) {
        const double x = 0.1 * i;
        const double closed = std::sqrt(2.0 / (std::numbers::pi * x)) * (std::cosh(x) - std::sinh(x) / x);
        CHECK(rel(bessel_i(BesselOrder::three_halves, x), closed) < 1e-10);
        CHECK(rel(bessel_i_series(BesselOrder::three_halves, x), closed) < 1e-10);
    }
}

TEST_CASE("upper and lower bounds bracket I_kappa") {
    for (const auto o : kOrders) {
        const double nu = kappa_value(o);
        for (int i = 1; i < 200; ++i) {
            const double x = i / 200.0;
            CHECK(std::cyl_bessel_i(nu, x) <= bound_small(o, x));
        }
        for (int i = 0; i < 200; ++i) {
            const double x = 1.0 + 0.5 * i;
            CHECK(std::cyl_bessel_i(nu, x) <= bound_large(o, x));
        }
        for (int i = 0; i < 200; ++i) {
            const double x = 3.0 + 0.5 * i;
            CHECK(std::cyl_bessel_i(nu, x) >= bound_lower(o, x));
        }
    }
}
