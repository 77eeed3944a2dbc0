#include "doctest.h"

#include <etaq/arith.hpp>
#include <etaq/exactformula.hpp>
#include <etaq/qseries.hpp>

#include <cmath>

using namespace etaq;

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

TEST_CASE("contour integral matches its Bessel approximation") {
    for (const auto& [n, k] : {std::pair<i64, i64>{50, 3}, {100, 6}, {100, 3}, {400, 9}}) {
        CAPTURE(n);
        CAPTURE(k);
        const double disc = bessel_integral_discrepancy(n, k);
        CHECK(std::isfinite(disc));
        CHECK(disc <= bessel_integral_error(n, k));
    }
}

TEST_CASE("eta ratio stays below 72 on the arcs") {
    // |P(w)^5 / P(w^3)^9| for |w| <= e^{-pi/3}; sample the boundary circle.
    const double r = std::exp(-pi / 3.0);
    double worst = 0.0;
    for (int j = 0; j < 720; ++j) {
        const auto w = std::polar(r, 2.0 * pi * j / 720.0);
        worst = std::max(worst, eta_ratio_magnitude(w));
    }
    MESSAGE("max eta ratio on |w| = e^{-pi/3}: " << worst);
    CHECK(worst <= constants::kEtaRatioBound);
}

TEST_CASE("f3 deviation bound on |q| <= e^{-pi}") {
    // |f3(q) - 1| |q|^{-1/4} <= 2/3 is claimed for every |q| < e^{-pi}. The
    // factor |q|^{-1/4} reaches e^{pi/4} there, not e^{pi/24}, and the claim
    // fails near the boundary.
    const double r = std::exp(-pi) * (1.0 - 1e-12);
    double worst = 0.0;
    for (int j = 0; j < 720; ++j) worst = std::max(worst, f3_deviation(std::polar(r, 2.0 * pi * j / 720.0)));
    MESSAGE("max |f3(q)-1||q|^{-1/4} near |q| = e^{-pi}: " << worst);
    MESSAGE("majorant (P(r)^9 P(r^3)^5 - 1) r^{-1/4} at r = e^{-pi}: " << f3_deviation_majorant());
    CHECK(worst <= constants::kF3DeviationBound);
    CHECK(f3_deviation_majorant() <= constants::kF3DeviationBound);
}

TEST_CASE("f3 deviation majorant dominates the samples") {
    for (double t : {0.5, 0.9, 1.0 - 1e-9}) {
        const double r = std::exp(-pi) * t;
        for (int j = 0; j < 360; ++j) {
            CHECK(f3_deviation(std::polar(r, 2.0 * pi * j / 360.0)) <= f3_deviation_majorant() * (1 + 1e-12));
        }
    }
}

TEST_CASE("E1 bound at pi sqrt(8n-3)/20 against the exact error") {
    // |E1(n)| = |C(n) - M1(n)| from the exact coefficients. The elementary bound
    // evaluates its Bessel term at pi sqrt(8n-3)/20; the k = 10 term itself
    // sits at pi sqrt(3(8n-3))/20.
    const auto c = expand(EtaQuotientSpec::parse("1^1,5^-2"), 400);
    i64 first_excess = 0, excesses = 0;
    for (i64 n = 6; n <= 400; ++n) {
        const double e1 = std::abs(c[static_cast<std::size_t>(n)].get_d() - m1(n));
        if (e1 > e1_upper(n)) {
            if (excesses++ == 0) first_excess = n;
        }
    }
    MESSAGE("n <= 400 with |E1(n)| above the elementary bound: " << excesses << ", first at n = " << first_excess);
    CHECK(excesses == 0);
}
