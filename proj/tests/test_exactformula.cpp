#include "doctest.h"

#include <etaq/bessel.hpp>
#include <etaq/exactformula.hpp>
#include <etaq/multiplier.hpp>
#include <etaq/qseries.hpp>

#include <cmath>

using namespace etaq;

namespace {

constexpr double pi = std::numbers::pi;

i64 coefficient(const IntSeries& s, i64 n) { return s[static_cast<std::size_t>(n)].get_si(); }

}  // namespace

TEST_CASE("c1 partial sums round to the expansion coefficients") {
    const auto c = expand(EtaQuotientSpec::parse("1^1,5^-2"), 60);
    const auto rows = exact_series(ExactCase::one, 1, 60);
    REQUIRE(rows.size() == 60);
    for (const auto& r : rows) {
        CAPTURE(r.n);
        CHECK(r.converged);
        CHECK(r.tail_bound < 0.5);
        REQUIRE(r.rounded().has_value());
        CHECK(*r.rounded() == coefficient(c, r.n));
    }
    CHECK(*c1_exact(5).rounded() == 3);
    CHECK(*c1_exact(3).rounded() == 0);
    CHECK(*c1_exact(1).rounded() == -1);
    CHECK_THROWS(c1_exact(0));
}

TEST_CASE("c2 partial sums approach the expansion coefficients") {
    // The tail bound does not certify these at any affordable K; the values
    // are compared by nearest integer only.
    const auto c = expand(EtaQuotientSpec::parse("1^1,2^2,4^-3"), 30);
    const auto rows = exact_series(ExactCase::two, 1, 30, 1000);
    for (const auto& r : rows) {
        CAPTURE(r.n);
        CHECK(std::abs(r.value - static_cast<double>(coefficient(c, r.n))) < 0.05);
    }
    CHECK(std::llround(c2_exact(3, 1000).value) == 2);
}

TEST_CASE("exact series do not depend on the worker count") {
    const auto a = exact_series(ExactCase::one, 40, 70, 500, 1);
    const auto b = exact_series(ExactCase::one, 40, 70, 500, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].value == b[i].value);
}

TEST_CASE("exact series inner sums agree with A_k") {
    // The k-th term of c2 is 2 sqrt7 pi / sqrt(24n-7) * A_k(n)/k * I_1(...).
    for (i64 k = 4; k <= 48; k += 4) {
        for (i64 n = 1; n <= 20; ++n) {
            const double d = 24.0 * static_cast<double>(n) - 7.0;
            const double want = 2.0 * std::sqrt(7.0) * pi / std::sqrt(d) * a_k(k, n).value / static_cast<double>(k) *
                                bessel_i(BesselOrder::one, pi * std::sqrt(7.0 * d) / (6.0 * static_cast<double>(k)));
            CHECK(exact_series_term(ExactCase::two, n, k) == doctest::Approx(want).epsilon(1e-9).scale(1.0));
        }
    }
}

TEST_CASE("tail bounds shrink as K grows") {
    for (i64 n : {1, 50, 300}) {
        double prev1 = c1_tail_bound(n, 5), prev2 = c2_tail_bound(n, 4);
        for (i64 K = 40; K <= 4000; K *= 2) {
            const double t1 = c1_tail_bound(n, K), t2 = c2_tail_bound(n, K);
            CHECK(t1 <= prev1);
            CHECK(t2 <= prev2);
            prev1 = t1;
            prev2 = t2;
        }
    }
    const auto K = default_truncation(ExactCase::one, 100);
    REQUIRE(K.has_value());
    CHECK(c1_tail_bound(100, *K) < kDefaultTailTarget);
}

TEST_CASE("main terms are the first exact-series terms") {
    for (i64 n = 1; n <= 200; ++n) {
        // The k = 5 term vanishes for n = 3, 4 (mod 5); compare on the Bessel scale.
        const double X = pi * std::sqrt(3.0 * (8.0 * static_cast<double>(n) - 3.0)) / 10.0;
        const double scale = bessel_i(BesselOrder::three_halves, X);
        CHECK(std::abs(m1(n) - exact_series_term(ExactCase::one, n, 5)) <= 1e-10 * scale);
        CHECK(m2(n) == doctest::Approx(exact_series_term(ExactCase::two, n, 4)).epsilon(1e-10));
    }
    CHECK(m1(10) > 0);
    CHECK(m1(11) < 0);
    CHECK(m2(4) > 0);
    CHECK(m2(5) < 0);
}

TEST_CASE("M1 lower bound and corrected E1 bound") {
    const auto c = expand(EtaQuotientSpec::parse("1^1,5^-2"), 400);
    for (i64 n = 6; n <= 400; ++n) {
        if (mod_floor(n, 5) >= 3) {
            CHECK_THROWS_AS(m1_lower(n), std::domain_error);
            CHECK_FALSE(thm1_corrected_margin(n).has_value());
            continue;
        }
        CAPTURE(n);
        CHECK(std::abs(m1(n)) >= m1_lower(n) * (1 - 1e-12));
        // E1 is the coefficient minus its k = 5 term.
        const double e1 = std::abs(c[static_cast<std::size_t>(n)].get_d() - m1(n));
        CHECK(e1 <= e1_upper_corrected(n));
        CHECK(*thm1_corrected_margin(n) == doctest::Approx(1.0 - e1_upper_corrected(n) / m1_lower(n)).epsilon(1e-9));
    }
    // The corrected margin is positive from the case 1 threshold on.
    for (i64 n = constants::kThresholdCase1; n <= 10000; ++n)
        if (mod_floor(n, 5) <= 2) CHECK(*thm1_corrected_margin(n) > 0);
}

TEST_CASE("inequalities turn positive at their thresholds") {
    CHECK(*thm1_inequality(constants::kThresholdCase1) > 0);
    CHECK(*thm2_inequality(constants::kThresholdCase2) > 0);
    CHECK(*thm2_inequality(98) < 0);
    CHECK(*thm3_inequality(constants::kThresholdCase3Coprime) > 0);
    CHECK(*thm3_inequality(88) < 0);
    CHECK(*thm3_inequality(constants::kThresholdCase3Multiple) > 0);
    CHECK(*thm3_inequality(1170) < 0);
    CHECK_FALSE(thm3_inequality(3).has_value());
    CHECK_FALSE(thm1_inequality(5).has_value());
}

TEST_CASE("alpha_n is the k = 9 multiplier sum") {
    for (i64 n = 0; n <= 60; ++n) {
        CHECK(std::abs(c3_hsum(3, n) - std::complex<double>(-2.0 * std::sin(2.0 * pi * n / 3.0), 0)) < 1e-12);
        CHECK(std::abs(c3_hsum(6, n) - std::complex<double>(-2.0 * std::sin(pi * n / 3.0), 0)) < 1e-12);
        if (n % 3 == 0) CHECK(std::abs(c3_hsum(9, n) - std::complex<double>(alpha_n(n), 0)) < 1e-12);
    }
    // Sign of alpha_n by n mod 9.
    const int want[9] = {1, -1, 1, -1, -1, 1, 1, -1, 1};
    for (i64 n = 1; n <= 90; ++n) CHECK((alpha_n(n) > 0 ? 1 : -1) == want[n % 9]);
    CHECK(alpha_n(1) == doctest::Approx(-2.0 * std::sin(2.0 * pi / 3.0)));
    CHECK(ell_n(6) == 4);
    CHECK(ell_n(7) == 2);
}

TEST_CASE("case 3 decomposition") {
    const auto d = c3_decomposition(9);
    CHECK(d.main > 0);
    CHECK(d.en_bound == doctest::Approx(constants::kEn * 27.0));
    CHECK(d.sum1_bound == doctest::Approx(constants::kSum1 * 27.0));
    CHECK(d.sum32_bound == doctest::Approx(constants::kSum32 * 27.0));
    CHECK(d.error_total() == doctest::Approx(d.e3_bound + d.en_bound + d.sum1_bound + d.sum32_bound));
    CHECK(m3_lower(9) <= std::abs(d.main) * (1 + 1e-12));
}

TEST_CASE("derived constants") {
    // E(n): 4588024/9 * zeta(2) = 2294012 pi^2 / 27.
    CHECK(constants::kBesselIntegral / 9.0 * constants::kZeta2 == doctest::Approx(constants::kEn));
    // Sigma_1: 3^{5/2} 144 e^{2 pi - 11 pi/36} zeta(2), rounded up.
    const double s1 = std::pow(3.0, 2.5) * 144.0 * std::exp(2.0 * pi - 11.0 * pi / 36.0) * constants::kZeta2;
    CHECK(s1 <= constants::kSum1);
    CHECK(constants::kSum1 - s1 < 1.0);
    // Combined tail constant.
    const double total = constants::kEn + constants::kSum1 + constants::kSum32;
    CHECK(total <= constants::kCombined);
    CHECK(constants::kCombined - total < 1.0);
    CHECK(constants::kZeta32Squared == doctest::Approx(2.612375348685488 * 2.612375348685488));
}

TEST_CASE("Bessel integral error bound") {
    CHECK(bessel_integral_error(100, 3) == doctest::Approx(4588024.0 * 1000.0 / 9.0));
    CHECK_THROWS_AS(bessel_integral_error(100, 11), std::domain_error);
}
