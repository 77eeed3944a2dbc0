#include "etaq/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace etaq {

namespace {

constexpr double pi = std::numbers::pi;

void require_nonnegative(double x, const char* who) {
    if (!(x >= 0.0)) throw std::domain_error(std::string(who) + ": x must be nonnegative");
}

// exp(-x) * ascending series, accumulated in scaled form to avoid overflow.
double scaled_series(double kappa, double x) {
    if (x == 0.0) return 0.0;
    const double half = 0.5 * x;
    // log of the leading term (x/2)^kappa / Gamma(kappa+1), shifted by -x.
    double term = std::exp(kappa * std::log(half) - std::lgamma(kappa + 1.0) - x);
    double sum = term;
    const double q = half * half;
    for (int m = 0; m < 10000; ++m) {
        term *= q / ((m + 1.0) * (m + 1.0 + kappa));
        sum += term;
        if (term < 1e-18 * sum && (m + 1.0) * (m + 1.0 + kappa) > q) break;
    }
    return sum;
}

// e^{-x} I_1(x) ~ (2 pi x)^{-1/2} sum_k t_k, t_k/t_{k-1} = ((2k-1)^2 - 4)/(8 k x).
double scaled_asymptotic(double x) {
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double next = term * (((2.0 * k - 1.0) * (2.0 * k - 1.0) - 4.0) / (8.0 * k * x));
        if (std::abs(next) >= std::abs(term)) break;
        term = next;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum / std::sqrt(2.0 * pi * x);
}

}  // namespace

double kappa_value(BesselOrder order) { return order == BesselOrder::one ? 1.0 : 1.5; }

double bessel_i_series(BesselOrder order, double x) {
    require_nonnegative(x, "bessel_i_series");
    if (x == 0.0) return 0.0;
    return scaled_series(kappa_value(order), x) * std::exp(x);
}

double bessel_i1_asymptotic(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_i1_asymptotic: x must be positive");
    return scaled_asymptotic(x) * std::exp(x);
}

double bessel_i_scaled(BesselOrder order, double x) {
    require_nonnegative(x, "bessel_i_scaled");
    if (x == 0.0) return 0.0;
    if (order == BesselOrder::three_halves) {
        if (x < 1.0) return scaled_series(1.5, x);
        // sqrt(2/(pi x)) (cosh x - sinh x / x), times e^{-x}.
        const double e2 = std::exp(-2.0 * x);
        return std::sqrt(2.0 / (pi * x)) * (0.5 * (1.0 + e2) - 0.5 * (1.0 - e2) / x);
    }
    if (x < kBesselI1Crossover) return scaled_series(1.0, x);
    return scaled_asymptotic(x);
}

double bessel_i(BesselOrder order, double x) {
    require_nonnegative(x, "bessel_i");
    if (x == 0.0) return 0.0;
    if (order == BesselOrder::three_halves && x >= 1.0) {
        return std::sqrt(2.0 / (pi * x)) * (std::cosh(x) - std::sinh(x) / x);
    }
    if (order == BesselOrder::one && x >= kBesselI1Crossover) return bessel_i1_asymptotic(x);
    return scaled_series(kappa_value(order), x) * std::exp(x);
}

double bound_small(BesselOrder order, double x) {
    if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("bound_small: requires 0 <= x < 1");
    const double kappa = kappa_value(order);
    return std::pow(2.0, 1.0 - kappa) * std::pow(x, kappa) / std::tgamma(kappa + 1.0);
}

double bound_large(BesselOrder, double x) {
    if (!(x >= 1.0)) throw std::domain_error("bound_large: requires x >= 1");
    return std::sqrt(2.0 / (pi * x)) * std::exp(x);
}

double bound_lower(BesselOrder, double x) {
    if (!(x >= 3.0)) throw std::domain_error("bound_lower: requires x >= 3");
    return std::exp(x) / (4.0 * std::sqrt(x));
}

}  // namespace etaq
