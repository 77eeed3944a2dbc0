#pragma once

// Modified Bessel functions I_1 and I_{3/2}, and the explicit upper/lower
// bounds that every error estimate is built from.

namespace etaq {

enum class BesselOrder {
    one,          // kappa = 1
    three_halves  // kappa = 3/2
};

double kappa_value(BesselOrder order);

/// I_kappa(x) for x >= 0, relative error around 1e-13.
double bessel_i(BesselOrder order, double x);

/// exp(-x) I_kappa(x); finite for every x >= 0.
double bessel_i_scaled(BesselOrder order, double x);

/// Ascending series sum_m (x/2)^{2m+kappa} / (m! Gamma(m+kappa+1)), summed to
/// convergence. Used on its own as an accuracy reference.
double bessel_i_series(BesselOrder order, double x);

/// Large-argument asymptotic expansion of I_1 (used for x >= 15).
double bessel_i1_asymptotic(double x);

/// 2^{1-kappa} x^kappa / Gamma(kappa+1) for 0 <= x < 1.
double bound_small(BesselOrder order, double x);

/// sqrt(2/(pi x)) e^x for x >= 1.
double bound_large(BesselOrder order, double x);

/// e^x / (4 sqrt(x)) for x >= 3.
double bound_lower(BesselOrder order, double x);

/// Crossover between the ascending series and the asymptotic expansion for I_1.
inline constexpr double kBesselI1Crossover = 15.0;

}  // namespace etaq
