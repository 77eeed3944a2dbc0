#pragma once

// Coefficient formulas for the three eta-quotients
//   c1 = C_{1^1 5^-2}  (exact Bessel/Kloosterman series, order 3/2),
//   c2 = C_{1^1 2^2 4^-3}  (exact series, order 1),
//   c3 = C_{1^9 3^-5}  (circle-method main term plus explicit error bounds),
// with the main-term lower bounds, error-term upper bounds and the elementary
// inequalities whose positivity certifies the sign of each coefficient.

#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

namespace etaq {

using i64 = std::int64_t;

/// Explicit constants of the three cases.
namespace constants {
inline constexpr i64 kModulusCase1 = 5;
inline constexpr i64 kModulusCase2 = 4;
inline constexpr i64 kModulusCase3 = 3;

/// zeta(3/2)^2
inline constexpr double kZeta32Squared = 2.6123753486854883 * 2.6123753486854883;
inline constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;
/// d(96)
inline constexpr i64 kDivisorFactorCase2 = 12;

/// Integral-to-Bessel approximation constant: |J - 2 pi i sqrt(4n-1) I_1| <= C n^{3/2}/k^2.
inline constexpr double kBesselIntegral = 4588024.0;
/// |E(n)| <= (2294012 pi^2 / 27) n^{3/2}.
inline constexpr double kEn = 2294012.0 * std::numbers::pi * std::numbers::pi / 27.0;
/// |Sigma_1| <= 757137 n^{3/2}.
inline constexpr double kSum1 = 757137.0;
/// |Sigma_{3,2}| <= 131 n^{3/2}.
inline constexpr double kSum32 = 131.0;
/// |P(q1^{1/3})^5 / P(q1)^9| <= 72.
inline constexpr double kEtaRatioBound = 72.0;
/// |f3(q1) - 1| |q1|^{-1/4} <= 2/3.
inline constexpr double kF3DeviationBound = 2.0 / 3.0;
/// Rounded-up sum of the three n^{3/2} constants used in the elementary inequalities.
inline constexpr double kCombined = 1595824.0;

/// Thresholds above which the elementary inequalities hold.
inline constexpr i64 kThresholdCase1 = 33;
inline constexpr i64 kThresholdCase2 = 99;
inline constexpr i64 kThresholdCase3Coprime = 89;
inline constexpr i64 kThresholdCase3Multiple = 1173;

/// Lowest n at which each elementary inequality is a valid bound.
inline constexpr i64 kValidityCase1 = 6;
inline constexpr i64 kValidityCase2 = 4;
inline constexpr i64 kValidityCase3Coprime = 6;
inline constexpr i64 kValidityCase3Multiple = 19;
}  // namespace constants

/// Certification comparisons require margin > kCertificationSlack * |scale|.
inline constexpr double kCertificationSlack = 1e-9;

/// Truncation cap for the exact series and the default tail target.
inline constexpr i64 kMaxTruncation = 10000;
inline constexpr double kDefaultTailTarget = 0.25;

enum class ExactCase { one = 1, two = 2 };

struct FormulaResult {
    i64 n = 0;
    double value = 0.0;       // partial sum over k <= K
    double tail_bound = 0.0;  // bound on |sum over k > K|
    double roundoff = 0.0;    // bound on floating error of the partial sum
    i64 terms_used = 0;       // number of k values summed
    i64 K = 0;
    bool converged = false;   // tail_bound < target at K <= kMaxTruncation

    /// Nearest integer, when tail_bound + roundoff < 1/2.
    std::optional<i64> rounded() const;
};

double c1_tail_bound(i64 n, i64 K);
double c2_tail_bound(i64 n, i64 K);

/// Least multiple of the case modulus whose tail bound is below target, or
/// std::nullopt if none exists up to kMaxTruncation.
std::optional<i64> default_truncation(ExactCase which, i64 n, double target = kDefaultTailTarget);

/// Partial sums for every n in [n_lo, n_hi]. A missing K uses the default
/// truncation (capped at kMaxTruncation). Summation order is fixed: ascending
/// k, and ascending h within k, independent of the worker count.
std::vector<FormulaResult> exact_series(ExactCase which, i64 n_lo, i64 n_hi, std::optional<i64> K = std::nullopt,
                                        unsigned threads = 1);

FormulaResult c1_exact(i64 n, std::optional<i64> K = std::nullopt);
FormulaResult c2_exact(i64 n, std::optional<i64> K = std::nullopt);

/// Term with a single k of the exact series (k a multiple of the modulus).
double exact_series_term(ExactCase which, i64 n, i64 k);

// Case 1 ----------------------------------------------------------------------

/// The k = 5 term of the c1 series.
double m1(i64 n);
/// Lower bound for |M1(n)|; requires n = 0, 1, 2 (mod 5).
double m1_lower(i64 n);
/// Elementary upper bound for |E1(n)|. Its Bessel argument pi sqrt(8n-3)/20
/// lacks the factor 3 under the root carried by the k = 10 term, and |E1(n)|
/// exceeds it from n = 177 on.
double e1_upper(i64 n);
/// Upper bound for |E1(n)| with the k = 10 argument pi sqrt(3(8n-3))/20.
double e1_upper_corrected(i64 n);
/// 1 - e1_upper(n)/m1_lower(n).
double thm1_bessel_margin(i64 n);
/// 1 - e1_upper_corrected(n)/m1_lower(n); std::nullopt for n = 3, 4 (mod 5).
std::optional<double> thm1_corrected_margin(i64 n);
/// 1 - LHS of the elementary inequality; std::nullopt for n < 6.
std::optional<double> thm1_inequality(i64 n);

// Case 2 ----------------------------------------------------------------------

/// The k = 4 term of the c2 series.
double m2(i64 n);
/// 1 - LHS of the Bessel-ratio inequality bounding |E2|/|M2|.
double thm2_bessel_margin(i64 n);
/// 1 - LHS of the elementary inequality; std::nullopt for n < 4.
std::optional<double> thm2_inequality(i64 n);

// Case 3 ----------------------------------------------------------------------

double alpha_n(i64 n);
i64 ell_n(i64 n);

struct C3Decomposition {
    i64 n = 0;
    double main = 0.0;         // M3(n)
    double e3_bound = 0.0;     // |E3(n)|
    double en_bound = 0.0;     // |E(n)|
    double sum1_bound = 0.0;   // |Sigma_1|
    double sum32_bound = 0.0;  // |Sigma_{3,2}|

    double error_total() const { return e3_bound + en_bound + sum1_bound + sum32_bound; }
};

C3Decomposition c3_decomposition(i64 n);

/// Lower bound for |M3(n)| used by the inequalities.
double m3_lower(i64 n);

/// 1 - (error_total / m3_lower) with the combined constant; branch chosen by gcd(n, 3).
double thm3_bessel_margin(i64 n);

/// 1 - LHS of the branch-appropriate elementary inequality; std::nullopt below
/// the branch validity floor (n < 6 for 3 !| n, n < 19 for 3 | n). `combined`
/// is the constant in front of n^{3/2}.
std::optional<double> thm3_inequality(i64 n, double combined = constants::kCombined);

/// sum_{h mod k}^* chi3(h,k) e(-h n / k), with 3 | k.
std::complex<double> c3_hsum(i64 k, i64 n);

/// 4588024 n^{3/2} / k^2; requires 1 <= k <= sqrt(n).
double bessel_integral_error(i64 n, i64 k);

/// Largest |J - 2 pi i sqrt(4n-1) I_1(pi sqrt(4n-1)/k)| over the Farey arcs of
/// order floor(sqrt n) with denominator k, the integral J evaluated by
/// Gauss-Legendre quadrature along Re z = k/n. Diagnostic only.
double bessel_integral_discrepancy(i64 n, i64 k);

/// |P(w)^5 / P(w^3)^9| with w a cube root of q1.
double eta_ratio_magnitude(std::complex<double> w);
/// |f3(q) - 1| |q|^{-1/4} with f3 = (q;q)^9/(q^3;q^3)^5.
double f3_deviation(std::complex<double> q);

/// Bound for |f3(q1) - 1| |q1|^{-1/4} on |q1| <= e^{-pi} obtained from the
/// coefficientwise majorant P(|q|)^9 P(|q|^3)^5 - 1.
double f3_deviation_majorant();

}  // namespace etaq
