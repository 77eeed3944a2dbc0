#include "etaq/exactformula.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "etaq/arith.hpp"
#include "etaq/bessel.hpp"
#include "etaq/multiplier.hpp"
#include "etaq/parallel.hpp"

namespace etaq {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// Relative accuracy assumed for a single Bessel evaluation.
constexpr double kBesselRelError = 1e-12;

void require_positive_n(i64 n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}

i64 modulus_of(ExactCase which) {
    return which == ExactCase::one ? constants::kModulusCase1 : constants::kModulusCase2;
}

BesselOrder order_of(ExactCase which) {
    return which == ExactCase::one ? BesselOrder::three_halves : BesselOrder::one;
}

// Prefactor in front of the k-sum.
double prefactor(ExactCase which, i64 n) {
    const double nd = static_cast<double>(n);
    if (which == ExactCase::one) return 2.0 * std::pow(3.0, 0.75) * pi / std::pow(8.0 * nd - 3.0, 0.75);
    return 2.0 * std::sqrt(7.0) * pi / std::sqrt(24.0 * nd - 7.0);
}

// Bessel argument times k.
double bessel_numerator(ExactCase which, i64 n) {
    const double nd = static_cast<double>(n);
    if (which == ExactCase::one) return pi * std::sqrt(3.0 * (8.0 * nd - 3.0)) / 2.0;
    return pi * std::sqrt(7.0 * (24.0 * nd - 7.0)) / 6.0;
}

RootOfUnity case_multiplier(ExactCase which, i64 h, i64 k) {
    return which == ExactCase::one ? chi1(h, k) : chi2_closed(h, k);
}

// Inner sums S(r) = sum_h chi(h,k) e(-r h/k) for the residues r in `wanted`
// (ascending h), real parts only.
struct InnerSums {
    std::vector<double> by_residue;  // indexed by r mod k, filled where needed
    i64 units = 0;
};

InnerSums inner_sums(ExactCase which, i64 k, const std::vector<char>& wanted) {
    std::vector<i64> hs;
    std::vector<RootOfUnity> exact;
    for (i64 h = 1; h <= k; ++h) {
        if (gcd(h, k) != 1) continue;
        hs.push_back(h % k);
        exact.push_back(case_multiplier(which, h % k, k));
    }
    InnerSums out;
    out.units = static_cast<i64>(hs.size());
    out.by_residue.assign(static_cast<std::size_t>(k), 0.0);
    const auto residues = std::count(wanted.begin(), wanted.end(), 1);
    if (residues <= 4) {
        // Few residues: combine the phases exactly before a single cosine each.
        for (i64 r = 0; r < k; ++r) {
            if (!wanted[static_cast<std::size_t>(r)]) continue;
            double s = 0.0;
            for (std::size_t i = 0; i < hs.size(); ++i) {
                s += std::cos((exact[i] * RootOfUnity::from_turns(-static_cast<__int128>(r) * hs[i], k)).angle());
            }
            out.by_residue[static_cast<std::size_t>(r)] = s;
        }
        return out;
    }
    std::vector<std::complex<double>> chis(exact.size());
    for (std::size_t i = 0; i < exact.size(); ++i) chis[i] = exact[i].value();
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(k));
    for (i64 j = 0; j < k; ++j) roots[static_cast<std::size_t>(j)] = RootOfUnity::from_turns(-j, k).value();
    for (i64 r = 0; r < k; ++r) {
        if (!wanted[static_cast<std::size_t>(r)]) continue;
        double s = 0.0;
        for (std::size_t i = 0; i < hs.size(); ++i) {
            const std::complex<double>& w = roots[static_cast<std::size_t>((r * hs[i]) % k)];
            s += chis[i].real() * w.real() - chis[i].imag() * w.imag();
        }
        out.by_residue[static_cast<std::size_t>(r)] = s;
    }
    return out;
}

// Contribution of one k to every n in [n_lo, n_hi], plus its roundoff share.
struct KContribution {
    std::vector<double> value;
    std::vector<double> roundoff;
};

KContribution k_contribution(ExactCase which, i64 k, i64 n_lo, i64 n_hi) {
    const std::size_t count = static_cast<std::size_t>(n_hi - n_lo + 1);
    std::vector<char> wanted(static_cast<std::size_t>(k), 0);
    for (i64 n = n_lo; n <= n_hi && n - n_lo < k; ++n) wanted[static_cast<std::size_t>(mod_floor(n, k))] = 1;
    const InnerSums sums = inner_sums(which, k, wanted);
    const BesselOrder order = order_of(which);
    KContribution out{std::vector<double>(count), std::vector<double>(count)};
    const double kd = static_cast<double>(k);
    for (std::size_t i = 0; i < count; ++i) {
        const i64 n = n_lo + static_cast<i64>(i);
        const double bessel = bessel_i(order, bessel_numerator(which, n) / kd);
        const double scale = prefactor(which, n) / kd * bessel;
        out.value[i] = scale * sums.by_residue[static_cast<std::size_t>(mod_floor(n, k))];
        const double magnitude = scale * static_cast<double>(sums.units);
        out.roundoff[i] = magnitude * (kBesselRelError + 8.0 * static_cast<double>(sums.units) * kEps);
    }
    return out;
}

double c1_tail_unscaled(i64 n, i64 J) {
    // Terms k = 5j with j > J are bounded by I_{3/2}(X/j) each.
    const double X = pi * std::sqrt(3.0 * (8.0 * static_cast<double>(n) - 3.0)) / 10.0;
    const i64 jx = static_cast<i64>(std::floor(X));
    double large = 0.0;
    for (i64 j = J + 1; j <= jx; ++j) large += bessel_i(BesselOrder::three_halves, X / static_cast<double>(j));
    const double j0 = static_cast<double>(std::max(J, jx));
    // I_{3/2}(x) <= 2^{-1/2} x^{3/2}/Gamma(5/2) for x < 1, then sum_{j > j0} j^{-3/2} <= 2/sqrt(j0).
    const double small = std::pow(2.0, -0.5) / std::tgamma(2.5) * std::pow(X, 1.5) * 2.0 / std::sqrt(j0);
    return large + small;
}

double c2_tail_unscaled(i64 n, i64 J) {
    // Terms k = 4j with j > J are bounded by |A_{4j}(n)|/(4j) I_1(Y/j).
    const double Y = pi * std::sqrt(7.0 * (24.0 * static_cast<double>(n) - 7.0)) / 24.0;
    const i64 jy = static_cast<i64>(std::floor(Y));
    double large = 0.0;
    for (i64 j = J + 1; j <= jy; ++j) {
        const double jd = static_cast<double>(j);
        large += a_k_bound(4 * j) / (4.0 * jd) * bessel_i(BesselOrder::one, Y / jd);
    }
    const double j0 = static_cast<double>(std::max(J, jy));
    // I_1(x) <= x and d(96 j) <= 12 d(j) give terms (3 sqrt14 / 2) Y d(j) j^{-3/2};
    // partial summation with sum_{j <= t} d(j) <= t (ln t + 1) bounds the tail by 3 (ln j0 + 3)/sqrt(j0).
    const double small = 1.5 * std::sqrt(14.0) * Y * 3.0 * (std::log(j0) + 3.0) / std::sqrt(j0);
    return large + small;
}

double tail_bound(ExactCase which, i64 n, i64 K) {
    const i64 J = K / modulus_of(which);
    if (J < 1) return std::numeric_limits<double>::infinity();
    const double raw = which == ExactCase::one ? c1_tail_unscaled(n, J) : c2_tail_unscaled(n, J);
    return prefactor(which, n) * raw;
}

i64 resolve_K(ExactCase which, i64 n, std::optional<i64> K) {
    const i64 m = modulus_of(which);
    if (K) {
        if (*K < m) throw std::invalid_argument("exact series: K must be at least " + std::to_string(m));
        return *K - *K % m;
    }
    return default_truncation(which, n).value_or(kMaxTruncation - kMaxTruncation % m);
}

}  // namespace

std::optional<i64> FormulaResult::rounded() const {
    if (!(tail_bound + roundoff < 0.5)) return std::nullopt;
    return static_cast<i64>(std::llround(value));
}

double c1_tail_bound(i64 n, i64 K) {
    require_positive_n(n, "c1_tail_bound");
    return tail_bound(ExactCase::one, n, K);
}

double c2_tail_bound(i64 n, i64 K) {
    require_positive_n(n, "c2_tail_bound");
    return tail_bound(ExactCase::two, n, K);
}

std::optional<i64> default_truncation(ExactCase which, i64 n, double target) {
    require_positive_n(n, "default_truncation");
    const i64 m = modulus_of(which);
    // The tail bound is nonincreasing in K, so bisect on the multiplier.
    i64 lo = 1, hi = kMaxTruncation / m;
    if (!(tail_bound(which, n, hi * m) < target)) return std::nullopt;
    while (lo < hi) {
        const i64 mid = lo + (hi - lo) / 2;
        if (tail_bound(which, n, mid * m) < target) hi = mid;
        else lo = mid + 1;
    }
    return lo * m;
}

std::vector<FormulaResult> exact_series(ExactCase which, i64 n_lo, i64 n_hi, std::optional<i64> K, unsigned threads) {
    require_positive_n(n_lo, "exact_series");
    if (n_hi < n_lo) throw std::invalid_argument("exact_series: empty range");
    const i64 m = modulus_of(which);
    const std::size_t count = static_cast<std::size_t>(n_hi - n_lo + 1);
    std::vector<FormulaResult> results(count);
    i64 K_max = 0;
    for (std::size_t i = 0; i < count; ++i) {
        FormulaResult& r = results[i];
        r.n = n_lo + static_cast<i64>(i);
        r.K = resolve_K(which, r.n, K);
        r.terms_used = r.K / m;
        r.tail_bound = tail_bound(which, r.n, r.K);
        r.converged = r.tail_bound < kDefaultTailTarget;
        K_max = std::max(K_max, r.K);
    }
    threads = resolve_threads(threads);
    // Blocks of k evaluated in parallel, accumulated in ascending k.
    const i64 block = std::max<i64>(16, 4 * static_cast<i64>(threads));
    for (i64 j_start = 1; j_start * m <= K_max; j_start += block) {
        const i64 j_end = std::min(j_start + block - 1, K_max / m);
        std::vector<KContribution> parts(static_cast<std::size_t>(j_end - j_start + 1));
        parallel_for(parts.size(), threads, [&](std::size_t idx) {
            parts[idx] = k_contribution(which, (j_start + static_cast<i64>(idx)) * m, n_lo, n_hi);
        });
        for (std::size_t idx = 0; idx < parts.size(); ++idx) {
            const i64 k = (j_start + static_cast<i64>(idx)) * m;
            for (std::size_t i = 0; i < count; ++i) {
                if (k > results[i].K) continue;
                results[i].value += parts[idx].value[i];
                results[i].roundoff += parts[idx].roundoff[i];
            }
        }
    }
    for (auto& r : results) r.roundoff += static_cast<double>(r.terms_used) * kEps * std::abs(r.value);
    return results;
}

FormulaResult c1_exact(i64 n, std::optional<i64> K) {
    require_positive_n(n, "c1_exact");
    return exact_series(ExactCase::one, n, n, K, 1).front();
}

FormulaResult c2_exact(i64 n, std::optional<i64> K) {
    require_positive_n(n, "c2_exact");
    return exact_series(ExactCase::two, n, n, K, 1).front();
}

double exact_series_term(ExactCase which, i64 n, i64 k) {
    require_positive_n(n, "exact_series_term");
    if (k <= 0 || k % modulus_of(which) != 0) throw std::domain_error("exact_series_term: k must be a positive multiple of the modulus");
    return k_contribution(which, k, n, n).value.front();
}

// ---------------------------------------------------------------------------
// Case 1

double m1(i64 n) {
    require_positive_n(n, "m1");
    const double nd = static_cast<double>(n);
    const double X = pi * std::sqrt(3.0 * (8.0 * nd - 3.0)) / 10.0;
    return 4.0 * std::pow(3.0, 0.75) * pi / (5.0 * std::pow(8.0 * nd - 3.0, 0.75)) *
           bessel_i(BesselOrder::three_halves, X) *
           (std::cos(4.0 * pi * nd / 5.0) - std::cos(2.0 * pi * (nd - 2.0) / 5.0));
}

double m1_lower(i64 n) {
    require_positive_n(n, "m1_lower");
    if (mod_floor(n, 5) > 2) throw std::domain_error("m1_lower: requires n = 0, 1, 2 (mod 5)");
    const double nd = static_cast<double>(n);
    const double X = pi * std::sqrt(3.0 * (8.0 * nd - 3.0)) / 10.0;
    return 4.0 * std::pow(3.0, 0.75) * pi / (5.0 * std::pow(8.0 * nd - 3.0, 0.75)) *
           bessel_i(BesselOrder::three_halves, X) * (1.0 - std::cos(2.0 * pi / 5.0));
}

double e1_upper(i64 n) {
    require_positive_n(n, "e1_upper");
    const double d = 8.0 * static_cast<double>(n) - 3.0;
    return 4.0 * std::sqrt(6.0) * std::pow(pi, 1.5) / (5.0 * std::pow(d, 0.25)) +
           std::pow(3.0, 1.25) * pi * pi / (5.0 * std::pow(d, 0.25)) *
               bessel_i(BesselOrder::three_halves, pi * std::sqrt(d) / 20.0);
}

double e1_upper_corrected(i64 n) {
    require_positive_n(n, "e1_upper_corrected");
    const double d = 8.0 * static_cast<double>(n) - 3.0;
    return 4.0 * std::sqrt(6.0) * std::pow(pi, 1.5) / (5.0 * std::pow(d, 0.25)) +
           std::pow(3.0, 1.25) * pi * pi / (5.0 * std::pow(d, 0.25)) *
               bessel_i(BesselOrder::three_halves, pi * std::sqrt(3.0 * d) / 20.0);
}

double thm1_bessel_margin(i64 n) { return 1.0 - e1_upper(n) / m1_lower(n); }

std::optional<double> thm1_corrected_margin(i64 n) {
    if (n < 1 || mod_floor(n, 5) > 2) return std::nullopt;
    // Both bounds grow like exp of a multiple of sqrt(n); compare scaled values.
    const double d = 8.0 * static_cast<double>(n) - 3.0;
    const double X = pi * std::sqrt(3.0 * d) / 10.0;
    const double m = 4.0 * std::pow(3.0, 0.75) * pi / (5.0 * std::pow(d, 0.75)) *
                     bessel_i_scaled(BesselOrder::three_halves, X) * (1.0 - std::cos(2.0 * pi / 5.0));
    const double e = 4.0 * std::sqrt(6.0) * std::pow(pi, 1.5) / (5.0 * std::pow(d, 0.25)) * std::exp(-X) +
                     std::pow(3.0, 1.25) * pi * pi / (5.0 * std::pow(d, 0.25)) *
                         bessel_i_scaled(BesselOrder::three_halves, X / 2.0) * std::exp(-X / 2.0);
    return 1.0 - e / m;
}

std::optional<double> thm1_inequality(i64 n) {
    if (n < constants::kValidityCase1) return std::nullopt;
    const double d = 8.0 * static_cast<double>(n) - 3.0;
    const double lhs = std::pow(d, 0.75) / (1.0 - std::cos(2.0 * pi / 5.0)) * 2.0 * std::sqrt(2.0 * pi) *
                       std::pow(3.0, 0.25) * std::exp(-pi / 10.0 * std::sqrt(3.0 * d)) *
                       (std::sqrt(2.0 * pi) / std::pow(3.0, 0.25) +
                        std::sqrt(7.5) * std::pow(d, -0.25) * std::exp(pi / 20.0 * std::sqrt(d)));
    return 1.0 - lhs;
}

// ---------------------------------------------------------------------------
// Case 2

double m2(i64 n) {
    require_positive_n(n, "m2");
    const double d = 24.0 * static_cast<double>(n) - 7.0;
    return std::sqrt(7.0) * pi * std::cos(pi / 2.0 * (static_cast<double>(n) + 0.25)) / std::sqrt(d) *
           bessel_i(BesselOrder::one, pi * std::sqrt(7.0 * d) / 24.0);
}

double thm2_bessel_margin(i64 n) {
    require_positive_n(n, "thm2_bessel_margin");
    const double d = 24.0 * static_cast<double>(n) - 7.0;
    const double Y = pi * std::sqrt(7.0 * d) / 24.0;
    const double c = std::cos(3.0 * pi / 8.0);
    // Scaled Bessel values keep the ratio finite for large n.
    const double i_full = bessel_i_scaled(BesselOrder::one, Y);
    const double i_half = bessel_i_scaled(BesselOrder::one, Y / 2.0);
    const double first = 7.0 * pi * constants::kZeta32Squared * std::sqrt(d) / (4.0 * std::sqrt(2.0) * c) *
                         std::exp(-Y) / i_full;
    const double second = 7.0 * pi * std::sqrt(d) / (2.0 * std::sqrt(2.0) * c) * (i_half / i_full) * std::exp(-Y / 2.0);
    return 1.0 - (first + second);
}

std::optional<double> thm2_inequality(i64 n) {
    if (n < constants::kValidityCase2) return std::nullopt;
    const double d = 24.0 * static_cast<double>(n) - 7.0;
    const double Y = pi * std::sqrt(7.0 * d) / 24.0;
    const double c = std::cos(3.0 * pi / 8.0);
    const double lhs = std::pow(7.0, 1.25) * std::pow(pi, 1.5) * constants::kZeta32Squared * std::pow(d, 0.75) /
                           (4.0 * std::sqrt(3.0) * c) * std::exp(-Y) +
                       14.0 * std::sqrt(2.0 * pi) * std::sqrt(d) / c * std::exp(-Y / 2.0);
    return 1.0 - lhs;
}

// ---------------------------------------------------------------------------
// Case 3

double alpha_n(i64 n) {
    const double nd = static_cast<double>(n);
    if (mod_floor(n, 3) != 0) return -2.0 * std::sin(2.0 * pi * nd / 3.0);
    return 2.0 * (std::sin(2.0 * pi / 9.0 * (4.0 - 2.0 * nd)) - std::sin(2.0 * pi / 9.0 * (5.0 - nd)) -
                  std::sin(2.0 * pi / 9.0 * (5.0 - 4.0 * nd)));
}

i64 ell_n(i64 n) { return mod_floor(n, 3) == 0 ? 4 : 2; }

C3Decomposition c3_decomposition(i64 n) {
    require_positive_n(n, "c3_decomposition");
    const double nd = static_cast<double>(n);
    const double s = std::sqrt(4.0 * nd - 1.0);
    const double g = static_cast<double>(gcd(n, 3));
    C3Decomposition out;
    out.n = n;
    out.main = 2.0 * pi / (3.0 * g) * alpha_n(n) * s * bessel_i(BesselOrder::one, pi * s / (3.0 * g));
    out.e3_bound = 4.0 * pi * nd / 3.0 * bessel_i(BesselOrder::one, pi * s / (3.0 * static_cast<double>(ell_n(n))));
    const double n32 = std::pow(nd, 1.5);
    out.en_bound = constants::kEn * n32;
    out.sum1_bound = constants::kSum1 * n32;
    out.sum32_bound = constants::kSum32 * n32;
    return out;
}

double m3_lower(i64 n) {
    require_positive_n(n, "m3_lower");
    const double s = std::sqrt(4.0 * static_cast<double>(n) - 1.0);
    if (mod_floor(n, 3) != 0) return 4.0 * pi / 3.0 * std::sin(2.0 * pi / 3.0) * s * bessel_i(BesselOrder::one, pi * s / 3.0);
    return 4.0 * pi / 3.0 * std::sin(pi / 9.0) * s * bessel_i(BesselOrder::one, pi * s / 9.0);
}

double thm3_bessel_margin(i64 n) {
    const C3Decomposition d = c3_decomposition(n);
    return 1.0 - (d.e3_bound + constants::kCombined * std::pow(static_cast<double>(n), 1.5)) / m3_lower(n);
}

std::optional<double> thm3_inequality(i64 n, double combined) {
    const double nd = static_cast<double>(n);
    const double d = 4.0 * nd - 1.0;
    const double s = std::sqrt(d);
    const double q = std::pow(d, 0.25);
    const double tail = combined * std::pow(nd, 1.5);
    if (mod_floor(n, 3) != 0) {
        if (n < constants::kValidityCase3Coprime) return std::nullopt;
        const double lhs = std::sqrt(3.0) * std::exp(-pi / 3.0 * s) / (std::sqrt(pi) * std::sin(2.0 * pi / 3.0) * q) *
                           (8.0 * nd * std::exp(pi / 6.0 * s) / (std::sqrt(3.0) * q) + tail);
        return 1.0 - lhs;
    }
    if (n < constants::kValidityCase3Multiple) return std::nullopt;
    const double lhs = std::exp(-pi / 9.0 * s) / (std::sqrt(pi) * std::sin(pi / 9.0) * q) *
                       (8.0 * std::sqrt(2.0) * nd * std::exp(pi / 12.0 * s) / (std::sqrt(3.0) * q) + tail);
    return 1.0 - lhs;
}

std::complex<double> c3_hsum(i64 k, i64 n) {
    if (k <= 0 || k % 3 != 0) throw std::domain_error("c3_hsum: requires 3 | k");
    std::complex<double> s = 0.0;
    for (i64 h = 1; h <= k; ++h) {
        if (gcd(h, k) != 1) continue;
        s += (chi3(h % k, k) * RootOfUnity::from_turns(-static_cast<__int128>(n) * (h % k), k)).value();
    }
    return s;
}

double bessel_integral_error(i64 n, i64 k) {
    require_positive_n(n, "bessel_integral_error");
    if (k < 1 || k * k > n) throw std::domain_error("bessel_integral_error: requires 1 <= k <= sqrt(n)");
    const double kd = static_cast<double>(k);
    return constants::kBesselIntegral * std::pow(static_cast<double>(n), 1.5) / (kd * kd);
}

double bessel_integral_discrepancy(i64 n, i64 k) {
    bessel_integral_error(n, k);  // validates the range
    using namespace std::complex_literals;
    const double nd = static_cast<double>(n), kd = static_cast<double>(k);
    const double A = pi * (4.0 * nd - 1.0) / (2.0 * kd);
    const double B = pi / (2.0 * kd);
    const double target_abs = 2.0 * pi * std::sqrt(4.0 * nd - 1.0) * bessel_i(BesselOrder::one, pi * std::sqrt(4.0 * nd - 1.0) / kd);
    const std::complex<double> target = 1i * target_abs;
    // 8-point Gauss-Legendre nodes and weights on [-1, 1].
    static constexpr double nodes[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363};
    static constexpr double weights[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
    const auto integrand = [&](double y) {
        const std::complex<double> z(kd / nd, y);
        return std::exp(A * z + B / z) / (z * z) * 1i;  // dz = i dy
    };
    const i64 N = static_cast<i64>(std::floor(std::sqrt(nd)));
    double worst = 0.0;
    for (const FareyArc& arc : farey_arcs(N)) {
        if (arc.k != k) continue;
        const double lo = -kd * arc.theta_left.to_double();
        const double hi = kd * arc.theta_right.to_double();
        const int panels = 4000;
        const double width = (hi - lo) / panels;
        std::complex<double> total = 0.0;
        for (int p = 0; p < panels; ++p) {
            const double mid = lo + (p + 0.5) * width;
            std::complex<double> part = 0.0;
            for (int j = 0; j < 4; ++j) {
                const double off = 0.5 * width * nodes[j];
                part += weights[j] * (integrand(mid - off) + integrand(mid + off));
            }
            total += 0.5 * width * part;
        }
        worst = std::max(worst, std::abs(total - target));
    }
    return worst;
}

namespace {

std::complex<double> euler_product(std::complex<double> q) {
    // (q; q)_infinity, truncated once |q|^j is negligible.
    const double r = std::abs(q);
    if (r >= 1.0) throw std::domain_error("euler_product: |q| must be < 1");
    std::complex<double> prod = 1.0, qj = q;
    double rj = r;
    for (int j = 1; j < 1'000'000 && rj > 1e-18; ++j) {
        prod *= (1.0 - qj);
        qj *= q;
        rj *= r;
    }
    return prod;
}

}  // namespace

double eta_ratio_magnitude(std::complex<double> w) {
    // P = 1/(q;q), so P(w)^5/P(w^3)^9 = (w^3;w^3)^9/(w;w)^5.
    return std::abs(std::pow(euler_product(w * w * w), 9) / std::pow(euler_product(w), 5));
}

double f3_deviation(std::complex<double> q) {
    if (q == 0.0) return 0.0;
    const std::complex<double> f3 = std::pow(euler_product(q), 9) / std::pow(euler_product(q * q * q), 5);
    return std::abs(f3 - 1.0) * std::pow(std::abs(q), -0.25);
}

double f3_deviation_majorant() {
    // (P(r)^9 P(r^3)^5 - 1) r^{-1/4} is increasing in r, so the supremum on
    // r <= e^{-pi} is its value at r = e^{-pi}.
    const double r = std::exp(-pi);
    const double p1 = 1.0 / euler_product(r).real();
    const double p3 = 1.0 / euler_product(r * r * r).real();
    return (std::pow(p1, 9) * std::pow(p3, 5) - 1.0) * std::pow(r, -0.25);
}

}  // namespace etaq
