#include "etaq/multiplier.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace etaq {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon();

void require_coprime(i64 h, i64 k, const char* who) {
    if (k <= 0) throw std::invalid_argument(std::string(who) + ": k must be positive");
    if (gcd(h, k) != 1) {
        throw std::domain_error(std::string(who) + ": gcd(" + std::to_string(h) + ", " + std::to_string(k) + ") != 1");
    }
}

std::complex<double> partition_generating_function(std::complex<double> q) {
    // 1/prod (1 - q^j); stop once |q|^j no longer affects the product.
    const double r = std::abs(q);
    if (r >= 1.0) throw std::domain_error("partition_generating_function: |q| must be < 1");
    std::complex<double> prod = 1.0, qj = q;
    double rj = r;
    for (int j = 1; j < 1'000'000 && rj > 1e-18; ++j) {
        prod *= (1.0 - qj);
        qj *= q;
        rj *= r;
    }
    return 1.0 / prod;
}

}  // namespace

RootOfUnity omega_branch(OmegaBranch branch, i64 h, i64 k, i64 hprime) {
    const __int128 H = h, K = k, Hp = hprime;
    // Common part (k - 1/k)(2h - h' + h^2 h')/12 = (k^2 - 1)(...)/(12k).
    const __int128 common = (K * K - 1) * (2 * H - Hp + H * H * Hp);
    __int128 lead;
    int symbol;
    if (branch == OmegaBranch::h_odd) {
        if (h % 2 == 0) throw std::domain_error("omega_branch: h_odd branch needs odd h");
        lead = 3 * K * (2 - H * K - H);  // (2 - hk - h)/4 over 12k
        symbol = kronecker(-k, h);
    } else {
        if (k % 2 == 0) throw std::domain_error("omega_branch: k_odd branch needs odd k");
        lead = 3 * K * (K - 1);  // (k - 1)/4 over 12k
        symbol = kronecker(-h, k);
    }
    // exp(-pi i x) with x = (lead + common)/(12k) is -(lead + common)/(24k) turns.
    RootOfUnity r = RootOfUnity::from_turns(-(lead + common), 24 * K);
    if (symbol == -1) r *= RootOfUnity::minus_one();
    if (symbol == 0) throw std::logic_error("omega_branch: vanishing Kronecker symbol");
    return r;
}

RootOfUnity omega(i64 h, i64 k) {
    require_coprime(h, k, "omega");
    h = mod_floor(h, k);
    const i64 hp = h_prime(h, k);
    return omega_branch(h % 2 != 0 ? OmegaBranch::h_odd : OmegaBranch::k_odd, h, k, hp);
}

double omega_numeric_check(i64 h, i64 k, std::complex<double> z) {
    require_coprime(h, k, "omega_numeric_check");
    if (z.real() <= 0) throw std::domain_error("omega_numeric_check: Re(z) must be positive");
    using namespace std::complex_literals;
    constexpr double pi = std::numbers::pi;
    const i64 hr = mod_floor(h, k);
    const i64 hp = h_prime(hr, k);
    const double kd = static_cast<double>(k);
    const std::complex<double> q = std::exp(2.0 * pi * 1i * (static_cast<double>(hr) + 1i * z) / kd);
    const std::complex<double> q1 = std::exp(2.0 * pi * 1i * (static_cast<double>(hp) + 1i / z) / kd);
    const std::complex<double> lhs = partition_generating_function(q);
    const std::complex<double> rhs =
        omega(hr, k).value() * std::sqrt(z) * std::exp(pi / (12.0 * kd) * (1.0 / z - z)) * partition_generating_function(q1);
    return std::abs(lhs - rhs) / std::abs(lhs);
}

RootOfUnity chi1(i64 h, i64 k) {
    if (k % 5 != 0) throw std::domain_error("chi1: requires 5 | k");
    require_coprime(h, k, "chi1");
    return omega(h, k / 5).pow(2) / omega(h, k);
}

RootOfUnity chi2(i64 h, i64 k) {
    if (k % 4 != 0) throw std::domain_error("chi2: requires 4 | k");
    require_coprime(h, k, "chi2");
    return omega(h, k / 4).pow(3) / (omega(h, k) * omega(h, k / 2).pow(2));
}

RootOfUnity chi2_closed(i64 h, i64 k, i64 hprime) {
    if (k % 4 != 0) throw std::domain_error("chi2_closed: requires 4 | k");
    require_coprime(h, k, "chi2_closed");
    if (k <= 100000 && h >= 0 && h < 24 * k && hprime >= 0 && hprime < 24 * k) {
        // Every intermediate fits in 64 bits here.
        const i64 M = 8 * gcd(k, 3) * k;
        if (mod_floor(h * hprime + 1, M) != 0) {
            throw std::domain_error("chi2_closed: h' must satisfy h h' = -1 mod 8 gcd(k,3) k");
        }
        return RootOfUnity::from_turns((-5 * k * k / 2 + 7) * h - (5 * k * k / 4 + 7) * hprime, 24 * k);
    }
    const __int128 K = k, H = h, Hp = hprime;
    const __int128 M = 8 * gcd(k, 3) * K;
    if (((H * Hp + 1) % M + M) % M != 0) {
        throw std::domain_error("chi2_closed: h' must satisfy h h' = -1 mod 8 gcd(k,3) k");
    }
    // ((-5k^2/2 + 7) h - (5k^2/4 + 7) h') / (24k) turns.
    const __int128 num = (-5 * K * K / 2 + 7) * H - (5 * K * K / 4 + 7) * Hp;
    return RootOfUnity::from_turns(num, 24 * K);
}

RootOfUnity chi2_closed(i64 h, i64 k) {
    if (k % 4 != 0) throw std::domain_error("chi2_closed: requires 4 | k");
    require_coprime(h, k, "chi2_closed");
    return chi2_closed(h, k, h_prime(h, k, 8 * gcd(k, 3)));
}

RootOfUnity chi3(i64 h, i64 k) {
    if (k % 3 != 0) throw std::domain_error("chi3: requires 3 | k");
    require_coprime(h, k, "chi3");
    return omega(h, k / 3).pow(5) / omega(h, k).pow(9);
}

// ---------------------------------------------------------------------------
// Kloosterman sums

KloostermanTable::KloostermanTable(i64 k) : k_(k) {
    if (k <= 0) throw std::invalid_argument("KloostermanTable: modulus must be positive");
    cos_.resize(static_cast<std::size_t>(k));
    for (i64 j = 0; j < k; ++j) {
        // Evaluate at the representative nearest zero for symmetric rounding.
        const i64 jj = (2 * j > k) ? j - k : j;
        cos_[static_cast<std::size_t>(j)] = std::cos(2.0 * std::numbers::pi * static_cast<double>(jj) / static_cast<double>(k));
    }
    for (i64 h = 0; h < k; ++h) {
        if (gcd(h, k) != 1) continue;
        h_.push_back(h);
        hp_.push_back(h_prime(h, k));
    }
}

KloostermanValue KloostermanTable::sum(i64 n, i64 m) const {
    const i64 nr = mod_floor(n, k_), mr = mod_floor(m, k_);
    double s = 0.0;
    for (std::size_t i = 0; i < h_.size(); ++i) {
        s += cos_[static_cast<std::size_t>((nr * h_[i] + mr * hp_[i]) % k_)];
    }
    const double terms = static_cast<double>(h_.size());
    return {s, 4.0 * terms * kUnitRoundoff};
}

std::complex<double> KloostermanTable::complex_sum(i64 n, i64 m) const {
    std::complex<double> s = 0.0;
    const double kd = static_cast<double>(k_);
    for (std::size_t i = 0; i < h_.size(); ++i) {
        const double t = static_cast<double>(mod_floor(n * h_[i] + m * hp_[i], k_)) / kd;
        s += std::polar(1.0, 2.0 * std::numbers::pi * t);
    }
    return s;
}

std::vector<double> KloostermanTable::sums_over_n(i64 n_lo, i64 n_hi, i64 m) const {
    std::vector<double> out(static_cast<std::size_t>(n_hi - n_lo + 1), 0.0);
    const i64 mr = mod_floor(m, k_);
    for (std::size_t i = 0; i < h_.size(); ++i) {
        const i64 h = h_[i];
        i64 idx = mod_floor(mod_floor(n_lo, k_) * h + mr * hp_[i], k_);
        for (double& o : out) {
            o += cos_[static_cast<std::size_t>(idx)];
            idx += h;
            if (idx >= k_) idx -= k_;
        }
    }
    return out;
}

KloostermanValue kloosterman_K(i64 k, i64 n, i64 m) { return KloostermanTable(k).sum(n, m); }

double weil_bound(i64 k, i64 n, i64 m) {
    const i64 g = gcd(gcd(n, m), k);
    return std::sqrt(static_cast<double>(g)) * static_cast<double>(divisor_count(k)) * std::sqrt(static_cast<double>(k));
}

KloostermanValue a_k(i64 k, i64 n) {
    if (k <= 0 || k % 4 != 0) throw std::domain_error("a_k: requires 4 | k");
    double s = 0.0;
    i64 terms = 0;
    for (i64 h = 1; h < k; ++h) {
        if (gcd(h, k) != 1) continue;
        const RootOfUnity phase = chi2(h, k) * RootOfUnity::from_turns(-static_cast<__int128>(n) * h, k);
        s += phase.value().real();
        ++terms;
    }
    return {s, 4.0 * static_cast<double>(terms) * kUnitRoundoff};
}

KloostermanValue a_k_reduced(i64 k, i64 n) {
    if (k <= 0 || k % 4 != 0) throw std::domain_error("a_k_reduced: requires 4 | k");
    const i64 a0 = -5 * k * k / 2 + 7;
    const i64 b0 = -5 * k * k / 4 - 7;
    i64 modulus, a, b;
    double scale;
    if (k % 3 == 0) {
        modulus = 24 * k;
        a = a0 - 24 * n;
        b = b0;
        scale = 24.0;
    } else {
        if (a0 % 3 != 0 || b0 % 3 != 0) throw std::logic_error("a_k_reduced: non-integral Kloosterman argument");
        modulus = 8 * k;
        a = a0 / 3 - 8 * n;
        b = b0 / 3;
        scale = 8.0;
    }
    const KloostermanValue kv = KloostermanTable(modulus).sum(a, b);
    return {kv.value / scale, kv.abs_error / scale};
}

double a_k_bound(i64 k) {
    return 0.5 * std::sqrt(7.0 * static_cast<double>(k) / 2.0) * static_cast<double>(divisor_count(24 * k));
}

}  // namespace etaq
