#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace etaq {

/// Exact root of unity exp(2*pi*i * num/den), with the turn count kept
/// reduced modulo 1. Products, quotients and integer powers stay exact.
class RootOfUnity {
public:
    constexpr RootOfUnity() = default;

    static RootOfUnity from_turns(__int128 num, __int128 den) {
        if (den == 0) throw std::invalid_argument("RootOfUnity: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num >= INT64_MIN && num <= INT64_MAX && den <= INT64_MAX) {
            const std::int64_t d = static_cast<std::int64_t>(den);
            std::int64_t n = static_cast<std::int64_t>(num) % d;
            if (n < 0) n += d;
            std::int64_t a = n, b = d;
            while (a != 0) {
                const std::int64_t t = b % a;
                b = a;
                a = t;
            }
            RootOfUnity r;
            r.num_ = n / b;
            r.den_ = d / b;
            return r;
        }
        num %= den;
        if (num < 0) num += den;
        __int128 g = gcd128(num, den);
        RootOfUnity r;
        r.num_ = static_cast<std::int64_t>(num / g);
        r.den_ = static_cast<std::int64_t>(den / g);
        return r;
    }

    static constexpr RootOfUnity one() { return RootOfUnity{}; }
    static RootOfUnity minus_one() { return from_turns(1, 2); }
    static RootOfUnity i() { return from_turns(1, 4); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    RootOfUnity operator*(const RootOfUnity& o) const {
        return from_turns(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                          static_cast<__int128>(den_) * o.den_);
    }
    RootOfUnity operator/(const RootOfUnity& o) const { return *this * o.conj(); }
    RootOfUnity& operator*=(const RootOfUnity& o) { return *this = *this * o; }

    RootOfUnity conj() const { return from_turns(-static_cast<__int128>(num_), den_); }

    RootOfUnity pow(std::int64_t e) const {
        return from_turns(static_cast<__int128>(num_) * e, den_);
    }

    bool operator==(const RootOfUnity&) const = default;

    /// Angle in radians, in [0, 2*pi).
    double angle() const {
        return 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::complex<double> value() const {
        // Reduce to the nearest representative around 0 before evaluating.
        __int128 n2 = 2 * static_cast<__int128>(num_);
        double t = (n2 > den_) ? static_cast<double>(num_ - den_) / static_cast<double>(den_)
                               : static_cast<double>(num_) / static_cast<double>(den_);
        double a = 2.0 * std::numbers::pi * t;
        return {std::cos(a), std::sin(a)};
    }

    std::string to_string() const {
        return "e(" + std::to_string(num_) + "/" + std::to_string(den_) + ")";
    }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace etaq
