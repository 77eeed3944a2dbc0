#include "doctest.h"

#include <etaq/arith.hpp>

#include <numeric>

using namespace etaq;

namespace {

i64 power_mod(i64 b, i64 e, i64 m) {
    i64 r = 1;
    b = mod_floor(b, m);
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("mod_floor and Residue normalize into [0, m)") {
    CHECK(mod_floor(-1, 5) == 4);
    CHECK(mod_floor(10, 5) == 0);
    CHECK(Residue::of(-7, 3) == Residue{2, 3});
    CHECK_THROWS_AS(Residue::of(1, 0), std::invalid_argument);
}

TEST_CASE("mod_inverse agrees with exhaustive search") {
    for (i64 b = 2; b <= 60; ++b) {
        for (i64 a = -70; a <= 70; ++a) {
            if (std::gcd(a, b) != 1) {
                CHECK_THROWS_AS(mod_inverse(a, b), std::domain_error);
                continue;
            }
            i64 want = -1;
            for (i64 x = 0; x < b; ++x)
                if (mod_floor(a * x, b) == 1) want = x;
            CHECK(mod_inverse(a, b) == want);
        }
    }
}

TEST_CASE("h_prime satisfies h h' = -1 and the divisibility option") {
    for (i64 k = 1; k <= 80; ++k) {
        for (i64 h = 0; h < k; ++h) {
            if (gcd(h, k) != 1) continue;
            const i64 hp = h_prime(h, k);
            CHECK(mod_floor(h * hp + 1, k) == 0);
            CHECK(hp >= 0);
            CHECK(hp < k);
            if (k % 3 != 0 && k % 2 == 0) {
                const i64 m = 8;
                const i64 hp3 = h_prime(h, k, m, HPrimeConstraint::divisible_by_three);
                CHECK(mod_floor(h * hp3 + 1, m * k) == 0);
                CHECK(hp3 % 3 == 0);
            }
        }
    }
    CHECK_THROWS_AS(h_prime(1, 3, 1, HPrimeConstraint::divisible_by_three), std::domain_error);
}

TEST_CASE("kronecker matches Euler's criterion at odd primes") {
    for (i64 p = 3; p < 200; p += 2) {
        if (!is_prime(p)) continue;
        for (i64 a = -60; a <= 60; ++a) {
            const i64 e = power_mod(a, (p - 1) / 2, p);
            const int want = (e == 0) ? 0 : (e == 1 ? 1 : -1);
            CHECK(kronecker(a, p) == want);
        }
    }
}

TEST_CASE("kronecker is multiplicative in the lower argument") {
    for (i64 a = -30; a <= 30; ++a) {
        for (i64 m = 1; m <= 40; ++m) {
            for (i64 n = 1; n <= 40; ++n) {
                CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
            }
        }
    }
    // (a/2) depends on a mod 8; (a/-1) on the sign of a.
    CHECK(kronecker(1, 2) == 1);
    CHECK(kronecker(3, 2) == -1);
    CHECK(kronecker(5, 2) == -1);
    CHECK(kronecker(7, 2) == 1);
    CHECK(kronecker(-3, -1) == -1);
    CHECK(kronecker(3, -1) == 1);
}

TEST_CASE("divisor_count and totient match brute force") {
    for (i64 k = 1; k <= 3000; ++k) {
        i64 d = 0, phi = 0;
        for (i64 j = 1; j <= k; ++j) {
            if (k % j == 0) ++d;
            if (std::gcd(j, k) == 1) ++phi;
        }
        CHECK(divisor_count(k) == d);
        CHECK(totient(k) == phi);
    }
}

TEST_CASE("epsilon_d") {
    CHECK(epsilon_d(1) == RootOfUnity::one());
    CHECK(epsilon_d(3) == RootOfUnity::i());
    CHECK(epsilon_d(-1) == RootOfUnity::i());
    CHECK_THROWS_AS(epsilon_d(2), std::domain_error);
}

TEST_CASE("farey arcs tile the unit interval") {
    for (i64 N = 1; N <= 40; ++N) {
        const auto arcs = farey_arcs(N);
        i64 count = 0;
        for (i64 k = 1; k <= N; ++k) count += totient(k);
        REQUIRE(static_cast<i64>(arcs.size()) == count);
        // Sum the arc widths exactly.
        __int128 num = 0, den = 1;
        for (const auto& a : arcs) {
            for (const Fraction f : {a.theta_left, a.theta_right}) {
                num = num * f.den + f.num * den;
                den *= f.den;
                __int128 x = num, y = den;
                while (y != 0) {
                    const __int128 t = x % y;
                    x = y;
                    y = t;
                }
                num /= x;
                den /= x;
            }
            CHECK(a.k <= N);
            CHECK(std::gcd(a.h, a.k) == 1);
        }
        CHECK(num == 1);
        CHECK(den == 1);
    }
}

TEST_CASE("root of unity arithmetic is exact") {
    const auto a = RootOfUnity::from_turns(1, 6);
    CHECK(a.pow(6) == RootOfUnity::one());
    CHECK(a * a.conj() == RootOfUnity::one());
    CHECK(a.pow(3) == RootOfUnity::minus_one());
    CHECK(RootOfUnity::from_turns(-1, 4) == RootOfUnity::from_turns(3, 4));
    CHECK(RootOfUnity::from_turns(7, -14) == RootOfUnity::minus_one());
    CHECK(std::abs(RootOfUnity::i().value() - std::complex<double>(0, 1)) < 1e-15);
    const __int128 big = static_cast<__int128>(1) << 80;
    CHECK(RootOfUnity::from_turns(3 * big + 1, 3) == RootOfUnity::from_turns(1, 3));
}
