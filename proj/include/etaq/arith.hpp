#pragma once

// Number-theoretic primitives: residues, modular inverses, the h' companion
// of a Farey fraction, Kronecker symbols, divisor counts and Farey arcs.

#include <cstdint>
#include <vector>

#include "etaq/root_of_unity.hpp"

namespace etaq {

using i64 = std::int64_t;

/// Least nonnegative residue of a modulo m (m > 0).
constexpr i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

constexpr i64 gcd(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Residue {
    i64 value = 0;
    i64 modulus = 1;

    /// Normalizes a into [0, m).
    static Residue of(i64 a, i64 m);
    bool operator==(const Residue&) const = default;
};

/// x in [0, b) with a*x = 1 (mod b). Throws std::domain_error if gcd(a,b) != 1.
i64 mod_inverse(i64 a, i64 b);

enum class HPrimeConstraint {
    none,
    divisible_by_three,  // additionally 3 | h'
};

/// Least nonnegative h' with h*h' = -1 modulo (multiplier * k).
/// With HPrimeConstraint::divisible_by_three the result also satisfies 3 | h'
/// and is reduced modulo 3 * multiplier * k.
i64 h_prime(i64 h, i64 k, i64 multiplier = 1, HPrimeConstraint constraint = HPrimeConstraint::none);

/// Kronecker symbol (a/n), the completion of the Legendre/Jacobi symbol.
int kronecker(i64 a, i64 n);

/// epsilon_d = 1 for d = 1 (mod 4) and i for d = 3 (mod 4).
RootOfUnity epsilon_d(i64 d);

/// Number of positive divisors of k, by trial division.
i64 divisor_count(i64 k);

/// Euler's totient, by trial division.
i64 totient(i64 k);

/// Nonnegative fraction num/den in lowest terms.
struct Fraction {
    i64 num = 0;
    i64 den = 1;
    bool operator==(const Fraction&) const = default;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// One arc of the Farey dissection of order N around h/k: the integration
/// range is [h/k - theta_left, h/k + theta_right].
struct FareyArc {
    i64 h = 0;
    i64 k = 1;
    Fraction theta_left;   // 1/(k(k+k1)), k1 the left neighbour's denominator
    Fraction theta_right;  // 1/(k(k+k2)), k2 the right neighbour's denominator
    i64 order = 1;
};

/// Arcs for every h/k in [0,1) with k <= N, in increasing order of h/k.
std::vector<FareyArc> farey_arcs(i64 N);

/// Generalized pentagonal number (3m^2 - m)/2.
constexpr i64 pent(i64 m) { return (3 * m * m - m) / 2; }

constexpr i64 triangular(i64 n) { return n * (n + 1) / 2; }

}  // namespace etaq
