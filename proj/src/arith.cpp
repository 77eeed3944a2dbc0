#include "etaq/arith.hpp"

#include <stdexcept>
#include <string>

namespace etaq {

Residue Residue::of(i64 a, i64 m) {
    if (m <= 0) throw std::invalid_argument("Residue: modulus must be positive");
    return Residue{mod_floor(a, m), m};
}

i64 mod_inverse(i64 a, i64 b) {
    if (b <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
    if (b == 1) return 0;
    // Extended Euclid on (a mod b, b); the coefficients stay below b in size.
    i64 old_r = mod_floor(a, b), r = b;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        const i64 q = old_r / r;
        i64 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        throw std::domain_error("mod_inverse: gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
    }
    return mod_floor(old_s, b);
}

i64 h_prime(i64 h, i64 k, i64 multiplier, HPrimeConstraint constraint) {
    if (k <= 0 || multiplier <= 0) throw std::invalid_argument("h_prime: k and multiplier must be positive");
    const i64 m = multiplier * k;
    const i64 base = mod_floor(-mod_inverse(h, m), m);
    if (constraint == HPrimeConstraint::none) return base;

    if (m % 3 == 0) {
        throw std::domain_error("h_prime: 3 | h' is incompatible with h*h' = -1 mod a multiple of 3");
    }
    // CRT: x = base (mod m), x = 0 (mod 3).
    for (i64 t = 0; t < 3; ++t) {
        i64 x = base + t * m;
        if (x % 3 == 0) return x;
    }
    throw std::logic_error("h_prime: CRT failed");
}

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // Factor out powers of two from n; (a/2) depends on a mod 8.
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos > 0) {
        if (a % 2 == 0) return 0;
        i64 a8 = mod_floor(a, 8);
        if ((twos % 2 == 1) && (a8 == 3 || a8 == 5)) result = -result;
    }
    // Jacobi symbol (a/n) for odd positive n.
    a = mod_floor(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 n8 = n % 8;
            if (n8 == 3 || n8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

RootOfUnity epsilon_d(i64 d) {
    if (d % 2 == 0) throw std::domain_error("epsilon_d: d must be odd");
    return mod_floor(d, 4) == 1 ? RootOfUnity::one() : RootOfUnity::i();
}

i64 divisor_count(i64 k) {
    if (k <= 0) throw std::invalid_argument("divisor_count: k must be positive");
    i64 count = 1;
    for (i64 p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        i64 e = 0;
        while (k % p == 0) {
            k /= p;
            ++e;
        }
        count *= e + 1;
    }
    if (k > 1) count *= 2;
    return count;
}

i64 totient(i64 k) {
    if (k <= 0) throw std::invalid_argument("totient: k must be positive");
    i64 result = k;
    for (i64 p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        while (k % p == 0) k /= p;
        result -= result / p;
    }
    if (k > 1) result -= result / k;
    return result;
}

std::vector<FareyArc> farey_arcs(i64 N) {
    if (N < 1) throw std::invalid_argument("farey_arcs: order must be positive");
    // Walk the Farey sequence of order N from 0/1 to 1/1 with the standard
    // next-term recurrence; each fraction's neighbours fix its arc.
    struct Frac {
        i64 h, k;
    };
    std::vector<Frac> seq;
    i64 a = 0, b = 1, c = 1, d = N;
    seq.push_back({a, b});
    while (c <= N) {
        i64 q = (N + b) / d;
        i64 e = q * c - a, f = q * d - b;
        a = c;
        b = d;
        c = e;
        d = f;
        seq.push_back({a, b});
    }
    // seq runs 0/1 ... 1/1; the left neighbour of 0/1 is (N-1)/N - 1, whose
    // denominator equals that of the last interior fraction.
    std::vector<FareyArc> arcs;
    const std::size_t interior = seq.size() - 1;  // drop 1/1
    arcs.reserve(interior);
    for (std::size_t i = 0; i < interior; ++i) {
        const i64 h = seq[i].h, k = seq[i].k;
        const i64 k1 = (i == 0) ? seq[interior - 1].k : seq[i - 1].k;
        const i64 k2 = seq[i + 1].k;
        FareyArc arc;
        arc.h = h;
        arc.k = k;
        arc.theta_left = Fraction{1, k * (k + k1)};
        arc.theta_right = Fraction{1, k * (k + k2)};
        arc.order = N;
        arcs.push_back(arc);
    }
    return arcs;
}

}  // namespace etaq
