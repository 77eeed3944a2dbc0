#pragma once

// Eta multiplier omega_{h,k} of the partition generating function, the three
// case multipliers built from it, and Kloosterman-type sums.

#include <complex>
#include <cstdint>
#include <vector>

#include "etaq/arith.hpp"
#include "etaq/root_of_unity.hpp"

namespace etaq {

enum class OmegaBranch {
    h_odd,  // uses the Kronecker symbol (-k/h)
    k_odd,  // uses the Kronecker symbol (-h/k)
};

/// omega_{h,k} from the transformation law P(q) = omega sqrt(z) exp(pi/(12k)(1/z - z)) P(q_1).
/// h is reduced modulo k; requires gcd(h, k) = 1.
RootOfUnity omega(i64 h, i64 k);

/// One branch of the closed form, evaluated with the given h' (h*h' = -1 mod k).
/// Requires 0 <= h < k and the branch's parity condition.
RootOfUnity omega_branch(OmegaBranch branch, i64 h, i64 k, i64 hprime);

/// Relative residual |LHS - RHS| / |LHS| of the transformation law at the
/// point q = exp(2 pi i (h + i z)/k), with P evaluated by truncated products.
double omega_numeric_check(i64 h, i64 k, std::complex<double> z);

/// omega_{h,k/5}^2 / omega_{h,k}; requires 5 | k.
RootOfUnity chi1(i64 h, i64 k);
/// omega_{h,k/4}^3 / (omega_{h,k} omega_{h,k/2}^2); requires 4 | k.
RootOfUnity chi2(i64 h, i64 k);
/// Closed form of chi2 with h' taken modulo 8 gcd(k,3) k; requires 4 | k.
RootOfUnity chi2_closed(i64 h, i64 k);
/// Same closed form with a caller-supplied h' (h*h' = -1 mod 8 gcd(k,3) k).
RootOfUnity chi2_closed(i64 h, i64 k, i64 hprime);
/// omega_{h,k/3}^5 / omega_{h,k}^9; requires 3 | k.
RootOfUnity chi3(i64 h, i64 k);

/// A real sum together with a bound on its accumulated rounding error.
struct KloostermanValue {
    double value = 0.0;
    double abs_error = 0.0;
};

/// Precomputed units h, their companions h' (h*h' = -1 mod k) and a cosine
/// table for one modulus. Sums are evaluated as cosine sums.
class KloostermanTable {
public:
    explicit KloostermanTable(i64 k);

    i64 modulus() const { return k_; }
    std::size_t unit_count() const { return h_.size(); }

    /// K_k(n, m) = sum_{h mod k, (h,k)=1} e((n h + m h')/k).
    KloostermanValue sum(i64 n, i64 m) const;

    /// Same sum evaluated as a complex exponential sum, without pairing.
    std::complex<double> complex_sum(i64 n, i64 m) const;

    /// K_k(n, m) for every n in [n_lo, n_hi], in order.
    std::vector<double> sums_over_n(i64 n_lo, i64 n_hi, i64 m) const;

private:
    i64 k_;
    std::vector<i64> h_;
    std::vector<i64> hp_;
    std::vector<double> cos_;
};

KloostermanValue kloosterman_K(i64 k, i64 n, i64 m);

/// sqrt(gcd(n, m, k)) * d(k) * sqrt(k).
double weil_bound(i64 k, i64 n, i64 m);

/// A_k(n) = sum_{h mod k}^* chi2(h,k) e(-n h/k), evaluated from exact chi2 values.
KloostermanValue a_k(i64 k, i64 n);

/// A_k(n) through the Kloosterman reduction: K_{24k}(...)/24 when 3 | k and
/// K_{8k}(...)/8 otherwise.
KloostermanValue a_k_reduced(i64 k, i64 n);

/// (1/2) sqrt(7k/2) d(24k).
double a_k_bound(i64 k);

}  // namespace etaq
