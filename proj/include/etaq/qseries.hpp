#pragma once

// Exact dense power series with big-integer coefficients, and the
// eta-quotient expansions built on top of them.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace etaq {

using i64 = std::int64_t;

struct EtaFactor {
    i64 level = 1;
    i64 exponent = 0;
    bool operator==(const EtaFactor&) const = default;
};

class SpecParseError : public std::runtime_error {
public:
    SpecParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// prod_l (q^l; q^l)_inf^{delta_l}. Levels are kept sorted and distinct;
/// factors with exponent zero are dropped.
class EtaQuotientSpec {
public:
    explicit EtaQuotientSpec(std::vector<EtaFactor> factors);

    /// Parses "1^1,5^-2". Whitespace is ignored; a bare level means exponent 1.
    static EtaQuotientSpec parse(std::string_view text);

    const std::vector<EtaFactor>& factors() const { return factors_; }
    std::string to_string() const;

    bool operator==(const EtaQuotientSpec&) const = default;

private:
    std::vector<EtaFactor> factors_;
};

/// Truncated power series sum_{n<=N} a_n q^n with exact integer coefficients.
class IntSeries {
public:
    IntSeries() : coeffs_(1) {}
    explicit IntSeries(std::size_t order) : coeffs_(order + 1) {}
    explicit IntSeries(std::vector<mpz_class> coeffs);

    static IntSeries one(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const mpz_class& operator[](std::size_t n) const { return coeffs_.at(n); }
    mpz_class& operator[](std::size_t n) { return coeffs_.at(n); }
    std::span<const mpz_class> coefficients() const { return coeffs_; }
    std::vector<mpz_class>& raw() { return coeffs_; }

    bool operator==(const IntSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<mpz_class> coeffs_;
};

/// Sparse signed series used for theta-type factors: (exponent, coefficient)
/// pairs, sorted by exponent, with a unit constant term.
struct SparseSeries {
    std::vector<std::pair<std::size_t, i64>> terms;
};

/// (q^level; q^level)_inf up to q^order via the pentagonal number theorem.
SparseSeries pentagonal_theta(i64 level, std::size_t order);

IntSeries pochhammer_series(i64 level, std::size_t order);

/// Exact coefficients C(0..order) of the eta-quotient.
IntSeries expand(const EtaQuotientSpec& spec, std::size_t order);

/// Same expansion in 128-bit arithmetic; std::nullopt on overflow.
std::optional<std::vector<__int128>> expand_small(const EtaQuotientSpec& spec, std::size_t order);

IntSeries series_mul(const IntSeries& a, const IntSeries& b);
/// Requires a constant term of +1 or -1.
IntSeries series_inverse(const IntSeries& a);
IntSeries series_pow(const IntSeries& a, i64 e);

/// In-place multiplication / division by a sparse unit-constant series.
void multiply_sparse(std::vector<mpz_class>& a, const SparseSeries& s);
void divide_sparse(std::vector<mpz_class>& a, const SparseSeries& s);

using Sign = std::int8_t;

std::vector<Sign> sign_sequence(const IntSeries& s);

/// Sign as a function of n mod period.
class SignPattern {
public:
    SignPattern() = default;
    explicit SignPattern(std::vector<Sign> signs);

    /// Characters '+', '-', '0' for residues 0..M-1, left to right.
    static SignPattern parse(std::string_view text);

    std::size_t period() const { return signs_.size(); }
    Sign at(std::size_t n) const { return signs_[n % signs_.size()]; }
    const std::vector<Sign>& signs() const { return signs_; }
    std::string to_string() const;

    bool operator==(const SignPattern&) const = default;

private:
    std::vector<Sign> signs_;
};

struct PatternCheck {
    bool confirmed = true;
    std::size_t first_violation = 0;  // valid when !confirmed
    Sign expected = 0;
    Sign actual = 0;
    std::size_t checked_from = 0;
    std::size_t checked_to = 0;
};

/// Scans n = start..order and reports the least n whose sign differs from the pattern.
PatternCheck check_pattern(std::span<const Sign> signs, const SignPattern& pattern, std::size_t start);
PatternCheck check_pattern(const IntSeries& s, const SignPattern& pattern, std::size_t start);

char sign_char(Sign s);

}  // namespace etaq
