#include "etaq/qseries.hpp"

#include <algorithm>
#include <cctype>

#include "etaq/arith.hpp"

namespace etaq {

// ---------------------------------------------------------------------------
// EtaQuotientSpec

EtaQuotientSpec::EtaQuotientSpec(std::vector<EtaFactor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const EtaFactor& a, const EtaFactor& b) { return a.level < b.level; });
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].level < 1) throw std::invalid_argument("EtaQuotientSpec: levels must be positive");
        if (i > 0 && factors[i].level == factors[i - 1].level) {
            throw std::invalid_argument("EtaQuotientSpec: duplicate level " + std::to_string(factors[i].level));
        }
        if (factors[i].exponent != 0) factors_.push_back(factors[i]);
    }
    if (factors_.empty()) throw std::invalid_argument("EtaQuotientSpec: at least one nonzero factor required");
}

namespace {

struct SpecScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    i64 integer(const char* what) {
        skip_ws();
        const std::size_t start = pos;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
            skip_ws();
        }
        const std::size_t digits = pos;
        i64 value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000'000) throw SpecParseError(std::string(what) + " out of range", start);
            ++pos;
        }
        if (pos == digits) throw SpecParseError(std::string("expected ") + what, digits);
        return negative ? -value : value;
    }
};

}  // namespace

EtaQuotientSpec EtaQuotientSpec::parse(std::string_view text) {
    SpecScanner sc{text};
    std::vector<EtaFactor> factors;
    if (sc.at_end()) throw SpecParseError("empty spec", 0);
    while (true) {
        sc.skip_ws();
        const std::size_t token_start = sc.pos;
        if (sc.pos < text.size() && (text[sc.pos] == '-' || text[sc.pos] == '+')) {
            throw SpecParseError("expected level", sc.pos);
        }
        EtaFactor f;
        f.level = sc.integer("level");
        if (f.level < 1) throw SpecParseError("level must be positive", token_start);
        f.exponent = sc.accept('^') ? sc.integer("exponent") : 1;
        for (const auto& g : factors) {
            if (g.level == f.level) throw SpecParseError("duplicate level", token_start);
        }
        factors.push_back(f);
        if (sc.at_end()) break;
        if (!sc.accept(',')) throw SpecParseError("expected ','", sc.pos);
    }
    try {
        return EtaQuotientSpec(std::move(factors));
    } catch (const std::invalid_argument& e) {
        throw SpecParseError(e.what(), 0);
    }
}

std::string EtaQuotientSpec::to_string() const {
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) out += ',';
        out += std::to_string(f.level) + '^' + std::to_string(f.exponent);
    }
    return out;
}

// ---------------------------------------------------------------------------
// IntSeries

IntSeries::IntSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
}

IntSeries IntSeries::one(std::size_t order) {
    IntSeries s(order);
    s[0] = 1;
    return s;
}

SparseSeries pentagonal_theta(i64 level, std::size_t order) {
    if (level < 1) throw std::invalid_argument("pentagonal_theta: level must be positive");
    SparseSeries s;
    const auto N = static_cast<i64>(order);
    // Exponents level*pent(m) for m = 0, 1, -1, 2, -2, ... are increasing.
    s.terms.emplace_back(0, 1);
    for (i64 m = 1;; ++m) {
        const i64 e1 = level * pent(m);
        if (e1 > N) break;
        const i64 sign = (m % 2 == 0) ? 1 : -1;
        s.terms.emplace_back(static_cast<std::size_t>(e1), sign);
        const i64 e2 = level * pent(-m);
        if (e2 <= N) s.terms.emplace_back(static_cast<std::size_t>(e2), sign);
    }
    return s;
}

IntSeries pochhammer_series(i64 level, std::size_t order) {
    IntSeries out(order);
    for (const auto& [e, c] : pentagonal_theta(level, order).terms) out[e] = c;
    return out;
}

void multiply_sparse(std::vector<mpz_class>& a, const SparseSeries& s) {
    // Descending n so that a[n - e] still holds the old value.
    const auto& t = s.terms;
    for (std::size_t n = a.size(); n-- > 0;) {
        mpz_ptr dst = a[n].get_mpz_t();
        for (std::size_t j = 1; j < t.size() && t[j].first <= n; ++j) {
            mpz_srcptr src = a[n - t[j].first].get_mpz_t();
            if (t[j].second == 1) {
                mpz_add(dst, dst, src);
            } else if (t[j].second == -1) {
                mpz_sub(dst, dst, src);
            } else if (t[j].second > 0) {
                mpz_addmul_ui(dst, src, static_cast<unsigned long>(t[j].second));
            } else {
                mpz_submul_ui(dst, src, static_cast<unsigned long>(-t[j].second));
            }
        }
    }
}

void divide_sparse(std::vector<mpz_class>& a, const SparseSeries& s) {
    // Ascending n: b[n] = a[n] - sum_{j>=1} s_j b[n - e_j], constant term 1.
    const auto& t = s.terms;
    if (t.empty() || t[0].first != 0 || t[0].second != 1) {
        throw std::invalid_argument("divide_sparse: constant term must be 1");
    }
    for (std::size_t n = 0; n < a.size(); ++n) {
        mpz_ptr dst = a[n].get_mpz_t();
        for (std::size_t j = 1; j < t.size() && t[j].first <= n; ++j) {
            mpz_srcptr src = a[n - t[j].first].get_mpz_t();
            if (t[j].second == 1) {
                mpz_sub(dst, dst, src);
            } else if (t[j].second == -1) {
                mpz_add(dst, dst, src);
            } else if (t[j].second > 0) {
                mpz_submul_ui(dst, src, static_cast<unsigned long>(t[j].second));
            } else {
                mpz_addmul_ui(dst, src, static_cast<unsigned long>(-t[j].second));
            }
        }
    }
}

IntSeries expand(const EtaQuotientSpec& spec, std::size_t order) {
    IntSeries out = IntSeries::one(order);
    auto& a = out.raw();
    // Positive powers first while the coefficients are still small.
    for (const auto& f : spec.factors()) {
        if (f.exponent <= 0 || static_cast<std::size_t>(f.level) > order) continue;
        const auto theta = pentagonal_theta(f.level, order);
        for (i64 r = 0; r < f.exponent; ++r) multiply_sparse(a, theta);
    }
    for (const auto& f : spec.factors()) {
        if (f.exponent >= 0 || static_cast<std::size_t>(f.level) > order) continue;
        const auto theta = pentagonal_theta(f.level, order);
        for (i64 r = 0; r < -f.exponent; ++r) divide_sparse(a, theta);
    }
    return out;
}

std::optional<std::vector<__int128>> expand_small(const EtaQuotientSpec& spec, std::size_t order) {
    std::vector<__int128> a(order + 1, 0);
    a[0] = 1;
    for (const auto& f : spec.factors()) {
        if (f.exponent <= 0 || static_cast<std::size_t>(f.level) > order) continue;
        const auto& t = pentagonal_theta(f.level, order).terms;
        for (i64 r = 0; r < f.exponent; ++r) {
            for (std::size_t n = a.size(); n-- > 0;) {
                for (std::size_t j = 1; j < t.size() && t[j].first <= n; ++j) {
                    const __int128 v = a[n - t[j].first];
                    if (t[j].second > 0 ? __builtin_add_overflow(a[n], v, &a[n])
                                        : __builtin_sub_overflow(a[n], v, &a[n])) {
                        return std::nullopt;
                    }
                }
            }
        }
    }
    for (const auto& f : spec.factors()) {
        if (f.exponent >= 0 || static_cast<std::size_t>(f.level) > order) continue;
        const auto& t = pentagonal_theta(f.level, order).terms;
        for (i64 r = 0; r < -f.exponent; ++r) {
            for (std::size_t n = 0; n < a.size(); ++n) {
                for (std::size_t j = 1; j < t.size() && t[j].first <= n; ++j) {
                    const __int128 v = a[n - t[j].first];
                    if (t[j].second > 0 ? __builtin_sub_overflow(a[n], v, &a[n])
                                        : __builtin_add_overflow(a[n], v, &a[n])) {
                        return std::nullopt;
                    }
                }
            }
        }
    }
    return a;
}

IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
    const std::size_t N = std::min(a.order(), b.order());
    IntSeries out(N);
    auto& c = out.raw();
    for (std::size_t i = 0; i <= N; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; i + j <= N; ++j) {
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

IntSeries series_inverse(const IntSeries& a) {
    const int a0 = (a[0] == 1) ? 1 : (a[0] == -1 ? -1 : 0);
    if (a0 == 0) throw std::domain_error("series_inverse: constant term must be +1 or -1");
    const std::size_t N = a.order();
    IntSeries out(N);
    auto& b = out.raw();
    b[0] = a0;
    mpz_class acc;
    for (std::size_t n = 1; n <= N; ++n) {
        acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (sgn(a[k]) != 0) mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[n - k].get_mpz_t());
        }
        b[n] = (a0 == 1) ? mpz_class(-acc) : acc;
    }
    return out;
}

IntSeries series_pow(const IntSeries& a, i64 e) {
    if (e < 0) return series_pow(series_inverse(a), -e);
    IntSeries result = IntSeries::one(a.order());
    IntSeries base = a;
    while (e > 0) {
        if (e & 1) result = series_mul(result, base);
        e >>= 1;
        if (e > 0) base = series_mul(base, base);
    }
    return result;
}

std::vector<Sign> sign_sequence(const IntSeries& s) {
    std::vector<Sign> out(s.order() + 1);
    for (std::size_t n = 0; n <= s.order(); ++n) out[n] = static_cast<Sign>(sgn(s[n]));
    return out;
}

// ---------------------------------------------------------------------------
// SignPattern

SignPattern::SignPattern(std::vector<Sign> signs) : signs_(std::move(signs)) {
    if (signs_.empty()) throw std::invalid_argument("SignPattern: period must be positive");
    for (Sign s : signs_) {
        if (s < -1 || s > 1) throw std::invalid_argument("SignPattern: signs must be -1, 0 or 1");
    }
}

SignPattern SignPattern::parse(std::string_view text) {
    std::vector<Sign> signs;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case '+': signs.push_back(1); break;
            case '-': signs.push_back(-1); break;
            case '0': signs.push_back(0); break;
            case ' ': break;
            default:
                throw std::invalid_argument("SignPattern: unexpected character '" + std::string(1, text[i]) +
                                            "' at position " + std::to_string(i));
        }
    }
    return SignPattern(std::move(signs));
}

char sign_char(Sign s) { return s > 0 ? '+' : (s < 0 ? '-' : '0'); }

std::string SignPattern::to_string() const {
    std::string out;
    for (Sign s : signs_) out += sign_char(s);
    return out;
}

PatternCheck check_pattern(std::span<const Sign> signs, const SignPattern& pattern, std::size_t start) {
    if (signs.empty() || start >= signs.size()) throw std::invalid_argument("check_pattern: start beyond order");
    PatternCheck r;
    r.checked_from = start;
    r.checked_to = signs.size() - 1;
    for (std::size_t n = start; n < signs.size(); ++n) {
        if (signs[n] != pattern.at(n)) {
            r.confirmed = false;
            r.first_violation = n;
            r.expected = pattern.at(n);
            r.actual = signs[n];
            return r;
        }
    }
    return r;
}

PatternCheck check_pattern(const IntSeries& s, const SignPattern& pattern, std::size_t start) {
    const auto signs = sign_sequence(s);
    return check_pattern(std::span<const Sign>(signs), pattern, start);
}

}  // namespace etaq
