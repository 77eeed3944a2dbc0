#include "doctest.h"

#include <etaq/qseries.hpp>

using namespace etaq;

namespace {

// Partitions into parts of `colors` colours, counted by coin-change DP.
std::vector<mpz_class> colored_partitions(std::size_t order, int colors) {
    std::vector<mpz_class> p(order + 1, 0);
    p[0] = 1;
    for (int c = 0; c < colors; ++c)
        for (std::size_t part = 1; part <= order; ++part)
            for (std::size_t n = part; n <= order; ++n) p[n] += p[n - part];
    return p;
}

// (q^level; q^level)_inf by multiplying out the finite product term by term.
std::vector<mpz_class> naive_pochhammer(i64 level, std::size_t order) {
    std::vector<mpz_class> a(order + 1, 0);
    a[0] = 1;
    for (std::size_t j = static_cast<std::size_t>(level); j <= order; j += static_cast<std::size_t>(level))
        for (std::size_t n = order; n >= j; --n) a[n] -= a[n - j];
    return a;
}

}  // namespace

TEST_CASE("spec parsing and printing") {
    const auto s = EtaQuotientSpec::parse(" 5^-2 , 1^1 ");
    CHECK(s.to_string() == "1^1,5^-2");
    CHECK(EtaQuotientSpec::parse("1,2^2,4^-3").to_string() == "1^1,2^2,4^-3");
    CHECK_THROWS_AS(EtaQuotientSpec::parse("1^2,1^-2,3^1"), SpecParseError);
    CHECK_THROWS_AS(EtaQuotientSpec::parse("1^"), SpecParseError);
    CHECK_THROWS_AS(EtaQuotientSpec::parse("0^1"), SpecParseError);
    CHECK_THROWS_AS(EtaQuotientSpec::parse("a^1"), SpecParseError);
    CHECK_THROWS_AS(EtaQuotientSpec::parse(""), SpecParseError);
}

TEST_CASE("pentagonal theta equals the multiplied-out product") {
    for (i64 level : {1, 2, 3, 5}) {
        const std::size_t order = 400;
        CHECK(pochhammer_series(level, order).coefficients().size() == order + 1);
        const auto want = naive_pochhammer(level, order);
        const auto got = pochhammer_series(level, order);
        for (std::size_t n = 0; n <= order; ++n) CHECK(got[n] == want[n]);
    }
}

TEST_CASE("1/(q;q) gives the partition numbers") {
    const std::size_t order = 500;
    const auto want = colored_partitions(order, 1);
    const auto got = expand(EtaQuotientSpec::parse("1^-1"), order);
    for (std::size_t n = 0; n <= order; ++n) CHECK(got[n] == want[n]);
    CHECK(got[100] == mpz_class("190569292"));
    CHECK(got[500] == mpz_class("2300165032574323995027"));
}

TEST_CASE("1/(q;q)^2 gives the two-coloured partition numbers") {
    const std::size_t order = 300;
    const auto want = colored_partitions(order, 2);
    const auto got = expand(EtaQuotientSpec::parse("1^-2"), order);
    for (std::size_t n = 0; n <= order; ++n) CHECK(got[n] == want[n]);
}

TEST_CASE("series algebra round trips") {
    const std::size_t order = 120;
    const auto a = pochhammer_series(1, order);
    const auto b = pochhammer_series(3, order);
    const auto ab = series_mul(a, b);
    CHECK(series_mul(ab, series_inverse(b)) == a);
    CHECK(series_pow(a, 3) == series_mul(a, series_mul(a, a)));
    CHECK(series_pow(a, -2) == series_inverse(series_mul(a, a)));
    CHECK(series_pow(a, 0) == IntSeries::one(order));

    std::vector<mpz_class> v(a.coefficients().begin(), a.coefficients().end());
    const auto theta = pentagonal_theta(2, order);
    multiply_sparse(v, theta);
    divide_sparse(v, theta);
    CHECK(IntSeries(v) == a);
}

TEST_CASE("expand agrees with products of powers") {
    const std::size_t order = 200;
    const auto spec = EtaQuotientSpec::parse("1^9,3^-5");
    const auto want = series_mul(series_pow(pochhammer_series(1, order), 9), series_pow(pochhammer_series(3, order), -5));
    CHECK(expand(spec, order) == want);
}

TEST_CASE("expand_small matches the big-integer path and detects overflow") {
    for (const char* text : {"1^1,5^-2", "1^1,2^2,4^-3", "1^9,3^-5", "1^2,3^-1"}) {
        const auto spec = EtaQuotientSpec::parse(text);
        const auto big = expand(spec, 600);
        const auto small = expand_small(spec, 600);
        REQUIRE(small.has_value());
        for (std::size_t n = 0; n <= 600; ++n) {
            const __int128 v = (*small)[n];
            // Compare through decimal strings; mpz has no int128 constructor.
            std::string s;
            __int128 x = v < 0 ? -v : v;
            do {
                s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
                x /= 10;
            } while (x != 0);
            if (v < 0) s.insert(s.begin(), '-');
            CHECK(big[n].get_str() == s);
        }
    }
    // p(3000) is far beyond 128 bits.
    CHECK_FALSE(expand_small(EtaQuotientSpec::parse("1^-1"), 3000).has_value());
}

TEST_CASE("sign patterns") {
    const auto p = SignPattern::parse("+--00");
    CHECK(p.period() == 5);
    CHECK(p.at(7) == -1);
    CHECK(p.to_string() == "+--00");
    CHECK_THROWS(SignPattern::parse("+x"));
    CHECK_THROWS(SignPattern::parse(""));

    const auto s = expand(EtaQuotientSpec::parse("1^1,5^-2"), 300);
    const auto ok = check_pattern(s, p, 1);
    CHECK(ok.confirmed);
    CHECK(ok.checked_to == 300);

    // 1^2,3^-1 breaks period 3 at n = 5.
    const auto k = expand(EtaQuotientSpec::parse("1^2,3^-1"), 50);
    const auto bad = check_pattern(k, SignPattern::parse("+--"), 1);
    CHECK_FALSE(bad.confirmed);
    CHECK(bad.first_violation == 5);
    CHECK(bad.expected == -1);
    CHECK(bad.actual == 1);
}

TEST_CASE("small coefficients of the three quotients") {
    // Hand-expanded: (q;q)/(q^5;q^5)^2 = 1 - q - q^2 + 0 q^3 + 0 q^4 + 3 q^5 + ...
    const auto a = expand(EtaQuotientSpec::parse("1^1,5^-2"), 10);
    CHECK(a[0] == 1);
    CHECK(a[1] == -1);
    CHECK(a[2] == -1);
    CHECK(a[3] == 0);
    CHECK(a[4] == 0);
    CHECK(a[5] == 3);
    // (1 - q - q^2)(1 - 2q^2 + 2q^4) through q^4.
    const auto b = expand(EtaQuotientSpec::parse("1^1,2^2,4^-3"), 4);
    CHECK(b[1] == -1);
    CHECK(b[2] == -3);
    CHECK(b[3] == 2);
    CHECK(b[4] == 4);
}
