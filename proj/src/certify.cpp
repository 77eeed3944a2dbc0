#include "etaq/certify.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <limits>
#include <map>

#include "etaq/arith.hpp"
#include "etaq/exactformula.hpp"
#include "etaq/parallel.hpp"

namespace etaq {

namespace {

InequalityBranch make_branch(std::string name, i64 modulus, std::vector<i64> residues, i64 threshold, i64 floor) {
    InequalityBranch b;
    b.name = std::move(name);
    b.modulus = modulus;
    b.residues = std::move(residues);
    b.threshold = threshold;
    b.validity_floor = floor;
    return b;
}

std::optional<double> branch_margin(int id, i64 n) {
    switch (id) {
        case 1: {
            // The elementary case 1 inequality rests on an E1 bound that is too
            // small; require the corrected Bessel-form margin as well.
            const auto a = thm1_inequality(n);
            const auto b = thm1_corrected_margin(n);
            if (!a || !b) return std::nullopt;
            return std::min(*a, *b);
        }
        case 2: return thm2_inequality(n);
        case 3: return thm3_inequality(n);
        default: throw std::invalid_argument("unknown theorem id " + std::to_string(id));
    }
}

bool in_branch(const InequalityBranch& b, i64 n) {
    return std::find(b.residues.begin(), b.residues.end(), mod_floor(n, b.modulus)) != b.residues.end();
}

// Fills count/min_margin/argmin of b over [b.threshold, n_ineq]. Returns the
// first n with margin <= slack, if any.
std::optional<i64> evaluate_branch(int id, InequalityBranch& b, i64 n_ineq, double slack, unsigned threads) {
    std::vector<i64> ns;
    for (i64 n = b.threshold; n <= n_ineq; ++n)
        if (in_branch(b, n)) ns.push_back(n);
    std::vector<double> margins(ns.size());
    parallel_for(ns.size(), threads, [&](std::size_t i) {
        const auto m = branch_margin(id, ns[i]);
        margins[i] = m ? *m : -std::numeric_limits<double>::infinity();
    });
    b.range = {b.threshold, n_ineq};
    b.count = static_cast<i64>(ns.size());
    b.min_margin = std::numeric_limits<double>::infinity();
    b.argmin = 0;
    std::optional<i64> bad;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (margins[i] < b.min_margin) {
            b.min_margin = margins[i];
            b.argmin = ns[i];
        }
        if (!bad && !(margins[i] > slack)) bad = ns[i];
    }
    return bad;
}

std::vector<Sign> signs_to(const std::string& spec, i64 n_hi) {
    return sign_sequence(expand(EtaQuotientSpec::parse(spec), static_cast<std::size_t>(n_hi)));
}

}  // namespace

TheoremDescription describe_theorem(int id) {
    using namespace constants;
    switch (id) {
        case 1:
            return {1, "1^1,5^-2", "+--00",
                    {make_branch("n = 0,1,2 mod 5", 5, {0, 1, 2}, kThresholdCase1, kValidityCase1)}};
        case 2:
            return {2, "1^1,2^2,4^-3", "+--+",
                    {make_branch("all n", 1, {0}, kThresholdCase2, kValidityCase2)}};
        case 3:
            return {3, "1^9,3^-5", "+-+--++-+",
                    {make_branch("3 does not divide n", 3, {1, 2}, kThresholdCase3Coprime, kValidityCase3Coprime),
                     make_branch("3 divides n", 3, {0}, kThresholdCase3Multiple, kValidityCase3Multiple)}};
        default:
            throw std::invalid_argument("theorem id must be 1, 2 or 3");
    }
}

std::string certificate_timestamp() {
    std::time_t t = 0;
    if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) t = static_cast<std::time_t>(v);
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::vector<i64> pentagonal_missing_residues(i64 modulus) {
    if (modulus < 1) throw std::invalid_argument("pentagonal_missing_residues: modulus must be positive");
    // pent(m) mod M is periodic in m with period 2M.
    std::vector<char> hit(static_cast<std::size_t>(modulus), 0);
    for (i64 m = -2 * modulus; m <= 2 * modulus; ++m) hit[static_cast<std::size_t>(mod_floor(pent(m), modulus))] = 1;
    std::vector<i64> out;
    for (i64 r = 0; r < modulus; ++r)
        if (!hit[static_cast<std::size_t>(r)]) out.push_back(r);
    return out;
}

Certificate certify_theorem(int id, i64 n_ineq, unsigned threads) {
    const TheoremDescription desc = describe_theorem(id);
    threads = resolve_threads(threads);
    i64 first_threshold = std::numeric_limits<i64>::max(), last_threshold = 0;
    for (const auto& b : desc.branches) {
        first_threshold = std::min(first_threshold, b.threshold);
        last_threshold = std::max(last_threshold, b.threshold);
    }
    if (n_ineq < last_threshold) {
        throw std::invalid_argument("certify: n_ineq must be at least " + std::to_string(last_threshold));
    }

    Certificate cert;
    cert.theorem_id = id;
    cert.spec = desc.spec;
    cert.pattern = SignPattern::parse(desc.pattern);
    cert.slack = kCertificationSlack;
    cert.direct_check_range = {1, last_threshold - 1};
    cert.direct_verified_range = {1, std::max<i64>(last_threshold - 1, 200)};
    cert.inequality_range = {first_threshold, n_ineq};
    cert.timestamp = certificate_timestamp();
    cert.engine_version = kEngineVersion;

    // Zeros in the pattern must be classes that vanish identically.
    const i64 M = static_cast<i64>(cert.pattern.period());
    std::vector<i64> pattern_zeros;
    for (i64 r = 0; r < M; ++r)
        if (cert.pattern.at(static_cast<std::size_t>(r)) == 0) pattern_zeros.push_back(r);
    if (!pattern_zeros.empty()) {
        const auto missing = pentagonal_missing_residues(M);
        for (i64 r : pattern_zeros) {
            if (std::find(missing.begin(), missing.end(), r) == missing.end()) {
                throw CertificationFailure("pattern zero at residue " + std::to_string(r) + " is not structural", r,
                                           "structural");
            }
        }
        cert.structural_zero_residues = pattern_zeros;
    }

    const auto signs = signs_to(cert.spec, cert.direct_verified_range.hi);
    const PatternCheck pc = check_pattern(signs, cert.pattern, 1);
    if (!pc.confirmed) {
        throw CertificationFailure("sign mismatch at n = " + std::to_string(pc.first_violation) + ": expected " +
                                       sign_char(pc.expected) + ", found " + sign_char(pc.actual),
                                   static_cast<i64>(pc.first_violation), "direct");
    }

    cert.min_margin = std::numeric_limits<double>::infinity();
    for (InequalityBranch b : desc.branches) {
        if (auto bad = evaluate_branch(id, b, n_ineq, cert.slack, threads)) {
            const auto m = branch_margin(id, *bad);
            throw CertificationFailure("inequality margin " + (m ? std::to_string(*m) : std::string("undefined")) +
                                           " not above slack at n = " + std::to_string(*bad),
                                       *bad, "inequality: " + b.name);
        }
        cert.min_margin = std::min(cert.min_margin, b.min_margin);
        cert.branches.push_back(std::move(b));
    }
    return cert;
}

RecheckResult recheck(const Certificate& cert, unsigned threads) {
    RecheckResult out;
    auto fail = [&](std::string msg) {
        out.ok = false;
        out.problems.push_back(std::move(msg));
    };
    threads = resolve_threads(threads);
    if (!(cert.min_margin > cert.slack)) fail("min_margin does not exceed slack");
    for (const auto& b : cert.branches) {
        if (b.threshold > cert.direct_check_range.hi + 1) fail("gap between direct range and branch '" + b.name + "'");
    }
    if (cert.direct_verified_range.hi < cert.direct_check_range.hi) fail("direct range not fully verified");
    double branch_min = std::numeric_limits<double>::infinity();
    for (const auto& b : cert.branches) branch_min = std::min(branch_min, b.min_margin);
    if (cert.branches.empty() || cert.min_margin != branch_min) fail("min_margin is not the least branch margin");

    const auto signs = signs_to(cert.spec, cert.direct_verified_range.hi);
    const PatternCheck pc = check_pattern(signs, cert.pattern, static_cast<std::size_t>(cert.direct_verified_range.lo));
    if (!pc.confirmed) fail("direct sign mismatch at n = " + std::to_string(pc.first_violation));

    for (const auto& stored : cert.branches) {
        InequalityBranch b = stored;
        evaluate_branch(cert.theorem_id, b, stored.range.hi, cert.slack, threads);
        if (b.count != stored.count || b.min_margin != stored.min_margin || b.argmin != stored.argmin) {
            fail("branch '" + stored.name + "' does not reproduce");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Known patterns

Sign kane_sign(i64 n) {
    if (n == 14 || n == 17) return 0;
    if (n % 3 == 0 || n == 5) return 1;
    return -1;
}

std::vector<KnownPatternReport> check_known_patterns(i64 n_max) {
    std::vector<KnownPatternReport> out;
    {
        KnownPatternReport r;
        r.name = "1^2,3^-1";
        r.checked_to = n_max;
        r.pattern = "Kane: + if 3 | n or n = 5, 0 if n in {14, 17}, - otherwise";
        const auto s = signs_to(r.name, n_max);
        for (i64 n = 1; n <= n_max; ++n) {
            const Sign v = s[static_cast<std::size_t>(n)];
            if (v == 0) r.zeros.push_back(n);
            if (v != kane_sign(n)) r.violations.push_back(n);
        }
        r.ok = r.violations.empty();
        out.push_back(std::move(r));
    }
    {
        KnownPatternReport r;
        r.name = "1^1,5^-1";
        r.checked_to = n_max;
        const auto s = signs_to(r.name, n_max);
        // Period 5 up to zeros: the nonzero signs in each class agree.
        std::vector<Sign> pat(5, 0);
        for (i64 n = 1; n <= n_max; ++n) {
            const Sign v = s[static_cast<std::size_t>(n)];
            Sign& p = pat[static_cast<std::size_t>(n % 5)];
            if (v == 0) {
                continue;
            } else if (p == 0) {
                p = v;
            } else if (p != v) {
                r.violations.push_back(n);
            }
        }
        // Classes that never see a nonzero sign vanish identically; only
        // zeros in the other classes are exceptional.
        for (i64 n = 1; n <= n_max; ++n) {
            if (s[static_cast<std::size_t>(n)] == 0 && pat[static_cast<std::size_t>(n % 5)] != 0) r.zeros.push_back(n);
        }
        r.pattern = SignPattern(pat).to_string();
        r.ok = r.violations.empty();
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Scanner

std::optional<std::pair<i64, SignPattern>> infer_period(const std::vector<Sign>& signs, i64 n_start, i64 period_max) {
    const i64 N = static_cast<i64>(signs.size()) - 1;
    for (i64 M = 1; M <= period_max; ++M) {
        if (N - n_start + 1 < M) break;
        std::vector<Sign> pat(static_cast<std::size_t>(M));
        std::vector<char> seen(static_cast<std::size_t>(M), 0);
        bool ok = true;
        for (i64 n = n_start; n <= N && ok; ++n) {
            const auto r = static_cast<std::size_t>(n % M);
            const Sign v = signs[static_cast<std::size_t>(n)];
            if (!seen[r]) {
                seen[r] = 1;
                pat[r] = v;
            } else if (pat[r] != v) {
                ok = false;
            }
        }
        if (ok) return std::make_pair(M, SignPattern(std::move(pat)));
    }
    return std::nullopt;
}

std::vector<EtaQuotientSpec> enumerate_specs(const ScanOptions& opt) {
    if (opt.max_level < 1 || opt.delta_lo > opt.delta_hi) throw std::invalid_argument("scan: empty search space");
    std::vector<EtaQuotientSpec> out;
    std::vector<i64> e(static_cast<std::size_t>(opt.max_level), opt.delta_lo);
    while (true) {
        std::vector<EtaFactor> f;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) f.push_back({static_cast<i64>(i) + 1, e[i]});
        if (!f.empty()) out.emplace_back(std::move(f));
        std::size_t i = e.size();
        while (i > 0 && e[i - 1] == opt.delta_hi) e[--i] = opt.delta_lo;
        if (i == 0) break;
        ++e[i - 1];
    }
    return out;
}

namespace {

std::vector<Sign> scan_signs(const EtaQuotientSpec& spec, i64 order) {
    if (auto small = expand_small(spec, static_cast<std::size_t>(order))) {
        std::vector<Sign> s(small->size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<Sign>(((*small)[i] > 0) - ((*small)[i] < 0));
        return s;
    }
    return sign_sequence(expand(spec, static_cast<std::size_t>(order)));
}

}  // namespace

std::vector<ScanHit> scan(const ScanOptions& opt) {
    if (opt.period_max < 1) throw std::invalid_argument("scan: period_max must be positive");
    if (opt.n_verify < 10 * opt.period_max) throw std::invalid_argument("scan: n_verify must be at least 10 * period_max");
    if (opt.n_start < 0 || opt.n_start >= opt.n_verify) throw std::invalid_argument("scan: n_start out of range");
    const auto specs = enumerate_specs(opt);
    // Cheap filters at short orders, then the full verification depth.
    std::vector<i64> stages;
    for (i64 s : {i64{200}, i64{1000}})
        if (s < opt.n_verify && s >= opt.n_start + 10 * opt.period_max) stages.push_back(s);
    stages.push_back(opt.n_verify);

    std::vector<std::optional<ScanHit>> slots(specs.size());
    parallel_for(specs.size(), resolve_threads(opt.threads), [&](std::size_t i) {
        std::optional<std::pair<i64, SignPattern>> found;
        for (i64 order : stages) {
            found = infer_period(scan_signs(specs[i], order), opt.n_start, opt.period_max);
            if (!found) return;
        }
        slots[i] = ScanHit{specs[i], found->first, found->second, opt.n_verify, opt.n_start == 1};
    });
    std::vector<ScanHit> hits;
    for (auto& s : slots)
        if (s) hits.push_back(std::move(*s));
    return hits;
}

std::string format_scan_hits(const std::vector<ScanHit>& hits, const ScanOptions& opt) {
    std::string out = "etaq-scan 1\n";
    out += "engine_version: " + std::string(kEngineVersion) + "\n";
    out += "max_level: " + std::to_string(opt.max_level) + "\n";
    out += "delta: [" + std::to_string(opt.delta_lo) + ", " + std::to_string(opt.delta_hi) + "]\n";
    out += "period_max: " + std::to_string(opt.period_max) + "\n";
    out += "n_verify: " + std::to_string(opt.n_verify) + "\n";
    out += "n_start: " + std::to_string(opt.n_start) + "\n";
    out += "hits: " + std::to_string(hits.size()) + "\n";
    for (const auto& h : hits) {
        out += "hit: spec=" + h.spec.to_string() + " period=" + std::to_string(h.period) +
               " pattern=" + h.pattern.to_string() + " verified_up_to=" + std::to_string(h.verified_up_to) +
               " purely_periodic=" + (h.purely_periodic ? "true" : "false") + "\n";
    }
    out += "end\n";
    return out;
}

}  // namespace etaq
