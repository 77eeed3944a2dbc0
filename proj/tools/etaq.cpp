// etaq: expansion, sign checks, exact formulas, certification and scanning
// for eta-quotient coefficient signs.
//
// Exit status: 0 success or confirmed, 1 violation or certification failure,
// 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>

#include "etaq/certify.hpp"
#include "etaq/exactformula.hpp"
#include "etaq/parallel.hpp"
#include "etaq/qseries.hpp"

namespace {

using etaq::i64;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v, int digits = 17) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

etaq::EtaQuotientSpec parse_spec(const std::string& text) {
    try {
        return etaq::EtaQuotientSpec::parse(text);
    } catch (const etaq::SpecParseError& e) {
        throw UsageError(std::string("invalid spec '") + text + "': " + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid spec '") + text + "': " + e.what());
    }
}

// Writes to --out when given, else standard output.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + out_path + " for writing");
    f << text;
}

struct Options {
    std::string format = "table";
    unsigned threads = 0;
    std::string out;

    std::string spec;
    i64 n = 0;
    std::string pattern;
    i64 period = 0;
    int which_case = 1;
    i64 K = 0;
    int theorem = 0;
    i64 n_max = 10000;
    i64 max_level = 5;
    std::string delta = "-3..3";
    std::string in;
    i64 period_max = 12;
    i64 n_verify = 5000;
    i64 n_start = 1;
};

bool structured(const Options& o) { return o.format == "structured"; }

int cmd_expand(const Options& o) {
    const auto spec = parse_spec(o.spec);
    if (o.n < 0) throw UsageError("--n must be nonnegative");
    const auto s = etaq::expand(spec, static_cast<std::size_t>(o.n));
    std::ostringstream out;
    if (structured(o)) {
        out << "etaq-expand 1\nspec: " << spec.to_string() << "\nN: " << o.n << "\n";
        for (std::size_t n = 0; n <= s.order(); ++n) {
            out << "row: " << n << ' ' << s[n].get_str() << ' ' << etaq::sign_char(static_cast<etaq::Sign>(sgn(s[n])))
                << '\n';
        }
        out << "end\n";
    } else {
        out << "n\tC(n)\tsign\n";
        for (std::size_t n = 0; n <= s.order(); ++n) {
            out << n << '\t' << s[n].get_str() << '\t' << etaq::sign_char(static_cast<etaq::Sign>(sgn(s[n]))) << '\n';
        }
    }
    emit(out.str(), o.out);
    return kExitOk;
}

int cmd_signs(const Options& o) {
    const auto spec = parse_spec(o.spec);
    if (o.n < 1) throw UsageError("--n must be positive");
    etaq::SignPattern pattern;
    try {
        pattern = etaq::SignPattern::parse(o.pattern);
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid pattern: ") + e.what());
    }
    if (pattern.period() == 0) throw UsageError("--pattern must not be empty");
    if (o.period != 0 && static_cast<i64>(pattern.period()) != o.period) {
        throw UsageError("--pattern has " + std::to_string(pattern.period()) + " signs but --period is " +
                         std::to_string(o.period));
    }
    const auto s = etaq::expand(spec, static_cast<std::size_t>(o.n));
    const auto check = etaq::check_pattern(s, pattern, 1);
    std::ostringstream out;
    if (structured(o)) {
        out << "etaq-signs 1\nspec: " << spec.to_string() << "\npattern: " << pattern.to_string()
            << "\nrange: [1, " << o.n << "]\nconfirmed: " << (check.confirmed ? "true" : "false") << "\n";
        if (!check.confirmed) {
            out << "first_violation: " << check.first_violation << "\nexpected: " << etaq::sign_char(check.expected)
                << "\nactual: " << etaq::sign_char(check.actual) << "\n";
        }
        out << "end\n";
    } else if (check.confirmed) {
        out << "confirmed: signs of " << spec.to_string() << " follow " << pattern.to_string() << " for 1 <= n <= "
            << o.n << "\n";
    } else {
        out << "violation at n = " << check.first_violation << ": expected " << etaq::sign_char(check.expected)
            << ", found " << etaq::sign_char(check.actual) << "\n";
    }
    emit(out.str(), o.out);
    return check.confirmed ? kExitOk : kExitViolation;
}

int cmd_exact(const Options& o) {
    if (o.which_case != 1 && o.which_case != 2) throw UsageError("--case must be 1 or 2");
    if (o.n < 1) throw UsageError("--n must be positive");
    const std::optional<i64> K = o.K > 0 ? std::optional<i64>(o.K) : std::nullopt;
    const auto r = o.which_case == 1 ? etaq::c1_exact(o.n, K) : etaq::c2_exact(o.n, K);
    const auto rounded = r.rounded();
    std::ostringstream out;
    if (structured(o)) {
        out << "etaq-exact 1\ncase: " << o.which_case << "\nn: " << r.n << "\nK: " << r.K
            << "\nterms_used: " << r.terms_used << "\nvalue: " << fmt(r.value) << "\ntail_bound: " << fmt(r.tail_bound)
            << "\nroundoff: " << fmt(r.roundoff) << "\nconverged: " << (r.converged ? "true" : "false")
            << "\nrounded: " << (rounded ? std::to_string(*rounded) : std::string("none")) << "\nend\n";
    } else {
        out << "case " << o.which_case << ", n = " << r.n << ", K = " << r.K << " (" << r.terms_used << " terms)\n";
        out << "value       " << fmt(r.value, 12) << "\n";
        out << "tail bound  " << fmt(r.tail_bound, 6) << (r.converged ? "" : "  (did not converge)") << "\n";
        out << "roundoff    " << fmt(r.roundoff, 3) << "\n";
        out << "rounded     " << (rounded ? std::to_string(*rounded) : std::string("unavailable (tail + roundoff >= 1/2)"))
            << "\n";
    }
    emit(out.str(), o.out);
    return kExitOk;
}

int cmd_decompose(const Options& o) {
    if (o.n < 1) throw UsageError("--n must be positive");
    const auto d = etaq::c3_decomposition(o.n);
    const int sign = (d.main > 0) - (d.main < 0);
    const auto margin = etaq::thm3_inequality(o.n);
    std::ostringstream out;
    if (structured(o)) {
        out << "etaq-decompose 1\nn: " << o.n << "\nalpha: " << fmt(etaq::alpha_n(o.n)) << "\nell: " << etaq::ell_n(o.n)
            << "\nmain: " << fmt(d.main) << "\nmain_sign: " << sign << "\ne3_bound: " << fmt(d.e3_bound)
            << "\nen_bound: " << fmt(d.en_bound) << "\nsum1_bound: " << fmt(d.sum1_bound)
            << "\nsum32_bound: " << fmt(d.sum32_bound) << "\nerror_total: " << fmt(d.error_total())
            << "\ninequality_margin: " << (margin ? fmt(*margin) : std::string("none")) << "\nend\n";
    } else {
        out << "n = " << o.n << ", alpha_n = " << fmt(etaq::alpha_n(o.n), 8) << ", ell_n = " << etaq::ell_n(o.n) << "\n";
        out << "M3          " << fmt(d.main, 10) << "  (sign " << (sign > 0 ? "+1" : sign < 0 ? "-1" : "0") << ")\n";
        out << "|E3|    <=  " << fmt(d.e3_bound, 10) << "\n";
        out << "|E|     <=  " << fmt(d.en_bound, 10) << "\n";
        out << "|S1|    <=  " << fmt(d.sum1_bound, 10) << "\n";
        out << "|S32|   <=  " << fmt(d.sum32_bound, 10) << "\n";
        out << "errors  <=  " << fmt(d.error_total(), 10) << "\n";
        out << "inequality margin " << (margin ? fmt(*margin, 8) : std::string("n/a (below validity floor)")) << "\n";
    }
    emit(out.str(), o.out);
    return kExitOk;
}

int cmd_certify(const Options& o) {
    if (o.theorem < 1 || o.theorem > 3) throw UsageError("--theorem must be 1, 2 or 3");
    etaq::Certificate cert;
    try {
        cert = etaq::certify_theorem(o.theorem, o.n_max, etaq::resolve_threads(o.threads));
    } catch (const etaq::CertificationFailure& e) {
        std::cerr << "certification failed (" << e.component() << ", n = " << e.n() << "): " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::string text = etaq::serialize(cert);
    if (!o.out.empty()) emit(text, o.out);
    if (structured(o) && o.out.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::cout << "theorem " << cert.theorem_id << " (" << cert.spec << ", pattern " << cert.pattern.to_string()
              << ") certified\n";
    std::cout << "  direct check      [" << cert.direct_check_range.lo << ", " << cert.direct_check_range.hi
              << "] (expanded to " << cert.direct_verified_range.hi << ")\n";
    std::cout << "  inequality        [" << cert.inequality_range.lo << ", " << cert.inequality_range.hi << "]\n";
    for (const auto& b : cert.branches) {
        std::cout << "  branch " << b.name << ": threshold " << b.threshold << ", " << b.count
                  << " values, min margin " << fmt(b.min_margin, 6) << " at n = " << b.argmin << "\n";
    }
    if (!cert.structural_zero_residues.empty()) {
        std::cout << "  structural zero residues mod " << cert.pattern.period() << ":";
        for (i64 r : cert.structural_zero_residues) std::cout << ' ' << r;
        std::cout << "\n";
    }
    if (!o.out.empty()) std::cout << "  certificate written to " << o.out << "\n";
    return kExitOk;
}

std::pair<i64, i64> parse_delta(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError("--delta must look like lo..hi");
    try {
        std::size_t used1 = 0, used2 = 0;
        const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
        const i64 lo = std::stoll(a, &used1), hi = std::stoll(b, &used2);
        if (used1 != a.size() || used2 != b.size() || lo > hi) throw UsageError("--delta must look like lo..hi");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("--delta must look like lo..hi");
    }
}

int cmd_scan(const Options& o) {
    etaq::ScanOptions opt;
    opt.max_level = o.max_level;
    std::tie(opt.delta_lo, opt.delta_hi) = parse_delta(o.delta);
    opt.period_max = o.period_max;
    opt.n_verify = o.n_verify;
    opt.n_start = o.n_start;
    opt.threads = etaq::resolve_threads(o.threads);
    std::vector<etaq::ScanHit> hits;
    try {
        hits = etaq::scan(opt);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::string text = etaq::format_scan_hits(hits, opt);
    if (!o.out.empty()) emit(text, o.out);
    if (structured(o) || o.out.empty()) {
        if (o.out.empty()) std::cout << text;
    } else {
        std::cout << hits.size() << " hits written to " << o.out << "\n";
    }
    return kExitOk;
}

int cmd_known(const Options& o) {
    if (o.n_max < 1) throw UsageError("--n-max must be positive");
    bool ok = true;
    for (const auto& r : etaq::check_known_patterns(o.n_max)) {
        ok = ok && r.ok;
        std::cout << r.name << ": " << (r.ok ? "ok" : "VIOLATED") << " up to n = " << r.checked_to << "; pattern "
                  << r.pattern << "; zeros:";
        const std::size_t shown = std::min<std::size_t>(r.zeros.size(), 20);
        for (std::size_t i = 0; i < shown; ++i) std::cout << ' ' << r.zeros[i];
        if (r.zeros.size() > shown) std::cout << " ... (" << r.zeros.size() << " total)";
        if (r.zeros.empty()) std::cout << " none";
        std::cout << "\n";
        for (i64 n : r.violations) std::cout << "  violation at n = " << n << "\n";
    }
    return ok ? kExitOk : kExitViolation;
}

int cmd_recheck(const Options& o) {
    std::ifstream f(o.in, std::ios::binary);
    if (!f) throw UsageError("cannot open " + o.in);
    std::ostringstream buf;
    buf << f.rdbuf();
    etaq::Certificate cert;
    try {
        cert = etaq::parse_certificate(buf.str());
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << o.in << ": " << e.what() << "\n";
        return kExitViolation;
    }
    const auto r = etaq::recheck(cert, etaq::resolve_threads(o.threads));
    for (const auto& p : r.problems) std::cout << "problem: " << p << "\n";
    std::cout << o.in << ": theorem " << cert.theorem_id << " certificate " << (r.ok ? "verified" : "REJECTED") << "\n";
    return r.ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"etaq: signs of eta-quotient coefficients"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "structured"}));
    app.add_option("--threads", o.threads, "Worker threads (default: ETAQ_THREADS, else all cores)");

    auto* expand = app.add_subcommand("expand", "List n, C(n) and sign(C(n)) for 0 <= n <= N");
    expand->add_option("--spec", o.spec, "Eta-quotient, e.g. 1^1,5^-2")->required();
    expand->add_option("--n", o.n, "Truncation order N")->required();

    auto* signs = app.add_subcommand("signs", "Check a periodic sign pattern for 1 <= n <= N");
    signs->add_option("--spec", o.spec, "Eta-quotient, e.g. 1^9,3^-5")->required();
    signs->add_option("--n", o.n, "Last index checked")->required();
    signs->add_option("--pattern", o.pattern, "Signs for residues 0..M-1, left to right, from {+,-,0}")->required();
    signs->add_option("--period", o.period, "Expected pattern length M");

    auto* exact = app.add_subcommand("exact", "Evaluate the exact series for case 1 (1^1,5^-2) or 2 (1^1,2^2,4^-3)");
    exact->add_option("--case", o.which_case, "1 or 2")->required();
    exact->add_option("--n", o.n, "Coefficient index")->required();
    exact->add_option("--K", o.K, "Truncation (default: least multiple of the modulus with tail < 1/4)");

    auto* decompose = app.add_subcommand("decompose", "Main term and error bounds for 1^9,3^-5");
    decompose->add_option("--n", o.n, "Coefficient index")->required();

    auto* certify = app.add_subcommand("certify", "Certify theorem 1, 2 or 3 up to --n-max");
    certify->add_option("--theorem", o.theorem, "1, 2 or 3")->required();
    certify->add_option("--n-max", o.n_max, "Last n checked by the inequality");
    certify->add_option("--out", o.out, "Certificate file");

    auto* scan = app.add_subcommand("scan", "Search eta-quotients for purely periodic sign patterns");
    scan->add_option("--max-level", o.max_level, "Largest level l");
    scan->add_option("--delta", o.delta, "Exponent range lo..hi");
    scan->add_option("--period-max", o.period_max, "Largest period tried");
    scan->add_option("--n-verify", o.n_verify, "Verification depth");
    scan->add_option("--n-start", o.n_start, "First index whose sign must fit the pattern");
    scan->add_option("--out", o.out, "Hit list file");

    auto* known = app.add_subcommand("known", "Check the classical patterns of 1^2,3^-1 and 1^1,5^-1");
    known->add_option("--n-max", o.n_max, "Last n checked");

    auto* recheck = app.add_subcommand("recheck", "Recompute a certificate from scratch and compare");
    recheck->add_option("--in", o.in, "Certificate file")->required();

    for (auto* sub : {expand, signs, exact, decompose}) sub->add_option("--out", o.out, "Output file");
    for (auto* sub : app.get_subcommands({})) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "structured"}));
        sub->add_option("--threads", o.threads, "Worker threads");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*expand) return cmd_expand(o);
        if (*signs) return cmd_signs(o);
        if (*exact) return cmd_exact(o);
        if (*decompose) return cmd_decompose(o);
        if (*certify) return cmd_certify(o);
        if (*scan) return cmd_scan(o);
        if (*known) return cmd_known(o);
        if (*recheck) return cmd_recheck(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
