#pragma once

// Sign-pattern certification for the three theorem cases, the two classical
// patterns used as regressions, and a scanner for new periodic patterns.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "etaq/qseries.hpp"

namespace etaq {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr int kCertificateFormatVersion = 1;

struct ClosedRange {
    i64 lo = 0;
    i64 hi = -1;
    bool empty() const { return hi < lo; }
    bool operator==(const ClosedRange&) const = default;
};

/// One residue-class family verified by an inequality.
struct InequalityBranch {
    std::string name;
    i64 modulus = 1;
    std::vector<i64> residues;
    i64 threshold = 0;
    i64 validity_floor = 0;
    ClosedRange range;
    i64 count = 0;
    double min_margin = 0.0;
    i64 argmin = 0;
    bool operator==(const InequalityBranch&) const = default;
};

struct ExceptionEntry {
    i64 n = 0;
    Sign sign = 0;
    bool operator==(const ExceptionEntry&) const = default;
};

struct Certificate {
    int theorem_id = 0;
    std::string spec;
    SignPattern pattern;
    ClosedRange direct_check_range;     // claimed range settled by expansion
    ClosedRange direct_verified_range;  // range actually expanded and compared
    ClosedRange inequality_range;       // union of the branch ranges
    double min_margin = 0.0;
    double slack = 0.0;
    std::vector<i64> structural_zero_residues;
    std::vector<ExceptionEntry> exceptions;
    std::vector<InequalityBranch> branches;
    std::string timestamp;
    std::string engine_version;

    bool operator==(const Certificate&) const = default;
};

struct TheoremDescription {
    int id = 0;
    std::string spec;
    std::string pattern;
    std::vector<InequalityBranch> branches;  // thresholds and residues, no results
};

/// Static description of Theorem 1, 2 or 3.
TheoremDescription describe_theorem(int id);

class CertificationFailure : public std::runtime_error {
public:
    CertificationFailure(const std::string& what, i64 n, std::string component)
        : std::runtime_error(what), n_(n), component_(std::move(component)) {}
    i64 n() const { return n_; }
    const std::string& component() const { return component_; }

private:
    i64 n_;
    std::string component_;
};

/// Timestamp written into certificates: SOURCE_DATE_EPOCH when set, else the epoch.
std::string certificate_timestamp();

/// Direct expansion check below the thresholds plus inequality margins on
/// [threshold, n_ineq]. Throws CertificationFailure on any mismatch or margin <= slack.
Certificate certify_theorem(int id, i64 n_ineq, unsigned threads = 1);

/// Residues r mod M such that no generalized pentagonal number times `level`
/// is congruent to r; such classes vanish identically for 1^1 level^-d.
std::vector<i64> pentagonal_missing_residues(i64 modulus);

struct RecheckResult {
    bool ok = true;
    std::vector<std::string> problems;
};

/// Re-expands the direct range and recomputes every branch margin from scratch.
RecheckResult recheck(const Certificate& cert, unsigned threads = 1);

std::string serialize(const Certificate& cert);
/// Throws std::runtime_error with the offending line number on malformed input.
Certificate parse_certificate(const std::string& text);

// Known patterns ---------------------------------------------------------------

/// Sign of C_{1^2 3^-1}(n) predicted by Kane's theorem.
Sign kane_sign(i64 n);

struct KnownPatternReport {
    std::string name;
    bool ok = true;
    i64 checked_to = 0;
    std::string pattern;        // inferred or expected periodic pattern
    std::vector<i64> zeros;     // n with vanishing coefficient
    std::vector<i64> violations;
};

std::vector<KnownPatternReport> check_known_patterns(i64 n_max = 10000);

// Scanner ------------------------------------------------------------------------

struct ScanOptions {
    i64 max_level = 5;
    i64 delta_lo = -3;
    i64 delta_hi = 3;
    i64 period_max = 12;
    i64 n_verify = 5000;
    i64 n_start = 1;
    unsigned threads = 1;
};

struct ScanHit {
    EtaQuotientSpec spec;
    i64 period = 0;
    SignPattern pattern;
    i64 verified_up_to = 0;
    bool purely_periodic = false;
};

/// Least M in [1, period_max] with sign(n) a function of n mod M for
/// n_start <= n < signs.size(), and that pattern.
std::optional<std::pair<i64, SignPattern>> infer_period(const std::vector<Sign>& signs, i64 n_start, i64 period_max);

/// Every spec with levels 1..max_level and exponents in [delta_lo, delta_hi]
/// (not all zero), in lexicographic exponent order.
std::vector<EtaQuotientSpec> enumerate_specs(const ScanOptions& opt);

std::vector<ScanHit> scan(const ScanOptions& opt);

std::string format_scan_hits(const std::vector<ScanHit>& hits, const ScanOptions& opt);

}  // namespace etaq
