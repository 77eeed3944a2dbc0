#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "etaq/certify.hpp"

namespace etaq {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_range(const ClosedRange& r) { return "[" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]"; }

std::string fmt_list(const std::vector<i64>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
    return out + "]";
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Parser {
    std::vector<std::string> lines;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("certificate line " + std::to_string(pos + 1) + ": " + msg);
    }

    // Reads "key: value" at the expected indentation.
    std::string field(const std::string& key, std::size_t indent = 0) {
        if (pos >= lines.size()) fail("unexpected end, expected '" + key + "'");
        const std::string& l = lines[pos];
        const std::string prefix = std::string(indent, ' ') + key + ":";
        if (l.rfind(prefix, 0) != 0) fail("expected '" + key + "'");
        ++pos;
        return trim(l.substr(prefix.size()));
    }

    i64 integer(const std::string& s) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(s, &used);
            if (used != s.size()) fail("trailing characters in integer '" + s + "'");
            return v;
        } catch (const std::logic_error&) {
            fail("bad integer '" + s + "'");
        }
    }

    double real(const std::string& s) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) fail("trailing characters in number '" + s + "'");
            return v;
        } catch (const std::out_of_range&) {
            if (s == "inf") return std::numeric_limits<double>::infinity();
            fail("bad number '" + s + "'");
        } catch (const std::invalid_argument&) {
            if (s == "inf") return std::numeric_limits<double>::infinity();
            if (s == "-inf") return -std::numeric_limits<double>::infinity();
            fail("bad number '" + s + "'");
        }
    }

    std::vector<std::string> items(const std::string& s) {
        if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail("expected a bracketed list");
        std::vector<std::string> out;
        const std::string body = s.substr(1, s.size() - 2);
        if (trim(body).empty()) return out;
        std::stringstream ss(body);
        std::string part;
        while (std::getline(ss, part, ',')) out.push_back(trim(part));
        return out;
    }

    std::vector<i64> int_list(const std::string& s) {
        std::vector<i64> out;
        for (const auto& p : items(s)) out.push_back(integer(p));
        return out;
    }

    ClosedRange range(const std::string& s) {
        const auto v = int_list(s);
        if (v.size() != 2) fail("expected [lo, hi]");
        return {v[0], v[1]};
    }
};

}  // namespace

std::string serialize(const Certificate& c) {
    std::string out = "etaq-certificate " + std::to_string(kCertificateFormatVersion) + "\n";
    out += "engine_version: " + c.engine_version + "\n";
    out += "timestamp: " + c.timestamp + "\n";
    out += "theorem: " + std::to_string(c.theorem_id) + "\n";
    out += "spec: " + c.spec + "\n";
    out += "pattern: " + c.pattern.to_string() + "\n";
    out += "direct_check: " + fmt_range(c.direct_check_range) + "\n";
    out += "direct_verified: " + fmt_range(c.direct_verified_range) + "\n";
    out += "inequality: " + fmt_range(c.inequality_range) + "\n";
    out += "min_margin: " + fmt_double(c.min_margin) + "\n";
    out += "slack: " + fmt_double(c.slack) + "\n";
    out += "structural_zero_residues: " + fmt_list(c.structural_zero_residues) + "\n";
    out += "exceptions: [";
    for (std::size_t i = 0; i < c.exceptions.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(c.exceptions[i].n) + ":" + sign_char(c.exceptions[i].sign);
    }
    out += "]\n";
    out += "branches: " + std::to_string(c.branches.size()) + "\n";
    for (const auto& b : c.branches) {
        out += "  - name: " + b.name + "\n";
        out += "    modulus: " + std::to_string(b.modulus) + "\n";
        out += "    residues: " + fmt_list(b.residues) + "\n";
        out += "    threshold: " + std::to_string(b.threshold) + "\n";
        out += "    validity_floor: " + std::to_string(b.validity_floor) + "\n";
        out += "    range: " + fmt_range(b.range) + "\n";
        out += "    count: " + std::to_string(b.count) + "\n";
        out += "    min_margin: " + fmt_double(b.min_margin) + "\n";
        out += "    argmin: " + std::to_string(b.argmin) + "\n";
    }
    out += "end\n";
    return out;
}

Certificate parse_certificate(const std::string& text) {
    Parser p;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        p.lines.push_back(line);
    }
    const std::string header = "etaq-certificate " + std::to_string(kCertificateFormatVersion);
    if (p.lines.empty() || p.lines[0] != header) p.fail("missing header '" + header + "'");
    p.pos = 1;

    Certificate c;
    c.engine_version = p.field("engine_version");
    c.timestamp = p.field("timestamp");
    c.theorem_id = static_cast<int>(p.integer(p.field("theorem")));
    c.spec = p.field("spec");
    try {
        c.pattern = SignPattern::parse(p.field("pattern"));
    } catch (const std::exception& e) {
        --p.pos;
        p.fail(e.what());
    }
    c.direct_check_range = p.range(p.field("direct_check"));
    c.direct_verified_range = p.range(p.field("direct_verified"));
    c.inequality_range = p.range(p.field("inequality"));
    c.min_margin = p.real(p.field("min_margin"));
    c.slack = p.real(p.field("slack"));
    c.structural_zero_residues = p.int_list(p.field("structural_zero_residues"));
    for (const auto& item : p.items(p.field("exceptions"))) {
        const auto colon = item.find(':');
        if (colon == std::string::npos || colon + 2 != item.size()) p.fail("bad exception entry '" + item + "'");
        const char s = item.back();
        if (s != '+' && s != '-' && s != '0') p.fail("bad exception sign");
        c.exceptions.push_back({p.integer(item.substr(0, colon)), static_cast<Sign>(s == '+' ? 1 : s == '-' ? -1 : 0)});
    }
    const i64 nb = p.integer(p.field("branches"));
    if (nb < 0) p.fail("negative branch count");
    for (i64 i = 0; i < nb; ++i) {
        InequalityBranch b;
        b.name = p.field("- name", 2);
        b.modulus = p.integer(p.field("modulus", 4));
        b.residues = p.int_list(p.field("residues", 4));
        b.threshold = p.integer(p.field("threshold", 4));
        b.validity_floor = p.integer(p.field("validity_floor", 4));
        b.range = p.range(p.field("range", 4));
        b.count = p.integer(p.field("count", 4));
        b.min_margin = p.real(p.field("min_margin", 4));
        b.argmin = p.integer(p.field("argmin", 4));
        c.branches.push_back(std::move(b));
    }
    if (p.pos >= p.lines.size() || p.lines[p.pos] != "end") p.fail("expected 'end'");
    return c;
}

}  // namespace etaq
