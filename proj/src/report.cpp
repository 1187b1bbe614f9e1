#include "weh/report.hpp"

#include <sstream>

#include "weh/poly_io.hpp"

namespace weh {

std::string to_string(MatchMode m) {
    switch (m) {
        case MatchMode::exact: return "exact";
        case MatchMode::up_to_constant: return "up-to-constant";
        case MatchMode::up_to_seen_factors: return "up-to-seen-factors";
        case MatchMode::structural: return "structural";
        case MatchMode::scan: return "scan";
        case MatchMode::numeric: return "numeric";
    }
    return "?";
}

bool CaseReport::pass() const {
    if (ledger_violation || !error.empty()) return false;
    for (const auto& c : claims)
        if (!c.pass) return false;
    return !claims.empty();
}

static void mix(uint64_t& h, const std::string& s) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
}

uint64_t CaseReport::content_hash() const {
    uint64_t h = 0xcbf29ce484222325ull;
    mix(h, pipeline_id);
    for (const auto& c : claims) {
        mix(h, c.id);
        mix(h, std::to_string(c.pass));
        mix(h, c.expected);
        mix(h, c.derived);
        mix(h, c.constant);
        for (const auto& f : c.discrepancy_factors) mix(h, f);
    }
    for (const auto& l : ledger) {
        mix(h, l.quantity);
        mix(h, std::to_string(l.nonzero));
    }
    for (const auto& s : trace.steps) {
        mix(h, s.op);
        mix(h, s.variable);
        mix(h, std::to_string(s.output_hash));
    }
    mix(h, std::to_string(ledger_violation));
    mix(h, error);
    return h;
}

nlohmann::json CaseReport::to_json() const {
    nlohmann::json j;
    j["pipeline"] = pipeline_id;
    j["title"] = title;
    j["verdict"] = pass() ? "pass" : "fail";
    j["wall_ms"] = wall_ms;
    j["content_hash"] = content_hash();
    if (!error.empty()) j["error"] = error;
    j["ledger_violation"] = ledger_violation;
    j["claims"] = nlohmann::json::array();
    for (const auto& c : claims) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["anchor"] = c.anchor;
        jc["mode"] = to_string(c.mode);
        jc["verdict"] = c.pass ? "pass" : "fail";
        if (!c.expected.empty()) jc["expected"] = c.expected;
        if (!c.derived.empty()) jc["derived"] = c.derived;
        if (!c.constant.empty()) jc["constant"] = c.constant;
        if (!c.discrepancy_factors.empty()) jc["discrepancy_factors"] = c.discrepancy_factors;
        if (!c.note.empty()) jc["note"] = c.note;
        j["claims"].push_back(jc);
    }
    j["ledger"] = nlohmann::json::array();
    for (const auto& l : ledger) {
        j["ledger"].push_back({{"quantity", l.quantity},
                               {"justification", l.justification},
                               {"nonzero", l.nonzero}});
    }
    j["trace"] = nlohmann::json::array();
    for (const auto& s : trace.steps) {
        nlohmann::json js;
        js["op"] = s.op;
        if (!s.variable.empty()) js["variable"] = s.variable;
        js["degrees_in"] = s.degrees_in;
        js["degree_out"] = s.degree_out;
        js["terms_out"] = s.terms_out;
        js["output_hash"] = s.output_hash;
        if (!s.factors_removed.empty()) js["factors_removed"] = s.factors_removed;
        js["wall_ms"] = s.wall_ms;
        j["trace"].push_back(js);
    }
    return j;
}

std::string CaseReport::to_markdown() const {
    std::ostringstream os;
    os << "# " << title << " (`" << pipeline_id << "`)\n\n";
    os << "Overall: **" << (pass() ? "PASS" : "FAIL") << "**";
    os << "  \nwall time: " << wall_ms << " ms\n\n";
    if (!error.empty()) os << "> error: " << error << "\n\n";
    os << "| claim | anchor | mode | verdict |\n|---|---|---|---|\n";
    for (const auto& c : claims) {
        os << "| " << c.id << " | \"" << c.anchor << "\" | " << to_string(c.mode) << " | "
           << (c.pass ? "pass" : "FAIL") << " |\n";
    }
    os << "\n";
    for (const auto& c : claims) {
        os << "### " << c.id << "\n";
        os << "- anchor: \"" << c.anchor << "\"\n";
        if (!c.expected.empty()) os << "- expected: `" << c.expected << "`\n";
        if (!c.derived.empty()) os << "- derived: `" << c.derived << "`\n";
        if (!c.constant.empty()) os << "- recorded constant: `" << c.constant << "`\n";
        if (!c.discrepancy_factors.empty()) {
            os << "- discrepancy factors:\n";
            for (const auto& f : c.discrepancy_factors) os << "  - `" << f << "`\n";
        }
        if (!c.note.empty()) os << "- note: " << c.note << "\n";
        os << "- verdict: " << (c.pass ? "pass" : "**FAIL**") << "\n\n";
    }
    if (!ledger.empty()) {
        os << "## Nonvanishing ledger\n\n";
        for (const auto& l : ledger)
            os << "- `" << l.quantity << "` — " << l.justification << " — "
               << (l.nonzero ? "nonzero ok" : "**VIOLATION**") << "\n";
        os << "\n";
    }
    return os.str();
}

std::string poly_repr(const Poly& p, size_t max_chars) {
    std::string s = to_string(p);
    if (s.size() <= max_chars) return s;
    std::ostringstream os;
    os << "<" << p.term_count() << " terms, total degree " << p.total_deg() << ", hash "
       << std::hex << p.hash() << ">";
    return os.str();
}

Claim claim_exact(const std::string& id, const std::string& anchor, const Poly& derived,
                  const Poly& expected) {
    Claim c;
    c.id = id;
    c.anchor = anchor;
    c.mode = MatchMode::exact;
    c.expected = poly_repr(expected);
    c.derived = poly_repr(derived);
    c.pass = (derived == expected);
    return c;
}

namespace {

// derived == c * expected with c a nonzero rational; returns c or nullopt.
std::optional<Rat> constant_ratio(const Poly& derived, const Poly& expected) {
    if (derived.is_zero() || expected.is_zero()) return std::nullopt;
    const auto& lc_d = derived.leading_term().second;
    const auto& lc_e = expected.leading_term().second;
    if (!lc_d.is_rational() || !lc_e.is_rational()) return std::nullopt;
    Rat c = lc_d.rational_part() / lc_e.rational_part();
    if (c == 0) return std::nullopt;
    if (derived == expected * ExtScalar(c)) return c;
    return std::nullopt;
}

} // namespace

Claim claim_up_to_constant(const std::string& id, const std::string& anchor, const Poly& derived,
                           const Poly& expected) {
    Claim c;
    c.id = id;
    c.anchor = anchor;
    c.mode = MatchMode::up_to_constant;
    c.expected = poly_repr(expected);
    c.derived = poly_repr(derived);
    auto ratio = constant_ratio(derived, expected);
    if (ratio) {
        c.pass = true;
        c.constant = to_string(*ratio);
    }
    return c;
}

namespace {

// Tries to peel `seen` factors (and single variables) off num/den until a
// nonzero rational constant remains; returns it and the peeled factors.
std::optional<Rat> peel_ratio(const Poly& num, const Poly& den, const std::vector<Poly>& seen,
                              std::vector<std::string>* factors, bool* inverted) {
    auto attempt = [&](const Poly& a, const Poly& b,
                       std::vector<std::string>& facs) -> std::optional<Rat> {
        auto d = a.divide(b);
        if (!d.exact()) return std::nullopt;
        Poly cof = d.quotient;
        const auto& tab = a.table();
        std::vector<Poly> candidates = seen;
        for (int v = 0; v < tab->size(); ++v) candidates.push_back(Poly::var(tab, v));
        bool progress = true;
        while (progress && !cof.is_constant()) {
            progress = false;
            for (const auto& f : candidates) {
                if (f.is_constant()) continue;
                auto q = cof.divide(f);
                if (q.exact()) {
                    facs.push_back(poly_repr(f, 120));
                    cof = q.quotient;
                    progress = true;
                    break;
                }
            }
        }
        if (cof.is_constant() && !cof.is_zero() && cof.constant_term().is_rational())
            return cof.constant_term().rational_part();
        return std::nullopt;
    };
    std::vector<std::string> facs;
    if (auto r = attempt(num, den, facs)) {
        if (factors) *factors = facs;
        if (inverted) *inverted = false;
        return r;
    }
    facs.clear();
    if (auto r = attempt(den, num, facs)) {
        if (factors) *factors = facs;
        if (inverted) *inverted = true;
        return Rat(1) / *r;
    }
    // factors may sit on both sides: strip each side to its seen-free core
    auto strip = [&](Poly p, const std::string& tag, std::vector<std::string>& facs2) {
        const auto& tab = p.table();
        std::vector<Poly> candidates = seen;
        for (int v = 0; v < tab->size(); ++v) candidates.push_back(Poly::var(tab, v));
        bool progress = true;
        while (progress && !p.is_constant()) {
            progress = false;
            for (const auto& f : candidates) {
                if (f.is_constant()) continue;
                auto q = p.divide(f);
                if (q.exact()) {
                    facs2.push_back(tag + poly_repr(f, 120));
                    p = q.quotient;
                    progress = true;
                    break;
                }
            }
        }
        return p;
    };
    facs.clear();
    Poly a = strip(num, "derived: ", facs);
    Poly b = strip(den, "expected: ", facs);
    if (!a.is_zero() && !b.is_zero()) {
        auto d = a.divide(b);
        if (d.exact() && d.quotient.is_constant() &&
            d.quotient.constant_term().is_rational() && !d.quotient.is_zero()) {
            if (factors) *factors = facs;
            if (inverted) *inverted = false;
            return d.quotient.constant_term().rational_part();
        }
    }
    return std::nullopt;
}

} // namespace

Claim claim_up_to_seen_factors(const std::string& id, const std::string& anchor,
                               const Poly& derived, const Poly& expected,
                               const std::vector<Poly>& seen) {
    Claim c;
    c.id = id;
    c.anchor = anchor;
    c.mode = MatchMode::up_to_seen_factors;
    c.expected = poly_repr(expected);
    c.derived = poly_repr(derived);
    if (derived.is_zero() || expected.is_zero()) return c;
    bool inverted = false;
    auto ratio = peel_ratio(derived, expected, seen, &c.discrepancy_factors, &inverted);
    if (ratio) {
        c.pass = true;
        c.constant = to_string(*ratio);
        if (inverted && !c.discrepancy_factors.empty()) c.note = "factors sit on the expected side";
    }
    return c;
}

Claim claim_structural(const std::string& id, const std::string& anchor, bool pass,
                       const std::string& note) {
    Claim c;
    c.id = id;
    c.anchor = anchor;
    c.mode = MatchMode::structural;
    c.pass = pass;
    c.note = note;
    return c;
}

Claim claim_scan(const std::string& id, const std::string& anchor, const ScanReport& scan) {
    Claim c;
    c.id = id;
    c.anchor = anchor;
    c.mode = MatchMode::scan;
    c.pass = scan.pass;
    c.note = scan.mode + ": " + scan.detail;
    return c;
}

Claim claim_numeric(const std::string& id, const std::string& anchor, double value, double bound,
                    const std::string& note) {
    Claim c;
    c.id = id;
    c.anchor = anchor;
    c.mode = MatchMode::numeric;
    c.pass = std::abs(value) < bound;
    std::ostringstream os;
    os << "value " << value << " vs bound " << bound;
    c.derived = os.str();
    c.note = note;
    return c;
}

} // namespace weh
