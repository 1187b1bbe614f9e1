#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "weh/elimination.hpp"
#include "weh/poly.hpp"

namespace weh {

enum class MatchMode {
    exact,              // canonical polynomials compare equal
    up_to_constant,     // equal after scaling by a recorded nonzero rational
    up_to_seen_factors, // equal up to previously-seen factors and a constant
    structural,         // boolean structural fact (symmetry, degree, ...)
    scan,               // admissible-multiplicity scan verdict
    numeric,            // floating comparison within a tolerance
};

std::string to_string(MatchMode m);

struct Claim {
    std::string id;
    std::string anchor; // the quantity being pinned, quoted next to the verdict
    MatchMode mode = MatchMode::exact;
    bool pass = false;
    std::string expected;
    std::string derived;
    std::string constant; // recorded scaling constant (up_to_constant modes)
    std::vector<std::string> discrepancy_factors;
    std::string note;
};

struct LedgerEntry {
    std::string quantity;
    std::string justification;
    bool nonzero = false;
};

struct CaseReport {
    std::string pipeline_id;
    std::string title;
    std::vector<Claim> claims;
    std::vector<LedgerEntry> ledger;
    EliminationTrace trace;
    bool ledger_violation = false;
    std::string error;
    double wall_ms = 0;

    bool pass() const;
    // Deterministic content hash; excludes wall-clock fields.
    uint64_t content_hash() const;
    nlohmann::json to_json() const;
    std::string to_markdown() const;
};

// Repr helper: full text for small polynomials, a summary for huge ones.
std::string poly_repr(const Poly& p, size_t max_chars = 400);

// --- claim constructors -------------------------------------------------

Claim claim_exact(const std::string& id, const std::string& anchor, const Poly& derived,
                  const Poly& expected);

// derived == c * expected for a nonzero rational constant c (recorded).
Claim claim_up_to_constant(const std::string& id, const std::string& anchor, const Poly& derived,
                           const Poly& expected);

// derived == c * expected * prod(seen factor powers); the cofactor is peeled
// greedily against the seen list (plus single-variable monomials) and must
// reduce to a nonzero rational.
Claim claim_up_to_seen_factors(const std::string& id, const std::string& anchor,
                               const Poly& derived, const Poly& expected,
                               const std::vector<Poly>& seen);

Claim claim_structural(const std::string& id, const std::string& anchor, bool pass,
                       const std::string& note);

Claim claim_scan(const std::string& id, const std::string& anchor, const ScanReport& scan);

Claim claim_numeric(const std::string& id, const std::string& anchor, double value,
                    double bound, const std::string& note = "");

} // namespace weh
