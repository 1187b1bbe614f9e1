#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weh/curvature.hpp"
#include "weh/derivation.hpp"
#include "weh/report.hpp"
#include "weh/resultant.hpp"

namespace weh {

// Declarative knobs for one verification pipeline run. Rule tables and
// expected anchors can be overridden from a JSON config file; pipelines read
// them through the accessors so the defaults and the file format coincide.
struct PipelineConfig {
    long scan_lo = 2;
    long scan_hi = 16;
    double tolerance = 1e-9;
    int jobs = 1;
    bool full_symbolic = false; // q4 case-1 (Psi = 0): run the symbolic-multiplicity variant
    std::vector<std::array<long, 2>> pinned_p34{{2, 2}, {2, 3}, {3, 3}};
    std::array<long, 2> pinned_p2{2, 3}; // two pins to witness p2-independence
    ResultantOptions res_opts{};

    // claim id -> replacement expression for the expected value
    // (used for fault injection and paper-constant experiments)
    std::map<std::string, std::string> expected_overrides;
    // pipeline -> derivation name -> variable -> rule expression
    std::map<std::string, std::map<std::string, std::map<std::string, std::string>>>
        derivation_overrides;

    static PipelineConfig from_json_text(const std::string& text);
    static PipelineConfig from_json_file(const std::string& path);
    std::string to_json_text() const;
    uint64_t hash() const;
};

// Expected-value lookup: the default expression unless the config overrides
// the claim id. Expressions are parsed over the pipeline's table.
Poly expected_poly(const PipelineConfig& cfg, const VarTablePtr& tab, const std::string& claim_id,
                   const std::string& default_expr);

// Builds a derivation from a rule table of expression strings, honoring
// config overrides keyed by (pipeline, derivation name).
Derivation build_derivation(const PipelineConfig& cfg, const std::string& pipeline_id,
                            const VarTablePtr& tab, const std::string& name,
                            const std::map<std::string, std::string>& rules,
                            const std::vector<std::string>& constants);

// --- shared pipeline plumbing -------------------------------------------

struct PipelineContext {
    const PipelineConfig& cfg;
    CaseReport& report;

    // Declares a nonvanishing-ledger entry and re-checks it is not the zero
    // polynomial; throws ledger_violation otherwise.
    void ledger(const Poly& quantity, const std::string& justification);
    void ledger(const RatFunc& quantity, const std::string& justification);

    // Traced operations.
    Poly res(const Poly& p, const Poly& q, const std::string& var);
    // Graded variant: computes with the grading variable compressed away.
    Poly res_graded(const Poly& p, const Poly& q, const std::string& var,
                    const std::vector<int>& weights, const std::string& grading_var);
    Poly div_exact(const Poly& p, const Poly& q, const std::string& what);
    // Removes monomial content and known factors; records them in the trace
    // and returns the stripped polynomial.
    Poly strip_factors(const Poly& p, const std::vector<Poly>& known, const std::string& what);

    void add(Claim c) { report.claims.push_back(std::move(c)); }
};

// Wraps a pipeline body with timing and the never-crash contract.
CaseReport run_guarded(const std::string& id, const std::string& title, const PipelineConfig& cfg,
                       const std::function<void(PipelineContext&)>& body);

// --- registry -------------------------------------------------------------

struct PipelineInfo {
    std::string id;
    std::string title;
    bool slow = false;
    CaseReport (*run)(const PipelineConfig&);
};

const std::vector<PipelineInfo>& pipeline_registry();
std::optional<PipelineInfo> find_pipeline(const std::string& id);

CaseReport run_q2(const PipelineConfig&);
CaseReport run_q3_dim3(const PipelineConfig&);
CaseReport run_q3_lemma(const PipelineConfig&);
CaseReport run_q3_case_a(const PipelineConfig&);
CaseReport run_q3_case_b(const PipelineConfig&);
CaseReport run_q4_lemma(const PipelineConfig&);
CaseReport run_q4_case1_zero(const PipelineConfig&);
CaseReport run_q4_case1_nonzero(const PipelineConfig&);
CaseReport run_q4_case2(const PipelineConfig&);
CaseReport run_q4_case3(const PipelineConfig&);
CaseReport run_boundary_checks(const PipelineConfig&);

} // namespace weh
