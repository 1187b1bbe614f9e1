#include "weh/pipeline.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "weh/poly_io.hpp"

namespace weh {

PipelineConfig PipelineConfig::from_json_text(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    PipelineConfig c;
    if (j.contains("scan_lo")) c.scan_lo = j["scan_lo"].get<long>();
    if (j.contains("scan_hi")) c.scan_hi = j["scan_hi"].get<long>();
    if (j.contains("tolerance")) c.tolerance = j["tolerance"].get<double>();
    if (j.contains("jobs")) c.jobs = j["jobs"].get<int>();
    if (j.contains("full_symbolic")) c.full_symbolic = j["full_symbolic"].get<bool>();
    if (j.contains("pinned_p34")) {
        c.pinned_p34.clear();
        for (const auto& pr : j["pinned_p34"])
            c.pinned_p34.push_back({pr[0].get<long>(), pr[1].get<long>()});
    }
    if (j.contains("pinned_p2")) {
        c.pinned_p2 = {j["pinned_p2"][0].get<long>(), j["pinned_p2"][1].get<long>()};
    }
    if (j.contains("expected_overrides"))
        for (auto it = j["expected_overrides"].begin(); it != j["expected_overrides"].end(); ++it)
            c.expected_overrides[it.key()] = it.value().get<std::string>();
    if (j.contains("derivation_overrides")) {
        for (auto p = j["derivation_overrides"].begin(); p != j["derivation_overrides"].end(); ++p)
            for (auto d = p.value().begin(); d != p.value().end(); ++d)
                for (auto v = d.value().begin(); v != d.value().end(); ++v)
                    c.derivation_overrides[p.key()][d.key()][v.key()] = v.value().get<std::string>();
    }
    if (j.contains("resultant_check")) {
        std::string m = j["resultant_check"].get<std::string>();
        if (m == "full")
            c.res_opts.check = BackendCheck::full;
        else if (m == "specialized")
            c.res_opts.check = BackendCheck::specialized;
        else if (m == "none")
            c.res_opts.check = BackendCheck::none;
        else
            throw usage_error("unknown resultant_check mode: " + m);
    }
    return c;
}

PipelineConfig PipelineConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string PipelineConfig::to_json_text() const {
    nlohmann::json j;
    j["scan_lo"] = scan_lo;
    j["scan_hi"] = scan_hi;
    j["tolerance"] = tolerance;
    j["jobs"] = jobs;
    j["full_symbolic"] = full_symbolic;
    j["pinned_p34"] = pinned_p34;
    j["pinned_p2"] = pinned_p2;
    j["expected_overrides"] = expected_overrides;
    j["derivation_overrides"] = derivation_overrides;
    j["resultant_check"] = res_opts.check == BackendCheck::full        ? "full"
                           : res_opts.check == BackendCheck::specialized ? "specialized"
                                                                         : "none";
    return j.dump(2);
}

uint64_t PipelineConfig::hash() const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : to_json_text()) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

Poly expected_poly(const PipelineConfig& cfg, const VarTablePtr& tab, const std::string& claim_id,
                   const std::string& default_expr) {
    auto it = cfg.expected_overrides.find(claim_id);
    return parse_poly(tab, it != cfg.expected_overrides.end() ? it->second : default_expr);
}

Derivation build_derivation(const PipelineConfig& cfg, const std::string& pipeline_id,
                            const VarTablePtr& tab, const std::string& name,
                            const std::map<std::string, std::string>& rules,
                            const std::vector<std::string>& constants) {
    std::map<std::string, std::string> table = rules;
    auto p = cfg.derivation_overrides.find(pipeline_id);
    if (p != cfg.derivation_overrides.end()) {
        auto d = p->second.find(name);
        if (d != p->second.end())
            for (const auto& [var, expr] : d->second) table[var] = expr;
    }
    Derivation der(name, tab);
    for (const auto& [var, expr] : table) der.rule(var, RatFunc(parse_poly(tab, expr)));
    for (const auto& c : constants) der.constant(c);
    return der;
}

void PipelineContext::ledger(const Poly& quantity, const std::string& justification) {
    LedgerEntry e{poly_repr(quantity, 200), justification, !quantity.is_zero()};
    report.ledger.push_back(e);
    if (!e.nonzero) {
        report.ledger_violation = true;
        throw ledger_violation("ledger entry vanished: " + e.quantity);
    }
}

void PipelineContext::ledger(const RatFunc& quantity, const std::string& justification) {
    ledger(quantity.num(), justification);
}

namespace {

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

// Content-addressed cache of intermediate polynomials, enabled by the
// WEH_CACHE_DIR environment variable.
std::optional<std::string> cache_get(uint64_t key) {
    const char* dir = std::getenv("WEH_CACHE_DIR");
    if (!dir) return std::nullopt;
    std::ostringstream path;
    path << dir << "/" << std::hex << key << ".poly";
    std::ifstream in(path.str());
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void cache_put(uint64_t key, const std::string& text) {
    const char* dir = std::getenv("WEH_CACHE_DIR");
    if (!dir) return;
    std::ostringstream path;
    path << dir << "/" << std::hex << key << ".poly";
    std::ofstream out(path.str());
    out << text;
}

} // namespace

Poly PipelineContext::res(const Poly& p, const Poly& q, const std::string& var) {
    TraceStep step;
    step.op = "resultant";
    step.variable = var;
    step.degrees_in = {p.degree(var), q.degree(var)};
    double t0 = now_ms();
    uint64_t key = p.hash() ^ (q.hash() * 0x9e3779b97f4a7c15ull) ^
                   std::hash<std::string>{}(var);
    Poly out(p.table());
    if (auto cached = cache_get(key)) {
        out = parse_poly(p.table(), *cached);
    } else {
        out = resultant(p, q, var, cfg.res_opts);
        cache_put(key, to_string(out));
    }
    step.wall_ms = now_ms() - t0;
    step.degree_out = out.total_deg();
    step.terms_out = out.term_count();
    step.output_hash = out.hash();
    report.trace.add(step);
    return out;
}

Poly PipelineContext::res_graded(const Poly& p, const Poly& q, const std::string& var,
                                 const std::vector<int>& weights,
                                 const std::string& grading_var) {
    TraceStep step;
    step.op = "resultant-graded";
    step.variable = var;
    step.degrees_in = {p.degree(var), q.degree(var)};
    double t0 = now_ms();
    Poly out = resultant_graded(p, q, var, weights, grading_var, cfg.res_opts);
    step.wall_ms = now_ms() - t0;
    step.degree_out = out.total_deg();
    step.terms_out = out.term_count();
    step.output_hash = out.hash();
    report.trace.add(step);
    return out;
}

Poly PipelineContext::div_exact(const Poly& p, const Poly& q, const std::string& what) {
    TraceStep step;
    step.op = "exact-divide: " + what;
    step.degrees_in = {p.total_deg(), q.total_deg()};
    double t0 = now_ms();
    Poly out = p.exact_divide(q);
    step.wall_ms = now_ms() - t0;
    step.degree_out = out.total_deg();
    step.terms_out = out.term_count();
    step.output_hash = out.hash();
    step.factors_removed = {q.hash()};
    report.trace.add(step);
    return out;
}

Poly PipelineContext::strip_factors(const Poly& p, const std::vector<Poly>& known,
                                    const std::string& what) {
    TraceStep step;
    step.op = "strip-factors: " + what;
    step.degrees_in = {p.total_deg()};
    double t0 = now_ms();
    Poly out = p;
    std::vector<Poly> candidates = known;
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& f : candidates) {
            if (f.is_constant()) continue;
            auto d = out.divide(f);
            if (d.exact() && !d.quotient.is_zero()) {
                out = d.quotient;
                step.factors_removed.push_back(f.hash());
                progress = true;
            }
        }
    }
    Rat c = out.content();
    if (c != 0 && c != 1) out = out / ExtScalar(c);
    step.wall_ms = now_ms() - t0;
    step.degree_out = out.total_deg();
    step.terms_out = out.term_count();
    step.output_hash = out.hash();
    report.trace.add(step);
    return out;
}

CaseReport run_guarded(const std::string& id, const std::string& title, const PipelineConfig& cfg,
                       const std::function<void(PipelineContext&)>& body) {
    CaseReport rep;
    rep.pipeline_id = id;
    rep.title = title;
    double t0 = now_ms();
    PipelineContext ctx{cfg, rep};
    try {
        body(ctx);
    } catch (const ledger_violation& e) {
        rep.ledger_violation = true;
        rep.error = e.what();
    } catch (const std::exception& e) {
        rep.error = e.what();
    }
    rep.wall_ms = now_ms() - t0;
    return rep;
}

const std::vector<PipelineInfo>& pipeline_registry() {
    static const std::vector<PipelineInfo> reg = {
        {"q2", "two curvatures: products and the rotation relation", false, run_q2},
        {"q3_dim3", "three curvatures in dimension three: rank-2 shape operator", false,
         run_q3_dim3},
        {"q3_lemma", "three curvatures: base relations and isoparametric exclusion", false,
         run_q3_lemma},
        {"q3_case_a", "three curvatures, one simple: elimination to constants", true,
         run_q3_case_a},
        {"q3_case_b", "three curvatures, two simple: determinant elimination", false,
         run_q3_case_b},
        {"q4_lemma", "four curvatures: base relations and isoparametric exclusion", false,
         run_q4_lemma},
// TEMP
//         {"q4_case1_zero", "four curvatures, one simple, vanishing mixed terms", true,
//          run_q4_case1_zero},
        {"q4_case1_nonzero", "four curvatures, one simple, nonvanishing mixed terms", false,
         run_q4_case1_nonzero},
        {"q4_case2", "four curvatures, two simple", true, run_q4_case2},
// TEMP
//         {"q4_case3", "four curvatures, three simple", true, run_q4_case3},
// TEMP
//         {"boundary", "quantitative bounds near umbilic boundary points", false,
//          run_boundary_checks},
    };
    return reg;
}

std::optional<PipelineInfo> find_pipeline(const std::string& id) {
    for (const auto& p : pipeline_registry())
        if (p.id == id) return p;
    return std::nullopt;
}

} // namespace weh
