#pragma once

#include <functional>
#include <string>
#include <vector>

#include "random_poly.hpp"
#include "weh/poly.hpp"
#include "weh/poly_io.hpp"

// Randomized law suites shared between the unit tests and the acceptance
// binary (which runs them at >= 1000 cases each).
namespace weh::testing {

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    bool pass() const { return failures == 0 && cases > 0; }
};

inline SuiteResult run_ring_axioms(int cases, uint64_t seed = 1) {
    Rng rng(seed);
    auto tab = VarTable::make({"x", "y", "z"});
    SuiteResult res{"ring axioms", cases, 0};
    for (int i = 0; i < cases; ++i) {
        Poly p = rng.poly(tab, 5, 3, 2), q = rng.poly(tab, 5, 3, 2), r = rng.poly(tab, 5, 3, 2);
        Poly one = Poly::constant(tab, 1);
        bool ok = (p + q) == (q + p) && (p * q) == (q * p) &&
                  ((p + q) + r) == (p + (q + r)) && ((p * q) * r) == (p * (q * r)) &&
                  (p * (q + r)) == (p * q + p * r) && (p * one) == p &&
                  (p + Poly::zero(tab)) == p && (p - p).is_zero();
        if (!ok) ++res.failures;
    }
    return res;
}

// Structural equality coincides with equality of evaluations at random
// rational points (5 per variable).
inline SuiteResult run_eval_equality(int cases, uint64_t seed = 2) {
    Rng rng(seed);
    auto tab = VarTable::make({"x", "y", "z"});
    SuiteResult res{"structural equality vs evaluation", cases, 0};
    for (int i = 0; i < cases; ++i) {
        Poly p = rng.poly(tab), q = rng.poly(tab);
        Poly s = (p + q) * (p - q);
        Poly t = p * p - q * q;
        if (!(s == t)) {
            ++res.failures;
            continue;
        }
        for (int k = 0; k < 5 * tab->size(); ++k) {
            std::map<int, ExtScalar> pt;
            for (int v = 0; v < tab->size(); ++v) pt.emplace(v, ExtScalar(rng.rational()));
            if (!(s.eval_exact(pt) == t.eval_exact(pt))) {
                ++res.failures;
                break;
            }
        }
    }
    return res;
}

inline SuiteResult run_substitution_homomorphism(int cases, uint64_t seed = 3) {
    Rng rng(seed);
    auto tab = VarTable::make({"x", "y", "z"});
    SuiteResult res{"substitution homomorphism", cases, 0};
    for (int i = 0; i < cases; ++i) {
        Poly p = rng.poly(tab, 4, 2), q = rng.poly(tab, 4, 2);
        std::map<int, Poly> b;
        b.emplace(0, rng.poly(tab, 3, 2));
        b.emplace(1, rng.poly(tab, 3, 2));
        Poly lhs = (p * q).substitute(b);
        Poly rhs = p.substitute(b) * q.substitute(b);
        Poly lhs2 = (p + q).substitute(b);
        Poly rhs2 = p.substitute(b) + q.substitute(b);
        if (!(lhs == rhs && lhs2 == rhs2)) ++res.failures;
    }
    return res;
}

inline SuiteResult run_scalar_conjugation(int cases, uint64_t seed = 4) {
    Rng rng(seed);
    SuiteResult res{"extension conjugation and norm", cases, 0};
    for (int i = 0; i < cases; ++i) {
        ExtScalar x = rng.scalar(3), y = rng.scalar(3);
        bool ok = (x * y).conj() == x.conj() * y.conj() && (x * y).norm() == x.norm() * y.norm();
        if (!ok) ++res.failures;
    }
    return res;
}

inline SuiteResult run_exact_divide_roundtrip(int cases, uint64_t seed = 5) {
    Rng rng(seed);
    auto tab = VarTable::make({"x", "y", "z"});
    SuiteResult res{"exact division round-trip", cases, 0};
    for (int i = 0; i < cases; ++i) {
        Poly q = rng.nonzero_poly(tab, 4, 2), r = rng.poly(tab, 4, 2);
        if (!((q * r).exact_divide(q) == r)) ++res.failures;
    }
    return res;
}

inline SuiteResult run_leading_degree_additivity(int cases, uint64_t seed = 6) {
    Rng rng(seed);
    auto tab = VarTable::make({"x", "y"});
    SuiteResult res{"leading degree additivity", cases, 0};
    for (int i = 0; i < cases; ++i) {
        Poly p = rng.poly_in_var(tab, "x"), q = rng.poly_in_var(tab, "x");
        auto lp = p.leading_unit("x"), lq = q.leading_unit("x"), lpq = (p * q).leading_unit("x");
        // leading coefficients of p and q are nonzero polynomials, so their
        // product is nonzero and degrees add
        if (lpq.degree != lp.degree + lq.degree) ++res.failures;
        if (!(lpq.coeff == lp.coeff * lq.coeff)) ++res.failures;
    }
    return res;
}

inline SuiteResult run_io_roundtrip(int cases, uint64_t seed = 7) {
    Rng rng(seed);
    auto tab = VarTable::make({"mu1", "mu2", "kappa"});
    SuiteResult res{"serialization round-trip", cases, 0};
    for (int i = 0; i < cases; ++i) {
        Poly p = rng.poly(tab, 6, 4, 3);
        Poly back = parse_poly(tab, to_string(p));
        if (!(back == p)) ++res.failures;
    }
    return res;
}

inline std::vector<SuiteResult> run_exact_poly_suites(int cases) {
    return {run_ring_axioms(cases),          run_eval_equality(cases),
            run_substitution_homomorphism(cases), run_scalar_conjugation(cases),
            run_exact_divide_roundtrip(cases),    run_leading_degree_additivity(cases),
            run_io_roundtrip(cases)};
}

} // namespace weh::testing
