#pragma once

#include <random>

#include "weh/poly.hpp"

// Shared generators for the randomized property suites.
namespace weh::testing {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed = 20250808) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }

    Rat rational(long max_abs = 9, long max_den = 5) {
        long d = integer(1, max_den);
        return rat(integer(-max_abs, max_abs), d);
    }

    Rat nonzero_rational(long max_abs = 9, long max_den = 5) {
        while (true) {
            Rat r = rational(max_abs, max_den);
            if (r != 0) return r;
        }
    }

    ExtScalar scalar(int radicand = 0) {
        if (radicand == 0 || integer(0, 1) == 0) return ExtScalar(rational());
        return ExtScalar(rational(), rational(), radicand);
    }

    Poly poly(const VarTablePtr& tab, int max_terms = 6, uint32_t max_exp = 3,
              int radicand = 0) {
        std::vector<Poly::Term> terms;
        int n = static_cast<int>(integer(0, max_terms));
        for (int t = 0; t < n; ++t) {
            Monomial m(tab->size(), 0);
            for (int v = 0; v < tab->size(); ++v)
                m[v] = static_cast<uint32_t>(integer(0, max_exp));
            terms.push_back({std::move(m), scalar(radicand)});
        }
        return Poly::from_terms(tab, std::move(terms));
    }

    Poly nonzero_poly(const VarTablePtr& tab, int max_terms = 6, uint32_t max_exp = 3,
                      int radicand = 0) {
        while (true) {
            Poly p = poly(tab, max_terms, max_exp, radicand);
            if (!p.is_zero()) return p;
        }
    }

    // Nonzero polynomial with positive degree in the given variable.
    Poly poly_in_var(const VarTablePtr& tab, const std::string& var, uint32_t min_deg = 1,
                     int max_terms = 5, uint32_t max_exp = 2) {
        int v = tab->index(var);
        while (true) {
            Poly p = poly(tab, max_terms, max_exp);
            if (p.degree(v) >= static_cast<int64_t>(min_deg)) return p;
        }
    }
};

} // namespace weh::testing
