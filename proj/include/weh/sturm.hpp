#pragma once

#include <optional>
#include <vector>

#include "weh/rat.hpp"

namespace weh {

// Dense univariate polynomial over Q, ascending coefficients. Small exact
// root-isolation helper used by the sampled sign tables.
struct QPoly {
    std::vector<Rat> c;

    int64_t deg() const { return static_cast<int64_t>(c.size()) - 1; }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    QPoly derivative() const;
};

struct Interval {
    Rat lo, hi; // exclusive of roots at endpoints by construction
    Rat mid() const { return (lo + hi) / 2; }
};

// Number of distinct real roots in (lo, hi] via Sturm chains.
int sturm_count(const QPoly& p, const Rat& lo, const Rat& hi);

// Disjoint isolating intervals for all distinct real roots, each refined
// until its width is below `width`. Requires a squarefree-enough input (the
// chain handles repeated roots by counting distinct ones).
std::vector<Interval> isolate_real_roots(const QPoly& p, const Rat& width);

} // namespace weh
