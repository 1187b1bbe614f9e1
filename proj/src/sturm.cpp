#include "weh/sturm.hpp"

#include <algorithm>

namespace weh {

QPoly QPoly::derivative() const {
    QPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * Rat(static_cast<long>(i)));
    d.trim();
    return d;
}

namespace {

// remainder of a by b (monic-free rational division)
QPoly rem(QPoly a, const QPoly& b) {
    a.trim();
    while (a.deg() >= b.deg() && a.deg() >= 0 && b.deg() >= 0) {
        Rat q = a.c.back() / b.c.back();
        size_t shift = static_cast<size_t>(a.deg() - b.deg());
        for (size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= q * b.c[i];
        a.trim();
    }
    a.trim();
    return a;
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain;
    QPoly a = p;
    a.trim();
    if (a.c.empty()) return chain;
    chain.push_back(a);
    QPoly b = a.derivative();
    while (!b.c.empty()) {
        chain.push_back(b);
        QPoly r = rem(a, b);
        for (auto& x : r.c) x = -x;
        a = b;
        b = r;
    }
    return chain;
}

int sign_changes(const std::vector<QPoly>& chain, const Rat& x) {
    int changes = 0, last = 0;
    for (const auto& q : chain) {
        Rat v = q.eval(x);
        int s = sgn(v);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

} // namespace

int sturm_count(const QPoly& p, const Rat& lo, const Rat& hi) {
    auto chain = sturm_chain(p);
    if (chain.empty()) return 0;
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

std::vector<Interval> isolate_real_roots(const QPoly& p, const Rat& width) {
    std::vector<Interval> out;
    QPoly q = p;
    q.trim();
    if (q.deg() <= 0) return out;
    // Cauchy bound
    Rat bound(1);
    for (size_t i = 0; i + 1 < q.c.size(); ++i) {
        Rat r = abs(q.c[i]) / abs(q.c.back());
        if (r + 1 > bound) bound = r + 1;
    }
    auto chain = sturm_chain(q);
    auto count = [&](const Rat& lo, const Rat& hi) {
        return sign_changes(chain, lo) - sign_changes(chain, hi);
    };
    std::vector<Interval> work{{-bound, bound}};
    while (!work.empty()) {
        Interval iv = work.back();
        work.pop_back();
        int n = count(iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1 && iv.hi - iv.lo < width && q.eval(iv.hi) != 0) {
            out.push_back(iv);
            continue;
        }
        Rat m = iv.mid();
        if (q.eval(m) == 0) {
            // nudge the split point off the root
            m += (iv.hi - iv.lo) / 64;
        }
        work.push_back({iv.lo, m});
        work.push_back({m, iv.hi});
    }
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

} // namespace weh
