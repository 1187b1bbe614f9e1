#include "weh/resultant.hpp"

#include <random>

namespace weh {

std::vector<std::vector<Poly>> sylvester_matrix(const Poly& p, const Poly& q,
                                                const std::string& var) {
    const auto& tab = p.table();
    int v = tab->index(var);
    auto pc = p.coeffs_in(v);
    auto qc = q.coeffs_in(v);
    size_t m = pc.size() - 1, n = qc.size() - 1; // degrees
    size_t dim = m + n;
    std::vector<std::vector<Poly>> s(dim, std::vector<Poly>(dim, Poly::zero(tab)));
    // n rows of p's coefficients (descending), then m rows of q's
    for (size_t r = 0; r < n; ++r)
        for (size_t k = 0; k <= m; ++k) s[r][r + k] = pc[m - k];
    for (size_t r = 0; r < m; ++r)
        for (size_t k = 0; k <= n; ++k) s[n + r][r + k] = qc[n - k];
    return s;
}

Poly bareiss_determinant(std::vector<std::vector<Poly>> m, const VarTablePtr& tab) {
    size_t n = m.size();
    if (n == 0) return Poly::constant(tab, 1);
    int sign = 1;
    Poly prev = Poly::constant(tab, 1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly::zero(tab);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.exact_divide(prev);
            }
            m[i][k] = Poly::zero(tab);
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

Poly resultant_bareiss(const Poly& p, const Poly& q, const std::string& var) {
    return bareiss_determinant(sylvester_matrix(p, q, var), p.table());
}

namespace {

// Univariate view: coefficients ascending in the eliminated variable.
struct UPoly {
    std::vector<Poly> c;

    int64_t deg() const { return static_cast<int64_t>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    const Poly& lc() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

UPoly upoly_of(const Poly& p, int var) {
    UPoly u{p.coeffs_in(var)};
    u.trim();
    return u;
}

UPoly scale(const UPoly& a, const Poly& s) {
    UPoly r;
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.push_back(x * s);
    r.trim();
    return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r;
    size_t n = std::max(a.c.size(), b.c.size());
    if (n == 0) return r;
    const auto& tab = (a.c.empty() ? b.c[0] : a.c[0]).table();
    r.c.assign(n, Poly::zero(tab));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    r.trim();
    return r;
}

// b shifted by x^k and scaled
UPoly shift_scale(const UPoly& b, size_t k, const Poly& s) {
    UPoly r;
    const auto& tab = b.c[0].table();
    r.c.assign(b.c.size() + k, Poly::zero(tab));
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i + k] = b.c[i] * s;
    r.trim();
    return r;
}

// Exact pseudo-remainder: lc(B)^(deg A - deg B + 1) * A  mod  B.
UPoly prem(const UPoly& a, const UPoly& b) {
    int64_t e = b.deg();
    const Poly& d = b.lc();
    UPoly r = a;
    int64_t steps_allowed = a.deg() - e + 1;
    int64_t steps_used = 0;
    while (!r.zero() && r.deg() >= e) {
        Poly ell = r.lc();
        size_t k = static_cast<size_t>(r.deg() - e);
        r = sub(scale(r, d), shift_scale(b, k, ell));
        ++steps_used;
    }
    // normalize to the full multiplier lc(B)^(delta+1)
    for (; steps_used < steps_allowed; ++steps_used) r = scale(r, d);
    return r;
}

UPoly divide_coeffs(const UPoly& a, const Poly& divisor) {
    UPoly r;
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.push_back(x.exact_divide(divisor));
    return r;
}

Poly pow_poly(const Poly& p, int64_t e) {
    return p.pow(static_cast<uint32_t>(e));
}

// Subresultant PRS resultant; matches the Sylvester determinant exactly.
Poly resultant_upoly(UPoly a, UPoly b, const VarTablePtr& tab) {
    if (a.zero() || b.zero()) return Poly::zero(tab);
    if (a.deg() == 0 && b.deg() == 0) return Poly::constant(tab, 1);
    if (a.deg() < b.deg()) {
        Poly r = resultant_upoly(b, a, tab);
        return ((a.deg() * b.deg()) % 2 != 0) ? -r : r;
    }
    if (b.deg() == 0) return pow_poly(b.lc(), a.deg());
    Poly g = Poly::constant(tab, 1);
    Poly h = Poly::constant(tab, 1);
    int s = 1;
    while (true) {
        int64_t d = a.deg(), e = b.deg();
        int64_t delta = d - e;
        if ((d % 2 != 0) && (e % 2 != 0)) s = -s;
        UPoly r = prem(a, b);
        a = b;
        b = divide_coeffs(r, g * pow_poly(h, delta));
        g = a.lc();
        if (delta > 0) h = pow_poly(g, delta).exact_divide(pow_poly(h, delta - 1));
        if (b.zero()) return Poly::zero(tab);
        if (b.deg() == 0) {
            int64_t q = a.deg(); // >= 1
            Poly res = pow_poly(b.lc(), q).exact_divide(pow_poly(h, q - 1));
            return s < 0 ? -res : res;
        }
    }
}

} // namespace

Poly resultant_prs(const Poly& p, const Poly& q, const std::string& var) {
    int v = p.table()->index(var);
    return resultant_upoly(upoly_of(p, v), upoly_of(q, v), p.table());
}

namespace {

// Specialize every variable except `var` at random small rationals and
// compare the Bareiss resultant of the specializations with the evaluated
// PRS result. Samples where a leading coefficient collapses are re-drawn.
bool specialized_agreement(const Poly& p, const Poly& q, const std::string& var,
                           const Poly& claimed, int samples, uint64_t seed) {
    const auto& tab = p.table();
    int v = tab->index(var);
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<long> dist(-19, 19);
    auto plc = p.leading_unit(v).coeff;
    auto qlc = q.leading_unit(v).coeff;
    for (int k = 0; k < samples; ++k) {
        std::map<int, Poly> bind;
        std::map<int, ExtScalar> point;
        for (int i = 0; i < tab->size(); ++i) {
            if (i == v) continue;
            ExtScalar val(rat(dist(gen), 1 + static_cast<long>(gen() % 3)));
            bind.emplace(i, Poly::constant(tab, val));
            point.emplace(i, val);
        }
        if (plc.eval_exact(point).is_zero() || qlc.eval_exact(point).is_zero()) {
            --k;
            continue;
        }
        Poly ps = p.substitute(bind), qs = q.substitute(bind);
        Poly direct = resultant_bareiss(ps, qs, var);
        Poly expect = claimed.substitute(bind);
        if (!(direct == expect)) return false;
    }
    return true;
}

} // namespace

Poly resultant_graded(const Poly& p, const Poly& q, const std::string& var,
                      const std::vector<int>& weights, const std::string& grading_var,
                      const ResultantOptions& opts) {
    const auto& tab = p.table();
    int v = tab->index(var);
    int g = tab->index(grading_var);
    int wg = weights[static_cast<size_t>(g)];
    if (wg <= 0) throw usage_error("grading variable must have positive weight");
    auto wp = p.weighted_degree(weights);
    auto wq = q.weighted_degree(weights);
    if (!wp || !wq) throw usage_error("resultant_graded: inputs are not weighted homogeneous");
    int64_t m = p.degree(v), n = q.degree(v);
    if (m < 1 || n < 1)
        throw usage_error("resultant: both arguments must have positive degree in " + var);
    int64_t target = n * *wp + m * *wq - m * n * weights[static_cast<size_t>(v)];
    std::map<int, Poly> one{{g, Poly::constant(tab, 1)}};
    Poly r1 = resultant_prs(p.substitute(one), q.substitute(one), var);
    // restore the grading variable from the degree formula
    std::vector<Poly::Term> terms;
    for (const auto& [mono, c] : r1.terms()) {
        int64_t wt = 0;
        for (size_t i = 0; i < mono.size(); ++i) wt += int64_t(mono[i]) * weights[i];
        int64_t missing = target - wt;
        if (missing < 0 || missing % wg != 0)
            throw domain_error("resultant_graded: result violates the expected grading");
        Monomial full = mono;
        full[g] = static_cast<uint16_t>(missing / wg);
        terms.push_back({full, c});
    }
    Poly r = Poly::from_terms(tab, std::move(terms));
    if (opts.check != BackendCheck::none) {
        if (!specialized_agreement(p, q, var, r, opts.specialized_samples, opts.seed))
            throw domain_error("resultant_graded disagrees with the Sylvester determinant");
    }
    return r;
}

Poly resultant(const Poly& p, const Poly& q, const std::string& var,
               const ResultantOptions& opts) {
    int v = p.table()->index(var);
    if (p.degree(v) < 1 || q.degree(v) < 1)
        throw usage_error("resultant: both arguments must have positive degree in " + var);
    Poly r = resultant_prs(p, q, var);
    size_t dim = static_cast<size_t>(p.degree(v) + q.degree(v));
    bool do_full = opts.check == BackendCheck::full ||
                   (opts.check == BackendCheck::specialized && dim <= opts.full_check_dim);
    if (do_full) {
        Poly rb = resultant_bareiss(p, q, var);
        if (!(rb == r))
            throw domain_error("resultant backends disagree (Bareiss vs subresultant)");
    } else if (opts.check == BackendCheck::specialized) {
        if (!specialized_agreement(p, q, var, r, opts.specialized_samples, opts.seed))
            throw domain_error("resultant backends disagree at a specialization");
    }
    return r;
}

} // namespace weh
