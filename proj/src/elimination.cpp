#include "weh/elimination.hpp"

#include <algorithm>
#include <sstream>

namespace weh {

namespace {

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

} // namespace

Poly symmetrize(const Poly& p, const std::vector<std::string>& vars) {
    const auto& tab = p.table();
    std::vector<int> idx;
    for (const auto& v : vars) idx.push_back(tab->index(v));
    std::vector<int> order(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end());
    Poly sum = Poly::zero(tab);
    std::vector<int> arrangement = order;
    do {
        std::vector<int> perm = identity_perm(tab->size());
        for (size_t i = 0; i < idx.size(); ++i) perm[idx[i]] = idx[arrangement[i]];
        sum += p.permute_vars(perm);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return sum;
}

bool is_symmetric(const Poly& p, const std::vector<std::string>& vars,
                  std::pair<std::string, std::string>* witness) {
    const auto& tab = p.table();
    for (size_t i = 0; i + 1 < vars.size(); ++i) {
        std::vector<int> perm = identity_perm(tab->size());
        int a = tab->index(vars[i]), b = tab->index(vars[i + 1]);
        std::swap(perm[a], perm[b]);
        if (!(p.permute_vars(perm) == p)) {
            if (witness) *witness = {vars[i], vars[i + 1]};
            return false;
        }
    }
    return true;
}

Poly elementary_symmetric(const VarTablePtr& tab, const std::vector<std::string>& vars, int k) {
    int n = static_cast<int>(vars.size());
    if (k < 0 || k > n) throw usage_error("elementary symmetric index out of range");
    if (k == 0) return Poly::constant(tab, 1);
    // product expansion prod (1 + t x_i), coefficient of t^k
    std::vector<Poly> e(static_cast<size_t>(k) + 1, Poly::zero(tab));
    e[0] = Poly::constant(tab, 1);
    for (int i = 0; i < n; ++i) {
        Poly xi = Poly::var(tab, vars[i]);
        for (int j = std::min(i + 1, k); j >= 1; --j) e[j] = e[j] + e[j - 1] * xi;
    }
    return e[static_cast<size_t>(k)];
}

Poly elementary_rewrite(const Poly& p, const std::vector<std::string>& vars,
                        const std::vector<std::string>& targets) {
    const auto& tab = p.table();
    if (targets.size() != vars.size()) throw usage_error("need one target per variable");
    std::pair<std::string, std::string> w;
    if (!is_symmetric(p, vars, &w))
        throw domain_error("polynomial is not symmetric in the given variables; swapping " +
                           w.first + " and " + w.second + " changes it");
    std::vector<int> vidx, tidx;
    for (const auto& v : vars) vidx.push_back(tab->index(v));
    for (const auto& t : targets) {
        tidx.push_back(tab->index(t));
        if (p.depends_on(tab->index(t)))
            throw usage_error("input already depends on target variable " + t);
    }
    std::vector<Poly> sigma;
    for (size_t k = 1; k <= vars.size(); ++k)
        sigma.push_back(elementary_symmetric(tab, vars, static_cast<int>(k)));

    Poly work = p;
    Poly out = Poly::zero(tab);
    while (true) {
        // find the term that is lex-greatest in the designated variables
        const Poly::Term* best = nullptr;
        for (const auto& term : work.terms()) {
            bool has = false;
            for (int v : vidx)
                if (term.first[v] > 0) has = true;
            if (!has) continue;
            if (!best) {
                best = &term;
                continue;
            }
            for (int v : vidx) {
                if (term.first[v] != best->first[v]) {
                    if (term.first[v] > best->first[v]) best = &term;
                    break;
                }
            }
        }
        if (!best) break;
        // exponents on vars must be non-increasing for a symmetric leading term
        std::vector<uint32_t> lambda;
        for (int v : vidx) lambda.push_back(best->first[v]);
        for (size_t i = 0; i + 1 < lambda.size(); ++i) {
            if (lambda[i] < lambda[i + 1])
                throw domain_error("unexpected leading exponent pattern; input not symmetric");
        }
        // rest of the monomial (variables outside `vars`)
        Monomial rest = best->first;
        for (int v : vidx) rest[v] = 0;
        Poly rest_mono = Poly::from_terms(tab, {{rest, best->second}});
        Poly e_mono = Poly::constant(tab, 1);
        Poly s_prod = Poly::constant(tab, 1);
        for (size_t i = 0; i < lambda.size(); ++i) {
            uint32_t d = (i + 1 < lambda.size()) ? lambda[i] - lambda[i + 1] : lambda[i];
            if (d == 0) continue;
            e_mono = e_mono * Poly::var(tab, tidx[i], d);
            s_prod = s_prod * sigma[i].pow(d);
        }
        out += rest_mono * e_mono;
        work -= rest_mono * s_prod;
    }
    out += work; // the variable-free remainder passes through unchanged
    return out;
}

ClearedSubstitution clear_substitute(const Poly& p, const std::string& var, const RatFunc& value,
                                     const Poly& clearing) {
    const auto& tab = p.table();
    int v = tab->index(var);
    Poly den = value.den_expanded();
    Poly out = Poly::zero(tab);
    for (const auto& [m, c] : p.terms()) {
        uint32_t e = m[v];
        Monomial rest = m;
        rest[v] = 0;
        Poly factor = clearing;
        for (uint32_t k = 0; k < e; ++k) {
            auto d = factor.divide(den);
            if (!d.exact())
                throw domain_error("insufficient clearing power for " + var + "^" +
                                   std::to_string(e));
            factor = d.quotient;
        }
        out += Poly::from_terms(tab, {{rest, c}}) * factor * value.num().pow(e);
    }
    return {out, clearing};
}

Poly linear_system_determinant(const std::array<std::array<Poly, 3>, 3>& r) {
    const auto& m = r;
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ScanReport scan_positivity_after_offset(const Poly& coeff,
                                        const std::vector<std::pair<std::string, long>>& offsets) {
    const auto& tab = coeff.table();
    ScanReport rep;
    rep.mode = "positivity-after-offset";
    std::map<int, Poly> shift;
    for (const auto& [name, off] : offsets) {
        int v = tab->index(name);
        shift.emplace(v, Poly::var(tab, v) + Poly::constant(tab, off));
    }
    for (int v : coeff.support()) {
        if (!shift.count(v))
            throw usage_error("scan coefficient depends on non-parameter variable " +
                              tab->name(v));
    }
    Poly shifted = coeff.substitute(shift);
    bool any_pos = false, any_neg = false;
    for (const auto& [m, c] : shifted.terms()) {
        if (!c.is_rational()) throw usage_error("scan coefficient must be rational");
        if (c.rational_part() > 0) any_pos = true;
        if (c.rational_part() < 0) any_neg = true;
    }
    rep.all_coefficients_one_sign = !(any_pos && any_neg) && !shifted.is_zero();
    rep.constant_term_nonzero = !shifted.constant_term().is_zero();
    rep.pass = rep.all_coefficients_one_sign && rep.constant_term_nonzero;
    std::ostringstream os;
    os << "offset-shifted polynomial has " << shifted.term_count() << " terms, "
       << (rep.all_coefficients_one_sign ? "one sign" : "mixed signs") << ", constant term "
       << (rep.constant_term_nonzero ? "nonzero" : "zero");
    rep.detail = os.str();
    return rep;
}

ScanReport scan_integer_grid(const Poly& coeff, const std::vector<std::string>& params, long lo,
                             long hi, const std::vector<std::vector<long>>& expected_zeros) {
    const auto& tab = coeff.table();
    ScanReport rep;
    rep.mode = "integer-scan";
    std::vector<int> idx;
    for (const auto& p : params) idx.push_back(tab->index(p));
    for (int v : coeff.support()) {
        if (std::find(idx.begin(), idx.end(), v) == idx.end())
            throw usage_error("scan coefficient depends on non-parameter variable " +
                              tab->name(v));
    }
    std::vector<long> tuple(params.size(), lo);
    while (true) {
        std::map<int, ExtScalar> pt;
        for (size_t i = 0; i < idx.size(); ++i) pt.emplace(idx[i], ExtScalar(tuple[i]));
        if (coeff.eval_exact(pt).is_zero()) rep.zeros.push_back(tuple);
        size_t pos = 0;
        while (pos < tuple.size() && ++tuple[pos] > hi) tuple[pos++] = lo;
        if (pos == tuple.size()) break;
    }
    auto sorted = [](std::vector<std::vector<long>> z) {
        std::sort(z.begin(), z.end());
        return z;
    };
    rep.pass = sorted(rep.zeros) == sorted(expected_zeros);
    std::ostringstream os;
    os << "scanned [" << lo << "," << hi << "]^" << params.size() << ", " << rep.zeros.size()
       << " zero(s)";
    rep.detail = os.str();
    return rep;
}

} // namespace weh
