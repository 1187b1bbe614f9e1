#include "weh/poly.hpp"

#include <algorithm>

namespace weh {

namespace {

Monomial add_exps(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        uint32_t s = uint32_t(a[i]) + uint32_t(b[i]);
        if (s > 0xffffu) throw domain_error("exponent overflow");
        r[i] = static_cast<uint16_t>(s);
    }
    return r;
}

} // namespace

Poly Poly::constant(VarTablePtr tab, const ExtScalar& c) {
    Poly p(std::move(tab));
    if (!c.is_zero()) p.terms_.push_back({Monomial(p.tab_->size(), 0), c});
    return p;
}

Poly Poly::var(const VarTablePtr& tab, const std::string& name, uint32_t exp) {
    return var(tab, tab->index(name), exp);
}

Poly Poly::var(VarTablePtr tab, int index, uint32_t exp) {
    Poly p(std::move(tab));
    if (index < 0 || index >= p.tab_->size()) throw usage_error("variable index out of range");
    if (exp > 0xffffu) throw domain_error("exponent overflow");
    Monomial m(p.tab_->size(), 0);
    m[index] = static_cast<uint16_t>(exp);
    if (exp == 0) return constant(p.tab_, 1);
    p.terms_.push_back({std::move(m), ExtScalar(1)});
    return p;
}

Poly Poly::from_terms(VarTablePtr tab, std::vector<Term> terms) {
    std::map<Monomial, ExtScalar, GrlexLess> acc;
    for (auto& [m, c] : terms) {
        if (c.is_zero()) continue;
        auto [it, fresh] = acc.emplace(std::move(m), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
    Poly p(std::move(tab));
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) p.terms_.push_back({m, c});
    return p;
}

ExtScalar Poly::constant_term() const {
    if (terms_.empty() || total_degree(terms_.front().first) != 0) return ExtScalar(0);
    return terms_.front().second;
}

const Poly::Term& Poly::leading_term() const {
    if (terms_.empty()) throw domain_error("leading term of the zero polynomial");
    return terms_.back();
}

int64_t Poly::degree(int var) const {
    int64_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max<int64_t>(d, m[var]);
    return d;
}

int64_t Poly::degree(const std::string& var) const { return degree(tab_->index(var)); }

int64_t Poly::total_deg() const {
    if (terms_.empty()) return -1;
    // grlex: the last term has maximal total degree
    return static_cast<int64_t>(total_degree(terms_.back().first));
}

std::optional<int64_t> Poly::weighted_degree(const std::vector<int>& weights) const {
    std::optional<int64_t> deg;
    for (const auto& [m, c] : terms_) {
        int64_t d = 0;
        for (size_t i = 0; i < m.size(); ++i) d += int64_t(m[i]) * weights[i];
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

bool Poly::depends_on(int var) const {
    for (const auto& [m, c] : terms_)
        if (m[var] > 0) return true;
    return false;
}

std::vector<int> Poly::support() const {
    std::vector<int> out;
    for (int v = 0; v < (tab_ ? tab_->size() : 0); ++v)
        if (depends_on(v)) out.push_back(v);
    return out;
}

void Poly::check_same_table(const Poly& o) const {
    if (tab_ != o.tab_) throw usage_error("polynomials from different variable tables");
}

Poly Poly::operator-() const {
    Poly r(tab_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.push_back({m, -c});
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_table(o);
    Poly r(tab_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    GrlexLess less;
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && less(terms_[i].first, o.terms_[j].first))) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || less(o.terms_[j].first, terms_[i].first)) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            ExtScalar c = terms_[i].second + o.terms_[j].second;
            if (!c.is_zero()) r.terms_.push_back({terms_[i].first, c});
            ++i;
            ++j;
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same_table(o);
    if (is_zero() || o.is_zero()) return Poly(tab_);
    const auto& small = terms_.size() <= o.terms_.size() ? terms_ : o.terms_;
    const auto& large = terms_.size() <= o.terms_.size() ? o.terms_ : terms_;
    Poly r(tab_);
    if (small.size() == 1) {
        // multiplying by one term preserves the grlex order
        r.terms_.reserve(large.size());
        for (const auto& [m, c] : large) {
            ExtScalar cc = c * small[0].second;
            if (!cc.is_zero()) r.terms_.push_back({add_exps(m, small[0].first), cc});
        }
        return r;
    }
    // k-way ascending merge over the streams small[i] * large[0..]; each
    // stream is already sorted because shifting by a fixed exponent vector
    // preserves the order
    struct Head {
        Monomial m;
        uint32_t si, li;
    };
    GrlexLess less;
    auto head_greater = [&less](const Head& a, const Head& b) { return less(b.m, a.m); };
    std::vector<Head> heap;
    heap.reserve(small.size());
    for (uint32_t i = 0; i < small.size(); ++i)
        heap.push_back({add_exps(small[i].first, large[0].first), i, 0});
    std::make_heap(heap.begin(), heap.end(), head_greater);
    r.terms_.reserve(small.size() + large.size());
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), head_greater);
        Head h = heap.back();
        heap.pop_back();
        ExtScalar c = small[h.si].second * large[h.li].second;
        if (!r.terms_.empty() && r.terms_.back().first == h.m) {
            r.terms_.back().second += c;
            if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
        } else {
            r.terms_.push_back({h.m, c});
        }
        if (++h.li < large.size()) {
            h.m = add_exps(small[h.si].first, large[h.li].first);
            heap.push_back(h);
            std::push_heap(heap.begin(), heap.end(), head_greater);
        }
    }
    return r;
}

Poly Poly::operator*(const ExtScalar& c) const {
    if (c.is_zero()) return Poly(tab_);
    Poly r(tab_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, coef] : terms_) r.terms_.push_back({m, coef * c});
    return r;
}

Poly Poly::operator/(const ExtScalar& c) const {
    if (c.is_zero()) throw domain_error("division by zero scalar");
    return *this * (ExtScalar(1) / c);
}

Poly Poly::pow(uint32_t e) const {
    Poly r = constant(tab_, 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (tab_ != o.tab_) return false;
    return terms_ == o.terms_;
}

Poly Poly::substitute(const std::map<int, Poly>& bindings, std::vector<int>* absent) const {
    if (absent) {
        for (const auto& [v, rep] : bindings)
            if (!depends_on(v)) absent->push_back(v);
    }
    for (const auto& [v, rep] : bindings)
        if (rep.tab_ != tab_) throw usage_error("substitution binding from another context");
    // cache of binding powers
    std::map<std::pair<int, uint32_t>, Poly> powers;
    auto power = [&](int v, uint32_t e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, bindings.at(v).pow(e)).first;
        return it->second;
    };
    Poly result(tab_);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        Poly factor = Poly::constant(tab_, c);
        for (const auto& [v, rep] : bindings) {
            if (m[v] > 0) {
                factor = factor * power(v, m[v]);
                rest[v] = 0;
            }
        }
        Poly mono(tab_);
        mono.terms_.push_back({rest, ExtScalar(1)});
        result += factor * mono;
    }
    return result;
}

Poly Poly::substitute(const std::map<std::string, Poly>& bindings,
                      std::vector<std::string>* absent) const {
    std::map<int, Poly> by_index;
    for (const auto& [name, rep] : bindings) by_index.emplace(tab_->index(name), rep);
    std::vector<int> absent_idx;
    Poly r = substitute(by_index, absent ? &absent_idx : nullptr);
    if (absent)
        for (int v : absent_idx) absent->push_back(tab_->name(v));
    return r;
}

Poly Poly::substitute_scalar(const std::string& var, const ExtScalar& value) const {
    std::map<int, Poly> b;
    b.emplace(tab_->index(var), Poly::constant(tab_, value));
    return substitute(b);
}

Poly Poly::permute_vars(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != tab_->size()) throw usage_error("bad permutation size");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Monomial pm(m.size(), 0);
        for (size_t i = 0; i < m.size(); ++i) pm[perm[i]] = m[i];
        out.push_back({std::move(pm), c});
    }
    return from_terms(tab_, std::move(out));
}

Poly Poly::derivative(int var) const {
    Poly r(tab_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial dm = m;
        dm[var] -= 1;
        r.terms_.push_back({std::move(dm), c * ExtScalar(static_cast<long>(m[var]))});
    }
    // differentiation preserves grlex relative order of surviving terms in
    // the same variable, but not across variables; renormalize
    return from_terms(tab_, std::move(r.terms_));
}

Poly Poly::derivative(const std::string& var) const { return derivative(tab_->index(var)); }

Poly Poly::coeff_of(int var, uint32_t k) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
        if (m[var] == k) {
            Monomial rm = m;
            rm[var] = 0;
            out.push_back({std::move(rm), c});
        }
    }
    return from_terms(tab_, std::move(out));
}

std::vector<Poly> Poly::coeffs_in(int var) const {
    int64_t d = degree(var);
    std::vector<Poly> out;
    if (d < 0) return out;
    out.assign(static_cast<size_t>(d) + 1, Poly(tab_));
    std::vector<std::vector<Term>> buckets(static_cast<size_t>(d) + 1);
    for (const auto& [m, c] : terms_) {
        Monomial rm = m;
        uint32_t k = rm[var];
        rm[var] = 0;
        buckets[k].push_back({std::move(rm), c});
    }
    for (size_t k = 0; k < buckets.size(); ++k) out[k] = from_terms(tab_, std::move(buckets[k]));
    return out;
}

LeadingUnit Poly::leading_unit(int var) const {
    if (is_zero()) throw domain_error("leading_unit of the zero polynomial");
    int64_t d = degree(var);
    return LeadingUnit{d, coeff_of(var, static_cast<uint32_t>(d))};
}

LeadingUnit Poly::leading_unit(const std::string& var) const {
    return leading_unit(tab_->index(var));
}

// Heap-merge division: the dividend stream and one lazily generated stream
// per quotient term (quotient term times the divisor tail) are merged in
// descending order; net coefficients become quotient or remainder terms.
DivisionResult Poly::divide(const Poly& divisor) const {
    check_same_table(divisor);
    if (divisor.is_zero()) throw domain_error("division by the zero polynomial");
    const auto& [dm, dc] = divisor.leading_term();
    // streams: index -1 encodes the dividend; i >= 0 the stream quo[i] * tail
    struct Head {
        Monomial m;
        int64_t qi;
        uint32_t pos;
    };
    GrlexLess less;
    auto head_less = [&less](const Head& a, const Head& b) { return less(a.m, b.m); };
    const size_t tail = divisor.terms_.size() - 1; // terms below the leading one
    std::vector<Head> heap;
    std::vector<Term> quo, rem;
    if (terms_.empty()) return {Poly(tab_), Poly(tab_)};
    heap.push_back({terms_.back().first, -1, static_cast<uint32_t>(terms_.size() - 1)});
    auto advance = [&](Head h) {
        if (h.qi < 0) {
            if (h.pos > 0) {
                --h.pos;
                h.m = terms_[h.pos].first;
                heap.push_back(h);
                std::push_heap(heap.begin(), heap.end(), head_less);
            }
        } else {
            if (h.pos > 0) {
                --h.pos;
                h.m = add_exps(quo[static_cast<size_t>(h.qi)].first, divisor.terms_[h.pos].first);
                heap.push_back(h);
                std::push_heap(heap.begin(), heap.end(), head_less);
            }
        }
    };
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), head_less);
        Head top = heap.back();
        heap.pop_back();
        Monomial m = top.m;
        ExtScalar c = top.qi < 0 ? terms_[top.pos].second
                                 : -(quo[static_cast<size_t>(top.qi)].second *
                                     divisor.terms_[top.pos].second);
        advance(top);
        while (!heap.empty() && heap.front().m == m) {
            std::pop_heap(heap.begin(), heap.end(), head_less);
            Head h = heap.back();
            heap.pop_back();
            c += h.qi < 0 ? terms_[h.pos].second
                          : -(quo[static_cast<size_t>(h.qi)].second *
                              divisor.terms_[h.pos].second);
            advance(h);
        }
        if (c.is_zero()) continue;
        bool divisible = true;
        Monomial qm(m.size());
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] < dm[i]) {
                divisible = false;
                break;
            }
            qm[i] = static_cast<uint16_t>(m[i] - dm[i]);
        }
        if (!divisible) {
            rem.push_back({m, c});
            continue;
        }
        quo.push_back({qm, c / dc});
        if (tail > 0) {
            Head h{add_exps(qm, divisor.terms_[tail - 1].first),
                   static_cast<int64_t>(quo.size() - 1), static_cast<uint32_t>(tail - 1)};
            heap.push_back(h);
            std::push_heap(heap.begin(), heap.end(), head_less);
        }
    }
    // quotient was produced in descending order, remainder too
    std::reverse(quo.begin(), quo.end());
    std::reverse(rem.begin(), rem.end());
    Poly q(tab_), r(tab_);
    q.terms_ = std::move(quo);
    r.terms_ = std::move(rem);
    return {std::move(q), std::move(r)};
}

Poly Poly::exact_divide(const Poly& divisor) const {
    DivisionResult r = divide(divisor);
    if (!r.exact()) throw domain_error("polynomial not exactly divisible");
    return r.quotient;
}

namespace {
// gcd of nonnegative rationals: gcd of numerators over lcm of denominators
Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return b;
    if (b == 0) return a;
    mpz_class gn, gl;
    mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(gl.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rat r(gn, gl);
    r.canonicalize();
    return r;
}
} // namespace

Rat Poly::content() const {
    Rat g(0);
    for (const auto& [m, c] : terms_) {
        g = rat_gcd(g, abs(c.rational_part()));
        g = rat_gcd(g, abs(c.radical_part()));
    }
    return g;
}

Poly Poly::unit_normal(ExtScalar* removed) const {
    if (is_zero()) {
        if (removed) *removed = ExtScalar(1);
        return *this;
    }
    Rat c = content();
    ExtScalar unit(c);
    if (!leading_term().second.canonical_positive()) unit = -unit;
    if (removed) *removed = unit;
    return *this / unit;
}

double Poly::eval(const std::map<int, double>& point) const {
    for (int v : support())
        if (!point.count(v)) throw usage_error("unbound variable in evaluation: " + tab_->name(v));
    double sum = 0;
    for (const auto& [m, c] : terms_) {
        double t = c.to_double();
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            double x = point.at(static_cast<int>(i));
            for (uint32_t k = 0; k < m[i]; ++k) t *= x;
        }
        sum += t;
    }
    return sum;
}

double Poly::eval(const std::map<std::string, double>& point) const {
    std::map<int, double> p;
    for (const auto& [name, x] : point)
        if (tab_->contains(name)) p.emplace(tab_->index(name), x);
    return eval(p);
}

namespace {
double horner_rec(const Poly& p, int var, const std::map<int, double>& point) {
    if (var < 0) return p.is_zero() ? 0.0 : p.terms().back().second.to_double();
    if (!p.depends_on(var)) return horner_rec(p, var - 1, point);
    auto coeffs = p.coeffs_in(var);
    double x = point.at(var);
    double acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + horner_rec(*it, var - 1, point);
    return acc;
}
} // namespace

double Poly::eval_horner(const std::map<std::string, double>& point) const {
    std::map<int, double> p;
    for (const auto& [name, x] : point)
        if (tab_->contains(name)) p.emplace(tab_->index(name), x);
    for (int v : support())
        if (!p.count(v)) throw usage_error("unbound variable in evaluation: " + tab_->name(v));
    return horner_rec(*this, tab_->size() - 1, p);
}

ExtScalar Poly::eval_exact(const std::map<int, ExtScalar>& point) const {
    for (int v : support())
        if (!point.count(v)) throw usage_error("unbound variable in evaluation: " + tab_->name(v));
    ExtScalar sum(0);
    for (const auto& [m, c] : terms_) {
        ExtScalar t = c;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            ExtScalar base = point.at(static_cast<int>(i));
            for (uint32_t k = 0; k < m[i]; ++k) t *= base;
        }
        sum += t;
    }
    return sum;
}

ExtScalar Poly::eval_exact(const std::map<std::string, ExtScalar>& point) const {
    std::map<int, ExtScalar> p;
    for (const auto& [name, x] : point)
        if (tab_->contains(name)) p.emplace(tab_->index(name), x);
    return eval_exact(p);
}

uint64_t Poly::hash() const {
    uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 0x100000001b3ull;
    };
    for (const auto& [m, c] : terms_) {
        for (size_t i = 0; i < m.size(); ++i) mix(m[i]);
        mix(std::hash<std::string>{}(c.to_string()));
    }
    return h;
}

} // namespace weh
