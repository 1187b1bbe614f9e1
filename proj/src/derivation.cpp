#include "weh/derivation.hpp"

namespace weh {

Derivation& Derivation::rule(const std::string& var, RatFunc value) {
    if (value.table() != tab_) throw usage_error("rule value from another context");
    rules_.insert_or_assign(tab_->index(var), std::move(value));
    return *this;
}

Derivation& Derivation::constant(const std::string& var) {
    constants_.insert(tab_->index(var));
    return *this;
}

Derivation& Derivation::constants(std::initializer_list<std::string> vars) {
    for (const auto& v : vars) constant(v);
    return *this;
}

const RatFunc& Derivation::rule_for(const std::string& var) const {
    auto it = rules_.find(tab_->index(var));
    if (it == rules_.end()) throw usage_error(name_ + " has no rule for " + var);
    return it->second;
}

RatFunc Derivation::apply(const Poly& p) const {
    if (p.table() != tab_) throw usage_error("argument from another context");
    RatFunc out = RatFunc::zero(tab_);
    for (int v : p.support()) {
        auto it = rules_.find(v);
        if (it == rules_.end()) {
            if (constants_.count(v)) continue;
            throw usage_error(name_ + ": variable " + tab_->name(v) +
                              " is neither rule-bound nor declared constant");
        }
        if (it->second.is_zero()) continue;
        out += RatFunc(p.derivative(v)) * it->second;
    }
    return out;
}

RatFunc Derivation::apply(const RatFunc& f) const {
    // D(n / prod f_i^{k_i}) = D(n)/den - n * sum k_i D(f_i) / (f_i * den)
    RatFunc out = apply(f.num());
    for (const auto& fac : f.den_factors()) {
        RatFunc term = RatFunc(f.num()) * apply(fac.base) * ExtScalar(static_cast<long>(fac.mult));
        out -= term.divided_by(fac.base, 1);
    }
    for (const auto& fac : f.den_factors()) out = out.divided_by(fac.base, fac.mult);
    return out;
}

RatFunc solve_linear(const RatFunc& eq, const std::string& target) {
    const auto& tab = eq.table();
    int v = tab->index(target);
    const Poly& n = eq.num();
    if (n.degree(v) != 1)
        throw domain_error("solve_linear: degree in " + target + " is not 1");
    Poly a = n.coeff_of(v, 1);
    Poly b = n.coeff_of(v, 0);
    if (a.is_zero()) throw domain_error("solve_linear: zero leading coefficient");
    return RatFunc(-b).divided_by(a, 1);
}

} // namespace weh
