#include "weh/ratfunc.hpp"

#include <sstream>

#include "weh/poly_io.hpp"

namespace weh {

RatFunc::RatFunc(Poly num, std::vector<Factor> den) : num_(std::move(num)) {
    for (auto& f : den) push_factor(f.base, f.mult);
    reduce();
}

void RatFunc::push_factor(const Poly& base, int mult) {
    if (mult == 0) return;
    if (mult < 0) throw usage_error("negative denominator multiplicity");
    if (base.is_zero()) throw domain_error("zero polynomial in a denominator");
    ExtScalar unit;
    Poly b = base.unit_normal(&unit);
    // constant parts fold into the numerator
    ExtScalar scale = ExtScalar(1);
    for (int k = 0; k < mult; ++k) {
        scale = scale * unit;
        if (b.is_constant()) scale = scale * b.constant_term();
    }
    num_ = num_ / scale;
    if (b.is_constant()) return;
    for (auto& f : den_) {
        if (f.base == b) {
            f.mult += mult;
            return;
        }
    }
    den_.push_back({b, mult});
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& f : den_) {
        while (f.mult > 0) {
            auto d = num_.divide(f.base);
            if (!d.exact()) break;
            num_ = d.quotient;
            --f.mult;
        }
    }
    std::erase_if(den_, [](const Factor& f) { return f.mult == 0; });
}

Poly RatFunc::den_expanded() const {
    Poly d = Poly::constant(num_.table(), 1);
    for (const auto& f : den_) d = d * f.base.pow(static_cast<uint32_t>(f.mult));
    return d;
}

const Poly& RatFunc::as_poly() const {
    if (!den_.empty()) throw usage_error("rational function with nontrivial denominator");
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    // common denominator: per-factor max multiplicity
    RatFunc r;
    std::vector<Factor> common = den_;
    for (const auto& g : o.den_) {
        bool found = false;
        for (auto& f : common) {
            if (f.base == g.base) {
                f.mult = std::max(f.mult, g.mult);
                found = true;
                break;
            }
        }
        if (!found) common.push_back(g);
    }
    auto complement = [&](const std::vector<Factor>& own) {
        Poly c = Poly::constant(num_.table(), 1);
        for (const auto& f : common) {
            int have = 0;
            for (const auto& g : own)
                if (g.base == f.base) have = g.mult;
            if (f.mult > have) c = c * f.base.pow(static_cast<uint32_t>(f.mult - have));
        }
        return c;
    };
    r.num_ = num_ * complement(den_) + o.num_ * complement(o.den_);
    r.den_ = std::move(common);
    r.reduce();
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    RatFunc r;
    r.num_ = num_ * o.num_;
    r.den_ = den_;
    for (const auto& g : o.den_) r.push_factor(g.base, g.mult);
    r.reduce();
    return r;
}

RatFunc RatFunc::operator*(const ExtScalar& c) const {
    RatFunc r = *this;
    r.num_ = r.num_ * c;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw domain_error("division by the zero rational function");
    RatFunc r;
    r.num_ = num_;
    r.den_ = den_;
    for (const auto& g : o.den_) {
        // dividing by 1/g^k multiplies by g^k
        r.num_ = r.num_ * g.base.pow(static_cast<uint32_t>(g.mult));
    }
    if (o.num_.is_constant()) {
        r.num_ = r.num_ / o.num_.constant_term();
    } else {
        r.push_factor(o.num_, 1);
    }
    r.reduce();
    return r;
}

RatFunc RatFunc::divided_by(const Poly& base, int mult) const {
    RatFunc r = *this;
    r.push_factor(base, mult);
    r.reduce();
    return r;
}

double RatFunc::eval(const std::map<std::string, double>& point) const {
    double d = 1.0;
    for (const auto& f : den_) {
        double b = f.base.eval(point);
        for (int k = 0; k < f.mult; ++k) d *= b;
    }
    return num_.eval(point) / d;
}

RatFunc RatFunc::substitute(const Poly& p, const std::map<int, RatFunc>& bindings) {
    const auto& tab = p.table();
    for (const auto& [v, rep] : bindings)
        if (rep.table() != tab) throw usage_error("substitution binding from another context");
    RatFunc result = RatFunc::zero(tab);
    std::map<std::pair<int, uint32_t>, RatFunc> powers;
    auto power = [&](int v, uint32_t e) -> const RatFunc& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it == powers.end()) {
            RatFunc acc = RatFunc::one(tab);
            for (uint32_t k = 0; k < e; ++k) acc = acc * bindings.at(v);
            it = powers.emplace(key, std::move(acc)).first;
        }
        return it->second;
    };
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        RatFunc factor(Poly::constant(tab, c));
        for (const auto& [v, rep] : bindings) {
            if (m[v] > 0) {
                factor = factor * power(v, m[v]);
                rest[v] = 0;
            }
        }
        factor = factor * Poly::from_terms(tab, {{rest, ExtScalar(1)}});
        result += factor;
    }
    return result;
}

RatFunc RatFunc::substituted(const std::map<int, RatFunc>& bindings) const {
    RatFunc n = substitute(num_, bindings);
    for (const auto& f : den_) {
        RatFunc b = substitute(f.base, bindings);
        for (int k = 0; k < f.mult; ++k) n = n / b;
    }
    return n;
}

RatFunc RatFunc::permute_vars(const std::vector<int>& perm) const {
    RatFunc r(num_.permute_vars(perm));
    for (const auto& f : den_) r.push_factor(f.base.permute_vars(perm), f.mult);
    r.reduce();
    return r;
}

std::string RatFunc::to_string() const {
    std::ostringstream os;
    os << weh::to_string(num_);
    if (!den_.empty()) {
        os << " / [";
        bool first = true;
        for (const auto& f : den_) {
            if (!first) os << " * ";
            first = false;
            os << "(" << weh::to_string(f.base) << ")";
            if (f.mult > 1) os << "^" << f.mult;
        }
        os << "]";
    }
    return os.str();
}

} // namespace weh
