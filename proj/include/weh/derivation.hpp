#pragma once

#include <map>
#include <set>
#include <string>

#include "weh/ratfunc.hpp"

namespace weh {

// Formal derivation e_a: a rule table mapping frame generators to rational
// functions, extended to polynomials and rational functions by linearity,
// the Leibniz rule and the quotient rule. Variables must either carry a rule
// or be declared constant; anything else is an error so that a dynamic
// symbol can never be silently annihilated.
class Derivation {
  public:
    Derivation(std::string name, const VarTablePtr& tab) : name_(std::move(name)), tab_(tab) {}

    const std::string& name() const { return name_; }
    const VarTablePtr& table() const { return tab_; }

    Derivation& rule(const std::string& var, RatFunc value);
    Derivation& constant(const std::string& var);
    Derivation& constants(std::initializer_list<std::string> vars);

    bool has_rule(const std::string& var) const { return rules_.count(tab_->index(var)) > 0; }
    const RatFunc& rule_for(const std::string& var) const;

    RatFunc apply(const Poly& p) const;
    RatFunc apply(const RatFunc& f) const;

  private:
    std::string name_;
    VarTablePtr tab_;
    std::map<int, RatFunc> rules_;
    std::set<int> constants_;
};

// Unique root of an equation of degree exactly 1 in the target variable;
// substituting the result back into eq yields zero.
RatFunc solve_linear(const RatFunc& eq, const std::string& target);

} // namespace weh
