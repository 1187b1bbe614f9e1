#pragma once

#include <vector>

#include "weh/poly.hpp"

namespace weh {

// Rational function kept as numerator over an explicit factored denominator.
// Denominator factors are unit-normal nonconstant polynomials; all the
// denominators arising in the frame calculus are products of structurally
// known factors (mu_a - mu_b, mu1 + mu2, 3 mu_i + mu_j, sigma1, ...), so
// cancellation is exact division against listed factors, never a general
// multivariate gcd.
class RatFunc {
  public:
    struct Factor {
        Poly base;
        int mult = 1;
    };

    RatFunc() = default;
    explicit RatFunc(Poly num) : num_(std::move(num)) {}
    RatFunc(Poly num, std::vector<Factor> den);

    static RatFunc zero(const VarTablePtr& tab) { return RatFunc(Poly::zero(tab)); }
    static RatFunc one(const VarTablePtr& tab) { return RatFunc(Poly::constant(tab, 1)); }

    const Poly& num() const { return num_; }
    const std::vector<Factor>& den_factors() const { return den_; }
    Poly den_expanded() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.empty(); }
    // Numerator if the denominator is trivial; throws otherwise.
    const Poly& as_poly() const;

    const VarTablePtr& table() const { return num_.table(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator*(const Poly& p) const { return *this * RatFunc(p); }
    RatFunc operator*(const ExtScalar& c) const;
    // Division by a rational function whose numerator becomes a new
    // denominator factor (unit-normalized, not factored further).
    RatFunc operator/(const RatFunc& o) const;

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    // Appends base^mult to the denominator (after trying to cancel).
    RatFunc divided_by(const Poly& base, int mult = 1) const;

    // Equality as rational functions (cross-multiplied exact difference).
    bool equals(const RatFunc& o) const { return (*this - o).is_zero(); }

    double eval(const std::map<std::string, double>& point) const;

    // Substitute variables by rational functions in the polynomial p.
    static RatFunc substitute(const Poly& p, const std::map<int, RatFunc>& bindings);
    RatFunc substituted(const std::map<int, RatFunc>& bindings) const;

    // Variable relabelling applied to numerator and denominator factors.
    RatFunc permute_vars(const std::vector<int>& perm) const;

    std::string to_string() const;

  private:
    void push_factor(const Poly& base, int mult);
    void reduce();

    Poly num_;
    std::vector<Factor> den_;
};

inline RatFunc operator*(const Poly& p, const RatFunc& f) { return f * p; }

} // namespace weh
