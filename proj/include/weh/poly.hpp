#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

#include "weh/rat.hpp"
#include "weh/vartab.hpp"

namespace weh {

// Exponent vector; entry i is the exponent of the variable with table index
// i. Stored inline (no heap) — a context may declare at most kMaxVars
// variables with exponents below 2^16.
inline constexpr int kMaxVars = 16;

struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint8_t nvars = 0;

    Monomial() = default;
    explicit Monomial(size_t n, uint16_t fill = 0) : nvars(static_cast<uint8_t>(n)) {
        e.fill(fill);
    }
    Monomial(std::initializer_list<uint16_t> init) : nvars(static_cast<uint8_t>(init.size())) {
        size_t i = 0;
        for (auto v : init) e[i++] = v;
    }

    size_t size() const { return nvars; }
    uint16_t operator[](size_t i) const { return e[i]; }
    uint16_t& operator[](size_t i) { return e[i]; }

    bool operator==(const Monomial& o) const { return nvars == o.nvars && e == o.e; }
};

inline uint64_t total_degree(const Monomial& m) {
    uint64_t d = 0;
    for (size_t i = 0; i < m.size(); ++i) d += m[i];
    return d;
}

// Graded lexicographic order: compare by total degree, ties broken so that
// lower-index variables dominate.
struct GrlexLess {
    bool operator()(const Monomial& x, const Monomial& y) const {
        uint64_t dx = total_degree(x), dy = total_degree(y);
        if (dx != dy) return dx < dy;
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i] != y[i]) return x[i] < y[i];
        return false;
    }
};

struct LeadingUnit;
struct DivisionResult;

// Sparse multivariate polynomial over Q or Q(sqrt(d)). Terms are kept sorted
// ascending in graded-lex order with no zero coefficients, so structural
// equality is mathematical equality. Immutable in spirit: every operation
// returns a new value.
class Poly {
  public:
    using Term = std::pair<Monomial, ExtScalar>;

    Poly() = default;
    explicit Poly(VarTablePtr tab) : tab_(std::move(tab)) {}

    static Poly zero(VarTablePtr tab) { return Poly(std::move(tab)); }
    static Poly constant(VarTablePtr tab, const ExtScalar& c);
    static Poly constant(VarTablePtr tab, long c) { return constant(tab, ExtScalar(c)); }
    static Poly var(const VarTablePtr& tab, const std::string& name, uint32_t exp = 1);
    static Poly var(VarTablePtr tab, int index, uint32_t exp = 1);
    // Normalizes (sorts, combines, strips zeros).
    static Poly from_terms(VarTablePtr tab, std::vector<Term> terms);

    const VarTablePtr& table() const { return tab_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].first) == 0);
    }
    // Constant term (coefficient of the trivial monomial).
    ExtScalar constant_term() const;
    size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const; // grlex-largest; throws on zero
    int64_t degree(int var) const;    // -1 for the zero polynomial
    int64_t degree(const std::string& var) const;
    int64_t total_deg() const;

    // Weighted degree with per-variable weights; nullopt if not homogeneous.
    std::optional<int64_t> weighted_degree(const std::vector<int>& weights) const;

    bool depends_on(int var) const;
    std::vector<int> support() const; // indices of variables that occur

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const ExtScalar& c) const;
    Poly operator/(const ExtScalar& c) const;
    Poly pow(uint32_t e) const;

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Simultaneous ring-homomorphism substitution; binding an absent
    // variable is a no-op (callers may consult absent_bindings for a trace).
    Poly substitute(const std::map<int, Poly>& bindings,
                    std::vector<int>* absent_bindings = nullptr) const;
    Poly substitute(const std::map<std::string, Poly>& bindings,
                    std::vector<std::string>* absent = nullptr) const;
    Poly substitute_scalar(const std::string& var, const ExtScalar& value) const;

    // Variable relabelling sigma: new exponent of variable perm[i] is the old
    // exponent of variable i. perm must be a permutation of all indices.
    Poly permute_vars(const std::vector<int>& perm) const;

    Poly derivative(int var) const;
    Poly derivative(const std::string& var) const;

    // Coefficient of var^k as a polynomial in the remaining variables.
    Poly coeff_of(int var, uint32_t k) const;
    // All coefficients in var, ascending from degree 0 (size = deg+1; empty for 0).
    std::vector<Poly> coeffs_in(int var) const;

    // Degree and leading coefficient with respect to one variable.
    LeadingUnit leading_unit(int var) const;
    LeadingUnit leading_unit(const std::string& var) const;

    DivisionResult divide(const Poly& divisor) const;
    // Throws domain_error when not exactly divisible.
    Poly exact_divide(const Poly& divisor) const;

    // Positive rational c with p/c primitive over the integers (both scalar
    // parts jointly); 0 for the zero polynomial.
    Rat content() const;
    // p divided by +-content so that the leading coefficient is canonical
    // positive. Records the removed unit if asked.
    Poly unit_normal(ExtScalar* removed = nullptr) const;

    double eval(const std::map<int, double>& point) const;
    double eval(const std::map<std::string, double>& point) const;
    // Independent evaluation route: recursive Horner in the highest variable.
    double eval_horner(const std::map<std::string, double>& point) const;
    ExtScalar eval_exact(const std::map<int, ExtScalar>& point) const;
    ExtScalar eval_exact(const std::map<std::string, ExtScalar>& point) const;

    uint64_t hash() const;

  private:
    void check_same_table(const Poly& o) const;

    VarTablePtr tab_;
    std::vector<Term> terms_;
};

inline Poly operator*(const ExtScalar& c, const Poly& p) { return p * c; }

struct LeadingUnit {
    int64_t degree;
    Poly coeff;
};

struct DivisionResult {
    Poly quotient;
    Poly remainder; // zero iff exactly divisible
    bool exact() const { return remainder.is_zero(); }
};

} // namespace weh
