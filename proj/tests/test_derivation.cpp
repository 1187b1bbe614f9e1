#include "doctest.h"

#include "random_poly.hpp"
#include "weh/derivation.hpp"
#include "weh/poly_io.hpp"

using namespace weh;
using namespace weh::testing;

namespace {

// e1 rules of the q=3 one-curvature-of-multiplicity-one frame.
Derivation make_e1(const VarTablePtr& tab) {
    Derivation d("e1", tab);
    d.rule("mu2", RatFunc(parse_poly(tab, "phi2*(mu2-mu1)")));
    d.rule("mu3", RatFunc(parse_poly(tab, "phi3*(mu3-mu1)")));
    d.rule("phi2", RatFunc(parse_poly(tab, "phi2^2 + mu2*mu1 + kappa")));
    d.rule("phi3", RatFunc(parse_poly(tab, "phi3^2 + mu3*mu1 + kappa")));
    d.constants({"kappa", "mu1"});
    return d;
}

} // namespace

TEST_CASE("Leibniz on a squared generator") {
    auto tab = VarTable::make({"mu1", "mu2", "mu3", "phi2", "phi3", "kappa"});
    Derivation e1 = make_e1(tab);
    RatFunc d = e1.apply(parse_poly(tab, "mu2^2"));
    CHECK(d.is_poly());
    CHECK(d.num() == parse_poly(tab, "2*mu2*phi2*(mu2-mu1)"));
}

TEST_CASE("underived dynamic symbols are rejected") {
    auto tab = VarTable::make({"mu2", "phi2", "theta"});
    Derivation d("e1", tab);
    d.rule("mu2", RatFunc(Poly::var(tab, "phi2")));
    d.constant("phi2");
    CHECK_THROWS_AS(d.apply(parse_poly(tab, "mu2*theta")), usage_error);
}

TEST_CASE("derivation of a constant is zero") {
    auto tab = VarTable::make({"mu2", "phi2", "kappa"});
    Derivation d = Derivation("e1", tab)
                       .rule("mu2", RatFunc(Poly::var(tab, "phi2")))
                       .constant("phi2")
                       .constant("kappa");
    CHECK(d.apply(parse_poly(tab, "kappa^2 + 7")).is_zero());
}

TEST_CASE("Leibniz and quotient rules on random rational functions") {
    auto tab = VarTable::make({"mu1", "mu2", "mu3", "phi2", "phi3", "kappa"});
    Derivation e1 = make_e1(tab);
    Rng rng(31);
    for (int i = 0; i < 80; ++i) {
        Poly f = rng.poly(tab, 4, 2), g = rng.poly(tab, 4, 2);
        // product rule
        RatFunc lhs = e1.apply(f * g);
        RatFunc rhs = RatFunc(f) * e1.apply(g) + RatFunc(g) * e1.apply(f);
        CHECK(lhs.equals(rhs));
    }
    for (int i = 0; i < 40; ++i) {
        Poly f = rng.nonzero_poly(tab, 3, 2);
        // quotient rule: D(1/f) = -D(f)/f^2
        RatFunc inv = RatFunc::one(tab).divided_by(f, 1);
        RatFunc lhs = e1.apply(inv);
        RatFunc rhs = (-e1.apply(f)).divided_by(f, 2);
        CHECK(lhs.equals(rhs));
    }
    // linearity over rational constants
    Poly f = rng.poly(tab, 4, 2), g = rng.poly(tab, 4, 2);
    RatFunc lhs = e1.apply(f * ExtScalar(rat(3, 2)) + g * ExtScalar(rat(-7)));
    RatFunc rhs = e1.apply(f) * ExtScalar(rat(3, 2)) + e1.apply(g) * ExtScalar(rat(-7));
    CHECK(lhs.equals(rhs));
}

TEST_CASE("solve_linear returns the unique root") {
    auto tab = VarTable::make({"x", "a", "b"});
    RatFunc eq(parse_poly(tab, "a*x + b"));
    RatFunc sol = solve_linear(eq, "x");
    // substituting back yields zero
    std::map<int, RatFunc> bind{{tab->index("x"), sol}};
    CHECK(RatFunc::substitute(eq.num(), bind).is_zero());
    CHECK_THROWS_AS(solve_linear(RatFunc(parse_poly(tab, "a*x^2+b")), "x"), domain_error);
    CHECK_THROWS_AS(solve_linear(RatFunc(parse_poly(tab, "a+b")), "x"), domain_error);
}

TEST_CASE("solve_linear round-trips on random linear equations") {
    auto tab = VarTable::make({"x", "y", "z"});
    Rng rng(32);
    for (int i = 0; i < 60; ++i) {
        Poly a = rng.nonzero_poly(tab, 3, 2), b = rng.poly(tab, 3, 2);
        std::map<std::string, Poly> kill{{"x", Poly::zero(tab)}};
        a = a.substitute(kill);
        b = b.substitute(kill);
        if (a.is_zero()) continue;
        RatFunc eq(a * Poly::var(tab, "x") + b);
        RatFunc sol = solve_linear(eq, "x");
        std::map<int, RatFunc> bind{{tab->index("x"), sol}};
        CHECK(RatFunc::substitute(eq.num(), bind).is_zero());
    }
}
