#include "doctest.h"

#include "property_suites.hpp"
#include "weh/poly.hpp"
#include "weh/poly_io.hpp"

using namespace weh;
using namespace weh::testing;

namespace {
VarTablePtr xy() { return VarTable::make({"x", "y"}); }
} // namespace

TEST_CASE("cancellation in addition") {
    auto tab = xy();
    Poly p = parse_poly(tab, "x+1") + parse_poly(tab, "x-1");
    CHECK(to_string(p) == "2*x");
}

TEST_CASE("conjugate product of linear extension polynomials") {
    auto tab = VarTable::make({"a"});
    Poly p = parse_poly(tab, "(a+sqrt(3))*(a-sqrt(3))");
    CHECK(p == parse_poly(tab, "a^2-3"));
}

TEST_CASE("sum of four curvatures times one") {
    auto tab = VarTable::make({"mu1", "mu2", "mu3", "mu4"});
    Poly f1 = parse_poly(tab, "mu1+mu2+mu3+mu4");
    CHECK(f1 * Poly::constant(tab, 1) == f1);
    std::map<std::string, Poly> b;
    b.emplace("mu4", parse_poly(tab, "-mu1-mu2-mu3"));
    CHECK(f1.substitute(b).is_zero());
}

TEST_CASE("substituting a variable by itself is the identity") {
    auto tab = xy();
    Poly p = parse_poly(tab, "3*x^2*y + x*y^2 - 7");
    std::map<std::string, Poly> b;
    b.emplace("x", Poly::var(tab, "x"));
    CHECK(p.substitute(b) == p);
}

TEST_CASE("binding an absent variable is a no-op and reported") {
    auto tab = xy();
    Poly p = parse_poly(tab, "x^2+1");
    std::map<std::string, Poly> b;
    b.emplace("y", parse_poly(tab, "x"));
    std::vector<std::string> absent;
    CHECK(p.substitute(b, &absent) == p);
    REQUIRE(absent.size() == 1);
    CHECK(absent[0] == "y");
}

TEST_CASE("leading unit in one variable") {
    auto tab = xy();
    Poly p = parse_poly(tab, "3*x^2*y + x*y^2");
    auto lu = p.leading_unit("x");
    CHECK(lu.degree == 2);
    CHECK(lu.coeff == parse_poly(tab, "3*y"));
    CHECK_THROWS_AS(Poly::zero(tab).leading_unit("x"), domain_error);
}

TEST_CASE("exact division and the non-divisible witness") {
    auto tab = xy();
    Poly p = parse_poly(tab, "x^2-1");
    Poly q = parse_poly(tab, "x-1");
    CHECK(p.exact_divide(q) == parse_poly(tab, "x+1"));

    auto res = parse_poly(tab, "x^2+1").divide(q);
    CHECK(!res.exact());
    CHECK(!res.remainder.is_zero());
    // witness: remainder + quotient * divisor reproduces the dividend
    CHECK(res.quotient * q + res.remainder == parse_poly(tab, "x^2+1"));
    CHECK_THROWS_AS(p.exact_divide(Poly::zero(tab)), domain_error);
}

TEST_CASE("numeric evaluation and the independent Horner route") {
    auto tab = xy();
    Poly p = parse_poly(tab, "x^2+y");
    std::map<std::string, double> pt{{"x", 2.0}, {"y", 1.0}};
    CHECK(p.eval(pt) == doctest::Approx(5.0));
    CHECK(p.eval_horner(pt) == doctest::Approx(5.0));
    CHECK_THROWS_AS(p.eval(std::map<std::string, double>{{"x", 1.0}}), usage_error);

    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        Poly q = rng.poly(tab, 8, 5);
        std::map<std::string, double> r{{"x", rng.integer(-3, 3) / 2.0},
                                        {"y", rng.integer(-3, 3) / 2.0}};
        double a = q.eval(r), b = q.eval_horner(r);
        CHECK(a == doctest::Approx(b).epsilon(1e-10));
    }
}

TEST_CASE("grlex order puts the total-degree-largest term last") {
    auto tab = xy();
    Poly p = parse_poly(tab, "x + y^3 + x*y");
    CHECK(p.leading_term().first == Monomial{0, 3});
    CHECK(p.total_deg() == 3);
}

TEST_CASE("permute_vars relabels exponents") {
    auto tab = VarTable::make({"x", "y", "z"});
    Poly p = parse_poly(tab, "x^2*y + z");
    Poly q = p.permute_vars({1, 0, 2}); // swap x,y
    CHECK(q == parse_poly(tab, "y^2*x + z"));
}

TEST_CASE("weighted degree detects the curvature grading") {
    auto tab = VarTable::make({"mu1", "mu2", "kappa"});
    Poly f = parse_poly(tab, "mu1^3 + 2*kappa*mu1 + mu2^2*mu1");
    auto wd = f.weighted_degree({1, 1, 2});
    REQUIRE(wd.has_value());
    CHECK(*wd == 3);
    CHECK(!parse_poly(tab, "mu1^2 + mu1").weighted_degree({1, 1, 2}).has_value());
}

TEST_CASE("exact-poly property suites") {
    for (const auto& suite : run_exact_poly_suites(200)) {
        INFO(suite.name);
        CHECK(suite.failures == 0);
    }
}
