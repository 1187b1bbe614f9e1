#include "doctest.h"

#include "random_poly.hpp"
#include "weh/elimination.hpp"
#include "weh/poly_io.hpp"

using namespace weh;
using namespace weh::testing;

TEST_CASE("symmetrize a single variable over three") {
    auto tab = VarTable::make({"mu1", "mu2", "mu3"});
    Poly s = symmetrize(Poly::var(tab, "mu1"), {"mu1", "mu2", "mu3"});
    CHECK(s == parse_poly(tab, "2*(mu1+mu2+mu3)"));
}

TEST_CASE("symmetrize is multiplication by k! on symmetric input") {
    auto tab = VarTable::make({"mu1", "mu2", "mu3"});
    Poly p = parse_poly(tab, "mu1*mu2*mu3 + mu1 + mu2 + mu3");
    CHECK(symmetrize(p, {"mu1", "mu2", "mu3"}) == p * ExtScalar(6));
}

TEST_CASE("elementary rewrite of power sums") {
    auto tab = VarTable::make({"mu1", "mu2", "e1", "e2"});
    Poly p = parse_poly(tab, "mu1^2 + mu2^2");
    Poly r = elementary_rewrite(p, {"mu1", "mu2"}, {"e1", "e2"});
    CHECK(r == parse_poly(tab, "e1^2 - 2*e2"));
}

TEST_CASE("elementary rewrite of the full product") {
    auto tab = VarTable::make({"mu1", "mu2", "mu3", "e1", "e2", "e3"});
    Poly p = parse_poly(tab, "mu1*mu2*mu3");
    CHECK(elementary_rewrite(p, {"mu1", "mu2", "mu3"}, {"e1", "e2", "e3"}) ==
          Poly::var(tab, "e3"));
}

TEST_CASE("elementary rewrite rejects non-symmetric input with a witness") {
    auto tab = VarTable::make({"mu1", "mu2", "e1", "e2"});
    Poly p = parse_poly(tab, "mu1^2 + mu2");
    CHECK_THROWS_AS(elementary_rewrite(p, {"mu1", "mu2"}, {"e1", "e2"}), domain_error);
}

TEST_CASE("elementary rewrite round-trips on random symmetric polynomials") {
    Rng rng(21);
    auto tab = VarTable::make({"x", "y", "z", "k", "e1", "e2", "e3"});
    std::vector<std::string> vars{"x", "y", "z"};
    for (int i = 0; i < 40; ++i) {
        Poly p = symmetrize(rng.poly(tab, 4, 2), vars);
        // strip any accidental e-dependence from the random generator
        std::map<std::string, Poly> kill{{"e1", Poly::zero(tab)},
                                         {"e2", Poly::zero(tab)},
                                         {"e3", Poly::zero(tab)}};
        p = p.substitute(kill);
        Poly r = elementary_rewrite(p, vars, {"e1", "e2", "e3"});
        std::map<std::string, Poly> back;
        back.emplace("e1", elementary_symmetric(tab, vars, 1));
        back.emplace("e2", elementary_symmetric(tab, vars, 2));
        back.emplace("e3", elementary_symmetric(tab, vars, 3));
        CHECK(r.substitute(back) == p);
    }
}

TEST_CASE("clear_substitute with an exact clearing power") {
    auto tab = VarTable::make({"s1", "s2", "kappa", "n"});
    // sigma2 := 4 kappa^2 (n-3) / s1^2, clearing s1^2
    RatFunc value(parse_poly(tab, "4*kappa^2*(n-3)"));
    value = value.divided_by(parse_poly(tab, "s1^2"), 1);
    auto cs = clear_substitute(Poly::var(tab, "s2"), "s2", value, parse_poly(tab, "s1^2"));
    CHECK(cs.result == parse_poly(tab, "4*kappa^2*(n-3)"));

    CHECK_THROWS_AS(clear_substitute(parse_poly(tab, "s2^2"), "s2", value, parse_poly(tab, "s1^2")),
                    domain_error);
}

TEST_CASE("identity rows give determinant one") {
    auto tab = VarTable::make({"x"});
    Poly one = Poly::constant(tab, 1), zero = Poly::zero(tab);
    std::array<std::array<Poly, 3>, 3> rows{{{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}};
    CHECK(linear_system_determinant(rows) == one);
}

TEST_CASE("positivity scan after offsets") {
    auto tab = VarTable::make({"p2", "p3"});
    Poly c = parse_poly(tab, "p2 + p3 - 1");
    auto rep = scan_positivity_after_offset(c, {{"p2", 1}, {"p3", 1}});
    CHECK(rep.pass);
    Poly bad = parse_poly(tab, "p2 - p3");
    CHECK(!scan_positivity_after_offset(bad, {{"p2", 2}, {"p3", 2}}).pass);
}

TEST_CASE("integer grid scan finds the advertised zero") {
    auto tab = VarTable::make({"m"});
    Poly c = parse_poly(tab, "576*m^4*(m-1)^2*(m-3)^2*(3*m-1)^2*(2*m-1)^2*(m+1)^2");
    auto rep = scan_integer_grid(c, {"m"}, 2, 16, {{3}});
    CHECK(rep.pass);
    REQUIRE(rep.zeros.size() == 1);
    CHECK(rep.zeros[0][0] == 3);

    Poly never = parse_poly(tab, "m^2+1");
    CHECK(scan_integer_grid(never, {"m"}, 2, 16).pass);
}

TEST_CASE("scan rejects curvature variables in the coefficient") {
    auto tab = VarTable::make({"p2", "mu1"});
    Poly c = parse_poly(tab, "p2*mu1");
    CHECK_THROWS_AS(scan_positivity_after_offset(c, {{"p2", 2}}), usage_error);
    CHECK_THROWS_AS(scan_integer_grid(c, {"p2"}, 2, 4), usage_error);
}
