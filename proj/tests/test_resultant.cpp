#include "doctest.h"

#include <complex>

#include "property_suites.hpp"
#include "weh/poly_io.hpp"
#include "weh/resultant.hpp"

using namespace weh;
using namespace weh::testing;

TEST_CASE("resultant of two linear polynomials") {
    auto tab = VarTable::make({"x", "a", "b"});
    Poly p = parse_poly(tab, "x-a");
    Poly q = parse_poly(tab, "x-b");
    CHECK(resultant(p, q, "x") == parse_poly(tab, "a-b"));
}

TEST_CASE("resultant against a linear factor is evaluation") {
    auto tab = VarTable::make({"x"});
    Poly p = parse_poly(tab, "x^2+1");
    Poly q = parse_poly(tab, "x-1");
    CHECK(resultant(p, q, "x") == Poly::constant(tab, 2));
}

TEST_CASE("degree zero input is a usage error") {
    auto tab = VarTable::make({"x", "y"});
    CHECK_THROWS_AS(resultant(parse_poly(tab, "y"), parse_poly(tab, "x+1"), "x"), usage_error);
}

TEST_CASE("swap sign law on random inputs") {
    Rng rng(11);
    auto tab = VarTable::make({"x", "y"});
    int cases = 150;
    for (int i = 0; i < cases; ++i) {
        Poly p = rng.poly_in_var(tab, "x"), q = rng.poly_in_var(tab, "x");
        Poly rs = resultant_prs(p, q, "x");
        Poly sr = resultant_prs(q, p, "x");
        int64_t mn = p.degree("x") * q.degree("x");
        CHECK((mn % 2 == 0 ? rs == sr : rs == -sr));
    }
}

TEST_CASE("multiplicativity on random inputs") {
    Rng rng(12);
    auto tab = VarTable::make({"x", "y"});
    for (int i = 0; i < 100; ++i) {
        Poly p1 = rng.poly_in_var(tab, "x"), p2 = rng.poly_in_var(tab, "x"),
             q = rng.poly_in_var(tab, "x");
        Poly lhs = resultant_prs(p1 * p2, q, "x");
        Poly rhs = resultant_prs(p1, q, "x") * resultant_prs(p2, q, "x");
        CHECK(lhs == rhs);
    }
}

TEST_CASE("PRS equals the Bareiss Sylvester determinant on random inputs") {
    Rng rng(13);
    auto tab = VarTable::make({"x", "y", "z"});
    for (int i = 0; i < 120; ++i) {
        Poly p = rng.poly_in_var(tab, "x", 1, 5, 3), q = rng.poly_in_var(tab, "x", 1, 5, 3);
        CHECK(resultant_prs(p, q, "x") == resultant_bareiss(p, q, "x"));
    }
}

TEST_CASE("degenerate remainder sequences agree with Bareiss") {
    auto tab = VarTable::make({"x", "y"});
    // forced degree drops and common factors
    Poly p = parse_poly(tab, "(x^2-y)*(x^2+y)");
    Poly q = parse_poly(tab, "(x^2-y)*x");
    CHECK(resultant_prs(p, q, "x") == resultant_bareiss(p, q, "x"));
    CHECK(resultant_prs(p, q, "x").is_zero()); // shared factor -> zero resultant

    Poly a = parse_poly(tab, "x^4+y^2*x^2");
    Poly b = parse_poly(tab, "x^3");
    CHECK(resultant_prs(a, b, "x") == resultant_bareiss(a, b, "x"));
}

TEST_CASE("vanishing at a specialization iff common complex root") {
    // Res_x(p,q) specialized at y0 is zero exactly when p(.,y0), q(.,y0)
    // share a complex root (leading coefficients preserved). Roots found
    // numerically by companion-free polishing on a grid is overkill here;
    // instead check the cleaner rational direction both ways with
    // constructed examples.
    auto tab = VarTable::make({"x", "y"});
    Poly p = parse_poly(tab, "x^2 - y");     // roots +-sqrt(y)
    Poly q = parse_poly(tab, "x^2 - 2*x + y"); // roots 1 +- sqrt(1-y)
    Poly r = resultant(p, q, "x");
    // shared root at y where sqrt(y) = 1 - sqrt(1-y) ... y = 1/2 gives
    // p = x^2-1/2, q = x^2-2x+1/2: no shared root; directly test values:
    for (long yv = -3; yv <= 3; ++yv) {
        std::map<int, ExtScalar> pt{{1, ExtScalar(rat(yv))}};
        bool res_zero = r.eval_exact(pt).is_zero();
        // numeric root comparison
        std::complex<double> roots_p[2], roots_q[2];
        double y = static_cast<double>(yv);
        roots_p[0] = std::sqrt(std::complex<double>(y, 0));
        roots_p[1] = -roots_p[0];
        std::complex<double> disc = std::sqrt(std::complex<double>(1 - y, 0));
        roots_q[0] = std::complex<double>(1, 0) + disc;
        roots_q[1] = std::complex<double>(1, 0) - disc;
        double sep = 1e9;
        for (auto rp : roots_p)
            for (auto rq : roots_q) sep = std::min(sep, std::abs(rp - rq));
        CHECK(res_zero == (sep < 1e-8));
    }
}

TEST_CASE("random common-root law with rational specializations") {
    // Constructed to share the root x = c(y) exactly.
    Rng rng(14);
    auto tab = VarTable::make({"x", "y"});
    for (int i = 0; i < 60; ++i) {
        Poly c = rng.poly(tab, 3, 2);
        std::map<std::string, Poly> kill{{"x", Poly::zero(tab)}};
        c = c.substitute(kill); // depends on y only
        Poly root = Poly::var(tab, "x") - c;
        Poly p = root * rng.poly_in_var(tab, "x");
        Poly q = root * rng.poly_in_var(tab, "x");
        Poly r = resultant_prs(p, q, "x");
        CHECK(r.is_zero());
    }
}
