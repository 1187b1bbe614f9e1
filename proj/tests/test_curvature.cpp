#include "doctest.h"

#include "random_poly.hpp"
#include "weh/curvature.hpp"
#include "weh/poly_io.hpp"

using namespace weh;
using namespace weh::testing;

namespace {

SymSpectrum sym_q3(const VarTablePtr& tab) {
    SymSpectrum s;
    s.kappa = Poly::var(tab, "kappa");
    s.entries = {{Poly::var(tab, "mu1"), Poly::var(tab, "p1")},
                 {Poly::var(tab, "mu2"), Poly::var(tab, "p2")},
                 {Poly::var(tab, "mu3"), Poly::var(tab, "p3")}};
    s.n = parse_poly(tab, "p1+p2+p3");
    return s;
}

} // namespace

TEST_CASE("umbilic spectrum: zero residuals, zero traceless norm") {
    auto tab = VarTable::make({"lambda", "kappa", "n"});
    SymSpectrum s;
    s.kappa = Poly::var(tab, "kappa");
    s.entries = {{Poly::var(tab, "lambda"), Poly::var(tab, "n")}};
    s.n = Poly::var(tab, "n");
    auto r = we_residuals(s);
    CHECK(r.scaled[0].is_zero());
    auto e = einstein_data(s);
    CHECK(e.scaled_residuals[0].is_zero());
    CHECK(e.traceless_norm_scaled.is_zero());
    // every Gauss component is kappa + lambda^2
    auto g = gauss_components(s);
    CHECK(g[0][0] == parse_poly(tab, "kappa + lambda^2"));
}

TEST_CASE("weighted residual sum vanishes identically") {
    auto tab = VarTable::make({"mu1", "mu2", "mu3", "kappa", "p1", "p2", "p3"});
    SymSpectrum s = sym_q3(tab);
    auto r = we_residuals(s);
    Poly sum = Poly::zero(tab);
    for (size_t a = 0; a < s.q(); ++a) sum += s.entries[a].second * r.scaled[a];
    CHECK(sum.is_zero());
}

TEST_CASE("scaling law: (kappa, mu) -> (c^2 kappa, c mu) scales residuals by c^4") {
    auto tab = VarTable::make({"mu1", "mu2", "mu3", "kappa", "p1", "p2", "p3", "c"});
    SymSpectrum s = sym_q3(tab);
    auto r = we_residuals(s);
    Poly c = Poly::var(tab, "c");
    std::map<std::string, Poly> scale{
        {"kappa", c * c * Poly::var(tab, "kappa")},
        {"mu1", c * Poly::var(tab, "mu1")},
        {"mu2", c * Poly::var(tab, "mu2")},
        {"mu3", c * Poly::var(tab, "mu3")},
    };
    for (size_t a = 0; a < s.q(); ++a) {
        CHECK(r.scaled[a].substitute(scale) == r.scaled[a] * c.pow(4));
    }
}

TEST_CASE("scaled residual equals minus the quartic residual at each curvature") {
    auto tab = VarTable::make({"mu1", "mu2", "mu3", "kappa", "p1", "p2", "p3"});
    SymSpectrum s = sym_q3(tab);
    auto r = we_residuals(s);
    auto q = quartic_coeffs(s);
    for (size_t a = 0; a < s.q(); ++a) {
        CHECK(r.scaled[a] == -q.residual_at(s.entries[a].first));
    }
}

TEST_CASE("q=2 difference factors through the printed cubic relation") {
    auto tab = VarTable::make({"mu1", "mu2", "kappa", "p1", "p2"});
    SymSpectrum s;
    s.kappa = Poly::var(tab, "kappa");
    s.entries = {{Poly::var(tab, "mu1"), Poly::var(tab, "p1")},
                 {Poly::var(tab, "mu2"), Poly::var(tab, "p2")}};
    s.n = parse_poly(tab, "p1+p2");
    auto r = we_residuals(s);
    Poly diff = r.r_tilde[0] - r.r_tilde[1];
    Poly quot = diff.exact_divide(parse_poly(tab, "mu1-mu2"));
    Poly printed = parse_poly(tab,
                              "(p1-1)*(mu1^3+mu1^2*mu2+2*kappa*mu1) + "
                              "(p2-1)*(mu2^3+mu2^2*mu1+2*kappa*mu2)");
    CHECK(quot == printed);
}

TEST_CASE("cross blocks of a product spectrum are flat") {
    auto tab = VarTable::make({"mu1", "kappa", "p1", "p2"});
    // mu2 = -kappa/mu1 cleared: use mu1*mu2 = -kappa via direct table entry
    SymSpectrum s;
    s.kappa = Poly::var(tab, "kappa");
    s.entries = {{Poly::var(tab, "mu1"), Poly::var(tab, "p1")},
                 {Poly::zero(tab), Poly::var(tab, "p2")}};
    s.n = parse_poly(tab, "p1+p2");
    // directly: entry kappa + mu1*mu2 with mu1 mu2 = -kappa is zero; emulate
    // numerically instead
    NumSpectrum ns;
    ns.kappa = 2.0 / 3.0;
    ns.entries = {{2.0 / std::sqrt(3.0), 2}, {-1.0 / std::sqrt(3.0), 5}};
    ns.n = 7;
    auto g = gauss_components(ns);
    CHECK(std::abs(g[0][1]) < 1e-15);
}

TEST_CASE("numeric product spectrum is weakly Einstein but not Einstein") {
    // n1=2, n2=5, kappa2=1 -> kappa1=2, kappa=2/3
    NumSpectrum s;
    s.kappa = 2.0 / 3.0;
    s.entries = {{2.0 / std::sqrt(3.0), 2}, {-1.0 / std::sqrt(3.0), 5}};
    s.n = 7;
    auto rep = numeric_report(s);
    CHECK(rep.max_we_residual < 1e-12);
    CHECK(rep.max_quartic_residual < 1e-12);
    CHECK(rep.max_einstein_residual > 1e-3);
}

TEST_CASE("random numeric q=3 spectrum with wrong product is rejected") {
    NumSpectrum s;
    s.kappa = -1.0;
    s.entries = {{2.0, 1}, {0.0, 1}, {1.0, 1}}; // product 2 != -2 kappa = 2 ... pick barely off
    s.n = 3;
    // mu1*mu3 = 2 = -2 kappa, so this one actually passes; perturb
    s.entries[2].first = 1.25;
    auto rep = numeric_report(s);
    CHECK(rep.max_we_residual > 1e-3);
}

TEST_CASE("rank-2 solution for n=q=3 passes and has constant scalar curvature") {
    auto tab = VarTable::make({"mu1", "kappa"});
    // mu2 = 0, mu3 = -2 kappa / mu1: clear denominators by substituting into
    // the scaled residuals after multiplying by mu1^k; numeric check here,
    // the symbolic derivation lives in the q3 pipeline.
    for (double mu1 : {0.5, 1.0, 3.0}) {
        for (double kappa : {-1.0, 0.7}) {
            NumSpectrum s;
            s.kappa = kappa;
            s.entries = {{mu1, 1}, {0.0, 1}, {-2 * kappa / mu1, 1}};
            s.n = 3;
            auto rep = numeric_report(s);
            CHECK(rep.max_we_residual < 1e-12);
            auto e = einstein_data(s);
            CHECK(e.scalar_curvature / (s.n * (s.n - 1)) ==
                  doctest::Approx(kappa / 3).epsilon(1e-12));
        }
    }
}

TEST_CASE("five distinct curvatures are obstructed") {
    auto tab = VarTable::make({"m1", "m2", "m3", "m4", "m5", "kappa"});
    SymSpectrum s;
    s.kappa = Poly::var(tab, "kappa");
    for (const char* m : {"m1", "m2", "m3", "m4", "m5"})
        s.entries.push_back({Poly::var(tab, m), Poly::constant(tab, 1)});
    s.n = Poly::constant(tab, 5);
    CHECK(five_spectrum_obstruction(s).is_zero());
}

TEST_CASE("traceless norm identity for one simple curvature") {
    auto tab = VarTable::make({"mu1", "mu2", "kappa", "n"});
    SymSpectrum s;
    s.kappa = Poly::var(tab, "kappa");
    s.entries = {{Poly::var(tab, "mu1"), Poly::constant(tab, 1)},
                 {Poly::var(tab, "mu2"), parse_poly(tab, "n-1")}};
    s.n = Poly::var(tab, "n");
    auto e = einstein_data(s);
    // n |S - H id|^2 = (n-1)(mu1-mu2)^2
    CHECK(e.traceless_norm_scaled == parse_poly(tab, "(n-1)*(mu1-mu2)^2"));
}

TEST_CASE("spectra load from JSON fixtures") {
    NumSpectrum ns = num_spectrum_from_json(
        R"({"kappa": 1.0, "entries": [{"mu": 1.0, "p": 3}]})");
    CHECK(ns.n == 3);
    CHECK(numeric_report(ns).max_we_residual < 1e-15);

    auto tab = VarTable::make({"mu1", "mu2", "kappa", "p1", "p2"});
    SymSpectrum ss = sym_spectrum_from_json(
        R"({"kappa": "kappa", "entries": [{"mu": "mu1", "p": "p1"}, {"mu": "mu2", "p": "p2"}]})",
        tab);
    CHECK(ss.q() == 2);
    CHECK(ss.n == parse_poly(tab, "p1+p2"));
}

TEST_CASE("numeric cluster detection") {
    auto s = cluster_spectrum(1.0, {2.0, 2.0 + 1e-9, 2.0 - 1e-9, -1.0}, 1e-6);
    REQUIRE(s.q() == 2);
    CHECK(s.entries[0].first == doctest::Approx(-1.0));
    CHECK(s.entries[1].second == doctest::Approx(3.0));
}
