#include "weh/pipeline.hpp"
#include "weh/poly_io.hpp"

namespace weh {

// Two principal curvatures. Derives the cubic relation from the residual
// difference, specializes one multiplicity to 1 for the rotation relation,
// and checks the product-construction equivalence.
CaseReport run_q2(const PipelineConfig& cfg) {
    return run_guarded("q2", "two curvatures: products and the rotation relation", cfg,
                       [&](PipelineContext& ctx) {
        auto tab = VarTable::make({"mu1", "mu2", "kappa", "p1", "p2"});
        SymSpectrum s;
        s.kappa = Poly::var(tab, "kappa");
        s.entries = {{Poly::var(tab, "mu1"), Poly::var(tab, "p1")},
                     {Poly::var(tab, "mu2"), Poly::var(tab, "p2")}};
        s.n = parse_poly(tab, "p1+p2");
        auto res = we_residuals(s);

        Poly mu_diff = parse_poly(tab, "mu1-mu2");
        ctx.ledger(mu_diff, "the two principal curvatures are pairwise non-equal");

        Poly cubic = ctx.div_exact(res.r_tilde[0] - res.r_tilde[1], mu_diff, "residual difference");
        Poly expected_cubic = expected_poly(
            cfg, tab, "cubic-relation",
            "(p1-1)*(mu1^3+mu1^2*mu2+2*kappa*mu1) + (p2-1)*(mu2^3+mu2^2*mu1+2*kappa*mu2)");
        ctx.add(claim_up_to_constant("cubic-relation",
                                     "(p1-1)(mu1^3+mu1^2 mu2+2 kappa mu1) + (p2-1)(...)", cubic,
                                     expected_cubic));

        // p1 = 1: the rotation relation mu2^2 + mu1 mu2 + 2 kappa = 0
        std::map<std::string, Poly> p1_one{{"p1", Poly::constant(tab, 1)}};
        Poly specialized = cubic.substitute(p1_one);
        Poly p2m1 = parse_poly(tab, "p2-1");
        Poly mu2 = Poly::var(tab, "mu2");
        ctx.ledger(p2m1, "p2 = n-1 >= 2 when n >= 3");
        ctx.ledger(mu2, "points with vanishing mu2 have Ricci proportional to the metric");
        Poly rotation = ctx.div_exact(ctx.div_exact(specialized, p2m1, "multiplicity factor"), mu2,
                                      "simple-curvature factor");
        ctx.add(claim_exact("rotation-relation", "mu2^2 + mu1 mu2 + 2 kappa = 0", rotation,
                            expected_poly(cfg, tab, "rotation-relation",
                                          "mu2^2 + mu1*mu2 + 2*kappa")));

        // congruent-spheres control: p2 = p1, mu2 = -mu1 annihilates the cubic
        std::map<std::string, Poly> sym{{"p2", Poly::var(tab, "p1")},
                                        {"mu2", -Poly::var(tab, "mu1")}};
        ctx.add(claim_structural("einstein-symmetric-zero",
                                 "congruent product: the cubic relation vanishes",
                                 cubic.substitute(sym).is_zero(),
                                 "p2 := p1, mu2 := -mu1 gives the zero polynomial"));

        // product equivalence: with mu1 mu2 = -kappa imposed, the residual
        // difference is (p1-1) kappa1^2 - (p2-1) kappa2^2, kappa_a = kappa + mu_a^2
        RatFunc mu2_of(parse_poly(tab, "-kappa"));
        mu2_of = mu2_of.divided_by(Poly::var(tab, "mu1"), 1);
        Poly clearing = parse_poly(tab, "mu1^4");
        Poly lhs = clear_substitute(res.r_tilde[0] - res.r_tilde[1], "mu2", mu2_of, clearing).result;
        Poly rhs_raw = parse_poly(tab, "(p1-1)*(kappa+mu1^2)^2 - (p2-1)*(kappa+mu2^2)^2");
        Poly rhs = clear_substitute(rhs_raw, "mu2", mu2_of, clearing).result;
        ctx.add(claim_exact("product-equivalence",
                            "weakly Einstein iff kappa1^2(n1-1) = kappa2^2(n2-1)", lhs, rhs));

        // numeric witness: n1=2, n2=5, kappa2=1 -> kappa1=2, kappa=2/3
        NumSpectrum ns;
        ns.kappa = 2.0 / 3.0;
        ns.entries = {{2.0 / std::sqrt(3.0), 2}, {-1.0 / std::sqrt(3.0), 5}};
        ns.n = 7;
        auto rep = numeric_report(ns);
        ctx.add(claim_numeric("product-numeric", "kappa1 = 2, kappa = 2/3 product residuals",
                              rep.max_we_residual, 1e-12, "n1=2, n2=5, kappa2=1"));
    });
}

} // namespace weh
