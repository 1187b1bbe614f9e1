#include "weh/pipeline.hpp"
#include "weh/poly_io.hpp"

namespace weh {

// n = q = 3: all multiplicities one. The residual system forces one
// curvature to vanish and the product of the other two to equal -2 kappa,
// making the scalar curvature constant.
CaseReport run_q3_dim3(const PipelineConfig& cfg) {
    return run_guarded("q3_dim3", "three curvatures in dimension three: rank-2 shape operator",
                       cfg, [&](PipelineContext& ctx) {
        auto tab = VarTable::make({"mu1", "mu2", "mu3", "kappa"});
        SymSpectrum s;
        s.kappa = Poly::var(tab, "kappa");
        for (const char* m : {"mu1", "mu2", "mu3"})
            s.entries.push_back({Poly::var(tab, m), Poly::constant(tab, 1)});
        s.n = Poly::constant(tab, 3);
        auto res = we_residuals(s);

        auto mu = [&](int a) { return Poly::var(tab, "mu" + std::to_string(a)); };
        for (int a = 1; a <= 3; ++a)
            for (int b = a + 1; b <= 3; ++b)
                ctx.ledger(mu(a) - mu(b), "principal curvatures are pairwise non-equal");

        // d_ab = (r~_a - r~_b)/(mu_a - mu_b) = mu_c (2 kappa + (mu_a+mu_b) mu_c)
        auto pair_factor = [&](int a, int b, int c) {
            Poly d = ctx.div_exact(res.r_tilde[a - 1] - res.r_tilde[b - 1], mu(a) - mu(b),
                                   "difference of residual sums");
            Poly expect = mu(c) * (parse_poly(tab, "2*kappa") + (mu(a) + mu(b)) * mu(c));
            return std::make_pair(d, expect);
        };
        auto [d12, e12] = pair_factor(1, 2, 3);
        auto [d13, e13] = pair_factor(1, 3, 2);
        auto [d23, e23] = pair_factor(2, 3, 1);
        ctx.add(claim_exact("difference-factorization",
                            "mu_c (2 kappa + (mu_a + mu_b) mu_c)", d12, e12));
        ctx.add(claim_exact("difference-factorization-2", "cyclic relabelling", d13, e13));
        ctx.add(claim_exact("difference-factorization-3", "cyclic relabelling", d23, e23));

        // if all three curvatures were nonzero, the bracket differences force
        // mu1 (mu3 - mu2) = 0, contradicting distinctness
        Poly a3 = parse_poly(tab, "2*kappa + (mu1+mu2)*mu3");
        Poly a2 = parse_poly(tab, "2*kappa + (mu1+mu3)*mu2");
        ctx.add(claim_exact("vanishing-forced", "bracket difference = mu1 (mu3 - mu2)", a3 - a2,
                            mu(1) * (mu(3) - mu(2))));

        // the resultant route: eliminating mu3 from d12 = d13 = 0 factors into
        // the admissible alternatives
        Poly r = ctx.res(d12, d13, "mu3");
        Poly expect_r = expected_poly(
            cfg, tab, "eliminant-factorization",
            "mu1*mu2^2*(2*kappa+mu1*mu2)*(mu2^2+mu1*mu2+2*kappa)");
        ctx.add(claim_up_to_constant("eliminant-factorization",
                                     "mu1 mu2^2 (2 kappa + mu1 mu2)(mu2^2+mu1 mu2+2 kappa)", r,
                                     expect_r));

        // verification direction: mu2 = 0, mu1 mu3 = -2 kappa kills every residual
        RatFunc mu3_of(parse_poly(tab, "-2*kappa"));
        mu3_of = mu3_of.divided_by(Poly::var(tab, "mu1"), 1);
        std::map<std::string, Poly> mu2_zero{{"mu2", Poly::zero(tab)}};
        bool all_zero = true;
        for (size_t a = 0; a < 3; ++a) {
            Poly specialized = res.scaled[a].substitute(mu2_zero);
            Poly cleared =
                clear_substitute(specialized, "mu3", mu3_of, parse_poly(tab, "mu1^2")).result;
            all_zero = all_zero && cleared.is_zero();
        }
        ctx.add(claim_structural("rank2-back-substitution",
                                 "mu_b = 0 and mu_a mu_c = -2 kappa solve the system", all_zero,
                                 "all three scaled residuals reduce to zero"));

        // scalar curvature on the solution locus is a fixed multiple of kappa
        auto e = einstein_data(s);
        Poly scal0 = e.scalar_curvature.substitute(mu2_zero);
        Poly scal_cleared =
            clear_substitute(scal0, "mu3", mu3_of, Poly::var(tab, "mu1")).result;
        ctx.add(claim_exact("constant-scalar-curvature", "scal = 2 kappa (constant)", scal_cleared,
                            parse_poly(tab, "2*kappa*mu1")));

        // direct-evaluation control: a spectrum violating the product relation
        NumSpectrum bad;
        bad.kappa = -1.0;
        bad.entries = {{2.0, 1}, {0.0, 1}, {1.5, 1}}; // product 3 != -2 kappa = 2
        bad.n = 3;
        auto rep = numeric_report(bad);
        ctx.add(claim_structural("violating-spectrum-rejected",
                                 "product != -2 kappa leaves residuals nonzero",
                                 rep.max_we_residual > 1e-3,
                                 "max residual " + std::to_string(rep.max_we_residual)));
    });
}

} // namespace weh
