#include "weh/pipeline.hpp"
#include "weh/poly_io.hpp"

namespace weh {

namespace {

// One-sign certificate for a univariate polynomial over Q(sqrt(d)) after an
// offset: no roots at or beyond the offset point.
bool no_roots_beyond(const Poly& p, const std::string& var, const ExtScalar& offset_point) {
    const auto& tab = p.table();
    std::map<int, Poly> shift{
        {tab->index(var), Poly::var(tab, var) + Poly::constant(tab, offset_point)}};
    Poly shifted = p.substitute(shift);
    int sign = 0;
    for (const auto& [m, c] : shifted.terms()) {
        int s = c.sign();
        if (sign == 0) sign = s;
        if (s != sign) return false;
    }
    return !shifted.constant_term().is_zero();
}

} // namespace

// Four principal curvatures: the three base relations recovered from the
// shared quartic, positivity of the curvature constraint, the isoparametric
// exclusion over Q(sqrt(2)), and the leading term of the leaf-constancy
// eliminant.
CaseReport run_q4_lemma(const PipelineConfig& cfg) {
    return run_guarded("q4_lemma", "four curvatures: base relations and isoparametric exclusion",
                       cfg, [&](PipelineContext& ctx) {
        auto tab = VarTable::make({"mu1", "mu2", "mu3", "mu4", "kappa", "p1", "p2", "p3", "p4"});
        SymSpectrum s;
        s.kappa = Poly::var(tab, "kappa");
        s.n = Poly::zero(tab);
        for (int a = 1; a <= 4; ++a) {
            Poly p = Poly::var(tab, "p" + std::to_string(a));
            s.entries.push_back({Poly::var(tab, "mu" + std::to_string(a)), p});
            s.n += p;
        }

        Poly e1 = elementary_symmetric(tab, {"mu1", "mu2", "mu3", "mu4"}, 1);
        Poly e2 = elementary_symmetric(tab, {"mu1", "mu2", "mu3", "mu4"}, 2);
        Poly e3 = elementary_symmetric(tab, {"mu1", "mu2", "mu3", "mu4"}, 3);
        Poly H2 = Poly::zero(tab), nH = Poly::zero(tab);
        for (const auto& [mu, p] : s.entries) {
            H2 += p * mu * mu;
            nH += p * mu;
        }
        Poly two_kappa = parse_poly(tab, "2*kappa");

        Poly f1 = expected_poly(cfg, tab, "f1", "mu1+mu2+mu3+mu4");
        Poly f2 = expected_poly(
            cfg, tab, "f2",
            "(2*p1-1)*mu1^2+(2*p2-1)*mu2^2+(2*p3-1)*mu3^2+(2*p4-1)*mu4^2-4*kappa");
        Poly f3 = expected_poly(cfg, tab, "f3",
                                "mu1*mu2*mu3+mu1*mu2*mu4+mu1*mu3*mu4+mu2*mu3*mu4"
                                "-2*kappa*(p1*mu1+p2*mu2+p3*mu3+p4*mu4)");

        // coefficient matching against the common monic quartic:
        //   t^3: e1 = f1;  t^2: 2(e2 - 2 kappa + H2) - f1^2 = f2;  t^1: e3 - 2 kappa nH = f3
        ctx.add(claim_exact("f1-from-quartic", "f1 = sum mu_a", e1, f1));
        ctx.add(claim_exact("f2-from-quartic", "f2 = sum (2 p_a - 1) mu_a^2 - 4 kappa",
                            (e2 - two_kappa + H2) * ExtScalar(2) - e1 * e1, f2));
        ctx.add(claim_exact("f3-from-quartic", "f3 = e3 - 2 kappa sum p_a mu_a",
                            e3 - two_kappa * nH, f3));

        // mu4 := -mu1-mu2-mu3 annihilates f1
        std::map<std::string, Poly> kill_mu4{{"mu4", parse_poly(tab, "-mu1-mu2-mu3")}};
        ctx.add(claim_structural("f1-eliminates-mu4", "f1 = 0 solves mu4",
                                 f1.substitute(kill_mu4).is_zero(), "substitution yields zero"));

        // kappa > 0: f2 + 4 kappa is a positive-coefficient quadratic form
        Poly form = f2 + parse_poly(tab, "4*kappa");
        bool positive = true;
        for (int a = 1; a <= 4; ++a) {
            Poly coeff = form.leading_unit("mu" + std::to_string(a)).coeff;
            auto scan = scan_positivity_after_offset(coeff, {{"p" + std::to_string(a), 1}});
            positive = positive && scan.pass;
        }
        ctx.add(claim_structural("kappa-positive", "f2 = 0 forces kappa > 0", positive,
                                 "each mu_a^2 coefficient 2 p_a - 1 is positive for p_a >= 1"));

        // isoparametric exclusion in Q(sqrt(2)), multiplicities (p1,p2,p1,p2):
        // clearing the quartic-spectrum denominators from f1 gives
        // -(t^2-2t-1)(t^2+2t-1), so t = 1+sqrt(2) is the only root beyond 1
        auto ttab = VarTable::make({"t", "p1", "p2"});
        Poly t = Poly::var(ttab, "t");
        RatFunc mu1_r(t);
        RatFunc mu2_r = RatFunc(parse_poly(ttab, "t-1")).divided_by(parse_poly(ttab, "t+1"), 1);
        RatFunc mu3_r = RatFunc(parse_poly(ttab, "-1")).divided_by(t, 1);
        RatFunc mu4_r = RatFunc(parse_poly(ttab, "t+1")).divided_by(parse_poly(ttab, "1-t"), 1);
        RatFunc f1_iso = mu1_r + mu2_r + mu3_r + mu4_r;
        Poly n1 = f1_iso.num().unit_normal();
        Poly root_factor = parse_poly(ttab, "t^2-2*t-1");
        Poly quotient = ctx.div_exact(n1, root_factor, "designated root factor");
        ctx.add(claim_structural(
            "munzner-root",
            "f1 = 0 at t = 1 + sqrt(2), no further roots with t > 1",
            no_roots_beyond(quotient, "t", ExtScalar(1)) &&
                !quotient.divide(root_factor).exact(),
            "cofactor " + poly_repr(quotient) + " is sign-definite for t >= 1"));

        // substituting t = 1 + sqrt(2) into f2 leaves 4(3(p1+p2) - 4)
        ExtScalar t0(rat(1), rat(1), 2);
        ExtScalar m1 = t0;                                        // 1+sqrt2
        ExtScalar m2 = (t0 - ExtScalar(1)) / (t0 + ExtScalar(1)); // sqrt2-1
        ExtScalar m3 = ExtScalar(-1) / t0;
        ExtScalar m4 = (t0 + ExtScalar(1)) / (ExtScalar(1) - t0);
        std::map<std::string, Poly> iso_point{
            {"mu1", Poly::constant(tab, m1)}, {"mu2", Poly::constant(tab, m2)},
            {"mu3", Poly::constant(tab, m3)}, {"mu4", Poly::constant(tab, m4)},
            {"kappa", Poly::constant(tab, 1)}, {"p3", Poly::var(tab, "p1")},
            {"p4", Poly::var(tab, "p2")}};
        Poly f2_at = f2.substitute(iso_point);
        ctx.add(claim_up_to_constant("munzner-contradiction", "f2 = 0 gives 3(p1+p2) = 4", f2_at,
                                     expected_poly(cfg, tab, "munzner-contradiction",
                                                   "3*p1+3*p2-4")));
        auto scan = scan_integer_grid(f2_at, {"p1", "p2"}, 1, cfg.scan_hi);
        ctx.add(claim_scan("munzner-no-integer-solutions",
                           "3(p1+p2) = 4 has no integer solutions", scan));

        // leaf constancy: resultant of f2, f3 after mu4 := -mu1-mu2-mu3,
        // leading term 4 (p2+p4-1)(p2+p3-1) mu2^6
        Poly F2 = f2.substitute(kill_mu4);
        Poly F3 = f3.substitute(kill_mu4);
        Poly phi = ctx.res(F2, F3, "mu3");
        auto lead = phi.leading_unit("mu2");
        ctx.add(claim_structural("leaf-eliminant-degree", "degree 6 in mu2", lead.degree == 6,
                                 "degree " + std::to_string(lead.degree)));
        ctx.add(claim_up_to_constant("leaf-eliminant-lead",
                                     "leading term 4 (p2+p4-1)(p2+p3-1) mu2^6", lead.coeff,
                                     expected_poly(cfg, tab, "leaf-eliminant-lead",
                                                   "(p2+p4-1)*(p2+p3-1)")));
    });
}

} // namespace weh
