#include "weh/pipeline.hpp"
#include "weh/poly_io.hpp"

namespace weh {

namespace {

// Positive-combination certificate: after shifting p3 by an offset, every
// coefficient of the polynomial in the remaining (squared) quantities is
// nonnegative with a strictly positive witness, so the expression cannot
// vanish for admissible data.
bool positive_form(const Poly& p, const std::vector<std::pair<std::string, long>>& offsets) {
    const auto& tab = p.table();
    std::map<int, Poly> shift;
    for (const auto& [name, off] : offsets)
        shift.emplace(tab->index(name), Poly::var(tab, name) + Poly::constant(tab, off));
    Poly s = p.substitute(shift);
    if (s.is_zero()) return false;
    for (const auto& [m, c] : s.terms())
        if (!c.is_rational() || c.rational_part() < 0) return false;
    return true;
}

// The p3 != p4 branch: three quadratic-in-gamma equations close into a
// determinant, and the symmetric elimination against the base relations
// yields two sigma-polynomials whose sigma2-eliminant has the printed
// constant term.
void run_q4_case2_unequal(PipelineContext& ctx, const PipelineConfig& cfg) {
    auto tb = VarTable::make(
        {"mu1", "mu2", "mu3", "mu4", "g1", "g2", "kappa", "p3", "p4", "s1", "s2"});
    Poly kappa = Poly::var(tb, "kappa");
    Poly g1 = Poly::var(tb, "g1"), g2 = Poly::var(tb, "g2");
    auto mu = [&](int a) { return Poly::var(tb, "mu" + std::to_string(a)); };
    Poly f1 = parse_poly(tb, "mu1+mu2+mu3+mu4");
    Poly f2 = parse_poly(tb, "mu1^2 + mu2^2 + (2*p3-1)*mu3^2 + (2*p4-1)*mu4^2 - 4*kappa");
    Poly f3 = parse_poly(tb,
                         "(mu1+mu2)*mu3*mu4 + mu1*mu2*(mu3+mu4)"
                         " - 2*kappa*(mu1+mu2+p3*mu3+p4*mu4)");
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            ctx.ledger(mu(a) - mu(b), "principal curvatures are pairwise non-equal");

    // per direction a in {1,2}: solve (e_a(mu_a), phi3^a, phi4^a) from the
    // derivatives of f1, f2, f3; the inhomogeneity carries gamma_b
    struct Direction {
        RatFunc e_mu_self; // e_a(mu_a)
        RatFunc phi3, phi4;
    };
    std::array<Direction, 3> dir;
    std::array<Poly, 3> gamma_of{Poly(), g1, g2}; // gamma_a by index
    for (int a : {1, 2}) {
        int b = 3 - a;
        Poly gb = gamma_of[static_cast<size_t>(b)];
        std::array<Poly, 3> c1{Poly::constant(tb, 1), ExtScalar(2) * mu(a), f3.derivative("mu" + std::to_string(a))};
        std::array<Poly, 3> c2{Poly::constant(tb, 1),
                               parse_poly(tb, "2*(2*p3-1)") * mu(3), f3.derivative("mu3")};
        std::array<Poly, 3> c3{Poly::constant(tb, 1),
                               parse_poly(tb, "2*(2*p4-1)") * mu(4), f3.derivative("mu4")};
        std::array<Poly, 3> rhs{Poly::constant(tb, -1), ExtScalar(-2) * mu(b),
                                -f3.derivative("mu" + std::to_string(b))};
        auto det3 = [&](const std::array<Poly, 3>& x, const std::array<Poly, 3>& y,
                        const std::array<Poly, 3>& z) {
            return linear_system_determinant({std::array<Poly, 3>{x[0], y[0], z[0]},
                                              std::array<Poly, 3>{x[1], y[1], z[1]},
                                              std::array<Poly, 3>{x[2], y[2], z[2]}});
        };
        Poly det = det3(c1, c2, c3);
        ctx.ledger(det, "the derivative system for the simple directions is solvable");
        Poly mba = mu(b) - mu(a);
        Poly m3a = mu(3) - mu(a), m4a = mu(4) - mu(a);
        // Cramer with the (mu3-mu_a), (mu4-mu_a) column factors pulled out
        dir[static_cast<size_t>(a)].e_mu_self =
            RatFunc(gb * mba * det3(rhs, c2, c3)).divided_by(det, 1);
        dir[static_cast<size_t>(a)].phi3 =
            RatFunc(gb * mba * det3(c1, rhs, c3)).divided_by(det, 1).divided_by(m3a, 1);
        dir[static_cast<size_t>(a)].phi4 =
            RatFunc(gb * mba * det3(c1, c2, rhs)).divided_by(det, 1).divided_by(m4a, 1);
    }
    ctx.add(claim_structural("phi-proportional-gamma",
                             "phi3^a and phi4^a are gamma_b times rational functions of the mu's",
                             !dir[1].phi3.is_zero() && !dir[2].phi3.is_zero() &&
                                 dir[1].phi3.num().degree("g2") == 1 &&
                                 dir[2].phi3.num().degree("g1") == 1,
                             "derived from the differentiated base relations"));

    // rows A g1^2 + B g2^2 + C from the closure determinants
    auto row_of = [&](const Poly& P) {
        return std::array<Poly, 3>{P.coeff_of(tb->index("g1"), 2), P.coeff_of(tb->index("g2"), 2),
                                   P.coeff_of(tb->index("g1"), 0).coeff_of(tb->index("g2"), 0)};
    };
    std::array<std::array<Poly, 3>, 3> rows;
    bool shapes_ok = true;
    for (int a : {1, 2}) {
        int b = 3 - a;
        Poly ga = gamma_of[static_cast<size_t>(a)], gb = gamma_of[static_cast<size_t>(b)];
        RatFunc R3a = dir[static_cast<size_t>(a)].phi3 / RatFunc(gb);
        RatFunc R4a = dir[static_cast<size_t>(a)].phi4 / RatFunc(gb);
        RatFunc R3b = dir[static_cast<size_t>(b)].phi3 / RatFunc(ga);
        RatFunc R4b = dir[static_cast<size_t>(b)].phi4 / RatFunc(ga);
        RatFunc RM = dir[static_cast<size_t>(a)].e_mu_self / RatFunc(gb);
        // X_a = phi3^a e_a(phi4^a) - phi4^a e_a(phi3^a), via the closures
        RatFunc e_phi4 = R4b * RatFunc(ga * ga) + dir[static_cast<size_t>(a)].phi4 *
                                                        dir[static_cast<size_t>(a)].phi4 +
                         RatFunc(mu(a) * mu(4) + kappa);
        RatFunc e_phi3 = R3b * RatFunc(ga * ga) + dir[static_cast<size_t>(a)].phi3 *
                                                        dir[static_cast<size_t>(a)].phi3 +
                         RatFunc(mu(a) * mu(3) + kappa);
        RatFunc X = dir[static_cast<size_t>(a)].phi3 * e_phi4 -
                    dir[static_cast<size_t>(a)].phi4 * e_phi3;
        // Y_a = phi3^a e_b(phi4^a) - phi4^a e_b(phi3^a) with the mixed closure
        RatFunc eb_phi4 = RatFunc(-(ga * gb)) * R4b + dir[static_cast<size_t>(a)].phi4 *
                                                          (R4b * RatFunc(ga));
        RatFunc eb_phi3 = RatFunc(-(ga * gb)) * R3b + dir[static_cast<size_t>(a)].phi3 *
                                                          (R3b * RatFunc(ga));
        RatFunc Y = dir[static_cast<size_t>(a)].phi3 * eb_phi4 -
                    dir[static_cast<size_t>(a)].phi4 * eb_phi3;
        RatFunc e_b_mu_a = RatFunc(ga * (mu(a) - mu(b)));
        RatFunc e_a_mu_a = dir[static_cast<size_t>(a)].e_mu_self;
        RatFunc det_eq = X * e_b_mu_a - Y * e_a_mu_a;
        Poly P = det_eq.num();
        Poly divided = P;
        for (const Poly& g : {g1, g2}) {
            auto d = divided.divide(g);
            if (d.exact()) divided = d.quotient;
        }
        shapes_ok = shapes_ok && divided.degree("g1") <= 2 && divided.degree("g2") <= 2;
        rows[static_cast<size_t>(a - 1)] = row_of(divided);
    }
    // third equation from kappa + mu3 mu4 + phi3.phi4 = 0
    {
        RatFunc alg = RatFunc(kappa + mu(3) * mu(4)) + dir[1].phi3 * dir[1].phi4 +
                      dir[2].phi3 * dir[2].phi4;
        rows[2] = row_of(alg.num());
    }
    ctx.add(claim_structural("gamma-system-shape",
                             "three equations of the form A gamma1^2 + B gamma2^2 + C",
                             shapes_ok, "no stray gamma monomials"));

    Poly D_poly = linear_system_determinant(rows);

    // symmetric elimination of mu3 and mu4 through sigma1 = mu1+mu2,
    // sigma2 = mu1 mu2
    std::map<std::string, Poly> sum_zero{{"mu4", parse_poly(tb, "-mu1-mu2-mu3")}};
    Poly q2 = f2.substitute(sum_zero), q3 = f3.substitute(sum_zero);
    Poly lc2 = q2.coeff_of(tb->index("mu3"), 2), lc3 = q3.coeff_of(tb->index("mu3"), 2);
    Poly L = lc3 * q2 - lc2 * q3;
    ctx.add(claim_structural("mu3-linear", "the quadratic terms cancel in the cross combination",
                             L.degree("mu3") == 1, "degree 1 in mu3"));
    RatFunc mu3_of = solve_linear(RatFunc(L), "mu3");
    Poly W = RatFunc::substitute(q2, {{tb->index("mu3"), mu3_of}}).num().unit_normal();
    ctx.add(claim_structural("W-symmetric", "the sigma relation is symmetric in mu1, mu2",
                             is_symmetric(W, {"mu1", "mu2"}), "swap invariance"));
    Poly Wt = elementary_rewrite(W, {"mu1", "mu2"}, {"s1", "s2"});

    Poly D_sub =
        RatFunc::substitute(D_poly.substitute(sum_zero), {{tb->index("mu3"), mu3_of}}).num();
    D_sub = ctx.strip_factors(D_sub,
                              {kappa, mu(1) - mu(2), parse_poly(tb, "p3-p4"),
                               parse_poly(tb, "p3+p4"), parse_poly(tb, "p3+p4-1")},
                              "content of the closure determinant");
    ctx.add(claim_structural("D-symmetric", "the determinant relation is symmetric in mu1, mu2",
                             is_symmetric(D_sub, {"mu1", "mu2"}), "swap invariance"));
    Poly Dt = elementary_rewrite(D_sub, {"mu1", "mu2"}, {"s1", "s2"});

    std::vector<Poly> seen{kappa, Poly::var(tb, "s1"), parse_poly(tb, "p3+p4"),
                           parse_poly(tb, "p3+p4-1"), parse_poly(tb, "p3-p4"),
                           Poly::var(tb, "p3"), Poly::var(tb, "p4"),
                           parse_poly(tb, "p3-1"), parse_poly(tb, "p4-1")};
    auto lw = Wt.leading_unit("s2");
    ctx.add(claim_structural("W-s2-degree", "degree 2 in sigma2", lw.degree == 2,
                             "degree " + std::to_string(lw.degree)));
    ctx.add(claim_up_to_seen_factors("W-s2-lead", "leading term ((p3+p4)^2 sigma1^2) sigma2^2",
                                     lw.coeff,
                                     expected_poly(cfg, tb, "W-s2-lead", "(p3+p4)^2*s1^2"),
                                     seen));
    auto ld = Dt.leading_unit("s2");
    ctx.add(claim_structural("D-s2-degree", "degree 12 in sigma2", ld.degree == 12,
                             "degree " + std::to_string(ld.degree)));
    ctx.add(claim_up_to_seen_factors(
        "D-s2-lead", "leading term ((p3+p4-1)(p3+p4)^12 sigma1^12) sigma2^12", ld.coeff,
        expected_poly(cfg, tb, "D-s2-lead", "(p3+p4-1)*(p3+p4)^12*s1^12"), seen));

    std::vector<int> weights(static_cast<size_t>(tb->size()), 1);
    weights[static_cast<size_t>(tb->index("kappa"))] = 2;
    weights[static_cast<size_t>(tb->index("p3"))] = 0;
    weights[static_cast<size_t>(tb->index("p4"))] = 0;
    weights[static_cast<size_t>(tb->index("s2"))] = 2;
    Poly closing = (Dt.weighted_degree(weights) && Wt.weighted_degree(weights))
                       ? ctx.res_graded(Dt, Wt, "s2", weights, "kappa")
                       : ctx.res(Dt, Wt, "s2");
    closing = ctx.strip_factors(closing, {Poly::var(tb, "s1"), kappa},
                                "content of the sigma2 eliminant");
    Poly constant_term = closing.coeff_of(tb->index("s1"), 0);
    ctx.add(claim_up_to_seen_factors(
        "closing-constant", "constant term 4096 kappa^18 (p3+p4-1)(p3-p4)^12", constant_term,
        expected_poly(cfg, tb, "closing-constant", "4096*kappa^18*(p3+p4-1)*(p3-p4)^12"), seen));

    // numeric control at (p3, p4) = (2, 3)
    Poly at23 = constant_term.substitute(std::map<std::string, Poly>{
        {"p3", Poly::constant(tb, 2)}, {"p4", Poly::constant(tb, 3)}});
    ctx.add(claim_up_to_seen_factors("closing-constant-23",
                                     "constant term at (2,3): 4096 kappa^18 * 4", at23,
                                     parse_poly(tb, "16384*kappa^18"), {kappa}));
}

void run_q4_case2_unequal(PipelineContext& ctx, const PipelineConfig& cfg);

} // namespace

// q = 4 with p1 = p2 = 1 < p3, p4: the two branches. Equal high
// multiplicities close into a contradiction pair of positive forms; unequal
// ones eliminate down to a sigma1 polynomial whose constant term carries the
// printed product.
CaseReport run_q4_case2(const PipelineConfig& cfg) {
    return run_guarded("q4_case2", "four curvatures, two simple", cfg, [&](PipelineContext& ctx) {
        // ---------------- branch p3 = p4 (l = 2 p3 - 1) -------------------
        {
            auto tb = VarTable::make({"mu1", "mu2", "mu3", "mu4", "kappa", "p3", "ell"});
            Poly mu1 = Poly::var(tb, "mu1");
            Poly f3 = parse_poly(tb,
                                 "(mu1+mu2)*mu3*mu4 + mu1*mu2*(mu3+mu4)"
                                 " - 2*kappa*(mu1+mu2+p3*mu3+p3*mu4)");
            std::map<std::string, Poly> sum_zero{{"mu4", parse_poly(tb, "-mu1-mu2-mu3")}};
            Poly f3s = f3.substitute(sum_zero);
            Poly quotient = ctx.div_exact(f3s, parse_poly(tb, "mu1+mu2"), "symmetric-pair factor");
            ctx.add(claim_exact("equal-branch-split",
                                "f3 = (mu1+mu2)(mu3 mu4 - mu1 mu2 - 2 kappa (1-p3))", quotient,
                                parse_poly(tb,
                                           "mu3*(-mu1-mu2-mu3) - mu1*mu2 - 2*kappa*(1-p3)")));
            // alternative branch mu3 mu4 = mu1 mu2 + 2 kappa(1 - p3) makes
            // f2 a positive form: mu1^2 + mu2^2 + 2 kappa (2 p3 - 3) = 0
            {
                auto qt = VarTable::make({"u", "v", "kappa", "p3"}); // u = mu1^2, v = mu2^2
                Poly form = parse_poly(qt, "u + v + 2*kappa*(2*p3-3)");
                ctx.add(claim_structural(
                    "equal-branch-alternative-excluded",
                    "mu1^2 + mu2^2 = 2 kappa (3 - 2 p3) is impossible for p3 >= 2",
                    positive_form(form, {{"p3", 2}}),
                    "positive combination of squares and kappa > 0"));
            }
        }

        // branch relations mu2 = -mu1, mu4 = -mu3, mu1^2 + l mu3^2 = 2 kappa
        {
            auto tb = VarTable::make({"mu1", "mu3", "g1", "g2", "kappa", "ell"});
            Poly mu1 = Poly::var(tb, "mu1"), mu3 = Poly::var(tb, "mu3");
            Poly g1 = Poly::var(tb, "g1"), g2 = Poly::var(tb, "g2");
            Poly kappa = Poly::var(tb, "kappa"), ell = Poly::var(tb, "ell");
            ctx.ledger(mu3, "mu3 = 0 would repeat mu4 = -mu3");
            ctx.ledger(mu1 * mu1 - mu3 * mu3, "the four curvatures are pairwise distinct");

            // phi_3^a, phi_4^a from differentiating the quadratic relation
            auto gamma = [&](int a) { return a == 1 ? g2 : g1; }; // e_a sees gamma_b
            auto mu_a = [&](int a) { return a == 1 ? mu1 : -mu1; };
            std::array<RatFunc, 3> phi3, phi4;
            for (int a : {1, 2}) {
                // e_a(mu_a) = 2 mu_a gamma_b, e_a(mu3) = phi3^a (mu3 - mu_a)
                RatFunc e_mu3 = RatFunc(-(mu1 * mu_a(a) * ExtScalar(2) * gamma(a)))
                                    .divided_by(ell, 1)
                                    .divided_by(mu3, 1);
                phi3[a] = e_mu3.divided_by(mu3 - mu_a(a), 1);
                RatFunc printed3 = RatFunc(ExtScalar(-2) * mu1 * mu1 * gamma(a))
                                       .divided_by(ell, 1)
                                       .divided_by(mu3, 1)
                                       .divided_by(mu3 - mu_a(a), 1);
                ctx.add(claim_structural(
                    "phi3-" + std::to_string(a),
                    "phi3^a = -2 l^-1 mu1^2 (mu3 (mu3 - mu_a))^-1 gamma_b",
                    phi3[a].equals(printed3), "rational functions agree"));
                phi4[a] = (-e_mu3).divided_by(-mu3 - mu_a(a), 1);
                RatFunc printed4 = RatFunc(ExtScalar(-2) * mu1 * mu1 * gamma(a))
                                       .divided_by(ell, 1)
                                       .divided_by(mu3, 1)
                                       .divided_by(mu3 + mu_a(a), 1);
                ctx.add(claim_structural(
                    "phi4-" + std::to_string(a),
                    "phi4^a = -2 l^-1 mu1^2 (mu3 (mu3 + mu_a))^-1 gamma_b",
                    phi4[a].equals(printed4), "rational functions agree"));
            }

            // kappa + mu3 mu4 + phi3.phi4 = 0 gives gamma1^2 + gamma2^2
            RatFunc lhs = RatFunc(kappa - mu3 * mu3) + phi3[1] * phi4[1] + phi3[2] * phi4[2];
            // solve for g1^2 + g2^2: lhs = A (g1^2 + g2^2) + (kappa - mu3^2)
            RatFunc sum_printed =
                RatFunc(ell * ell * mu3 * mu3 * (mu1 * mu1 - mu3 * mu3) * (kappa - mu3 * mu3))
                    .divided_by(mu1, 4) / RatFunc(Poly::constant(tb, 4));
            RatFunc residual = lhs.substituted(
                {{tb->index("g1"), RatFunc::zero(tb)}, {tb->index("g2"), RatFunc::zero(tb)}});
            RatFunc coeff = (lhs - residual);
            // coeff = c(mu) (g1^2 + g2^2); verify c * sum_printed = -residual
            RatFunc c_of = coeff.substituted({{tb->index("g1"), RatFunc::one(tb)},
                                              {tb->index("g2"), RatFunc::zero(tb)}});
            ctx.add(claim_structural(
                "gamma-sum",
                "gamma1^2 + gamma2^2 = 1/4 l^2 mu1^-4 mu3^2 (mu1^2 - mu3^2)(kappa - mu3^2)",
                (c_of * sum_printed + residual).is_zero(), "substituted relation closes"));

            // closure equations force gamma1^2 = gamma2^2 =
            //   -1/8 l^2 mu1^-2 (mu1^2 + l mu3^2)^-1 mu3^2 (mu1^2-mu3^2)(kappa-mu3^2)
            RatFunc gamma_sq_printed =
                RatFunc(-(ell * ell) * mu3 * mu3 * (mu1 * mu1 - mu3 * mu3) *
                        (kappa - mu3 * mu3))
                    .divided_by(mu1, 2)
                    .divided_by(mu1 * mu1 + ell * mu3 * mu3, 1) /
                RatFunc(Poly::constant(tb, 8));
            // derive e_a(gamma_b) from the phi3 closure and от the phi4 one;
            // their difference is the branch equation
            auto chain = [&](const RatFunc& r, int a) {
                Derivation d("chain", tb);
                d.rule("mu1", RatFunc(mu_a(a) * ExtScalar(2) * gamma(a)) *
                                  (a == 1 ? RatFunc::one(tb) : RatFunc::one(tb)));
                d.rule("mu3", RatFunc(-(mu1 * mu_a(a) * ExtScalar(2) * gamma(a)))
                                  .divided_by(ell, 1)
                                  .divided_by(mu3, 1));
                d.constants({"g1", "g2", "kappa", "ell"});
                return d.apply(r);
            };
            std::array<RatFunc, 3> branch_eq;
            for (int a : {1, 2}) {
                int b = 3 - a;
                RatFunc R3 = phi3[a] / RatFunc(gamma(a));
                RatFunc R4 = phi4[a] / RatFunc(gamma(a));
                Poly gb = gamma(a), ga = (a == 1 ? g1 : g2);
                // e_a(phi3^a) = phi3^b gamma_a + (phi3^a)^2 + mu_a mu3 + kappa
                RatFunc rhs3 = phi3[b] * RatFunc(ga) + phi3[a] * phi3[a] +
                               RatFunc(mu_a(a) * mu3 + kappa);
                RatFunc rhs4 = phi4[b] * RatFunc(ga) + phi4[a] * phi4[a] +
                               RatFunc(-(mu_a(a) * mu3) + kappa);
                // e_a(gamma_b) eliminated between the two closures
                RatFunc lhs_diff = (rhs3 - RatFunc(gb) * chain(R3, a)) / R3 -
                                   (rhs4 - RatFunc(gb) * chain(R4, a)) / R4;
                branch_eq[a] = lhs_diff;
            }
            // solve the two closure differences together with the sum
            // relation: they must force gamma1^2 = gamma2^2 = printed value
            std::map<int, RatFunc> force{
                {tb->index("g1"), RatFunc::zero(tb)}, {tb->index("g2"), RatFunc::zero(tb)}};
            bool forced = true;
            for (int a : {1, 2}) {
                // branch_eq is A g1^2 + B g2^2 + C; substitute the printed
                // squares and check it closes
                RatFunc at_zero = branch_eq[a].substituted(force);
                RatFunc c1 = branch_eq[a].substituted({{tb->index("g1"), RatFunc::one(tb)},
                                                       {tb->index("g2"), RatFunc::zero(tb)}}) -
                             at_zero;
                RatFunc c2 = branch_eq[a].substituted({{tb->index("g1"), RatFunc::zero(tb)},
                                                       {tb->index("g2"), RatFunc::one(tb)}}) -
                             at_zero;
                RatFunc closed = c1 * gamma_sq_printed + c2 * gamma_sq_printed + at_zero;
                forced = forced && closed.is_zero();
            }
            ctx.add(claim_structural("gamma-squares",
                                     "gamma1^2 = gamma2^2 = -1/8 l^2 mu1^-2 (mu1^2 + l mu3^2)^-1 "
                                     "mu3^2 (mu1^2 - mu3^2)(kappa - mu3^2)",
                                     forced, "both closure differences vanish on the solution"));

            // eliminating the gammas: either kappa = mu3^2 or 2 mu1^2 + l mu3^2 = 0
            RatFunc combo = gamma_sq_printed * RatFunc(Poly::constant(tb, 2)) - sum_printed;
            Poly num = combo.num().unit_normal();
            Poly expected_factors =
                (mu3 * mu3) * (mu1 * mu1 - mu3 * mu3) * (kappa - mu3 * mu3) *
                (ExtScalar(2) * mu1 * mu1 + ell * mu3 * mu3);
            ctx.add(claim_up_to_constant("alternative-pair",
                                         "either kappa = mu3^2 or 2 mu1^2 + l mu3^2 = 0", num,
                                         expected_factors.unit_normal()));
            // both alternatives contradict mu1^2 + l mu3^2 = 2 kappa
            auto qt = VarTable::make({"u", "w", "kappa", "p3"}); // u = mu1^2, w = mu3^2
            Poly alt1 = parse_poly(qt, "u + (2*p3-3)*w"); // kappa = mu3^2 branch
            Poly alt2 = parse_poly(qt, "2*u + (2*p3-1)*w");
            ctx.add(claim_structural("equal-branch-contradiction",
                                     "kappa = mu3^2 or 2 mu1^2 + l mu3^2 = 0 contradict the "
                                     "quadratic relation",
                                     positive_form(alt1, {{"p3", 2}}) &&
                                         positive_form(alt2, {{"p3", 2}}),
                                     "positive combinations of squares"));
        }

        // ---------------- branch p3 != p4 ---------------------------------
        run_q4_case2_unequal(ctx, cfg);

        // Psi-branch exclusions
        {
            auto tb = VarTable::make({"mu1", "mu2", "mu3", "mu4", "kappa", "p3", "p4", "a1", "a2"});
            // p3 = p4 forces mu2 = -mu1, mu4 = -mu3, and the mixing relation
            // collapses to (mu1^2 - mu3^2)(a1^2 + a2^2) = 0
            Poly mix = parse_poly(tb, "(mu2-mu3)*(mu2-mu4)*a1^2 + (mu1-mu3)*(mu1-mu4)*a2^2");
            Poly sub = mix.substitute(std::map<std::string, Poly>{
                {"mu2", -Poly::var(tb, "mu1")}, {"mu4", -Poly::var(tb, "mu3")}});
            ctx.add(claim_exact("psi-orthogonal-collapse",
                                "(mu1^2 - mu3^2)(alpha1^2 + alpha2^2) = 0 forces alpha = 0", sub,
                                parse_poly(tb, "(mu1^2-mu3^2)*(a1^2+a2^2)")));

            // the V-field relation (mu2-mu3)(mu1-mu4) + (mu1-mu3)(mu2-mu4) = 0
            // is incompatible with the base relations
            Poly q = parse_poly(tb, "(mu2-mu3)*(mu1-mu4) + (mu1-mu3)*(mu2-mu4)");
            Poly f2 = parse_poly(tb,
                                 "mu1^2 + mu2^2 + (2*p3-1)*mu3^2 + (2*p4-1)*mu4^2 - 4*kappa");
            Poly f3 = parse_poly(tb,
                                 "(mu1+mu2)*mu3*mu4 + mu1*mu2*(mu3+mu4)"
                                 " - 2*kappa*(mu1+mu2+p3*mu3+p4*mu4)");
            std::map<std::string, Poly> sum_zero{{"mu4", parse_poly(tb, "-mu1-mu2-mu3")}};
            Poly Q = q.substitute(sum_zero), F2 = f2.substitute(sum_zero),
                 F3 = f3.substitute(sum_zero);
            Poly E1 = ctx.res(Q, F2, "mu3");
            Poly E2 = ctx.res(Q, F3, "mu3");
            Poly E = ctx.res(E1, E2, "mu2");
            E = ctx.strip_factors(E, {Poly::var(tb, "mu1"), Poly::var(tb, "kappa")},
                                  "content of the V-field eliminant");
            auto lu = E.leading_unit("mu1");
            Poly lead = ctx.strip_factors(lu.coeff, {Poly::var(tb, "kappa")},
                                          "kappa content of the lead");
            auto scan = scan_positivity_after_offset(lead, {{"p3", 2}, {"p4", 2}});
            ScanReport rep = scan.pass ? scan
                                       : scan_integer_grid(lead, {"p3", "p4"}, cfg.scan_lo,
                                                           cfg.scan_hi);
            Claim c = claim_scan("v-field-exclusion",
                                 "(mu2-mu3)(mu1-mu4) + (mu1-mu3)(mu2-mu4) = 0 is inconsistent",
                                 rep);
            c.pass = c.pass && !E.is_zero();
            ctx.add(c);
        }
    });
}

} // namespace weh
