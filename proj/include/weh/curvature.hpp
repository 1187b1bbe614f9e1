#pragma once

#include <string>
#include <vector>

#include "weh/poly.hpp"
#include "weh/ratfunc.hpp"

namespace weh {

// Principal curvature spectrum of a hypersurface in a space form: ambient
// curvature kappa plus pairwise distinct curvatures mu_a with multiplicities
// p_a, sum p_a = n. One template serves the symbolic (Poly) and numeric
// (double) instantiations; all symbolic formulas are kept denominator-free
// by scaling with n.
template <class K>
struct SpectrumT {
    K kappa;
    K n; // = sum of multiplicities (kept explicit: it may be symbolic)
    std::vector<std::pair<K, K>> entries; // (mu_a, p_a)

    size_t q() const { return entries.size(); }
};

using SymSpectrum = SpectrumT<Poly>;
using NumSpectrum = SpectrumT<double>;

// unit (multiplicative identity) in the scalar ring of a spectrum
inline Poly unit_of(const SymSpectrum& s) { return Poly::constant(s.kappa.table(), 1); }
inline double unit_of(const NumSpectrum&) { return 1.0; }

// Sectional curvature table from the Gauss equation: cross entries
// kappa + mu_a mu_b, block entries kappa + mu_a^2 (meaningful when p_a >= 2).
template <class K>
std::vector<std::vector<K>> gauss_components(const SpectrumT<K>& s) {
    std::vector<std::vector<K>> g(s.q(), std::vector<K>(s.q(), s.kappa));
    for (size_t a = 0; a < s.q(); ++a)
        for (size_t b = 0; b < s.q(); ++b)
            g[a][b] = s.kappa + s.entries[a].first * s.entries[b].first;
    return g;
}

// Per-index curvature sums r~_a = (p_a-1)(kappa+mu_a^2)^2
//                                + sum_{b != a} p_b (kappa+mu_a mu_b)^2,
// their weighted total rho = sum p_a r~_a (the squared-norm proxy), and the
// n-scaled residuals R_a = n r~_a - rho. Weakly Einstein iff all R_a = 0;
// sum p_a R_a = 0 identically.
template <class K>
struct ResidualSetT {
    std::vector<K> r_tilde;
    K rho;
    std::vector<K> scaled; // n * r~_a - rho
};

template <class K>
ResidualSetT<K> we_residuals(const SpectrumT<K>& s) {
    ResidualSetT<K> out;
    K zero = s.kappa - s.kappa;
    out.rho = zero;
    for (size_t a = 0; a < s.q(); ++a) {
        const K& mu_a = s.entries[a].first;
        const K& p_a = s.entries[a].second;
        K block = s.kappa + mu_a * mu_a;
        K acc = (p_a - unit_of(s)) * block * block;
        for (size_t b = 0; b < s.q(); ++b) {
            if (b == a) continue;
            K cross = s.kappa + mu_a * s.entries[b].first;
            acc = acc + s.entries[b].second * cross * cross;
        }
        out.r_tilde.push_back(acc);
        out.rho = out.rho + p_a * acc;
    }
    for (size_t a = 0; a < s.q(); ++a) out.scaled.push_back(s.n * out.r_tilde[a] - out.rho);
    return out;
}

// n-scaled coefficients of the common principal-curvature quartic
//   t^4 + (2 kappa - H2) t^2 - 2 kappa n H t + H3,
// H = tr(S)/n, H2 = tr(S^2), H3 = rho/n - (n-1) kappa^2. Returned scaled by
// n: (n, n(2 kappa - H2), -2 kappa n * (nH), rho - n(n-1) kappa^2), so the
// residual of a candidate root t is
//   n_ * t^4 + c2 * t^2 + c1 * t + c0.
template <class K>
struct QuarticT {
    K n_, c2, c1, c0;

    K residual_at(const K& t) const {
        return n_ * t * t * t * t + c2 * t * t + c1 * t + c0;
    }
};

template <class K>
QuarticT<K> quartic_coeffs(const SpectrumT<K>& s) {
    K zero = s.kappa - s.kappa;
    K nH = zero, H2 = zero;
    for (const auto& [mu, p] : s.entries) {
        nH = nH + p * mu;
        H2 = H2 + p * mu * mu;
    }
    K two = unit_of(s) + unit_of(s);
    auto res = we_residuals(s);
    QuarticT<K> q;
    q.n_ = s.n;
    q.c2 = s.n * (two * s.kappa - H2);
    q.c1 = zero - two * s.kappa * s.n * nH;
    q.c0 = res.rho - s.n * (s.n - unit_of(s)) * s.kappa * s.kappa;
    return q;
}

// Ricci eigenvalues Ric_a = (n-1) kappa + mu_a (nH - mu_a), n-scaled
// Einstein residuals n Ric_a - sum p_b Ric_b, scalar curvature
// n(n-1) kappa + (nH)^2 - H2, and the n-scaled traceless shape norm
// n |S - H id|^2 = n H2 - (nH)^2.
template <class K>
struct EinsteinDataT {
    std::vector<K> ricci;
    std::vector<K> scaled_residuals;
    K scalar_curvature;
    K traceless_norm_scaled;
};

template <class K>
EinsteinDataT<K> einstein_data(const SpectrumT<K>& s) {
    K zero = s.kappa - s.kappa;
    K nH = zero, H2 = zero;
    for (const auto& [mu, p] : s.entries) {
        nH = nH + p * mu;
        H2 = H2 + p * mu * mu;
    }
    EinsteinDataT<K> out;
    K trace = zero;
    for (const auto& [mu, p] : s.entries) {
        K ric = (s.n - unit_of(s)) * s.kappa + mu * (nH - mu);
        out.ricci.push_back(ric);
        trace = trace + p * ric;
    }
    for (const auto& r : out.ricci) out.scaled_residuals.push_back(s.n * r - trace);
    out.scalar_curvature = s.n * (s.n - unit_of(s)) * s.kappa + nH * nH - H2;
    out.traceless_norm_scaled = s.n * H2 - nH * nH;
    return out;
}

// --- numeric conveniences ---------------------------------------------

struct NumResidualReport {
    double max_we_residual = 0;     // max |r~_a - rho/n| / scale
    double max_quartic_residual = 0; // max quartic residual at mu_a / scale
    double max_einstein_residual = 0;
    double rho_over_n = 0;
    bool weakly_einstein(double tol) const { return max_we_residual < tol; }
};

NumResidualReport numeric_report(const NumSpectrum& s);

// Cluster a raw principal-curvature list into a spectrum (values within
// `separation` join one cluster).
NumSpectrum cluster_spectrum(double kappa, const std::vector<double>& raw, double separation);

// Obstruction witness behind "at most 4 distinct curvatures": for q = 5, the
// scaled residuals satisfy  sum_a R_a / prod_{b != a}(mu_a - mu_b)  =  -n
// identically, so they cannot all vanish. Returns the left side minus the
// right side (must be the zero rational function).
RatFunc five_spectrum_obstruction(const SymSpectrum& s);

// JSON fixture format: {"kappa": ..., "entries": [{"mu": ..., "p": ...}]}.
// Numeric fixtures take floats; symbolic ones take integers or expressions
// over the supplied table. n is derived as the multiplicity sum.
NumSpectrum num_spectrum_from_json(const std::string& text);
SymSpectrum sym_spectrum_from_json(const std::string& text, const VarTablePtr& tab);

} // namespace weh
