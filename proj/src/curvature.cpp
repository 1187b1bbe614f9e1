#include "weh/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "weh/poly_io.hpp"

namespace weh {

NumSpectrum num_spectrum_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    NumSpectrum s;
    s.kappa = j.at("kappa").get<double>();
    s.n = 0;
    for (const auto& e : j.at("entries")) {
        double mu = e.at("mu").get<double>();
        double p = e.at("p").get<double>();
        s.entries.push_back({mu, p});
        s.n += p;
    }
    return s;
}

SymSpectrum sym_spectrum_from_json(const std::string& text, const VarTablePtr& tab) {
    auto j = nlohmann::json::parse(text);
    SymSpectrum s;
    auto as_poly = [&](const nlohmann::json& v) {
        if (v.is_number_integer()) return Poly::constant(tab, v.get<long>());
        if (v.is_string()) return parse_poly(tab, v.get<std::string>());
        throw usage_error("symbolic spectrum fields must be integers or expressions");
    };
    s.kappa = as_poly(j.at("kappa"));
    s.n = Poly::zero(tab);
    for (const auto& e : j.at("entries")) {
        Poly mu = as_poly(e.at("mu"));
        Poly p = as_poly(e.at("p"));
        s.entries.push_back({mu, p});
        s.n += p;
    }
    return s;
}

NumResidualReport numeric_report(const NumSpectrum& s) {
    NumResidualReport rep;
    auto res = we_residuals(s);
    rep.rho_over_n = res.rho / s.n;
    double scale = std::max(1.0, std::abs(rep.rho_over_n));
    for (size_t a = 0; a < s.q(); ++a)
        rep.max_we_residual =
            std::max(rep.max_we_residual, std::abs(res.r_tilde[a] - rep.rho_over_n) / scale);
    auto q = quartic_coeffs(s);
    for (const auto& [mu, p] : s.entries) {
        double qr = q.residual_at(mu) / s.n;
        double qscale = std::max(1.0, std::abs(mu * mu * mu * mu));
        rep.max_quartic_residual = std::max(rep.max_quartic_residual, std::abs(qr) / qscale);
    }
    auto e = einstein_data(s);
    double escale = std::max(1.0, std::abs(e.scalar_curvature / s.n));
    for (const auto& r : e.scaled_residuals)
        rep.max_einstein_residual = std::max(rep.max_einstein_residual, std::abs(r / (s.n * s.n)) / escale);
    return rep;
}

NumSpectrum cluster_spectrum(double kappa, const std::vector<double>& raw, double separation) {
    NumSpectrum s;
    s.kappa = kappa;
    s.n = static_cast<double>(raw.size());
    std::vector<double> sorted = raw;
    std::sort(sorted.begin(), sorted.end());
    size_t i = 0;
    while (i < sorted.size()) {
        size_t j = i;
        double sum = 0;
        while (j < sorted.size() && sorted[j] - sorted[i] < separation) sum += sorted[j++];
        s.entries.push_back({sum / static_cast<double>(j - i), static_cast<double>(j - i)});
        i = j;
    }
    return s;
}

RatFunc five_spectrum_obstruction(const SymSpectrum& s) {
    if (s.q() < 5) throw usage_error("obstruction witness needs at least 5 distinct curvatures");
    const auto& tab = s.kappa.table();
    auto res = we_residuals(s);
    RatFunc sum = RatFunc::zero(tab);
    for (size_t a = 0; a < s.q(); ++a) {
        RatFunc term(res.scaled[a]);
        for (size_t b = 0; b < s.q(); ++b) {
            if (b == a) continue;
            term = term.divided_by(s.entries[a].first - s.entries[b].first, 1);
        }
        sum += term;
    }
    return sum + RatFunc(s.n);
}

} // namespace weh
