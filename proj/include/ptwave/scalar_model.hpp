#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "ptwave/multiplier.hpp"
#include "ptwave/nonlinearity.hpp"

namespace ptwave {

/// Scalar model u_t - L u_x + f(u)_x = 0: polynomial nonlinearity plus a
/// dispersion symbol alpha(xi), even with alpha(0) = 0 (checked on samples).
/// `dispersion_exponents` carries the declared power-law behavior (s_tilde
/// near 0, s at infinity) for the hypothesis checker; `power_law_exponent`
/// is set when the symbol is exactly |xi|^mu.
struct ScalarModel {
    PolynomialNonlinearity nonlinearity;
    FourierMultiplier dispersion;
    std::optional<std::pair<double, double>> dispersion_exponents;
    std::optional<double> power_law_exponent;

    ScalarModel(PolynomialNonlinearity nl, FourierMultiplier disp,
                std::optional<std::pair<double, double>> exponents = std::nullopt,
                std::optional<double> power_law = std::nullopt)
        : nonlinearity(std::move(nl)), dispersion(std::move(disp)),
          dispersion_exponents(exponents), power_law_exponent(power_law) {
        static constexpr double probes[] = {0.3, 1.0, 2.7, 10.0, 123.0};
        if (std::abs(dispersion.symbol(0.0)) > 1e-12)
            throw argument_error("ScalarModel: dispersion symbol must vanish at 0");
        for (double xi : probes) {
            const double a = dispersion.symbol(xi);
            const double b = dispersion.symbol(-xi);
            if (!std::isfinite(a) || std::abs(a - b) > 1e-12 * (1.0 + std::abs(a)))
                throw argument_error("ScalarModel: dispersion symbol must be even and finite");
        }
    }
};

/// Fractional KdV: alpha(xi) = |xi|^mu with 0 < mu <= 2 and f(u) = u^{p-1}/(p-1),
/// i.e. the single coefficient gamma_p = 1/(p(p-1)).
inline ScalarModel fkdv_model(double mu, int p) {
    if (!(mu > 0.0) || mu > 2.0)
        throw argument_error("fkdv_model: mu must lie in (0, 2]");
    if (p < 3)
        throw argument_error("fkdv_model: p must be >= 3");
    std::vector<double> gammas(static_cast<std::size_t>(p - 2), 0.0);
    gammas.back() = 1.0 / (static_cast<double>(p) * (p - 1));
    FourierMultiplier disp{[mu](double xi) { return std::pow(std::abs(xi), mu); },
                           "|xi|^" + std::to_string(mu)};
    return ScalarModel(PolynomialNonlinearity(p, gammas), std::move(disp),
                       std::make_pair(mu / 2.0, mu / 2.0), mu);
}

enum class HypothesisStatus { Pass, Fail, HeuristicPass, HeuristicFail, Inconclusive };

struct HypothesisReport {
    HypothesisStatus h2 = HypothesisStatus::Inconclusive;
    HypothesisStatus h3 = HypothesisStatus::Inconclusive;
    // Binding inequality sides: h2 needs left > right, h3 needs left >= right.
    double h2_left = 0.0, h2_right = 0.0;
    double h3_left = 0.0, h3_right = 0.0;
    // Sampled ratio spread for the heuristic path.
    double ratio_min = 0.0, ratio_max = 0.0;
    std::string note;

    bool conclusive() const {
        return h2 != HypothesisStatus::Inconclusive && h3 != HypothesisStatus::Inconclusive;
    }
};

/// Checks (H2)-(H3). Power-law symbols get the exact inequalities
/// mu/2 > (p0-2)/4 and mu/2 >= (p-2)/4; other symbols are sampled on
/// xi in [1e2, 1e6] against the declared exponent s, a heuristic flag only.
inline HypothesisReport check_hypotheses(const ScalarModel& model) {
    HypothesisReport rep;
    const int p = model.nonlinearity.degree();
    const int p0 = model.nonlinearity.lowest_degree();
    rep.h2_right = (p0 - 2) / 4.0;
    rep.h3_right = (p - 2) / 4.0;

    if (model.power_law_exponent) {
        const double mu = *model.power_law_exponent;
        rep.h2_left = mu / 2.0;
        rep.h3_left = mu / 2.0;
        rep.h2 = rep.h2_left > rep.h2_right ? HypothesisStatus::Pass : HypothesisStatus::Fail;
        rep.h3 = rep.h3_left >= rep.h3_right ? HypothesisStatus::Pass : HypothesisStatus::Fail;
        rep.note = "power-law symbol, exact inequalities";
        return rep;
    }

    if (!model.dispersion_exponents) {
        rep.note = "no exponent metadata for non-power-law symbol";
        return rep;
    }

    const auto [s_tilde, s] = *model.dispersion_exponents;
    rep.h2_left = s_tilde;
    rep.h2_right = (p0 - 2) / 4.0;
    rep.h3_left = s;
    rep.h3_right = (p - 2) / 4.0;

    // H2: alpha(xi)/|xi|^{2 s_tilde} -> 0 as xi -> 0, sampled on a decade sweep.
    bool h2_sizes_ok = s_tilde >= rep.h2_right;
    double first = 0.0, last = 0.0;
    for (int i = 0; i <= 24; ++i) {
        const double xi = std::pow(10.0, -6.0 + 4.0 * i / 24.0);
        const double ratio = std::abs(model.dispersion.symbol(xi)) / std::pow(xi, 2.0 * s_tilde);
        if (i == 0)
            first = ratio;
        last = ratio;
    }
    const bool vanishing = first < 0.1 * std::max(last, 1e-300) || (first == 0.0 && last == 0.0);
    rep.h2 = (h2_sizes_ok && vanishing) ? HypothesisStatus::HeuristicPass
                                        : HypothesisStatus::HeuristicFail;

    // H3: alpha(xi)/|xi|^{2s} bounded away from 0 and infinity at infinity.
    double rmin = std::numeric_limits<double>::infinity();
    double rmax = 0.0;
    for (int i = 0; i <= 24; ++i) {
        const double xi = std::pow(10.0, 2.0 + 4.0 * i / 24.0);
        const double ratio = model.dispersion.symbol(xi) / std::pow(xi, 2.0 * s);
        rmin = std::min(rmin, ratio);
        rmax = std::max(rmax, ratio);
    }
    rep.ratio_min = rmin;
    rep.ratio_max = rmax;
    const bool bounded = rmin > 0.0 && std::isfinite(rmax) && rmax / rmin < 100.0;
    rep.h3 = (s >= rep.h3_right && bounded) ? HypothesisStatus::HeuristicPass
                                            : HypothesisStatus::HeuristicFail;
    rep.note = "sampled heuristic, not a proof";
    return rep;
}

/// p_max = 2/(1-mu) for mu < 1, +infinity for mu >= 1 (existence range).
inline double fkdv_p_max(double mu) {
    if (!(mu > 0.0) || mu > 2.0)
        throw argument_error("fkdv_p_max: mu must lie in (0, 2]");
    if (mu >= 1.0)
        return std::numeric_limits<double>::infinity();
    return 2.0 / (1.0 - mu);
}

/// p*(mu) = ((3+mu) 2^mu - 2 mu + (mu-1) 2^{mu+1}) / (2 + (mu-1) 2^mu).
inline double fkdv_p_star(double mu) {
    const double two_mu = std::pow(2.0, mu);
    const double num = (3.0 + mu) * two_mu - 2.0 * mu + (mu - 1.0) * 2.0 * two_mu;
    const double den = 2.0 + (mu - 1.0) * two_mu;
    return num / den;
}

enum class StabilityClass { Stable, Unstable, OutsideTheory };

/// Spectral stability of fKdV periodic traveling waves: stable for mu > 1 and
/// 1 <= p < p*(mu), unstable for 1/2 < mu < 1 or mu > 1 with p > p*(mu).
/// Boundaries and mu <= 1/2 are outside the stated theory.
inline StabilityClass fkdv_stability(double mu, double p) {
    if (!(mu > 0.5))
        return StabilityClass::OutsideTheory;
    if (mu < 1.0)
        return StabilityClass::Unstable;
    if (mu == 1.0)
        return StabilityClass::OutsideTheory;
    if (p < 1.0)
        return StabilityClass::OutsideTheory;
    const double ps = fkdv_p_star(mu);
    const double tol = 1e-12 * (1.0 + std::abs(ps));
    if (p < ps - tol)
        return StabilityClass::Stable;
    if (p > ps + tol)
        return StabilityClass::Unstable;
    return StabilityClass::OutsideTheory;
}

} // namespace ptwave
