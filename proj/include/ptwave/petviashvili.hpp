#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ptwave/constant_shift.hpp"
#include "ptwave/mpe.hpp"

namespace ptwave {

struct IterationSettings {
    int max_iter = 500;
    double tol_res = 1e-12;
    double tol_sfe = 1e-12;
    double divergence_cap = 1e8; // on the coefficient norm of the iterate

    void validate() const {
        if (max_iter < 1)
            throw argument_error("IterationSettings: max_iter must be >= 1");
        if (!(tol_res > 0.0) || !(tol_sfe > 0.0))
            throw argument_error("IterationSettings: tolerances must be positive");
        if (!(divergence_cap > 0.0))
            throw argument_error("IterationSettings: divergence_cap must be positive");
    }
};

enum class Outcome { Converged, MaxIter, Diverged, SingularDenominator, SignBreakdown };

inline const char* outcome_name(Outcome o) {
    switch (o) {
    case Outcome::Converged: return "converged";
    case Outcome::MaxIter: return "max-iter";
    case Outcome::Diverged: return "diverged";
    case Outcome::SingularDenominator: return "singular-denominator";
    case Outcome::SignBreakdown: return "sign-breakdown";
    }
    return "unknown";
}

struct TraceRow {
    int iter;
    double res; // RES_nu, Euclidean norm over Fourier coefficients
    double sfe; // |s_nu - 1|
    double s;
};

struct IterationTrace {
    std::vector<TraceRow> rows;
    Outcome outcome = Outcome::MaxIter;

    int iterations() const { return static_cast<int>(rows.size()); }

    double final_res() const { return rows.empty() ? 0.0 : rows.back().res; }
    double final_sfe() const { return rows.empty() ? 0.0 : rows.back().sfe; }

    /// First recorded iteration with res <= threshold, if any.
    std::optional<int> first_below(double res_threshold) const {
        for (const auto& r : rows)
            if (r.res <= res_threshold)
                return r.iter;
        return std::nullopt;
    }

    void write_csv(std::ostream& os) const {
        os << "iter,res,sfe,s\n";
        char buf[128];
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", r.iter, r.res, r.sfe, r.s);
            os << buf;
        }
    }
};

/// Discrepancy of a stabilizing factor from its convergent limit 1.
inline double sfe(double s_value) { return std::abs(s_value - 1.0); }

namespace detail {

struct ScalarEvaluation {
    std::vector<SpectralField> terms; // b_j u^j at index j
    SpectralField nsum;
    double s = 0.0;
    double res = 0.0;
    bool singular = false;       // near-zero <N(u), u>
    bool sign_breakdown = false; // s < 0 with a fractional exponent present

    explicit ScalarEvaluation(const GridPtr& grid) : nsum(grid) {}
};

inline ScalarEvaluation evaluate_scalar(const ShiftedProblem& sp, const std::vector<double>& den,
                                        const SpectralField& u) {
    ScalarEvaluation ev(u.grid());
    ev.terms = nonlinear_terms_by_degree(sp, u);
    for (int j = 2; j <= sp.degree() - 1; ++j)
        ev.nsum += ev.terms[static_cast<std::size_t>(j)];

    auto uc = u.raw();
    double num = 0.0;
    for (std::size_t m = 0; m < uc.size(); ++m)
        num += den[m] * std::norm(uc[m]);
    const double dot = inner_product(ev.nsum, u);
    if (std::abs(dot) < 1e-300) {
        ev.singular = true;
        return ev;
    }
    ev.s = num / dot;

    auto nc = ev.nsum.raw();
    double acc = 0.0;
    for (std::size_t m = 0; m < uc.size(); ++m)
        acc += std::norm(den[m] * uc[m] - nc[m]);
    ev.res = std::sqrt(acc);

    if (ev.s < 0.0)
        for (int j = 3; j <= sp.degree() - 1; ++j)
            if (sp.b(j) != 0.0)
                ev.sign_breakdown = true;
    return ev;
}

inline SpectralField step_from_evaluation(const ShiftedProblem& sp, const std::vector<double>& den,
                                          const ScalarEvaluation& ev, const GridPtr& grid) {
    SpectralField next(grid);
    auto out = next.raw();
    for (int j = 2; j <= sp.degree() - 1; ++j) {
        if (sp.b(j) == 0.0)
            continue;
        const double alpha_j = static_cast<double>(j) / (j - 1);
        const double sj = std::pow(ev.s, alpha_j);
        auto tc = ev.terms[static_cast<std::size_t>(j)].raw();
        for (std::size_t m = 0; m < out.size(); ++m)
            out[m] += sj * tc[m];
    }
    for (std::size_t m = 0; m < out.size(); ++m)
        out[m] /= den[m];
    next.symmetrize();
    return next;
}

inline Eigen::VectorXd flatten(const SpectralField& f) {
    auto c = f.raw();
    Eigen::VectorXd v(2 * static_cast<Eigen::Index>(c.size()));
    for (std::size_t m = 0; m < c.size(); ++m) {
        v(2 * static_cast<Eigen::Index>(m)) = c[m].real();
        v(2 * static_cast<Eigen::Index>(m) + 1) = c[m].imag();
    }
    return v;
}

inline SpectralField unflatten(const Eigen::VectorXd& v, const GridPtr& grid) {
    SpectralField f(grid);
    auto c = f.raw();
    for (std::size_t m = 0; m < c.size(); ++m)
        c[m] = {v(2 * static_cast<Eigen::Index>(m)), v(2 * static_cast<Eigen::Index>(m) + 1)};
    f.symmetrize();
    return f;
}

} // namespace detail

/// s(u) = sum_n (c_s + alpha(n pi/l) - f'(C)) |u_n|^2 / Re sum_n (N(u))_n conj(u_n).
inline double stabilizing_factor(const ShiftedProblem& sp, const SpectralField& u) {
    const auto den = sp.denominators(*u.grid());
    const auto ev = detail::evaluate_scalar(sp, den, u);
    if (ev.singular)
        throw singular_denominator_error("stabilizing_factor: <N(u), u> is (near) zero");
    return ev.s;
}

/// RES = || L~(C) u - N(u) ||, Euclidean over Fourier coefficients.
inline double residual_norm(const ShiftedProblem& sp, const SpectralField& u) {
    const auto lin = shifted_linear_apply(sp, u);
    const auto n = nonlinear_term(sp, u);
    auto lc = lin.raw();
    auto nc = n.raw();
    double acc = 0.0;
    for (std::size_t m = 0; m < lc.size(); ++m)
        acc += std::norm(lc[m] - nc[m]);
    return std::sqrt(acc);
}

/// One extended Petviashvili update,
/// u_n <- sum_j s(u)^{j/(j-1)} (b_j u^j)_n / (c_s + alpha(n pi/l) - f'(C)).
inline SpectralField petviashvili_step(const ShiftedProblem& sp, const SpectralField& u) {
    const auto den = sp.denominators(*u.grid());
    for (double d : den)
        if (std::abs(d) <= 1e-12)
            throw singular_denominator_error("petviashvili_step: near-zero linear denominator");
    const auto ev = detail::evaluate_scalar(sp, den, u);
    if (ev.singular)
        throw singular_denominator_error("petviashvili_step: <N(u), u> is (near) zero");
    if (ev.sign_breakdown)
        throw sign_breakdown_error("petviashvili_step: negative s with fractional exponent");
    return detail::step_from_evaluation(sp, den, ev, u.grid());
}

/// Step (S3): iterate until RES <= tol_res and SFE <= tol_sfe, optionally
/// wrapped in restarted MPE cycles. Returns the final iterate in the shifted
/// variable (the caller adds C back) along with the per-iteration trace.
inline std::pair<SpectralField, IterationTrace> solve(const ShiftedProblem& sp, const GridPtr& grid,
                                                      const SpectralField& u0,
                                                      const IterationSettings& settings,
                                                      const std::optional<MpeConfig>& accel = {}) {
    settings.validate();
    if (accel)
        accel->validate();
    if (!u0.grid()->same_as(*grid))
        throw config_error("solve: initial iterate grid mismatch");
    if (u0.is_zero())
        throw argument_error("solve: initial iterate must be nonzero");

    IterationTrace trace;
    SpectralField u = u0;
    u.symmetrize();

    const auto den = sp.denominators(*grid);
    double dmin = std::abs(den[0]);
    for (double d : den)
        dmin = std::min(dmin, std::abs(d));
    if (dmin <= 1e-12) {
        trace.outcome = Outcome::SingularDenominator;
        return {std::move(u), std::move(trace)};
    }

    auto ev = detail::evaluate_scalar(sp, den, u);
    auto bad = [&](const detail::ScalarEvaluation& e) -> std::optional<Outcome> {
        if (e.singular)
            return Outcome::SingularDenominator;
        if (e.sign_breakdown)
            return Outcome::SignBreakdown;
        return std::nullopt;
    };
    if (auto o = bad(ev)) {
        trace.outcome = *o;
        return {std::move(u), std::move(trace)};
    }

    std::vector<Eigen::VectorXd> cycle;
    if (accel)
        cycle.push_back(detail::flatten(u));

    int iter = 0;
    auto record = [&](const detail::ScalarEvaluation& e) {
        trace.rows.push_back({iter, e.res, sfe(e.s), e.s});
    };
    auto converged = [&](const detail::ScalarEvaluation& e) {
        return e.res <= settings.tol_res && sfe(e.s) <= settings.tol_sfe;
    };

    while (iter < settings.max_iter) {
        SpectralField next = detail::step_from_evaluation(sp, den, ev, grid);
        if (next.coeff_norm() > settings.divergence_cap) {
            trace.outcome = Outcome::Diverged;
            return {std::move(u), std::move(trace)};
        }
        auto ev_next = detail::evaluate_scalar(sp, den, next);
        if (auto o = bad(ev_next)) {
            trace.outcome = *o;
            return {std::move(next), std::move(trace)};
        }
        ++iter;
        u = std::move(next);
        ev = std::move(ev_next);
        record(ev);
        if (converged(ev)) {
            trace.outcome = Outcome::Converged;
            return {std::move(u), std::move(trace)};
        }

        if (accel) {
            cycle.push_back(detail::flatten(u));
            if (static_cast<int>(cycle.size()) == accel->cycle_width + 2 &&
                iter < settings.max_iter) {
                Eigen::VectorXd cand = mpe_extrapolate(cycle, accel->ls_tolerance);
                SpectralField cf = detail::unflatten(cand, grid);
                auto ev_cand = detail::evaluate_scalar(sp, den, cf);
                if (!ev_cand.singular && !ev_cand.sign_breakdown && ev_cand.res <= ev.res &&
                    cf.coeff_norm() <= settings.divergence_cap) {
                    ++iter;
                    u = std::move(cf);
                    ev = std::move(ev_cand);
                    record(ev);
                    if (converged(ev)) {
                        trace.outcome = Outcome::Converged;
                        return {std::move(u), std::move(trace)};
                    }
                }
                cycle.clear();
                cycle.push_back(detail::flatten(u));
            }
        }
    }
    trace.outcome = Outcome::MaxIter;
    return {std::move(u), std::move(trace)};
}

} // namespace ptwave
