#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "ptwave/products.hpp"
#include "ptwave/roots.hpp"
#include "ptwave/scalar_model.hpp"

namespace ptwave {

/// A real constant solution C of -c_s C + f(C) = A.
struct ConstantBranch {
    double C;
    double residual;
    int multiplicity_hint;
};

/// Coefficients of P(z) = -A - c_s z + 3 g3 z^2 + ... + p gp z^{p-1}, ascending.
inline std::vector<double> constant_polynomial(const ScalarModel& model, double c_s, double A) {
    const int p = model.nonlinearity.degree();
    std::vector<double> c(static_cast<std::size_t>(p), 0.0);
    c[0] = -A;
    c[1] = -c_s;
    for (int j = 3; j <= p; ++j)
        c[static_cast<std::size_t>(j - 1)] += j * model.nonlinearity.gamma(j);
    return c;
}

/// Step (S1): all real constant branches, sorted by |C| ascending. An empty
/// list is a valid outcome (real roots need parameter relations).
inline std::vector<ConstantBranch> find_constants(const ScalarModel& model, double c_s, double A) {
    if (!(c_s > 0.0))
        throw argument_error("find_constants: c_s must be positive");
    const auto poly = constant_polynomial(model, c_s, A);
    double scale = 0.0;
    for (double c : poly)
        scale = std::max(scale, std::abs(c));

    auto roots = real_polynomial_roots(poly);
    std::vector<ConstantBranch> out;
    out.reserve(roots.size());
    for (const auto& r : roots)
        out.push_back({r.value, r.residual, r.multiplicity_hint});
    std::sort(out.begin(), out.end(), [](const ConstantBranch& a, const ConstantBranch& b) {
        return std::abs(a.C) < std::abs(b.C);
    });
    for (const auto& b : out)
        if (b.residual > 1e-10 * std::max(1.0, scale))
            throw consistency_error("find_constants: root refinement failed tolerance");
    return out;
}

/// Step (S2) output: the shifted problem L~(C) phi = N(phi) with
/// L~(C) = c_s + L - f'(C) and N(phi) = sum_{j=2}^{p-1} b_j phi^j,
/// b_j = f^{(j)}(C)/j!.
struct ShiftedProblem {
    ScalarModel model;
    double c_s;
    double C;
    double A;
    double linear_shift;             // f'(C)
    std::vector<double> term_coeffs; // b_j at index j, j = 2..p-1

    int degree() const { return model.nonlinearity.degree(); }
    double b(int j) const { return term_coeffs[static_cast<std::size_t>(j)]; }

    /// c_s + alpha(n pi / l) - f'(C) per storage slot.
    std::vector<double> denominators(const PeriodicGrid& grid) const {
        const int N = grid.n_modes();
        std::vector<double> den(static_cast<std::size_t>(N));
        for (int m = 0; m < N; ++m) {
            const int n = m < N / 2 ? m : m - N;
            const double a = model.dispersion.symbol(grid.wavenumber(n));
            if (!std::isfinite(a))
                throw operator_error("ShiftedProblem: dispersion symbol not finite on grid");
            den[static_cast<std::size_t>(m)] = c_s + a - linear_shift;
        }
        return den;
    }

    double min_abs_denominator(const PeriodicGrid& grid) const {
        const auto den = denominators(grid);
        double m = std::abs(den[0]);
        for (double d : den)
            m = std::min(m, std::abs(d));
        return m;
    }
};

inline ShiftedProblem build_shifted(const ScalarModel& model, double c_s, double A,
                                    const ConstantBranch& branch) {
    const auto poly = constant_polynomial(model, c_s, A);
    double scale = 0.0;
    for (double c : poly)
        scale = std::max(scale, std::abs(c));
    if (std::abs(detail::horner(poly, branch.C)) > 1e-8 * std::max(1.0, scale))
        throw argument_error("build_shifted: branch does not solve the constant equation");

    const int p = model.nonlinearity.degree();
    ShiftedProblem sp{model, c_s, branch.C, A, model.nonlinearity.derivative_at(1, branch.C),
                      std::vector<double>(static_cast<std::size_t>(p), 0.0)};
    double factorial = 1.0;
    for (int j = 2; j <= p - 1; ++j) {
        factorial *= j;
        sp.term_coeffs[static_cast<std::size_t>(j)] =
            model.nonlinearity.derivative_at(j, branch.C) / factorial;
    }
    if (sp.term_coeffs[static_cast<std::size_t>(p - 1)] == 0.0)
        throw consistency_error("build_shifted: top shifted coefficient vanished");
    return sp;
}

/// N(phi) split by degree: index j holds b_j phi^j (zero coefficients skipped,
/// fields left empty). Products are dealiased at their own degree.
inline std::vector<SpectralField> nonlinear_terms_by_degree(const ShiftedProblem& sp,
                                                            const SpectralField& u) {
    const int p = sp.degree();
    std::vector<SpectralField> terms;
    terms.reserve(static_cast<std::size_t>(p));
    for (int j = 0; j <= p - 1; ++j)
        terms.emplace_back(u.grid());
    const int m_pad = dealias_size(u.n_modes(), p - 1);
    const auto vals = detail::padded_values(u, m_pad);
    std::vector<double> powed(vals.size());
    for (int j = 2; j <= p - 1; ++j) {
        const double bj = sp.b(j);
        if (bj == 0.0)
            continue;
        for (std::size_t i = 0; i < vals.size(); ++i)
            powed[i] = bj * std::pow(vals[i], j);
        terms[static_cast<std::size_t>(j)] =
            detail::project_to_band(std::span<const double>(powed), u.grid());
    }
    return terms;
}

inline SpectralField nonlinear_term(const ShiftedProblem& sp, const SpectralField& u) {
    auto terms = nonlinear_terms_by_degree(sp, u);
    SpectralField sum(u.grid());
    for (int j = 2; j <= sp.degree() - 1; ++j)
        sum += terms[static_cast<std::size_t>(j)];
    return sum;
}

/// L~(C) u in coefficient space.
inline SpectralField shifted_linear_apply(const ShiftedProblem& sp, const SpectralField& u) {
    const auto den = sp.denominators(*u.grid());
    SpectralField out(u.grid());
    auto src = u.raw();
    auto dst = out.raw();
    for (std::size_t m = 0; m < src.size(); ++m)
        dst[m] = den[m] * src[m];
    return out;
}

/// Grid residuals of the full profile equation at phi = psi + C and of the
/// shifted equation at psi. The two Euclidean norms agree up to the branch
/// residual: |r1 - r2| <= 1e-9 (1 + r1).
inline std::pair<double, double> shift_equivalence_residual(const ShiftedProblem& sp,
                                                            const SpectralField& psi) {
    const auto psi_vals = inverse_transform(psi);
    const auto l_psi = inverse_transform(apply_multiplier(sp.model.dispersion, psi));

    double r1 = 0.0, r2 = 0.0;
    for (std::size_t j = 0; j < psi_vals.size(); ++j) {
        const double phi = psi_vals[j] + sp.C;
        const double g = -sp.c_s * phi - l_psi[j] + sp.model.nonlinearity.evaluate(phi) - sp.A;
        double npsi = 0.0;
        for (int d = 2; d <= sp.degree() - 1; ++d)
            npsi += sp.b(d) * std::pow(psi_vals[j], d);
        const double t = sp.c_s * psi_vals[j] + l_psi[j] - sp.linear_shift * psi_vals[j] - npsi;
        r1 += g * g;
        r2 += t * t;
    }
    return {std::sqrt(r1), std::sqrt(r2)};
}

} // namespace ptwave
