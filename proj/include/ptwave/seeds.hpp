#pragma once

#include <cmath>
#include <vector>

#include "ptwave/constant_shift.hpp"
#include "ptwave/spectral_field.hpp"

namespace ptwave {

enum class SeedKind { Sech2, Cosine, Gaussian, Stokes };

/// Initial iterate sampled on the grid: a sech^2(kappa x), a cos(pi x / l),
/// or a exp(-(kappa x)^2).
inline SpectralField seed_profile(const GridPtr& grid, SeedKind kind, double amplitude,
                                  double kappa) {
    const int n = grid->n_modes();
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double x = grid->node(j);
        double val = 0.0;
        switch (kind) {
        case SeedKind::Sech2: {
            const double c = std::cosh(kappa * x);
            val = amplitude / (c * c);
            break;
        }
        case SeedKind::Cosine:
            val = amplitude * std::cos(PeriodicGrid::pi() * x / grid->half_length());
            break;
        case SeedKind::Gaussian:
            val = amplitude * std::exp(-(kappa * x) * (kappa * x));
            break;
        case SeedKind::Stokes:
            throw argument_error("seed_profile: the Stokes seed needs a shifted problem");
        }
        v[static_cast<std::size_t>(j)] = val;
    }
    return forward_transform(v, grid);
}

/// Second-order Stokes seed for sign-indefinite shifted operators: a carrier
/// cosine at the grid mode nearest the resonance of c_s + alpha(k) - f'(C),
/// plus the induced mean and second harmonic. The carrier amplitude comes
/// from the bifurcation balance den(k)/2 = a^2 X(k) with
/// X(k) = b2^2/(2 den(0)) + b2^2/(4 den(2k)) + 3 b3/8,
/// and `amplitude_scale` multiplies it (1 = the balance value).
inline SpectralField stokes_seed(const ShiftedProblem& sp, const GridPtr& grid,
                                 int carrier_mode = 0, double amplitude_scale = 1.0) {
    auto den = [&](double k) {
        return sp.c_s + sp.model.dispersion.symbol(k) - sp.linear_shift;
    };
    auto balance = [&](int n) -> double { // a^2 for carrier n, or -1 if invalid
        const double k = grid->wavenumber(n);
        const double b2 = sp.b(2);
        const double b3 = sp.degree() >= 4 ? sp.b(3) : 0.0;
        if (std::abs(den(0.0)) < 1e-12 || std::abs(den(2.0 * k)) < 1e-12)
            return -1.0;
        const double x = b2 * b2 / (2.0 * den(0.0)) + b2 * b2 / (4.0 * den(2.0 * k)) +
                         3.0 * b3 / 8.0;
        if (std::abs(x) < 1e-14)
            return -1.0;
        const double a2 = den(k) / (2.0 * x);
        return a2 > 0.0 ? a2 : -1.0;
    };

    int carrier = carrier_mode;
    if (carrier == 0) {
        // First sign change of den along the grid modes; of the two adjacent
        // candidates keep the one with a real bifurcation amplitude.
        int change = 0;
        for (int n = 1; n < grid->n_modes() / 2 - 1; ++n)
            if (den(grid->wavenumber(n)) * den(grid->wavenumber(n + 1)) < 0.0) {
                change = n;
                break;
            }
        if (change == 0)
            throw argument_error("stokes_seed: denominator is sign-definite on the grid");
        carrier = balance(change) > 0.0 ? change : change + 1;
    }
    const double a2 = balance(carrier);
    if (a2 <= 0.0)
        throw argument_error("stokes_seed: no real carrier amplitude at the requested mode");

    const double k = grid->wavenumber(carrier);
    const double a = amplitude_scale * std::sqrt(a2);
    const double mean = sp.b(2) * a * a / (2.0 * den(0.0));
    const double second = sp.b(2) * a * a / (2.0 * den(2.0 * k));
    std::vector<double> v(static_cast<std::size_t>(grid->n_modes()));
    for (int j = 0; j < grid->n_modes(); ++j) {
        const double x = grid->node(j);
        v[static_cast<std::size_t>(j)] =
            a * std::cos(k * x) + mean + second * std::cos(2.0 * k * x);
    }
    return forward_transform(v, grid);
}

} // namespace ptwave
