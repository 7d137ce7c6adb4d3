#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <utility>

#include "ptwave/spectral_field.hpp"

namespace ptwave {

/// Fourier multiplier operator with a real, even symbol of the wavenumber.
struct FourierMultiplier {
    std::function<double(double)> symbol;
    std::string label;

    double operator()(double xi) const { return symbol(xi); }
};

/// out coeff(n) = symbol(n pi / l) * coeff(n).
inline SpectralField apply_multiplier(const FourierMultiplier& m, const SpectralField& field) {
    SpectralField out(field.grid());
    auto src = field.raw();
    auto dst = out.raw();
    for (std::size_t k = 0; k < src.size(); ++k) {
        const double xi = field.grid()->wavenumber(field.mode_at(k));
        const double sv = m.symbol(xi);
        if (!std::isfinite(sv))
            throw operator_error("apply_multiplier: symbol '" + m.label +
                                 "' is not finite at a grid wavenumber");
        dst[k] = sv * src[k];
    }
    return out;
}

/// coeff(n) -> i (n pi / l) coeff(n); the Nyquist mode is zeroed so node
/// values stay real under the odd multiplier.
inline SpectralField spectral_derivative(const SpectralField& field) {
    SpectralField out(field.grid());
    auto src = field.raw();
    auto dst = out.raw();
    const int nyquist = field.min_mode();
    for (std::size_t k = 0; k < src.size(); ++k) {
        const int n = field.mode_at(k);
        if (n == nyquist) {
            dst[k] = {0.0, 0.0};
            continue;
        }
        const double kn = field.grid()->wavenumber(n);
        dst[k] = std::complex<double>(0.0, kn) * src[k];
    }
    return out;
}

} // namespace ptwave
