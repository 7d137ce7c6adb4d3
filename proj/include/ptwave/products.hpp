#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "ptwave/spectral_field.hpp"

namespace ptwave {

/// Padded grid size used for an alias-free product of total degree q: the
/// smallest even M holding all qN/2 product modes on both sides of the
/// spectrum, i.e. M = qN (even because N is). The product is then exact in
/// the padded basis and only truncated afterwards.
inline int dealias_size(int n_modes, int degree) {
    int m = degree * n_modes;
    if (m % 2 != 0)
        ++m;
    return m;
}

namespace detail {

// Spectrum of `field` embedded into an M-slot DFT-order array. The source
// Nyquist coefficient is split across modes +-N/2 so the padded interpolant
// is real-valued between the source nodes.
inline std::vector<std::complex<double>> padded_spectrum(const SpectralField& field, int m_pad) {
    const int N = field.n_modes();
    std::vector<std::complex<double>> out(static_cast<std::size_t>(m_pad));
    for (int n = -N / 2 + 1; n < N / 2; ++n) {
        const std::size_t slot = static_cast<std::size_t>(n >= 0 ? n : n + m_pad);
        out[slot] = field.coeff(n);
    }
    const std::complex<double> half = 0.5 * field.coeff(-N / 2);
    out[static_cast<std::size_t>(m_pad - N / 2)] = half;
    out[static_cast<std::size_t>(N / 2)] = std::conj(half);
    return out;
}

// Node values of `field` on the M-point refinement of its interval.
inline std::vector<double> padded_values(const SpectralField& field, int m_pad) {
    auto z = padded_spectrum(field, m_pad);
    for (std::size_t m = 1; m < z.size(); m += 2)
        z[m] = -z[m];
    dft_inplace(z, FFTW_BACKWARD);
    std::vector<double> values(z.size());
    for (std::size_t j = 0; j < z.size(); ++j)
        values[j] = z[j].real();
    return values;
}

// Forward transform of M padded node values truncated to the N-mode band.
// Padded modes +-N/2 both alias onto the retained Nyquist slot.
inline SpectralField project_to_band(std::vector<std::complex<double>> z, GridPtr grid) {
    const int m_pad = static_cast<int>(z.size());
    const int N = grid->n_modes();
    dft_inplace(z, FFTW_FORWARD);
    const double inv_m = 1.0 / m_pad;
    auto pick = [&](int n) {
        const std::size_t slot = static_cast<std::size_t>(n >= 0 ? n : n + m_pad);
        const double sign = (slot % 2 == 0) ? 1.0 : -1.0;
        return z[slot] * (sign * inv_m);
    };
    SpectralField out(std::move(grid));
    for (int n = -N / 2 + 1; n < N / 2; ++n)
        out.set_coeff(n, pick(n));
    out.set_coeff(-N / 2, pick(-N / 2) + pick(N / 2));
    out.symmetrize();
    return out;
}

inline SpectralField project_to_band(std::span<const double> values, GridPtr grid) {
    std::vector<std::complex<double>> z(values.begin(), values.end());
    return project_to_band(std::move(z), std::move(grid));
}

} // namespace detail

/// Alias-free pointwise product of `degree` fields (2 <= degree <= 6), all on
/// one grid, computed on the zero-padded grid and truncated back to N modes.
inline SpectralField dealiased_product(std::span<const SpectralField> fields, int degree) {
    if (degree < 2 || degree > 6)
        throw argument_error("dealiased_product: degree must be in [2, 6]");
    if (static_cast<int>(fields.size()) != degree)
        throw config_error("dealiased_product: number of fields must equal degree");
    const GridPtr& grid = fields.front().grid();
    for (const auto& f : fields)
        if (!f.grid()->same_as(*grid))
            throw config_error("dealiased_product: grid mismatch");

    const int m_pad = dealias_size(grid->n_modes(), degree);
    std::vector<double> prod = detail::padded_values(fields.front(), m_pad);
    for (std::size_t i = 1; i < fields.size(); ++i) {
        const auto vals = detail::padded_values(fields[i], m_pad);
        for (std::size_t j = 0; j < prod.size(); ++j)
            prod[j] *= vals[j];
    }
    return detail::project_to_band(std::span<const double>(prod), grid);
}

/// Alias-free `degree`-th power of a field.
inline SpectralField dealiased_power(const SpectralField& field, int degree) {
    if (degree < 2 || degree > 6)
        throw argument_error("dealiased_power: degree must be in [2, 6]");
    const int m_pad = dealias_size(field.n_modes(), degree);
    auto vals = detail::padded_values(field, m_pad);
    for (auto& v : vals)
        v = std::pow(v, degree);
    return detail::project_to_band(std::span<const double>(vals), field.grid());
}

/// Re(sum_n a_n conj(b_n)) over the coefficient arrays; the bare sum with no
/// measure factor, real part taken against roundoff.
inline double inner_product(const SpectralField& a, const SpectralField& b) {
    if (!a.same_grid(b))
        throw config_error("inner_product: grid mismatch");
    auto pa = a.raw();
    auto pb = b.raw();
    double acc = 0.0;
    for (std::size_t m = 0; m < pa.size(); ++m)
        acc += pa[m].real() * pb[m].real() + pa[m].imag() * pb[m].imag();
    return acc;
}

} // namespace ptwave
