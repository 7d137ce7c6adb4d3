#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "ptwave/errors.hpp"
#include "ptwave/fft.hpp"
#include "ptwave/grid.hpp"

namespace ptwave {

/// Real periodic function stored as conjugate-symmetric Fourier coefficients:
/// v(x) = sum_{n=-N/2}^{N/2-1} coeff(n) e^{i n pi x / l}.
/// Storage is in DFT order: slot m holds mode m for m < N/2 and mode m-N above.
class SpectralField {
public:
    explicit SpectralField(GridPtr grid)
        : grid_(std::move(grid)) {
        if (!grid_)
            throw argument_error("SpectralField: null grid");
        coeffs_.assign(static_cast<std::size_t>(grid_->n_modes()), {0.0, 0.0});
    }

    const GridPtr& grid() const { return grid_; }
    int n_modes() const { return grid_->n_modes(); }
    int min_mode() const { return grid_->min_mode(); }
    int max_mode() const { return grid_->max_mode(); }

    std::complex<double> coeff(int n) const { return coeffs_[slot(n)]; }
    void set_coeff(int n, std::complex<double> v) { coeffs_[slot(n)] = v; }
    void add_coeff(int n, std::complex<double> v) { coeffs_[slot(n)] += v; }

    std::span<const std::complex<double>> raw() const { return coeffs_; }
    std::span<std::complex<double>> raw() { return coeffs_; }

    /// Mode index held by storage slot m.
    int mode_at(std::size_t m) const {
        int n = static_cast<int>(m);
        return n < n_modes() / 2 ? n : n - n_modes();
    }

    bool same_grid(const SpectralField& other) const {
        return grid_->same_as(*other.grid_);
    }

    /// l2 norm of the coefficient vector.
    double coeff_norm() const {
        double s = 0.0;
        for (const auto& c : coeffs_)
            s += std::norm(c);
        return std::sqrt(s);
    }

    double coeff_linf() const {
        double m = 0.0;
        for (const auto& c : coeffs_)
            m = std::max(m, std::abs(c));
        return m;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const std::complex<double>& c) { return c == std::complex<double>{}; });
    }

    /// Largest deviation from conjugate symmetry (absolute).
    double symmetry_error() const {
        const int nh = n_modes() / 2;
        double e = std::abs(coeff(0).imag());
        e = std::max(e, std::abs(coeff(-nh).imag()));
        for (int n = 1; n < nh; ++n)
            e = std::max(e, std::abs(coeff(n) - std::conj(coeff(-n))));
        return e;
    }

    /// Project onto the conjugate-symmetric subspace (realness of node values).
    void symmetrize() {
        const int nh = n_modes() / 2;
        set_coeff(0, {coeff(0).real(), 0.0});
        set_coeff(-nh, {coeff(-nh).real(), 0.0});
        for (int n = 1; n < nh; ++n) {
            const std::complex<double> avg = 0.5 * (coeff(n) + std::conj(coeff(-n)));
            set_coeff(n, avg);
            set_coeff(-n, std::conj(avg));
        }
    }

    SpectralField& operator+=(const SpectralField& o) {
        require_same_grid(o);
        for (std::size_t m = 0; m < coeffs_.size(); ++m)
            coeffs_[m] += o.coeffs_[m];
        return *this;
    }
    SpectralField& operator-=(const SpectralField& o) {
        require_same_grid(o);
        for (std::size_t m = 0; m < coeffs_.size(); ++m)
            coeffs_[m] -= o.coeffs_[m];
        return *this;
    }
    SpectralField& operator*=(double a) {
        for (auto& c : coeffs_)
            c *= a;
        return *this;
    }
    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double a, SpectralField f) { return f *= a; }

private:
    void require_same_grid(const SpectralField& o) const {
        if (!same_grid(o))
            throw config_error("SpectralField: grid mismatch");
    }

    std::size_t slot(int n) const {
        const int N = n_modes();
        if (n < -N / 2 || n >= N / 2)
            throw argument_error("SpectralField: mode index out of range");
        return static_cast<std::size_t>(n >= 0 ? n : n + N);
    }

    GridPtr grid_;
    std::vector<std::complex<double>> coeffs_;
};

/// coeff(n) = (1/N) sum_j values_j e^{-i n pi x_j / l}. With x_j starting at
/// -l this is (-1)^n times the plain DFT, and the slot parity equals the
/// parity of n because N is even.
inline SpectralField forward_transform(std::span<const double> values, GridPtr grid) {
    if (!grid)
        throw argument_error("forward_transform: null grid");
    const int N = grid->n_modes();
    if (static_cast<int>(values.size()) != N)
        throw config_error("forward_transform: length does not match grid.n_modes");

    std::vector<std::complex<double>> z(values.begin(), values.end());
    detail::dft_inplace(z, FFTW_FORWARD);

    SpectralField f(std::move(grid));
    const double inv_n = 1.0 / N;
    auto out = f.raw();
    for (std::size_t m = 0; m < z.size(); ++m) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        out[m] = z[m] * (sign * inv_n);
    }
    f.symmetrize();
    return f;
}

inline SpectralField forward_transform(const std::vector<double>& values, const GridPtr& grid) {
    return forward_transform(std::span<const double>(values), grid);
}

/// Node values sum_n coeff(n) e^{i n pi x_j / l}; the imaginary residue is
/// checked against 1e-10 (scaled by the coefficient magnitude) and dropped.
inline std::vector<double> inverse_transform(const SpectralField& field) {
    const int N = field.n_modes();
    const double scale = std::max(1.0, field.coeff_linf());
    if (field.symmetry_error() > 1e-10 * scale)
        throw consistency_error("inverse_transform: conjugate symmetry violated");

    std::vector<std::complex<double>> z(field.raw().begin(), field.raw().end());
    for (std::size_t m = 0; m < z.size(); ++m)
        if (m % 2 == 1)
            z[m] = -z[m];
    detail::dft_inplace(z, FFTW_BACKWARD);

    std::vector<double> values(static_cast<std::size_t>(N));
    double imag_max = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        values[j] = z[j].real();
        imag_max = std::max(imag_max, std::abs(z[j].imag()));
    }
    if (imag_max > 1e-10 * std::max(1.0, static_cast<double>(N) * scale))
        throw consistency_error("inverse_transform: imaginary residue above tolerance");
    return values;
}

} // namespace ptwave
