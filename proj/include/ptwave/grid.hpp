#pragma once

#include <cmath>
#include <memory>
#include <vector>

#include "ptwave/errors.hpp"

namespace ptwave {

/// Uniform periodic grid on [-l, l) with N nodes x_j = -l + 2lj/N.
/// Representable Fourier modes are n = -N/2 .. N/2-1 with wavenumber n*pi/l.
class PeriodicGrid {
public:
    static std::shared_ptr<const PeriodicGrid> create(double half_length, int n_modes) {
        return std::shared_ptr<const PeriodicGrid>(new PeriodicGrid(half_length, n_modes));
    }

    double half_length() const { return half_length_; }
    int n_modes() const { return n_modes_; }
    const std::vector<double>& nodes() const { return nodes_; }
    double node(int j) const { return nodes_[static_cast<std::size_t>(j)]; }
    double spacing() const { return 2.0 * half_length_ / n_modes_; }

    int min_mode() const { return -n_modes_ / 2; }
    int max_mode() const { return n_modes_ / 2 - 1; }
    double wavenumber(int n) const { return n * pi() / half_length_; }

    bool same_as(const PeriodicGrid& other) const {
        return half_length_ == other.half_length_ && n_modes_ == other.n_modes_;
    }

    static constexpr double pi() { return 3.14159265358979323846; }

private:
    PeriodicGrid(double half_length, int n_modes)
        : half_length_(half_length), n_modes_(n_modes) {
        if (!(half_length > 0.0) || !std::isfinite(half_length))
            throw argument_error("PeriodicGrid: half_length must be positive and finite");
        if (n_modes < 8 || n_modes % 2 != 0)
            throw argument_error("PeriodicGrid: n_modes must be even and >= 8");
        nodes_.resize(static_cast<std::size_t>(n_modes));
        for (int j = 0; j < n_modes; ++j)
            nodes_[static_cast<std::size_t>(j)] = -half_length + 2.0 * half_length * j / n_modes;
    }

    double half_length_;
    int n_modes_;
    std::vector<double> nodes_;
};

using GridPtr = std::shared_ptr<const PeriodicGrid>;

} // namespace ptwave
