#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "ptwave/errors.hpp"

namespace ptwave {

struct RealRoot {
    double value;
    double residual;         // |P(value)|
    int multiplicity_hint;   // cluster size among the accepted real roots
};

namespace detail {

inline std::complex<double> horner(std::span<const double> c, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * z + c[i];
    return acc;
}

inline std::complex<double> horner_derivative(std::span<const double> c, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = c.size(); i-- > 1;)
        acc = acc * z + static_cast<double>(i) * c[i];
    return acc;
}

} // namespace detail

/// Real roots of sum_i coeffs[i] z^i via companion-matrix eigenvalues with
/// Newton polishing. Roots with |Im| < 1e-8 (1 + |Re|) count as real; nearby
/// real roots are clustered and report the cluster size.
inline std::vector<RealRoot> real_polynomial_roots(std::span<const double> coeffs) {
    double scale = 0.0;
    for (double c : coeffs)
        scale = std::max(scale, std::abs(c));
    if (scale == 0.0)
        throw argument_error("real_polynomial_roots: all coefficients are zero");

    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && std::abs(coeffs[static_cast<std::size_t>(deg)]) <= 1e-14 * scale)
        --deg;
    if (deg == 0)
        return {};
    const std::span<const double> poly = coeffs.subspan(0, static_cast<std::size_t>(deg) + 1);

    std::vector<std::complex<double>> candidates;
    if (deg == 1) {
        candidates.emplace_back(-poly[0] / poly[1], 0.0);
    } else {
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
        const double lead = poly[static_cast<std::size_t>(deg)];
        for (int i = 0; i < deg; ++i)
            companion(i, deg - 1) = -poly[static_cast<std::size_t>(i)] / lead;
        for (int i = 1; i < deg; ++i)
            companion(i, i - 1) = 1.0;
        Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
        for (int i = 0; i < deg; ++i)
            candidates.push_back(es.eigenvalues()(i));
    }

    auto polish = [&](std::complex<double> z) {
        for (int it = 0; it < 50; ++it) {
            const auto p = detail::horner(poly, z);
            const auto dp = detail::horner_derivative(poly, z);
            if (std::abs(dp) == 0.0 || std::abs(p) <= 1e-15 * scale)
                break;
            const auto step = p / dp;
            z -= step;
            if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z)))
                break;
        }
        return z;
    };

    std::vector<double> reals;
    for (auto z : candidates) {
        z = polish(z);
        if (std::abs(z.imag()) < 1e-8 * (1.0 + std::abs(z.real())))
            reals.push_back(polish(std::complex<double>(z.real(), 0.0)).real());
    }
    std::sort(reals.begin(), reals.end());

    std::vector<RealRoot> out;
    for (std::size_t i = 0; i < reals.size();) {
        std::size_t j = i + 1;
        double sum = reals[i];
        while (j < reals.size() && std::abs(reals[j] - reals[i]) < 1e-7 * (1.0 + std::abs(reals[i])))
            sum += reals[j++];
        const double rep = sum / static_cast<double>(j - i);
        out.push_back({rep, std::abs(detail::horner(poly, rep)), static_cast<int>(j - i)});
        i = j;
    }
    return out;
}

} // namespace ptwave
