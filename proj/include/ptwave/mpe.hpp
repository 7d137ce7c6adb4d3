#pragma once

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "ptwave/errors.hpp"

namespace ptwave {

/// Minimal polynomial extrapolation over restarted cycles of k+1 base steps.
struct MpeConfig {
    int cycle_width = 6;        // k
    bool restart = true;
    double ls_tolerance = 1e-13; // relative singular-value cutoff

    void validate() const {
        if (cycle_width < 1)
            throw argument_error("MpeConfig: cycle_width must be >= 1");
        if (!(ls_tolerance > 0.0))
            throw argument_error("MpeConfig: ls_tolerance must be positive");
    }
};

/// MPE limit estimate from iterates x_0..x_{k+1}: minimize
/// ||sum_i c_i (x_{i+1}-x_i)|| subject to sum_i c_i = 1 (solved with c_k
/// pinned to 1 and renormalized) and return sum_i c_i x_i. Rank deficiency is
/// handled by singular-value truncation; an already-converged sequence
/// returns x_0.
inline Eigen::VectorXd mpe_extrapolate(std::span<const Eigen::VectorXd> xs,
                                       double ls_tolerance = 1e-13) {
    if (xs.size() < 3)
        throw argument_error("mpe_extrapolate: need at least 3 vectors");
    const Eigen::Index dim = xs.front().size();
    for (const auto& x : xs)
        if (x.size() != dim)
            throw argument_error("mpe_extrapolate: dimension mismatch");

    const int k = static_cast<int>(xs.size()) - 2;
    Eigen::MatrixXd diff(dim, k + 1);
    for (int i = 0; i <= k; ++i)
        diff.col(i) = xs[static_cast<std::size_t>(i + 1)] - xs[static_cast<std::size_t>(i)];
    if (diff.norm() == 0.0)
        return xs.front();

    Eigen::VectorXd c(k + 1);
    c(k) = 1.0;
    if (k > 0) {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(diff.leftCols(k),
                                           Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(ls_tolerance);
        c.head(k) = svd.solve(-diff.col(k));
    }
    const double sum = c.sum();
    if (std::abs(sum) < 1e-14 * c.cwiseAbs().sum())
        return xs.back(); // affine weights undefined; let the safeguard decide
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
    for (int i = 0; i <= k; ++i)
        out += (c(i) / sum) * xs[static_cast<std::size_t>(i)];
    return out;
}

/// One restarted cycle: k+1 applications of `step` from x, one extrapolation,
/// and a safeguard that keeps the last plain iterate whenever extrapolating
/// would raise `residual`.
template <typename StepFn, typename ResidualFn>
Eigen::VectorXd accelerated_solve_cycle(StepFn&& step, ResidualFn&& residual,
                                        const Eigen::VectorXd& x, const MpeConfig& cfg) {
    cfg.validate();
    std::vector<Eigen::VectorXd> xs;
    xs.reserve(static_cast<std::size_t>(cfg.cycle_width) + 2);
    xs.push_back(x);
    for (int i = 0; i <= cfg.cycle_width; ++i)
        xs.push_back(step(xs.back()));
    Eigen::VectorXd candidate = mpe_extrapolate(xs, cfg.ls_tolerance);
    if (residual(candidate) <= residual(xs.back()))
        return candidate;
    return xs.back();
}

} // namespace ptwave
