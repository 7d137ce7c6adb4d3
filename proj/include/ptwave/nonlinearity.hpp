#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "ptwave/errors.hpp"

namespace ptwave {

/// Polynomial nonlinearity f(z) = 3 g3 z^2 + ... + p gp z^{p-1}, so f(0) =
/// f'(0) = 0 by construction. Sign constraints (gj >= 0 below the top degree,
/// gp > 0) are enforced unless `permissive` is set.
class PolynomialNonlinearity {
public:
    PolynomialNonlinearity(int degree, std::span<const double> gammas, bool permissive = false)
        : degree_(degree) {
        if (degree < 3)
            throw argument_error("PolynomialNonlinearity: degree must be >= 3");
        if (static_cast<int>(gammas.size()) != degree - 2)
            throw argument_error("PolynomialNonlinearity: expected gammas g3..gp");
        gamma_.assign(static_cast<std::size_t>(degree) + 1, 0.0);
        for (int j = 3; j <= degree; ++j)
            gamma_[static_cast<std::size_t>(j)] = gammas[static_cast<std::size_t>(j - 3)];
        if (!permissive) {
            for (int j = 3; j < degree; ++j)
                if (gamma(j) < 0.0)
                    throw argument_error("PolynomialNonlinearity: gamma_j < 0 below top degree");
            if (!(gamma(degree) > 0.0))
                throw argument_error("PolynomialNonlinearity: top gamma_p must be positive");
        } else if (gamma(degree) == 0.0) {
            throw argument_error("PolynomialNonlinearity: top gamma_p must be nonzero");
        }
    }

    PolynomialNonlinearity(int degree, std::initializer_list<double> gammas, bool permissive = false)
        : PolynomialNonlinearity(degree, std::span<const double>(gammas.begin(), gammas.size()),
                                 permissive) {}

    int degree() const { return degree_; }
    double gamma(int j) const { return gamma_[static_cast<std::size_t>(j)]; }

    /// p0 = min{j : gamma_j != 0}.
    int lowest_degree() const {
        for (int j = 3; j <= degree_; ++j)
            if (gamma(j) != 0.0)
                return j;
        return degree_;
    }

    /// f(z) = sum_j j gamma_j z^{j-1}.
    double evaluate(double z) const {
        double acc = 0.0;
        for (int j = degree_; j >= 3; --j)
            acc = acc * z + j * gamma(j);
        return acc * z * z;
    }

    /// f^{(order)}(C) = sum_{l >= order+1} l(l-1)...(l-order) gamma_l C^{l-order-1},
    /// valid for 1 <= order <= p-1.
    double derivative_at(int order, double C) const {
        if (order < 1 || order > degree_ - 1)
            throw argument_error("PolynomialNonlinearity: derivative order out of range");
        double acc = 0.0;
        for (int l = degree_; l >= std::max(3, order + 1); --l) {
            double fall = 1.0;
            for (int i = 0; i <= order; ++i)
                fall *= l - i;
            acc += fall * gamma(l) * std::pow(C, l - order - 1);
        }
        return acc;
    }

private:
    int degree_;
    std::vector<double> gamma_;
};

/// Spec operation names, thin wrappers over the member functions.
inline double evaluate_f(const PolynomialNonlinearity& nl, double z) { return nl.evaluate(z); }
inline double f_derivative_at(const PolynomialNonlinearity& nl, int order, double C) {
    return nl.derivative_at(order, C);
}

} // namespace ptwave
