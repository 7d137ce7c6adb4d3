#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ptwave/scalar_model.hpp"

using namespace ptwave;

TEST_CASE("polynomial nonlinearity construction") {
    SECTION("fkdv p=3 stores gamma_3 = 1/6") {
        auto m = fkdv_model(0.8, 3);
        REQUIRE(m.nonlinearity.degree() == 3);
        REQUIRE(m.nonlinearity.gamma(3) == Catch::Approx(1.0 / 6.0));
        REQUIRE(m.nonlinearity.lowest_degree() == 3);
    }

    SECTION("sign constraints") {
        REQUIRE_THROWS_AS(PolynomialNonlinearity(4, {-0.1, 1.0}), argument_error);
        REQUIRE_THROWS_AS(PolynomialNonlinearity(4, {0.1, -1.0}), argument_error);
        REQUIRE_NOTHROW(PolynomialNonlinearity(4, {-0.1, 1.0}, /*permissive=*/true));
        REQUIRE_NOTHROW(PolynomialNonlinearity(4, {0.1, -1.0}, /*permissive=*/true));
        REQUIRE_THROWS_AS(PolynomialNonlinearity(4, {0.1, 0.0}, /*permissive=*/true),
                          argument_error);
        REQUIRE_THROWS_AS(PolynomialNonlinearity(2, std::initializer_list<double>{}),
                          argument_error);
    }
}

TEST_CASE("evaluate_f on fkdv instances") {
    auto p3 = fkdv_model(1.0, 3);
    auto p4 = fkdv_model(1.0, 4);
    REQUIRE(evaluate_f(p3.nonlinearity, 2.0) == Catch::Approx(2.0));  // 4/2
    REQUIRE(evaluate_f(p4.nonlinearity, 3.0) == Catch::Approx(9.0));  // 27/3
    REQUIRE(evaluate_f(p3.nonlinearity, 0.0) == 0.0);
    REQUIRE(evaluate_f(p4.nonlinearity, 0.0) == 0.0);
    PolynomialNonlinearity mixed(5, {0.2, 0.3, 0.4});
    REQUIRE(evaluate_f(mixed, 0.0) == 0.0);
}

TEST_CASE("f_derivative_at closed forms") {
    auto p3 = fkdv_model(1.0, 3);
    auto p4 = fkdv_model(1.0, 4);

    SECTION("fkdv p=3: f'(C) = C") {
        for (double c : {-2.0, 0.0, 0.7, 3.1})
            REQUIRE(f_derivative_at(p3.nonlinearity, 1, c) == Catch::Approx(c).margin(1e-15));
    }

    SECTION("fkdv p=4: f'(C) = C^2") {
        REQUIRE(f_derivative_at(p4.nonlinearity, 1, 2.0) == Catch::Approx(4.0));
    }

    SECTION("fkdv p=4, C=2: shifted coefficients b2 = 2, b3 = 1/3") {
        REQUIRE(f_derivative_at(p4.nonlinearity, 2, 2.0) / 2.0 == Catch::Approx(2.0));
        REQUIRE(f_derivative_at(p4.nonlinearity, 3, 2.0) / 6.0 == Catch::Approx(1.0 / 3.0));
    }

    SECTION("order range") {
        REQUIRE_THROWS_AS(f_derivative_at(p4.nonlinearity, 0, 1.0), argument_error);
        REQUIRE_THROWS_AS(f_derivative_at(p4.nonlinearity, 4, 1.0), argument_error);
    }
}

TEST_CASE("first derivative matches centered finite differences") {
    PolynomialNonlinearity nl(6, {0.5, 0.0, 1.2, 0.7});
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    const double h = 1e-5;
    for (int i = 0; i < 50; ++i) {
        const double c = dist(rng);
        const double fd = (nl.evaluate(c + h) - nl.evaluate(c - h)) / (2.0 * h);
        const double ex = nl.derivative_at(1, c);
        REQUIRE(std::abs(fd - ex) <= 1e-6 * (1.0 + std::abs(ex)));
    }
}

TEST_CASE("Taylor identity for shifted coefficients") {
    // f(C+x) - f(C) - f'(C) x = sum_{j=2}^{p-1} f^{(j)}(C)/j! x^j, exactly.
    PolynomialNonlinearity nl(5, {0.3, 0.25, 0.8});
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const double c = dist(rng);
        const double x = dist(rng);
        double rhs = 0.0;
        double factorial = 1.0;
        for (int j = 2; j <= nl.degree() - 1; ++j) {
            factorial *= j;
            rhs += nl.derivative_at(j, c) / factorial * std::pow(x, j);
        }
        const double lhs = nl.evaluate(c + x) - nl.evaluate(c) - nl.derivative_at(1, c) * x;
        REQUIRE(lhs == Catch::Approx(rhs).margin(1e-12 * (1.0 + std::abs(lhs))));
    }
}

TEST_CASE("hypothesis checker") {
    SECTION("fkdv mu=2, p=3 passes (H3)") {
        auto rep = check_hypotheses(fkdv_model(2.0, 3));
        REQUIRE(rep.h3 == HypothesisStatus::Pass);
        REQUIRE(rep.h2 == HypothesisStatus::Pass);
        REQUIRE(rep.h3_left == Catch::Approx(1.0));
        REQUIRE(rep.h3_right == Catch::Approx(0.25));
    }

    SECTION("fkdv mu=0.2, p=6 fails (H3)") {
        auto rep = check_hypotheses(fkdv_model(0.2, 6));
        REQUIRE(rep.h3 == HypothesisStatus::Fail);
        REQUIRE(rep.h3_left == Catch::Approx(0.1));
        REQUIRE(rep.h3_right == Catch::Approx(1.0));
    }

    SECTION("xi^2 with declared exponents is sampled heuristically") {
        FourierMultiplier kdv{[](double xi) { return xi * xi; }, "xi^2"};
        ScalarModel model(PolynomialNonlinearity(3, {1.0 / 6.0}), kdv,
                          std::make_pair(0.5, 1.0));
        auto rep = check_hypotheses(model);
        REQUIRE(rep.h3 == HypothesisStatus::HeuristicPass);
        REQUIRE(rep.ratio_min == Catch::Approx(1.0));
        REQUIRE(rep.ratio_max == Catch::Approx(1.0));
        REQUIRE(rep.h2 == HypothesisStatus::HeuristicPass);
    }

    SECTION("missing metadata is inconclusive") {
        FourierMultiplier sym{[](double xi) { return std::abs(xi); }, "|xi|"};
        ScalarModel model(PolynomialNonlinearity(3, {1.0 / 6.0}), sym);
        auto rep = check_hypotheses(model);
        REQUIRE_FALSE(rep.conclusive());
    }
}

TEST_CASE("scalar model symbol validation") {
    FourierMultiplier odd{[](double xi) { return xi; }, "xi"};
    REQUIRE_THROWS_AS(ScalarModel(PolynomialNonlinearity(3, {1.0}), odd), argument_error);
    FourierMultiplier nonzero{[](double xi) { return 1.0 + xi * xi; }, "1+xi^2"};
    REQUIRE_THROWS_AS(ScalarModel(PolynomialNonlinearity(3, {1.0}), nonzero), argument_error);
}

TEST_CASE("fkdv existence threshold p_max") {
    REQUIRE(fkdv_p_max(0.5) == Catch::Approx(4.0));
    REQUIRE(std::isinf(fkdv_p_max(1.0)));
    REQUIRE(fkdv_p_max(0.9) == Catch::Approx(20.0));
    REQUIRE_THROWS_AS(fkdv_p_max(0.0), argument_error);
    REQUIRE_THROWS_AS(fkdv_p_max(2.5), argument_error);
}

TEST_CASE("fkdv stability classification") {
    SECTION("closed-form p* values") {
        REQUIRE(fkdv_p_star(1.0) == Catch::Approx(3.0));
        REQUIRE(fkdv_p_star(2.0) == Catch::Approx(4.0));
    }

    SECTION("classification regions") {
        REQUIRE(fkdv_stability(0.8, 3.0) == StabilityClass::Unstable);
        REQUIRE(fkdv_stability(0.8, 7.0) == StabilityClass::Unstable);
        REQUIRE(fkdv_stability(0.4, 3.0) == StabilityClass::OutsideTheory);
        REQUIRE(fkdv_stability(2.0, 3.0) == StabilityClass::Stable);
        REQUIRE(fkdv_stability(2.0, 5.0) == StabilityClass::Unstable);
        REQUIRE(fkdv_stability(2.0, fkdv_p_star(2.0)) == StabilityClass::OutsideTheory);
        REQUIRE(fkdv_stability(1.0, 2.0) == StabilityClass::OutsideTheory);
        REQUIRE(fkdv_stability(1.5, 0.5) == StabilityClass::OutsideTheory);
    }

    SECTION("p* is continuous on (1, 2]") {
        double prev = fkdv_p_star(1.0 + 1e-4);
        for (int i = 1; i <= 1000; ++i) {
            const double mu = 1.0 + 1e-4 + (1.0 - 1e-4) * i / 1000.0;
            const double cur = fkdv_p_star(mu);
            REQUIRE(std::isfinite(cur));
            REQUIRE(std::abs(cur - prev) < 0.01);
            prev = cur;
        }
    }
}
