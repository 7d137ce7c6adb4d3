#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ptwave/constant_shift.hpp"

using namespace ptwave;

namespace {

// Independent oracle: bisection for the single real root of z^3/3 - z - 1.
double bisect_p4_root() {
    auto f = [](double z) { return z * z * z / 3.0 - z - 1.0; };
    double lo = 2.0, hi = 2.2;
    REQUIRE(f(lo) < 0.0);
    REQUIRE(f(hi) > 0.0);
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

SpectralField random_band_limited(const GridPtr& grid, int max_mode, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-0.5, 0.5);
    SpectralField f(grid);
    f.set_coeff(0, {dist(rng), 0.0});
    for (int n = 1; n <= max_mode; ++n)
        f.set_coeff(n, {dist(rng), dist(rng)});
    f.symmetrize();
    return f;
}

} // namespace

TEST_CASE("constant branches of fkdv p=3") {
    auto model = fkdv_model(0.8, 3);

    SECTION("A=0 factorizes as C(C/2 - 1)") {
        auto roots = find_constants(model, 1.0, 0.0);
        REQUIRE(roots.size() == 2);
        REQUIRE(roots[0].C == Catch::Approx(0.0).margin(1e-12));
        REQUIRE(roots[1].C == Catch::Approx(2.0).margin(1e-12));
    }

    SECTION("A=1 gives 1 +- sqrt(3)") {
        auto roots = find_constants(model, 1.0, 1.0);
        REQUIRE(roots.size() == 2);
        REQUIRE(roots[0].C == Catch::Approx(1.0 - std::sqrt(3.0)).margin(1e-10));
        REQUIRE(roots[1].C == Catch::Approx(1.0 + std::sqrt(3.0)).margin(1e-10));
        for (const auto& b : roots)
            REQUIRE(b.residual <= 1e-10);
    }

    SECTION("sorted by |C| ascending") {
        auto roots = find_constants(model, 1.0, 1.0);
        REQUIRE(std::abs(roots[0].C) <= std::abs(roots[1].C));
    }

    SECTION("c_s must be positive") {
        REQUIRE_THROWS_AS(find_constants(model, 0.0, 1.0), argument_error);
    }
}

TEST_CASE("constant branch of fkdv p=4 against bisection oracle") {
    auto model = fkdv_model(1.5, 4);
    auto roots = find_constants(model, 1.0, 1.0);
    REQUIRE(roots.size() == 1);
    REQUIRE(roots[0].C == Catch::Approx(bisect_p4_root()).margin(1e-10));
}

TEST_CASE("Vieta relations for p=3 branches") {
    auto model = fkdv_model(1.0, 3);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> cs_dist(0.2, 3.0);
    std::uniform_real_distribution<double> a_dist(-0.5, 2.0);
    int checked = 0;
    for (int i = 0; i < 50; ++i) {
        const double cs = cs_dist(rng);
        const double a = a_dist(rng);
        auto roots = find_constants(model, cs, a);
        if (roots.size() != 2)
            continue;
        ++checked;
        // P(z) = z^2/2 - cs z - A: sum = 2 cs, product = -2A.
        REQUIRE(roots[0].C + roots[1].C == Catch::Approx(2.0 * cs).margin(1e-10));
        REQUIRE(roots[0].C * roots[1].C == Catch::Approx(-2.0 * a).margin(1e-10));
    }
    REQUIRE(checked > 10);
}

TEST_CASE("A=0 always contains the zero branch") {
    for (int p : {3, 4, 5}) {
        auto model = fkdv_model(1.0, p);
        auto roots = find_constants(model, 0.7, 0.0);
        bool has_zero = false;
        for (const auto& b : roots)
            has_zero |= std::abs(b.C) < 1e-12;
        REQUIRE(has_zero);
    }
}

TEST_CASE("empty branch list is a reported outcome") {
    // p=3: C^2/2 - cs C - A has no real root when cs^2 + 2A < 0.
    auto model = fkdv_model(1.0, 3);
    auto roots = find_constants(model, 1.0, -2.0);
    REQUIRE(roots.empty());
}

TEST_CASE("build_shifted coefficients") {
    SECTION("p=3, C=0 recovers the unshifted problem") {
        auto model = fkdv_model(2.0, 3);
        auto sp = build_shifted(model, 1.0, 0.0, ConstantBranch{0.0, 0.0, 1});
        REQUIRE(sp.linear_shift == 0.0);
        REQUIRE(sp.b(2) == Catch::Approx(0.5));
    }

    SECTION("p=4, C=2: shift 4, b2 = 2, b3 = 1/3") {
        auto model = fkdv_model(1.5, 4);
        // C=2 solves C^3/3 - cs C - A with A = 8/3 - 2 cs; pick cs = 1.
        auto sp = build_shifted(model, 1.0, 8.0 / 3.0 - 2.0, ConstantBranch{2.0, 0.0, 1});
        REQUIRE(sp.linear_shift == Catch::Approx(4.0));
        REQUIRE(sp.b(2) == Catch::Approx(2.0));
        REQUIRE(sp.b(3) == Catch::Approx(1.0 / 3.0));
    }

    SECTION("p=3, C=1+sqrt(3): linear shift is C") {
        auto model = fkdv_model(0.8, 3);
        auto roots = find_constants(model, 1.0, 1.0);
        auto sp = build_shifted(model, 1.0, 1.0, roots[1]);
        REQUIRE(sp.linear_shift == Catch::Approx(1.0 + std::sqrt(3.0)).margin(1e-10));
    }

    SECTION("fkdv b_j match the binomial closed form") {
        for (int p : {4, 5, 6}) {
            auto model = fkdv_model(1.0, p);
            const double C = 1.3;
            const double A = std::pow(C, p - 1) / (p - 1) - 0.9 * C;
            auto sp = build_shifted(model, 0.9, A, ConstantBranch{C, 0.0, 1});
            for (int j = 2; j <= p - 1; ++j) {
                double binom = 1.0;
                for (int i = 0; i < j; ++i)
                    binom = binom * (p - 1 - i) / (i + 1);
                REQUIRE(sp.b(j) ==
                        Catch::Approx(binom * std::pow(C, p - 1 - j) / (p - 1)).margin(1e-12));
            }
        }
    }

    SECTION("stale branch is rejected") {
        auto model = fkdv_model(1.0, 3);
        REQUIRE_THROWS_AS(build_shifted(model, 1.0, 1.0, ConstantBranch{0.5, 0.0, 1}),
                          argument_error);
    }
}

TEST_CASE("denominator guard at grid binding") {
    auto model = fkdv_model(0.8, 3);
    auto grid = PeriodicGrid::create(50.0, 64);

    auto roots = find_constants(model, 1.0, 1.0);
    auto sp_minus = build_shifted(model, 1.0, 1.0, roots[0]);
    REQUIRE(sp_minus.min_abs_denominator(*grid) > 1e-12);

    // The C=2 branch of (cs=1, A=0) makes c_s - f'(C) = -1 < 0 while the
    // symbol sweeps through +1, so some mode sits near the singularity.
    auto roots0 = find_constants(model, 1.0, 0.0);
    auto sp_plus = build_shifted(model, 1.0, 0.0, roots0[1]);
    const auto den = sp_plus.denominators(*grid);
    double dmin = std::abs(den[0]);
    for (double d : den)
        dmin = std::min(dmin, std::abs(d));
    REQUIRE(dmin < 0.5); // sign change happens inside the resolved band
}

TEST_CASE("shift equivalence residual") {
    auto grid = PeriodicGrid::create(50.0, 128);

    SECTION("zero field gives zero residuals") {
        auto model = fkdv_model(0.8, 3);
        auto roots = find_constants(model, 1.0, 1.0);
        auto sp = build_shifted(model, 1.0, 1.0, roots[0]);
        SpectralField zero(grid);
        auto [r1, r2] = shift_equivalence_residual(sp, zero);
        REQUIRE(r1 <= 1e-9);
        REQUIRE(r2 == 0.0);
    }

    SECTION("identity holds on 100 random fields, p=3 and p=4") {
        struct Case {
            int p;
            double mu;
        };
        for (auto [p, mu] : {Case{3, 0.8}, Case{4, 1.5}}) {
            auto model = fkdv_model(mu, p);
            auto roots = find_constants(model, 1.0, 1.0);
            auto sp = build_shifted(model, 1.0, 1.0, roots[0]);
            for (unsigned seed = 0; seed < 100; ++seed) {
                auto psi = random_band_limited(grid, 20, 1000u + seed);
                auto [r1, r2] = shift_equivalence_residual(sp, psi);
                REQUIRE(std::abs(r1 - r2) <= 1e-9 * (1.0 + r1));
            }
        }
    }
}

TEST_CASE("degenerate polynomial is rejected") {
    std::vector<double> zeros(4, 0.0);
    REQUIRE_THROWS_AS(real_polynomial_roots(zeros), argument_error);
}

TEST_CASE("multiplicity hint from clustered roots") {
    // (z - 1)^2 (z + 2) = z^3 - 3 z + 2
    std::vector<double> poly{2.0, -3.0, 0.0, 1.0};
    auto roots = real_polynomial_roots(poly);
    REQUIRE(roots.size() == 2);
    bool found_double = false;
    for (const auto& r : roots)
        if (std::abs(r.value - 1.0) < 1e-6)
            found_double = r.multiplicity_hint == 2;
    REQUIRE(found_double);
}
