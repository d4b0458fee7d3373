#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "peridisp/dispersion.hpp"

#include <cmath>
#include <sstream>
#include <vector>

using namespace peridisp;

namespace {

const MaterialParams kUnit{1.0, 1.0, 1.0, 0.5};

MaterialParams with_alpha(double alpha) {
    MaterialParams p = kUnit;
    p.alpha = alpha;
    return p;
}

// Brute-force trapezoid oracle for the dispersion integral at alpha = 1/2,
// where the integrand extends continuously to z = 0.
double brute_omega_sq(int dim, double xi, long panels = 1000000) {
    const double c = dim == 1 ? 4.0 : (dim == 2 ? 4.0 * M_PI : 8.0 * M_PI);
    const auto kernel = [&](double tau) -> long double {
        if (dim == 1)
            return std::cos((long double)tau);
        if (dim == 3)
            return tau == 0.0 ? 1.0L : std::sin((long double)tau) / tau;
        // J0 by direct series; xi*delta stays small enough here.
        long double term = 1.0L, sum = 1.0L;
        const long double q = (long double)tau * tau / 4.0L;
        for (int m = 1; m < 60; ++m) {
            term *= -q / ((long double)m * m);
            sum += term;
        }
        return sum;
    };
    const auto integrand = [&](double z) -> long double {
        if (z == 0.0)
            return (long double)xi * xi * (dim == 1 ? 0.5L : (dim == 2 ? 0.25L : 1.0L / 6.0L));
        return (1.0L - kernel(xi * z)) / ((long double)z * z);
    };
    long double acc = 0.5L * (integrand(0.0) + integrand(1.0));
    for (long i = 1; i < panels; ++i)
        acc += integrand(static_cast<double>(i) / panels);
    return static_cast<double>(c * acc / panels);
}

} // namespace

TEST_CASE("omega_squared basics") {
    for (int n : {1, 2, 3}) {
        CHECK(omega_squared(Dimension{n}, kUnit, 0.0) == 0.0);
        CHECK(omega(Dimension{n}, kUnit, 0.0) == 0.0);
    }
    CHECK_THROWS_AS(omega_squared(Dimension{2}, kUnit, -1.0), std::domain_error);
    CHECK_THROWS_AS(omega_squared(Dimension{2}, with_alpha(1.0), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Dimension{4}, std::invalid_argument);
}

TEST_CASE("omega_squared against brute-force quadrature oracle") {
    for (int n : {1, 2, 3}) {
        CAPTURE(n);
        const double expect = brute_omega_sq(n, 1.0);
        CHECK(omega_squared(Dimension{n}, kUnit, 1.0) == doctest::Approx(expect).epsilon(1e-8));
    }
    // Frozen from the same oracle run at higher precision.
    CHECK(omega_squared(Dimension{3}, kUnit, 1.0) ==
          doctest::Approx(4.1199645411442418).epsilon(1e-9));
    CHECK(omega_squared(Dimension{2}, kUnit, 1.0) ==
          doctest::Approx(3.0772215571262794).epsilon(1e-9));
    CHECK(omega_squared(Dimension{1}, kUnit, 1.0) ==
          doctest::Approx(1.9455415049412909).epsilon(1e-9));
}

TEST_CASE("low-frequency regime") {
    const double xi = 1e-3;
    CHECK(omega_squared(Dimension{2}, kUnit, xi) ==
          doctest::Approx(M_PI * xi * xi).epsilon(1e-3));
    CHECK(low_freq_coefficient(Dimension{1}, kUnit) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(low_freq_coefficient(Dimension{2}, kUnit) == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(low_freq_coefficient(Dimension{3}, kUnit) ==
          doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-14));
}

TEST_CASE("high-frequency coefficients, quadrature fallback at alpha = 1/2") {
    CHECK(high_freq_coefficient(Dimension{1}, kUnit) == doctest::Approx(2.0 * M_PI).epsilon(1e-6));
    CHECK(high_freq_coefficient(Dimension{2}, kUnit) == doctest::Approx(4.0 * M_PI).epsilon(1e-6));
    CHECK(high_freq_coefficient(Dimension{3}, kUnit) ==
          doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-6));
    // Continuity across the fallback window edge.
    const double inside = high_freq_coefficient(Dimension{1}, with_alpha(0.5005));
    const double outside = high_freq_coefficient(Dimension{1}, with_alpha(0.5015));
    CHECK(inside == doctest::Approx(outside).epsilon(2e-2));
}

TEST_CASE("omega consistency and high-frequency growth") {
    for (double xi : {0.1, 1.0, 10.0}) {
        const double w = omega(Dimension{2}, kUnit, xi);
        CHECK(w * w == doctest::Approx(omega_squared(Dimension{2}, kUnit, xi)).epsilon(1e-15));
    }
    CHECK(omega(Dimension{1}, kUnit, 1e3) ==
          doctest::Approx(std::sqrt(2.0 * M_PI * 1e3)).epsilon(1e-2));
}

TEST_CASE("group velocity matches large-scale estimates") {
    CHECK(group_velocity(Dimension{2}, with_alpha(0.9), 1e-3) == doctest::Approx(3.96).epsilon(1e-2));
    CHECK(group_velocity(Dimension{2}, with_alpha(0.1), 1e-3) == doctest::Approx(1.32).epsilon(1e-2));
    CHECK(group_velocity(Dimension{3}, kUnit, 1e-3) == doctest::Approx(2.05).epsilon(1e-2));
    CHECK(group_velocity(Dimension{2}, kUnit, 0.0) ==
          doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));

    CHECK(large_scale_group_velocity(Dimension{2}, kUnit) ==
          doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(large_scale_group_velocity(Dimension{3}, with_alpha(0.9)) ==
          doctest::Approx(4.58).epsilon(5e-3));
    CHECK(large_scale_group_velocity(Dimension{1}, kUnit) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("nonnegativity of omega_squared") {
    for (int n : {1, 2, 3}) {
        for (double a : {0.1, 0.5, 0.9}) {
            for (double xi : {1e-4, 0.3, 1.0, 7.0, 300.0}) {
                CAPTURE(n);
                CAPTURE(a);
                CAPTURE(xi);
                CHECK(omega_squared(Dimension{n}, with_alpha(a), xi) >= 0.0);
            }
        }
    }
}

TEST_CASE("scaling collapse in xi*delta") {
    for (int n : {1, 2, 3}) {
        for (double a : {0.2, 0.5, 0.8}) {
            for (double product : {0.4, 3.0, 40.0}) {
                CAPTURE(n);
                CAPTURE(a);
                CAPTURE(product);
                MaterialParams p1 = with_alpha(a), p2 = with_alpha(a);
                p1.delta = 0.5;
                p2.delta = 2.0;
                const double lhs = std::pow(p1.delta, 2.0 * a) *
                                   omega_squared(Dimension{n}, p1, product / p1.delta);
                const double rhs = std::pow(p2.delta, 2.0 * a) *
                                   omega_squared(Dimension{n}, p2, product / p2.delta);
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("asymptotic convergence with monotone error decrease") {
    for (int n : {1, 2, 3}) {
        for (double a : {0.1, 0.5, 0.9}) {
            CAPTURE(n);
            CAPTURE(a);
            const MaterialParams p = with_alpha(a);
            const Dimension dim{n};
            const double lo = low_freq_coefficient(dim, p);
            const double err_lo_2 = std::fabs(omega_squared(dim, p, 1e-2) / (1e-4 * lo) - 1.0);
            const double err_lo_3 = std::fabs(omega_squared(dim, p, 1e-3) / (1e-6 * lo) - 1.0);
            CHECK(err_lo_3 < err_lo_2);
            CHECK(err_lo_3 < 1e-4);
            const double hi = high_freq_coefficient(dim, p);
            const auto hi_err = [&](double xi) {
                return std::fabs(omega_squared(dim, p, xi) / (std::pow(xi, 2.0 * a) * hi) - 1.0);
            };
            CHECK(hi_err(1e4) < hi_err(1e3));
        }
    }
}

TEST_CASE("dimensional ordering of high-frequency amplitudes") {
    for (int i = 1; i <= 18; ++i) {
        const double a = 0.05 * i;
        CAPTURE(a);
        const MaterialParams p = with_alpha(a);
        const double h1 = high_freq_coefficient(Dimension{1}, p);
        const double h2 = high_freq_coefficient(Dimension{2}, p);
        const double h3 = high_freq_coefficient(Dimension{3}, p);
        CHECK(h1 < h2);
        CHECK(h2 < h3);
    }
}

TEST_CASE("series and quadrature routes agree in the overlap window") {
    for (int n : {1, 2, 3}) {
        for (double a : {0.15, 0.5, 0.85}) {
            for (double xi : {0.5, 0.8, 1.3, 2.0}) {
                CAPTURE(n);
                CAPTURE(a);
                CAPTURE(xi);
                const MaterialParams p = with_alpha(a);
                const double s = omega_squared_via_series(Dimension{n}, p, xi);
                const double q = omega_squared_via_quadrature(Dimension{n}, p, xi);
                CHECK(s == doctest::Approx(q).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("dispersion_table contents") {
    const auto single = dispersion_table(Dimension{2}, kUnit, {0.0});
    REQUIRE(single.rows.size() == 1);
    CHECK(single.rows[0].omega_sq == 0.0);
    CHECK(single.rows[0].omega == 0.0);
    CHECK(single.rows[0].group_velocity == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));

    const auto table = dispersion_table(Dimension{2}, kUnit, {1e-3, 1e3});
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0].omega_sq / 1e-6 == doctest::Approx(M_PI).epsilon(1e-3));
    CHECK(table.rows[1].omega_sq / 1e3 == doctest::Approx(4.0 * M_PI).epsilon(1e-2));
    for (const auto& r : table.rows)
        CHECK(r.omega == std::sqrt(r.omega_sq));

    CHECK_THROWS_AS(dispersion_table(Dimension{2}, kUnit, {1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(dispersion_table(Dimension{2}, kUnit, {-1.0, 0.5}), std::invalid_argument);
}

TEST_CASE("dispersion table CSV format") {
    const auto table = dispersion_table(Dimension{1}, kUnit, {0.0, 0.5, 2.0});
    std::ostringstream s1, s2;
    write_csv(table, s1);
    write_csv(table, s2);
    CHECK(s1.str() == s2.str());
    CHECK(s1.str().substr(0, 21) == "xi,omega_sq,omega,vg\n");
    // one header plus one line per row, LF-terminated
    int newlines = 0;
    for (char c : s1.str())
        if (c == '\n')
            ++newlines;
    CHECK(newlines == 4);
}

TEST_CASE("omega_squared_grid matches pointwise evaluation") {
    std::vector<double> grid;
    for (int i = 0; i <= 60; ++i)
        grid.push_back(std::pow(10.0, -2.0 + 4.0 * i / 60.0));
    const auto batch = omega_squared_grid(Dimension{2}, kUnit, grid);
    for (std::size_t i = 0; i < grid.size(); i += 7) {
        CAPTURE(grid[i]);
        CHECK(batch[i] == doctest::Approx(omega_squared(Dimension{2}, kUnit, grid[i])).epsilon(1e-9));
    }
    CHECK_THROWS_AS(omega_squared_grid(Dimension{2}, kUnit, {1.0, 0.5}), std::invalid_argument);
}
