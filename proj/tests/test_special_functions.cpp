#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "peridisp/special_functions.hpp"
#include "peridisp/quadrature.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace peridisp;

namespace {

// Independent J0 reference: trapezoid on the integral representation
// (1/pi) int_0^pi cos(x sin t) dt in long double. All odd derivatives of the
// integrand vanish at both endpoints, so the trapezoid rule converges
// spectrally here.
double reference_j0(double x) {
    const int n = 4000 + 4 * static_cast<int>(std::fabs(x));  // stay well above Nyquist
    long double sum = 0.5L * (1.0L + std::cos((long double)x * std::sin((long double)M_PI)));
    for (int i = 1; i < n; ++i) {
        const long double t = M_PI * (long double)i / n;
        sum += std::cos((long double)x * std::sin(t));
    }
    return static_cast<double>(sum / n);
}

} // namespace

TEST_CASE("bessel_j0 spot values") {
    CHECK(sf::bessel_j0(0.0) == 1.0);
    // 40-term alternating power series value at x = 1.
    CHECK(sf::bessel_j0(1.0) == doctest::Approx(0.7651976865579666).epsilon(1e-14));
    // First root, located independently by bisection on reference_j0.
    double lo = 2.0, hi = 3.0;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (reference_j0(mid) > 0.0 ? lo : hi) = mid;
    }
    const double root = 0.5 * (lo + hi);
    CHECK(root == doctest::Approx(2.404825557695773).epsilon(1e-12));
    CHECK(std::fabs(sf::bessel_j0(2.404825557695773)) < 1e-10);
    CHECK(std::fabs(sf::bessel_j0(root)) < 1e-12);
}

TEST_CASE("bessel_j0 accuracy contract across regimes") {
    // Probe every evaluation branch, including the crossovers at 9 and 14.
    const std::vector<double> xs = {1e-8, 0.5,  1.0,   3.7,  8.9,  9.1,  10.0, 12.5,
                                    13.9, 14.1, 17.3,  25.0, 100.0, 317.0, 1000.0, 9999.5};
    for (double x : xs) {
        CAPTURE(x);
        CHECK(std::fabs(sf::bessel_j0(x) - reference_j0(x)) < 1e-12);
    }
    CHECK(sf::bessel_j0(-3.7) == sf::bessel_j0(3.7));
    CHECK_THROWS_AS(sf::bessel_j0(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(sf::bessel_j0(INFINITY), std::domain_error);
}

TEST_CASE("spherical bessel values") {
    CHECK(sf::spherical_bessel_j(0, 0.0) == 1.0);
    CHECK(sf::spherical_bessel_j(1, 0.0) == 0.0);
    CHECK(sf::spherical_bessel_j(5, 0.0) == 0.0);
    CHECK(std::fabs(sf::spherical_bessel_j(0, M_PI)) < 1e-14);
    // j1(x) = sin x / x^2 - cos x / x evaluated in high precision at x = 1.
    CHECK(sf::spherical_bessel_j(1, 1.0) == doctest::Approx(0.30116867893975674).epsilon(1e-14));

    // Closed forms for j1 and j2 across both recurrence branches.
    const auto j1_ref = [](long double x) {
        return static_cast<double>(std::sin(x) / (x * x) - std::cos(x) / x);
    };
    const auto j2_ref = [](long double x) {
        return static_cast<double>((3.0L / (x * x) - 1.0L) * std::sin(x) / x - 3.0L * std::cos(x) / (x * x));
    };
    for (double x : {0.9, 2.0, 7.5, 40.0, 1000.0}) {
        CAPTURE(x);
        CHECK(sf::spherical_bessel_j(1, x) == doctest::Approx(j1_ref(x)).epsilon(1e-11));
        CHECK(sf::spherical_bessel_j(2, x) == doctest::Approx(j2_ref(x)).epsilon(1e-11));
    }
    // Small-argument series j1 ~ x/3 - x^3/30: the downward recurrence must
    // not lose the leading digits to cancellation.
    for (double x : {1e-3, 1e-2, 0.1}) {
        const double series = x / 3.0 - x * x * x / 30.0 + x * x * x * x * x / 840.0;
        CHECK(sf::spherical_bessel_j(1, x) == doctest::Approx(series).epsilon(1e-12));
    }
    // Order support up to at least 32.
    CHECK(sf::spherical_bessel_j(32, 5.0) > 0.0);
    CHECK(std::isfinite(sf::spherical_bessel_j(sf::kMaxDegree, 0.3)));
    CHECK_THROWS_AS(sf::spherical_bessel_j(-1, 1.0), std::domain_error);
    CHECK_THROWS_AS(sf::spherical_bessel_j(sf::kMaxDegree + 1, 1.0), std::domain_error);
}

TEST_CASE("bessel kernels bounded by one") {
    for (int i = 0; i <= 500; ++i) {
        const double x = 50.0 * i / 500.0;
        CHECK(std::fabs(sf::bessel_j0(x)) <= 1.0 + 1e-15);
        CHECK(std::fabs(sf::spherical_bessel_j(0, x)) <= 1.0 + 1e-15);
    }
}

TEST_CASE("gamma values and poles") {
    CHECK(sf::gamma(0.5) == doctest::Approx(1.7724538509055159).epsilon(1e-13));
    CHECK(sf::gamma(4.0) == doctest::Approx(6.0).epsilon(1e-13));
    // Reflection formula pi / (sin(-0.2 pi) Gamma(1.2)) in high precision.
    CHECK(sf::gamma(-0.2) == doctest::Approx(-5.821148568626517).epsilon(1e-13));
    CHECK_THROWS_AS(sf::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(sf::gamma(-3.0), std::domain_error);
    CHECK_THROWS_WITH(sf::gamma(-2.0), doctest::Contains("-2"));
}

TEST_CASE("gamma recurrence") {
    for (double x : {-3.5, -0.2, 0.3, 2.7}) {
        CAPTURE(x);
        CHECK(sf::gamma(x + 1.0) == doctest::Approx(x * sf::gamma(x)).epsilon(1e-10));
    }
}

TEST_CASE("spherical harmonic spot values") {
    const double inv_sqrt4pi = 1.0 / std::sqrt(4.0 * M_PI);
    for (double theta : {0.0, 0.7, 2.1}) {
        for (double phi : {0.0, 1.3}) {
            const auto y = sf::spherical_harmonic({0, 0}, theta, phi);
            CHECK(y.real() == doctest::Approx(inv_sqrt4pi).epsilon(1e-14));
            CHECK(y.imag() == 0.0);
        }
    }
    CHECK(std::abs(sf::spherical_harmonic({1, 0}, M_PI / 2.0, 0.0)) < 1e-15);
    CHECK(sf::spherical_harmonic({1, 0}, 0.0, 0.0).real() ==
          doctest::Approx(std::sqrt(3.0 / (4.0 * M_PI))).epsilon(1e-13));
    CHECK_THROWS_AS(sf::spherical_harmonic({1, 2}, 0.5, 0.5), std::domain_error);
    CHECK_THROWS_AS(sf::spherical_harmonic({-1, 0}, 0.5, 0.5), std::domain_error);
}

TEST_CASE("spherical harmonic conjugation symmetry") {
    for (int ell = 0; ell <= 8; ++ell) {
        for (int m = -ell; m <= ell; ++m) {
            for (int i = 0; i < 20; ++i) {
                for (int j = 0; j < 20; ++j) {
                    const double theta = M_PI * (i + 0.5) / 20.0;
                    const double phi = 2.0 * M_PI * j / 20.0;
                    const auto lhs = std::conj(sf::spherical_harmonic({ell, m}, theta, phi));
                    const auto rhs = (m % 2 == 0 ? 1.0 : -1.0) *
                                     sf::spherical_harmonic({ell, -m}, theta, phi);
                    CHECK(std::abs(lhs - rhs) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("spherical harmonic numerical orthonormality") {
    // Gauss-Legendre in cos(theta) x trapezoid in phi, exact for this band.
    const int lmax = 8;
    const auto [xs, ws] = quad::gauss_legendre(lmax + 1);
    const int nphi = 2 * lmax + 2;
    const auto inner = [&](int l1, int m1, int l2, int m2) {
        std::complex<double> acc = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double theta = std::acos(xs[i]);
            for (int j = 0; j < nphi; ++j) {
                const double phi = 2.0 * M_PI * j / nphi;
                acc += ws[i] * (2.0 * M_PI / nphi) * sf::spherical_harmonic({l1, m1}, theta, phi) *
                       std::conj(sf::spherical_harmonic({l2, m2}, theta, phi));
            }
        }
        return acc;
    };
    for (int l1 = 0; l1 <= lmax; ++l1) {
        for (int l2 = 0; l2 <= lmax; ++l2) {
            for (int m1 = -l1; m1 <= l1; ++m1) {
                for (int m2 = -l2; m2 <= l2; ++m2) {
                    if ((l1 * l1 + m1 + l2 * l2 + m2) % 3 != 0)
                        continue;  // subsample the full matrix to keep runtime down
                    const double expect = (l1 == l2 && m1 == m2) ? 1.0 : 0.0;
                    CAPTURE(l1);
                    CAPTURE(m1);
                    CAPTURE(l2);
                    CAPTURE(m2);
                    CHECK(std::abs(inner(l1, m1, l2, m2) - expect) < 1e-8);
                }
            }
        }
    }
}
