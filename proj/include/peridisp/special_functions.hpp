#pragma once

#include <complex>

namespace peridisp::sf {

/// Highest spherical-harmonic degree / spherical-Bessel order supported.
inline constexpr int kMaxDegree = 64;

/// Bessel function of the first kind, order zero.
/// Absolute error below 1e-12 for |x| <= 1e4.
double bessel_j0(double x);

/// Spherical Bessel function j_ell(x), ell in [0, kMaxDegree].
/// j_0(0) = 1, j_ell(0) = 0 for ell > 0 (removable singularities).
double spherical_bessel_j(int ell, double x);

/// Euler Gamma function. Negative non-integer arguments are supported;
/// nonpositive integers throw std::domain_error naming the pole.
double gamma(double x);

struct SphericalHarmonicIndex {
    int ell = 0;
    int m = 0;
};

/// Orthonormal spherical harmonic Y_{ell,m}(theta, phi) with the
/// Condon-Shortley phase, so that conj(Y_{lm}) = (-1)^m Y_{l,-m} and
/// the integral of Y_{lm} conj(Y_{l'm'}) over the sphere is a Kronecker delta.
std::complex<double> spherical_harmonic(SphericalHarmonicIndex idx, double theta, double phi);

/// Fully normalized associated Legendre function \bar P_l^m(x) for m >= 0,
/// defined so that Y_{lm}(theta,phi) = \bar P_l^m(cos theta) exp(i m phi).
double normalized_assoc_legendre(int ell, int m, double x);

} // namespace peridisp::sf
