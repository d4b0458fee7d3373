#pragma once

#include "peridisp/dispersion.hpp"

#include <complex>
#include <functional>
#include <map>
#include <utility>

namespace peridisp {

/// Radial real-space data r >= 0 -> value. decay_scale is the characteristic
/// width used to truncate radial quadratures (at 12 * decay_scale).
struct RadialProfile {
    std::function<double(double)> eval;
    double decay_scale = 1.0;
};

/// Radial Fourier-space data xi >= 0 -> value. decay_scale is the width in
/// xi; synthesis integrals are truncated at 10 * decay_scale.
struct RadialSpectrum {
    std::function<double(double)> eval;
    double decay_scale = 1.0;
};

/// r -> (2 pi)^{N/2} exp(-r^2 / (2 sigma^2))
RadialProfile gaussian_profile(double sigma, Dimension dim);

/// xi -> sigma^N exp(-xi^2 sigma^2 / 2), the transform of gaussian_profile.
RadialSpectrum gaussian_spectrum(double sigma, Dimension dim);

/// Identically-zero spectrum carrying an explicit truncation scale.
RadialSpectrum zero_spectrum(double decay_scale);

/// Forward radial transform of a profile at one wavenumber, normalized so the
/// synthesis formulas invert it exactly:
///   N=1: (1/pi)    int_0^inf h(r) cos(xi r) dr        (even data)
///   N=2: (1/2pi)   int_0^inf r   h(r) J0(xi r) dr
///   N=3: (1/2pi^2) int_0^inf r^2 h(r) j0(xi r) dr
double radial_spectrum(const RadialProfile& profile, Dimension dim, double xi);

/// One (ell, m) channel: complex radial coefficient functions for the initial
/// displacement (v0) and velocity (v1). An empty std::function means zero.
struct MultipoleChannel {
    std::function<std::complex<double>(double)> v0;
    std::function<std::complex<double>(double)> v1;
};

struct MultipoleSet {
    int ell_max = 0;
    double decay_scale = 1.0;
    std::map<std::pair<int, int>, MultipoleChannel> coeffs;
};

using AngularField = std::function<std::complex<double>(double r, double theta, double phi)>;

/// Projects field(r, n) onto spherical harmonics: v_{lm}(r) = integral over
/// the unit sphere of field(r, n) conj(Y_lm(n)). Quadrature uses ell_max + 1
/// Gauss-Legendre nodes in cos(theta) and 2 ell_max + 2 uniform nodes in phi,
/// exact for fields band-limited at ell_max. The channels are evaluated
/// lazily at each requested radius and land in the v0 slots.
MultipoleSet multipole_decompose(const AngularField& field, int ell_max, double decay_scale = 1.0);

/// The dipolar Gaussian datum: the single channel (ell=1, m=0) with
/// v0(r) = 4 pi^2 sqrt(2/3) r exp(-r^2 / (2 sigma^2)) and zero velocity.
MultipoleSet dipole_initial_condition(double sigma);

/// Sums v0_{lm}(r) Y_lm(n) over the stored channels.
std::complex<double> multipole_reconstruct(const MultipoleSet& set, double r, double theta,
                                           double phi);

} // namespace peridisp
