#pragma once

#include "peridisp/dispersion.hpp"
#include "peridisp/initial_conditions.hpp"

#include <array>
#include <complex>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace peridisp::oracle {

/// Direct-space multiplier of the nonlocal operator on a plane wave:
///   -2 kappa integral over the ball B_delta(0) of (1 - e^{i xi.y}) / |y|^{N+2a}.
/// Computed by cubature without the Bessel reductions used on the spectral
/// side: adaptive radial panels, trapezoid (2D) or analytic-azimuth tensor
/// (3D) angular integration; 1D pairs +-y so the principal value is explicit.
/// The spectral claim is multiplier = -rho omega^2(|xi|).
std::complex<double> k_planewave_multiplier(Dimension dim, const MaterialParams& params,
                                            const std::vector<double>& xi_vector);

struct PlaneWaveCheck {
    Dimension dim{1};
    MaterialParams params;
    std::vector<double> xi_vector;
    std::complex<double> multiplier_direct;
    double multiplier_spectral = 0.0;  // -rho omega^2(|xi|)
    double residual = 0.0;             // |multiplier_direct + rho omega^2(|xi|)|
};

PlaneWaveCheck make_planewave_check(Dimension dim, const MaterialParams& params,
                                    const std::vector<double>& xi_vector);

using ScalarField = std::function<double(const std::array<double, 3>&)>;

/// Applies the nonlocal operator to a sampled field at one point by cubature
/// over the interaction ball. Antipodal pairing bounds the integrand by a C1
/// modulus times r^{1-2a}, which is integrable for a < 1.
double k_apply_sampled(Dimension dim, const MaterialParams& params, const ScalarField& field,
                       const std::array<double, 3>& x);

/// | centered second time difference of the spectral solution minus
///   (K u)/rho | at one space-time point; O(h^2) plus cubature error.
double evolution_residual(Dimension dim, const MaterialParams& params,
                          const RadialSpectrum& v0_hat, const RadialSpectrum& v1_hat, double t,
                          const std::array<double, 3>& x, double h);

struct VerifyRow {
    std::string check;
    int dim = 0;
    double alpha = 0.0;
    double xi_delta = 0.0;
    double value = 0.0;
    double reference = 0.0;
    double rel_err = 0.0;
    bool pass = false;
};

/// The full verification matrix behind the `verify` subcommand: plane-wave
/// multiplier vs spectral dispersion, imaginary-part cancellation, rotation
/// invariance, and the Gamma closed forms vs oscillatory-tail quadrature.
std::vector<VerifyRow> run_verification_matrix(double planewave_tol = 1e-7);

/// CSV export: header `check,dim,alpha,xi_delta,value,reference,rel_err,pass`.
void write_csv(const std::vector<VerifyRow>& rows, std::ostream& out);

} // namespace peridisp::oracle
