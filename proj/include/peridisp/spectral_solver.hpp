#pragma once

#include "peridisp/dispersion.hpp"
#include "peridisp/initial_conditions.hpp"

#include <complex>
#include <iosfwd>
#include <optional>
#include <vector>

namespace peridisp {

/// One Fourier mode of the evolution: v0 cos(omega t) + v1 sin(omega t)/omega,
/// with the omega -> 0 limit of the second term taken as t.
std::complex<double> evolve_mode(std::complex<double> v0_hat, std::complex<double> v1_hat,
                                 double omega, double t);

/// Time derivative of evolve_mode; used for per-mode energy checks.
std::complex<double> mode_velocity(std::complex<double> v0_hat, std::complex<double> v1_hat,
                                   double omega, double t);

/// Precomputed radial synthesis for one (dim, params, spectra) combination.
/// Quadrature nodes, omega values, and spectrum samples are fixed at
/// construction, so evaluation is a deterministic weighted sum; grids should
/// not extend past the r_max the evaluator was built for.
class RadialEvaluator {
public:
    RadialEvaluator(Dimension dim, const MaterialParams& params, const RadialSpectrum& v0_hat,
                    const RadialSpectrum& v1_hat, double r_max);

    double operator()(double t, double r) const;

    double xi_max() const { return xi_max_; }
    std::size_t node_count() const { return xi_.size(); }

private:
    Dimension dim_;
    double xi_max_;
    std::vector<double> xi_;
    std::vector<double> weight_;  // quadrature weight times the radial measure
    std::vector<double> omega_;
    std::vector<double> v0_;
    std::vector<double> v1_;
};

/// u(t, r) for radial initial data; builds a one-off evaluator.
double radial_solution(Dimension dim, const MaterialParams& params, const RadialSpectrum& v0_hat,
                       const RadialSpectrum& v1_hat, double t, double r);

/// Precomputed spherical-harmonic synthesis of the anisotropic 3D solution.
/// The inner radial transforms of every channel are cached on the shared
/// wavenumber nodes at construction and reused across all (t, r, angles).
class AnisotropicEvaluator {
public:
    AnisotropicEvaluator(const MaterialParams& params, const MultipoleSet& data, double r_max);

    double operator()(double t, double r, double theta, double phi) const;
    std::complex<double> eval_complex(double t, double r, double theta, double phi) const;

    static constexpr int kMaxEll = 8;

private:
    struct Channel {
        int ell;
        int m;
        std::vector<std::complex<double>> v0_t;  // transformed onto the xi nodes
        std::vector<std::complex<double>> v1_t;
    };
    std::vector<double> xi_;
    std::vector<double> weight_;  // GL weight times (2/pi) xi^2
    std::vector<double> omega_;
    std::vector<Channel> channels_;
};

double anisotropic_solution_3d(const MaterialParams& params, const MultipoleSet& data, double t,
                               double r, double theta, double phi);

struct SamplePoint {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

struct FieldSnapshot {
    double time = 0.0;
    Dimension dim{1};
    bool anisotropic = false;
    std::vector<SamplePoint> points;
    std::vector<double> values;
};

struct EvolutionRequest {
    Dimension dim{2};
    MaterialParams params;
    RadialSpectrum v0_hat;
    RadialSpectrum v1_hat;
    std::optional<MultipoleSet> multipoles;  // engaged => anisotropic 3D run
    std::vector<double> times;
    std::vector<double> radii;
    std::vector<double> thetas;
    std::vector<double> phis;
};

/// One snapshot per requested time, sampled on the request's grid.
std::vector<FieldSnapshot> field_snapshot(const EvolutionRequest& request);

/// CSV export: header `t,r,u` for radial snapshots, `t,r,theta,phi,u` for
/// anisotropic ones; 17 significant digits. The flag picks the header even
/// when the snapshot list is empty.
void write_csv(const std::vector<FieldSnapshot>& snapshots, std::ostream& out,
               bool anisotropic = false);

} // namespace peridisp
