#include "peridisp/initial_conditions.hpp"

#include "peridisp/quadrature.hpp"
#include "peridisp/special_functions.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

namespace peridisp {

RadialProfile gaussian_profile(double sigma, Dimension dim) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("gaussian_profile: sigma must be > 0");
    const double amp = std::pow(2.0 * M_PI, dim.value() / 2.0);
    return RadialProfile{
        [amp, sigma](double r) { return amp * std::exp(-r * r / (2.0 * sigma * sigma)); }, sigma};
}

RadialSpectrum gaussian_spectrum(double sigma, Dimension dim) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("gaussian_spectrum: sigma must be > 0");
    const double amp = std::pow(sigma, dim.value());
    return RadialSpectrum{
        [amp, sigma](double xi) { return amp * std::exp(-xi * xi * sigma * sigma / 2.0); },
        1.0 / sigma};
}

RadialSpectrum zero_spectrum(double decay_scale) {
    if (!(decay_scale > 0.0))
        throw std::invalid_argument("zero_spectrum: decay_scale must be > 0");
    return RadialSpectrum{[](double) { return 0.0; }, decay_scale};
}

double radial_spectrum(const RadialProfile& profile, Dimension dim, double xi) {
    if (!profile.eval || !(profile.decay_scale > 0.0))
        throw std::invalid_argument("radial_spectrum: profile must have eval and decay_scale > 0");
    if (!(xi >= 0.0))
        throw std::domain_error("radial_spectrum: xi must be >= 0");
    const double r_cut = 12.0 * profile.decay_scale;
    quad::QuadratureSpec spec;
    spec.rel_tol = 1e-11;
    spec.abs_tol = 1e-14;
    switch (dim.value()) {
    case 1:
        return quad::integrate([&](double r) { return profile.eval(r) * std::cos(xi * r); }, 0.0,
                               r_cut, spec) /
               M_PI;
    case 2:
        return quad::integrate(
                   [&](double r) { return r * profile.eval(r) * sf::bessel_j0(xi * r); }, 0.0,
                   r_cut, spec) /
               (2.0 * M_PI);
    default:
        return quad::integrate(
                   [&](double r) {
                       return r * r * profile.eval(r) * sf::spherical_bessel_j(0, xi * r);
                   },
                   0.0, r_cut, spec) /
               (2.0 * M_PI * M_PI);
    }
}

namespace {

// Spherical quadrature table shared by all channels of one decomposition.
struct SphereRule {
    std::vector<double> theta;
    std::vector<double> wtheta;
    std::vector<double> phi;
    double wphi;
};

std::shared_ptr<const SphereRule> make_sphere_rule(int ell_max) {
    auto rule = std::make_shared<SphereRule>();
    const auto [xs, ws] = quad::gauss_legendre(ell_max + 1);
    rule->theta.resize(xs.size());
    rule->wtheta = ws;
    for (std::size_t i = 0; i < xs.size(); ++i)
        rule->theta[i] = std::acos(xs[i]);
    const int nphi = 2 * ell_max + 2;
    rule->phi.resize(nphi);
    for (int j = 0; j < nphi; ++j)
        rule->phi[j] = 2.0 * M_PI * j / nphi;
    rule->wphi = 2.0 * M_PI / nphi;
    return rule;
}

} // namespace

MultipoleSet multipole_decompose(const AngularField& field, int ell_max, double decay_scale) {
    if (!field)
        throw std::invalid_argument("multipole_decompose: field must be callable");
    if (ell_max < 0 || ell_max > sf::kMaxDegree)
        throw std::invalid_argument("multipole_decompose: ell_max outside supported range [0, " +
                                    std::to_string(sf::kMaxDegree) + "]");
    if (!(decay_scale > 0.0))
        throw std::invalid_argument("multipole_decompose: decay_scale must be > 0");

    const auto rule = make_sphere_rule(ell_max);
    MultipoleSet set;
    set.ell_max = ell_max;
    set.decay_scale = decay_scale;
    for (int ell = 0; ell <= ell_max; ++ell) {
        for (int m = -ell; m <= ell; ++m) {
            // conj(Y_lm) on the quadrature nodes, baked per channel.
            auto conj_y = std::make_shared<std::vector<std::complex<double>>>();
            conj_y->reserve(rule->theta.size() * rule->phi.size());
            for (double th : rule->theta)
                for (double ph : rule->phi)
                    conj_y->push_back(std::conj(sf::spherical_harmonic({ell, m}, th, ph)));
            MultipoleChannel ch;
            ch.v0 = [field, rule, conj_y](double r) {
                std::complex<double> acc = 0.0;
                std::size_t k = 0;
                for (std::size_t i = 0; i < rule->theta.size(); ++i)
                    for (std::size_t j = 0; j < rule->phi.size(); ++j, ++k)
                        acc += rule->wtheta[i] * rule->wphi * field(r, rule->theta[i], rule->phi[j]) *
                               (*conj_y)[k];
                return acc;
            };
            set.coeffs[{ell, m}] = std::move(ch);
        }
    }
    return set;
}

MultipoleSet dipole_initial_condition(double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("dipole_initial_condition: sigma must be > 0");
    MultipoleSet set;
    set.ell_max = 1;
    set.decay_scale = sigma;
    const double amp = 4.0 * M_PI * M_PI * std::sqrt(2.0 / 3.0);
    MultipoleChannel ch;
    ch.v0 = [amp, sigma](double r) {
        return std::complex<double>(amp * std::exp(-r * r / (2.0 * sigma * sigma)) * r, 0.0);
    };
    set.coeffs[{1, 0}] = std::move(ch);
    return set;
}

std::complex<double> multipole_reconstruct(const MultipoleSet& set, double r, double theta,
                                           double phi) {
    std::complex<double> acc = 0.0;
    for (const auto& [lm, ch] : set.coeffs) {
        if (!ch.v0)
            continue;
        acc += ch.v0(r) * sf::spherical_harmonic({lm.first, lm.second}, theta, phi);
    }
    return acc;
}

} // namespace peridisp
