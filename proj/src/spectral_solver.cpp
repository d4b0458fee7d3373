#include "peridisp/spectral_solver.hpp"

#include "peridisp/csv_format.hpp"
#include "peridisp/quadrature.hpp"
#include "peridisp/special_functions.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace peridisp {

namespace {

double sinc(double x) {
    if (std::fabs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// Composite Gauss-Legendre nodes on [0, xi_max] with panels narrow enough to
// resolve the oscillation of the synthesis kernel at radius r_max.
struct XiGrid {
    std::vector<double> xi;
    std::vector<double> w;
};

XiGrid make_xi_grid(double xi_max, double r_max, double delta) {
    const double panel_width = M_PI / (2.0 * std::max(r_max, delta));
    const int n_panels = std::max(1, static_cast<int>(std::ceil(xi_max / panel_width)));
    const auto [nodes, weights] = quad::gauss_legendre(16);
    XiGrid g;
    g.xi.reserve(16 * n_panels);
    g.w.reserve(16 * n_panels);
    const double h = xi_max / n_panels;
    for (int p = 0; p < n_panels; ++p) {
        const double c = (p + 0.5) * h;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            g.xi.push_back(c + 0.5 * h * nodes[i]);
            g.w.push_back(0.5 * h * weights[i]);
        }
    }
    return g;
}

double synthesis_kernel(Dimension dim, double x) {
    switch (dim.value()) {
    case 1: return std::cos(x);
    case 2: return sf::bessel_j0(x);
    default: return x == 0.0 ? 1.0 : std::sin(x) / x;
    }
}

// Radial measure of the inversion formula (the 1D one is the even-data fold).
double synthesis_measure(Dimension dim, double xi) {
    switch (dim.value()) {
    case 1: return 2.0;
    case 2: return 2.0 * M_PI * xi;
    default: return 4.0 * M_PI * xi * xi;
    }
}

} // namespace

std::complex<double> evolve_mode(std::complex<double> v0_hat, std::complex<double> v1_hat,
                                 double omega, double t) {
    if (!(omega >= 0.0))
        throw std::domain_error("evolve_mode: omega must be >= 0");
    return v0_hat * std::cos(omega * t) + v1_hat * (t * sinc(omega * t));
}

std::complex<double> mode_velocity(std::complex<double> v0_hat, std::complex<double> v1_hat,
                                   double omega, double t) {
    if (!(omega >= 0.0))
        throw std::domain_error("mode_velocity: omega must be >= 0");
    return -v0_hat * omega * std::sin(omega * t) + v1_hat * std::cos(omega * t);
}

RadialEvaluator::RadialEvaluator(Dimension dim, const MaterialParams& params,
                                 const RadialSpectrum& v0_hat, const RadialSpectrum& v1_hat,
                                 double r_max)
    : dim_(dim) {
    params.validate();
    if (!(r_max >= 0.0))
        throw std::invalid_argument("RadialEvaluator: r_max must be >= 0");
    if (!v0_hat.eval || !v1_hat.eval)
        throw std::invalid_argument("RadialEvaluator: spectra must be callable");
    if (!(v0_hat.decay_scale > 0.0) || !(v1_hat.decay_scale > 0.0))
        throw std::invalid_argument("RadialEvaluator: spectrum decay scales must be > 0");

    xi_max_ = 10.0 * std::max(v0_hat.decay_scale, v1_hat.decay_scale);
    XiGrid grid = make_xi_grid(xi_max_, r_max, params.delta);
    xi_ = std::move(grid.xi);
    weight_.resize(xi_.size());
    v0_.resize(xi_.size());
    v1_.resize(xi_.size());
    const std::vector<double> w2 = omega_squared_grid(dim, params, xi_);
    omega_.resize(xi_.size());
    for (std::size_t i = 0; i < xi_.size(); ++i) {
        omega_[i] = std::sqrt(std::max(0.0, w2[i]));
        weight_[i] = grid.w[i] * synthesis_measure(dim, xi_[i]);
        v0_[i] = v0_hat.eval(xi_[i]);
        v1_[i] = v1_hat.eval(xi_[i]);
    }
}

double RadialEvaluator::operator()(double t, double r) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < xi_.size(); ++i) {
        const double mode = v0_[i] * std::cos(omega_[i] * t) + v1_[i] * (t * sinc(omega_[i] * t));
        acc += weight_[i] * synthesis_kernel(dim_, xi_[i] * r) * mode;
    }
    return acc;
}

double radial_solution(Dimension dim, const MaterialParams& params, const RadialSpectrum& v0_hat,
                       const RadialSpectrum& v1_hat, double t, double r) {
    if (!(r >= 0.0))
        throw std::domain_error("radial_solution: r must be >= 0");
    const RadialEvaluator eval(dim, params, v0_hat, v1_hat, std::max(r, params.delta));
    return eval(t, r);
}

AnisotropicEvaluator::AnisotropicEvaluator(const MaterialParams& params, const MultipoleSet& data,
                                           double r_max) {
    params.validate();
    if (data.ell_max > kMaxEll)
        throw std::invalid_argument("AnisotropicEvaluator: ell_max exceeds the supported " +
                                    std::to_string(kMaxEll));
    if (!(data.decay_scale > 0.0))
        throw std::invalid_argument("AnisotropicEvaluator: decay_scale must be > 0");

    const double sigma_r = data.decay_scale;
    const double xi_max = 10.0 / sigma_r;
    XiGrid grid = make_xi_grid(xi_max, r_max, params.delta);
    xi_ = std::move(grid.xi);
    const std::vector<double> w2 = omega_squared_grid(Dimension{3}, params, xi_);
    omega_.resize(xi_.size());
    weight_.resize(xi_.size());
    for (std::size_t i = 0; i < xi_.size(); ++i) {
        omega_[i] = std::sqrt(std::max(0.0, w2[i]));
        weight_[i] = grid.w[i] * (2.0 / M_PI) * xi_[i] * xi_[i];
    }

    // Inner transforms v~(xi) = int_0^inf v(s) s^2 j_L(xi s) ds on a shared
    // s-grid fine enough for the fastest kernel oscillation.
    const double s_cut = 12.0 * sigma_r;
    const double s_panel = M_PI / (2.0 * xi_max);
    const int ns_panels = std::max(1, static_cast<int>(std::ceil(s_cut / s_panel)));
    const auto [nodes, weights] = quad::gauss_legendre(16);
    std::vector<double> s_nodes, s_weights;
    const double h = s_cut / ns_panels;
    for (int p = 0; p < ns_panels; ++p) {
        const double c = (p + 0.5) * h;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            s_nodes.push_back(c + 0.5 * h * nodes[i]);
            s_weights.push_back(0.5 * h * weights[i]);
        }
    }

    for (const auto& [lm, ch] : data.coeffs) {
        const auto [ell, m] = lm;
        if (ell < 0 || ell > data.ell_max || std::abs(m) > ell)
            throw std::invalid_argument("AnisotropicEvaluator: invalid channel index");
        Channel c;
        c.ell = ell;
        c.m = m;
        for (int which = 0; which < 2; ++which) {
            const auto& fn = which == 0 ? ch.v0 : ch.v1;
            auto& out = which == 0 ? c.v0_t : c.v1_t;
            if (!fn)
                continue;
            std::vector<std::complex<double>> samples(s_nodes.size());
            for (std::size_t k = 0; k < s_nodes.size(); ++k)
                samples[k] = fn(s_nodes[k]) * s_nodes[k] * s_nodes[k] * s_weights[k];
            out.resize(xi_.size());
            for (std::size_t i = 0; i < xi_.size(); ++i) {
                std::complex<double> acc = 0.0;
                for (std::size_t k = 0; k < s_nodes.size(); ++k)
                    acc += samples[k] * sf::spherical_bessel_j(ell, xi_[i] * s_nodes[k]);
                out[i] = acc;
            }
        }
        channels_.push_back(std::move(c));
    }
}

std::complex<double> AnisotropicEvaluator::eval_complex(double t, double r, double theta,
                                                        double phi) const {
    std::complex<double> acc = 0.0;
    for (const Channel& ch : channels_) {
        if (ch.v0_t.empty() && ch.v1_t.empty())
            continue;
        std::complex<double> radial = 0.0;
        for (std::size_t i = 0; i < xi_.size(); ++i) {
            const double jl = sf::spherical_bessel_j(ch.ell, xi_[i] * r);
            std::complex<double> mode = 0.0;
            if (!ch.v0_t.empty())
                mode += ch.v0_t[i] * std::cos(omega_[i] * t);
            if (!ch.v1_t.empty())
                mode += ch.v1_t[i] * (t * sinc(omega_[i] * t));
            radial += weight_[i] * jl * mode;
        }
        acc += radial * sf::spherical_harmonic({ch.ell, ch.m}, theta, phi);
    }
    return acc;
}

double AnisotropicEvaluator::operator()(double t, double r, double theta, double phi) const {
    return eval_complex(t, r, theta, phi).real();
}

double anisotropic_solution_3d(const MaterialParams& params, const MultipoleSet& data, double t,
                               double r, double theta, double phi) {
    if (!(r >= 0.0))
        throw std::domain_error("anisotropic_solution_3d: r must be >= 0");
    const AnisotropicEvaluator eval(params, data, std::max(r, params.delta));
    return eval(t, r, theta, phi);
}

std::vector<FieldSnapshot> field_snapshot(const EvolutionRequest& request) {
    request.params.validate();
    for (double t : request.times)
        if (!(t >= 0.0))
            throw std::invalid_argument("field_snapshot: times must be >= 0");
    for (std::size_t i = 0; i < request.radii.size(); ++i) {
        if (!(request.radii[i] >= 0.0))
            throw std::invalid_argument("field_snapshot: radii must be >= 0");
        if (i > 0 && request.radii[i] < request.radii[i - 1])
            throw std::invalid_argument("field_snapshot: radii must be sorted");
    }

    double r_max = request.params.delta;
    for (double r : request.radii)
        r_max = std::max(r_max, r);

    std::vector<FieldSnapshot> out;
    if (request.times.empty())
        return out;
    if (request.multipoles) {
        if (request.dim.value() != 3)
            throw std::invalid_argument("field_snapshot: multipole data requires dim = 3");
        const AnisotropicEvaluator eval(request.params, *request.multipoles, r_max);
        for (double t : request.times) {
            FieldSnapshot snap{t, request.dim, true, {}, {}};
            for (double r : request.radii)
                for (double theta : request.thetas)
                    for (double phi : request.phis) {
                        snap.points.push_back({r, theta, phi});
                        snap.values.push_back(eval(t, r, theta, phi));
                    }
            out.push_back(std::move(snap));
        }
    } else {
        const RadialEvaluator eval(request.dim, request.params, request.v0_hat, request.v1_hat,
                                   r_max);
        for (double t : request.times) {
            FieldSnapshot snap{t, request.dim, false, {}, {}};
            for (double r : request.radii) {
                snap.points.push_back({r, 0.0, 0.0});
                snap.values.push_back(eval(t, r));
            }
            out.push_back(std::move(snap));
        }
    }
    for (const FieldSnapshot& snap : out)
        for (double v : snap.values)
            if (!std::isfinite(v))
                throw std::runtime_error("field_snapshot: non-finite sample value");
    return out;
}

void write_csv(const std::vector<FieldSnapshot>& snapshots, std::ostream& out, bool anisotropic) {
    if (!snapshots.empty())
        anisotropic = snapshots.front().anisotropic;
    out << (anisotropic ? "t,r,theta,phi,u\n" : "t,r,u\n");
    for (const FieldSnapshot& snap : snapshots) {
        for (std::size_t i = 0; i < snap.points.size(); ++i) {
            out << format_float(snap.time) << ',' << format_float(snap.points[i].r);
            if (anisotropic)
                out << ',' << format_float(snap.points[i].theta) << ','
                    << format_float(snap.points[i].phi);
            out << ',' << format_float(snap.values[i]) << '\n';
        }
    }
}

} // namespace peridisp
