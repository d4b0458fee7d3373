#include "peridisp/quadrature.hpp"

#include "peridisp/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace peridisp::quad {

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("QuadratureSpec: tolerances must be strictly positive");
    if (max_subdivisions < 1)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
}

namespace {

// Gauss-Kronrod (7,15) nodes and weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel kronrod15(const std::function<double(double)>& f, double a, double b) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);

    double fv1[7], fv2[7];
    const double fc = f(centr);
    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    double resabs = std::fabs(resk);
    for (int j = 0; j < 3; ++j) {
        const int jtw = 2 * j + 1;  // xgk index of the Gauss points (0-based)
        const double absc = hlgth * kXgk[jtw];
        fv1[jtw] = f(centr - absc);
        fv2[jtw] = f(centr + absc);
        const double fsum = fv1[jtw] + fv2[jtw];
        resg += kWg[j] * fsum;
        resk += kWgk[jtw] * fsum;
        resabs += kWgk[jtw] * (std::fabs(fv1[jtw]) + std::fabs(fv2[jtw]));
    }
    for (int j = 0; j < 4; ++j) {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * kXgk[jtwm1];
        fv1[jtwm1] = f(centr - absc);
        fv2[jtwm1] = f(centr + absc);
        const double fsum = fv1[jtwm1] + fv2[jtwm1];
        resk += kWgk[jtwm1] * fsum;
        resabs += kWgk[jtwm1] * (std::fabs(fv1[jtwm1]) + std::fabs(fv2[jtwm1]));
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

    const double value = resk * hlgth;
    resabs *= std::fabs(hlgth);
    resasc *= std::fabs(hlgth);
    double abserr = std::fabs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    const double epmach = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * epmach))
        abserr = std::max(epmach * 50.0 * resabs, abserr);

    if (!std::isfinite(value))
        throw QuadratureError("adaptive_integrate: non-finite integrand value", value, abserr);
    return Panel{a, b, value, abserr};
}

} // namespace

IntegralResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureSpec& spec) {
    spec.validate();
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("adaptive_integrate: requires finite a < b");

    std::priority_queue<Panel> queue;
    queue.push(kronrod15(f, a, b));
    double total_value = queue.top().value;
    double total_error = queue.top().error;
    double settled_value = 0.0;  // panels too narrow to split further
    double settled_error = 0.0;
    int subdivisions = 1;

    const double width_floor = std::numeric_limits<double>::epsilon() *
                               std::max({std::fabs(a), std::fabs(b), 1.0});

    while (subdivisions < spec.max_subdivisions && !queue.empty()) {
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(total_value + settled_value));
        if (total_error + settled_error <= tol)
            break;
        const Panel worst = queue.top();
        queue.pop();
        if (worst.b - worst.a < width_floor) {
            settled_value += worst.value;
            settled_error += worst.error;
            total_value -= worst.value;
            total_error -= worst.error;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = kronrod15(f, worst.a, mid);
        const Panel right = kronrod15(f, mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++subdivisions;
    }

    IntegralResult res;
    res.value = total_value + settled_value;
    res.error_estimate = total_error + settled_error;
    res.subdivisions = subdivisions;
    res.converged =
        res.error_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(res.value));
    return res;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
    const IntegralResult r = adaptive_integrate(f, a, b, spec);
    if (!r.converged)
        throw QuadratureError("integrate: no convergence after " + std::to_string(r.subdivisions) +
                                  " subdivisions",
                              r.value, r.error_estimate);
    return r.value;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: n must be >= 1");
    std::vector<double> x(n), w(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre P_n(xi) and its derivative by recurrence.
            double p0 = 1.0, p1 = xi;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
            const double dx = p1 / dp;
            xi -= dx;
            if (std::fabs(dx) < 1e-15)
                break;
        }
        x[i] = -xi;
        x[n - 1 - i] = xi;
        const double wi = 2.0 / ((1.0 - xi * xi) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    return {x, w};
}

namespace {

double kernel_value(OscillatoryKernel kind, double tau) {
    switch (kind) {
    case OscillatoryKernel::cosine:
        return std::cos(tau);
    case OscillatoryKernel::bessel_j0:
        return sf::bessel_j0(tau);
    case OscillatoryKernel::spherical_j0:
        return tau == 0.0 ? 1.0 : std::sin(tau) / tau;
    }
    throw std::logic_error("kernel_value: unreachable");
}

// k-th positive zero of the kernel (k = 1, 2, ...). For J0 the McMahon
// expansion is used; its error is far below the panel widths involved.
double kernel_zero(OscillatoryKernel kind, long k) {
    switch (kind) {
    case OscillatoryKernel::cosine:
        return (k - 0.5) * M_PI;
    case OscillatoryKernel::spherical_j0:
        return k * M_PI;
    case OscillatoryKernel::bessel_j0: {
        const double beta = (k - 0.25) * M_PI;
        const double b8 = 8.0 * beta;
        return beta + 1.0 / b8 - 124.0 / (3.0 * b8 * b8 * b8);
    }
    }
    throw std::logic_error("kernel_zero: unreachable");
}

// integral_{z_k}^{z_{k+1}} K(tau) tau^{-1-2 alpha} dtau by fixed Gauss rule.
double interzero_panel(OscillatoryKernel kind, double alpha, double za, double zb,
                       const std::vector<double>& nodes, const std::vector<double>& weights) {
    const double c = 0.5 * (za + zb);
    const double h = 0.5 * (zb - za);
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double tau = c + h * nodes[i];
        s += weights[i] * kernel_value(kind, tau) * std::pow(tau, -1.0 - 2.0 * alpha);
    }
    return s * h;
}

// Euler transform (repeated averaging of partial sums) for an eventually
// alternating series.
double euler_accelerate(const std::vector<double>& terms) {
    std::vector<double> s(terms.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        acc += terms[i];
        s[i] = acc;
    }
    while (s.size() > 1) {
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            s[i] = 0.5 * (s[i] + s[i + 1]);
        s.pop_back();
    }
    return s[0];
}

} // namespace

double integrate_oscillatory_tail(OscillatoryKernel kind, double alpha, double upper) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("integrate_oscillatory_tail: alpha must lie in (0, 1)");
    if (std::isnan(upper) || upper < 0.0)
        throw std::domain_error("integrate_oscillatory_tail: upper must be >= 0 or infinite");
    if (upper == 0.0)
        return 0.0;

    const auto integrand = [&](double tau) {
        return (1.0 - kernel_value(kind, tau)) * std::pow(tau, -1.0 - 2.0 * alpha);
    };
    QuadratureSpec spec;
    spec.rel_tol = 1e-12;
    spec.abs_tol = 1e-15;

    if (std::isfinite(upper))
        return integrate(integrand, 0.0, upper, spec);

    const double t_split = std::max(1e3, 50.0 / (2.0 * alpha));
    const double head = integrate(integrand, 0.0, t_split, spec);
    const double constant_tail = std::pow(t_split, -2.0 * alpha) / (2.0 * alpha);

    // Oscillatory remainder integral_{T}^inf K(tau) tau^{-1-2 alpha} dtau:
    // a short lead-in up to the first kernel zero past T, then inter-zero
    // panels summed with Euler acceleration.
    long k = 1;
    while (kernel_zero(kind, k) < t_split)
        ++k;
    const double first_zero = kernel_zero(kind, k);
    double osc = integrate([&](double tau) { return kernel_value(kind, tau) *
                                                    std::pow(tau, -1.0 - 2.0 * alpha); },
                           t_split, first_zero, spec);

    constexpr int kTailTerms = 48;
    const auto [nodes, weights] = gauss_legendre(15);
    std::vector<double> terms(kTailTerms);
    for (int i = 0; i < kTailTerms; ++i)
        terms[i] = interzero_panel(kind, alpha, kernel_zero(kind, k + i), kernel_zero(kind, k + i + 1),
                                   nodes, weights);
    osc += euler_accelerate(terms);

    return head + constant_tail - osc;
}

} // namespace peridisp::quad
