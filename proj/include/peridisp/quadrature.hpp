#pragma once

#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace peridisp::quad {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-13;
    int max_subdivisions = 1 << 16;

    void validate() const;
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    int subdivisions = 0;
};

/// Thrown when an integral cannot be brought below tolerance; carries the
/// best estimate obtained so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}
    double best_estimate() const { return best_estimate_; }
    double error_estimate() const { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

/// Globally adaptive Gauss-Kronrod (7,15) integration of f over [a, b].
/// Terminates when the summed error estimate falls below
/// max(abs_tol, rel_tol * |I|); otherwise returns converged = false with the
/// best estimate.
IntegralResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureSpec& spec = {});

/// As adaptive_integrate, but throws QuadratureError on non-convergence.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

enum class OscillatoryKernel { cosine, bessel_j0, spherical_j0 };

/// Evaluates I(upper) = integral_0^upper (1 - K(tau)) / tau^{1+2 alpha} dtau
/// for K in {cos, J0, j0}. For an infinite upper limit the integral is split
/// at T = max(1e3, 50/(2 alpha)): [0, T] adaptively, the constant part of the
/// tail analytically as T^{-2 alpha}/(2 alpha), and the oscillatory remainder
/// by inter-zero panel sums accelerated with an Euler transform.
double integrate_oscillatory_tail(OscillatoryKernel kind, double alpha,
                                  double upper = std::numeric_limits<double>::infinity());

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

} // namespace peridisp::quad
