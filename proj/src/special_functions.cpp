#include "peridisp/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace peridisp::sf {

namespace {

// Power series sum for J0; T is the accumulation type.
template <typename T>
T j0_series(T x) {
    const T q = x * x / T(4);
    T term = T(1);
    T sum = T(1);
    for (int m = 1; m < 80; ++m) {
        term *= -q / (T(m) * T(m));
        sum += term;
        if (std::abs(term) < T(1e-20) * (std::abs(sum) + T(1)))
            break;
    }
    return sum;
}

// Hankel asymptotic expansion, valid for large x. Terms a_k follow the
// recurrence a_k = a_{k-1} (2k-1)^2 / (8k); the series is truncated at its
// smallest term.
double j0_asymptotic(double x) {
    double p = 1.0;  // sum over even k with alternating sign
    double q = 0.0;  // sum over odd k with alternating sign; leading -1/(8x)
    double a = 1.0;
    double prev = 1.0;
    for (int k = 1; k <= 40; ++k) {
        a *= (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k);
        const double term = a / std::pow(x, k);
        if (term > prev)
            break;  // asymptotic series started diverging
        prev = term;
        const int sign = ((k / 2) % 2 == 0) ? 1 : -1;
        if (k % 2 == 1)
            q += -sign * term;  // k = 1 gives -1/(8x)
        else
            p += sign * term;
        if (term < 1e-17)
            break;
    }
    const double chi = x - 0.25 * M_PI;
    return std::sqrt(2.0 / (M_PI * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

} // namespace

double bessel_j0(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("bessel_j0: non-finite argument");
    x = std::fabs(x);
    if (x <= 9.0)
        return j0_series<double>(x);
    if (x < 14.0)
        return static_cast<double>(j0_series<long double>(static_cast<long double>(x)));
    return j0_asymptotic(x);
}

double spherical_bessel_j(int ell, double x) {
    if (ell < 0 || ell > kMaxDegree)
        throw std::domain_error("spherical_bessel_j: order out of range [0, " +
                                std::to_string(kMaxDegree) + "]");
    if (!std::isfinite(x))
        throw std::domain_error("spherical_bessel_j: non-finite argument");
    const double ax = std::fabs(x);
    const int parity = (ell % 2 == 0) ? 1 : -1;
    const double sign = (x < 0.0) ? parity : 1;

    if (ax == 0.0)
        return ell == 0 ? 1.0 : 0.0;
    if (ell == 0)
        return sign * std::sin(ax) / ax;

    if (ax > static_cast<double>(ell)) {
        // Upward recurrence, stable when x exceeds the order.
        double jm = std::sin(ax) / ax;
        double j = std::sin(ax) / (ax * ax) - std::cos(ax) / ax;
        for (int l = 1; l < ell; ++l) {
            const double jp = (2.0 * l + 1.0) / ax * j - jm;
            jm = j;
            j = jp;
        }
        return sign * j;
    }

    // Downward (Miller) recurrence, normalized against j0.
    const int lstart = ell + 24 + static_cast<int>(std::sqrt(40.0 * ell));
    double jp = 0.0;
    double j = 1e-300;
    double result = 0.0;
    for (int l = lstart; l >= 1; --l) {
        const double jm = (2.0 * l + 1.0) / ax * j - jp;
        jp = j;
        j = jm;
        if (l - 1 == ell)
            result = j;
        // Rescale to avoid overflow on the way down.
        if (std::fabs(j) > 1e250) {
            j *= 1e-250;
            jp *= 1e-250;
            result *= 1e-250;
        }
    }
    return sign * result * (std::sin(ax) / ax) / j;
}

double gamma(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("gamma: non-finite argument");
    if (x <= 0.0 && x == std::floor(x))
        throw std::domain_error("gamma: pole at x = " + std::to_string(static_cast<long>(x)));
    return std::tgamma(x);
}

double normalized_assoc_legendre(int ell, int m, double x) {
    if (ell < 0 || ell > kMaxDegree || m < 0 || m > ell)
        throw std::domain_error("normalized_assoc_legendre: invalid (ell, m)");
    x = std::clamp(x, -1.0, 1.0);
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));

    // \bar P_m^m by the diagonal recurrence (Condon-Shortley phase included).
    double pmm = std::sqrt(1.0 / (4.0 * M_PI));
    for (int k = 1; k <= m; ++k)
        pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
    if (ell == m)
        return pmm;

    double pm1 = pmm;                                    // \bar P_m^m
    double p = std::sqrt(2.0 * m + 3.0) * x * pmm;       // \bar P_{m+1}^m
    for (int l = m + 2; l <= ell; ++l) {
        const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
        const double b = std::sqrt(((l - 1.0) * (l - 1.0) - static_cast<double>(m) * m) /
                                   (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
        const double pnext = a * (x * p - b * pm1);
        pm1 = p;
        p = pnext;
    }
    return p;
}

std::complex<double> spherical_harmonic(SphericalHarmonicIndex idx, double theta, double phi) {
    const int ell = idx.ell;
    const int m = idx.m;
    if (ell < 0 || ell > kMaxDegree || std::abs(m) > ell)
        throw std::domain_error("spherical_harmonic: invalid index (ell=" + std::to_string(ell) +
                                ", m=" + std::to_string(m) + ")");
    if (!std::isfinite(theta) || !std::isfinite(phi))
        throw std::domain_error("spherical_harmonic: non-finite angles");
    const int am = std::abs(m);
    const double plm = normalized_assoc_legendre(ell, am, std::cos(theta));
    const std::complex<double> y = plm * std::exp(std::complex<double>(0.0, am * phi));
    if (m >= 0)
        return y;
    const double parity = (am % 2 == 0) ? 1.0 : -1.0;
    return parity * std::conj(y);
}

} // namespace peridisp::sf
