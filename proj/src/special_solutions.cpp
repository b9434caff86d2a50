#include "bouncer/special_solutions.hpp"

#include <numbers>
#include <stdexcept>

namespace bouncer {

using std::numbers::pi;
using namespace std::complex_literals;

namespace {

const double kSqrtPi = std::sqrt(pi);

PacketParams packet_from_beta(double beta, double hbar, double mass, double x0, double p0) {
    if (!(std::isfinite(beta) && beta > 0.0)) {
        throw std::invalid_argument("beta must be positive and finite");
    }
    if (!(std::isfinite(hbar) && hbar > 0.0)) {
        throw std::invalid_argument("hbar must be positive and finite");
    }
    return PacketParams(x0, p0, beta / hbar, hbar, mass);
}

// w^{-3/2} on the principal branch. Re w = 1, so sqrt(w) has argument in
// (-pi/4, pi/4) and cubing it never wraps; sqrt(w*w*w) would for |t| > sqrt(3) t0.
std::complex<double> inverse_pow_three_halves(std::complex<double> w) {
    const std::complex<double> r = std::sqrt(w);
    return 1.0 / (r * r * r);
}

}  // namespace

SpecialParams::SpecialParams(double beta, double hbar, double mass, double x0, double p0)
    : packet_(packet_from_beta(beta, hbar, mass, x0, p0)) {}

ComplexAmplitude phi_gprime(const SpecialParams& sp, double p, double t) {
    const double alpha = sp.alpha();
    const double dp = p - sp.p0();
    const double amplitude =
        std::sqrt(2.0 * alpha * alpha * alpha / kSqrtPi) * dp * std::exp(-alpha * alpha * dp * dp / 2.0);
    const double phase = -p * sp.x0() / sp.hbar() - p * p * t / (2.0 * sp.mass() * sp.hbar());
    return std::polar(1.0, phase) * amplitude;
}

ComplexAmplitude psi_gprime(const SpecialParams& sp, double x, double t) {
    const PacketParams& p = sp.packet();
    const double beta = sp.beta();
    const std::complex<double> w = p.width_factor(t);
    const double dx = x - p.center(t);

    const std::complex<double> prefactor =
        1i * std::sqrt(2.0 / (kSqrtPi * beta * beta * beta)) * inverse_pow_three_halves(w);
    const double phase = sp.p0() * (x - sp.x0()) / sp.hbar() - sp.p0() * sp.p0() * t / (2.0 * sp.mass() * sp.hbar());
    return prefactor * dx * std::exp(1i * phase - dx * dx / (2.0 * beta * beta * w));
}

Moments gprime_moments(const SpecialParams& sp, double t) {
    const double x_mean = sp.packet().center(t);
    const double x_sd = std::sqrt(1.5) * sp.beta_t(t);
    const double p_sd = std::sqrt(1.5) / sp.alpha();

    Moments m;
    m.time = t;
    m.x_mean = x_mean;
    m.x_sd = x_sd;
    m.x2_mean = x_mean * x_mean + x_sd * x_sd;
    m.p_mean = sp.p0();
    m.p_sd = p_sd;
    m.p2_mean = sp.p0() * sp.p0() + p_sd * p_sd;
    return m;
}

ComplexAmplitude psi0_free(const SpecialParams& sp, double x, double t) {
    const double beta = sp.beta();
    const std::complex<double> w = sp.packet().width_factor(t);
    const std::complex<double> prefactor =
        1i * std::sqrt(2.0 / (kSqrtPi * beta * beta * beta)) * inverse_pow_three_halves(w);
    return prefactor * x * std::exp(-x * x / (2.0 * beta * beta * w));
}

ComplexAmplitude psi0_bouncer(const SpecialParams& sp, double x, double t) {
    if (x > 0.0) {
        return {0.0, 0.0};
    }
    return std::numbers::sqrt2 * psi0_free(sp, x, t);
}

Moments psi0_moments(const SpecialParams& sp, double t) {
    const double bt = sp.beta_t(t);
    const double s = t / sp.t0();
    const double k = sp.hbar() / sp.beta();
    const double s2_ratio = s * s / (1.0 + s * s);

    Moments m;
    m.time = t;
    m.x_mean = -2.0 * bt / kSqrtPi;
    m.x2_mean = 1.5 * bt * bt;
    m.x_sd = (bt / std::numbers::sqrt2) * std::sqrt((3.0 * pi - 8.0) / pi);
    m.p_mean = -(2.0 * k / kSqrtPi) * s / std::hypot(1.0, s);
    m.p2_mean = 1.5 * k * k;
    m.p_sd = k * std::sqrt(1.5 - (4.0 / pi) * s2_ratio);
    return m;
}

double psi0_force(const SpecialParams& sp, double t) {
    const double s = t / sp.t0();
    const double g = 1.0 + s * s;
    return -(2.0 / (sp.alpha() * kSqrtPi * sp.t0())) / (g * std::sqrt(g));
}

double psi0_uncertainty_product(const SpecialParams& sp, double t) {
    return psi0_moments(sp, t).uncertainty_product();
}

double psi0_product_coefficient() { return 0.5 * std::sqrt(3.0 * (3.0 * pi - 8.0) / pi); }

double psi0_product_growth() { return 1.0 - 8.0 / (3.0 * pi); }

double psi0_long_time_ratio() { return (3.0 * pi - 8.0) / pi; }

}  // namespace bouncer
