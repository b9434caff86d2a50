#include "bouncer/core_packets.hpp"

#include <numbers>

namespace bouncer {

using std::numbers::pi;
using namespace std::complex_literals;

ComplexAmplitude psi_free(const PacketParams& params, double x, double t) {
    const double beta = params.beta();
    const double hbar = params.hbar();
    const std::complex<double> w = params.width_factor(t);
    const double dx = x - params.center(t);

    const std::complex<double> prefactor = 1.0 / std::sqrt(std::sqrt(pi) * beta * w);
    const double phase = params.p0() * (x - params.x0()) / hbar
                         - params.p0() * params.p0() * t / (2.0 * params.mass() * hbar);
    const std::complex<double> exponent = 1i * phase - dx * dx / (2.0 * beta * beta * w);
    return prefactor * std::exp(exponent);
}

ComplexAmplitude phi_free(const PacketParams& params, double p, double t) {
    const double alpha = params.alpha();
    const double hbar = params.hbar();
    const double dp = p - params.p0();
    const double amplitude = std::sqrt(alpha / std::sqrt(pi)) * std::exp(-alpha * alpha * dp * dp / 2.0);
    const double phase = -p * params.x0() / hbar - p * p * t / (2.0 * params.mass() * hbar);
    return std::polar(amplitude, phase);
}

Moments free_moments(const PacketParams& params, double t) {
    const double x_mean = params.center(t);
    const double x_sd = params.beta_t(t) / std::numbers::sqrt2;
    const double p_mean = params.p0();
    const double p_sd = 1.0 / (params.alpha() * std::numbers::sqrt2);

    Moments m;
    m.time = t;
    m.x_mean = x_mean;
    m.x_sd = x_sd;
    m.x2_mean = x_mean * x_mean + x_sd * x_sd;
    m.p_mean = p_mean;
    m.p_sd = p_sd;
    m.p2_mean = p_mean * p_mean + p_sd * p_sd;
    return m;
}

double free_uncertainty_product(const PacketParams& params, double t) {
    return 0.5 * params.hbar() * std::hypot(1.0, t / params.t0());
}

ComplexAmplitude autocorrelation_free(const PacketParams& params, double t) {
    // <psi(0)|psi(t)> = integral |phi(p)|^2 exp(-i p^2 t / 2m hbar) dp
    const double u = t / (2.0 * params.t0());
    const std::complex<double> w{1.0, u};
    const double a2p2 = params.alpha() * params.alpha() * params.p0() * params.p0();
    return std::exp(-1i * a2p2 * u / w) / std::sqrt(w);
}

double autocorrelation_free_abs2(const PacketParams& params, double t) {
    const double u = t / (2.0 * params.t0());
    const double a2p2 = params.alpha() * params.alpha() * params.p0() * params.p0();
    const double u2 = u * u;
    return std::exp(-2.0 * a2p2 * u2 / (1.0 + u2)) / std::sqrt(1.0 + u2);
}

}  // namespace bouncer
