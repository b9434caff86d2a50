#pragma once

#include <cmath>
#include <complex>

namespace bouncer {

/// Value of a position- or momentum-space wavefunction at one point.
using ComplexAmplitude = std::complex<double>;

/// Physical configuration of a Gaussian packet: initial center x0, mean
/// momentum p0, momentum-space width alpha, and the constants hbar and mass.
///
/// Derived scales: beta = alpha*hbar is the initial position width and
/// t0 = mass*hbar*alpha^2 is the spreading time.
class PacketParams {
public:
    /// Throws std::invalid_argument unless alpha, hbar, mass are positive and
    /// every argument is finite.
    PacketParams(double x0, double p0, double alpha, double hbar = 1.0, double mass = 1.0);

    double x0() const { return x0_; }
    double p0() const { return p0_; }
    double alpha() const { return alpha_; }
    double hbar() const { return hbar_; }
    double mass() const { return mass_; }

    double beta() const { return alpha_ * hbar_; }
    double t0() const { return mass_ * hbar_ * alpha_ * alpha_; }

    /// beta * sqrt(1 + (t/t0)^2)
    double beta_t(double t) const { return beta() * std::hypot(1.0, t / t0()); }

    /// Classical free trajectory X(t) = x0 + p0 t / m.
    double center(double t) const { return x0_ + p0_ * t / mass_; }

    /// 1 + i t/t0, the complex width factor shared by all free Gaussians.
    std::complex<double> width_factor(double t) const { return {1.0, t / t0()}; }

private:
    double x0_;
    double p0_;
    double alpha_;
    double hbar_;
    double mass_;
};

/// Position and momentum moments of a state at a given time.
struct Moments {
    double time = 0.0;
    double x_mean = 0.0;
    double x2_mean = 0.0;
    double x_sd = 0.0;
    double p_mean = 0.0;
    double p2_mean = 0.0;
    double p_sd = 0.0;

    /// Builds the bundle from raw first and second moments. Standard
    /// deviations are clamped at zero against round-off.
    static Moments from_raw(double t, double x1, double x2, double p1, double p2);

    double uncertainty_product() const { return x_sd * p_sd; }
};

}  // namespace bouncer
