#pragma once

#include "bouncer/packet_params.hpp"

// Free packets whose momentum profile carries an odd (p - p0) prefactor, and
// the x0 = p0 = 0 member of that family used as a half-line bouncer.

namespace bouncer {

class SpecialParams {
public:
    /// Throws std::invalid_argument unless beta, hbar, mass are positive.
    SpecialParams(double beta, double hbar = 1.0, double mass = 1.0, double x0 = 0.0, double p0 = 0.0);
    explicit SpecialParams(const PacketParams& packet) : packet_(packet) {}

    double beta() const { return packet_.beta(); }
    double t0() const { return packet_.t0(); }
    double hbar() const { return packet_.hbar(); }
    double mass() const { return packet_.mass(); }
    double alpha() const { return packet_.alpha(); }
    double x0() const { return packet_.x0(); }
    double p0() const { return packet_.p0(); }
    double beta_t(double t) const { return packet_.beta_t(t); }

    const PacketParams& packet() const { return packet_; }

private:
    PacketParams packet_;
};

/// sqrt(2 alpha^3/sqrt(pi)) (p - p0) e^{-alpha^2 (p-p0)^2/2} e^{-ip x0/hbar} e^{-ip^2 t/2m hbar}
ComplexAmplitude phi_gprime(const SpecialParams& sp, double p, double t);

/// Position-space form of phi_gprime, normalized to one on the full line.
/// Vanishes at x = X(t).
ComplexAmplitude psi_gprime(const SpecialParams& sp, double x, double t);

Moments gprime_moments(const SpecialParams& sp, double t);

/// psi_gprime with x0 = p0 = 0; valid on the whole line. Ignores sp.x0/p0.
ComplexAmplitude psi0_free(const SpecialParams& sp, double x, double t);

/// sqrt(2) psi0_free(x,t) for x <= 0, zero for x > 0.
ComplexAmplitude psi0_bouncer(const SpecialParams& sp, double x, double t);

Moments psi0_moments(const SpecialParams& sp, double t);

/// d<p>/dt = -(2/(alpha sqrt(pi) t0)) (1 + (t/t0)^2)^{-3/2}
double psi0_force(const SpecialParams& sp, double t);

/// Delta x_t * Delta p_t of the half-line psi0 state.
double psi0_uncertainty_product(const SpecialParams& sp, double t);

/// (1/2) sqrt(3 (3 pi - 8) / pi) ~ 0.5832, the t = 0 product in units of hbar.
double psi0_product_coefficient();

/// 1 - 8/(3 pi) ~ 0.1512, the growth coefficient of (t/t0)^2 in the product.
double psi0_product_growth();

/// (3 pi - 8)/pi ~ 0.4535, the long-time product relative to a standard Gaussian.
double psi0_long_time_ratio();

}  // namespace bouncer
