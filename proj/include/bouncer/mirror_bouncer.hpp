#pragma once

#include <optional>

#include "bouncer/packet_params.hpp"

// Bouncing Gaussian against an infinite wall at x = 0, built as the
// normalized difference N [psi_G(x,t) - psi_G(-x,t)] on x < 0.
//
// Geometry: the packet lives on the negative half-line. x0 is the signed
// initial center (x0 <= 0) and p0 > 0 means moving toward the wall. The
// classical trajectory is -|X(t)| with X(t) = x0 + p0 t / m.

namespace bouncer {

/// (x0/beta)^2 + (p0 beta/hbar)^2
double z0(const PacketParams& params);

/// Same quantity written as ((x0/dx0)^2 + (p0/dp0)^2) / 2 with the initial
/// widths dx0 = beta/sqrt(2), dp0 = 1/(alpha sqrt(2)).
double z0_from_widths(const PacketParams& params);

/// F(z) = z e^{-z} / (1 - e^{-z}), with F(0) = 1. Throws
/// std::invalid_argument for negative or non-finite z.
double f_factor(double z);

/// N = (1 - e^{-z0})^{-1/2}. Throws DegenerateMirrorError when z0 == 0.
double normalization(const PacketParams& params);

class BouncerParams {
public:
    /// Requires x0 <= 0. Throws DegenerateMirrorError when z0 == 0.
    explicit BouncerParams(const PacketParams& base);

    const PacketParams& base() const { return base_; }
    double z0() const { return z0_; }
    double norm_n() const { return norm_n_; }

    /// -m x0 / p0, present only when x0 < 0 and p0 > 0.
    std::optional<double> collision_time() const { return collision_time_; }

    /// Collision time or NoCollisionError.
    double require_collision_time() const;

private:
    PacketParams base_;
    double z0_;
    double norm_n_;
    std::optional<double> collision_time_;
};

/// psi_G(x,t) - psi_G(-x,t) without the normalization constant.
ComplexAmplitude mirror_difference(const PacketParams& params, double x, double t);

/// N [psi_G(x,t) - psi_G(-x,t)] for x < 0, exactly zero for x >= 0.
ComplexAmplitude psi_bouncer(const BouncerParams& bp, double x, double t);

/// Exact <x^2>_t = X(t)^2 + beta_t^2/2 + beta_t^2 F(z0).
double x2_expect(const PacketParams& params, double t);
double x2_expect(const BouncerParams& bp, double t);

/// Exact, time-independent <p^2> = p0^2 + hbar^2/(2 beta^2) + (hbar/beta)^2 F(z0).
double p2_expect(const PacketParams& params);
double p2_expect(const BouncerParams& bp);

/// Approximate relative kinetic-energy increase 2F(z0) / (1 + 2 (p0 beta/hbar)^2).
double energy_shift(const PacketParams& params);
double energy_shift(const BouncerParams& bp);

/// Exact (<p^2>_bouncer - <p^2>_free) / <p^2>_free.
double energy_shift_exact(const PacketParams& params);

/// Two-term expansion of <x>_t about the collision.
struct NearCollisionEstimate {
    double value;    // -beta_t/sqrt(pi) - X^2/(beta_t sqrt(pi))
    double leading;  // -beta_t/sqrt(pi)
    bool in_window;  // |X(t)| <= beta_t; the expansion is unreliable outside
};

NearCollisionEstimate x_mean_near_collision(const BouncerParams& bp, double t);

/// <p> at t_c from differentiating the expansion:
/// -(hbar/(beta sqrt(pi))) (t_c/t0) / sqrt(1 + (t_c/t0)^2).
/// Throws NoCollisionError when t_c is undefined.
double p_mean_at_collision(const BouncerParams& bp);

/// Large-t_c limit of p_mean_at_collision, -1/(sqrt(pi) alpha).
double p_mean_collision_asymptote(const PacketParams& params);

struct CollisionForce {
    double force;                 // -(2/sqrt(pi)) p0^2 / (m beta_{t_c})
    double dimensional_estimate;  // -2 p0^2 / (m beta_{t_c})
};

/// m d^2<x>/dt^2 at t_c. Throws NoCollisionError when t_c is undefined.
CollisionForce effective_force(const BouncerParams& bp);

/// Ã(t) = A_G(t) (1 - exp[-z0/(1 + i t/2t0)]) / (1 - exp[-z0]).
ComplexAmplitude autocorrelation_bouncer(const BouncerParams& bp, double t);

}  // namespace bouncer
