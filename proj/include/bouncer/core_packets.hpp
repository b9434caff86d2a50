#pragma once

#include "bouncer/packet_params.hpp"

namespace bouncer {

/// Free Gaussian in position space. (1 + i t/t0)^{1/2} is taken on the
/// principal branch; its real part is 1 so no branch cut is ever crossed.
ComplexAmplitude psi_free(const PacketParams& params, double x, double t);

/// Free Gaussian in momentum space. |phi| does not depend on t.
ComplexAmplitude phi_free(const PacketParams& params, double p, double t);

Moments free_moments(const PacketParams& params, double t);

/// (hbar/2) sqrt(1 + (t/t0)^2)
double free_uncertainty_product(const PacketParams& params, double t);

/// A(t) = <psi(0)|psi(t)> for the free Gaussian, with states evolving as
/// exp(-iEt/hbar), so Im A(t) < 0 for small t > 0.
ComplexAmplitude autocorrelation_free(const PacketParams& params, double t);

/// Closed form of |A(t)|^2.
double autocorrelation_free_abs2(const PacketParams& params, double t);

}  // namespace bouncer
