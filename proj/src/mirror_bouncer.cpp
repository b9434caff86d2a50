#include "bouncer/mirror_bouncer.hpp"

#include <numbers>
#include <stdexcept>

#include "bouncer/core_packets.hpp"
#include "bouncer/errors.hpp"

namespace bouncer {

using std::numbers::pi;

namespace {

const double kSqrtPi = std::sqrt(pi);

// exp(z) - 1 without cancellation for small |z|.
std::complex<double> expm1(std::complex<double> z) {
    const double re = std::expm1(z.real());
    const double half_sin = std::sin(z.imag() / 2.0);
    const double cos_m1 = -2.0 * half_sin * half_sin;
    return {re * std::cos(z.imag()) + cos_m1, (re + 1.0) * std::sin(z.imag())};
}

}  // namespace

double z0(const PacketParams& params) {
    const double a = params.x0() / params.beta();
    const double b = params.p0() * params.beta() / params.hbar();
    return a * a + b * b;
}

double z0_from_widths(const PacketParams& params) {
    const double dx0 = params.beta() / std::numbers::sqrt2;
    const double dp0 = 1.0 / (params.alpha() * std::numbers::sqrt2);
    const double a = params.x0() / dx0;
    const double b = params.p0() / dp0;
    return 0.5 * (a * a + b * b);
}

double f_factor(double z) {
    if (!(z >= 0.0) || !std::isfinite(z)) {
        throw std::invalid_argument("f_factor requires finite z >= 0");
    }
    if (z == 0.0) {
        return 1.0;
    }
    return z * std::exp(-z) / -std::expm1(-z);
}

double normalization(const PacketParams& params) {
    const double z = z0(params);
    if (z == 0.0) {
        throw DegenerateMirrorError();
    }
    return 1.0 / std::sqrt(-std::expm1(-z));
}

BouncerParams::BouncerParams(const PacketParams& base)
    : base_(base), z0_(bouncer::z0(base)), norm_n_(0.0) {
    if (base.x0() > 0.0) {
        throw std::invalid_argument("bouncing packet must start on the x <= 0 side of the wall");
    }
    norm_n_ = normalization(base);
    if (base.x0() < 0.0 && base.p0() > 0.0) {
        collision_time_ = -base.mass() * base.x0() / base.p0();
    }
}

double BouncerParams::require_collision_time() const {
    if (!collision_time_) {
        throw NoCollisionError();
    }
    return *collision_time_;
}

ComplexAmplitude mirror_difference(const PacketParams& params, double x, double t) {
    return psi_free(params, x, t) - psi_free(params, -x, t);
}

ComplexAmplitude psi_bouncer(const BouncerParams& bp, double x, double t) {
    if (x >= 0.0) {
        return {0.0, 0.0};
    }
    return bp.norm_n() * mirror_difference(bp.base(), x, t);
}

double x2_expect(const PacketParams& params, double t) {
    const double X = params.center(t);
    const double bt2 = params.beta_t(t) * params.beta_t(t);
    return X * X + bt2 / 2.0 + bt2 * f_factor(z0(params));
}

double x2_expect(const BouncerParams& bp, double t) { return x2_expect(bp.base(), t); }

double p2_expect(const PacketParams& params) {
    const double k = params.hbar() / params.beta();
    return params.p0() * params.p0() + k * k / 2.0 + k * k * f_factor(z0(params));
}

double p2_expect(const BouncerParams& bp) { return p2_expect(bp.base()); }

double energy_shift(const PacketParams& params) {
    const double b = params.p0() * params.beta() / params.hbar();
    return 2.0 * f_factor(z0(params)) / (1.0 + 2.0 * b * b);
}

double energy_shift(const BouncerParams& bp) { return energy_shift(bp.base()); }

double energy_shift_exact(const PacketParams& params) {
    const double k = params.hbar() / params.beta();
    const double free_p2 = params.p0() * params.p0() + k * k / 2.0;
    return (p2_expect(params) - free_p2) / free_p2;
}

NearCollisionEstimate x_mean_near_collision(const BouncerParams& bp, double t) {
    const PacketParams& p = bp.base();
    const double bt = p.beta_t(t);
    const double X = p.center(t);
    const double leading = -bt / kSqrtPi;
    return {leading - X * X / (bt * kSqrtPi), leading, std::abs(X) <= bt};
}

double p_mean_at_collision(const BouncerParams& bp) {
    const double s = bp.require_collision_time() / bp.base().t0();
    const PacketParams& p = bp.base();
    return -(p.hbar() / (p.beta() * kSqrtPi)) * s / std::hypot(1.0, s);
}

double p_mean_collision_asymptote(const PacketParams& params) {
    return -1.0 / (kSqrtPi * params.alpha());
}

CollisionForce effective_force(const BouncerParams& bp) {
    const double tc = bp.require_collision_time();
    const PacketParams& p = bp.base();
    const double estimate = -2.0 * p.p0() * p.p0() / (p.mass() * p.beta_t(tc));
    return {estimate / kSqrtPi, estimate};
}

ComplexAmplitude autocorrelation_bouncer(const BouncerParams& bp, double t) {
    const PacketParams& p = bp.base();
    const std::complex<double> w{1.0, t / (2.0 * p.t0())};
    // (1 - exp(-z0/w)) / (1 - exp(-z0))
    const std::complex<double> correction = expm1(-bp.z0() / w) / std::expm1(-bp.z0());
    return autocorrelation_free(p, t) * correction;
}

}  // namespace bouncer
