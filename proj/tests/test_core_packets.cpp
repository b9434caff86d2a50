#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bouncer/core_packets.hpp"
#include "quadrature_oracle.hpp"

using bouncer::PacketParams;
using oracle::cplx;

namespace {

const PacketParams kPacket(-3.0, 2.0, 0.8, 1.3, 0.7);

double window_lo(const PacketParams& p, double t) { return p.center(t) - 14.0 * p.beta_t(t); }
double window_hi(const PacketParams& p, double t) { return p.center(t) + 14.0 * p.beta_t(t); }

}  // namespace

TEST_CASE("packet parameters derive beta, t0 and reject bad input") {
    CHECK(kPacket.beta() == doctest::Approx(0.8 * 1.3));
    CHECK(kPacket.t0() == doctest::Approx(0.7 * 1.3 * 0.64));
    CHECK(kPacket.beta_t(kPacket.t0()) == doctest::Approx(kPacket.beta() * std::sqrt(2.0)));
    CHECK_THROWS_AS(PacketParams(0.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(PacketParams(0.0, 0.0, 1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(PacketParams(NAN, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("free packet stays normalized") {
    for (double t : {0.0, 0.5, 3.0, -2.0}) {
        const double norm = oracle::trapezoid(
            [&](double x) { return std::norm(bouncer::psi_free(kPacket, x, t)); }, window_lo(kPacket, t),
            window_hi(kPacket, t), 4000);
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("position form is the inverse Fourier transform of the momentum form") {
    const double spread = 14.0 / kPacket.alpha();
    for (double t : {0.0, 0.9, 2.5}) {
        for (double x : {-5.0, -3.1, -1.0, 2.0}) {
            const cplx direct = bouncer::psi_free(kPacket, x + kPacket.center(t) + 3.0, t);
            const cplx via_p = oracle::inverse_fourier(
                [&](double p) { return bouncer::phi_free(kPacket, p, t); }, x + kPacket.center(t) + 3.0,
                kPacket.hbar(), kPacket.p0() - spread, kPacket.p0() + spread, 20000);
            CHECK(std::abs(direct - via_p) < 1e-10);
        }
    }
}

TEST_CASE("closed-form moments match quadrature") {
    for (double t : {0.0, 1.0, 4.0}) {
        const auto m = bouncer::free_moments(kPacket, t);
        const auto density = [&](double x) { return std::norm(bouncer::psi_free(kPacket, x, t)); };
        const double lo = window_lo(kPacket, t);
        const double hi = window_hi(kPacket, t);
        const double x1 = oracle::trapezoid([&](double x) { return x * density(x); }, lo, hi, 6000);
        const double x2 = oracle::trapezoid([&](double x) { return x * x * density(x); }, lo, hi, 6000);
        CHECK(m.x_mean == doctest::Approx(x1).epsilon(1e-10));
        CHECK(m.x2_mean == doctest::Approx(x2).epsilon(1e-10));

        const double spread = 14.0 / kPacket.alpha();
        const auto pd = [&](double p) { return std::norm(bouncer::phi_free(kPacket, p, t)); };
        const double p1 = oracle::trapezoid([&](double p) { return p * pd(p); }, kPacket.p0() - spread,
                                            kPacket.p0() + spread, 6000);
        const double p2 = oracle::trapezoid([&](double p) { return p * p * pd(p); }, kPacket.p0() - spread,
                                            kPacket.p0() + spread, 6000);
        CHECK(m.p_mean == doctest::Approx(p1).epsilon(1e-10));
        CHECK(m.p2_mean == doctest::Approx(p2).epsilon(1e-10));
    }
}

TEST_CASE("free packet solves the Schroedinger equation") {
    const double hbar = kPacket.hbar();
    const double m = kPacket.mass();
    for (double t : {0.3, 1.7}) {
        for (double x : {-4.0, -2.5, -1.0}) {
            const cplx dt = oracle::derivative([&](double s) { return bouncer::psi_free(kPacket, x, s); }, t, 1e-5);
            const cplx dxx =
                oracle::second_derivative([&](double y) { return bouncer::psi_free(kPacket, y, t); }, x, 1e-4);
            const cplx residual = cplx(0.0, hbar) * dt + hbar * hbar / (2.0 * m) * dxx;
            CHECK(std::abs(residual) < 1e-6);
        }
    }
}

TEST_CASE("momentum distribution is time independent") {
    for (double p : {0.5, 2.0, 3.3}) {
        const double at0 = std::abs(bouncer::phi_free(kPacket, p, 0.0));
        CHECK(std::abs(bouncer::phi_free(kPacket, p, 7.0)) == doctest::Approx(at0).epsilon(1e-14));
    }
}

TEST_CASE("uncertainty product is minimal at t = 0 and grows") {
    CHECK(bouncer::free_uncertainty_product(kPacket, 0.0) == doctest::Approx(kPacket.hbar() / 2.0));
    const double t0 = kPacket.t0();
    CHECK(bouncer::free_uncertainty_product(kPacket, t0)
          == doctest::Approx(kPacket.hbar() / 2.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("autocorrelation equals the overlap integral") {
    const double lo = window_lo(kPacket, 0.0) - 20.0;
    const double hi = window_hi(kPacket, 4.0) + 20.0;
    for (double t : {0.0, 0.2, 0.7, 1.5, 4.0}) {
        const cplx overlap = oracle::trapezoid(
            [&](double x) { return std::conj(bouncer::psi_free(kPacket, x, 0.0)) * bouncer::psi_free(kPacket, x, t); },
            lo, hi, 30000);
        const cplx closed = bouncer::autocorrelation_free(kPacket, t);
        CHECK(std::abs(closed - overlap) < 1e-10);
        CHECK(bouncer::autocorrelation_free_abs2(kPacket, t) == doctest::Approx(std::norm(closed)).epsilon(1e-12));
    }
    CHECK(std::abs(bouncer::autocorrelation_free(kPacket, 0.0) - 1.0) < 1e-15);
}

TEST_CASE("autocorrelation modulus decays monotonically for t > 0") {
    double previous = 1.0;
    for (int k = 1; k <= 40; ++k) {
        const double now = bouncer::autocorrelation_free_abs2(kPacket, 0.1 * k);
        CHECK(now < previous);
        previous = now;
    }
}
