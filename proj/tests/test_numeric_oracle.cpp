#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bouncer/core_packets.hpp"
#include "bouncer/errors.hpp"
#include "bouncer/mirror_bouncer.hpp"
#include "bouncer/numeric_oracle.hpp"

using bouncer::ComplexAmplitude;
using bouncer::GridSpec;
using bouncer::GridState;
using bouncer::Integrator;
using bouncer::PacketParams;

namespace {

GridState gaussian_state(const PacketParams& p, const GridSpec& grid, double t = 0.0) {
    return bouncer::sample([&](double x, double s) { return bouncer::psi_free(p, x, s); }, grid, t);
}

}  // namespace

TEST_CASE("three-point rules by hand") {
    const std::vector<double> f{1.0, 4.0, 1.0};
    CHECK(bouncer::integrate(f, 1.0) == doctest::Approx(6.0));
    CHECK(bouncer::integrate(f, 1.0, Integrator::trapezoid) == doctest::Approx(5.0));
    CHECK_THROWS_AS(bouncer::integrate(std::vector<double>{1.0, 2.0}, 1.0), std::invalid_argument);
}

TEST_CASE("Simpson is exact on cubics and fourth order on smooth functions") {
    std::vector<double> cubic(11);
    for (std::size_t i = 0; i < cubic.size(); ++i) {
        const double x = 0.2 * static_cast<double>(i);
        cubic[i] = x * x * x - x + 1.0;
    }
    CHECK(bouncer::integrate(cubic, 0.2) == doctest::Approx(4.0 - 2.0 + 2.0).epsilon(1e-14));

    const auto error = [](std::size_t n) {
        std::vector<double> f(n + 1);
        const double h = 1.0 / static_cast<double>(n);
        for (std::size_t i = 0; i <= n; ++i) {
            f[i] = std::exp(h * static_cast<double>(i));
        }
        return std::abs(bouncer::integrate(f, h) - (std::numbers::e - 1.0));
    };
    CHECK(error(16) / error(32) == doctest::Approx(16.0).epsilon(0.02));
}

TEST_CASE("grid construction") {
    const GridSpec half = GridSpec::half_line(-4.0, 9);
    CHECK(half.has_wall());
    CHECK(half.x(8) == 0.0);
    CHECK(half.x(0) == doctest::Approx(-4.0));
    CHECK(half.spacing() == doctest::Approx(0.5));
    CHECK_THROWS_AS(GridSpec::half_line(-4.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::half_line(1.0, 9), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::full_line(2.0, 1.0, 9), std::invalid_argument);

    const GridSpec fine = GridSpec::full_line_with_spacing(-3.0, 3.0, 0.07);
    CHECK(fine.spacing() <= 0.07);
    CHECK(fine.n_points() % 2 == 1);
    CHECK(fine.x_min() == -3.0);
    CHECK(fine.x_max() >= 3.0);
    CHECK(fine.x_max() < 3.0 + fine.spacing());
}

TEST_CASE("position and momentum moments of a Gaussian") {
    const PacketParams p(0.5, 1.5, 1.0);
    const GridState s = gaussian_state(p, GridSpec::full_line(-15.0, 16.0, 3101));
    const auto m = bouncer::grid_moments(s, p.hbar(), 1e-7);
    const auto exact = bouncer::free_moments(p, 0.0);
    CHECK(bouncer::moment_x(s, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.x_mean == doctest::Approx(exact.x_mean).epsilon(1e-12));
    CHECK(m.x2_mean == doctest::Approx(exact.x2_mean).epsilon(1e-12));
    CHECK(m.p_mean == doctest::Approx(exact.p_mean).epsilon(1e-7));
    CHECK(m.p2_mean == doctest::Approx(exact.p2_mean).epsilon(1e-7));
}

TEST_CASE("truncated tails and under-resolved momenta are reported") {
    const PacketParams p(0.0, 1.0, 1.0);
    const GridState clipped = gaussian_state(p, GridSpec::full_line(-2.0, 8.0, 1001));
    CHECK_THROWS_AS(bouncer::moment_x(clipped, 1), bouncer::TailCaptureError);
    try {
        bouncer::moment_x(clipped, 1);
    } catch (const bouncer::TailCaptureError& e) {
        CHECK(e.suggested_x_min() < -2.0);
    }

    const PacketParams fast(0.0, 20.0, 1.0);
    const GridState coarse = gaussian_state(fast, GridSpec::full_line(-12.0, 12.0, 121));
    CHECK_THROWS_AS(bouncer::moment_p(coarse, 1, 1.0, 1e-6), bouncer::NonConvergedError);
}

TEST_CASE("overlap is Hermitian and checks grids") {
    const GridSpec grid = GridSpec::full_line(-12.0, 12.0, 801);
    const GridState a = gaussian_state(PacketParams(-1.0, 0.5, 1.0), grid);
    const GridState b = gaussian_state(PacketParams(0.5, -0.3, 0.8), grid, 0.7);
    const ComplexAmplitude ab = bouncer::overlap(a, b);
    const ComplexAmplitude ba = bouncer::overlap(b, a);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-15);
    CHECK(std::abs(bouncer::overlap(a, a) - 1.0) < 1e-12);

    const GridState other = gaussian_state(PacketParams(0.0, 0.0, 1.0), GridSpec::full_line(-12.0, 12.0, 803));
    CHECK_THROWS_AS(bouncer::overlap(a, other), std::invalid_argument);
    CHECK_THROWS_AS(bouncer::l2_distance(a, other), std::invalid_argument);
}

TEST_CASE("propagation conserves the discrete norm over many steps") {
    const PacketParams p(-1.0, 2.0, 1.0);
    const GridState start = gaussian_state(p, GridSpec::full_line(-20.0, 20.0, 401));
    const GridState end = bouncer::propagate(start, {}, 0.002, 10000);
    CHECK(bouncer::discrete_norm(end) == doctest::Approx(bouncer::discrete_norm(start)).epsilon(1e-11));
    CHECK(end.time == doctest::Approx(20.0));
}

TEST_CASE("propagation is reversible") {
    const PacketParams p(-2.0, 1.0, 1.0);
    const GridState start = gaussian_state(p, GridSpec::full_line(-15.0, 15.0, 601));
    const GridState there = bouncer::propagate(start, {}, 0.01, 300);
    const GridState back = bouncer::propagate(there, {}, -0.01, 300);
    CHECK(bouncer::l2_distance(start, back) < 1e-10);
    CHECK(back.time == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("zero state and invalid steps") {
    GridState zero{GridSpec::half_line(-5.0, 51), std::vector<ComplexAmplitude>(51), 0.0};
    const GridState out = bouncer::propagate(zero, {}, 0.1, 50);
    CHECK(bouncer::discrete_norm(out) == 0.0);
    CHECK_THROWS_AS(bouncer::propagate(zero, {}, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(bouncer::propagate(zero, {}, NAN, 1), std::invalid_argument);
}

TEST_CASE("propagated mean position follows the classical path") {
    const PacketParams p(-3.0, 1.5, 1.0);
    const GridState start = gaussian_state(p, GridSpec::full_line(-25.0, 25.0, 2501));
    const GridState end = bouncer::propagate(start, {}, 0.0025, 1600);
    CHECK(std::abs(bouncer::moment_x(end, 1) - p.center(4.0)) < 1e-4);
    CHECK(bouncer::moment_p(end, 1, 1.0, 1e-5) == doctest::Approx(1.5).epsilon(1e-5));
}

TEST_CASE("propagation against the wall reproduces the mirror solution") {
    const bouncer::BouncerParams bp(PacketParams(-3.0, 2.0, 1.0));
    const GridSpec grid = GridSpec::half_line_with_spacing(-20.0, 0.02);
    const auto exact = [&](double x, double t) { return bouncer::psi_bouncer(bp, x, t); };
    const GridState start = bouncer::sample(exact, grid, 0.0);
    const GridState end = bouncer::propagate(start, {}, 0.001, 3000);
    CHECK(bouncer::l2_distance(end, bouncer::sample(exact, grid, 3.0)) < 1e-3);
}

TEST_CASE("default grids contain the packet") {
    const PacketParams p(-10.0, 5.0, 1.0);
    const GridSpec half = bouncer::default_half_line_grid(p, 0.0, 6.0);
    CHECK(half.has_wall());
    CHECK(half.spacing() <= p.beta() / 100.0);
    const auto psi = [&](double x, double t) { return bouncer::psi_bouncer(bouncer::BouncerParams(p), x, t); };
    for (double t : {0.0, 2.0, 6.0}) {
        CHECK_NOTHROW(bouncer::moment_x(bouncer::sample(psi, half, t), 0));
    }
    const GridSpec full = bouncer::default_full_line_grid(p, 0.0, 6.0);
    CHECK_FALSE(full.has_wall());
    CHECK(full.x_max() > p.center(6.0));
}
