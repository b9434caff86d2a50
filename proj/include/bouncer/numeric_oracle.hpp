#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "bouncer/packet_params.hpp"

// Grid quadrature, finite-difference momentum operators and a hard-wall
// Crank-Nicolson propagator. Everything here is independent of the closed
// forms it is used to check.

namespace bouncer {

/// Uniform grid with an odd number of points.
///
/// A half-line grid spans [x_min, 0] with its last point exactly at the
/// wall. A full-line grid spans [x_min, x_max] and has no wall.
class GridSpec {
public:
    /// Throws std::invalid_argument unless x_min < 0 and n_points is odd and >= 3.
    static GridSpec half_line(double x_min, std::size_t n_points);

    /// Throws std::invalid_argument unless x_min < x_max and n_points is odd and >= 3.
    static GridSpec full_line(double x_min, double x_max, std::size_t n_points);

    /// Half-line grid reaching at least |x_min| with spacing <= max_spacing.
    static GridSpec half_line_with_spacing(double x_min, double max_spacing);

    /// Full-line grid covering [x_min, x_max] with spacing <= max_spacing.
    static GridSpec full_line_with_spacing(double x_min, double x_max, double max_spacing);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    std::size_t n_points() const { return n_points_; }
    double spacing() const { return spacing_; }
    bool has_wall() const { return has_wall_; }

    /// Grid coordinate. Half-line grids are indexed from the wall so the last
    /// point is exactly 0.
    double x(std::size_t i) const;

    bool operator==(const GridSpec&) const = default;

private:
    GridSpec(double x_min, double x_max, std::size_t n_points, bool has_wall);

    double x_min_;
    double x_max_;
    std::size_t n_points_;
    double spacing_;
    bool has_wall_;
};

struct GridState {
    GridSpec grid;
    std::vector<ComplexAmplitude> values;
    double time = 0.0;
};

using WaveFunction = std::function<ComplexAmplitude(double x, double t)>;

enum class Integrator { simpson, trapezoid };

/// Composite Simpson (odd sample count) or trapezoid rule for uniform samples.
double integrate(std::span<const double> f, double h, Integrator rule = Integrator::simpson);
ComplexAmplitude integrate(std::span<const ComplexAmplitude> f, double h,
                           Integrator rule = Integrator::simpson);

GridState sample(const WaveFunction& wavefn, const GridSpec& grid, double t);

/// Integral of x^order |psi|^2. Throws TailCaptureError when |psi| at a
/// non-wall edge exceeds 1e-12 max|psi|.
double moment_x(const GridState& state, int order, Integrator rule = Integrator::simpson);

/// <p> (order 1) or <p^2> (order 2) via (hbar/i) d/dx with fourth-order
/// central differences. Beyond a wall the state is continued as an odd
/// function; beyond a non-wall edge it is taken as zero (the tail check
/// guarantees it is negligible there). The result is compared against the
/// same stencil at twice the spacing; if the implied error exceeds
/// rel_tol * (momentum scale) NonConvergedError is thrown.
double moment_p(const GridState& state, int order, double hbar, double rel_tol = 1e-6);

/// Both position and momentum moments of a sampled state.
Moments grid_moments(const GridState& state, double hbar, double rel_tol = 1e-6);

/// Integral of conj(a) b. Throws std::invalid_argument on grid mismatch.
ComplexAmplitude overlap(const GridState& a, const GridState& b, Integrator rule = Integrator::simpson);

/// Riemann-sum L2 norm sqrt(h sum |psi|^2); exactly conserved by propagate.
double discrete_norm(const GridState& state);

/// sqrt(h sum |a - b|^2). Throws std::invalid_argument on grid mismatch.
double l2_distance(const GridState& a, const GridState& b);

struct FreeHamiltonian {
    double hbar = 1.0;
    double mass = 1.0;
};

/// Crank-Nicolson (Cayley) stepping of i hbar psi_t = -(hbar^2/2m) psi_xx
/// with psi pinned to zero at both grid ends. The Laplacian is the compact
/// fourth-order (Numerov) form M^{-1} D2, so each step is one constant
/// tridiagonal solve and is exactly unitary in the discrete_norm. dt may be
/// negative to run backwards. Throws std::invalid_argument for dt == 0 or
/// non-finite dt, std::runtime_error if the state becomes non-finite.
GridState propagate(const GridState& initial, const FreeHamiltonian& hamiltonian, double dt,
                    std::size_t steps);

/// Half-line grid wide enough for a mirror packet over [t_min, t_max]:
/// reaches max|X(t)| + 12 beta_t past the wall, with spacing no larger than
/// beta/points_per_beta or hbar/(10 p_max).
GridSpec default_half_line_grid(const PacketParams& params, double t_min, double t_max,
                                double points_per_beta = 100.0);

/// Full-line analogue for free packets centered on X(t).
GridSpec default_full_line_grid(const PacketParams& params, double t_min, double t_max,
                                double points_per_beta = 100.0);

}  // namespace bouncer
