#include "bouncer/numeric_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bouncer/errors.hpp"

namespace bouncer {

namespace {

constexpr double kTailFraction = 1e-12;

void require_odd_count(std::size_t n) {
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("grid needs an odd number of points >= 3");
    }
}

std::size_t even_intervals(double length, double max_spacing) {
    if (!(max_spacing > 0.0) || !std::isfinite(max_spacing)) {
        throw std::invalid_argument("grid spacing must be positive and finite");
    }
    auto intervals = static_cast<std::size_t>(std::ceil(length / max_spacing - 1e-9));
    intervals = std::max<std::size_t>(intervals, 2);
    return intervals + intervals % 2;
}

template <typename T>
T simpson(std::span<const T> f, double h) {
    const std::size_t n = f.size();
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("Simpson rule needs an odd number of samples >= 3");
    }
    T odd{};
    T even{};
    for (std::size_t i = 1; i + 1 < n; i += 2) {
        odd += f[i];
    }
    for (std::size_t i = 2; i + 1 < n; i += 2) {
        even += f[i];
    }
    return (f.front() + f.back() + 4.0 * odd + 2.0 * even) * (h / 3.0);
}

template <typename T>
T trapezoid(std::span<const T> f, double h) {
    if (f.size() < 2) {
        throw std::invalid_argument("trapezoid rule needs at least 2 samples");
    }
    T inner{};
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
        inner += f[i];
    }
    return (0.5 * (f.front() + f.back()) + inner) * h;
}

template <typename T>
T apply_rule(std::span<const T> f, double h, Integrator rule) {
    return rule == Integrator::simpson ? simpson(f, h) : trapezoid(f, h);
}

void require_same_grid(const GridState& a, const GridState& b) {
    if (!(a.grid == b.grid) || a.values.size() != b.values.size()) {
        throw std::invalid_argument("grid mismatch between states");
    }
}

void check_tails(const GridState& state) {
    const auto& v = state.values;
    if (v.size() != state.grid.n_points()) {
        throw std::invalid_argument("state size does not match its grid");
    }
    double peak = 0.0;
    for (const auto& c : v) {
        peak = std::max(peak, std::abs(c));
    }
    if (peak == 0.0) {
        return;
    }
    const double limit = kTailFraction * peak;
    const bool left_ok = std::abs(v.front()) < limit;
    const bool right_ok = state.grid.has_wall() || std::abs(v.back()) < limit;
    if (left_ok && right_ok) {
        return;
    }
    const GridSpec& g = state.grid;
    const double suggested = g.x_min() - 0.5 * (g.x_max() - g.x_min());
    std::ostringstream msg;
    msg << "tail capture violated on grid [" << g.x_min() << ", " << g.x_max() << "] at t = " << state.time
        << ": |psi| at the edge exceeds " << kTailFraction << " of its peak; widen the grid (try x_min <= "
        << suggested << ")";
    throw TailCaptureError(msg.str(), suggested);
}

// psi continued past the grid: odd reflection through a wall, zero past a
// captured tail.
class Extended {
public:
    explicit Extended(const GridState& s)
        : v_(s.values), last_(static_cast<std::ptrdiff_t>(s.values.size()) - 1), wall_(s.grid.has_wall()) {}

    ComplexAmplitude operator()(std::ptrdiff_t j) const {
        if (j < 0) {
            return {};
        }
        if (j <= last_) {
            return v_[static_cast<std::size_t>(j)];
        }
        if (!wall_) {
            return {};
        }
        const std::ptrdiff_t mirror = 2 * last_ - j;
        return mirror >= 0 ? -v_[static_cast<std::size_t>(mirror)] : ComplexAmplitude{};
    }

private:
    const std::vector<ComplexAmplitude>& v_;
    std::ptrdiff_t last_;
    bool wall_;
};

struct MomentumPair {
    double p1;
    double p2;
};

MomentumPair momentum_moments(const GridState& state, double hbar, std::ptrdiff_t stride) {
    const Extended psi(state);
    const double h = state.grid.spacing();
    const std::size_t n = state.values.size();
    std::vector<double> current(n);
    std::vector<double> kinetic(n);
    const double scale = 1.0 / (12.0 * static_cast<double>(stride) * h);
    for (std::size_t i = 0; i < n; ++i) {
        const auto j = static_cast<std::ptrdiff_t>(i);
        const ComplexAmplitude d = (-psi(j + 2 * stride) + 8.0 * psi(j + stride) - 8.0 * psi(j - stride)
                                    + psi(j - 2 * stride)) * scale;
        current[i] = std::imag(std::conj(state.values[i]) * d);
        kinetic[i] = std::norm(d);
    }
    return {hbar * simpson<double>(current, h), hbar * hbar * simpson<double>(kinetic, h)};
}

}  // namespace

GridSpec::GridSpec(double x_min, double x_max, std::size_t n_points, bool has_wall)
    : x_min_(x_min),
      x_max_(x_max),
      n_points_(n_points),
      spacing_((x_max - x_min) / static_cast<double>(n_points - 1)),
      has_wall_(has_wall) {}

GridSpec GridSpec::half_line(double x_min, std::size_t n_points) {
    if (!(x_min < 0.0) || !std::isfinite(x_min)) {
        throw std::invalid_argument("half-line grid needs finite x_min < 0");
    }
    require_odd_count(n_points);
    return GridSpec(x_min, 0.0, n_points, true);
}

GridSpec GridSpec::full_line(double x_min, double x_max, std::size_t n_points) {
    if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
        throw std::invalid_argument("full-line grid needs finite x_min < x_max");
    }
    require_odd_count(n_points);
    return GridSpec(x_min, x_max, n_points, false);
}

GridSpec GridSpec::half_line_with_spacing(double x_min, double max_spacing) {
    if (!(x_min < 0.0)) {
        throw std::invalid_argument("half-line grid needs x_min < 0");
    }
    const std::size_t intervals = even_intervals(-x_min, max_spacing);
    return half_line(-static_cast<double>(intervals) * max_spacing, intervals + 1);
}

GridSpec GridSpec::full_line_with_spacing(double x_min, double x_max, double max_spacing) {
    if (!(x_min < x_max)) {
        throw std::invalid_argument("full-line grid needs x_min < x_max");
    }
    const std::size_t intervals = even_intervals(x_max - x_min, max_spacing);
    return full_line(x_min, x_min + static_cast<double>(intervals) * max_spacing, intervals + 1);
}

double GridSpec::x(std::size_t i) const {
    if (has_wall_) {
        return -static_cast<double>(n_points_ - 1 - i) * spacing_;
    }
    return x_min_ + static_cast<double>(i) * spacing_;
}

double integrate(std::span<const double> f, double h, Integrator rule) { return apply_rule(f, h, rule); }

ComplexAmplitude integrate(std::span<const ComplexAmplitude> f, double h, Integrator rule) {
    return apply_rule(f, h, rule);
}

GridState sample(const WaveFunction& wavefn, const GridSpec& grid, double t) {
    GridState state{grid, std::vector<ComplexAmplitude>(grid.n_points()), t};
    for (std::size_t i = 0; i < grid.n_points(); ++i) {
        state.values[i] = wavefn(grid.x(i), t);
    }
    return state;
}

double moment_x(const GridState& state, int order, Integrator rule) {
    if (order < 0) {
        throw std::invalid_argument("moment order must be >= 0");
    }
    check_tails(state);
    std::vector<double> f(state.values.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        double weight = 1.0;
        const double x = state.grid.x(i);
        for (int k = 0; k < order; ++k) {
            weight *= x;
        }
        f[i] = weight * std::norm(state.values[i]);
    }
    return integrate(f, state.grid.spacing(), rule);
}

double moment_p(const GridState& state, int order, double hbar, double rel_tol) {
    if (order != 1 && order != 2) {
        throw std::invalid_argument("momentum moment order must be 1 or 2");
    }
    check_tails(state);
    const MomentumPair fine = momentum_moments(state, hbar, 1);
    if (fine.p2 == 0.0) {
        return 0.0;
    }
    const MomentumPair coarse = momentum_moments(state, hbar, 2);

    const double value = order == 1 ? fine.p1 : fine.p2;
    const double other = order == 1 ? coarse.p1 : coarse.p2;
    const double scale = order == 1 ? std::sqrt(fine.p2) : fine.p2;
    // fourth-order stencil: error(h) ~ (error(2h) - error(h)) / 15
    const double estimate = std::abs(value - other) / 15.0;
    if (!(estimate <= rel_tol * scale)) {
        std::ostringstream msg;
        msg << "momentum stencil not converged: estimated relative error " << estimate / scale
            << " exceeds " << rel_tol << " at spacing " << state.grid.spacing() << "; refine the grid";
        throw NonConvergedError(msg.str());
    }
    return value;
}

Moments grid_moments(const GridState& state, double hbar, double rel_tol) {
    return Moments::from_raw(state.time, moment_x(state, 1), moment_x(state, 2), moment_p(state, 1, hbar, rel_tol),
                             moment_p(state, 2, hbar, rel_tol));
}

ComplexAmplitude overlap(const GridState& a, const GridState& b, Integrator rule) {
    require_same_grid(a, b);
    std::vector<ComplexAmplitude> f(a.values.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = std::conj(a.values[i]) * b.values[i];
    }
    return integrate(f, a.grid.spacing(), rule);
}

double discrete_norm(const GridState& state) {
    double sum = 0.0;
    for (const auto& c : state.values) {
        sum += std::norm(c);
    }
    return std::sqrt(sum * state.grid.spacing());
}

double l2_distance(const GridState& a, const GridState& b) {
    require_same_grid(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        sum += std::norm(a.values[i] - b.values[i]);
    }
    return std::sqrt(sum * a.grid.spacing());
}

GridState propagate(const GridState& initial, const FreeHamiltonian& hamiltonian, double dt, std::size_t steps) {
    if (!std::isfinite(dt) || dt == 0.0) {
        throw std::invalid_argument("time step must be finite and non-zero");
    }
    if (!(hamiltonian.hbar > 0.0) || !(hamiltonian.mass > 0.0)) {
        throw std::invalid_argument("hbar and mass must be positive");
    }
    if (initial.values.size() != initial.grid.n_points()) {
        throw std::invalid_argument("state size does not match its grid");
    }

    GridState state = initial;
    auto& psi = state.values;
    psi.front() = 0.0;
    psi.back() = 0.0;
    state.time = initial.time + dt * static_cast<double>(steps);

    const std::size_t m = psi.size() - 2;
    const double h = initial.grid.spacing();
    const double r = dt * hamiltonian.hbar / (4.0 * hamiltonian.mass * h * h);

    // (M - i r' D) psi^{n+1} = (M + i r' D) psi^n with M = tridiag(1,10,1)/12
    // and D = tridiag(1,-2,1).
    const ComplexAmplitude lhs_diag{10.0 / 12.0, 2.0 * r};
    const ComplexAmplitude lhs_off{1.0 / 12.0, -r};
    const ComplexAmplitude rhs_diag{10.0 / 12.0, -2.0 * r};
    const ComplexAmplitude rhs_off{1.0 / 12.0, r};

    // Thomas factorization of the constant left-hand matrix.
    std::vector<ComplexAmplitude> upper(m);
    std::vector<ComplexAmplitude> inv_pivot(m);
    inv_pivot[0] = 1.0 / lhs_diag;
    upper[0] = lhs_off * inv_pivot[0];
    for (std::size_t i = 1; i < m; ++i) {
        inv_pivot[i] = 1.0 / (lhs_diag - lhs_off * upper[i - 1]);
        upper[i] = lhs_off * inv_pivot[i];
    }

    std::vector<ComplexAmplitude> rhs(m);
    ComplexAmplitude* interior = psi.data() + 1;
    for (std::size_t step = 0; step < steps; ++step) {
        for (std::size_t i = 0; i < m; ++i) {
            // psi[0] and psi[m+1] are the pinned zeros
            rhs[i] = rhs_diag * interior[i] + rhs_off * (psi[i] + psi[i + 2]);
        }
        rhs[0] *= inv_pivot[0];
        for (std::size_t i = 1; i < m; ++i) {
            rhs[i] = (rhs[i] - lhs_off * rhs[i - 1]) * inv_pivot[i];
        }
        interior[m - 1] = rhs[m - 1];
        for (std::size_t i = m - 1; i-- > 0;) {
            interior[i] = rhs[i] - upper[i] * interior[i + 1];
        }
    }

    for (const auto& c : psi) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::runtime_error("propagation produced non-finite values");
        }
    }
    return state;
}

namespace {

double grid_spacing_for(const PacketParams& params, double points_per_beta) {
    if (!(points_per_beta > 0.0)) {
        throw std::invalid_argument("points_per_beta must be positive");
    }
    const double p_max = std::abs(params.p0()) + 6.0 / (params.alpha() * std::sqrt(2.0));
    return std::min(params.beta() / points_per_beta, params.hbar() / (10.0 * p_max));
}

}  // namespace

GridSpec default_half_line_grid(const PacketParams& params, double t_min, double t_max, double points_per_beta) {
    const double far = std::max(std::abs(t_min), std::abs(t_max));
    const double reach =
        std::max(std::abs(params.center(t_min)), std::abs(params.center(t_max))) + 12.0 * params.beta_t(far);
    return GridSpec::half_line_with_spacing(-reach, grid_spacing_for(params, points_per_beta));
}

GridSpec default_full_line_grid(const PacketParams& params, double t_min, double t_max, double points_per_beta) {
    const double far = std::max(std::abs(t_min), std::abs(t_max));
    const double margin = 12.0 * params.beta_t(far);
    const double lo = std::min(params.center(t_min), params.center(t_max)) - margin;
    const double hi = std::max(params.center(t_min), params.center(t_max)) + margin;
    return GridSpec::full_line_with_spacing(lo, hi, grid_spacing_for(params, points_per_beta));
}

}  // namespace bouncer
