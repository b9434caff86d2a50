#include "bouncer/validation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "bouncer/core_packets.hpp"
#include "bouncer/mirror_bouncer.hpp"
#include "bouncer/numeric_oracle.hpp"
#include "bouncer/special_solutions.hpp"

namespace bouncer {

namespace {

using std::numbers::pi;

// Quadrature resolution used wherever momentum moments are taken.
constexpr double kFinePointsPerBeta = 200.0;

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

double relative(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

GridSpec with_overrides(const ValidationOptions& o, const GridSpec& fallback) {
    if (!o.x_min_override && !o.n_points_override) {
        return fallback;
    }
    const double x_min = o.x_min_override.value_or(fallback.x_min());
    if (o.n_points_override) {
        return GridSpec::half_line(x_min, *o.n_points_override);
    }
    return GridSpec::half_line_with_spacing(x_min, fallback.spacing());
}

WaveFunction bouncer_wave(const BouncerParams& bp) {
    return [bp](double x, double t) { return psi_bouncer(bp, x, t); };
}

double oracle_x_mean(const BouncerParams& bp, const GridSpec& grid, double t) {
    return moment_x(sample(bouncer_wave(bp), grid, t), 1);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

CriterionResult make(double measured, double threshold, bool passed, std::string detail) {
    CriterionResult r;
    r.passed = passed;
    r.measured = measured;
    r.threshold = threshold;
    r.detail = std::move(detail);
    return r;
}

// 1. N^2 times the numeric half-line norm of the raw difference is one.
CriterionResult normalization_exactness(const ValidationOptions& o) {
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> z_dist(0.1, 50.0);
    std::uniform_real_distribution<double> angle_dist(0.15, 1.4);
    std::uniform_real_distribution<double> scale_dist(0.5, 2.0);

    double worst_t0 = 0.0;
    double worst_later = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double z = z_dist(rng);
        const double theta = angle_dist(rng);
        const double alpha = scale_dist(rng);
        const double hbar = scale_dist(rng);
        const double mass = scale_dist(rng);
        const double beta = alpha * hbar;
        const PacketParams p(-std::sqrt(z) * std::cos(theta) * beta, std::sqrt(z) * std::sin(theta) * hbar / beta,
                             alpha, hbar, mass);
        const BouncerParams bp(p);
        const double tc = bp.require_collision_time();
        const double n2 = bp.norm_n() * bp.norm_n();
        const GridSpec grid = with_overrides(o, default_half_line_grid(p, 0.0, 2.0 * tc));
        auto raw = [&p](double x, double t) { return mirror_difference(p, x, t); };

        worst_t0 = std::max(worst_t0, std::abs(n2 * moment_x(sample(raw, grid, 0.0), 0) - 1.0));
        worst_later = std::max(worst_later, std::abs(n2 * moment_x(sample(raw, grid, 2.0 * tc), 0) - 1.0));
    }
    const bool ok = worst_t0 <= 1e-9 && worst_later <= 1e-8;
    return make(worst_t0, 1e-9, ok,
                "20 random sets, z0 in [0.1,50]: max |N^2 norm - 1| = " + fmt(worst_t0) + " at t=0 (tol 1e-9), "
                    + fmt(worst_later) + " at t=2t_c (tol 1e-8)");
}

// 2. <x^2>_t and <p^2> closed forms against quadrature; <p^2> constant.
CriterionResult even_moments(const ValidationOptions& o) {
    const BouncerParams bp(o.demo);
    const double tc = bp.require_collision_time();
    const GridSpec grid = with_overrides(o, default_half_line_grid(o.demo, 0.0, 3.0 * tc, kFinePointsPerBeta));
    const double p2_exact = p2_expect(bp);

    double worst_x2 = 0.0;
    double worst_p2 = 0.0;
    double p2_lo = INFINITY;
    double p2_hi = -INFINITY;
    for (double t : linspace(0.0, 3.0 * tc, 13)) {
        const GridState s = sample(bouncer_wave(bp), grid, t);
        worst_x2 = std::max(worst_x2, relative(moment_x(s, 2), x2_expect(bp, t)));
        const double p2 = moment_p(s, 2, o.demo.hbar(), 1e-7);
        worst_p2 = std::max(worst_p2, relative(p2, p2_exact));
        p2_lo = std::min(p2_lo, p2);
        p2_hi = std::max(p2_hi, p2);
    }
    const double spread = (p2_hi - p2_lo) / p2_exact;
    const double worst = std::max({worst_x2, worst_p2, spread});
    return make(worst, 1e-6, worst <= 1e-6,
                "max rel err <x^2> = " + fmt(worst_x2) + ", <p^2> = " + fmt(worst_p2)
                    + ", oracle <p^2> spread = " + fmt(spread) + " (tol 1e-6)");
}

// 3. Relative energy shift tends to 2 as x0, p0 -> 0.
CriterionResult energy_shift_limit(const ValidationOptions&) {
    double worst = std::abs(energy_shift_exact(PacketParams(0.0, 0.0, 1.0)) - 2.0);
    for (double eps : {1e-8, 1e-10}) {
        worst = std::max(worst, std::abs(energy_shift_exact(PacketParams(-eps, eps, 1.0)) - 2.0));
    }
    const double approx = energy_shift(PacketParams(0.0, 0.0, 1.0));
    const bool ok = worst <= 1e-12 && std::abs(approx - 2.0) <= 1e-12;
    return make(worst, 1e-12, ok,
                "max |exact ratio - 2| = " + fmt(worst) + ", approximate form = " + fmt(approx));
}

// Near-collision packet shared by 4 and 6: z0 = 250, t_c = 3 t0.
PacketParams collision_packet() { return PacketParams(-15.0, 5.0, 1.0, 1.0, 1.0); }

// 4. Softened collision: <x>(t_c) ~ -beta_tc/sqrt(pi); second term helps.
CriterionResult collision_softening(const ValidationOptions& o) {
    const PacketParams p = collision_packet();
    const BouncerParams bp(p);
    const double tc = bp.require_collision_time();
    const double duration = p.beta_t(tc) * p.mass() / p.p0();
    const GridSpec grid = with_overrides(o, default_half_line_grid(p, 0.0, tc + duration));

    const NearCollisionEstimate at_tc = x_mean_near_collision(bp, tc);
    const double err_tc = relative(oracle_x_mean(bp, grid, tc), at_tc.leading);

    bool tighter = true;
    std::ostringstream detail;
    detail << "z0=" << bp.z0() << " t_c/t0=" << tc / p.t0() << " rel err at t_c = " << fmt(err_tc)
           << " (tol 0.05); one-term vs two-term abs err:";
    for (double s : {-0.2, -0.1, 0.05, 0.1, 0.2}) {
        const double t = tc + s * duration;
        const double oracle = oracle_x_mean(bp, grid, t);
        const NearCollisionEstimate e = x_mean_near_collision(bp, t);
        const double one = std::abs(oracle - e.leading);
        const double two = std::abs(oracle - e.value);
        tighter = tighter && e.in_window && two < one;
        detail << " [" << fmt(one) << " > " << fmt(two) << "]";
    }
    return make(err_tc, 0.05,
                err_tc <= 0.05 && tighter, detail.str());
}

// 5. <p>(t_c) against its closed form and the -1/(sqrt(pi) alpha) asymptote.
CriterionResult collision_momentum(const ValidationOptions& o) {
    double worst = 0.0;
    double prev_oracle_gap = INFINITY;
    double prev_closed_gap = INFINITY;
    bool monotone = true;
    std::ostringstream detail;
    for (double ratio : {3.0, 10.0, 30.0}) {
        const double p0 = 5.0;
        const PacketParams p(-p0 * ratio, p0, 1.0, 1.0, 1.0);
        const BouncerParams bp(p);
        const double tc = bp.require_collision_time();
        const GridSpec grid = with_overrides(o, default_half_line_grid(p, 0.0, tc, kFinePointsPerBeta));
        const double oracle = moment_p(sample(bouncer_wave(bp), grid, tc), 1, p.hbar(), 1e-6);
        const double closed = p_mean_at_collision(bp);
        const double asymptote = p_mean_collision_asymptote(p);
        const double err = relative(oracle, closed);
        worst = std::max(worst, err);

        const double oracle_gap = std::abs(oracle - asymptote);
        const double closed_gap = std::abs(closed - asymptote);
        monotone = monotone && oracle_gap < prev_oracle_gap && closed_gap < prev_closed_gap;
        prev_oracle_gap = oracle_gap;
        prev_closed_gap = closed_gap;
        detail << "t_c/t0=" << ratio << ": oracle " << fmt(oracle) << " closed " << fmt(closed) << " rel "
               << fmt(err) << "; ";
    }
    detail << "asymptote " << fmt(p_mean_collision_asymptote(PacketParams(0.0, 0.0, 1.0)))
           << (monotone ? " approached monotonically" : " NOT approached monotonically");
    return make(worst, 0.10,
                worst <= 0.10 && monotone, detail.str());
}

// 6. Second difference of <x>_t at t_c against the effective force.
CriterionResult effective_force_check(const ValidationOptions& o) {
    const PacketParams p = collision_packet();
    const BouncerParams bp(p);
    const double tc = bp.require_collision_time();
    const double dt = 0.01 * p.t0();
    const GridSpec grid = with_overrides(o, default_half_line_grid(p, 0.0, tc + dt));

    const double second = (oracle_x_mean(bp, grid, tc + dt) - 2.0 * oracle_x_mean(bp, grid, tc)
                           + oracle_x_mean(bp, grid, tc - dt)) / (dt * dt);
    const double oracle_force = p.mass() * second;
    const CollisionForce f = effective_force(bp);
    const double err = relative(oracle_force, f.force);
    const double inv_sqrt_pi = 1.0 / std::sqrt(pi);
    const double closed_ratio_err = relative(f.force / f.dimensional_estimate, inv_sqrt_pi);
    const double oracle_ratio_err = relative(oracle_force / f.dimensional_estimate, inv_sqrt_pi);
    const double worst = std::max({err, closed_ratio_err, oracle_ratio_err});
    return make(worst, 0.15,
                worst <= 0.15,
                "oracle m d2<x>/dt2 = " + fmt(oracle_force) + ", closed form = " + fmt(f.force) + " (rel "
                    + fmt(err) + "); ratio rel err closed " + fmt(closed_ratio_err) + ", oracle "
                    + fmt(oracle_ratio_err));
}

// 7. Bouncer autocorrelation against the numeric overlap.
CriterionResult autocorrelation_check(const ValidationOptions& o) {
    const BouncerParams bp(o.demo);
    const double tc = bp.require_collision_time();
    const GridSpec grid = with_overrides(o, default_half_line_grid(o.demo, 0.0, 3.0 * tc));
    const GridState initial = sample(bouncer_wave(bp), grid, 0.0);

    double worst = 0.0;
    double prev_closed = INFINITY;
    double prev_oracle = INFINITY;
    bool monotone = true;
    for (double t : linspace(0.0, 3.0 * tc, 25)) {
        const ComplexAmplitude numeric = overlap(initial, sample(bouncer_wave(bp), grid, t));
        const ComplexAmplitude closed = autocorrelation_bouncer(bp, t);
        worst = std::max(worst, std::abs(numeric - closed));
        monotone = monotone && (t == 0.0 || (std::abs(closed) < prev_closed && std::abs(numeric) < prev_oracle));
        prev_closed = std::abs(closed);
        prev_oracle = std::abs(numeric);
    }
    return make(worst, 1e-6,
                worst <= 1e-6 && monotone,
                "max |A_closed - A_overlap| = " + fmt(worst) + (monotone ? ", |A| strictly decreasing" : ", |A| NOT monotone"));
}

// 8. The psi0 bouncer's closed-form moments against the oracle.
CriterionResult special_moments(const ValidationOptions& o) {
    const SpecialParams sp(1.0, 1.0, 1.0);
    const double t0 = sp.t0();
    const GridSpec grid =
        with_overrides(o, default_half_line_grid(sp.packet(), 0.0, 3.0 * t0, kFinePointsPerBeta));
    auto wave = [&sp](double x, double t) { return psi0_bouncer(sp, x, t); };

    double worst = 0.0;
    for (double t : {0.0, t0, 3.0 * t0}) {
        const Moments numeric = grid_moments(sample(wave, grid, t), sp.hbar(), 1e-8);
        const Moments closed = psi0_moments(sp, t);
        const std::array<std::pair<double, double>, 6> pairs{{{numeric.x_mean, closed.x_mean},
                                                              {numeric.x2_mean, closed.x2_mean},
                                                              {numeric.x_sd, closed.x_sd},
                                                              {numeric.p_mean, closed.p_mean},
                                                              {numeric.p2_mean, closed.p2_mean},
                                                              {numeric.p_sd, closed.p_sd}}};
        for (const auto& [n, c] : pairs) {
            worst = std::max(worst, std::abs(n - c) / std::max(1.0, std::abs(c)));
        }
    }

    const double k = sp.hbar() / sp.beta();
    bool decreasing = true;
    double prev = INFINITY;
    for (double t : linspace(0.0, 50.0 * t0, 501)) {
        const double dp = psi0_moments(sp, t).p_sd;
        decreasing = decreasing && dp < prev;
        prev = dp;
    }
    const double start_err = std::abs(psi0_moments(sp, 0.0).p_sd - std::sqrt(1.5) * k);
    const double end_err = std::abs(psi0_moments(sp, 1e9 * t0).p_sd - std::sqrt(1.5 - 4.0 / pi) * k);
    const bool ok = worst <= 1e-7 && decreasing && start_err <= 1e-9 && end_err <= 1e-9;
    return make(worst, 1e-7,
                ok,
                "max moment err = " + fmt(worst) + " (tol 1e-7); Delta p "
                    + (decreasing ? "strictly decreasing" : "NOT decreasing") + ", endpoint errs " + fmt(start_err)
                    + ", " + fmt(end_err) + " (tol 1e-9)");
}

// 9. Printed two-decimal uncertainty coefficients.
CriterionResult uncertainty_coefficients(const ValidationOptions&) {
    const SpecialParams sp(1.0, 1.0, 1.0);
    const PacketParams standard(0.0, 0.0, 1.0);
    const double at_zero = psi0_uncertainty_product(sp, 0.0) / sp.hbar();
    const double t1 = 1e4 * sp.t0();
    const double t2 = 2e4 * sp.t0();
    const double slope_ratio = (psi0_uncertainty_product(sp, t2) - psi0_uncertainty_product(sp, t1))
                               / (free_uncertainty_product(standard, t2) - free_uncertainty_product(standard, t1));
    auto two_decimals = [](double v) { return std::round(v * 100.0) / 100.0; };
    const double err = std::max(std::abs(two_decimals(at_zero) - 0.58), std::abs(two_decimals(slope_ratio) - 0.45));
    return make(err, 1e-12,
                err <= 1e-12, "t=0 product = " + fmt(at_zero) + " hbar, slope ratio = " + fmt(slope_ratio));
}

// 10. The mirror bouncer at tiny z0 coincides with psi0 in modulus.
CriterionResult limit_reduction(const ValidationOptions&) {
    const double z = 1e-6;
    const PacketParams p(-std::sqrt(z / 2.0), std::sqrt(z / 2.0), 1.0, 1.0, 1.0);
    const BouncerParams bp(p);
    const SpecialParams sp(p.beta(), p.hbar(), p.mass());

    double worst = 0.0;
    for (double t : {0.0, 0.5, 1.0, 3.0, 5.0}) {
        for (double x : linspace(-6.0 * p.beta_t(t), 0.0, 241)) {
            worst = std::max(worst, std::abs(std::abs(psi_bouncer(bp, x, t)) - std::abs(psi0_bouncer(sp, x, t))));
        }
    }
    return make(worst, 1e-3, worst < 1e-3,
                "max | |psi_G~| - |psi0~| | = " + fmt(worst));
}

// 11. Crank-Nicolson propagation reproduces the closed form at 2 t_c.
CriterionResult pde_equivalence(const ValidationOptions& o) {
    const BouncerParams bp(o.demo);
    const PacketParams& p = o.demo;
    const double horizon = 2.0 * bp.require_collision_time();
    const double reach = std::max(std::abs(p.x0()), std::abs(p.center(horizon))) + 12.0 * p.beta_t(horizon);

    auto error_at = [&](double h, double dt_target) {
        const GridSpec grid = with_overrides(o, GridSpec::half_line_with_spacing(-reach, h));
        const GridState initial = sample(bouncer_wave(bp), grid, 0.0);
        moment_x(initial, 0);  // tail check
        const auto steps = static_cast<std::size_t>(std::ceil(horizon / dt_target - 1e-9));
        const GridState evolved =
            propagate(initial, FreeHamiltonian{p.hbar(), p.mass()}, horizon / static_cast<double>(steps), steps);
        return l2_distance(evolved, sample(bouncer_wave(bp), grid, horizon));
    };

    const double coarse = error_at(p.beta() / 100.0, p.t0() / 2000.0);
    const double fine = error_at(p.beta() / 200.0, p.t0() / 4000.0);
    const double ratio = coarse / fine;
    // Crank-Nicolson is second order in dt and the compact Laplacian fourth
    // order in h, so halving both should cut the error by 2^2.
    const double order_err = std::abs(ratio / 4.0 - 1.0);
    return make(fine, 1e-4,
                fine <= 1e-4 && order_err <= 0.2,
                "L2 err h=beta/100,dt=t0/2000: " + fmt(coarse) + "; h=beta/200,dt=t0/4000: " + fmt(fine)
                    + " (tol 1e-4); halving ratio " + fmt(ratio) + " vs 4 (tol 20%)");
}

using CriterionFn = std::function<CriterionResult(const ValidationOptions&)>;

struct Entry {
    std::string id;
    std::string title;
    CriterionFn fn;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> table{
        {"AC1", "mirror normalization exact at t=0 and conserved at t=2t_c", normalization_exactness},
        {"AC2", "even-moment closed forms match quadrature over [0, 3t_c]", even_moments},
        {"AC3", "energy shift ratio equals 2 in the x0,p0 -> 0 limit", energy_shift_limit},
        {"AC4", "<x> at collision softened to -beta_t/sqrt(pi); two-term expansion tighter", collision_softening},
        {"AC5", "<p> at collision within 10% and monotone toward -1/(sqrt(pi) alpha)", collision_momentum},
        {"AC6", "effective force at t_c within 15%; ratio to dimensional estimate 1/sqrt(pi)", effective_force_check},
        {"AC7", "autocorrelation closed form matches overlap over [0, 3t_c]; |A| decreasing", autocorrelation_check},
        {"AC8", "psi0 closed-form moments match oracle; Delta p decreasing between its endpoints", special_moments},
        {"AC9", "psi0 uncertainty product 0.58 hbar at t=0, long-time slope ratio 0.45", uncertainty_coefficients},
        {"AC10", "mirror bouncer reduces to psi0 in modulus at z0 = 1e-6", limit_reduction},
        {"AC11", "hard-wall propagation reproduces psi_G~ at 2t_c; error ratio matches order", pde_equivalence},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& criterion_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& entry : registry()) {
            out.push_back(entry.id);
        }
        return out;
    }();
    return ids;
}

CriterionResult run_criterion(const std::string& id, const ValidationOptions& options) {
    for (const auto& entry : registry()) {
        if (entry.id != id) {
            continue;
        }
        CriterionResult result;
        try {
            result = entry.fn(options);
        } catch (const std::exception& e) {
            result.passed = false;
            result.measured = NAN;
            result.detail = std::string("evaluation error: ") + e.what();
        }
        result.id = entry.id;
        result.title = entry.title;
        return result;
    }
    throw std::invalid_argument("unknown criterion id: " + id);
}

std::vector<CriterionResult> run_acceptance(const ValidationOptions& options) {
    std::vector<CriterionResult> results;
    for (const auto& id : criterion_ids()) {
        results.push_back(run_criterion(id, options));
    }
    return results;
}

}  // namespace bouncer
