#include "bouncer/cli/run_config.hpp"

#include <cmath>

#include "bouncer/core_packets.hpp"
#include "bouncer/errors.hpp"
#include "bouncer/mirror_bouncer.hpp"
#include "bouncer/special_solutions.hpp"

namespace bouncer::cli {

std::string_view to_string(SolutionKind kind) {
    switch (kind) {
        case SolutionKind::free: return "free";
        case SolutionKind::free_gprime: return "free-gprime";
        case SolutionKind::bouncer: return "bouncer";
        case SolutionKind::psi0: return "psi0";
    }
    return "unknown";
}

std::string_view to_string(OutputFormat format) { return format == OutputFormat::csv ? "csv" : "json"; }

PacketParams RunConfig::packet() const {
    try {
        if (kind == SolutionKind::psi0) {
            return PacketParams(0.0, 0.0, alpha, hbar, mass);
        }
        return PacketParams(x0, p0, alpha, hbar, mass);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

void RunConfig::validate() const {
    const PacketParams p = packet();
    if (kind == SolutionKind::bouncer) {
        try {
            BouncerParams{p};
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
    }
    if (!std::isfinite(t_min) || (t_max && !std::isfinite(*t_max))) {
        throw ConfigError("time window must be finite");
    }
    if (resolved_t_max() < t_min) {
        throw ConfigError("tmin must not exceed tmax");
    }
    if (n_times < 1) {
        throw ConfigError("nt must be at least 1");
    }
    if (n_x && (*n_x < 3 || *n_x % 2 == 0)) {
        throw ConfigError("nx must be odd and at least 3");
    }
    if (x_min && !std::isfinite(*x_min)) {
        throw ConfigError("xmin must be finite");
    }
    if (x_min && has_wall() && !(*x_min < 0.0)) {
        throw ConfigError("xmin must be negative for half-line solutions");
    }
}

double RunConfig::resolved_t_max() const {
    if (t_max) {
        return *t_max;
    }
    const PacketParams p = packet();
    if (kind == SolutionKind::bouncer && p.x0() < 0.0 && p.p0() > 0.0) {
        return 3.0 * (-p.mass() * p.x0() / p.p0());
    }
    return 3.0 * p.t0();
}

std::vector<double> RunConfig::times() const {
    const double hi = resolved_t_max();
    std::vector<double> out(n_times);
    for (std::size_t i = 0; i < n_times; ++i) {
        out[i] = n_times == 1 ? t_min
                              : t_min + (hi - t_min) * static_cast<double>(i) / static_cast<double>(n_times - 1);
    }
    return out;
}

GridSpec RunConfig::grid(double points_per_beta) const {
    const PacketParams p = packet();
    const double hi = resolved_t_max();
    try {
        if (has_wall()) {
            const GridSpec fallback = default_half_line_grid(p, t_min, hi, points_per_beta);
            const double left = x_min.value_or(fallback.x_min());
            if (n_x) {
                return GridSpec::half_line(left, *n_x);
            }
            return x_min ? GridSpec::half_line_with_spacing(left, fallback.spacing()) : fallback;
        }
        const GridSpec fallback = default_full_line_grid(p, t_min, hi, points_per_beta);
        const double left = x_min.value_or(fallback.x_min());
        if (!(left < fallback.x_max())) {
            throw ConfigError("xmin must lie left of the packet");
        }
        if (n_x) {
            return GridSpec::full_line(left, fallback.x_max(), *n_x);
        }
        return x_min ? GridSpec::full_line_with_spacing(left, fallback.x_max(), fallback.spacing()) : fallback;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

WaveFunction wavefunction_for(const RunConfig& cfg) {
    const PacketParams p = cfg.packet();
    switch (cfg.kind) {
        case SolutionKind::free:
            return [p](double x, double t) { return psi_free(p, x, t); };
        case SolutionKind::free_gprime: {
            const SpecialParams sp(p);
            return [sp](double x, double t) { return psi_gprime(sp, x, t); };
        }
        case SolutionKind::bouncer: {
            const BouncerParams bp(p);
            return [bp](double x, double t) { return psi_bouncer(bp, x, t); };
        }
        case SolutionKind::psi0: {
            const SpecialParams sp(p);
            return [sp](double x, double t) { return psi0_bouncer(sp, x, t); };
        }
    }
    throw ConfigError("unknown solution kind");
}

}  // namespace bouncer::cli
