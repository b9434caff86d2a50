#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bouncer/numeric_oracle.hpp"
#include "bouncer/packet_params.hpp"

namespace bouncer::cli {

enum class SolutionKind { free, free_gprime, bouncer, psi0 };
enum class OutputFormat { csv, json };

std::string_view to_string(SolutionKind kind);
std::string_view to_string(OutputFormat format);

/// Bad user input; maps to exit status 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    SolutionKind kind = SolutionKind::bouncer;

    // Demo packet: x0 = -10 beta, p0 = 5 hbar/beta (z0 = 125), natural units.
    double x0 = -10.0;
    double p0 = 5.0;
    double alpha = 1.0;
    double hbar = 1.0;
    double mass = 1.0;

    double t_min = 0.0;
    std::optional<double> t_max;  // defaults to 3 t_c for a colliding bouncer, else 3 t0
    std::size_t n_times = 61;

    std::optional<double> x_min;
    std::optional<std::size_t> n_x;

    OutputFormat format = OutputFormat::csv;
    std::string out_path;  // empty or "-" writes to stdout

    /// Throws ConfigError describing the first violated precondition.
    void validate() const;

    /// Packet actually evaluated: psi0 ignores x0 and p0.
    PacketParams packet() const;

    double resolved_t_max() const;
    std::vector<double> times() const;

    /// Half-line grid for bouncer/psi0, full-line grid for free kinds, with
    /// the x_min / n_x overrides applied.
    GridSpec grid(double points_per_beta = 100.0) const;

    bool has_wall() const { return kind == SolutionKind::bouncer || kind == SolutionKind::psi0; }
};

/// The state selected by cfg.kind.
WaveFunction wavefunction_for(const RunConfig& cfg);

}  // namespace bouncer::cli
