#include "bouncer/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "bouncer/core_packets.hpp"
#include "bouncer/mirror_bouncer.hpp"
#include "bouncer/special_solutions.hpp"

namespace bouncer::cli {

namespace {

// Tolerance for the momentum stencil's step-halving check in CLI output.
constexpr double kMomentumTolerance = 1e-6;

double classical_position(const RunConfig& cfg, const PacketParams& p, double t) {
    switch (cfg.kind) {
        case SolutionKind::bouncer: return -std::abs(p.center(t));
        case SolutionKind::psi0: return 0.0;
        default: return p.center(t);
    }
}

std::pair<double, double> exact_second_moments(const RunConfig& cfg, const PacketParams& p, double t) {
    switch (cfg.kind) {
        case SolutionKind::free: {
            const Moments m = free_moments(p, t);
            return {m.x2_mean, m.p2_mean};
        }
        case SolutionKind::free_gprime: {
            const Moments m = gprime_moments(SpecialParams(p), t);
            return {m.x2_mean, m.p2_mean};
        }
        case SolutionKind::bouncer: return {x2_expect(p, t), p2_expect(p)};
        case SolutionKind::psi0: {
            const Moments m = psi0_moments(SpecialParams(p), t);
            return {m.x2_mean, m.p2_mean};
        }
    }
    return {NAN, NAN};
}

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::string json_number(std::optional<double> v) {
    if (!v || !std::isfinite(*v)) {
        return "null";
    }
    return format_number(*v);
}

}  // namespace

Table density_table(const RunConfig& cfg) {
    cfg.validate();
    const GridSpec grid = cfg.grid();
    const WaveFunction wave = wavefunction_for(cfg);
    Table table{{"t", "x", "density"}, {}};
    table.rows.reserve(cfg.n_times * grid.n_points());
    for (double t : cfg.times()) {
        for (std::size_t i = 0; i < grid.n_points(); ++i) {
            const double x = grid.x(i);
            table.rows.push_back({t, x, std::norm(wave(x, t))});
        }
    }
    return table;
}

Table moments_table(const RunConfig& cfg) {
    cfg.validate();
    const PacketParams p = cfg.packet();
    const GridSpec grid = cfg.grid();
    const WaveFunction wave = wavefunction_for(cfg);
    std::optional<BouncerParams> bp;
    if (cfg.kind == SolutionKind::bouncer) {
        bp.emplace(p);
    }

    Table table{{"t", "x_mean_numeric", "x_mean_classical", "x_mean_approx", "p_mean_numeric", "x2_exact", "p2_exact"},
                {}};
    for (double t : cfg.times()) {
        const GridState state = sample(wave, grid, t);
        std::optional<double> approx;
        if (bp) {
            const NearCollisionEstimate e = x_mean_near_collision(*bp, t);
            if (e.in_window) {
                approx = e.value;
            }
        }
        const auto [x2, p2] = exact_second_moments(cfg, p, t);
        table.rows.push_back({t, moment_x(state, 1), classical_position(cfg, p, t), approx,
                              moment_p(state, 1, p.hbar(), kMomentumTolerance), x2, p2});
    }
    return table;
}

Table autocorr_table(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.kind != SolutionKind::free && cfg.kind != SolutionKind::bouncer) {
        throw ConfigError("autocorr has closed forms only for kinds free and bouncer");
    }
    const PacketParams p = cfg.packet();
    RunConfig span = cfg;
    span.t_min = std::min(0.0, cfg.t_min);
    span.t_max = std::max(0.0, cfg.resolved_t_max());
    const GridSpec grid = span.grid();
    const WaveFunction wave = wavefunction_for(cfg);
    const GridState initial = sample(wave, grid, 0.0);
    moment_x(initial, 0);  // tail check on the reference state

    std::optional<BouncerParams> bp;
    if (cfg.kind == SolutionKind::bouncer) {
        bp.emplace(p);
    }
    Table table{{"t", "re", "im", "abs2", "numeric_re", "numeric_im", "numeric_abs2"}, {}};
    for (double t : cfg.times()) {
        const ComplexAmplitude closed = bp ? autocorrelation_bouncer(*bp, t) : autocorrelation_free(p, t);
        const GridState state = sample(wave, grid, t);
        moment_x(state, 0);
        const ComplexAmplitude numeric = overlap(initial, state);
        table.rows.push_back({t, closed.real(), closed.imag(), std::norm(closed), numeric.real(), numeric.imag(),
                              std::norm(numeric)});
    }
    return table;
}

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        os << (c ? "," : "") << csv_field(table.columns[c]);
    }
    os << "\r\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) {
                os << ',';
            }
            if (row[c]) {
                os << format_number(*row[c]);
            }
        }
        os << "\r\n";
    }
}

std::string metadata_json(const RunConfig& cfg, std::string_view command) {
    const PacketParams p = cfg.packet();
    const bool natural = p.hbar() == 1.0 && p.mass() == 1.0;
    std::string s = "{\"schema_version\": " + std::to_string(kSchemaVersion);
    s += ", \"command\": " + json_string(command);
    s += ", \"kind\": " + json_string(to_string(cfg.kind));
    s += ", \"params\": {\"x0\": " + format_number(p.x0()) + ", \"p0\": " + format_number(p.p0())
         + ", \"alpha\": " + format_number(p.alpha()) + ", \"hbar\": " + format_number(p.hbar())
         + ", \"mass\": " + format_number(p.mass()) + ", \"beta\": " + format_number(p.beta())
         + ", \"t0\": " + format_number(p.t0()) + "}";
    s += ", \"units\": {\"system\": " + json_string(natural ? "natural (hbar = 1, mass = 1)" : "user (hbar, mass as given)")
         + ", \"t\": \"time\", \"x\": \"length\", \"p\": \"momentum\", \"density\": \"1/length\"}";
    s += ", \"time_window\": {\"t_min\": " + format_number(cfg.t_min) + ", \"t_max\": "
         + format_number(cfg.resolved_t_max()) + ", \"n_times\": " + std::to_string(cfg.n_times) + "}";
    s += "}";
    return s;
}

void write_json(std::ostream& os, const Table& table, const RunConfig& cfg, std::string_view command) {
    os << "{\n  \"schema_version\": " << kSchemaVersion << ",\n  \"metadata\": " << metadata_json(cfg, command)
       << ",\n  \"records\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        os << (r ? ",\n    {" : "\n    {");
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            os << (c ? ", " : "") << json_string(table.columns[c]) << ": " << json_number(table.rows[r][c]);
        }
        os << '}';
    }
    os << (table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

void write_report(std::ostream& os, const std::vector<CriterionResult>& results, OutputFormat format) {
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
    }
    if (format == OutputFormat::csv) {
        os << "id,title,passed,measured,threshold,detail\r\n";
        for (const auto& r : results) {
            os << csv_field(r.id) << ',' << csv_field(r.title) << ',' << (r.passed ? "true" : "false") << ','
               << (std::isfinite(r.measured) ? format_number(r.measured) : "") << ','
               << format_number(r.threshold) << ',' << csv_field(r.detail) << "\r\n";
        }
        return;
    }
    os << "{\n  \"schema_version\": " << kSchemaVersion << ",\n  \"all_passed\": " << (all ? "true" : "false")
       << ",\n  \"criteria\": [";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        os << (i ? ",\n    " : "\n    ") << "{\"id\": " << json_string(r.id) << ", \"title\": " << json_string(r.title)
           << ", \"passed\": " << (r.passed ? "true" : "false") << ", \"measured\": " << json_number(r.measured)
           << ", \"threshold\": " << json_number(r.threshold) << ", \"detail\": " << json_string(r.detail) << '}';
    }
    os << (results.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

}  // namespace bouncer::cli
