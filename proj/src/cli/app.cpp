#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "bouncer/cli/commands.hpp"
#include "bouncer/errors.hpp"

namespace bouncer::cli {

namespace {

struct Output {
    std::ofstream file;
    std::ostream* stream;
};

Output open_output(const RunConfig& cfg, std::ostream& fallback) {
    Output o{{}, &fallback};
    if (!cfg.out_path.empty() && cfg.out_path != "-") {
        o.file.open(cfg.out_path, std::ios::binary);
        if (!o.file) {
            throw ConfigError("cannot open output file: " + cfg.out_path);
        }
        o.stream = &o.file;
    }
    return o;
}

void emit_table(const Table& table, const RunConfig& cfg, std::string_view command, std::ostream& out) {
    Output o = open_output(cfg, out);
    if (cfg.format == OutputFormat::json) {
        write_json(*o.stream, table, cfg, command);
        return;
    }
    write_csv(*o.stream, table);
    if (o.file.is_open()) {
        std::ofstream meta(cfg.out_path + ".meta.json", std::ios::binary);
        meta << metadata_json(cfg, command) << '\n';
    }
}

int run_validate(const RunConfig& cfg, const std::vector<std::string>& only, std::uint64_t seed, std::ostream& out,
                 std::ostream& err) {
    const PacketParams demo = cfg.packet();
    if (!(demo.x0() < 0.0 && demo.p0() > 0.0)) {
        throw ConfigError("validate needs a colliding demo packet: x0 < 0 and p0 > 0");
    }
    ValidationOptions options;
    options.demo = demo;
    options.x_min_override = cfg.x_min;
    options.n_points_override = cfg.n_x;
    options.seed = seed;

    const auto& known = criterion_ids();
    for (const auto& id : only) {
        if (std::find(known.begin(), known.end(), id) == known.end()) {
            throw ConfigError("unknown criterion id: " + id);
        }
    }
    std::vector<CriterionResult> results;
    bool all = true;
    for (const auto& id : known) {
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) {
            continue;
        }
        results.push_back(run_criterion(id, options));
        const auto& r = results.back();
        all = all && r.passed;
        err << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << ": " << r.detail << '\n';
    }
    Output o = open_output(cfg, out);
    write_report(*o.stream, results, cfg.format);
    return all ? kExitSuccess : kExitValidationFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bouncing Gaussian wave packets against an infinite wall: closed forms and numerical checks",
                 "bouncer"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file with option defaults; flags on the command line win");

    RunConfig cfg;
    double t_max = 0.0;
    double x_min = 0.0;
    std::size_t n_x = 0;

    const std::map<std::string, SolutionKind> kinds{{"free", SolutionKind::free},
                                                    {"free-gprime", SolutionKind::free_gprime},
                                                    {"bouncer", SolutionKind::bouncer},
                                                    {"psi0", SolutionKind::psi0}};
    const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

    std::string kind_name{to_string(cfg.kind)};
    app.add_option("--kind", kind_name, "free | free-gprime | bouncer | psi0")
        ->check(CLI::IsMember(kinds, CLI::ignore_case))
        ->capture_default_str();
    app.add_option("--x0", cfg.x0, "initial center (wall at x = 0, packet on x < 0)")->capture_default_str();
    app.add_option("--p0", cfg.p0, "initial mean momentum (> 0 moves toward the wall)")->capture_default_str();
    app.add_option("--alpha", cfg.alpha, "momentum-space width parameter")->capture_default_str();
    app.add_option("--hbar", cfg.hbar)->capture_default_str();
    app.add_option("--mass", cfg.mass)->capture_default_str();
    app.add_option("--tmin", cfg.t_min)->capture_default_str();
    auto* tmax_opt = app.add_option("--tmax", t_max, "default: 3 t_c for a colliding bouncer, else 3 t0");
    auto* nt_opt = app.add_option("--nt", cfg.n_times, "number of time samples");
    auto* xmin_opt = app.add_option("--xmin", x_min, "left grid edge (default from packet width and reach)");
    auto* nx_opt = app.add_option("--nx", n_x, "grid points, odd");
    std::string format_name{to_string(cfg.format)};
    app.add_option("--format", format_name, "csv | json")
        ->check(CLI::IsMember(formats, CLI::ignore_case))
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "output file ('-' or empty for stdout)");

    auto* density = app.add_subcommand("density", "position probability density snapshots");
    auto* moments = app.add_subcommand("moments", "<x>, <p> numerically; <x^2>, <p^2> exactly; classical and "
                                                  "near-collision overlays");
    auto* autocorr = app.add_subcommand("autocorr", "autocorrelation closed form and numeric overlap");
    auto* validate = app.add_subcommand("validate", "run every acceptance criterion; exit 0 iff all pass");
    std::vector<std::string> only;
    std::uint64_t seed = ValidationOptions{}.seed;
    validate->add_option("--criterion", only, "restrict to these criterion ids (repeatable)");
    validate->add_option("--seed", seed, "seed for randomized parameter sets")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitBadArguments;
    }

    cfg.kind = kinds.at(CLI::detail::to_lower(kind_name));
    cfg.format = formats.at(CLI::detail::to_lower(format_name));
    if (tmax_opt->count() > 0) {
        cfg.t_max = t_max;
    }
    if (xmin_opt->count() > 0) {
        cfg.x_min = x_min;
    }
    if (nx_opt->count() > 0) {
        cfg.n_x = n_x;
    }
    if (nt_opt->count() == 0 && density->parsed()) {
        cfg.n_times = 7;
    }

    try {
        if (validate->parsed()) {
            return run_validate(cfg, only, seed, out, err);
        }
        cfg.validate();
        if (density->parsed()) {
            emit_table(density_table(cfg), cfg, "density", out);
        } else if (moments->parsed()) {
            emit_table(moments_table(cfg), cfg, "moments", out);
        } else if (autocorr->parsed()) {
            emit_table(autocorr_table(cfg), cfg, "autocorr", out);
        }
        return kExitSuccess;
    } catch (const TailCaptureError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const NonConvergedError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitBadArguments;
}

}  // namespace bouncer::cli
