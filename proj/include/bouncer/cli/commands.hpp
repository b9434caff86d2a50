#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bouncer/cli/run_config.hpp"
#include "bouncer/validation.hpp"

namespace bouncer::cli {

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitBadArguments = 2;

/// Rows of numbers; an empty optional is a value that does not apply
/// (written as an empty CSV field or JSON null).
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;
};

/// (t, x, density) for every grid point at every requested time.
Table density_table(const RunConfig& cfg);

/// (t, x_mean_numeric, x_mean_classical, x_mean_approx, p_mean_numeric,
/// x2_exact, p2_exact). Numeric columns come from grid quadrature, exact
/// columns from closed forms; x_mean_approx is filled only for the bouncer
/// inside the near-collision window.
Table moments_table(const RunConfig& cfg);

/// (t, re, im, abs2, numeric_re, numeric_im, numeric_abs2) for kinds free and bouncer.
Table autocorr_table(const RunConfig& cfg);

/// Shortest fixed form used everywhere in output: 17 significant digits.
std::string format_number(double value);

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(std::string_view text);

void write_csv(std::ostream& os, const Table& table);
void write_json(std::ostream& os, const Table& table, const RunConfig& cfg, std::string_view command);

/// Metadata object {schema_version, command, kind, params, units, ...}.
std::string metadata_json(const RunConfig& cfg, std::string_view command);

void write_report(std::ostream& os, const std::vector<CriterionResult>& results, OutputFormat format);

/// Full command-line entry point. Data go to `out` (or --out), diagnostics
/// to `err`. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bouncer::cli
