#pragma once

/*
 * runconfig.hpp -- command-line and config-file front end.
 *
 * Precedence is flags over config-file entries over pinned defaults.
 * Config files are flat `key=value` text with `#` comments; keys are the
 * long flag names with the dashes removed (`nexp`, `xmax`, ...).
 */

#include <sunstruct/grid.hpp>
#include <sunstruct/model.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace sunstruct {

enum class RunMode { profiles, energy, luminosity, all, check };

struct RunConfig {
    ModelParams params;
    Composition composition;
    PhysicalConstants constants;
    int grid_points = 256;
    double x_max = 1.0;
    std::string output_path = "-";  // "-" means stdout
    RunMode mode = RunMode::profiles;
    double truncation_tol = 1e-8;
};

// Thrown on flag, config-file, or invariant violations; carries the
// process exit code (1 validation, 2 I/O).
struct ConfigError : std::runtime_error {
    ConfigError(const std::string& msg, int code)
        : std::runtime_error(msg), exit_code(code) {}
    int exit_code;
};

// `args` holds the arguments in natural order, program name excluded.
RunConfig parse_run_config(const std::vector<std::string>& args);

TableMode table_mode_for(RunMode mode);

void write_table_csv(const ProfileTable& table, std::ostream& os);

// Executes the configured mode; table output goes to `table_out` when
// output_path is "-", warnings and the check report go to `diag`.
// Returns the process exit code.
int run(const RunConfig& config, std::ostream& table_out, std::ostream& diag);

} // namespace sunstruct
