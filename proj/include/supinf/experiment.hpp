#pragma once

#include "supinf/config.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace supinf {

/// Names of the experiment commands the front end dispatches on.
std::vector<std::string> experiment_commands();

/// Resolve where artifacts go: --out flag beats the SUPINF_OUT_DIR
/// environment variable beats the config key output.dir beats ".".
std::string resolve_out_dir(Config& cfg, const std::string& flag_value);

/// Run one experiment command: read its keys from cfg (erroring on unknown
/// or out-of-range values), compute, write CSV/JSON artifacts into out_dir,
/// and print one summary line per artifact to log. Throws ConfigError /
/// SolverError / DomainError; the CLI maps those to exit codes.
void run_experiment(const std::string& command, Config& cfg, const std::string& out_flag,
                    std::ostream& log);

} // namespace supinf
