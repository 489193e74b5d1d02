#pragma once

#include "eqsvt/cli/run_config.hpp"

#include <ostream>

namespace eqsvt::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_config = 2,
    exit_solver = 3,
    exit_contract = 4,
};

/// `out` receives the summary lines, `err` the diagnostics; CSV goes to
/// config.output_path, or to `out` when that is empty.
int cmd_cost_scan(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_cost_curve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_prepare(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_approx_check(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Validates, then dispatches on config.command.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace eqsvt::cli
