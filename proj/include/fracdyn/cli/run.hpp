#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "../abm.hpp"
#include "../convergence.hpp"
#include "../errors.hpp"
#include "../gdm.hpp"
#include "config.hpp"
#include "csv.hpp"

namespace fracdyn::cli {

enum ExitCode : int { exit_ok = 0, exit_validation = 1, exit_numerical = 2 };

/// Produces the CSV document for a configuration. Throws on failure.
inline std::string render(const RunConfig& cfg)
{
    cfg.validate();
    const SystemSpec system = gdm::gdm_system(cfg.model);
    std::ostringstream out;
    switch (cfg.mode) {
    case RunMode::simulate:
        write_trajectory_csv(out, abm_solve(system, UniformGrid(cfg.horizon, cfg.steps)));
        break;
    case RunMode::phase:
        write_phase_csv(out, abm_solve(system, UniformGrid(cfg.horizon, cfg.steps)));
        break;
    case RunMode::converge:
        write_convergence_csv(out, analysis::convergence_study(system, cfg.horizon, cfg.step_counts));
        break;
    }
    return out.str();
}

/// Runs the configured mode and writes the CSV to cfg.output_path. Returns an
/// ExitCode; diagnostics go to `diag`.
inline int run(const RunConfig& cfg, std::ostream& diag)
{
    std::string csv;
    try {
        csv = render(cfg);
    }
    catch (const NonFiniteError& e) {
        diag << "fracdyn: numerical failure: " << e.what() << '\n';
        return exit_numerical;
    }
    catch (const std::invalid_argument& e) {
        diag << "fracdyn: invalid configuration: " << e.what() << '\n';
        return exit_validation;
    }

    if (cfg.output_path.empty()) {
        diag << "fracdyn: no output path given\n";
        return exit_validation;
    }
    std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        diag << "fracdyn: cannot open " << cfg.output_path << " for writing\n";
        return exit_validation;
    }
    file << csv;
    file.close();
    if (!file) {
        diag << "fracdyn: write to " << cfg.output_path << " failed\n";
        return exit_validation;
    }
    return exit_ok;
}

} // namespace fracdyn::cli
