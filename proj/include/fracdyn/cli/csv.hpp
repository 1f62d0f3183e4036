#pragma once

#include <charconv>
#include <ostream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "../convergence.hpp"
#include "../grid.hpp"

namespace fracdyn::cli {

/// Shortest decimal form that parses back to the same double.
inline std::string format_number(double value)
{
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    if (ec != std::errc())
        throw std::runtime_error("format_number: conversion failed");
    return std::string(buffer, end);
}

/// Header `t,x,y`, one row per node.
inline void write_trajectory_csv(std::ostream& os, const Trajectory& traj)
{
    os << "t,x,y\n";
    for (std::size_t k = 0; k < traj.times.size(); ++k)
        os << format_number(traj.times[k]) << ',' << format_number(traj.states[k][0]) << ','
           << format_number(traj.states[k][1]) << '\n';
}

/// Header `x,y`, every node of the phase-plane curve.
inline void write_phase_csv(std::ostream& os, const Trajectory& traj)
{
    os << "x,y\n";
    for (const auto& state : traj.states)
        os << format_number(state[0]) << ',' << format_number(state[1]) << '\n';
}

/// Header `N,tau,xi_x,xi_y,p_x,p_y`; absent orders are empty cells.
inline void write_convergence_csv(std::ostream& os, const analysis::ConvergenceReport& report)
{
    auto cell = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
    os << "N,tau,xi_x,xi_y,p_x,p_y\n";
    for (const auto& row : report.rows)
        os << row.steps << ',' << format_number(row.step_size) << ',' << format_number(row.xi_x())
           << ',' << format_number(row.xi_y()) << ',' << cell(row.p_x()) << ',' << cell(row.p_y())
           << '\n';
}

} // namespace fracdyn::cli
