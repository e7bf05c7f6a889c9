#pragma once

#include <iosfwd>

#include <becscat/config.hpp>

namespace becscat {

// CLI exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_domain_error = 3;
inline constexpr int exit_numerical_error = 4;
inline constexpr int exit_io_error = 5;

/// Maps a caught exception to its exit code and one-line stderr reason.
int classify_error(const std::exception& e, std::ostream& err);

/// Dispatches the configured command, writes the output artifact, and
/// returns the exit code. All diagnostics go to err as a single line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace becscat
