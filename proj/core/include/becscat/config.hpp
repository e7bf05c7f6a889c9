#pragma once

#include <optional>
#include <string>
#include <vector>

#include <becscat/condensate.hpp>

namespace becscat {

enum class Command { Spectrum, TotalRate, Regime, OpticalDensity, Plot };
enum class OutputFormat { Csv, Json };
enum class GridSpacing { Linear, Log };

struct ThetaGrid {
    double min = 0.0; // rad
    double max = 0.0; // rad
    int count = 0;
    GridSpacing spacing = GridSpacing::Log;
};

struct OutputSpec {
    OutputFormat format = OutputFormat::Csv;
    std::string path = "-"; // "-" writes to stdout
};

/// Validated run description, all quantities in SI base units.
struct RunConfig {
    AtomSpecies species;
    double atom_number = 0.0;
    double radius = 0.0; // m
    ProfileShape shape = ProfileShape::ThomasFermiSphere;
    std::optional<ThetaGrid> theta_grid; // default derived from the profile
    double tolerance = 1e-10;
    double cutoff_factor = 1.0;
    OutputSpec output;
    Command command = Command::Regime;
    double detuning = 0.0; // rad/s, optical-density command only
};

/// Parses and validates one flat JSON config document. Unknown keys are
/// rejected; missing required fields are named; lengths/wavenumbers carry
/// unit suffixes (m, cm, um, nm and 1/m, 1/cm) resolved exactly. Throws
/// ConfigError with a machine-readable one-line reason.
RunConfig load_config(const std::string& json_text);

/// load_config after applying "key=value" overrides ("theta_grid.min=2e-3",
/// "species=sodium-Na23", ...). Overrides take precedence over the document.
RunConfig load_config(const std::string& json_text,
                      const std::vector<std::string>& overrides);

RunConfig load_config_file(const std::string& path,
                           const std::vector<std::string>& overrides = {});

/// "3.63e-3 cm" -> 3.63e-5. The decimal exponent is adjusted before the
/// single string-to-double conversion, so unit conversion is exact.
double parse_length(const std::string& text);
/// "1.07e5 1/cm" -> 1.07e7.
double parse_wavenumber(const std::string& text);

/// Expands the grid spec into an ordered theta list.
std::vector<double> make_theta_grid(const ThetaGrid& grid);

/// Grid used when the config omits theta_grid: [theta_min(profile), pi],
/// 200 points, log spacing.
ThetaGrid default_theta_grid(const CondensateProfile& profile,
                             double cutoff_factor);

} // namespace becscat
