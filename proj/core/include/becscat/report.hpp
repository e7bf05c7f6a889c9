#pragma once

#include <string>

#include <becscat/config.hpp>
#include <becscat/scattering.hpp>

namespace becscat {

// Bit-exact serialization. CSV cells carry 17 significant digits
// (%.16e), which round-trips any double losslessly; JSON uses the
// shortest exact representation. Rendering is fully deterministic so
// identical inputs produce byte-identical files.

std::string render_spectrum(const AngularSpectrum& spectrum, OutputFormat format);
std::string render_regime(const RegimeReport& report, OutputFormat format);
std::string render_total_rate(const TotalRate& rate, double beta_bar,
                              OutputFormat format);
std::string render_optical_density(const OpticalDensityResult& od,
                                   double detuning, double beta_bar,
                                   OutputFormat format);

/// Log-log SVG plot of the spectrum (rate and, where defined, the
/// small-angle asymptote). Reporting sugar; not part of the data contract.
std::string render_spectrum_svg(const AngularSpectrum& spectrum);

/// Parses a render_spectrum product back; used for round-trip checks.
AngularSpectrum parse_spectrum_csv(const std::string& text);
AngularSpectrum parse_spectrum_json(const std::string& text);

/// Writes content to path via a temp file + atomic rename, or to stdout
/// when path is "-". Failures throw IoError and leave no partial file.
void write_text_file(const std::string& path, const std::string& content);

/// 17-significant-digit cell formatting used by the CSV writer.
std::string format_cell(double value);

} // namespace becscat
