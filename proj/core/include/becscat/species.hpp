#pragma once

#include <string>
#include <vector>

namespace becscat {

namespace constants {
/// hbar [J s], CODATA 2018 exact-definition value.
inline constexpr double hbar = 1.054571817e-34;
} // namespace constants

/// Physical constants of one atom and its optical transition.
///
/// All fields are SI. `gamma` is half of the spontaneous emission rate
/// 2*gamma, so total bare emission integrates to 2*gamma. The contact
/// coupling g = 4 pi hbar^2 a / m is derived on demand, never stored.
struct AtomSpecies {
    double mass = 0.0;                // kg
    double scattering_length_a = 0.0; // m, s-wave, repulsive (a > 0)
    double wavenumber_k = 0.0;        // 1/m, resonant photon wavenumber
    double gamma = 0.0;               // 1/s, half of the spontaneous rate
    std::string name;
};

/// Throws std::domain_error unless mass, a, k, gamma are all positive.
void validate(const AtomSpecies& species);

/// Contact interaction constant g = 4 pi hbar^2 a / m  [J m^3].
double interaction_constant(const AtomSpecies& species);

/// Look up a built-in species by preset name ("sodium-Na23").
/// Throws ConfigError naming the available presets on an unknown name.
AtomSpecies species_from_preset(const std::string& name);

/// Names accepted by species_from_preset.
std::vector<std::string> known_presets();

} // namespace becscat
