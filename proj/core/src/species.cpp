#include <becscat/species.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <becscat/errors.hpp>

namespace becscat {

void validate(const AtomSpecies& species) {
    if (!(species.mass > 0.0))
        throw std::domain_error("species mass must be positive");
    if (!(species.scattering_length_a > 0.0))
        throw std::domain_error("scattering length a must be positive (repulsive gas)");
    if (!(species.wavenumber_k > 0.0))
        throw std::domain_error("resonant wavenumber k must be positive");
    if (!(species.gamma > 0.0))
        throw std::domain_error("half-linewidth gamma must be positive");
}

double interaction_constant(const AtomSpecies& species) {
    validate(species);
    return 4.0 * std::numbers::pi * constants::hbar * constants::hbar *
           species.scattering_length_a / species.mass;
}

std::vector<std::string> known_presets() { return {"sodium-Na23"}; }

AtomSpecies species_from_preset(const std::string& name) {
    if (name == "sodium-Na23") {
        AtomSpecies na;
        // 23Na, D2 line. a and k are the trap-experiment values
        // (a = 2.75e-7 cm, k = 1.07e5 1/cm, converted to SI); mass is
        // 22.98976928 u and gamma is half the spontaneous rate,
        // Gamma/2pi = 9.7946 MHz.
        na.mass = 22.98976928 * 1.66053906660e-27;
        na.scattering_length_a = 2.75e-9;
        na.wavenumber_k = 1.07e7;
        na.gamma = std::numbers::pi * 9.7946e6;
        na.name = name;
        return na;
    }
    std::ostringstream msg;
    msg << "unknown species preset '" << name << "' (available:";
    for (const auto& p : known_presets()) msg << " " << p;
    msg << ")";
    throw ConfigError(msg.str());
}

} // namespace becscat
