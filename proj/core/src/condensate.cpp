#include <becscat/condensate.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <becscat/errors.hpp>
#include <becscat/quadrature.hpp>

namespace becscat {

namespace {
constexpr double pi = std::numbers::pi;
} // namespace

CondensateProfile build_condensate(const AtomSpecies& species, double atom_number,
                                   double radius, ProfileShape shape) {
    validate(species);
    if (!(radius > 0.0))
        throw std::domain_error("condensate radius must be positive");
    if (atom_number < 0.0 || !std::isfinite(atom_number))
        throw std::domain_error("atom number must be finite and non-negative");

    CondensateProfile p;
    p.species = species;
    p.atom_number_N = atom_number;
    p.radius_R = radius;
    p.shape = shape;

    const double volume = (4.0 / 3.0) * pi * radius * radius * radius;
    p.mean_density_nbar = atom_number / volume;
    // TF parabola integrates to N when n0 = (5/2) N/V; all atoms condensed
    // at zero temperature.
    p.peak_density_n0 = (shape == ProfileShape::ThomasFermiSphere)
                            ? 2.5 * p.mean_density_nbar
                            : p.mean_density_nbar;
    const double k = species.wavenumber_k;
    p.beta_bar = 4.0 * pi * species.scattering_length_a * p.mean_density_nbar / (k * k);
    p.beta_peak = (shape == ProfileShape::ThomasFermiSphere) ? 2.5 * p.beta_bar
                                                             : p.beta_bar;
    p.chemical_potential_mu = interaction_constant(species) * p.peak_density_n0;
    return p;
}

LocalDensity density_at(const CondensateProfile& profile, double r) {
    if (r < 0.0 || !std::isfinite(r))
        throw std::domain_error("radial coordinate must be finite and non-negative");

    const double x = r / profile.radius_R;
    double shape_value = 0.0; // n(r)/n0
    switch (profile.shape) {
        case ProfileShape::ThomasFermiSphere:
            shape_value = std::max(0.0, 1.0 - x * x);
            break;
        case ProfileShape::Uniform:
            shape_value = (r <= profile.radius_R) ? 1.0 : 0.0;
            break;
    }
    return {profile.peak_density_n0 * shape_value, profile.beta_peak * shape_value};
}

MeanDensityResult mean_density_and_shape(const CondensateProfile& profile, double tol) {
    // Radial substitution x = r/R; 3 x^2 dx is the normalized shell weight,
    // so V^-1 int f(n(r)) d^3r = int_0^1 3 x^2 f(n0 g(x)) dx with g the
    // density shape.
    if (profile.shape == ProfileShape::Uniform) {
        // Constant density: nbar = n0 and S = 1 exactly. Exercise the
        // quadrature anyway as a consistency check on the shell weight.
        auto unit = integrate_adaptive([](double x) { return 3.0 * x * x; }, 0.0, 1.0, tol);
        if (!unit.converged || std::abs(unit.value - 1.0) > 1e-12) {
            std::ostringstream msg;
            msg << "radial quadrature self-check failed (int 3x^2 = " << unit.value
                << ", error estimate " << unit.abs_error_estimate << ")";
            throw NumericalError(msg.str());
        }
        return {profile.peak_density_n0, 1.0};
    }

    auto mean_ratio = integrate_adaptive(
        [](double x) { return 3.0 * x * x * (1.0 - x * x); }, 0.0, 1.0, tol);
    auto sqrt_ratio = integrate_adaptive(
        [](double x) { return 3.0 * x * x * std::sqrt(std::max(0.0, 1.0 - x * x)); },
        0.0, 1.0, tol);
    if (!mean_ratio.converged || !sqrt_ratio.converged) {
        std::ostringstream msg;
        msg << "radial quadrature did not converge (achieved "
            << std::max(mean_ratio.abs_error_estimate, sqrt_ratio.abs_error_estimate)
            << ", requested " << tol << ")";
        throw NumericalError(msg.str());
    }
    // Closed form for the TF parabola: 3 int x^2 (1-x^2) dx = 2/5.
    if (std::abs(mean_ratio.value - 0.4) > 1e-9)
        throw NumericalError("TF mean-density quadrature disagrees with the closed form 2/5");

    MeanDensityResult result;
    result.nbar = profile.peak_density_n0 * mean_ratio.value;
    result.sqrt_shape_factor_S = sqrt_ratio.value / std::sqrt(mean_ratio.value);
    return result;
}

double correlation_length(const CondensateProfile& profile, double r) {
    const auto local = density_at(profile, r);
    if (!(local.density > 0.0))
        throw std::domain_error(
            "correlation length undefined: local density vanishes (infinite scale)");
    return 1.0 / (4.0 * pi * profile.species.scattering_length_a * local.density);
}

double theta_min(const CondensateProfile& profile, double factor) {
    if (!(factor > 0.0))
        throw std::domain_error("cutoff factor must be positive");
    return factor / (profile.species.wavenumber_k * profile.radius_R);
}

RegimeReport regime_report(const CondensateProfile& profile, double cutoff_factor) {
    RegimeReport report;
    report.sqrt_beta_bar = std::sqrt(profile.beta_bar);
    const double kR = profile.species.wavenumber_k * profile.radius_R;
    report.inverse_kR = 1.0 / kR;
    // ">>" thresholds: one decade.
    report.coherent_cone_exceeded = profile.beta_bar > 10.0 / (kR * kR);
    report.N_over_R_by_a =
        profile.atom_number_N * profile.species.scattering_length_a / profile.radius_R;
    report.thomas_fermi_valid = report.N_over_R_by_a > 10.0;
    report.theta_min = theta_min(profile, cutoff_factor);
    report.theta_max_small_angle = report.sqrt_beta_bar;
    return report;
}

} // namespace becscat
