#pragma once

#include <becscat/species.hpp>

namespace becscat {

enum class ProfileShape {
    ThomasFermiSphere, // n(r) = n0 (1 - r^2/R^2), n0 = (5/2) N/V
    Uniform            // n(r) = N/V inside R; analytic cross-check fixture
};

/// Spherical condensate at zero temperature. Densities and the
/// dimensionless interaction parameters are derived at construction:
///
///   beta_bar  = 4 pi a nbar / k^2   (the small parameter of the theory)
///   beta_peak = 4 pi a n0   / k^2   = (5/2) beta_bar for the TF sphere
struct CondensateProfile {
    AtomSpecies species;
    double atom_number_N = 0.0;
    double radius_R = 0.0;           // m
    ProfileShape shape = ProfileShape::ThomasFermiSphere;

    double peak_density_n0 = 0.0;    // 1/m^3
    double mean_density_nbar = 0.0;  // 1/m^3
    double beta_bar = 0.0;
    double beta_peak = 0.0;
    double chemical_potential_mu = 0.0; // J, mu = g n0, informational
};

/// Builds the profile and populates every derived field.
/// N = 0 is allowed (empty trap: all densities and betas zero).
/// Throws std::domain_error for R <= 0 or N < 0.
CondensateProfile build_condensate(const AtomSpecies& species, double atom_number,
                                   double radius, ProfileShape shape);

struct LocalDensity {
    double density;    // 1/m^3
    double beta_local; // 4 pi a n(r) / k^2
};

/// Local condensate density and interaction parameter at radius r >= 0.
LocalDensity density_at(const CondensateProfile& profile, double r);

struct MeanDensityResult {
    double nbar;                 // V^-1 int n d^3r, by radial quadrature
    double sqrt_shape_factor_S;  // (V sqrt(nbar))^-1 int sqrt(n) d^3r
};

/// Recomputes the mean density by quadrature and cross-checks it against
/// the closed form (n̄/n0 = 2/5 for the TF sphere). S is the density-shape
/// factor entering the small-angle asymptote; S = 1 for a uniform cloud,
/// (3 pi/16) sqrt(5/2) ~ 0.93137 for the TF sphere.
MeanDensityResult mean_density_and_shape(const CondensateProfile& profile,
                                         double tol = 1e-10);

/// Pair-correlation scale 1 / (4 pi a n(r)). Throws std::domain_error
/// where the local density vanishes (the scale is infinite there).
double correlation_length(const CondensateProfile& profile, double r);

/// Low-angle evaluation cutoff. A finite trap bounds the momentum
/// transfer from below at about hbar/R, i.e. theta_min ~ factor/(kR).
struct CutoffPolicy {
    bool enabled = true;
    double factor = 1.0;
    static CutoffPolicy disabled() { return {false, 1.0}; }
};

/// theta_min = factor / (k R). Throws std::domain_error for factor <= 0.
double theta_min(const CondensateProfile& profile, double factor = 1.0);

/// Validity diagnostics for the depletion-scattering regime.
struct RegimeReport {
    double sqrt_beta_bar = 0.0;
    double inverse_kR = 0.0;
    bool coherent_cone_exceeded = false; // beta_bar >> (kR)^-2
    bool thomas_fermi_valid = false;     // N >> R/a
    double N_over_R_by_a = 0.0;
    double theta_min = 0.0;              // rad, finite-size cutoff
    double theta_max_small_angle = 0.0;  // rad, sqrt(beta_bar)
};

/// The ">>" flags use a conventional factor of 10; the raw ratios are
/// reported so callers can apply their own threshold.
RegimeReport regime_report(const CondensateProfile& profile,
                           double cutoff_factor = 1.0);

} // namespace becscat
