#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <becscat/quadrature.hpp>

namespace becscat {

// Observables of incoherent photon scattering off the condensate. Every
// rate is expressed in units of gamma (differential) or 2*gamma (totals),
// which removes the photon frequency and the dipole matrix element from
// the data model entirely.

/// |P(theta)|^2 = (1 + cos^2 theta)/2 for circular polarization of the
/// emitted photon. Throws std::domain_error outside [0, pi].
double polarization_factor(double theta);

struct SpectrumPoint {
    double theta = 0.0;            // rad
    double q_over_hbar_k = 0.0;    // 2 sin(theta/2)
    double vbar2 = 0.0;            // spatially averaged v^2
    double dw_dOmega_in_gamma = 0.0; // (3/4pi) |P|^2 (1 + vbar2)
    double enhancement = 1.0;      // 1 + vbar2
    std::optional<double> asymptote_in_gamma; // set when theta < sqrt(beta_bar)
};

struct ProfileSummary {
    std::string species_name;
    double atom_number_N = 0.0;
    double radius_R = 0.0;
    ProfileShape shape = ProfileShape::ThomasFermiSphere;
    double beta_bar = 0.0;
    double beta_peak = 0.0;
};

ProfileSummary summarize(const CondensateProfile& profile);

struct AngularSpectrum {
    std::vector<SpectrumPoint> rows; // strictly increasing theta
    ProfileSummary profile_summary;
    bool cutoff_applied = true;
    double theta_min = 0.0;
};

/// One spectrum point. The bosonic-stimulation enhancement 1 + vbar2
/// multiplies the bare single-atom angular distribution; the prefactor
/// (3/4pi) gamma is fixed by requiring the bare integrated rate 2*gamma.
SpectrumPoint differential_rate(const CondensateProfile& profile, double theta,
                                double tol = 1e-10,
                                const CutoffPolicy& cutoff = CutoffPolicy{});

/// Batch evaluation over a strictly increasing theta grid. Per-point
/// errors are rethrown with the offending theta named.
AngularSpectrum angular_spectrum(const CondensateProfile& profile,
                                 std::span<const double> theta_grid,
                                 double tol = 1e-10,
                                 const CutoffPolicy& cutoff = CutoffPolicy{});

struct TotalRate {
    double w_over_2gamma = 1.0;
    double correction = 0.0; // w/2gamma - bare; ~ (3/8) beta_bar for small beta_bar
};

/// Angle-integrated rate in units of 2*gamma. The correction is computed
/// as its own quadrature (after the s = sin(theta/2) substitution the
/// integrand is finite at the origin) so the small difference carries no
/// cancellation error; the bare part integrates to 1 as a normalization
/// check. No low-angle cutoff is applied: the integral is convergent and
/// the cutoff's effect is O((kR)^-2 beta_bar).
TotalRate total_rate(const CondensateProfile& profile, double tol = 1e-10);

/// First-order closed form w/2gamma = 1 + (3/8) beta_bar.
double first_order_total(double beta_bar);

struct AsymptoteValue {
    double value_in_gamma = 0.0;
    bool within_validity = false; // theta < sqrt(beta_bar)
};

/// Small-angle form 3 sqrt(beta_bar) S / (8 pi theta) in gamma units,
/// where S is the density-shape factor of mean_density_and_shape. Valid
/// for theta << sqrt(beta_bar); the flag records whether theta is inside
/// that window. Throws std::domain_error for theta <= 0.
AsymptoteValue small_angle_asymptote(const CondensateProfile& profile,
                                     double theta);

struct SingleAtomForward {
    /// Commonly quoted single-atom forward rate, 3/(8 pi) gamma. This is
    /// half of bare_forward; the discrepancy looks like a polarization-
    /// averaging convention and both values are exposed rather than
    /// guessing which was meant.
    double reference_value;
    /// Forward limit of differential_rate with no depletion: 3/(4 pi).
    double bare_forward;
};

SingleAtomForward single_atom_forward_reference();

struct OpticalDensityResult {
    double od = 0.0;
    bool washout_safe = true; // od < beta_bar^(-1/2)
};

/// Resonant two-level absorption through the cloud center:
/// od = sigma(detuning) * column density, sigma = (6 pi/k^2) Lorentzian
/// with half-width gamma. Column density is (4/3) n0 R for the TF sphere
/// and 2 n0 R for the uniform ball. Multiple scattering washes the
/// depletion signal out once od exceeds beta_bar^(-1/2).
OpticalDensityResult optical_density(const CondensateProfile& profile,
                                     double detuning = 0.0);

} // namespace becscat
