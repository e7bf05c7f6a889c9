#pragma once

namespace becscat {

// Dimensionless quasiparticle kernel. Momenta are measured in hbar*k
// (s = sin(theta/2), q = 2 hbar k s), energies in hbar^2 k^2 / m, and the
// local interaction enters only through beta_local = 4 pi a n / k^2.

struct MomentumTransfer {
    double s;             // sin(theta/2)
    double q_over_hbar_k; // 2 s
};

/// Elastic photon-scattering momentum transfer q = 2 hbar k sin(theta/2).
/// Throws std::domain_error outside theta in [0, pi].
MomentumTransfer momentum_transfer(double theta);

struct QuasiparticleEnergies {
    double eps;    // 2 s sqrt(s^2 + beta)
    double eps_hf; // 2 s^2 + beta
};

/// Quasiparticle and Hartree-Fock energies; eps^2 + beta^2 = eps_hf^2.
QuasiparticleEnergies energies(double s, double beta_local);

struct BogoliubovPoint {
    double s;
    double beta_local;
    double eps;
    double eps_hf;
    double u;  // >= 1
    double v;  // <= 0
    double v2; // v^2, the depletion occupation number
};

/// Transformation coefficients
///   u = sqrt(eps_hf/(2 eps) + 1/2),  v = -sqrt(eps_hf/(2 eps) - 1/2),
/// satisfying u^2 - v^2 = 1 and u^2 + v^2 = eps_hf/eps.
/// beta_local = 0 returns the ideal-gas point (u, v) = (1, 0) exactly,
/// including at s = 0. s = 0 with beta_local > 0 is the phonon
/// singularity: std::domain_error, callers must apply the finite-size
/// cutoff instead of sampling it.
BogoliubovPoint coefficients(double s, double beta_local);

/// v^2 only, for hot loops; bit-identical to coefficients(...).v2.
/// Closed form: (2 s^2 + beta) / (4 s sqrt(s^2 + beta)) - 1/2.
double depletion_occupation(double s, double beta_local);

} // namespace becscat
