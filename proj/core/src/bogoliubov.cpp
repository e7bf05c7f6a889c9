#include <becscat/bogoliubov.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace becscat {

MomentumTransfer momentum_transfer(double theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw std::domain_error("scattering angle must lie in [0, pi]");
    const double s = std::sin(0.5 * theta);
    return {s, 2.0 * s};
}

QuasiparticleEnergies energies(double s, double beta_local) {
    if (s < 0.0 || !std::isfinite(s))
        throw std::domain_error("dimensionless momentum s must be non-negative");
    if (beta_local < 0.0 || !std::isfinite(beta_local))
        throw std::domain_error("beta_local must be non-negative");
    // Units hbar^2 k^2 / m: kinetic q^2/2m -> 2 s^2, g n -> beta.
    return {2.0 * s * std::sqrt(s * s + beta_local), 2.0 * s * s + beta_local};
}

double depletion_occupation(double s, double beta_local) {
    if (s < 0.0 || beta_local < 0.0 || !std::isfinite(s) || !std::isfinite(beta_local))
        throw std::domain_error("s and beta_local must be non-negative");
    if (beta_local == 0.0)
        return 0.0; // ideal gas, no depletion at any s
    if (s == 0.0)
        throw std::domain_error(
            "v^2 diverges at s = 0 for beta > 0; apply the finite-size angle cutoff");
    // eps_hf/(2 eps) - 1/2 in closed form.
    return (2.0 * s * s + beta_local) / (4.0 * s * std::sqrt(s * s + beta_local)) - 0.5;
}

BogoliubovPoint coefficients(double s, double beta_local) {
    BogoliubovPoint point;
    point.s = s;
    point.beta_local = beta_local;
    point.v2 = depletion_occupation(s, beta_local); // validates the inputs
    const auto e = energies(s, beta_local);
    point.eps = e.eps;
    point.eps_hf = e.eps_hf;
    if (beta_local == 0.0) {
        point.u = 1.0;
        point.v = 0.0;
        return point;
    }
    point.u = std::sqrt(1.0 + point.v2); // u^2 - v^2 = 1
    point.v = -std::sqrt(point.v2);      // sign convention of the transformation
    return point;
}

} // namespace becscat
