#include <becscat/scattering.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <becscat/bogoliubov.hpp>
#include <becscat/errors.hpp>

namespace becscat {

namespace {
constexpr double pi = std::numbers::pi;
// (3/4pi) gamma is the unique prefactor making the bare angular
// distribution |P|^2 integrate to the full spontaneous rate 2 gamma.
constexpr double bare_prefactor = 3.0 / (4.0 * pi);
} // namespace

double polarization_factor(double theta) {
    if (!(theta >= 0.0 && theta <= pi))
        throw std::domain_error("scattering angle must lie in [0, pi]");
    const double c = std::cos(theta);
    return 0.5 * (1.0 + c * c);
}

ProfileSummary summarize(const CondensateProfile& profile) {
    ProfileSummary s;
    s.species_name = profile.species.name;
    s.atom_number_N = profile.atom_number_N;
    s.radius_R = profile.radius_R;
    s.shape = profile.shape;
    s.beta_bar = profile.beta_bar;
    s.beta_peak = profile.beta_peak;
    return s;
}

SpectrumPoint differential_rate(const CondensateProfile& profile, double theta,
                                double tol, const CutoffPolicy& cutoff) {
    SpectrumPoint point;
    point.theta = theta;
    point.q_over_hbar_k = momentum_transfer(theta).q_over_hbar_k;
    point.vbar2 = averaged_occupation(profile, theta, tol, cutoff);
    point.enhancement = 1.0 + point.vbar2;
    point.dw_dOmega_in_gamma =
        bare_prefactor * polarization_factor(theta) * point.enhancement;
    if (profile.beta_bar > 0.0) {
        const auto asym = small_angle_asymptote(profile, theta);
        if (asym.within_validity) point.asymptote_in_gamma = asym.value_in_gamma;
    }
    return point;
}

AngularSpectrum angular_spectrum(const CondensateProfile& profile,
                                 std::span<const double> theta_grid, double tol,
                                 const CutoffPolicy& cutoff) {
    AngularSpectrum spectrum;
    spectrum.profile_summary = summarize(profile);
    spectrum.cutoff_applied = cutoff.enabled;
    spectrum.theta_min = cutoff.enabled ? theta_min(profile, cutoff.factor) : 0.0;

    for (std::size_t i = 1; i < theta_grid.size(); ++i)
        if (!(theta_grid[i] > theta_grid[i - 1]))
            throw std::domain_error("theta grid must be strictly increasing");

    spectrum.rows.reserve(theta_grid.size());
    for (double theta : theta_grid) {
        try {
            spectrum.rows.push_back(differential_rate(profile, theta, tol, cutoff));
        } catch (const std::domain_error& e) {
            std::ostringstream msg;
            msg << "at theta = " << theta << " rad: " << e.what();
            throw std::domain_error(msg.str());
        } catch (const NumericalError& e) {
            std::ostringstream msg;
            msg << "at theta = " << theta << " rad: " << e.what();
            throw NumericalError(msg.str());
        }
    }
    return spectrum;
}

TotalRate total_rate(const CondensateProfile& profile, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");

    // Bare part: (3/8) int_0^pi (1 + cos^2) sin dtheta = 1. Kept as a live
    // quadrature so the normalization of the whole pipeline is checked on
    // every call.
    auto bare = integrate_adaptive(
        [](double theta) {
            const double c = std::cos(theta);
            return (3.0 / 8.0) * (1.0 + c * c) * std::sin(theta);
        },
        0.0, pi, 0.25 * tol);

    TotalRate rate;
    if (profile.beta_bar == 0.0) {
        if (!bare.converged)
            throw NumericalError("bare angular quadrature did not converge");
        rate.w_over_2gamma = bare.value;
        rate.correction = 0.0;
        return rate;
    }

    // Correction integrated separately so the O(beta) difference carries no
    // cancellation error. Substituting s = sin(theta/2) maps
    // (3/8)(1+cos^2) vbar2 sin dtheta to (3/2)(1+(1-2s^2)^2) vbar2(s) s ds
    // whose integrand stays finite at s -> 0 (vbar2 ~ 1/s there).
    // No low-angle cutoff: the integral is convergent and the trap cutoff
    // would shift it only at O((kR)^-2 beta).
    const double inner_tol = 0.125 * tol;
    const CutoffPolicy no_cutoff = CutoffPolicy::disabled();
    auto vbar2_at_s = [&](double s) {
        const double theta = 2.0 * std::asin(s);
        return averaged_occupation(profile, theta, inner_tol, no_cutoff);
    };
    auto corr = integrate_adaptive(
        [&](double s) {
            const double w = 1.0 - 2.0 * s * s;
            return 1.5 * (1.0 + w * w) * vbar2_at_s(s) * s;
        },
        0.0, 1.0, 0.25 * tol);

    if (!bare.converged || !corr.converged) {
        std::ostringstream msg;
        msg << "total-rate quadrature did not converge (achieved "
            << std::max(bare.abs_error_estimate, corr.abs_error_estimate)
            << ", requested " << tol << ")";
        throw NumericalError(msg.str());
    }
    rate.correction = corr.value;
    rate.w_over_2gamma = bare.value + corr.value;
    return rate;
}

double first_order_total(double beta_bar) {
    if (beta_bar < 0.0 || !std::isfinite(beta_bar))
        throw std::domain_error("beta_bar must be finite and non-negative");
    return 1.0 + 0.375 * beta_bar;
}

AsymptoteValue small_angle_asymptote(const CondensateProfile& profile,
                                     double theta) {
    if (!(theta > 0.0))
        throw std::domain_error("asymptote angle must be positive");
    const auto shape = mean_density_and_shape(profile);
    AsymptoteValue result;
    const double sqrt_beta_bar = std::sqrt(profile.beta_bar);
    result.value_in_gamma =
        3.0 * sqrt_beta_bar * shape.sqrt_shape_factor_S / (8.0 * pi * theta);
    result.within_validity = theta < sqrt_beta_bar;
    return result;
}

SingleAtomForward single_atom_forward_reference() {
    return {3.0 / (8.0 * pi), 3.0 / (4.0 * pi)};
}

OpticalDensityResult optical_density(const CondensateProfile& profile,
                                     double detuning) {
    const double k = profile.species.wavenumber_k;
    const double d = detuning / profile.species.gamma;
    const double sigma = (6.0 * pi / (k * k)) / (1.0 + d * d);
    // Column density through the trap center.
    const double column = (profile.shape == ProfileShape::ThomasFermiSphere)
                              ? (4.0 / 3.0) * profile.peak_density_n0 * profile.radius_R
                              : 2.0 * profile.peak_density_n0 * profile.radius_R;
    OpticalDensityResult result;
    result.od = sigma * column;
    const double washout_threshold =
        profile.beta_bar > 0.0 ? 1.0 / std::sqrt(profile.beta_bar)
                               : std::numeric_limits<double>::infinity();
    result.washout_safe = result.od < washout_threshold;
    return result;
}

} // namespace becscat
