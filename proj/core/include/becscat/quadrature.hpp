#pragma once

#include <cstdint>
#include <functional>

#include <becscat/condensate.hpp>

namespace becscat {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::int64_t evaluations = 0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod (7-15) integration of f over [a, b] to absolute
/// tolerance tol. The rule has interior nodes only, so integrable endpoint
/// behavior is handled by subdivision and the endpoints are never
/// evaluated. Deterministic: identical inputs produce identical results,
/// including the evaluation count.
///
/// On subdivision/evaluation-budget exhaustion the best available value is
/// returned with converged = false; it is never silently wrong, the
/// achieved error estimate is reported.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double tol);

/// Spatially averaged depletion occupation at scattering angle theta,
///
///   vbar2 = V^-1 int v^2(s, beta(r)) d^3r
///         = 3 int_0^1 x^2 v^2(s, beta_peak (1 - x^2)) dx   (TF sphere)
///
/// with s = sin(theta/2). For a uniform profile this is v^2(s, beta_bar)
/// directly. The integrand vanishes smoothly at the cloud edge.
///
/// theta below the finite-size cutoff throws std::domain_error unless the
/// policy disables the cutoff; quadrature failure throws NumericalError.
double averaged_occupation(const CondensateProfile& profile, double theta,
                           double tol = 1e-10,
                           const CutoffPolicy& cutoff = CutoffPolicy{});

} // namespace becscat
