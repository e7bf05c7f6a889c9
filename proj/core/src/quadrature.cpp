#include <becscat/quadrature.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <becscat/bogoliubov.hpp>
#include <becscat/errors.hpp>

namespace becscat {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule. All nodes are
// interior, so endpoints are never evaluated. Positive abscissae; the
// even-indexed ones are the Gauss nodes.
constexpr std::array<double, 8> kronrod_x = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr std::array<double, 8> kronrod_w = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018,
    0.14065325971552592, 0.16900472663926790, 0.19035057806478540,
    0.20443294007529889, 0.20948214108472783};
constexpr std::array<double, 4> gauss_w = {
    0.12948496616886969, 0.27970539148927666, 0.38183005050511894,
    0.41795918367346939};

struct PanelEstimate {
    double integral;
    double error;
};

// One Gauss-Kronrod panel with the standard error scaling: the raw
// |K15 - G7| difference is damped through the integrand's variation
// (resasc) so smooth panels are not punished and rough panels are.
PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<double, 15> fv{};
    const double fc = f(center);
    fv[14] = fc;
    double gauss = gauss_w[3] * fc;
    double kronrod = kronrod_w[7] * fc;
    double resabs = kronrod_w[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kronrod_x[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        const double fsum = f1 + f2;
        kronrod += kronrod_w[j] * fsum;
        resabs += kronrod_w[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) gauss += gauss_w[j / 2] * fsum;
    }

    const double mean = kronrod * 0.5;
    double resasc = kronrod_w[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kronrod_w[j] *
                  (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
    resasc *= std::abs(half);
    resabs *= std::abs(half);

    double err = std::abs((kronrod - gauss) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double epmach = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * epmach))
        err = std::max(epmach * 50.0 * resabs, err);

    return {kronrod * half, err};
}

struct Segment {
    double a;
    double b;
    double tol;
    int depth;
};

constexpr int max_depth = 52;
constexpr std::int64_t max_evaluations = 10'000'000;

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("quadrature tolerance must be positive");
    if (!(a <= b)) throw std::domain_error("integration bounds must satisfy a <= b");

    QuadratureResult result;
    result.converged = true;

    // Depth-first, left-to-right: the node sequence (and therefore the
    // result, bit for bit) depends only on the inputs.
    std::vector<Segment> stack;
    stack.push_back({a, b, tol, 0});
    while (!stack.empty()) {
        const Segment seg = stack.back();
        stack.pop_back();

        const auto panel = gk15(f, seg.a, seg.b);
        result.evaluations += 15;

        const double mid = 0.5 * (seg.a + seg.b);
        const bool splittable = mid > seg.a && mid < seg.b;
        const bool budget_left =
            seg.depth < max_depth && result.evaluations < max_evaluations;
        if (panel.error <= seg.tol || !splittable || !budget_left) {
            result.value += panel.integral;
            result.abs_error_estimate += panel.error;
            if (panel.error > seg.tol) result.converged = false;
            continue;
        }
        stack.push_back({mid, seg.b, 0.5 * seg.tol, seg.depth + 1});
        stack.push_back({seg.a, mid, 0.5 * seg.tol, seg.depth + 1});
    }
    return result;
}

double averaged_occupation(const CondensateProfile& profile, double theta,
                           double tol, const CutoffPolicy& cutoff) {
    if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
    const auto mt = momentum_transfer(theta); // validates theta in [0, pi]
    if (profile.beta_bar == 0.0) return 0.0;  // no depletion to occupy

    if (cutoff.enabled) {
        const double bound = theta_min(profile, cutoff.factor);
        if (theta < bound) {
            std::ostringstream msg;
            msg << "theta = " << theta << " rad is below the finite-size cutoff "
                << "theta_min = " << bound << " rad (minimum momentum transfer in "
                << "the trap is of order hbar/R)";
            throw std::domain_error(msg.str());
        }
    }

    if (profile.shape == ProfileShape::Uniform)
        return depletion_occupation(mt.s, profile.beta_bar);

    const double s = mt.s;
    const double beta_peak = profile.beta_peak;
    auto integrand = [s, beta_peak](double x) {
        const double beta_local = beta_peak * std::max(0.0, 1.0 - x * x);
        return 3.0 * x * x * depletion_occupation(s, beta_local);
    };
    const auto q = integrate_adaptive(integrand, 0.0, 1.0, tol);
    if (!q.converged) {
        std::ostringstream msg;
        msg << "spatial average of v^2 did not converge at theta = " << theta
            << " (achieved " << q.abs_error_estimate << ", requested " << tol << ")";
        throw NumericalError(msg.str());
    }
    return q.value;
}

} // namespace becscat
