#include "casimir/superconductor.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

using constants::hbar;
using constants::k_boltzmann;

// f(E) - f(E + hw) for the Fermi function, stable for all magnitudes.
double fermi_diff(double e, double hw, double kt) {
    // b must come from hw directly: (e + hw)/kt - e/kt cancels
    // catastrophically for hw << e
    const double b = 0.5 * hw / kt;
    const double a = e / kt + b;
    if (a < 300.0)
        return std::sinh(b) / (std::cosh(a) + std::cosh(b));
    // Boltzmann limit: f(e) - f(e+hw) ~ e^{-e/kt}(1 - e^{-hw/kt})
    return std::exp(-e / kt) * -std::expm1(-2.0 * b);
}

// 1 - 2 f(E) = tanh(E / (2 kT))
double one_minus_two_f(double e, double kt) { return std::tanh(0.5 * e / kt); }

} // namespace

GapValue bcs_gap(double t, const SuperconductorParams& p) {
    if (t < 0.0) throw DomainError("temperature must be >= 0");
    const double delta0 = p.gap0_ratio * k_boltzmann * p.t_c;
    if (t >= p.t_c) return {0.0, t};
    if (t == 0.0) return {delta0, t};
    return {delta0 * std::tanh(1.74 * std::sqrt(p.t_c / t - 1.0)), t};
}

SigmaRatio mb_sigma(double omega, double t, const SuperconductorParams& p,
                    double rel_tol) {
    if (!(omega > 0.0)) throw DomainError("mb_sigma requires omega > 0");
    const double delta = bcs_gap(t, p).delta;
    if (delta == 0.0) return {1.0, 0.0};
    const double hw = hbar * omega;
    const double kt = k_boltzmann * std::max(t, 1e-6 * p.t_c);
    quad::Options opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = 1e-14;

    // --- sigma_1, thermal quasiparticle part: E = delta cosh(u) removes
    // the sqrt(E^2 - delta^2) endpoint singularity in closed form. The
    // remaining factor sqrt((E+hw)^2 - delta^2) ~ delta sqrt(u^2 + u0^2)
    // develops a logarithmic boundary layer of width u0 as hw -> 0;
    // u = u0 sinh(s) resolves it exactly via the Jacobian.
    const double umax = std::acosh(1.0 + 60.0 * kt / delta);
    const double u0 = std::sqrt(hw * (2.0 * delta + hw)) / delta;
    auto therm = [&](double s) {
        const double u = u0 * std::sinh(s);
        const double e = delta * std::cosh(u);
        const double num = e * e + delta * delta + hw * e;
        // e - delta = 2 delta sinh^2(u/2) avoids cancellation at small u
        const double sh = std::sinh(0.5 * u);
        const double den = std::sqrt((2.0 * delta * sh * sh + hw) *
                                     (e + delta + hw));
        return (2.0 / hw) * fermi_diff(e, hw, kt) * num / den * u0 *
               std::cosh(s);
    };
    double s1 = quad::integrate(therm, 0.0, std::asinh(umax / u0), opt);

    // --- sigma_1, pair-breaking part (hw > 2 delta): E in [delta-hw, -delta],
    // E = L + (U-L) sin^2(theta) cancels both 1/sqrt endpoints (factor 2).
    // On this branch sqrt(E^2 - delta^2) is negative, hence the sign flip.
    if (hw > 2.0 * delta) {
        const double lo = delta - hw;
        const double hi = -delta;
        auto pair = [&](double th) {
            const double s = std::sin(th);
            const double e = lo + (hi - lo) * s * s;
            const double num = -(e * e + delta * delta + hw * e);
            const double den =
                std::sqrt(delta - e) * std::sqrt(e + hw + delta);
            return (2.0 / hw) * one_minus_two_f(e + hw, kt) * num / den;
        };
        s1 += quad::integrate(pair, 0.0, 0.5 * M_PI, opt);
    }

    // --- sigma_2: E in [max(delta-hw, -delta), delta], same substitution,
    // both endpoint singularities cancel against the Jacobian.
    {
        const double lo = std::max(delta - hw, -delta);
        auto imag = [&](double th) {
            const double s = std::sin(th);
            const double e = lo + (delta - lo) * s * s;
            const double num = e * e + delta * delta + hw * e;
            // the two cancelled factors differ with the branch of lo
            const double den = (hw > 2.0 * delta)
                                   ? std::sqrt(e + hw - delta) *
                                         std::sqrt(e + hw + delta)
                                   : std::sqrt(delta + e) *
                                         std::sqrt(e + hw + delta);
            return (2.0 / hw) * one_minus_two_f(e + hw, kt) * num / den;
        };
        const double s2 = quad::integrate(imag, 0.0, 0.5 * M_PI, opt);
        return {s1, s2};
    }
}

double superfluid_weight(double t, const SuperconductorParams& p) {
    const double delta = bcs_gap(t, p).delta;
    if (delta == 0.0) throw DomainError("normal state: no superfluid weight at t >= t_c");
    const double th =
        t > 0.0 ? std::tanh(0.5 * delta / (k_boltzmann * t)) : 1.0;
    return p.omega_p * p.omega_p / p.gamma * (M_PI * delta / hbar) * th;
}

double eps_sc_imag_axis(double xi, double t, const SuperconductorParams& p,
                        double rel_tol) {
    if (!(xi > 0.0)) throw DomainError("eps_sc_imag_axis requires xi > 0");
    const double g = p.gamma;
    const double wp2 = p.omega_p * p.omega_p;
    const double delta = bcs_gap(t, p).delta;
    if (delta == 0.0) return 1.0 + wp2 / (xi * (xi + g)); // exactly Drude

    const double ws2 = superfluid_weight(t, p);
    const double scale = std::max(delta, k_boltzmann * t) / hbar;
    const double w_cut = 3e4 * scale;

    quad::Options opt;
    opt.rel_tol = rel_tol;
    opt.max_intervals = 8000;
    auto integrand = [&](double w) {
        const double s1 = w > 0.0 ? mb_sigma(w, t, p, 1e-2 * rel_tol).s1 : 1.0;
        return s1 * g / ((w * w + g * g) * (w * w + xi * xi));
    };
    // Log-segmented breakpoints: the kernel has features at the gap edge,
    // the thermal scale, gamma and xi, spread over many decades.
    const double w_min = 1e-6 * scale;
    const auto pts = quad::log_segments(w_min, w_cut, 4,
                                        {delta / hbar, 2.0 * delta / hbar,
                                         k_boltzmann * t / hbar, g, xi});
    double v = quad::integrate_segments(integrand, pts, opt);
    // [0, w_min] carries sigma_1's integrable w -> 0 logarithmic
    // divergence; an absolute floor tied to the main value keeps the
    // splitter from chasing the singularity far below relevance.
    quad::Options opt_low = opt;
    opt_low.abs_tol = rel_tol * std::fabs(v);
    v += quad::integrate(integrand, 0.0, w_min, opt_low);

    // Analytic remainder with sigma_1 = 1 beyond w_cut.
    double rem;
    if (std::fabs(xi - g) > 1e-6 * g) {
        rem = g / (xi * xi - g * g) *
              ((0.5 * M_PI - std::atan(w_cut / g)) / g -
               (0.5 * M_PI - std::atan(w_cut / xi)) / xi);
    } else {
        rem = (0.5 * M_PI - std::atan(w_cut / g)) / (2.0 * g * g) -
              w_cut / (2.0 * g * (w_cut * w_cut + g * g));
    }
    return 1.0 + ws2 / (xi * xi) + (2.0 / M_PI) * wp2 * (v + rem);
}

} // namespace casimir
