#include "casimir/lifshitz.hpp"

#include <cmath>
#include <iostream>

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

using constants::c_light;
using constants::hbar;
using constants::k_boltzmann;

// e^{-y} decays the integrands; 60 e-foldings beyond the onset is far
// below every supported tolerance.
constexpr double k_decay_span = 60.0;

struct PlateState {
    const DielectricModel* model;
    bool ideal;
};

// Per-Matsubara-term reflection data for one plate: either the ideal
// short circuit or eps at xi_l (l >= 1) / the zero-frequency class (l = 0).
struct PlateTerm {
    bool ideal = false;
    bool zero = false;
    double eps = 1.0;
    ZeroFreqClass cls = Finite{1.0};

    ReflectionCoeffs reflect(double xi, double k_perp) const {
        if (ideal) return {1.0, -1.0};
        if (zero) return reflection_coeffs_zero(cls, k_perp);
        return reflection_coeffs(eps, xi, k_perp);
    }
};

PlateTerm make_term(const DielectricModel& m, int l, double xi, double t,
                    double rel_tol) {
    PlateTerm term;
    if (is_ideal_metal(m)) {
        term.ideal = true;
        return term;
    }
    if (l == 0) {
        term.zero = true;
        term.cls = zero_freq_class(m, t);
    } else {
        term.eps = eps_imag_axis(m, xi, t, rel_tol);
    }
    return term;
}

enum class Summand { Pressure, Energy };

// One Matsubara term: \int_{y_l}^{y_l + span} w(y) sum_alpha s(r1 r2 e^{-y}) dy
// with w = y^2, s = x/(1-x) for the pressure and w = y, s = ln(1-x) for
// the free energy.
double matsubara_integral(Summand kind, const PlateTerm& p1, const PlateTerm& p2,
                          double a, double xi, const quad::Options& opt) {
    const double y_l = 2.0 * a * xi / c_light;
    auto integrand = [&](double y) {
        const double k2 = y * y / (4.0 * a * a) - xi * xi / (c_light * c_light);
        const double k_perp = std::sqrt(std::max(k2, 0.0));
        const auto r1 = p1.reflect(xi, k_perp);
        const auto r2 = p2.reflect(xi, k_perp);
        const double e = std::exp(-y);
        double s = 0.0;
        for (double rr : {r1.r_tm * r2.r_tm, r1.r_te * r2.r_te}) {
            const double x = rr * e;
            if (x == 0.0) continue;
            s += (kind == Summand::Pressure) ? x / (1.0 - x) : std::log1p(-x);
        }
        return (kind == Summand::Pressure ? y * y : y) * s;
    };
    return quad::integrate(integrand, y_l, y_l + k_decay_span, opt);
}

double matsubara_sum(Summand kind, const DielectricModel& m1,
                     const DielectricModel& m2, double a,
                     const ThermalState& state, const QuadratureConfig& cfg) {
    if (!(a > 0.0)) throw DomainError("separation must be > 0");
    const double t = state.temperature;
    if (!(t > 0.0))
        throw DomainError("Matsubara sum requires t > 0; use the "
                          "zero-temperature operation");
    quad::Options opt;
    opt.rel_tol = cfg.rel_tol;
    opt.abs_tol = 1e-300;

    double total = 0.0;
    double prev_term = 0.0;
    for (int l = 0;; ++l) {
        if (l >= cfg.max_matsubara_terms) {
            const double achieved =
                total != 0.0 ? std::fabs(prev_term / total) : 0.0;
            throw ConvergenceError("Matsubara sum not converged within " +
                                       std::to_string(cfg.max_matsubara_terms) +
                                       " terms",
                                   achieved, cfg.rel_tol);
        }
        const double xi = matsubara_frequency(l, t);
        const auto p1 = make_term(m1, l, xi, t, cfg.rel_tol);
        // identical objects share one (possibly expensive) eps evaluation
        const auto p2 = (&m1 == &m2) ? p1 : make_term(m2, l, xi, t, cfg.rel_tol);
        double term = matsubara_integral(kind, p1, p2, a, xi, opt);
        if (l == 0) term *= 0.5;
        total += term;
        if (l >= 2) {
            if (total == 0.0) break; // vacuum on either side
            const double rel = std::fabs(term / total);
            if (rel < cfg.rel_tol && std::fabs(term) <= std::fabs(prev_term)) {
                // The spectrum decays (asymptotically geometrically) in l;
                // appending the geometric tail leaves only its second-order
                // error as truncation bias.
                if (cfg.tail_estimate && prev_term != 0.0 && term != 0.0) {
                    const double r = std::fabs(term / prev_term);
                    if (r < 1.0) total += term * r / (1.0 - r);
                }
                break;
            }
        }
        prev_term = term;
    }
    return total;
}

void check_zero_temperature_model(const DielectricModel& m) {
    if (is_ideal_metal(m)) return;
    if (std::holds_alternative<Superconductor>(m))
        throw DomainError("zero-T superconductor evaluation not supported: "
                          "the permittivity is temperature dependent");
    const auto cls = zero_freq_class(m, 0.0);
    if (std::holds_alternative<DrudeLike>(cls))
        throw DomainError("zero-T Drude limit not supported");
}

// Continuous imaginary-frequency double integral at T = 0 with
// xi = (c/2a) x; outer variable x, inner y >= x.
double zero_temperature_integral(Summand kind, const DielectricModel& m1,
                                 const DielectricModel& m2, double a,
                                 const QuadratureConfig& cfg) {
    if (!(a > 0.0)) throw DomainError("separation must be > 0");
    check_zero_temperature_model(m1);
    check_zero_temperature_model(m2);
    quad::Options inner_opt;
    inner_opt.rel_tol = 0.1 * cfg.rel_tol;
    inner_opt.abs_tol = 1e-300;
    quad::Options outer_opt;
    outer_opt.rel_tol = cfg.rel_tol;
    outer_opt.abs_tol = 1e-300;
    auto outer = [&](double x) {
        const double xi = 0.5 * c_light * x / a;
        // xi > 0 strictly inside the quadrature nodes
        const auto p1 = make_term(m1, 1, xi, 0.0, cfg.rel_tol);
        const auto p2 = make_term(m2, 1, xi, 0.0, cfg.rel_tol);
        return matsubara_integral(kind, p1, p2, a, xi, inner_opt);
    };
    return quad::integrate(outer, 0.0, k_decay_span, outer_opt);
}

void check_pfa(double a, double r_sphere) {
    if (!(r_sphere > 0.0)) throw DomainError("sphere radius must be > 0");
    const double ratio = a / r_sphere;
    if (ratio > 0.1)
        throw DomainError("proximity force approximation invalid: a/R = " +
                          std::to_string(ratio) + " > 0.1");
    if (ratio > 0.05)
        std::cerr << "warning: proximity force approximation marginal, a/R = "
                  << ratio << " > 0.05\n";
}

} // namespace

double matsubara_frequency(int l, double temperature) {
    if (l < 0) throw DomainError("Matsubara index must be >= 0");
    if (!(temperature > 0.0)) throw DomainError("temperature must be > 0");
    return 2.0 * M_PI * k_boltzmann * temperature * l / hbar;
}

ReflectionCoeffs reflection_coeffs(double eps, double xi, double k_perp) {
    if (!(eps > 0.0)) throw DomainError("eps on the imaginary axis must be > 0");
    const double xi2c2 = xi * xi / (c_light * c_light);
    const double q = std::sqrt(k_perp * k_perp + xi2c2);
    const double kt = std::sqrt(k_perp * k_perp + eps * xi2c2);
    return {(eps * q - kt) / (eps * q + kt), (q - kt) / (q + kt)};
}

ReflectionCoeffs reflection_coeffs_zero(const ZeroFreqClass& cls, double k_perp) {
    return std::visit(
        [&](const auto& c) -> ReflectionCoeffs {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, Finite>) {
                return {(c.eps0 - 1.0) / (c.eps0 + 1.0), 0.0};
            } else if constexpr (std::is_same_v<C, DrudeLike>) {
                return {1.0, 0.0};
            } else {
                const double kt = std::sqrt(
                    k_perp * k_perp + c.omega_eff_sq / (c_light * c_light));
                return {1.0, (k_perp - kt) / (k_perp + kt)};
            }
        },
        cls);
}

double pressure_plate_plate(const DielectricModel& plate1,
                            const DielectricModel& plate2, double separation,
                            const ThermalState& state,
                            const QuadratureConfig& cfg) {
    const double a = separation;
    if (state.temperature == 0.0) {
        const double integral =
            zero_temperature_integral(Summand::Pressure, plate1, plate2, a, cfg);
        return -hbar * c_light / (32.0 * M_PI * M_PI * a * a * a * a) * integral;
    }
    const double sum =
        matsubara_sum(Summand::Pressure, plate1, plate2, a, state, cfg);
    return -k_boltzmann * state.temperature / (8.0 * M_PI * a * a * a) * sum;
}

double free_energy_per_area(const DielectricModel& plate1,
                            const DielectricModel& plate2, double separation,
                            const ThermalState& state,
                            const QuadratureConfig& cfg) {
    const double a = separation;
    if (state.temperature == 0.0)
        return energy_zero_temperature(plate1, plate2, a, cfg);
    const double sum =
        matsubara_sum(Summand::Energy, plate1, plate2, a, state, cfg);
    return k_boltzmann * state.temperature / (8.0 * M_PI * a * a) * sum;
}

double force_sphere_plate(const DielectricModel& sphere,
                          const DielectricModel& plate, const Geometry& geometry,
                          const ThermalState& state,
                          const QuadratureConfig& cfg) {
    if (!geometry.sphere_radius)
        throw DomainError("force_sphere_plate requires a sphere radius");
    const double r = *geometry.sphere_radius;
    check_pfa(geometry.separation, r);
    return 2.0 * M_PI * r *
           free_energy_per_area(sphere, plate, geometry.separation, state, cfg);
}

double energy_zero_temperature(const DielectricModel& plate1,
                               const DielectricModel& plate2, double separation,
                               const QuadratureConfig& cfg) {
    const double a = separation;
    const double integral =
        zero_temperature_integral(Summand::Energy, plate1, plate2, a, cfg);
    return hbar * c_light / (32.0 * M_PI * M_PI * a * a * a) * integral;
}

} // namespace casimir
