#pragma once

#include <functional>
#include <string>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

/// Ideal-metal closed forms at zero temperature.
/// Pressure between plates, P = -pi^2 hbar c / (240 a^4), Pa.
double ideal_metal_pressure_t0(double a);
/// Energy per unit area, E = -pi^2 hbar c / (720 a^3), J/m^2.
double ideal_metal_energy_t0(double a);
/// Sphere-plate force, F = -pi^3 hbar c R / (360 a^3), N.
double ideal_metal_force_sphere_t0(double a, double r_sphere);

/// Expansion coefficients for the sphere-plate force in the relative
/// penetration depth delta0/a plus the low-temperature thermal term
///   theta(tau) = theta3 tau^3 + theta4 tau^4,  tau = 2 pi k_B T a/(hbar c).
struct PerturbationCoeffs {
    double c1, c2, c3, c4; // powers (delta0/a)^1..4
    double theta3, theta4;
    std::string source; // citation tag carried from the coefficient table

    /// Built-in weak-field literature values (c1 = -4, ...).
    static PerturbationCoeffs defaults();
    /// Load from a text table of `key=value` lines, `#` comments; keys
    /// c1..c4, theta3, theta4 and a mandatory `source=` line.
    static PerturbationCoeffs load_file(const std::string& path);
};

/// The two small parameters at the point of evaluation.
struct PerturbationParams {
    double delta0; // m, penetration depth c/omega_p
    double tau;    // dimensionless, 2 pi k_B T a / (hbar c)
};

struct PerturbativeForce {
    double force;          // N
    PerturbationParams params;
    int truncation_order;  // highest power of delta0/a retained
    bool outside_validity; // delta0/a >= 0.3 or tau >= 1 (warned)
};

/// Perturbation expansion of the sphere-plate force,
///   F = F_ideal(a, R) [1 + sum c_k (delta0/a)^k + theta(tau)].
/// Warns on stderr when delta0/a >= 0.3 or tau >= 1; throws DomainError
/// at delta0/a > 0.5.
PerturbativeForce perturbative_force_sphere(double a, double t, double r_sphere,
                                            double omega_p,
                                            const PerturbationCoeffs& coeffs =
                                                PerturbationCoeffs::defaults());

struct RoughnessSpec {
    double rms_sphere = 0.0; // m
    double rms_plate = 0.0;  // m
    double variance() const {
        return rms_sphere * rms_sphere + rms_plate * rms_plate;
    }
};

/// Second-order stochastic roughness averaging of an arbitrary
/// separation-dependent quantity:
///   <F(a + delta)> = F(a) + (sigma^2/2) F''(a),
/// F'' by central differences with step 1e-3 a. Throws DomainError when
/// sigma/a >= 0.2.
double roughness_correct(const std::function<double(double)>& value_fn, double a,
                         const RoughnessSpec& spec);

} // namespace casimir
