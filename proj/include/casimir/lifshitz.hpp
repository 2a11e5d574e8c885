#pragma once

#include <optional>

#include "casimir/dielectric.hpp"

namespace casimir {

/// Two plane-parallel half spaces a metres apart, or a sphere of radius
/// r_sphere above a plate treated in the proximity force approximation.
struct Geometry {
    double separation;                    // m, > 0
    std::optional<double> sphere_radius;  // m; empty means plate-plate
};

struct ThermalState {
    double temperature; // K, >= 0
};

/// Convergence knobs for the Matsubara sum and the inner quadratures.
struct QuadratureConfig {
    double rel_tol = 1e-9;
    int max_matsubara_terms = 20000;
    /// Append a geometric-series estimate of the truncated Matsubara
    /// tail instead of requiring the terms themselves to fall below
    /// tolerance. Keeps sub-kelvin sweeps affordable.
    bool tail_estimate = true;
};

/// l-th Matsubara frequency 2 pi k_B T l / hbar, rad/s.
double matsubara_frequency(int l, double temperature);

struct ReflectionCoeffs {
    double r_tm;
    double r_te;
};

/// Fresnel coefficients at imaginary frequency xi and transverse wave
/// number k_perp for a half space of permittivity eps (both real > 0).
ReflectionCoeffs reflection_coeffs(double eps, double xi, double k_perp);

/// The xi = 0 limit, governed by the zero-frequency class rather than a
/// numerical eps value: TM -> 1 for any metal class, TE -> 0 for
/// DrudeLike and the finite plasma-like form for PlasmaLike.
ReflectionCoeffs reflection_coeffs_zero(const ZeroFreqClass& cls, double k_perp);

/// Casimir pressure between two half spaces, Pa. Negative = attraction.
double pressure_plate_plate(const DielectricModel& plate1,
                            const DielectricModel& plate2, double separation,
                            const ThermalState& state,
                            const QuadratureConfig& cfg = {});

/// Free energy per unit area of the plate-plate configuration, J/m^2.
double free_energy_per_area(const DielectricModel& plate1,
                            const DielectricModel& plate2, double separation,
                            const ThermalState& state,
                            const QuadratureConfig& cfg = {});

/// Sphere-plate force via the proximity force approximation,
/// F = 2 pi R F_pp(a), newtons, negative = attraction. Requires
/// geometry.sphere_radius. Emits a one-line warning on stderr when
/// a/R > 0.05 and throws DomainError when a/R > 0.1.
double force_sphere_plate(const DielectricModel& sphere,
                          const DielectricModel& plate, const Geometry& geometry,
                          const ThermalState& state,
                          const QuadratureConfig& cfg = {});

/// Zero-temperature energy per unit area, J/m^2, by the continuous
/// imaginary-frequency integral. Rejects (DomainError) models whose
/// zero-frequency behaviour depends on temperature or relaxation:
/// Drude, dissipative tabulated extrapolations, superconductors.
double energy_zero_temperature(const DielectricModel& plate1,
                               const DielectricModel& plate2, double separation,
                               const QuadratureConfig& cfg = {});

} // namespace casimir
