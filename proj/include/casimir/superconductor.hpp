#pragma once

#include "casimir/errors.hpp"

namespace casimir {

/// Drude parameters of the normal state plus the critical temperature.
/// gap0_ratio is Delta(0)/(k_B T_c), 1.764 in weak coupling.
struct SuperconductorParams {
    double omega_p; // rad/s
    double gamma;   // rad/s
    double t_c;     // K
    double gap0_ratio = 1.764;
};

struct GapValue {
    double delta; // J
    double t;     // K
};

/// BCS gap via the standard tanh interpolant,
///   Delta(t) = gap0_ratio k_B t_c tanh(1.74 sqrt(t_c/t - 1)),
/// zero at and above t_c, continuous at t_c.
GapValue bcs_gap(double t, const SuperconductorParams& p);

/// Mattis-Bardeen complex conductivity normalized to the normal state.
struct SigmaRatio {
    double s1; // sigma_1 / sigma_n
    double s2; // sigma_2 / sigma_n
};

/// Dirty-limit, local Mattis-Bardeen kernels at angular frequency omega
/// and temperature t. Endpoint square-root singularities are removed by
/// cosh/sin^2 substitutions before quadrature.
SigmaRatio mb_sigma(double omega, double t, const SuperconductorParams& p,
                    double rel_tol = 1e-9);

/// Weight of the zero-frequency delta term expressed as an effective
/// plasma frequency squared:
///   omega_s^2(t) = (omega_p^2/gamma) (pi Delta(t)/hbar) tanh(Delta(t)/(2 k_B t)).
/// Throws DomainError("normal state") for t >= t_c.
double superfluid_weight(double t, const SuperconductorParams& p);

/// Permittivity of the superconducting metal on the imaginary axis.
/// For t >= t_c this is exactly the Drude eps(i xi); below t_c it is
///   1 + omega_s^2(t)/xi^2
///     + (2/pi) \int_0^inf omega (sigma_1/sigma_n) Im eps_Drude(omega)
///              / (omega^2 + xi^2) domega,
/// continuous in t at t_c for every xi.
double eps_sc_imag_axis(double xi, double t, const SuperconductorParams& p,
                        double rel_tol = 1e-8);

} // namespace casimir
