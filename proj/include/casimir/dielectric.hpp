#pragma once

#include <memory>
#include <string>
#include <variant>

#include "casimir/optics_data.hpp"
#include "casimir/superconductor.hpp"

namespace casimir {

struct Vacuum {};
struct IdealMetal {};

struct Plasma {
    double omega_p; // rad/s
};

struct Drude {
    double omega_p; // rad/s
    double gamma;   // rad/s, >= 0; gamma = 0 evaluates identically to Plasma
};

struct Tabulated {
    std::shared_ptr<const OpticalTable> table;
    ExtrapolationPolicy extrapolation;
};

enum class ScSubModel { PlasmaBelowTc, MattisBardeen };

struct Superconductor {
    SuperconductorParams params;
    ScSubModel sub_model = ScSubModel::MattisBardeen;
};

using DielectricModel =
    std::variant<Vacuum, IdealMetal, Plasma, Drude, Tabulated, Superconductor>;

/// Behaviour of eps as xi -> 0, which the l = 0 Lifshitz term depends on.
struct Finite {
    double eps0; // eps approaches a finite constant
};
struct DrudeLike {}; // eps * xi finite (TE reflection vanishes at xi = 0)
struct PlasmaLike {
    double omega_eff_sq; // eps * xi^2 -> omega_eff^2, rad^2/s^2
};
using ZeroFreqClass = std::variant<Finite, DrudeLike, PlasmaLike>;

/// eps(i xi) for xi > 0 strictly (the l = 0 term is governed by
/// zero_freq_class instead). The temperature only matters for the
/// Superconductor variant. IdealMetal is rejected: callers must use the
/// ideal-metal reflection short circuit.
double eps_imag_axis(const DielectricModel& model, double xi, double t,
                     double rel_tol = 1e-8);

/// Classify the xi -> 0 limit of the model at temperature t.
ZeroFreqClass zero_freq_class(const DielectricModel& model, double t);

/// Field penetration depth c/omega_p for models that carry a plasma
/// frequency; DomainError otherwise.
double penetration_depth(const DielectricModel& model);

bool is_ideal_metal(const DielectricModel& model);

/// Parse the model grammar used by the CLI and config files:
///   ideal
///   vacuum
///   plasma:wp=9.0eV
///   drude:wp=9.0eV,gamma=0.035eV
///   table:path=au.nk,extrap=drude,wp=9.0eV,gamma=0.035eV[,hexp=3]
///   table:path=au.nk,extrap=plasma,wp=9.0eV[,hexp=3]
///   sc:wp=...,gamma=...,tc=1.3K,model=mb|plasma[,gap0=1.764]
/// Frequencies accept a bare rad/s value or an `eV` suffix.
DielectricModel parse_model_spec(const std::string& spec);

/// Canonical round-trippable text form, used for provenance hashing.
std::string model_spec_string(const DielectricModel& model);

} // namespace casimir
