#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "casimir/analytic.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/superconductor.hpp"

namespace casimir {

enum class Quantity { Force, Pressure };

/// Everything needed to reproduce a computed curve, plus its FNV-1a hash.
struct Provenance {
    std::string geometry;     // "plate-plate" or "sphere-plate R=..."
    std::string model_sphere; // canonical model spec strings
    std::string model_plate;
    double temperature = 0.0;
    RoughnessSpec roughness;
    double quad_rel_tol = 0.0;

    std::string config_string() const;
    std::uint64_t hash() const; // FNV-1a over config_string()
};

struct ForceCurve {
    std::vector<std::pair<double, double>> points; // (a [m], value [N or Pa])
    Quantity quantity = Quantity::Force;
    Provenance provenance;
};

/// Relative-displacement force data: z lacks an absolute zero, the
/// offset a0 with a = z + a0 is the fit unknown.
struct MeasuredSeries {
    struct Point {
        double z;       // m
        double f;       // N
        double sigma_f; // N, > 0
    };
    std::vector<Point> points;
};

struct FitResult {
    double a0;    // m
    double rms;   // N
    double a_min; // m, fit interval
    double a_max; // m
    int n_points;
};

/// Evaluate the sphere-plate force (or plate-plate pressure when the
/// geometry has no sphere radius) over the grid, roughness corrected,
/// with provenance fully populated. Throws DomainError on an empty or
/// non-increasing grid.
ForceCurve generate_curve(const Geometry& geometry, const DielectricModel& sphere,
                          const DielectricModel& plate, const ThermalState& state,
                          const RoughnessSpec& roughness,
                          const std::vector<double>& grid,
                          const QuadratureConfig& cfg = {});

/// Monotone-cubic interpolant of a ForceCurve in log a - log|F|, so a
/// cached curve can serve as the theory evaluator in fits.
class CurveEvaluator {
public:
    explicit CurveEvaluator(const ForceCurve& curve);
    double operator()(double a) const; // DomainError outside the grid range

private:
    std::vector<double> log_a_, log_f_, slope_;
    double sign_;
};

/// Golden-section minimization of
///   rms(a0) = sqrt((1/N) sum (f_i - F_theory(z_i + a0))^2)
/// over a0 in [bracket_lo, bracket_hi], to 0.01 nm resolution. Points
/// whose z + a0 falls outside [interval_lo, interval_hi] are excluded;
/// fewer than 5 surviving points is an error. Throws DomainError with a
/// wider-bracket recommendation when the objective is monotone across
/// the bracket (no interior minimum).
FitResult fit_offset(const MeasuredSeries& data,
                     const std::function<double(double)>& theory,
                     double interval_lo, double interval_hi,
                     double bracket_lo, double bracket_hi);

struct SensitivityResult {
    std::vector<FitResult> fits;
    double spread; // max a0 - min a0, m
};

/// fit_offset per interval; at least one interval required.
SensitivityResult interval_sensitivity(
    const MeasuredSeries& data, const std::function<double(double)>& theory,
    const std::vector<std::pair<double, double>>& intervals, double bracket_lo,
    double bracket_hi);

/// Differential pressure across the superconducting transition:
///   dP(t) = P(a, t; superconducting model) - P(a, t; normal model
///            continued below t_c).
/// The baseline deliberately continues the normal-state description
/// below t_c so the difference isolates the superconductivity effect.
struct DeltaPressurePoint {
    double t;        // K
    double delta_p;  // Pa
    double p_normal; // Pa, the baseline pressure at this t
};

enum class NormalModel { Drude, Plasma };

std::vector<DeltaPressurePoint> sc_delta_sweep(double a,
                                               const SuperconductorParams& params,
                                               ScSubModel sub_model,
                                               NormalModel normal_model,
                                               const std::vector<double>& t_grid,
                                               const QuadratureConfig& cfg = {});

/// Deterministic synthetic measurement series: z_i = a_i - a0_true,
/// f_i = theory(a_i) + Gaussian(0, noise_rms) from a seeded generator.
MeasuredSeries synth_data(const std::function<double(double)>& theory,
                          const std::vector<double>& grid, double a0_true,
                          double noise_rms, std::uint64_t seed);

/// CSV I/O. Curves are written with a header naming quantity and units
/// and a `# provenance:` comment carrying the config hash; numbers use
/// the shortest representation with >= 12 significant digits so equal
/// configs produce identical bytes.
void write_curve_csv(std::ostream& out, const ForceCurve& curve);
ForceCurve read_curve_csv(std::istream& in);
void write_series_csv(std::ostream& out, const MeasuredSeries& series);
MeasuredSeries read_series_csv(std::istream& in);

} // namespace casimir
