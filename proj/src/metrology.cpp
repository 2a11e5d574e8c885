#include "casimir/metrology.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::string Provenance::config_string() const {
    std::ostringstream os;
    os << "geometry=" << geometry << ";sphere=" << model_sphere
       << ";plate=" << model_plate << ";T=" << fmt_g(temperature)
       << ";rough_sphere=" << fmt_g(roughness.rms_sphere)
       << ";rough_plate=" << fmt_g(roughness.rms_plate)
       << ";rel_tol=" << fmt_g(quad_rel_tol);
    return os.str();
}

std::uint64_t Provenance::hash() const {
    // FNV-1a, 64 bit
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : config_string()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

ForceCurve generate_curve(const Geometry& geometry, const DielectricModel& sphere,
                          const DielectricModel& plate, const ThermalState& state,
                          const RoughnessSpec& roughness,
                          const std::vector<double>& grid,
                          const QuadratureConfig& cfg) {
    if (grid.empty()) throw DomainError("separation grid must not be empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw DomainError("separation grid must be strictly increasing");

    const bool is_sphere = geometry.sphere_radius.has_value();
    std::function<double(double)> value_fn;
    if (is_sphere) {
        value_fn = [&](double a) {
            Geometry g{a, geometry.sphere_radius};
            return force_sphere_plate(sphere, plate, g, state, cfg);
        };
    } else {
        value_fn = [&](double a) {
            return pressure_plate_plate(sphere, plate, a, state, cfg);
        };
    }

    ForceCurve curve;
    curve.quantity = is_sphere ? Quantity::Force : Quantity::Pressure;
    curve.points.reserve(grid.size());
    for (double a : grid)
        curve.points.emplace_back(a, roughness_correct(value_fn, a, roughness));

    std::ostringstream geo;
    if (is_sphere)
        geo << "sphere-plate R=" << fmt_g(*geometry.sphere_radius);
    else
        geo << "plate-plate";
    curve.provenance.geometry = geo.str();
    curve.provenance.model_sphere = model_spec_string(sphere);
    curve.provenance.model_plate = model_spec_string(plate);
    curve.provenance.temperature = state.temperature;
    curve.provenance.roughness = roughness;
    curve.provenance.quad_rel_tol = cfg.rel_tol;
    return curve;
}

CurveEvaluator::CurveEvaluator(const ForceCurve& curve) {
    const auto& pts = curve.points;
    if (pts.size() < 4)
        throw DomainError("curve interpolation needs at least 4 points");
    sign_ = pts.front().second < 0.0 ? -1.0 : 1.0;
    log_a_.reserve(pts.size());
    log_f_.reserve(pts.size());
    for (const auto& [a, v] : pts) {
        if (v * sign_ <= 0.0)
            throw DomainError("curve interpolation requires values of one sign");
        log_a_.push_back(std::log(a));
        log_f_.push_back(std::log(std::fabs(v)));
    }
    // Fritsch-Carlson monotone cubic slopes
    const std::size_t n = log_a_.size();
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        d[i] = (log_f_[i + 1] - log_f_[i]) / (log_a_[i + 1] - log_a_[i]);
    slope_.assign(n, 0.0);
    slope_[0] = d[0];
    slope_[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i)
        slope_[i] = (d[i - 1] * d[i] > 0.0) ? 0.5 * (d[i - 1] + d[i]) : 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d[i] == 0.0) {
            slope_[i] = slope_[i + 1] = 0.0;
            continue;
        }
        const double alpha = slope_[i] / d[i];
        const double beta = slope_[i + 1] / d[i];
        const double s = alpha * alpha + beta * beta;
        if (s > 9.0) {
            const double tau = 3.0 / std::sqrt(s);
            slope_[i] = tau * alpha * d[i];
            slope_[i + 1] = tau * beta * d[i];
        }
    }
}

double CurveEvaluator::operator()(double a) const {
    const double x = std::log(a);
    if (x < log_a_.front() || x > log_a_.back())
        throw DomainError("separation outside the cached curve range");
    auto it = std::upper_bound(log_a_.begin(), log_a_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - log_a_.begin());
    if (i > 0) --i;
    if (i + 1 >= log_a_.size()) i = log_a_.size() - 2;
    const double h = log_a_[i + 1] - log_a_[i];
    const double u = (x - log_a_[i]) / h;
    const double h00 = (1.0 + 2.0 * u) * (1.0 - u) * (1.0 - u);
    const double h10 = u * (1.0 - u) * (1.0 - u);
    const double h01 = u * u * (3.0 - 2.0 * u);
    const double h11 = u * u * (u - 1.0);
    const double y = h00 * log_f_[i] + h10 * h * slope_[i] +
                     h01 * log_f_[i + 1] + h11 * h * slope_[i + 1];
    return sign_ * std::exp(y);
}

namespace {

// RMS objective at a candidate offset; points outside the separation
// interval are excluded, and the surviving count is reported.
double rms_at(const MeasuredSeries& data,
              const std::function<double(double)>& theory, double a0,
              double interval_lo, double interval_hi, int& n_used) {
    double ss = 0.0;
    n_used = 0;
    for (const auto& p : data.points) {
        const double a = p.z + a0;
        if (a < interval_lo || a > interval_hi) continue;
        const double r = p.f - theory(a);
        ss += r * r;
        ++n_used;
    }
    if (n_used < 5)
        throw DomainError("fewer than 5 data points fall inside the fit "
                          "interval at offset " +
                          fmt_g(a0));
    return std::sqrt(ss / n_used);
}

} // namespace

FitResult fit_offset(const MeasuredSeries& data,
                     const std::function<double(double)>& theory,
                     double interval_lo, double interval_hi,
                     double bracket_lo, double bracket_hi) {
    if (!(interval_lo < interval_hi))
        throw DomainError("fit interval must have a_min < a_max");
    if (!(bracket_lo < bracket_hi))
        throw DomainError("offset bracket must be increasing");
    int n_used = 0;
    auto obj = [&](double a0) {
        return rms_at(data, theory, a0, interval_lo, interval_hi, n_used);
    };

    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = bracket_lo, hi = bracket_hi;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = obj(x1), f2 = obj(x2);
    // Bracket validation: an interior point must undercut both endpoints,
    // otherwise the objective is monotone across the bracket.
    {
        const double f_lo = obj(lo), f_hi = obj(hi);
        if (std::min(f1, f2) > std::min(f_lo, f_hi))
            throw DomainError(
                "offset objective has no interior minimum in the bracket; "
                "widen the bracket");
    }
    const double resolution = 1e-11; // 0.01 nm
    while (hi - lo > resolution) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = obj(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = obj(x2);
        }
    }
    FitResult out;
    out.a0 = 0.5 * (lo + hi);
    out.rms = obj(out.a0);
    out.a_min = interval_lo;
    out.a_max = interval_hi;
    out.n_points = n_used;
    return out;
}

SensitivityResult interval_sensitivity(
    const MeasuredSeries& data, const std::function<double(double)>& theory,
    const std::vector<std::pair<double, double>>& intervals, double bracket_lo,
    double bracket_hi) {
    if (intervals.empty())
        throw DomainError("interval_sensitivity needs at least one interval");
    SensitivityResult out;
    out.fits.reserve(intervals.size());
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        const auto fit = fit_offset(data, theory, intervals[i].first,
                                    intervals[i].second, bracket_lo, bracket_hi);
        if (i == 0) {
            lo = hi = fit.a0;
        } else {
            lo = std::min(lo, fit.a0);
            hi = std::max(hi, fit.a0);
        }
        out.fits.push_back(fit);
    }
    out.spread = hi - lo;
    return out;
}

std::vector<DeltaPressurePoint> sc_delta_sweep(double a,
                                               const SuperconductorParams& params,
                                               ScSubModel sub_model,
                                               NormalModel normal_model,
                                               const std::vector<double>& t_grid,
                                               const QuadratureConfig& cfg) {
    if (!(a > 0.0)) throw DomainError("separation must be > 0");
    QuadratureConfig sweep_cfg = cfg;
    // sub-kelvin Matsubara spectra are dense; allow long sums
    sweep_cfg.max_matsubara_terms =
        std::max(cfg.max_matsubara_terms, 2'000'000);

    const DielectricModel sc = Superconductor{params, sub_model};
    const DielectricModel normal =
        normal_model == NormalModel::Drude
            ? DielectricModel(Drude{params.omega_p, params.gamma})
            : DielectricModel(Plasma{params.omega_p});

    std::vector<DeltaPressurePoint> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        if (!(t > 0.05 * params.t_c) || !(t <= params.t_c))
            throw DomainError("sweep temperatures must lie in (0.05 t_c, t_c]");
        const ThermalState state{t};
        const double p_sc = pressure_plate_plate(sc, sc, a, state, sweep_cfg);
        const double p_n = pressure_plate_plate(normal, normal, a, state, sweep_cfg);
        out.push_back({t, p_sc - p_n, p_n});
    }
    return out;
}

MeasuredSeries synth_data(const std::function<double(double)>& theory,
                          const std::vector<double>& grid, double a0_true,
                          double noise_rms, std::uint64_t seed) {
    MeasuredSeries out;
    out.points.reserve(grid.size());
    std::mt19937_64 rng(seed);
    auto uniform = [&] {
        // 53-bit mantissa in (0, 1]; explicit so streams are portable
        return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    };
    bool have_spare = false;
    double spare = 0.0;
    auto gauss = [&] {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare = r * std::sin(2.0 * M_PI * u2);
        have_spare = true;
        return r * std::cos(2.0 * M_PI * u2);
    };
    const double sigma = noise_rms > 0.0 ? noise_rms : 1e-15;
    for (double a : grid) {
        double f = theory(a);
        if (noise_rms > 0.0) f += noise_rms * gauss();
        out.points.push_back({a - a0_true, f, sigma});
    }
    return out;
}

void write_curve_csv(std::ostream& out, const ForceCurve& curve) {
    char hash_hex[24];
    std::snprintf(hash_hex, sizeof hash_hex, "%016llx",
                  static_cast<unsigned long long>(curve.provenance.hash()));
    out << "# provenance: " << hash_hex << " "
        << curve.provenance.config_string() << "\n";
    out << (curve.quantity == Quantity::Force ? "a_m,force_N" : "a_m,pressure_Pa")
        << "\n";
    for (const auto& [a, v] : curve.points)
        out << fmt_g(a) << "," << fmt_g(v) << "\n";
}

ForceCurve read_curve_csv(std::istream& in) {
    ForceCurve out;
    std::string line;
    long lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line == "a_m,force_N")
                out.quantity = Quantity::Force;
            else if (line == "a_m,pressure_Pa")
                out.quantity = Quantity::Pressure;
            else
                throw ParseError("expected curve header a_m,force_N or "
                                 "a_m,pressure_Pa",
                                 lineno);
            saw_header = true;
            continue;
        }
        std::istringstream ls(line);
        double a, v;
        char c;
        if (!(ls >> a >> c >> v) || c != ',')
            throw ParseError("expected two comma-separated numbers", lineno);
        if (!out.points.empty() && !(a > out.points.back().first))
            throw ParseError("separations must be strictly increasing", lineno);
        out.points.emplace_back(a, v);
    }
    if (!saw_header) throw ParseError("missing curve header");
    return out;
}

void write_series_csv(std::ostream& out, const MeasuredSeries& series) {
    out << "z_m,f_N,sigma_N\n";
    for (const auto& p : series.points)
        out << fmt_g(p.z) << "," << fmt_g(p.f) << "," << fmt_g(p.sigma_f)
            << "\n";
}

MeasuredSeries read_series_csv(std::istream& in) {
    MeasuredSeries out;
    std::string line;
    long lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line != "z_m,f_N,sigma_N")
                throw ParseError("expected header z_m,f_N,sigma_N", lineno);
            saw_header = true;
            continue;
        }
        std::istringstream ls(line);
        MeasuredSeries::Point p{};
        char c1, c2;
        if (!(ls >> p.z >> c1 >> p.f >> c2 >> p.sigma_f) || c1 != ',' ||
            c2 != ',')
            throw ParseError("expected three comma-separated numbers", lineno);
        if (!(p.sigma_f > 0.0))
            throw ParseError("sigma must be > 0", lineno);
        if (!out.points.empty() && !(p.z > out.points.back().z))
            throw ParseError("z must be strictly increasing", lineno);
        out.points.push_back(p);
    }
    if (!saw_header) throw ParseError("missing header z_m,f_N,sigma_N");
    return out;
}

} // namespace casimir
