// Command-line front end for the Casimir force library: permittivity
// evaluation, force/pressure curves, offset fitting, the superconducting
// differential-pressure sweep and synthetic data generation.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir/analytic.hpp"
#include "casimir/constants.hpp"
#include "casimir/dielectric.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/metrology.hpp"

namespace {

using namespace casimir;

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Grid mini-grammar: `min:max:count:{lin|log}` or a single number.
std::vector<double> parse_grid(const std::string& spec) {
    if (spec.find(':') == std::string::npos) {
        std::size_t pos = 0;
        const double v = std::stod(spec, &pos);
        if (pos != spec.size()) throw ParseError("bad grid value '" + spec + "'");
        return {v};
    }
    std::istringstream ss(spec);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 4)
        throw ParseError("grid spec must be min:max:count:{lin|log}");
    const double lo = std::stod(parts[0]);
    const double hi = std::stod(parts[1]);
    const int n = std::stoi(parts[2]);
    if (!(lo > 0.0) || !(hi > lo)) throw ParseError("grid needs 0 < min < max");
    if (n < 1) throw ParseError("grid count must be >= 1");
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        g.push_back(lo);
        return g;
    }
    for (int i = 0; i < n; ++i) {
        const double f = double(i) / (n - 1);
        if (parts[3] == "lin")
            g.push_back(lo + f * (hi - lo));
        else if (parts[3] == "log")
            g.push_back(lo * std::pow(hi / lo, f));
        else
            throw ParseError("grid kind must be lin or log");
    }
    return g;
}

std::pair<double, double> parse_pair(const std::string& spec,
                                     const std::string& what) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw ParseError(what + " must be two comma-separated numbers");
    return {std::stod(spec.substr(0, comma)), std::stod(spec.substr(comma + 1))};
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void write_provenance(std::ostream& out, const std::string& config) {
    char hex[24];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a(config)));
    out << "# provenance: " << hex << " " << config << "\n";
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file '" + path + "'");
    return out;
}

double default_rel_tol() {
    if (const char* env = std::getenv("CASIMIR_QUAD_TOL")) {
        const double v = std::atof(env);
        if (v > 0.0 && v < 1e-3) return v;
        std::cerr << "warning: ignoring invalid CASIMIR_QUAD_TOL='" << env
                  << "'\n";
    }
    return 1e-9;
}

int run(int argc, char** argv) {
    CLI::App app{
        "casimir: Lifshitz-theory Casimir force/pressure computations.\n"
        "The default quadrature tolerance can be set with the environment\n"
        "variable CASIMIR_QUAD_TOL (overridden by --rel-tol)."};
    app.set_config("--config", "", "Read options from a key=value file");
    app.require_subcommand(1);

    double rel_tol = default_rel_tol();
    int max_terms = 20000;
    app.add_option("--rel-tol", rel_tol, "Quadrature relative tolerance")
        ->check(CLI::Range(1e-15, 1e-3));
    app.add_option("--max-terms", max_terms, "Matsubara term budget")
        ->check(CLI::Range(100, 100000000));

    // --- eps ---
    auto* eps_cmd =
        app.add_subcommand("eps", "Evaluate eps(i xi) for a model spec");
    std::string eps_model;
    double eps_xi = 0.0, eps_t = 300.0;
    eps_cmd->add_option("--model", eps_model, "Dielectric model spec")
        ->required();
    eps_cmd->add_option("--xi", eps_xi, "Imaginary frequency, rad/s")
        ->required();
    eps_cmd->add_option("--T", eps_t, "Temperature, K");

    // --- curve ---
    auto* curve_cmd = app.add_subcommand(
        "curve", "Roughness-corrected force/pressure curve over a grid");
    std::string curve_geometry = "sphere-plate";
    double curve_r = 55e-6;
    std::string curve_sphere, curve_plate, curve_grid, curve_rough, curve_out;
    double curve_t = 300.0;
    curve_cmd->add_option("--geometry", curve_geometry,
                          "plate-plate or sphere-plate");
    curve_cmd->add_option("--R", curve_r, "Sphere radius, m");
    curve_cmd->add_option("--sphere", curve_sphere, "Sphere model spec")
        ->required();
    curve_cmd->add_option("--plate", curve_plate, "Plate model spec")
        ->required();
    curve_cmd->add_option("--T", curve_t, "Temperature, K");
    curve_cmd->add_option("--a", curve_grid, "Separation grid min:max:count:{lin|log}")
        ->required();
    curve_cmd->add_option("--roughness", curve_rough,
                          "rms roughness sphere,plate in m (e.g. 8e-9,2e-9)");
    curve_cmd->add_option("--out", curve_out, "Output CSV path")->required();

    // --- pressure ---
    auto* press_cmd = app.add_subcommand(
        "pressure", "Plate-plate Casimir pressure at one or more separations");
    std::string press_p1, press_p2, press_grid, press_out;
    double press_t = 300.0;
    press_cmd->add_option("--plate1", press_p1, "First plate model spec")
        ->required();
    press_cmd->add_option("--plate2", press_p2, "Second plate model spec")
        ->required();
    press_cmd->add_option("--T", press_t, "Temperature, K");
    press_cmd->add_option("--a", press_grid, "Separation grid or single value, m")
        ->required();
    press_cmd->add_option("--out", press_out,
                          "Output CSV path (omit to print a single value)");

    // --- fit ---
    auto* fit_cmd = app.add_subcommand(
        "fit", "Fit the absolute-separation offset of measured data");
    std::string fit_data, fit_theory, fit_interval, fit_bracket;
    fit_cmd->add_option("--data", fit_data, "Measured series CSV")->required();
    fit_cmd
        ->add_option("--theory-csv", fit_theory,
                     "Cached theory curve CSV (interpolated log-log)")
        ->required();
    fit_cmd
        ->add_option("--interval", fit_interval,
                     "Separation interval a_min,a_max in m")
        ->required();
    fit_cmd->add_option("--bracket", fit_bracket, "Offset bracket lo,hi in m")
        ->required();

    // --- sweep-sc ---
    auto* sweep_cmd = app.add_subcommand(
        "sweep-sc",
        "Differential pressure across the superconducting transition");
    double sw_a = 100e-9, sw_wp_ev = 12.5, sw_g_ev = 0.063, sw_tc = 1.3,
           sw_gap0 = 1.764;
    std::string sw_model = "mb", sw_normal = "drude", sw_tgrid, sw_out;
    sweep_cmd->add_option("--a", sw_a, "Separation, m");
    sweep_cmd->add_option("--wp", sw_wp_ev, "Plasma frequency, eV");
    sweep_cmd->add_option("--gamma", sw_g_ev, "Relaxation frequency, eV");
    sweep_cmd->add_option("--tc", sw_tc, "Critical temperature, K");
    sweep_cmd->add_option("--gap0", sw_gap0, "Delta(0)/(k_B T_c)");
    sweep_cmd->add_option("--model", sw_model,
                          "Superconducting sub-model: mb or plasma");
    sweep_cmd->add_option("--normal", sw_normal,
                          "Normal-state baseline: drude or plasma");
    sweep_cmd
        ->add_option("--t", sw_tgrid,
                     "Temperature grid min:max:count:{lin|log} in K "
                     "(default 1.0:0.2 tc grid)")
        ->required();
    sweep_cmd->add_option("--out", sw_out, "Output CSV path")->required();

    // --- synth ---
    auto* synth_cmd = app.add_subcommand(
        "synth", "Generate a deterministic synthetic measured series");
    std::string sy_theory, sy_grid, sy_out;
    double sy_a0 = 0.0, sy_noise = 0.0;
    std::uint64_t sy_seed = 1;
    synth_cmd->add_option("--theory-csv", sy_theory, "Theory curve CSV")
        ->required();
    synth_cmd->add_option("--a", sy_grid, "Separation grid")->required();
    synth_cmd->add_option("--a0", sy_a0, "True absolute offset, m");
    synth_cmd->add_option("--noise", sy_noise, "Gaussian noise rms, N");
    synth_cmd->add_option("--seed", sy_seed, "RNG seed");
    synth_cmd->add_option("--out", sy_out, "Output CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    QuadratureConfig cfg;
    cfg.rel_tol = rel_tol;
    cfg.max_matsubara_terms = max_terms;

    if (*eps_cmd) {
        const auto model = parse_model_spec(eps_model);
        std::cout << fmt_g(eps_imag_axis(model, eps_xi, eps_t, rel_tol))
                  << "\n";
        return 0;
    }

    if (*curve_cmd) {
        if (curve_geometry != "plate-plate" && curve_geometry != "sphere-plate")
            throw ParseError("--geometry must be plate-plate or sphere-plate");
        Geometry geo{0.0, {}};
        if (curve_geometry == "sphere-plate") geo.sphere_radius = curve_r;
        RoughnessSpec rough;
        if (!curve_rough.empty()) {
            const auto [rs, rp] = parse_pair(curve_rough, "--roughness");
            rough = {rs, rp};
        }
        const auto sphere = parse_model_spec(curve_sphere);
        const auto plate = parse_model_spec(curve_plate);
        const auto grid = parse_grid(curve_grid);
        const auto curve = generate_curve(geo, sphere, plate, {curve_t}, rough,
                                          grid, cfg);
        auto out = open_out(curve_out);
        write_curve_csv(out, curve);
        return 0;
    }

    if (*press_cmd) {
        const auto p1 = parse_model_spec(press_p1);
        const auto p2 = parse_model_spec(press_p2);
        const auto grid = parse_grid(press_grid);
        if (press_out.empty()) {
            if (grid.size() != 1)
                throw ParseError("multi-point pressure grids require --out");
            std::cout << fmt_g(pressure_plate_plate(p1, p2, grid[0], {press_t},
                                                    cfg))
                      << "\n";
            return 0;
        }
        const auto curve =
            generate_curve(Geometry{0.0, {}}, p1, p2, {press_t}, {}, grid, cfg);
        auto out = open_out(press_out);
        write_curve_csv(out, curve);
        return 0;
    }

    if (*fit_cmd) {
        std::ifstream data_in(fit_data);
        if (!data_in) throw Error("cannot open '" + fit_data + "'");
        const auto data = read_series_csv(data_in);
        std::ifstream theory_in(fit_theory);
        if (!theory_in) throw Error("cannot open '" + fit_theory + "'");
        const CurveEvaluator theory(read_curve_csv(theory_in));
        const auto [ilo, ihi] = parse_pair(fit_interval, "--interval");
        const auto [blo, bhi] = parse_pair(fit_bracket, "--bracket");
        const auto fit = fit_offset(data, theory, ilo, ihi, blo, bhi);
        std::cout << "a0_m=" << fmt_g(fit.a0) << "\nrms_N=" << fmt_g(fit.rms)
                  << "\nn_points=" << fit.n_points << "\n";
        return 0;
    }

    if (*sweep_cmd) {
        SuperconductorParams params;
        params.omega_p = sw_wp_ev * constants::ev_to_rad_s;
        params.gamma = sw_g_ev * constants::ev_to_rad_s;
        params.t_c = sw_tc;
        params.gap0_ratio = sw_gap0;
        ScSubModel sub;
        if (sw_model == "mb")
            sub = ScSubModel::MattisBardeen;
        else if (sw_model == "plasma")
            sub = ScSubModel::PlasmaBelowTc;
        else
            throw ParseError("--model must be mb or plasma");
        NormalModel normal;
        if (sw_normal == "drude")
            normal = NormalModel::Drude;
        else if (sw_normal == "plasma")
            normal = NormalModel::Plasma;
        else
            throw ParseError("--normal must be drude or plasma");
        auto t_grid = parse_grid(sw_tgrid);
        // highest temperature first, matching the cool-down protocol
        std::sort(t_grid.rbegin(), t_grid.rend());
        const auto sweep = sc_delta_sweep(sw_a, params, sub, normal, t_grid, cfg);
        auto out = open_out(sw_out);
        std::ostringstream config;
        config << "sweep-sc;a=" << fmt_g(sw_a) << ";wp=" << fmt_g(sw_wp_ev)
               << "eV;gamma=" << fmt_g(sw_g_ev) << "eV;tc=" << fmt_g(sw_tc)
               << ";gap0=" << fmt_g(sw_gap0) << ";model=" << sw_model
               << ";normal=" << sw_normal << ";rel_tol=" << fmt_g(rel_tol);
        write_provenance(out, config.str());
        out << "t_K,delta_p_Pa,p_normal_Pa\n";
        for (const auto& p : sweep)
            out << fmt_g(p.t) << "," << fmt_g(p.delta_p) << ","
                << fmt_g(p.p_normal) << "\n";
        return 0;
    }

    if (*synth_cmd) {
        std::ifstream theory_in(sy_theory);
        if (!theory_in) throw Error("cannot open '" + sy_theory + "'");
        const CurveEvaluator theory(read_curve_csv(theory_in));
        const auto grid = parse_grid(sy_grid);
        const auto series = synth_data(theory, grid, sy_a0, sy_noise, sy_seed);
        auto out = open_out(sy_out);
        std::ostringstream config;
        config << "synth;theory=" << sy_theory << ";a=" << sy_grid
               << ";a0=" << fmt_g(sy_a0) << ";noise=" << fmt_g(sy_noise)
               << ";seed=" << sy_seed;
        write_provenance(out, config.str());
        write_series_csv(out, series);
        return 0;
    }

    return 2; // unreachable: a subcommand is required
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const casimir::ParseError& e) {
        std::cerr << "error: category=parse " << e.what() << "\n";
        return 2;
    } catch (const casimir::ConvergenceError& e) {
        std::cerr << "error: category=convergence " << e.what() << "\n";
        return 1;
    } catch (const casimir::DomainError& e) {
        std::cerr << "error: category=domain " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: category=internal " << e.what() << "\n";
        return 1;
    }
}
