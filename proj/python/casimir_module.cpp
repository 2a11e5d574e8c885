// Python bindings for the main library operations.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "casimir/analytic.hpp"
#include "casimir/constants.hpp"
#include "casimir/dielectric.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/metrology.hpp"

namespace py = pybind11;
using namespace casimir;

namespace {

QuadratureConfig make_cfg(double rel_tol, int max_terms) {
    QuadratureConfig cfg;
    cfg.rel_tol = rel_tol;
    cfg.max_matsubara_terms = max_terms;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_casimir, m) {
    m.doc() = "Finite-temperature Lifshitz-theory Casimir computations";

    py::register_exception<Error>(m, "CasimirError");

    m.attr("HBAR") = constants::hbar;
    m.attr("K_BOLTZMANN") = constants::k_boltzmann;
    m.attr("C_LIGHT") = constants::c_light;
    m.attr("EV_TO_RAD_S") = constants::ev_to_rad_s;

    m.def(
        "eps_imag_axis",
        [](const std::string& model, double xi, double t, double rel_tol) {
            return eps_imag_axis(parse_model_spec(model), xi, t, rel_tol);
        },
        py::arg("model"), py::arg("xi"), py::arg("t") = 300.0,
        py::arg("rel_tol") = 1e-8,
        "eps(i xi) for a model spec string such as 'drude:wp=9.0eV,gamma=0.035eV'");

    m.def(
        "pressure_plate_plate",
        [](const std::string& plate1, const std::string& plate2, double a,
           double t, double rel_tol, int max_terms) {
            return pressure_plate_plate(parse_model_spec(plate1),
                                        parse_model_spec(plate2), a, {t},
                                        make_cfg(rel_tol, max_terms));
        },
        py::arg("plate1"), py::arg("plate2"), py::arg("a"), py::arg("t") = 300.0,
        py::arg("rel_tol") = 1e-9, py::arg("max_terms") = 20000,
        "Casimir pressure between two half spaces, Pa (negative = attractive)");

    m.def(
        "force_sphere_plate",
        [](const std::string& sphere, const std::string& plate, double a,
           double r_sphere, double t, double rel_tol, int max_terms) {
            Geometry geo{a, r_sphere};
            return force_sphere_plate(parse_model_spec(sphere),
                                      parse_model_spec(plate), geo, {t},
                                      make_cfg(rel_tol, max_terms));
        },
        py::arg("sphere"), py::arg("plate"), py::arg("a"), py::arg("r_sphere"),
        py::arg("t") = 300.0, py::arg("rel_tol") = 1e-9,
        py::arg("max_terms") = 20000,
        "Sphere-plate Casimir force (proximity force approximation), N");

    m.def("ideal_metal_pressure_t0", &ideal_metal_pressure_t0, py::arg("a"));
    m.def("ideal_metal_force_sphere_t0", &ideal_metal_force_sphere_t0,
          py::arg("a"), py::arg("r_sphere"));

    m.def(
        "perturbative_force_sphere",
        [](double a, double t, double r_sphere, double omega_p) {
            return perturbative_force_sphere(a, t, r_sphere, omega_p).force;
        },
        py::arg("a"), py::arg("t"), py::arg("r_sphere"), py::arg("omega_p"),
        "Two-small-parameter perturbation expansion of the sphere-plate force");

    m.def(
        "roughness_correct",
        [](const std::function<double(double)>& fn, double a, double rms_sphere,
           double rms_plate) {
            return roughness_correct(fn, a, {rms_sphere, rms_plate});
        },
        py::arg("value_fn"), py::arg("a"), py::arg("rms_sphere"),
        py::arg("rms_plate"),
        "Second-order stochastic roughness averaging of value_fn at a");

    m.def(
        "sc_delta_sweep",
        [](double a, double wp_ev, double gamma_ev, double tc,
           const std::vector<double>& t_grid, const std::string& sub_model,
           const std::string& normal_model, double rel_tol) {
            SuperconductorParams p;
            p.omega_p = wp_ev * constants::ev_to_rad_s;
            p.gamma = gamma_ev * constants::ev_to_rad_s;
            p.t_c = tc;
            const ScSubModel sub = sub_model == "plasma"
                                       ? ScSubModel::PlasmaBelowTc
                                       : ScSubModel::MattisBardeen;
            const NormalModel normal = normal_model == "plasma"
                                           ? NormalModel::Plasma
                                           : NormalModel::Drude;
            QuadratureConfig cfg;
            cfg.rel_tol = rel_tol;
            std::vector<std::pair<double, double>> out;
            for (const auto& pt : sc_delta_sweep(a, p, sub, normal, t_grid, cfg))
                out.emplace_back(pt.t, pt.delta_p);
            return out;
        },
        py::arg("a"), py::arg("wp_ev"), py::arg("gamma_ev"), py::arg("tc"),
        py::arg("t_grid"), py::arg("sub_model") = "mb",
        py::arg("normal_model") = "drude", py::arg("rel_tol") = 1e-9,
        "Differential pressure (t, delta_p) across the superconducting "
        "transition");
}
