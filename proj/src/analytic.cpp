#include "casimir/analytic.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "casimir/constants.hpp"

namespace casimir {

namespace {

using constants::c_light;
using constants::hbar;
using constants::k_boltzmann;
using constants::zeta3;

} // namespace

double ideal_metal_pressure_t0(double a) {
    if (!(a > 0.0)) throw DomainError("separation must be > 0");
    return -M_PI * M_PI * hbar * c_light / (240.0 * a * a * a * a);
}

double ideal_metal_energy_t0(double a) {
    if (!(a > 0.0)) throw DomainError("separation must be > 0");
    return -M_PI * M_PI * hbar * c_light / (720.0 * a * a * a);
}

double ideal_metal_force_sphere_t0(double a, double r_sphere) {
    if (!(a > 0.0)) throw DomainError("separation must be > 0");
    if (!(r_sphere > 0.0)) throw DomainError("sphere radius must be > 0");
    return -M_PI * M_PI * M_PI * hbar * c_light * r_sphere / (360.0 * a * a * a);
}

PerturbationCoeffs PerturbationCoeffs::defaults() {
    PerturbationCoeffs c;
    c.c1 = -4.0;
    c.c2 = 72.0 / 5.0;
    c.c3 = -(320.0 / 7.0) * (1.0 - M_PI * M_PI / 210.0);
    c.c4 = (400.0 / 3.0) * (1.0 - 163.0 * M_PI * M_PI / 7350.0);
    c.theta3 = 45.0 * zeta3 / std::pow(M_PI, 6);
    c.theta4 = -1.0 / std::pow(M_PI, 4);
    c.source = "builtin sphere-plate penetration-depth series, 4th order";
    return c;
}

namespace {

PerturbationCoeffs parse_coeff_table(std::istream& in,
                                     const std::string& origin) {
    PerturbationCoeffs c{};
    bool have[6] = {};
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value", lineno);
        const std::string key = line.substr(0, eq);
        const std::string val = line.substr(eq + 1);
        if (key == "source") {
            c.source = val;
            continue;
        }
        double* slot = nullptr;
        int idx = -1;
        if (key == "c1") { slot = &c.c1; idx = 0; }
        else if (key == "c2") { slot = &c.c2; idx = 1; }
        else if (key == "c3") { slot = &c.c3; idx = 2; }
        else if (key == "c4") { slot = &c.c4; idx = 3; }
        else if (key == "theta3") { slot = &c.theta3; idx = 4; }
        else if (key == "theta4") { slot = &c.theta4; idx = 5; }
        else throw ParseError("unknown coefficient key '" + key + "'", lineno);
        try {
            *slot = std::stod(val);
        } catch (const std::exception&) {
            throw ParseError("cannot parse value '" + val + "'", lineno);
        }
        have[idx] = true;
    }
    for (bool h : have)
        if (!h)
            throw ParseError("coefficient table " + origin +
                             " must define c1..c4, theta3, theta4");
    if (c.source.empty())
        throw ParseError("coefficient table " + origin +
                         " must carry a source= citation line");
    return c;
}

} // namespace

PerturbationCoeffs PerturbationCoeffs::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open coefficient table '" + path + "'");
    return parse_coeff_table(in, "'" + path + "'");
}

PerturbativeForce perturbative_force_sphere(double a, double t, double r_sphere,
                                            double omega_p,
                                            const PerturbationCoeffs& coeffs) {
    if (!(a > 0.0)) throw DomainError("separation must be > 0");
    if (!(omega_p > 0.0)) throw DomainError("plasma frequency must be > 0");
    if (t < 0.0) throw DomainError("temperature must be >= 0");
    PerturbativeForce out;
    out.params.delta0 = c_light / omega_p;
    out.params.tau = 2.0 * M_PI * k_boltzmann * t * a / (hbar * c_light);
    const double d = out.params.delta0 / a;
    const double tau = out.params.tau;
    if (d > 0.5)
        throw DomainError("perturbation series invalid: delta0/a = " +
                          std::to_string(d) + " > 0.5");
    out.outside_validity = d >= 0.3 || tau >= 1.0;
    if (out.outside_validity)
        std::cerr << "warning: perturbation series outside its validity "
                     "domain (delta0/a = "
                  << d << ", tau = " << tau << ")\n";
    const double series = 1.0 + coeffs.c1 * d + coeffs.c2 * d * d +
                          coeffs.c3 * d * d * d + coeffs.c4 * d * d * d * d +
                          coeffs.theta3 * tau * tau * tau +
                          coeffs.theta4 * tau * tau * tau * tau;
    out.force = ideal_metal_force_sphere_t0(a, r_sphere) * series;
    out.truncation_order = 4;
    return out;
}

double roughness_correct(const std::function<double(double)>& value_fn, double a,
                         const RoughnessSpec& spec) {
    if (!(a > 0.0)) throw DomainError("separation must be > 0");
    if (spec.rms_sphere < 0.0 || spec.rms_plate < 0.0)
        throw DomainError("rms roughness must be >= 0");
    const double var = spec.variance();
    if (var == 0.0) return value_fn(a);
    if (std::sqrt(var) / a >= 0.2)
        throw DomainError("roughness averaging invalid: sigma/a >= 0.2");
    const double h = 1e-3 * a;
    const double f0 = value_fn(a);
    const double second = (value_fn(a + h) - 2.0 * f0 + value_fn(a - h)) / (h * h);
    return f0 + 0.5 * var * second;
}

} // namespace casimir
