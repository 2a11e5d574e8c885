#include "casimir/dielectric.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

using constants::c_light;
using constants::ev_to_rad_s;
using constants::hbar;
using constants::k_boltzmann;

double eps_plasma(double omega_p, double xi) {
    return 1.0 + omega_p * omega_p / (xi * xi);
}

double eps_drude(double omega_p, double gamma, double xi) {
    return 1.0 + omega_p * omega_p / (xi * (xi + gamma));
}

// Above this frequency the Mattis-Bardeen correction to the Drude
// response is far below quadrature tolerance and we switch to the
// closed form to keep Matsubara sums affordable.
double sc_drude_crossover(double t, const SuperconductorParams& p) {
    const double delta = bcs_gap(t, p).delta;
    return 500.0 * std::max(delta, k_boltzmann * t) / hbar;
}

} // namespace

double eps_imag_axis(const DielectricModel& model, double xi, double t,
                     double rel_tol) {
    if (!(xi > 0.0)) throw DomainError("eps_imag_axis requires xi > 0");
    return std::visit(
        [&](const auto& m) -> double {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, Vacuum>) {
                return 1.0;
            } else if constexpr (std::is_same_v<M, IdealMetal>) {
                throw DomainError(
                    "ideal metal has no finite permittivity; use the "
                    "ideal-metal reflection short circuit");
            } else if constexpr (std::is_same_v<M, Plasma>) {
                return eps_plasma(m.omega_p, xi);
            } else if constexpr (std::is_same_v<M, Drude>) {
                return eps_drude(m.omega_p, m.gamma, xi);
            } else if constexpr (std::is_same_v<M, Tabulated>) {
                return kk_to_imag_axis(*m.table, m.extrapolation, xi, rel_tol);
            } else {
                static_assert(std::is_same_v<M, Superconductor>);
                if (m.sub_model == ScSubModel::PlasmaBelowTc)
                    return eps_plasma(m.params.omega_p, xi);
                if (t >= m.params.t_c || xi > sc_drude_crossover(t, m.params))
                    return eps_drude(m.params.omega_p, m.params.gamma, xi);
                return eps_sc_imag_axis(xi, t, m.params, rel_tol);
            }
        },
        model);
}

ZeroFreqClass zero_freq_class(const DielectricModel& model, double t) {
    return std::visit(
        [&](const auto& m) -> ZeroFreqClass {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, Vacuum>) {
                return Finite{1.0};
            } else if constexpr (std::is_same_v<M, IdealMetal>) {
                throw DomainError(
                    "ideal metal has no zero-frequency class; use the "
                    "ideal-metal reflection short circuit");
            } else if constexpr (std::is_same_v<M, Plasma>) {
                return PlasmaLike{m.omega_p * m.omega_p};
            } else if constexpr (std::is_same_v<M, Drude>) {
                if (m.gamma == 0.0) return PlasmaLike{m.omega_p * m.omega_p};
                return DrudeLike{};
            } else if constexpr (std::is_same_v<M, Tabulated>) {
                if (const auto* p =
                        std::get_if<PlasmaTail>(&m.extrapolation.low))
                    return PlasmaLike{p->omega_p * p->omega_p};
                return DrudeLike{};
            } else {
                static_assert(std::is_same_v<M, Superconductor>);
                if (m.sub_model == ScSubModel::PlasmaBelowTc)
                    return PlasmaLike{m.params.omega_p * m.params.omega_p};
                if (t >= m.params.t_c) return DrudeLike{};
                return PlasmaLike{superfluid_weight(t, m.params)};
            }
        },
        model);
}

double penetration_depth(const DielectricModel& model) {
    return std::visit(
        [](const auto& m) -> double {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, Plasma>) {
                return c_light / m.omega_p;
            } else if constexpr (std::is_same_v<M, Drude>) {
                return c_light / m.omega_p;
            } else if constexpr (std::is_same_v<M, Superconductor>) {
                return c_light / m.params.omega_p;
            } else if constexpr (std::is_same_v<M, Tabulated>) {
                if (const auto* d = std::get_if<DrudeTail>(&m.extrapolation.low))
                    return c_light / d->omega_p;
                return c_light / std::get<PlasmaTail>(m.extrapolation.low).omega_p;
            } else {
                throw DomainError("model carries no plasma frequency");
            }
        },
        model);
}

bool is_ideal_metal(const DielectricModel& model) {
    return std::holds_alternative<IdealMetal>(model);
}

namespace {

// `9.0eV`, `1.3K` or a bare SI value (rad/s or K).
double parse_quantity(const std::string& text, const std::string& key) {
    std::size_t pos = 0;
    double value;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ParseError("cannot parse value for '" + key + "': " + text);
    }
    const std::string suffix = text.substr(pos);
    if (suffix.empty()) return value;
    if (suffix == "eV" || suffix == "ev") return value * ev_to_rad_s;
    if (suffix == "K") return value;
    throw ParseError("unknown unit suffix '" + suffix + "' for '" + key + "'");
}

std::map<std::string, std::string> parse_kv(const std::string& body) {
    std::map<std::string, std::string> kv;
    std::istringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError("expected key=value, got '" + item + "'");
        if (!kv.emplace(item.substr(0, eq), item.substr(eq + 1)).second)
            throw ParseError("duplicate key '" + item.substr(0, eq) + "'");
    }
    return kv;
}

double take_quantity(std::map<std::string, std::string>& kv,
                     const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("missing required key '" + key + "'");
    const double v = parse_quantity(it->second, key);
    kv.erase(it);
    if (!(v > 0.0)) throw ParseError("'" + key + "' must be positive");
    return v;
}

void reject_leftovers(const std::map<std::string, std::string>& kv) {
    if (!kv.empty()) throw ParseError("unknown key '" + kv.begin()->first + "'");
}

std::string fmt_ev(double omega) {
    std::ostringstream os;
    os.precision(12);
    os << omega / ev_to_rad_s << "eV";
    return os.str();
}

} // namespace

DielectricModel parse_model_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    std::map<std::string, std::string> kv;
    if (colon != std::string::npos) kv = parse_kv(spec.substr(colon + 1));

    if (head == "ideal") {
        reject_leftovers(kv);
        return IdealMetal{};
    }
    if (head == "vacuum") {
        reject_leftovers(kv);
        return Vacuum{};
    }
    if (head == "plasma") {
        Plasma m{take_quantity(kv, "wp")};
        reject_leftovers(kv);
        return m;
    }
    if (head == "drude") {
        Drude m{take_quantity(kv, "wp"), take_quantity(kv, "gamma")};
        reject_leftovers(kv);
        return m;
    }
    if (head == "table") {
        auto path_it = kv.find("path");
        if (path_it == kv.end()) throw ParseError("table model requires path=");
        const std::string path = path_it->second;
        kv.erase(path_it);
        auto extrap_it = kv.find("extrap");
        if (extrap_it == kv.end())
            throw ParseError("table model requires extrap=drude|plasma");
        const std::string extrap = extrap_it->second;
        kv.erase(extrap_it);
        ExtrapolationPolicy policy;
        if (extrap == "drude") {
            policy.low = DrudeTail{take_quantity(kv, "wp"),
                                   take_quantity(kv, "gamma")};
        } else if (extrap == "plasma") {
            policy.low = PlasmaTail{take_quantity(kv, "wp")};
        } else {
            throw ParseError("extrap must be drude or plasma, got '" + extrap +
                             "'");
        }
        if (auto it = kv.find("hexp"); it != kv.end()) {
            policy.high.exponent = parse_quantity(it->second, "hexp");
            kv.erase(it);
        }
        reject_leftovers(kv);
        auto table = std::make_shared<const OpticalTable>(
            OpticalTable::load_file(path));
        return Tabulated{std::move(table), policy};
    }
    if (head == "sc") {
        SuperconductorParams p;
        p.omega_p = take_quantity(kv, "wp");
        p.gamma = take_quantity(kv, "gamma");
        p.t_c = take_quantity(kv, "tc");
        if (auto it = kv.find("gap0"); it != kv.end()) {
            p.gap0_ratio = parse_quantity(it->second, "gap0");
            kv.erase(it);
        }
        auto model_it = kv.find("model");
        ScSubModel sub = ScSubModel::MattisBardeen;
        if (model_it != kv.end()) {
            if (model_it->second == "mb")
                sub = ScSubModel::MattisBardeen;
            else if (model_it->second == "plasma")
                sub = ScSubModel::PlasmaBelowTc;
            else
                throw ParseError("model must be mb or plasma, got '" +
                                 model_it->second + "'");
            kv.erase(model_it);
        }
        reject_leftovers(kv);
        return Superconductor{p, sub};
    }
    throw ParseError("unknown model '" + head +
                     "' (expected ideal, vacuum, plasma, drude, table or sc)");
}

std::string model_spec_string(const DielectricModel& model) {
    return std::visit(
        [](const auto& m) -> std::string {
            using M = std::decay_t<decltype(m)>;
            std::ostringstream os;
            os.precision(12);
            if constexpr (std::is_same_v<M, Vacuum>) {
                return "vacuum";
            } else if constexpr (std::is_same_v<M, IdealMetal>) {
                return "ideal";
            } else if constexpr (std::is_same_v<M, Plasma>) {
                return "plasma:wp=" + fmt_ev(m.omega_p);
            } else if constexpr (std::is_same_v<M, Drude>) {
                return "drude:wp=" + fmt_ev(m.omega_p) +
                       ",gamma=" + fmt_ev(m.gamma);
            } else if constexpr (std::is_same_v<M, Tabulated>) {
                os << "table:path=" << m.table->source_label() << ",extrap=";
                if (const auto* d = std::get_if<DrudeTail>(&m.extrapolation.low))
                    os << "drude,wp=" << fmt_ev(d->omega_p)
                       << ",gamma=" << fmt_ev(d->gamma);
                else
                    os << "plasma,wp="
                       << fmt_ev(std::get<PlasmaTail>(m.extrapolation.low)
                                     .omega_p);
                os << ",hexp=" << m.extrapolation.high.exponent;
                return os.str();
            } else {
                static_assert(std::is_same_v<M, Superconductor>);
                os << "sc:wp=" << fmt_ev(m.params.omega_p)
                   << ",gamma=" << fmt_ev(m.params.gamma)
                   << ",tc=" << m.params.t_c << "K,model="
                   << (m.sub_model == ScSubModel::MattisBardeen ? "mb"
                                                                : "plasma")
                   << ",gap0=" << m.params.gap0_ratio;
                return os.str();
            }
        },
        model);
}

} // namespace casimir
