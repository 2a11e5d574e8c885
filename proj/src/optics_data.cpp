#include "casimir/optics_data.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

void validate_rows(const std::vector<OpticalTable::Row>& rows) {
    if (rows.size() < 8)
        throw ParseError("optical table needs at least 8 data rows, got " +
                         std::to_string(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (!(r.omega > 0.0)) throw ParseError("non-positive frequency in table");
        if (!(r.n > 0.0)) throw ParseError("refractive index must be > 0");
        if (r.k < 0.0) throw ParseError("extinction coefficient must be >= 0");
        if (i > 0 && !(r.omega > rows[i - 1].omega))
            throw ParseError("table energies must be strictly increasing");
    }
}

} // namespace

OpticalTable::OpticalTable(std::vector<Row> rows, std::string source_label)
    : rows_(std::move(rows)), label_(std::move(source_label)) {
    validate_rows(rows_);
}

OpticalTable OpticalTable::load(std::istream& in, std::string source_label) {
    std::vector<Row> rows;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double e_ev, n, k;
        if (!(ls >> e_ev)) {
            std::string leftover;
            if (ls.clear(), ls >> leftover)
                throw ParseError("malformed number '" + leftover + "'", lineno);
            continue; // blank or comment-only line
        }
        if (!(ls >> n >> k))
            throw ParseError("expected three columns `E_eV n k`", lineno);
        std::string trailing;
        if (ls >> trailing)
            throw ParseError("unexpected trailing field '" + trailing + "'", lineno);
        if (!(e_ev > 0.0)) throw ParseError("energy must be > 0", lineno);
        if (!(n > 0.0)) throw ParseError("refractive index must be > 0", lineno);
        if (k < 0.0) throw ParseError("extinction coefficient must be >= 0", lineno);
        if (!rows.empty() && !(e_ev * constants::ev_to_rad_s > rows.back().omega))
            throw ParseError("energies must be strictly increasing", lineno);
        rows.push_back({e_ev * constants::ev_to_rad_s, n, k});
    }
    return OpticalTable(std::move(rows), std::move(source_label));
}

OpticalTable OpticalTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open optical table '" + path + "'");
    return load(in, path);
}

double OpticalTable::im_eps(double omega) const {
    if (!(omega >= omega_min() && omega <= omega_max()))
        throw DomainError("im_eps: frequency outside table range");
    // locate the bracketing rows, then interpolate 2nk linearly in log-log
    auto it = std::lower_bound(rows_.begin(), rows_.end(), omega,
                               [](const Row& r, double w) { return r.omega < w; });
    if (it == rows_.begin()) ++it;
    const Row& hi = *it;
    const Row& lo = *(it - 1);
    const double v_lo = 2.0 * lo.n * lo.k;
    const double v_hi = 2.0 * hi.n * hi.k;
    if (v_lo <= 0.0 || v_hi <= 0.0) {
        // fall back to linear when a row is lossless
        const double f = (omega - lo.omega) / (hi.omega - lo.omega);
        return v_lo + f * (v_hi - v_lo);
    }
    const double f = std::log(omega / lo.omega) / std::log(hi.omega / lo.omega);
    return v_lo * std::pow(v_hi / v_lo, f);
}

namespace {

// (2/pi) \int_0^{w1} w Im eps_Drude / (w^2 + xi^2) dw with
// Im eps_Drude = wp^2 g / (w (w^2 + g^2)), in closed form.
double drude_tail_contribution(const DrudeTail& tail, double w1, double xi) {
    const double g = tail.gamma;
    const double wp2 = tail.omega_p * tail.omega_p;
    if (std::fabs(xi - g) < 1e-8 * g) {
        // xi -> gamma limit: wp^2 g \int dw/(w^2+g^2)^2
        return (2.0 / M_PI) * wp2 / (2.0 * g * g) *
               (w1 / (w1 * w1 + g * g) + std::atan(w1 / g) / g);
    }
    const double term = std::atan(w1 / g) / g - std::atan(w1 / xi) / xi;
    return (2.0 / M_PI) * wp2 * g / (xi * xi - g * g) * term;
}

} // namespace

double kk_to_imag_axis(const OpticalTable& table, const ExtrapolationPolicy& policy,
                       double xi, double rel_tol) {
    if (!(xi > 0.0)) throw DomainError("kk_to_imag_axis requires xi > 0");
    const double w_min = table.omega_min();
    const double w_max = table.omega_max();

    double eps = 1.0;

    // Region [0, w_min]: policy.low
    if (const auto* drude = std::get_if<DrudeTail>(&policy.low)) {
        eps += drude_tail_contribution(*drude, w_min, xi);
    } else {
        const auto& plasma = std::get<PlasmaTail>(policy.low);
        eps += plasma.omega_p * plasma.omega_p / (xi * xi);
    }

    // Region [w_min, w_max]: adaptive quadrature on the interpolated data
    quad::Options opt;
    opt.rel_tol = rel_tol;
    auto mid = [&](double w) { return w * table.im_eps(w) / (w * w + xi * xi); };
    const auto pts = quad::log_segments(w_min, w_max, 4, {xi});
    eps += (2.0 / M_PI) * quad::integrate_segments(mid, pts, opt);

    // Region [w_max, inf): Im eps = A w^{-p} matched at w_max; substitute
    // u = w_max/w so the integrand is u^{p-1} w_max^{2-p}/(w_max^2 + xi^2 u^2).
    const double p = policy.high.exponent;
    if (!(p > 1.0)) throw DomainError("high-frequency tail exponent must be > 1");
    const double a_coef = table.im_eps(w_max) * std::pow(w_max, p);
    auto high = [&](double u) {
        return std::pow(u, p - 1.0) * std::pow(w_max, 2.0 - p) /
               (w_max * w_max + xi * xi * u * u);
    };
    eps += (2.0 / M_PI) * a_coef * quad::integrate(high, 0.0, 1.0, opt);

    return eps;
}

OpticalTable synthetic_drude_table(double omega_p, double gamma, int n_rows,
                                   double e_min_ev, double e_max_ev) {
    if (n_rows < 8) throw DomainError("synthetic table needs at least 8 rows");
    std::vector<OpticalTable::Row> rows;
    rows.reserve(static_cast<std::size_t>(n_rows));
    for (int i = 0; i < n_rows; ++i) {
        const double e_ev =
            e_min_ev * std::pow(e_max_ev / e_min_ev, double(i) / (n_rows - 1));
        const double w = e_ev * constants::ev_to_rad_s;
        const std::complex<double> eps =
            1.0 - omega_p * omega_p /
                      std::complex<double>(w * w, gamma * w);
        const std::complex<double> nk = std::sqrt(eps);
        rows.push_back({w, nk.real(), nk.imag()});
    }
    std::ostringstream label;
    label << "synthetic-drude wp=" << omega_p << " gamma=" << gamma;
    return OpticalTable(std::move(rows), label.str());
}

} // namespace casimir
