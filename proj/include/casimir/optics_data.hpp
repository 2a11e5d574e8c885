#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace casimir {

/// Tabulated optical constants (omega in rad/s, refractive index n,
/// extinction coefficient k). Immutable after construction; abscissae
/// are strictly increasing and there are at least eight rows.
class OpticalTable {
public:
    struct Row {
        double omega; // rad/s
        double n;
        double k;
    };

    /// Parse the text format: lines `E_eV n k` (whitespace separated,
    /// energies in eV), `#` comments and blank lines ignored.
    /// Rejects (naming the offending line): non-monotonic energies,
    /// n <= 0 or k < 0, malformed numerics, fewer than 8 data rows.
    static OpticalTable load(std::istream& in, std::string source_label = "");
    static OpticalTable load_file(const std::string& path);

    OpticalTable(std::vector<Row> rows, std::string source_label);

    /// Im eps(omega) = 2 n k, log-log linearly interpolated between rows.
    /// omega must lie within [omega_min, omega_max].
    double im_eps(double omega) const;

    const std::vector<Row>& rows() const { return rows_; }
    const std::string& source_label() const { return label_; }
    double omega_min() const { return rows_.front().omega; }
    double omega_max() const { return rows_.back().omega; }

private:
    std::vector<Row> rows_;
    std::string label_;
};

/// Free-carrier (Drude) absorption assumed below the first table row.
struct DrudeTail {
    double omega_p; // rad/s
    double gamma;   // rad/s
};

/// Plasma-model extrapolation: the free-carrier response is carried
/// entirely by a zero-frequency delta of weight omega_p^2, contributing
/// omega_p^2/xi^2 on the imaginary axis. No absorption below the first
/// row; meaningful only for tables whose low cutoff sits above the
/// free-carrier absorption region (omega_min >> gamma).
struct PlasmaTail {
    double omega_p; // rad/s
};

/// Im eps ~ omega^{-exponent} above the last row, matched continuously.
struct InversePowerTail {
    double exponent = 3.0; // must be > 1
};

struct ExtrapolationPolicy {
    std::variant<DrudeTail, PlasmaTail> low;
    InversePowerTail high;
};

/// eps(i xi) by the dispersion integral
///   eps(i xi) = 1 + (2/pi) \int_0^inf omega Im eps(omega)/(omega^2+xi^2) domega
/// with the three regions [0, omega_min], [omega_min, omega_max],
/// [omega_max, inf) handled analytically / by adaptive quadrature /
/// analytically as described by the policy.
double kk_to_imag_axis(const OpticalTable& table, const ExtrapolationPolicy& policy,
                       double xi, double rel_tol = 1e-8);

/// Synthetic table sampled from the Drude model,
/// Im eps = omega_p^2 gamma / (omega (omega^2 + gamma^2)),
/// on a log-spaced energy grid [e_min_ev, e_max_ev]. Used by oracle
/// tests and available from the CLI for desk-scale experiments.
OpticalTable synthetic_drude_table(double omega_p, double gamma, int n_rows = 200,
                                   double e_min_ev = 0.01, double e_max_ev = 100.0);

} // namespace casimir
