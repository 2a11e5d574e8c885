#include <cmath>
#include <sstream>

#include <doctest.h>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/optics_data.hpp"

using namespace casimir;
namespace cn = constants;

namespace {

double eps_drude_closed(double omega_p, double gamma, double xi) {
    return 1.0 + omega_p * omega_p / (xi * (xi + gamma));
}

const double kWpAu = 9.0 * cn::ev_to_rad_s;
const double kGammaAu = 0.035 * cn::ev_to_rad_s;

} // namespace

TEST_SUITE("optics") {

TEST_CASE("table parses and interpolates log-log") {
    std::istringstream in(
        "# energy n k\n"
        "1.0 1.0 1.0\n"
        "2.0 1.0 2.0\n"
        "3.0 1.0 3.0\n"
        "4.0 1.0 4.0\n"
        "5.0 1.0 5.0\n"
        "6.0 1.0 6.0\n"
        "7.0 1.0 7.0\n"
        "8.0 1.0 8.0\n");
    const auto table = OpticalTable::load(in, "inline");
    CHECK(table.rows().size() == 8);
    // Im eps = 2nk = 2E_eV here; log-log interpolation is exact on a
    // power law, so the midpoint value must match 2 * E.
    const double w = 2.5 * cn::ev_to_rad_s;
    CHECK(table.im_eps(w) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK_THROWS_AS(table.im_eps(0.5 * cn::ev_to_rad_s), DomainError);
}

TEST_CASE("table rejects malformed input with the line number") {
    auto load = [](const char* text) {
        std::istringstream in(text);
        return OpticalTable::load(in, "bad");
    };
    // non-monotonic energies
    try {
        load("1 1 1\n2 1 1\n1.5 1 1\n4 1 1\n5 1 1\n6 1 1\n7 1 1\n8 1 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    // n <= 0
    CHECK_THROWS_AS(
        load("1 0.0 1\n2 1 1\n3 1 1\n4 1 1\n5 1 1\n6 1 1\n7 1 1\n8 1 1\n"),
        ParseError);
    // negative k
    CHECK_THROWS_AS(
        load("1 1 -1\n2 1 1\n3 1 1\n4 1 1\n5 1 1\n6 1 1\n7 1 1\n8 1 1\n"),
        ParseError);
    // malformed number
    CHECK_THROWS_AS(
        load("1 1 1\n2 oops 1\n3 1 1\n4 1 1\n5 1 1\n6 1 1\n7 1 1\n8 1 1\n"),
        ParseError);
    // too few rows
    CHECK_THROWS_AS(load("1 1 1\n2 1 1\n"), ParseError);
}

TEST_CASE("synthetic table round trips the closed-form permittivity") {
    const auto table = synthetic_drude_table(kWpAu, kGammaAu);
    ExtrapolationPolicy policy{DrudeTail{kWpAu, kGammaAu}, InversePowerTail{3.0}};
    const double xi = 2.468e14;
    const double eps = kk_to_imag_axis(table, policy, xi);
    CHECK(eps ==
          doctest::Approx(eps_drude_closed(kWpAu, kGammaAu, xi)).epsilon(1e-3));
}

TEST_CASE("dispersion round trip holds over several decades") {
    const auto table = synthetic_drude_table(kWpAu, kGammaAu);
    ExtrapolationPolicy policy{DrudeTail{kWpAu, kGammaAu}, InversePowerTail{3.0}};
    for (double xi : {1e14, 5e14, 2e15, 1e16}) {
        const double eps = kk_to_imag_axis(table, policy, xi);
        CHECK(eps == doctest::Approx(eps_drude_closed(kWpAu, kGammaAu, xi))
                         .epsilon(1e-3));
    }
}

TEST_CASE("result is at least one") {
    const auto table = synthetic_drude_table(kWpAu, kGammaAu);
    ExtrapolationPolicy policy{DrudeTail{kWpAu, kGammaAu}, InversePowerTail{3.0}};
    CHECK(kk_to_imag_axis(table, policy, 1e18) >= 1.0);
}

TEST_CASE("plasma low tail carries the free-carrier weight directly") {
    // Rows start at 0.5 eV, far above gamma, so the table itself holds
    // no free-carrier absorption to double count.
    const auto table = synthetic_drude_table(kWpAu, kGammaAu, 200, 0.5, 100.0);
    ExtrapolationPolicy plasma{PlasmaTail{kWpAu}, InversePowerTail{3.0}};
    ExtrapolationPolicy drude{DrudeTail{kWpAu, kGammaAu}, InversePowerTail{3.0}};
    // The two policies differ only in how [0, omega_min] is filled:
    // the delta weight wp^2/xi^2 versus the closed-form Drude tail.
    const double xi = 1e16;
    const double ep = kk_to_imag_axis(table, plasma, xi);
    const double ed = kk_to_imag_axis(table, drude, xi);
    const double w_min = table.omega_min();
    const double tail_drude =
        (2.0 / M_PI) * kWpAu * kWpAu * kGammaAu /
        (xi * xi - kGammaAu * kGammaAu) *
        (std::atan(w_min / kGammaAu) / kGammaAu - std::atan(w_min / xi) / xi);
    const double expected_gap = kWpAu * kWpAu / (xi * xi) - tail_drude;
    CHECK(ep - ed == doctest::Approx(expected_gap).epsilon(1e-6));
    // At low xi they must differ: 1/xi^2 vs 1/(xi(xi+gamma)).
    const double xi_low = 1e13;
    CHECK(kk_to_imag_axis(table, plasma, xi_low) >
          kk_to_imag_axis(table, drude, xi_low));
}

TEST_CASE("synthetic table validates row count") {
    CHECK_THROWS_AS(synthetic_drude_table(kWpAu, kGammaAu, 4), DomainError);
}

} // TEST_SUITE
