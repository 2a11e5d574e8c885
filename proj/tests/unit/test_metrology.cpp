#include <cmath>
#include <sstream>

#include <doctest.h>

#include "casimir/analytic.hpp"
#include "casimir/constants.hpp"
#include "casimir/metrology.hpp"

using namespace casimir;
namespace cn = constants;

namespace {

const DielectricModel kAu = Drude{9.0 * cn::ev_to_rad_s,
                                  0.035 * cn::ev_to_rad_s};
const DielectricModel kAg = Drude{9.0 * cn::ev_to_rad_s,
                                  0.02 * cn::ev_to_rad_s};

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g;
    for (int i = 0; i < n; ++i)
        g.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
    return g;
}

// cheap sphere-plate theory used by the fit tests
double ideal_force(double a) { return ideal_metal_force_sphere_t0(a, 55e-6); }

} // namespace

TEST_SUITE("metrology") {

TEST_CASE("curve generation matches the closed form for ideal metals") {
    const Geometry geo{0.0, 55e-6};
    const std::vector<double> grid{200e-9, 500e-9, 1000e-9};
    const auto curve = generate_curve(geo, IdealMetal{}, IdealMetal{}, {1.0},
                                      RoughnessSpec{}, grid);
    REQUIRE(curve.points.size() == 3);
    CHECK(curve.quantity == Quantity::Force);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(curve.points[i].first == grid[i]);
        CHECK(curve.points[i].second ==
              doctest::Approx(ideal_force(grid[i])).epsilon(5e-3));
    }
    CHECK(curve.provenance.geometry == "sphere-plate R=5.5e-05");
    CHECK(curve.provenance.model_sphere == "ideal");

    CHECK_THROWS_AS(generate_curve(geo, IdealMetal{}, IdealMetal{}, {1.0},
                                   RoughnessSpec{}, {}),
                    DomainError);
    CHECK_THROWS_AS(generate_curve(geo, IdealMetal{}, IdealMetal{}, {1.0},
                                   RoughnessSpec{}, {2e-7, 1e-7}),
                    DomainError);
}

TEST_CASE("cached curve interpolation tracks direct evaluation") {
    const Geometry geo{0.0, 55e-6};
    const auto grid = log_grid(50e-9, 1000e-9, 25);
    const auto curve =
        generate_curve(geo, kAg, kAu, {300.0}, RoughnessSpec{}, grid);
    const CurveEvaluator eval(curve);
    for (double a : {63e-9, 130e-9, 420e-9, 910e-9}) {
        Geometry g{a, 55e-6};
        const double direct = force_sphere_plate(kAg, kAu, g, {300.0});
        CHECK(eval(a) == doctest::Approx(direct).epsilon(1e-3));
    }
    CHECK_THROWS_AS(eval(10e-9), DomainError);
}

TEST_CASE("offset fit recovers the truth on noiseless data") {
    const auto grid = log_grid(80e-9, 600e-9, 40);
    const double a0_true = 40e-9;
    const auto data = synth_data(ideal_force, grid, a0_true, 0.0, 7);
    const auto fit = fit_offset(data, ideal_force, 50e-9, 700e-9, 10e-9, 80e-9);
    CHECK(std::fabs(fit.a0 - a0_true) < 0.02e-9);
    CHECK(fit.rms < 1e-13);
}

TEST_CASE("offset fit noise floor sits in the statistical band") {
    const auto grid = log_grid(80e-9, 600e-9, 50);
    const double noise = 5e-12;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto data = synth_data(ideal_force, grid, 40e-9, noise, seed);
        const auto fit =
            fit_offset(data, ideal_force, 50e-9, 700e-9, 10e-9, 80e-9);
        CHECK(fit.rms > 3e-12);
        CHECK(fit.rms < 7e-12);
    }
}

TEST_CASE("model mismatch raises the fit residual") {
    const Geometry geo{0.0, 55e-6};
    const auto grid = log_grid(60e-9, 800e-9, 30);
    const auto curve =
        generate_curve(geo, kAg, kAu, {300.0}, RoughnessSpec{}, grid);
    const CurveEvaluator lifshitz_theory(curve);
    const auto data = synth_data(lifshitz_theory, log_grid(80e-9, 600e-9, 40),
                                 30e-9, 0.0, 3);
    const auto self_fit = fit_offset(data, lifshitz_theory, 70e-9, 700e-9,
                                     5e-9, 60e-9);
    // the mismatched theory pushes the preferred offset far from the
    // truth, so the bracket must reach much further out
    const auto cross_fit =
        fit_offset(data, ideal_force, 70e-9, 700e-9, 20e-9, 250e-9);
    CHECK(cross_fit.rms > self_fit.rms);
}

TEST_CASE("monotone objective over the bracket is refused") {
    const auto grid = log_grid(80e-9, 600e-9, 40);
    const auto data = synth_data(ideal_force, grid, 40e-9, 0.0, 7);
    CHECK_THROWS_WITH_AS(
        (void)fit_offset(data, ideal_force, 50e-9, 700e-9, 100e-9, 140e-9),
        doctest::Contains("widen the bracket"), DomainError);
}

TEST_CASE("interval choice is irrelevant for the correct theory") {
    const auto grid = log_grid(70e-9, 900e-9, 60);
    const auto data = synth_data(ideal_force, grid, 40e-9, 0.0, 11);
    const auto res = interval_sensitivity(
        data, ideal_force,
        {{60e-9, 150e-9}, {300e-9, 800e-9}, {80e-9, 900e-9}}, 10e-9, 80e-9);
    CHECK(res.fits.size() == 3);
    CHECK(res.spread < 0.1e-9);

    const auto single = interval_sensitivity(data, ideal_force,
                                             {{60e-9, 900e-9}}, 10e-9, 80e-9);
    CHECK(single.fits.size() == 1);
    CHECK(single.spread == 0.0);
}

TEST_CASE("synthetic data is deterministic and honestly noisy") {
    const auto grid = log_grid(80e-9, 600e-9, 200);
    const auto s1 = synth_data(ideal_force, grid, 40e-9, 5e-12, 42);
    const auto s2 = synth_data(ideal_force, grid, 40e-9, 5e-12, 42);
    REQUIRE(s1.points.size() == s2.points.size());
    for (std::size_t i = 0; i < s1.points.size(); ++i) {
        CHECK(s1.points[i].z == s2.points[i].z);
        CHECK(s1.points[i].f == s2.points[i].f);
    }
    // residual spread within 15% of the requested rms at N = 200
    double ss = 0.0;
    for (std::size_t i = 0; i < s1.points.size(); ++i) {
        const double r = s1.points[i].f - ideal_force(grid[i]);
        ss += r * r;
    }
    const double sd = std::sqrt(ss / s1.points.size());
    CHECK(sd > 5e-12 * 0.85);
    CHECK(sd < 5e-12 * 1.15);
    // zero noise reproduces the theory exactly
    const auto clean = synth_data(ideal_force, grid, 40e-9, 0.0, 42);
    CHECK(clean.points[5].f == ideal_force(grid[5]));
    CHECK(clean.points[5].z == grid[5] - 40e-9);
}

TEST_CASE("plasma superconducting description gives a null signal") {
    SuperconductorParams al{12.5 * cn::ev_to_rad_s, 0.063 * cn::ev_to_rad_s,
                            1.3, 1.764};
    const auto sweep =
        sc_delta_sweep(100e-9, al, ScSubModel::PlasmaBelowTc,
                       NormalModel::Plasma, {0.9 * al.t_c, al.t_c});
    for (const auto& p : sweep) {
        CHECK(p.delta_p == 0.0);
        CHECK(p.p_normal < 0.0);
    }
}

TEST_CASE("Mattis-Bardeen signal vanishes exactly at the transition") {
    SuperconductorParams al{12.5 * cn::ev_to_rad_s, 0.063 * cn::ev_to_rad_s,
                            1.3, 1.764};
    const auto sweep = sc_delta_sweep(100e-9, al, ScSubModel::MattisBardeen,
                                      NormalModel::Drude, {al.t_c});
    REQUIRE(sweep.size() == 1);
    CHECK(sweep[0].delta_p == 0.0);
    // out-of-range temperatures are rejected
    CHECK_THROWS_AS(sc_delta_sweep(100e-9, al, ScSubModel::MattisBardeen,
                                   NormalModel::Drude, {2.0 * al.t_c}),
                    DomainError);
    CHECK_THROWS_AS(sc_delta_sweep(100e-9, al, ScSubModel::MattisBardeen,
                                   NormalModel::Drude, {0.01 * al.t_c}),
                    DomainError);
}

TEST_CASE("curve CSV output is byte stable and round trips") {
    const Geometry geo{0.0, 55e-6};
    const std::vector<double> grid{200e-9, 500e-9, 1000e-9};
    const auto curve = generate_curve(geo, IdealMetal{}, IdealMetal{}, {1.0},
                                      RoughnessSpec{}, grid);
    std::ostringstream a, b;
    write_curve_csv(a, curve);
    write_curve_csv(b, curve);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("# provenance: ") == 0);
    CHECK(a.str().find("a_m,force_N") != std::string::npos);

    std::istringstream in(a.str());
    const auto back = read_curve_csv(in);
    REQUIRE(back.points.size() == curve.points.size());
    for (std::size_t i = 0; i < back.points.size(); ++i)
        CHECK(back.points[i].second ==
              doctest::Approx(curve.points[i].second).epsilon(1e-11));
}

TEST_CASE("provenance hash separates distinct configurations") {
    Provenance p1;
    p1.geometry = "plate-plate";
    p1.model_sphere = "ideal";
    p1.model_plate = "ideal";
    p1.temperature = 300.0;
    Provenance p2 = p1;
    CHECK(p1.hash() == p2.hash());
    p2.temperature = 299.0;
    CHECK(p1.hash() != p2.hash());
}

TEST_CASE("measured series CSV round trips and validates") {
    MeasuredSeries s;
    s.points = {{1e-9, -5e-10, 1e-12}, {2e-9, -4e-10, 1e-12}};
    std::ostringstream out;
    write_series_csv(out, s);
    std::istringstream in(out.str());
    const auto back = read_series_csv(in);
    REQUIRE(back.points.size() == 2);
    CHECK(back.points[1].f == doctest::Approx(-4e-10));

    std::istringstream bad_header("oops\n1,2,3\n");
    CHECK_THROWS_AS(read_series_csv(bad_header), ParseError);
    std::istringstream bad_sigma("z_m,f_N,sigma_N\n1e-9,1e-12,0\n");
    CHECK_THROWS_AS(read_series_csv(bad_sigma), ParseError);
    std::istringstream bad_order(
        "z_m,f_N,sigma_N\n2e-9,1e-12,1e-12\n1e-9,1e-12,1e-12\n");
    CHECK_THROWS_AS(read_series_csv(bad_order), ParseError);
}

} // TEST_SUITE
