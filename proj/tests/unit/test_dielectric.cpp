#include <cmath>

#include <doctest.h>

#include "casimir/constants.hpp"
#include "casimir/dielectric.hpp"

using namespace casimir;
namespace cn = constants;

TEST_SUITE("dielectric") {

TEST_CASE("closed-form models evaluate exactly") {
    const double wp = 9.0 * cn::ev_to_rad_s;
    const double g = 0.035 * cn::ev_to_rad_s;
    const double xi = 2.468e14;
    CHECK(eps_imag_axis(Vacuum{}, xi, 300.0) == 1.0);
    CHECK(eps_imag_axis(Plasma{wp}, xi, 300.0) ==
          doctest::Approx(1.0 + wp * wp / (xi * xi)).epsilon(1e-14));
    CHECK(eps_imag_axis(Drude{wp, g}, xi, 300.0) ==
          doctest::Approx(1.0 + wp * wp / (xi * (xi + g))).epsilon(1e-14));
    // plasma is the gamma -> 0 limit of Drude
    CHECK(eps_imag_axis(Drude{wp, 0.0}, xi, 300.0) ==
          eps_imag_axis(Plasma{wp}, xi, 300.0));
    CHECK_THROWS_AS(eps_imag_axis(IdealMetal{}, xi, 300.0), DomainError);
    CHECK_THROWS_AS(eps_imag_axis(Plasma{wp}, 0.0, 300.0), DomainError);
}

TEST_CASE("plasma frequency scale check") {
    // eps(i xi) = 2 exactly at xi = omega_p
    const double wp = 9.0 * cn::ev_to_rad_s;
    CHECK(eps_imag_axis(Plasma{wp}, wp, 300.0) == doctest::Approx(2.0));
}

TEST_CASE("zero-frequency classes") {
    const double wp = 9.0 * cn::ev_to_rad_s;
    const double g = 0.035 * cn::ev_to_rad_s;
    CHECK(std::get<Finite>(zero_freq_class(Vacuum{}, 300.0)).eps0 == 1.0);
    CHECK(std::holds_alternative<DrudeLike>(zero_freq_class(Drude{wp, g}, 300.0)));
    CHECK(std::get<PlasmaLike>(zero_freq_class(Plasma{wp}, 300.0)).omega_eff_sq ==
          doctest::Approx(wp * wp));
    CHECK(std::holds_alternative<PlasmaLike>(
        zero_freq_class(Drude{wp, 0.0}, 300.0)));
    CHECK_THROWS_AS(zero_freq_class(IdealMetal{}, 300.0), DomainError);

    SuperconductorParams al{12.5 * cn::ev_to_rad_s, 0.063 * cn::ev_to_rad_s,
                            1.3, 1.764};
    // Mattis-Bardeen: superfluid (plasma-like) below t_c, Drude-like above
    const Superconductor mb{al, ScSubModel::MattisBardeen};
    CHECK(std::holds_alternative<DrudeLike>(zero_freq_class(mb, al.t_c)));
    const auto below = zero_freq_class(mb, 0.5 * al.t_c);
    CHECK(std::get<PlasmaLike>(below).omega_eff_sq ==
          doctest::Approx(superfluid_weight(0.5 * al.t_c, al)));
    // local plasma description: plasma-like at every temperature
    const Superconductor pl{al, ScSubModel::PlasmaBelowTc};
    CHECK(std::get<PlasmaLike>(zero_freq_class(pl, al.t_c)).omega_eff_sq ==
          doctest::Approx(al.omega_p * al.omega_p));
}

TEST_CASE("superconductor model is exactly Drude at and above t_c") {
    SuperconductorParams al{12.5 * cn::ev_to_rad_s, 0.063 * cn::ev_to_rad_s,
                            1.3, 1.764};
    const Superconductor mb{al, ScSubModel::MattisBardeen};
    const Drude drude{al.omega_p, al.gamma};
    for (double xi : {1e11, 1e13, 1e15})
        CHECK(eps_imag_axis(mb, xi, al.t_c) ==
              eps_imag_axis(drude, xi, al.t_c));
    // far above the gap scale the closed-form crossover applies below t_c
    CHECK(eps_imag_axis(mb, 1e15, 0.5 * al.t_c) ==
          eps_imag_axis(drude, 1e15, 0.5 * al.t_c));
}

TEST_CASE("penetration depth") {
    const double wp = 9.0 * cn::ev_to_rad_s;
    CHECK(penetration_depth(Plasma{wp}) ==
          doctest::Approx(cn::c_light / wp));
    CHECK(penetration_depth(Drude{wp, 1e13}) ==
          doctest::Approx(cn::c_light / wp));
    CHECK_THROWS_AS(penetration_depth(Vacuum{}), DomainError);
    CHECK_THROWS_AS(penetration_depth(IdealMetal{}), DomainError);
}

TEST_CASE("model grammar round trips") {
    const auto drude = parse_model_spec("drude:wp=9.0eV,gamma=0.035eV");
    CHECK(std::get<Drude>(drude).omega_p ==
          doctest::Approx(9.0 * cn::ev_to_rad_s));
    CHECK(std::get<Drude>(drude).gamma ==
          doctest::Approx(0.035 * cn::ev_to_rad_s));
    CHECK(std::holds_alternative<IdealMetal>(parse_model_spec("ideal")));
    CHECK(std::holds_alternative<Vacuum>(parse_model_spec("vacuum")));
    // bare rad/s values are accepted too
    CHECK(std::get<Plasma>(parse_model_spec("plasma:wp=1.4e16")).omega_p ==
          doctest::Approx(1.4e16));
    const auto sc =
        parse_model_spec("sc:wp=12.5eV,gamma=0.063eV,tc=1.3K,model=mb");
    CHECK(std::get<Superconductor>(sc).params.t_c == doctest::Approx(1.3));
    CHECK(std::get<Superconductor>(sc).sub_model == ScSubModel::MattisBardeen);

    // canonical string reparses to the same physics
    const auto again = parse_model_spec(model_spec_string(drude));
    CHECK(eps_imag_axis(again, 1e14, 300.0) ==
          doctest::Approx(eps_imag_axis(drude, 1e14, 300.0)).epsilon(1e-12));
}

TEST_CASE("model grammar rejects malformed specs") {
    CHECK_THROWS_AS(parse_model_spec("unobtanium"), ParseError);
    CHECK_THROWS_AS(parse_model_spec("plasma:"), ParseError);
    CHECK_THROWS_AS(parse_model_spec("plasma:wp=9.0lightyears"), ParseError);
    CHECK_THROWS_AS(parse_model_spec("drude:wp=9.0eV"), ParseError);
    CHECK_THROWS_AS(parse_model_spec("drude:wp=9.0eV,wp=9.0eV,gamma=1e13"),
                    ParseError);
    CHECK_THROWS_AS(parse_model_spec("drude:wp=9.0eV,gamma=-1.0eV"), ParseError);
    CHECK_THROWS_AS(parse_model_spec("plasma:wp=9.0eV,unknown=1"), ParseError);
    CHECK_THROWS_AS(parse_model_spec("table:extrap=drude,wp=9eV,gamma=1e13"),
                    ParseError);
    CHECK_THROWS_AS(parse_model_spec("sc:wp=12.5eV,gamma=0.063eV,tc=1.3K,"
                                     "model=bcs"),
                    ParseError);
}

} // TEST_SUITE
