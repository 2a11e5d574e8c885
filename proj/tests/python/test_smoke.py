"""Smoke tests for the _casimir extension module."""
import math
import os
import sys

import pytest

_mod_dir = os.environ.get("CASIMIR_MODULE_DIR")
if _mod_dir:
    sys.path.insert(0, _mod_dir)

import _casimir as cas  # noqa: E402

DRUDE = "drude:wp=9.0eV,gamma=0.035eV"


def test_constants():
    assert cas.HBAR == pytest.approx(1.054571817e-34)
    assert cas.K_BOLTZMANN == pytest.approx(1.380649e-23)
    assert cas.C_LIGHT == 2.99792458e8


def test_eps_plasma_closed_form():
    wp = 9.0 * cas.EV_TO_RAD_S
    assert cas.eps_imag_axis(f"plasma:wp=9.0eV", wp) == pytest.approx(2.0)
    assert cas.eps_imag_axis(DRUDE, 2.468e14) == pytest.approx(2526.0, rel=1e-3)


def test_ideal_pressure_matches_closed_form():
    a = 1e-6
    closed = cas.ideal_metal_pressure_t0(a)
    assert closed == pytest.approx(
        -math.pi**2 * cas.HBAR * cas.C_LIGHT / (240.0 * a**4))
    assert cas.pressure_plate_plate("ideal", "ideal", a, t=1.0) == \
        pytest.approx(closed, rel=5e-3)


def test_sphere_force_and_perturbation_agree():
    a, r = 500e-9, 55e-6
    wp = 9.0 * cas.EV_TO_RAD_S
    full = cas.force_sphere_plate(f"plasma:wp=9.0eV", f"plasma:wp=9.0eV",
                                  a, r, t=300.0)
    pert = cas.perturbative_force_sphere(a, 300.0, r, wp)
    assert full < 0.0
    assert pert == pytest.approx(full, rel=0.02)


def test_roughness_callback():
    factor = cas.roughness_correct(lambda a: a**-3, 65e-9, 8e-9, 2e-9)
    expected = (65e-9)**-3 * (1.0 + 6.0 * 68e-18 / 65e-9**2)
    assert factor == pytest.approx(expected, rel=1e-6)


def test_sc_sweep_plasma_null():
    out = cas.sc_delta_sweep(100e-9, 12.5, 0.063, 1.3, [1.3],
                             sub_model="plasma", normal_model="plasma")
    assert len(out) == 1
    t, dp = out[0]
    assert t == 1.3
    assert dp == 0.0


def test_bad_model_spec_raises():
    with pytest.raises(cas.CasimirError):
        cas.eps_imag_axis("drude:wp=9.0eV", 1e14)
