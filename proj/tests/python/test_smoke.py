"""End-to-end smoke of the python bindings against frozen constants."""

import math

import pytest

import seedmra as sm


def test_catalogue():
    names = sm.preset_names()
    assert len(names) == 17
    assert "haar" in names
    assert sm.preset_note("row2_literal")


def test_lattice_orthonormality():
    s = sm.SeedFunction.preset("haar")
    lat = sm.overlap_lattice(s, L=8)
    onc = sm.check_onc(lat)
    assert onc.passed
    assert onc.residual <= 1e-12
    assert abs(lat.at(0, 0) - 1.0) <= 1e-12


def test_filter_extraction():
    f = sm.extract_filter(sm.SeedFunction.preset("haar"), 8)
    r = 1.0 / math.sqrt(2.0)
    assert abs(f.at(0) - r) <= 1e-12
    assert abs(f.at(-1) - r) <= 1e-12
    assert abs(f.at(3)) <= 1e-15
    assert sm.check_r3(f).passed


def test_orthonormalization_identity():
    s = sm.SeedFunction.preset("row7")
    lat = sm.overlap_lattice(s, L=8)
    sym = sm.symbol(lat, 64, 64)
    fc = sm.f_coefficients(sym)
    assert abs(fc.at(0, 0) - 1.0) <= 1e-12
    H = sm.ont_filter(s, lat, sym, 12)
    h = sm.extract_filter(s, 12)
    gap = max(abs(H.at(n) - h.at(n)) for n in range(-12, 13))
    assert gap <= 1e-10


def test_singular_symbol_raises():
    z = sm.SeedFunction.preset("zero")
    lat = sm.overlap_lattice(z, L=4)
    with pytest.raises(sm.SingularSymbol):
        sm.f_coefficients(sm.symbol(lat, 32, 32))


def test_cascade_haar_exact():
    f = sm.extract_filter(sm.SeedFunction.preset("haar"), 8)
    res = sm.cascade_scaling(f, 10, 8)
    assert res.residual == 0.0
    assert abs(sm.sampled_integral(res.phi) - 1.0) == 0.0
    psi = sm.mother_wavelet(f, res.phi)
    assert abs(sm.sampled_l2_norm_sq(psi) - 1.0) <= 1e-12
    assert sm.check_translate_orthonormality(psi, 3).passed


def test_quantum_overlap():
    g = sm.SeedFunction.preset("gaussian")
    model = sm.KernelModel(sm.KernelVariant.Example2, g)
    v = sm.overlap2d(model, g, 1, 0)
    assert abs(abs(v) - math.exp(-math.pi)) <= 1e-8


def test_json_round_trip():
    s = sm.SeedFunction.preset("row3")
    back = sm.SeedFunction.from_json(s.to_json())
    for x in (0.0, 0.3, 1.7):
        assert back.eval(x) == s.eval(x)
