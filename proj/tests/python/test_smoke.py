import json
import math
from fractions import Fraction

import pytest

import diskspec


def test_eigenfunction_coefficients():
    u = diskspec.eigenfunction(2, 2)
    assert u == {(0, 0): Fraction(1), (1, 1): Fraction(-4), (2, 2): Fraction(3)}
    assert diskspec.eigenfunction(0, 3) == {}
    assert diskspec.eigenfunction(3, 0) == {(3, 0): Fraction(1)}
    assert diskspec.check_eigen_equation(4, 5)


def test_laplacian_round_trip():
    poly = diskspec.eigenfunction_json(3, 2)
    lap = json.loads(diskspec.laplacian_json(poly))
    original = json.loads(poly)
    scaled = {(t["dz"], t["dzbar"]): Fraction(int(t["num"]), int(t["den"])) * 6 for t in original}
    assert {(t["dz"], t["dzbar"]): Fraction(int(t["num"]), int(t["den"])) for t in lap} == scaled


def test_polar_form():
    angular, radial = diskspec.polar_form(3, 1)
    assert angular == 2
    value = sum(float(c) * 0.5**i for i, c in enumerate(radial))
    assert value == pytest.approx(3 * 0.25 * (1 - 0.25))


def test_spectrum():
    roots = diskspec.locate_spectrum(1, 20.0)
    assert roots == pytest.approx([2, 6, 12, 20], abs=1e-6)
    assert diskspec.boundary_value(0, 9.0) == 0.0
    assert [diskspec.divisor_count(n) for n in range(1, 7)] == [1, 2, 2, 3, 2, 4]
    assert diskspec.eigenspace_indices(6) == [(1, 6), (2, 3), (3, 2), (6, 1)]
    assert diskspec.spectral_zeta_partial_exact(1, 3) == Fraction(8, 3)
    assert abs(diskspec.spectral_zeta_partial(2.0, 100000) - math.pi**4 / 36) < 2e-4
    assert diskspec.harmonic_closure(7, 5)
    with pytest.raises(ValueError):
        diskspec.harmonic_closure(2, 1)
    with pytest.raises(diskspec.ScanResolutionError):
        diskspec.locate_spectrum(0, 20.0, 5.0)


def test_geodesics():
    z, v, _ = diskspec.curve_state(0.5, 0.0)
    assert z == pytest.approx(1.0)
    assert abs(v) < 1e-15
    assert abs(diskspec.geodesic_residual(1 / 3, 1.0)) < 1e-12
    assert diskspec.g_speed(0.25, 2.0) == pytest.approx(1.0, abs=1e-12)
    assert [diskspec.psi(n) for n in (1, 6, 30)] == [1, 2, 4]
    rows = diskspec.closed_geodesics_of_length(6)
    assert [(p, q) for p, q, *_ in rows] == [(1, 6), (2, 3)]
    assert rows[1][2] == Fraction(2, 5)
    assert rows[1][3] == pytest.approx(4 * math.pi * math.sqrt(6))


def test_integrator():
    a, t0 = 1 / 3, 0.2
    z0, v0, _ = diskspec.curve_state(a, t0)
    z, _, reached, halted = diskspec.integrate_geodesic(z0, v0, 1.0)
    assert not halted
    assert reached == pytest.approx(1.0)
    assert abs(z - diskspec.curve_state(a, t0 + 1.0)[0]) < 1e-6
    _, _, reached, halted = diskspec.integrate_geodesic(0j, 0.5 + 0j, 10.0)
    assert halted and reached < 10.0


def test_greens_function():
    spikes = diskspec.greens_function([1, 1], [Fraction(1, 2), Fraction(1, 3)], 3)
    assert spikes == [(1, Fraction(1, 2)), (2, Fraction(1, 4)), (3, Fraction(-1, 24))]
    same = diskspec.greens_function_json('{"L": ["1", "1"], "R": ["0.5", "1/3"]}', "3")
    assert same == spikes
    sim = diskspec.goupillaud_simulate([Fraction(1, 2), Fraction(1, 3)], 3)
    assert [amp for _, amp in sim] == [amp for _, amp in spikes]
    assert diskspec.oracle_profile_amplitude([1, 2], [Fraction(1, 2), Fraction(1, 3)]) == Fraction(-1, 24)
    with pytest.raises(ValueError):
        diskspec.greens_function([1], [1], 3)
    with pytest.raises(diskspec.GuardExceeded):
        diskspec.greens_function([1, Fraction(1, 1000), Fraction(1, 1000), Fraction(1, 1000)], [0.5] * 4, 1000)


def test_verify_suite():
    results = diskspec.verify("eigen")
    passed, total = results["eigen"]
    assert passed == total == 64
