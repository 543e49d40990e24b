import math

import pytest

try:
    import zpfcirc as z
except ImportError:  # running against the build tree
    import _zpfcirc as z


HBAR = z.hbar
EPS0 = z.eps0


def test_impedance_series_rc():
    net = z.parse_netlist("R1 a b 10\nC1 b gnd 1p\nPORT a gnd\n")
    omega = 1e10
    zval = z.evaluate_impedance(net, omega)
    assert zval.real == pytest.approx(10.0, rel=1e-12)
    assert zval.imag == pytest.approx(-1.0 / (omega * 1e-12), rel=1e-12)


def test_netlist_roundtrip():
    net = z.circuit_IV(7.0, 1e-9, 1e-14)
    text = z.unparse_netlist(net)
    again = z.parse_netlist(text)
    w = 3e9
    assert z.evaluate_impedance(again, w) == pytest.approx(
        z.evaluate_impedance(net, w), rel=1e-12
    )


def test_lint_collects_diagnostics():
    diags = z.lint_netlist("R1 a b -5\nX9 a b 1\nPORT a\n")
    assert len(diags) >= 3
    assert all(line >= 1 for line, _, _, _ in diags)


def test_energy_renormalized_matches_closed_form():
    R, C0, C = 10.0, 1e-14, 3e-14
    res = z.energy_renormalized(z.circuit_I(R, C0), C)
    assert res.renormalized
    assert res.energy == pytest.approx(z.closed_form_I(R, C0, C), rel=1e-6)


def test_raw_integral_divergence_reported():
    with pytest.raises(z.DivergenceError):
        z.energy_raw(z.circuit_I(10.0, 1e-14), 3e-14)


def test_isolated_lc_limit():
    # Circuit II at tiny R: U -> hbar / (4 sqrt(L C)).
    L, C = 1e-9, 1e-13
    R = math.sqrt(L / C) * 1e-4  # q = L/(R^2 C) = 1e8
    u = z.closed_form_II(R, L, C)
    assert u == pytest.approx(HBAR / (4.0 * math.sqrt(L * C)), rel=1e-3)


def test_force_signs():
    geom = z.CapacitorGeometry.from_diameter(15e-6)
    y = 50e-9
    f_I = z.force(z.EnergyModel.closed_I(10.0, 1e-14), geom, y)
    f_II = z.force(z.EnergyModel.closed_II(10.0, 0.1e-9), geom, y)
    f_III = z.force(z.EnergyModel.closed_III(300.0, 10e-12), geom, y)
    assert f_I > 0.0  # repulsive
    assert f_II < 0.0 and f_III < 0.0  # attractive


def test_force_analytic_vs_fd():
    geom = z.CapacitorGeometry.from_diameter(15e-6)
    fa = z.force(z.EnergyModel.closed_I(10.0, 1e-14), geom, 50e-9, "analytic")
    fd = z.force(z.EnergyModel.closed_I(10.0, 1e-14), geom, 50e-9, "fd")
    assert fd == pytest.approx(fa, rel=1e-4)


def test_casimir_plasma_approaches_ideal():
    area, y = 1e-8, 100e-6
    ideal = z.casimir_ideal(area, y)
    plasma = z.casimir_plasma(area, y, plasma_wavelength=100e-9)
    assert plasma == pytest.approx(ideal, rel=5e-3)
    assert plasma < ideal


def test_level_shift_small_b():
    w0 = 2.0 * math.pi * 5e9
    k = 5000.0  # E_J / E_C
    E_C = HBAR * w0 / math.sqrt(8.0 * k)
    tp = z.TransmonParams(E_C=E_C, E_J=k * E_C, C_g=1e-14, C_J=1e-13)
    b = 1e-3
    R = 50.0
    C = b / (tp.omega0() * R)
    shift = z.level_shift(tp, z.parallel_RC(R, C))
    delta_expect = -tp.omega0() * (R / tp.Z_J()) * tp.beta() ** 2 / (2.0 * b)
    assert shift.delta == pytest.approx(delta_expect, rel=0.01)
    assert abs(shift.delta) / shift.gamma == pytest.approx(1.0 / (2.0 * b), rel=0.05)


def test_snr_chain():
    mode = z.MechanicalMode(mass=48e-15, Omega=2.0 * math.pi * 10.56e6, Q=3.3e5)
    cfg = z.MeasurementConfig()
    cfg.noise_floor_S_N = 1e-32
    rep = z.snr_report(1e-15, 1e-15 / 10.0, 10.0, 0.05, mode, cfg)
    assert rep.x_dc == pytest.approx(4.7e-18, rel=0.05)
    assert rep.x_N == pytest.approx(1.4e-16, rel=0.05)
    assert rep.x_s == pytest.approx(1.4e-13, rel=0.05)
    assert 900 < rep.snr < 1100


def test_validity_report():
    rep = z.check_validity(z.circuit_II(10.0, 0.1e-9), 1e-13)
    assert rep.tail_fraction < 1e-2
    assert rep.validity_ok
