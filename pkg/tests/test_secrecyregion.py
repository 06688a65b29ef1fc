import math

import numpy as np
import pytest

from rfda_secrecy import (ArrayConfig, ConvergenceError, InfeasibleRateError,
                          Location, PowerConfig, Scheme, SecrecyRegion,
                          beampattern_taylor, beta_boundary, beta_max_an,
                          beta_max_no_an, corner_locations, ellipse_residual,
                          ellipse_semi_axes, fixture_vector, generate_k, k_min,
                          m_min, solve_m_min)

CFG = ArrayConfig.half_wavelength(16, 1e9, 1e6)
BOB = Location(100.0, math.radians(45))
REGION = SecrecyRegion(8.0, math.radians(5))
THETA_B = math.radians(45)
POWER30 = PowerConfig(30.0, 0.0, 0.0, 0.6)


def test_region_validation():
    with pytest.raises(ValueError):
        SecrecyRegion(0.0, 0.1)
    with pytest.raises(ValueError):
        SecrecyRegion(1.0, 0.0)


def test_corner_locations():
    corners = corner_locations(BOB, REGION)
    assert len(corners) == 4
    assert {(round(c.r_m, 6), round(math.degrees(c.theta_rad), 6)) for c in corners} \
        == {(108.0, 50.0), (108.0, 40.0), (92.0, 50.0), (92.0, 40.0)}
    # a region poking past the angular domain is rejected
    with pytest.raises(ValueError):
        corner_locations(Location(100.0, math.radians(3)), SecrecyRegion(8.0,
                                                                         math.radians(5)))


def test_beta_boundary_degenerate_cases():
    tiny = SecrecyRegion(1e-9, 1e-12)
    k = np.arange(16.0) - 7.5
    assert beta_boundary(CFG, k, BOB, tiny) == pytest.approx(1.0, abs=1e-9)
    # no frequency diversity: any range offset is invisible, only tiny angle left
    wide = SecrecyRegion(50.0, 1e-12)
    assert beta_boundary(CFG, np.zeros(16), BOB, wide) == pytest.approx(1.0, abs=1e-9)


def test_beta_boundary_fixture_regression():
    k = fixture_vector("K10405")
    value = beta_boundary(CFG, k, BOB, REGION)
    assert 0.0 < value < 1.0
    assert value == pytest.approx(0.22056263365266987, rel=1e-9)


def test_ellipse_semi_axes_values():
    dr, dtheta = ellipse_semi_axes(CFG, 16, 10405.0, 0.4, THETA_B)
    assert dr == pytest.approx(1.4492903777643495, rel=1e-9)
    assert math.degrees(dtheta) == pytest.approx(4.915809953608866, rel=1e-9)
    assert ellipse_semi_axes(CFG, 16, 10405.0, 1.0, THETA_B) == (0.0, 0.0)
    # quadrupling the spread norm halves the radial axis, angle untouched
    dr4, dtheta4 = ellipse_semi_axes(CFG, 16, 4 * 10405.0, 0.4, THETA_B)
    assert dr4 == pytest.approx(dr / 2.0, rel=1e-12)
    assert dtheta4 == pytest.approx(dtheta, rel=1e-12)
    with pytest.raises(ValueError):
        ellipse_semi_axes(CFG, 16, 0.0, 0.4, THETA_B)
    with pytest.raises(ValueError):
        ellipse_semi_axes(CFG, 16, 10405.0, 0.4, 0.0)


def test_ellipse_residual():
    axes = (2.0, 0.1)
    assert ellipse_residual(BOB, BOB, axes) == 0.0
    on_axis = Location(BOB.r_m + 2.0, BOB.theta_rad)
    assert ellipse_residual(BOB, on_axis, axes) == pytest.approx(1.0, rel=1e-12)
    diagonal = Location(BOB.r_m + 2.0 / math.sqrt(2),
                        BOB.theta_rad + 0.1 / math.sqrt(2))
    assert ellipse_residual(BOB, diagonal, axes) == pytest.approx(1.0, rel=1e-12)
    with pytest.raises(ValueError):
        ellipse_residual(BOB, on_axis, (0.0, 0.1))


def test_m_min_values():
    value = m_min(0.4, REGION, THETA_B, CFG)
    assert value == pytest.approx(15.730591851548374, rel=1e-9)
    assert abs(value - 15.73) <= 0.05
    assert m_min(0.4995, REGION, THETA_B, CFG) == pytest.approx(14.3672, abs=5e-4)
    assert m_min(1.0, REGION, THETA_B, CFG) == 1.0
    assert m_min(0.999999, REGION, THETA_B, CFG) == 1.0  # clamped at the floor
    with pytest.raises(ValueError):
        m_min(0.4, REGION, 0.0, CFG)


def test_m_min_monotonicity():
    betas = np.linspace(0.0, 0.99, 25)
    values = [m_min(b, REGION, THETA_B, CFG) for b in betas]
    assert all(v2 <= v1 + 1e-12 for v1, v2 in zip(values, values[1:]))
    widths = np.linspace(math.radians(1), math.radians(20), 20)
    values = [m_min(0.4, SecrecyRegion(8.0, w), THETA_B, CFG) for w in widths]
    assert all(v2 <= v1 + 1e-12 for v1, v2 in zip(values, values[1:]))


def test_k_min_value_and_oracle():
    m_value = m_min(0.4, REGION, THETA_B, CFG)
    value = k_min(0.4, REGION, CFG, m_value)
    assert value == pytest.approx(335.7360746650835, rel=1e-9)
    # independent oracle: bisect the smallest K whose radial axis fits dr
    lo, hi = 1e-6, 1e9
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        dr, _ = ellipse_semi_axes(CFG, m_value, mid, 0.4, THETA_B)
        if dr <= REGION.dr_m:
            hi = mid
        else:
            lo = mid
    assert value == pytest.approx(hi, rel=1e-6)
    assert k_min(1.0, REGION, CFG, 1.0) == 0.0
    doubled = SecrecyRegion(16.0, REGION.dtheta_rad)
    assert k_min(0.4, doubled, CFG, m_value) == pytest.approx(value / 4.0, rel=1e-12)


def test_beta_max_an_values():
    assert beta_max_an(POWER30, 1.0 / 15.0, 1.0) == pytest.approx(
        0.9650038819875777, rel=1e-9)
    assert beta_max_an(POWER30, 1.0 / 15.0, 0.0) == 1.0
    # clamping kicks in when the eavesdropper noise floor dominates
    noisy_eve = PowerConfig(30.0, 0.0, 10.0, 0.6)
    assert beta_max_an(noisy_eve, 1.0 / 15.0, 0.01) == 1.0
    with pytest.raises(InfeasibleRateError):
        beta_max_an(POWER30, 1.0 / 15.0, 9.3)


def test_beta_max_no_an_values():
    pw = PowerConfig(30.0, 0.0, 0.0, 1.0)
    assert beta_max_no_an(pw, 1.0) == pytest.approx(0.4995, rel=1e-12)
    assert beta_max_no_an(pw, 0.0) == 1.0
    # 1 + mu = 2^Rs exactly: zero margin, beta collapses to zero
    pw1023 = PowerConfig(10.0 * math.log10(1023.0), 0.0, 0.0, 1.0)
    assert pw1023.mu == pytest.approx(1023.0, rel=1e-12)
    assert beta_max_no_an(pw1023, 10.0) == pytest.approx(0.0, abs=1e-9)
    with pytest.raises(InfeasibleRateError):
        beta_max_no_an(pw, 10.1)


def test_beta_max_monotone_in_rate():
    rates = np.linspace(0.1, 9.0, 30)
    an_values = [beta_max_an(POWER30, 1.0 / 15.0, r) for r in rates]
    assert all(b2 <= b1 + 1e-12 for b1, b2 in zip(an_values, an_values[1:]))
    no_values = [beta_max_no_an(POWER30, r) for r in rates]
    assert all(b2 <= b1 + 1e-12 for b1, b2 in zip(no_values, no_values[1:]))


def test_solve_m_min_reference_points():
    assert solve_m_min(1.0, POWER30, REGION, THETA_B, CFG,
                       Scheme.WITHOUT_AN) == 15
    assert solve_m_min(1.0, POWER30, REGION, THETA_B, CFG, Scheme.WITH_AN) == 2
    # vanishing rate: admissible correlation goes to 1, counts hit the floors
    assert solve_m_min(1e-9, POWER30, REGION, THETA_B, CFG, Scheme.WITHOUT_AN) == 1
    assert solve_m_min(1e-9, POWER30, REGION, THETA_B, CFG, Scheme.WITH_AN) == 2
    with pytest.raises(InfeasibleRateError):
        solve_m_min(9.3, POWER30, REGION, THETA_B, CFG, Scheme.WITH_AN)
    with pytest.raises(ConvergenceError):
        solve_m_min(3.0, PowerConfig(20.0, delta=0.6), REGION, THETA_B, CFG,
                    Scheme.WITH_AN, max_iter=0)


def test_solve_m_min_fixed_eta_override():
    got = solve_m_min(1.0, POWER30, REGION, THETA_B, CFG, Scheme.WITH_AN,
                      fixed_eta=1.0 / 15.0)
    beta = beta_max_an(POWER30, 1.0 / 15.0, 1.0)
    assert got == math.ceil(m_min(beta, REGION, THETA_B, CFG))
    assert got == 4


def test_solve_m_min_regression_series():
    # frozen from an independent hand computation of the fixed-point chain
    rs_grid = [0.5 * i for i in range(1, 13)]
    no_an = [solve_m_min(rs, POWER30, REGION, THETA_B, CFG, Scheme.WITHOUT_AN)
             for rs in rs_grid]
    with_an = [solve_m_min(rs, POWER30, REGION, THETA_B, CFG, Scheme.WITH_AN)
               for rs in rs_grid]
    assert no_an == [11, 15, 17, 18, 19, 20, 20, 20, 20, 20, 21, 21]
    assert with_an == [2, 2, 2, 2, 4, 6, 8, 11, 13, 15, 17, 18]


def test_solve_m_min_monotone_in_rate_and_power():
    rs_grid = [0.5 * i for i in range(1, 13)]
    for scheme in Scheme:
        for pt in (20.0, 30.0, 40.0):
            pw = PowerConfig(pt, 0.0, 0.0, 0.6)
            values = []
            for rs in rs_grid:
                try:
                    values.append(solve_m_min(rs, pw, REGION, THETA_B, CFG, scheme))
                except InfeasibleRateError:
                    values.append(None)
            feasible = [v for v in values if v is not None]
            assert all(a <= b for a, b in zip(feasible, feasible[1:]))
            # infeasibility is a tail, never a hole
            tail = values[len(feasible):]
            assert all(v is None for v in tail)
        for rs in rs_grid:
            per_power = []
            for pt in (20.0, 30.0, 40.0):
                try:
                    per_power.append(solve_m_min(rs, PowerConfig(pt, 0.0, 0.0, 0.6),
                                                 REGION, THETA_B, CFG, scheme))
                except InfeasibleRateError:
                    per_power.append(None)
            defined = [v for v in per_power if v is not None]
            assert all(a >= b for a, b in zip(defined, defined[1:]))


def test_resource_minima_confine_the_ellipse():
    # choosing M >= m_min and K >= k_min evaluated at that M keeps both
    # ellipse axes inside the region box
    for beta in (0.0, 0.2, 0.5, 0.9):
        m_floor = m_min(beta, REGION, THETA_B, CFG)
        for m_count in (math.ceil(m_floor), math.ceil(m_floor) + 1,
                        math.ceil(m_floor) + 7):
            for margin in (1.0, 1.3):
                k_floor = k_min(beta, REGION, CFG, m_count)
                k_norm2 = max(k_floor * margin, 1e-9)
                dr, dtheta = ellipse_semi_axes(CFG, m_count, k_norm2, beta, THETA_B)
                assert dr <= REGION.dr_m + 1e-9
                assert dtheta <= REGION.dtheta_rad + 1e-9


def test_taylor_matches_beta_at_radial_vertex():
    # the radial vertex of the confinement ellipse is an exact identity for
    # any vector with rho1 = 2MK and rho2 = 0
    for seed in (1, 2, 3):
        vec = generate_k(16, 10405.0, "projection", seed=seed)
        for beta in (0.1, 0.4, 0.8):
            dr, _ = ellipse_semi_axes(CFG, 16, vec.K, beta, BOB.theta_rad)
            probe = Location(BOB.r_m + dr, BOB.theta_rad)
            got = beampattern_taylor(CFG, vec, BOB, probe)
            assert got == pytest.approx(beta * 256.0, rel=1e-9)
