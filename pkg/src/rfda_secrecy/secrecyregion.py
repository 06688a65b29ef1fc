"""Secrecy-region geometry and resource minima.

The secrecy region is a box of half-widths (dr, dtheta) around the intended
receiver; eavesdroppers are assumed to stay outside it.  The worst-case
signal leakage just outside is capped by the boundary correlation ``beta``
(largest squared steering correlation at the four box corners).  Requiring
the beampattern's confinement ellipse to fit inside the box yields minimum
element counts and minimum frequency-spread norms; requiring the capacity
lower bounds to reach a target rate yields the admissible ``beta``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .arraymodel import ArrayConfig, Location, correlation2
from .dmsecurity import PowerConfig, eta
from .errors import ConvergenceError, InfeasibleRateError

BEAMWIDTH_CONSTANT_RAD = math.radians(35.9)
"""Angular-width calibration constant of a uniform aperture, in radians.

35.9 degrees is the established one-sided half-power width constant of the
exact array pattern (0.443 wavelengths per aperture length); the ellipse
formulas scale it by sqrt(1 - beta) to other correlation levels.
"""


@dataclass(frozen=True)
class SecrecyRegion:
    "Half-widths of the protected box around the intended receiver."

    dr_m: float
    dtheta_rad: float

    def __post_init__(self):
        if self.dr_m <= 0 or self.dtheta_rad <= 0:
            raise ValueError("region half-widths must be strictly positive")


class Scheme(Enum):
    "Transmit scheme: with artificial noise or signal-only."

    WITH_AN = "with_an"
    WITHOUT_AN = "without_an"


def corner_locations(bob: Location, region: SecrecyRegion) -> list[Location]:
    "The four corners (r +/- dr, theta +/- dtheta); validates angle bounds."
    corners = []
    for sr in (1.0, -1.0):
        for st in (1.0, -1.0):
            corners.append(Location(bob.r_m + sr * region.dr_m,
                                    bob.theta_rad + st * region.dtheta_rad))
    return corners


def beta_boundary(cfg: ArrayConfig, k, bob: Location, region: SecrecyRegion) -> float:
    "Largest squared steering correlation over the four region corners."
    return max(correlation2(cfg, k, bob, corner)
               for corner in corner_locations(bob, region))


def ellipse_semi_axes(cfg: ArrayConfig, n_elements: int, k_norm2: float,
                      beta: float, theta_b_rad: float) -> tuple[float, float]:
    """Semi-axes (range m, angle rad) of the beta-level confinement ellipse.

    Inside the ellipse the beampattern stays above ``beta * M^2``.  For
    ``beta >= 1`` the ellipse degenerates to the aim point and both axes are
    zero.
    """
    if k_norm2 <= 0:
        raise ValueError("k_norm2 must be positive")
    sin_theta = math.sin(theta_b_rad)
    if not 0.0 < theta_b_rad < math.pi or sin_theta <= 0.0:
        raise ValueError("theta_b must lie strictly inside (0, pi)")
    rem = max(1.0 - beta, 0.0)
    dr = cfg.wave_speed * math.sqrt(n_elements * rem / k_norm2) / (2.0 * math.pi * cfg.delta_f_hz)
    dtheta = (BEAMWIDTH_CONSTANT_RAD * cfg.wave_speed * math.sqrt(rem)
              / (n_elements * cfg.spacing_m * cfg.f0_hz * sin_theta))
    return dr, dtheta


def ellipse_residual(bob: Location, probe: Location,
                     axes: tuple[float, float]) -> float:
    "Normalized ellipse coordinate; 1 on the boundary, < 1 inside."
    dr, dtheta = axes
    if dr <= 0 or dtheta <= 0:
        raise ValueError("ellipse axes must be positive")
    return ((probe.r_m - bob.r_m) ** 2 / dr ** 2
            + (probe.theta_rad - bob.theta_rad) ** 2 / dtheta ** 2)


def m_min(beta: float, region: SecrecyRegion, theta_b_rad: float,
          cfg: ArrayConfig) -> float:
    """Minimum element count keeping the angular ellipse axis inside the region.

    Returns a real number (callers ceil when they need a count), clamped
    below at 1.  Larger ``beta`` (more tolerated leakage) needs fewer
    elements.
    """
    sin_theta = math.sin(theta_b_rad)
    if not 0.0 < theta_b_rad < math.pi or sin_theta <= 0.0:
        raise ValueError("theta_b must lie strictly inside (0, pi)")
    rem = max(1.0 - beta, 0.0)
    value = (BEAMWIDTH_CONSTANT_RAD * cfg.wave_speed * math.sqrt(rem)
             / (region.dtheta_rad * cfg.spacing_m * cfg.f0_hz * sin_theta))
    return max(value, 1.0)


def k_min(beta: float, region: SecrecyRegion, cfg: ArrayConfig,
          m_min_value: float) -> float:
    """Minimum squared frequency-spread norm for the given element count.

    Keeps the radial ellipse axis inside the region: with ``m_min_value``
    elements the radial axis shrinks below ``dr`` exactly when ``K`` exceeds
    this value.
    """
    rem = max(1.0 - beta, 0.0)
    scale = cfg.wave_speed / (2.0 * math.pi * cfg.delta_f_hz * region.dr_m)
    return scale * scale * rem * m_min_value


def beta_max_an(power: PowerConfig, eta_value: float, rs_bits: float) -> float:
    """Largest boundary correlation for which the AN bound still reaches ``rs_bits``.

    Raises :class:`InfeasibleRateError` when even a perfectly silent
    eavesdropper could not support the rate (intended-channel capacity below
    the target).  The result is clamped to [0, 1].
    """
    mu, eps, delta = power.mu, power.eps, power.delta
    gain = 2.0 ** rs_bits
    headroom = 1.0 + delta * mu - gain
    if headroom < 0.0:
        raise InfeasibleRateError(
            f"rate {rs_bits} bits exceeds the intended-channel capacity "
            f"{math.log2(1.0 + delta * mu):.4f} bits")
    if headroom == 0.0:
        return 0.0
    an_floor = (1.0 - delta) * mu * eta_value
    value = (an_floor + eps) / (an_floor + delta * mu * gain / headroom)
    return min(max(value, 0.0), 1.0)


def beta_max_no_an(power: PowerConfig, rs_bits: float) -> float:
    "AN-free counterpart of :func:`beta_max_an` (all power on the signal)."
    mu, eps = power.mu, power.eps
    gain = 2.0 ** rs_bits
    headroom = 1.0 + mu - gain
    if headroom < 0.0:
        raise InfeasibleRateError(
            f"rate {rs_bits} bits exceeds the intended-channel capacity "
            f"{math.log2(1.0 + mu):.4f} bits")
    return min(max(headroom * eps / (mu * gain), 0.0), 1.0)


def solve_m_min(rs_bits: float, power: PowerConfig, region: SecrecyRegion,
                theta_b_rad: float, cfg: ArrayConfig, scheme: Scheme,
                fixed_eta: float | None = None, max_iter: int = 1000) -> int:
    """Smallest integer element count that supports the target secrecy rate.

    Without AN the admissible ``beta`` does not depend on the element count,
    so one evaluation suffices.  With AN the average leakage factor depends
    on the element count, which feeds back into the admissible ``beta``; the
    map from count to required count is monotone, so iterating from the
    2-element floor converges to the least fixed point.  ``fixed_eta``
    short-circuits that feedback with a constant leakage factor.
    """
    if scheme is Scheme.WITHOUT_AN:
        beta = beta_max_no_an(power, rs_bits)
        return max(1, math.ceil(m_min(beta, region, theta_b_rad, cfg)))

    m_current = 2
    history = [m_current]
    for _ in range(max_iter):
        eta_value = fixed_eta if fixed_eta is not None else eta(m_current)
        beta = beta_max_an(power, eta_value, rs_bits)
        m_next = max(2, math.ceil(m_min(beta, region, theta_b_rad, cfg)))
        if m_next == m_current:
            return m_current
        history.append(m_next)
        m_current = m_next
    raise ConvergenceError(
        f"element-count fixed point did not settle in {max_iter} iterations; "
        f"last iterates {history[-2:]}")
