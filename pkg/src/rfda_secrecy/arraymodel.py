"""Geometry and electromagnetics of a random frequency diverse array (RFDA).

Each element radiates at its own carrier ``f0 + k_m * delta_f``, which makes
the transmit beampattern depend on range as well as angle.  This module holds
the far-field phase model, steering vectors, the squared correlation between
two locations, and the exact / second-order beampatterns built from it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SPEED_OF_LIGHT = 299792458.0
"Propagation speed in m/s (vacuum)."


@dataclass(frozen=True)
class ArrayConfig:
    """Uniform linear RFDA: element count, carriers and spacing.

    ``delta_f_hz`` is the unit of the random per-element frequency
    increments; the dimensionless increments themselves live in
    :class:`FrequencyVector`.
    """

    n_elements: int
    f0_hz: float
    delta_f_hz: float
    spacing_m: float
    wave_speed: float = SPEED_OF_LIGHT

    def __post_init__(self):
        if self.n_elements < 1:
            raise ValueError(f"n_elements must be >= 1, got {self.n_elements}")
        for name in ("f0_hz", "delta_f_hz", "spacing_m", "wave_speed"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")

    @classmethod
    def half_wavelength(cls, n_elements: int, f0_hz: float, delta_f_hz: float,
                        wave_speed: float = SPEED_OF_LIGHT) -> "ArrayConfig":
        "Construct with element spacing of half the carrier wavelength."
        return cls(n_elements, f0_hz, delta_f_hz,
                   half_wavelength_spacing(f0_hz, wave_speed), wave_speed)


@dataclass(frozen=True)
class Location:
    """Polar receiver location: range in meters, angle from the array axis.

    ``theta_rad`` must lie strictly inside (0, pi); the angular beamwidth
    formulas divide by ``sin(theta)``.
    """

    r_m: float
    theta_rad: float

    def __post_init__(self):
        if self.r_m < 0:
            raise ValueError(f"range must be >= 0, got {self.r_m}")
        if not 0.0 < self.theta_rad < np.pi:
            raise ValueError(f"theta must be in (0, pi), got {self.theta_rad}")


@dataclass(frozen=True)
class FrequencyVector:
    """Dimensionless per-element frequency increments ``k``.

    The squared norm ``K = k.k`` is the conventional proxy for the bandwidth
    consumed by random frequency mapping.
    """

    k: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "k", np.asarray(self.k, dtype=float))
        if self.k.ndim != 1 or self.k.size < 1:
            raise ValueError("k must be a non-empty 1-d vector")

    @property
    def K(self) -> float:
        "Squared norm k.k."
        return float(self.k @ self.k)

    def __len__(self) -> int:
        return self.k.size

    def __array__(self, dtype=None, copy=None):
        if dtype is not None:
            return self.k.astype(dtype)
        return self.k


def _as_k(k, n_elements: int) -> np.ndarray:
    arr = np.asarray(k, dtype=float)
    if arr.shape != (n_elements,):
        raise ValueError(
            f"frequency vector has length {arr.size}, array has {n_elements} elements")
    return arr


def half_wavelength_spacing(f0_hz: float, wave_speed: float = SPEED_OF_LIGHT) -> float:
    "Element spacing equal to half the carrier wavelength, c / (2 f0)."
    if f0_hz <= 0 or wave_speed <= 0:
        raise ValueError("f0_hz and wave_speed must be positive")
    return wave_speed / (2.0 * f0_hz)


def phase_shift(cfg: ArrayConfig, k_m: float, element: int, loc: Location) -> float:
    """Far-field phase of one element toward ``loc``, in radians.

    ``element`` is 1-based.  The returned value is
    ``-2*pi*((m-1)*f0*d*cos(theta)/c + k_m*delta_f*r/c)``, the standard
    narrowband approximation that drops the cross term between the element
    index and the per-element frequency offset.
    """
    if not 1 <= element <= cfg.n_elements:
        raise ValueError(f"element index {element} out of range 1..{cfg.n_elements}")
    angle_term = (element - 1) * cfg.f0_hz * cfg.spacing_m * np.cos(loc.theta_rad)
    range_term = k_m * cfg.delta_f_hz * loc.r_m
    return float(-2.0 * np.pi * (angle_term + range_term) / cfg.wave_speed)


def _phase_profile(cfg: ArrayConfig, k: np.ndarray, loc: Location) -> np.ndarray:
    "Vector of per-element phases toward ``loc`` (vectorized phase_shift)."
    m = np.arange(cfg.n_elements)
    angle_term = m * cfg.f0_hz * cfg.spacing_m * np.cos(loc.theta_rad)
    range_term = k * cfg.delta_f_hz * loc.r_m
    return -2.0 * np.pi * (angle_term + range_term) / cfg.wave_speed


def steering_vector(cfg: ArrayConfig, k, loc: Location) -> np.ndarray:
    "Unit-norm steering vector toward ``loc``; entries have modulus 1/sqrt(M)."
    karr = _as_k(k, cfg.n_elements)
    phases = _phase_profile(cfg, karr, loc)
    return np.exp(1j * phases) / np.sqrt(cfg.n_elements)


def pq_offsets(cfg: ArrayConfig, bob: Location, eve: Location) -> tuple[float, float]:
    """Range/angle phase offsets (p, q) of ``eve`` relative to ``bob``.

    ``p`` scales the frequency increments, ``q`` the element index, so the
    per-element phase mismatch is ``z_m = p*k_m + q*(m-1)``.
    """
    p = 2.0 * np.pi * cfg.delta_f_hz * (eve.r_m - bob.r_m) / cfg.wave_speed
    q = (2.0 * np.pi * cfg.f0_hz * cfg.spacing_m
         * (np.cos(eve.theta_rad) - np.cos(bob.theta_rad)) / cfg.wave_speed)
    return float(p), float(q)


def _mismatch_phases(cfg: ArrayConfig, k: np.ndarray,
                     bob: Location, eve: Location) -> np.ndarray:
    p, q = pq_offsets(cfg, bob, eve)
    return p * k + q * np.arange(cfg.n_elements)


def correlation2(cfg: ArrayConfig, k, bob: Location, eve: Location) -> float:
    """Squared correlation |h(eve)^H h(bob)|^2, in [0, 1].

    This is the fraction of the confidential signal power that leaks to a
    receiver at ``eve`` when the transmit vector points at ``bob``.
    """
    karr = _as_k(k, cfg.n_elements)
    z = _mismatch_phases(cfg, karr, bob, eve)
    return float(np.abs(np.exp(1j * z).mean()) ** 2)


def beampattern_exact(cfg: ArrayConfig, k, bob: Location, eve: Location) -> float:
    "Transmit beampattern |sum_m e^{j z_m}|^2 at ``eve``; equals M^2 at ``bob``."
    return cfg.n_elements ** 2 * correlation2(cfg, k, bob, eve)


def beampattern_taylor(cfg: ArrayConfig, k, bob: Location, eve: Location) -> float:
    """Second-order expansion of the beampattern around the aim point.

    Equals ``sum_{m,n} [1 - (z_m - z_n)^2 / 2]``, evaluated via moments.  It
    never exceeds :func:`beampattern_exact` (cos x >= 1 - x^2/2) and can go
    negative far from the aim point, where the expansion has no validity.
    """
    karr = _as_k(k, cfg.n_elements)
    z = _mismatch_phases(cfg, karr, bob, eve)
    m = cfg.n_elements
    return float(m * m - m * np.sum(z * z) + np.sum(z) ** 2)
