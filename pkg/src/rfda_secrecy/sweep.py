"""Experiment orchestration: scenarios, Monte Carlo estimation, sweeps, output.

A :class:`Scenario` bundles everything one experiment needs (array, the two
receiver locations, region, powers, rate target, frequency-vector source and
evaluation mode).  Sweeps vary one axis, evaluate both transmit schemes per
point and return a :class:`SweepResult` that serializes to a CSV plus a JSON
manifest carrying the fully resolved configuration and its content hash.

Reproducibility contract: every random quantity is drawn from a counter-based
stream keyed by (master seed, trial index), so results are bit-identical for
a given seed regardless of how many workers execute the trials.
"""

from __future__ import annotations

import csv
import hashlib
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path

import numpy as np

from .arraymodel import (ArrayConfig, FrequencyVector, Location, correlation2,
                         half_wavelength_spacing, steering_vector)
from .dmsecurity import (PowerConfig, an_vector, capacity_bob, capacity_eve_an,
                         complex_gaussian, secrecy_capacity, c_an_lb, c_lb, eta)
from .errors import ConfigError, FixtureError, InfeasibleRateError, RetryRequiredError
from .freqdesign import FIXTURE_LABELS, generate_k, load_frequency_table
from .secrecyregion import Scheme, SecrecyRegion, beta_boundary, solve_m_min
from .version import VERSION


class Mode(Enum):
    "Evaluation mode: closed-form lower bound or Monte Carlo average."

    ANALYTIC_LB = "lb"
    MONTE_CARLO = "mc"


@dataclass(frozen=True)
class GeneratedK:
    "Frequency vector drawn per seed with a target squared norm."

    k_target: float
    method: str = "projection"
    seed: int = 0


@dataclass(frozen=True)
class FixtureK:
    "Frequency vector taken from a labeled fixture-table row."

    label: str = "K10405"
    path: str | None = None


@dataclass(frozen=True)
class Scenario:
    array: ArrayConfig
    bob: Location
    eve: Location
    region: SecrecyRegion
    power: PowerConfig
    rs_bits: float
    k_source: GeneratedK | FixtureK
    mode: Mode


def default_scenario(**overrides) -> Scenario:
    """Baseline scenario: 16 half-wavelength elements at 1 GHz, 1 MHz increment
    reference, receiver at (100 m, 45 deg), eavesdropper probe at
    (108 m, 40 deg), region half-widths (8 m, 5 deg), 0 dBm noise floors and a
    60/40 signal/AN power split."""
    base = Scenario(
        array=ArrayConfig.half_wavelength(16, 1e9, 1e6),
        bob=Location(100.0, math.radians(45.0)),
        eve=Location(108.0, math.radians(40.0)),
        region=SecrecyRegion(8.0, math.radians(5.0)),
        power=PowerConfig(pt_dbm=30.0, sigma_b2_dbm=0.0, sigma_e2_dbm=0.0, delta=0.6),
        rs_bits=1.0,
        k_source=FixtureK("K10405"),
        mode=Mode.ANALYTIC_LB,
    )
    return replace(base, **overrides) if overrides else base


# ---------------------------------------------------------------------------
# configuration mapping (JSON round trip)
# ---------------------------------------------------------------------------

def scenario_to_config(s: Scenario) -> dict:
    "Fully resolved, JSON-serializable configuration."
    if isinstance(s.k_source, GeneratedK):
        k_source = {"type": "generated", "k_target": s.k_source.k_target,
                    "method": s.k_source.method, "seed": s.k_source.seed}
    else:
        k_source = {"type": "fixture", "label": s.k_source.label,
                    "path": s.k_source.path}
    return {
        "array": {"M": s.array.n_elements, "f0_hz": s.array.f0_hz,
                  "delta_f_hz": s.array.delta_f_hz,
                  "spacing": {"meters": s.array.spacing_m}},
        "bob": {"r_m": s.bob.r_m, "theta_deg": math.degrees(s.bob.theta_rad)},
        "eve": {"r_m": s.eve.r_m, "theta_deg": math.degrees(s.eve.theta_rad)},
        "region": {"dr_m": s.region.dr_m,
                   "dtheta_deg": math.degrees(s.region.dtheta_rad)},
        "power": {"pt_dbm": s.power.pt_dbm, "sigma_b2_dbm": s.power.sigma_b2_dbm,
                  "sigma_e2_dbm": s.power.sigma_e2_dbm, "delta": s.power.delta},
        "rs_bits": s.rs_bits,
        "k_source": k_source,
        "mode": s.mode.value,
    }


def _check_keys(section: dict, allowed: set[str], where: str) -> None:
    unknown = set(section) - allowed
    if unknown:
        raise ConfigError(f"unknown key(s) in {where}: {', '.join(sorted(unknown))}")


def scenario_from_config(cfg: dict) -> Scenario:
    """Build a scenario from a configuration mapping.

    Missing sections fall back to the defaults; unknown keys anywhere are
    rejected.
    """
    if not isinstance(cfg, dict):
        raise ConfigError("configuration root must be a JSON object")
    _check_keys(cfg, {"array", "bob", "eve", "region", "power", "rs_bits",
                      "k_source", "mode"}, "configuration")
    base = default_scenario()

    array = base.array
    if "array" in cfg:
        sec = cfg["array"]
        _check_keys(sec, {"M", "f0_hz", "delta_f_hz", "spacing"}, "array")
        m = int(sec.get("M", array.n_elements))
        f0 = float(sec.get("f0_hz", array.f0_hz))
        df = float(sec.get("delta_f_hz", array.delta_f_hz))
        spacing = sec.get("spacing", "half_wavelength")
        if spacing == "half_wavelength":
            d = half_wavelength_spacing(f0)
        elif isinstance(spacing, dict):
            _check_keys(spacing, {"meters"}, "array.spacing")
            if "meters" not in spacing:
                raise ConfigError("array.spacing object needs a 'meters' key")
            d = float(spacing["meters"])
        elif isinstance(spacing, (int, float)):
            d = float(spacing)
        else:
            raise ConfigError(f"array.spacing must be 'half_wavelength', a number "
                              f"or {{'meters': value}}, got {spacing!r}")
        array = ArrayConfig(m, f0, df, d)

    def location(section_name: str, fallback: Location) -> Location:
        if section_name not in cfg:
            return fallback
        sec = cfg[section_name]
        _check_keys(sec, {"r_m", "theta_deg"}, section_name)
        return Location(float(sec.get("r_m", fallback.r_m)),
                        math.radians(float(sec.get("theta_deg",
                                                   math.degrees(fallback.theta_rad)))))

    region = base.region
    if "region" in cfg:
        sec = cfg["region"]
        _check_keys(sec, {"dr_m", "dtheta_deg"}, "region")
        region = SecrecyRegion(
            float(sec.get("dr_m", region.dr_m)),
            math.radians(float(sec.get("dtheta_deg", math.degrees(region.dtheta_rad)))))

    power = base.power
    if "power" in cfg:
        sec = cfg["power"]
        _check_keys(sec, {"pt_dbm", "sigma_b2_dbm", "sigma_e2_dbm", "delta"}, "power")
        power = PowerConfig(
            float(sec.get("pt_dbm", power.pt_dbm)),
            float(sec.get("sigma_b2_dbm", power.sigma_b2_dbm)),
            float(sec.get("sigma_e2_dbm", power.sigma_e2_dbm)),
            float(sec.get("delta", power.delta)))

    k_source: GeneratedK | FixtureK = base.k_source
    if "k_source" in cfg:
        sec = cfg["k_source"]
        if not isinstance(sec, dict) or "type" not in sec:
            raise ConfigError("k_source must be an object with a 'type' key")
        if sec["type"] == "generated":
            _check_keys(sec, {"type", "k_target", "method", "seed"}, "k_source")
            if "k_target" not in sec:
                raise ConfigError("generated k_source needs 'k_target'")
            k_source = GeneratedK(float(sec["k_target"]),
                                  str(sec.get("method", "projection")),
                                  int(sec.get("seed", 0)))
        elif sec["type"] == "fixture":
            _check_keys(sec, {"type", "label", "path"}, "k_source")
            k_source = FixtureK(str(sec.get("label", "K10405")), sec.get("path"))
        else:
            raise ConfigError(f"k_source.type must be 'generated' or 'fixture', "
                              f"got {sec['type']!r}")

    mode = base.mode
    if "mode" in cfg:
        try:
            mode = Mode(cfg["mode"])
        except ValueError:
            raise ConfigError(f"mode must be 'lb' or 'mc', got {cfg['mode']!r}") from None

    try:
        return Scenario(array=array, bob=location("bob", base.bob),
                        eve=location("eve", base.eve), region=region, power=power,
                        rs_bits=float(cfg.get("rs_bits", base.rs_bits)),
                        k_source=k_source, mode=mode)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def config_hash(payload: dict) -> str:
    "Content hash of a configuration payload (canonical JSON, sha256, 12 hex)."
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()[:12]


# ---------------------------------------------------------------------------
# frequency-vector resolution and randomness plumbing
# ---------------------------------------------------------------------------

def _trial_rng(seed: int, index: int) -> np.random.Generator:
    "Independent counter-based stream for one (seed, index) pair."
    return np.random.Generator(np.random.Philox(key=[seed, index]))


def _point_seed(seed: int, index: int) -> int:
    "Derived master seed for one sweep point."
    return int(np.random.SeedSequence((seed, index)).generate_state(1, np.uint64)[0])


def fixture_vector(label: str, path: str | None = None) -> FrequencyVector:
    "Load one labeled row of the fixture table."
    for row_label, vec in load_frequency_table(path):
        if row_label == label:
            return vec
    raise FixtureError(f"fixture row {label!r} not found")


def resolve_k(s: Scenario, rng: np.random.Generator | None = None) -> FrequencyVector:
    "Materialize the scenario's frequency vector (one draw if generated)."
    if isinstance(s.k_source, FixtureK):
        return fixture_vector(s.k_source.label, s.k_source.path)
    src = s.k_source
    return generate_k(s.array.n_elements, src.k_target, src.method,
                      seed=rng if rng is not None else src.seed)


def beta_for_scenario(s: Scenario, n_seeds: int = 100) -> float:
    """Boundary correlation for the scenario's frequency-vector source.

    A fixture vector gives a single deterministic value; a generated source is
    averaged over ``n_seeds`` independent draws so sweep curves are smooth.
    """
    if isinstance(s.k_source, FixtureK):
        return beta_boundary(s.array, resolve_k(s), s.bob, s.region)
    values = [beta_boundary(s.array, resolve_k(s, _trial_rng(s.k_source.seed, i)),
                            s.bob, s.region)
              for i in range(n_seeds)]
    return float(np.mean(values))


def _effective_scheme(s: Scenario, scheme: Scheme | None) -> Scheme:
    if scheme is not None:
        return scheme
    return Scheme.WITHOUT_AN if s.power.delta == 1.0 else Scheme.WITH_AN


# ---------------------------------------------------------------------------
# capacity evaluation
# ---------------------------------------------------------------------------

def lb_capacity(s: Scenario, scheme: Scheme | None = None,
                beta: float | None = None, n_seeds: int = 100) -> float:
    """Closed-form secrecy-capacity lower bound for the scenario.

    ``beta`` overrides the boundary correlation (otherwise it is computed
    from the scenario's frequency-vector source).  The scheme defaults to
    signal-only when the power split is delta = 1.
    """
    scheme = _effective_scheme(s, scheme)
    if beta is None:
        beta = beta_for_scenario(s, n_seeds)
    if scheme is Scheme.WITHOUT_AN:
        return c_lb(s.power, beta)
    return c_an_lb(s.power, beta, eta(s.array.n_elements))


def _trial_capacity(s: Scenario, scheme: Scheme, fixed_k: FrequencyVector | None,
                    seed: int, trial: int) -> float:
    rng = _trial_rng(seed, trial)
    if fixed_k is None:
        src = s.k_source
        k = generate_k(s.array.n_elements, src.k_target, src.method, seed=rng)
    else:
        k = fixed_k
    power = replace(s.power, delta=1.0) if scheme is Scheme.WITHOUT_AN else s.power
    corr2 = correlation2(s.array, k, s.bob, s.eve)
    an2 = 0.0
    if power.delta < 1.0:
        h_bob = steering_vector(s.array, k, s.bob)
        h_eve = steering_vector(s.array, k, s.eve)
        while True:
            try:
                w = an_vector(h_bob, complex_gaussian(rng, s.array.n_elements))
                break
            except RetryRequiredError:
                continue
        an2 = float(np.abs(np.vdot(h_eve, w)) ** 2)
    return secrecy_capacity(capacity_bob(power), capacity_eve_an(power, corr2, an2))


def mc_capacity(s: Scenario, trials: int, seed: int, scheme: Scheme | None = None,
                workers: int = 1) -> tuple[float, float]:
    """Monte Carlo mean secrecy capacity and its standard error.

    Each trial draws a fresh frequency vector (generated source only) and a
    fresh AN realization from its own stream keyed by (seed, trial); identical
    inputs give bit-identical output for any ``workers`` count.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    scheme = _effective_scheme(s, scheme)
    fixed_k = resolve_k(s) if isinstance(s.k_source, FixtureK) else None
    values = np.empty(trials)

    def run(t: int) -> None:
        values[t] = _trial_capacity(s, scheme, fixed_k, seed, t)

    if workers <= 1:
        for t in range(trials):
            run(t)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, range(trials)))
    mean = float(values.mean())
    if trials == 1 or values.max() == values.min():
        stderr = 0.0
    else:
        stderr = float(values.std(ddof=1) / math.sqrt(trials))
    return mean, stderr


# ---------------------------------------------------------------------------
# sweep results and serialization
# ---------------------------------------------------------------------------

@dataclass
class SweepResult:
    axis_name: str
    axis_values: list[float]
    series: dict[str, list[float | None]]
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.axis_values:
            raise ValueError("sweep axis must not be empty")
        if any(b <= a for a, b in zip(self.axis_values, self.axis_values[1:])):
            raise ValueError("sweep axis values must be strictly increasing")
        for name, values in self.series.items():
            if len(values) != len(self.axis_values):
                raise ValueError(f"series {name!r} length does not match the axis")


def _fmt(value: float | None) -> str:
    return "" if value is None else repr(float(value))


def result_csv_text(result: SweepResult) -> str:
    "Render a sweep as CSV; floats use shortest round-trip formatting."
    lines = [",".join([result.axis_name, *result.series])]
    for i, axis in enumerate(result.axis_values):
        cells = [_fmt(axis)] + [_fmt(values[i]) for values in result.series.values()]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def write_result_csv(result: SweepResult, path: str | Path) -> None:
    Path(path).write_text(result_csv_text(result))


def read_result_csv(path: str | Path) -> SweepResult:
    "Load a sweep CSV written by :func:`write_result_csv` (exact round trip)."
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if len(rows) < 2:
        raise ValueError(f"{path}: expected a header and at least one data row")
    header = rows[0]
    axis = []
    series: dict[str, list[float | None]] = {name: [] for name in header[1:]}
    for row in rows[1:]:
        axis.append(float(row[0]))
        for name, cell in zip(header[1:], row[1:]):
            series[name].append(float(cell) if cell else None)
    return SweepResult(header[0], axis, series)


def write_run(result: SweepResult, out_dir: str | Path, run_name: str) -> Path:
    """Write ``result.csv`` and ``manifest.json`` under ``out/<run-id>/``.

    The run id embeds the configuration hash, so re-running an unchanged
    configuration rewrites the same directory with byte-identical content.
    """
    run_dir = Path(out_dir) / f"{run_name}-{result.meta['config_hash']}"
    run_dir.mkdir(parents=True, exist_ok=True)
    write_result_csv(result, run_dir / "result.csv")
    manifest = json.dumps(result.meta, sort_keys=True, indent=2) + "\n"
    (run_dir / "manifest.json").write_text(manifest)
    return run_dir


def _sweep_meta(s: Scenario, kind: str, grid: list[float], schemes: list[Scheme],
                trials: int, seed: int, extra: dict | None = None) -> dict:
    sweep_section = {"kind": kind, "grid": list(grid),
                     "schemes": [sch.value for sch in schemes]}
    if extra:
        sweep_section.update(extra)
    payload = {
        "config": scenario_to_config(s),
        "sweep": sweep_section,
        "seed": seed,
        "mode": s.mode.value,
        "trials": trials if s.mode is Mode.MONTE_CARLO else 0,
    }
    payload["config_hash"] = config_hash(payload)
    payload["tool_version"] = VERSION
    return payload


def _evaluate_point(s: Scenario, scheme: Scheme, beta: float | None,
                    trials: int, point_seed: int, workers: int,
                    n_seeds: int) -> tuple[float, float | None]:
    if s.mode is Mode.ANALYTIC_LB:
        return lb_capacity(s, scheme, beta=beta, n_seeds=n_seeds), None
    return mc_capacity(s, trials, point_seed, scheme, workers)


def _capacity_sweep(s: Scenario, kind: str, axis_name: str, grid: list[float],
                    vary, schemes, trials, seed, workers, n_seeds) -> SweepResult:
    # the varied quantity (power or delta) never moves the boundary
    # correlation, so one beta serves the whole grid in analytic mode
    grid = [float(g) for g in grid]
    schemes = list(schemes)
    series: dict[str, list[float | None]] = {}
    shared_beta = None
    if s.mode is Mode.ANALYTIC_LB:
        shared_beta = beta_for_scenario(s, n_seeds)
    for scheme in schemes:
        means: list[float | None] = []
        errs: list[float | None] = []
        for i, value in enumerate(grid):
            point = vary(s, value)
            beta = shared_beta
            mean, err = _evaluate_point(point, scheme, beta, trials,
                                        _point_seed(seed, i), workers, n_seeds)
            means.append(mean)
            errs.append(err)
        series[scheme.value] = means
        if s.mode is Mode.MONTE_CARLO:
            series[f"{scheme.value}_stderr"] = errs
    result = SweepResult(axis_name, grid, series,
                         _sweep_meta(s, kind, grid, schemes, trials, seed))
    return result


def sweep_power(s: Scenario, grid_dbm, schemes=(Scheme.WITH_AN, Scheme.WITHOUT_AN),
                trials: int = 10000, seed: int = 0, workers: int = 1,
                n_seeds: int = 100) -> SweepResult:
    "Secrecy capacity versus transmit power (dBm) for each scheme."
    def vary(base: Scenario, pt: float) -> Scenario:
        return replace(base, power=replace(base.power, pt_dbm=pt))
    return _capacity_sweep(s, "power", "pt_dbm", list(grid_dbm), vary, schemes,
                           trials, seed, workers, n_seeds)


def sweep_delta(s: Scenario, grid_delta, schemes=(Scheme.WITH_AN, Scheme.WITHOUT_AN),
                trials: int = 10000, seed: int = 0, workers: int = 1,
                n_seeds: int = 100) -> SweepResult:
    "Secrecy capacity versus the signal power fraction delta."
    def vary(base: Scenario, delta: float) -> Scenario:
        return replace(base, power=replace(base.power, delta=delta))
    return _capacity_sweep(s, "delta", "delta", list(grid_delta), vary, schemes,
                           trials, seed, workers, n_seeds)


def sweep_bandwidth(s: Scenario, labels=FIXTURE_LABELS,
                    schemes=(Scheme.WITH_AN, Scheme.WITHOUT_AN),
                    trials: int = 10000, seed: int = 0, workers: int = 1,
                    n_seeds: int = 100) -> SweepResult:
    """Secrecy capacity across the fixture frequency vectors.

    The axis carries each row's nominal squared norm (a bandwidth proxy);
    rows are evaluated in increasing order.
    """
    order = sorted(labels, key=lambda lab: float(lab.lstrip("K")))
    grid = [float(lab.lstrip("K")) for lab in order]
    path = s.k_source.path if isinstance(s.k_source, FixtureK) else None
    schemes = list(schemes)
    series: dict[str, list[float | None]] = {}
    for scheme in schemes:
        means: list[float | None] = []
        errs: list[float | None] = []
        for i, label in enumerate(order):
            point = replace(s, k_source=FixtureK(label, path))
            mean, err = _evaluate_point(point, scheme, None, trials,
                                        _point_seed(seed, i), workers, n_seeds)
            means.append(mean)
            errs.append(err)
        series[scheme.value] = means
        if s.mode is Mode.MONTE_CARLO:
            series[f"{scheme.value}_stderr"] = errs
    return SweepResult("k_nominal", grid, series,
                       _sweep_meta(s, "bandwidth", grid, schemes, trials, seed))


def sweep_rate(s: Scenario, grid_rs, schemes=(Scheme.WITH_AN, Scheme.WITHOUT_AN),
               seed: int = 0, fixed_eta: float | None = None) -> SweepResult:
    """Minimum element count versus the target secrecy rate for each scheme.

    Rates beyond a scheme's feasibility limit appear as explicit gaps (empty
    CSV cells).  Raises :class:`InfeasibleRateError` only when the entire
    grid is infeasible for every requested scheme.
    """
    grid = [float(g) for g in grid_rs]
    schemes = list(schemes)
    series: dict[str, list[float | None]] = {}
    any_feasible = False
    for scheme in schemes:
        values: list[float | None] = []
        for rs in grid:
            try:
                values.append(float(solve_m_min(rs, s.power, s.region,
                                                s.bob.theta_rad, s.array, scheme,
                                                fixed_eta=fixed_eta)))
                any_feasible = True
            except InfeasibleRateError:
                values.append(None)
        series[scheme.value] = values
    if not any_feasible:
        raise InfeasibleRateError(
            "every grid point is infeasible for the requested scheme(s); "
            "raise the transmit power or lower the rate")
    return SweepResult("rs_bits", grid, series,
                       _sweep_meta(s, "rate", grid, schemes, 0, seed,
                                   extra={"fixed_eta": fixed_eta}))


# ---------------------------------------------------------------------------
# fixture validation and beampattern export
# ---------------------------------------------------------------------------

_FIXTURE_EXPECTATIONS = {
    "K10405": (10405.0, 90.0),
    "K12905": (12905.0, 100.0),
    "K15405": (15405.0, 110.0),
}


def validate_fixtures(path: str | Path | None = None) -> dict:
    """Check every fixture row: squared norm within 0.5 % of its label,
    increment span within 2 MHz of the nominal bandwidth, entry sum within
    0.1 of zero.  Returns a per-row report with an overall ``ok`` flag."""
    rows = load_frequency_table(path)
    report_rows = []
    for label, vec in rows:
        entry: dict = {"label": label}
        if label not in _FIXTURE_EXPECTATIONS:
            entry.update(ok=False, reason="unknown label")
            report_rows.append(entry)
            continue
        k2_expected, span_expected = _FIXTURE_EXPECTATIONS[label]
        k = vec.k
        entry["k_squared"] = vec.K
        entry["k_squared_expected"] = k2_expected
        entry["k_squared_ok"] = abs(vec.K - k2_expected) <= 0.005 * k2_expected
        entry["span_mhz"] = float(k.max() - k.min())
        entry["span_expected_mhz"] = span_expected
        entry["span_ok"] = abs(entry["span_mhz"] - span_expected) <= 2.0
        entry["sum"] = float(k.sum())
        entry["sum_ok"] = abs(entry["sum"]) <= 0.1
        entry["ok"] = entry["k_squared_ok"] and entry["span_ok"] and entry["sum_ok"]
        report_rows.append(entry)
    return {"rows": report_rows, "ok": all(r["ok"] for r in report_rows)}


def beampattern_grid(s: Scenario, r_values, theta_values_rad) -> list[tuple[float, float, float]]:
    """Normalized beampattern samples (r, theta_deg, power / M^2) on a grid.

    One frequency vector is drawn (or loaded) for the whole grid, so the rows
    describe a single realized pattern.
    """
    k = resolve_k(s)
    rows = []
    for r in r_values:
        for theta in theta_values_rad:
            c2 = correlation2(s.array, k, s.bob, Location(float(r), float(theta)))
            rows.append((float(r), math.degrees(float(theta)), c2))
    return rows


def beampattern_csv_text(rows) -> str:
    lines = ["r_m,theta_deg,normalized_power"]
    lines += [f"{_fmt(r)},{_fmt(t)},{_fmt(p)}" for r, t, p in rows]
    return "\n".join(lines) + "\n"
