"""Command-line interface.

Subcommands mirror the library surface: closed-form resource minima (mmin,
kmin, region), frequency-vector synthesis (gen-k), beampattern export,
capacity evaluation and the four sweep families, plus fixture validation.

Exit codes: 0 success, 2 invalid arguments or configuration, 3 infeasible
rate, 4 solver non-convergence, 5 fixture or I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .arraymodel import ArrayConfig, half_wavelength_spacing
from .errors import (ConfigError, ConvergenceError, FixtureError,
                     InfeasibleRateError)
from .freqdesign import generate_k, rho1, rho2
from .secrecyregion import (Scheme, SecrecyRegion, ellipse_semi_axes, k_min,
                            m_min)
from .svgchart import line_chart
from .sweep import (Mode, Scenario, beampattern_csv_text, beampattern_grid,
                    config_hash, lb_capacity, mc_capacity, resolve_k,
                    scenario_from_config, scenario_to_config, sweep_bandwidth,
                    sweep_delta, sweep_power, sweep_rate, validate_fixtures,
                    write_run)
from .version import VERSION

_SCHEME_CHOICES = {"an": (Scheme.WITH_AN,),
                   "no-an": (Scheme.WITHOUT_AN,),
                   "both": (Scheme.WITH_AN, Scheme.WITHOUT_AN)}


def _grid(lo: float, hi: float, step: float) -> list[float]:
    if step <= 0:
        raise ValueError(f"grid step must be positive, got {step}")
    if hi < lo:
        raise ValueError(f"grid upper bound {hi} below lower bound {lo}")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [round(lo + i * step, 10) for i in range(count)]


def _add_scenario_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON configuration file")
    parser.add_argument("--m", type=int, help="number of array elements")
    parser.add_argument("--f0-hz", type=float, help="carrier frequency in Hz")
    parser.add_argument("--delta-f-hz", type=float,
                        help="frequency-increment reference in Hz")
    parser.add_argument("--spacing-m", type=float,
                        help="element spacing in meters (default: half wavelength)")
    parser.add_argument("--bob-r-m", type=float, help="intended receiver range")
    parser.add_argument("--bob-theta-deg", type=float, help="intended receiver angle")
    parser.add_argument("--eve-r-m", type=float, help="eavesdropper probe range")
    parser.add_argument("--eve-theta-deg", type=float, help="eavesdropper probe angle")
    parser.add_argument("--dr-m", type=float, help="region half-width in range")
    parser.add_argument("--dtheta-deg", type=float, help="region half-width in angle")
    parser.add_argument("--pt-dbm", type=float, help="transmit power in dBm")
    parser.add_argument("--sigma-b2-dbm", type=float, help="intended noise floor")
    parser.add_argument("--sigma-e2-dbm", type=float, help="eavesdropper noise floor")
    parser.add_argument("--delta", type=float, help="signal power fraction")
    parser.add_argument("--rs-bits", type=float, help="target secrecy rate")
    parser.add_argument("--k-target", type=float,
                        help="generate k with this squared norm")
    parser.add_argument("--k-method", choices=("projection", "eigen"),
                        help="k generation method")
    parser.add_argument("--k-seed", type=int, help="k generation seed")
    parser.add_argument("--fixture-label", help="use this fixture-table row as k")
    parser.add_argument("--fixture-path", help="fixture table file")
    parser.add_argument("--mode", choices=("lb", "mc"), help="evaluation mode")


def _scenario_from_args(args: argparse.Namespace) -> Scenario:
    cfg: dict = {}
    if args.config:
        try:
            cfg = json.loads(Path(args.config).read_text())
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{args.config}: {exc}") from exc

    def section(name: str) -> dict:
        return cfg.setdefault(name, {})

    if args.m is not None:
        section("array")["M"] = args.m
    if args.f0_hz is not None:
        section("array")["f0_hz"] = args.f0_hz
    if args.delta_f_hz is not None:
        section("array")["delta_f_hz"] = args.delta_f_hz
    if args.spacing_m is not None:
        section("array")["spacing"] = {"meters": args.spacing_m}
    if args.bob_r_m is not None:
        section("bob")["r_m"] = args.bob_r_m
    if args.bob_theta_deg is not None:
        section("bob")["theta_deg"] = args.bob_theta_deg
    if args.eve_r_m is not None:
        section("eve")["r_m"] = args.eve_r_m
    if args.eve_theta_deg is not None:
        section("eve")["theta_deg"] = args.eve_theta_deg
    if args.dr_m is not None:
        section("region")["dr_m"] = args.dr_m
    if args.dtheta_deg is not None:
        section("region")["dtheta_deg"] = args.dtheta_deg
    if args.pt_dbm is not None:
        section("power")["pt_dbm"] = args.pt_dbm
    if args.sigma_b2_dbm is not None:
        section("power")["sigma_b2_dbm"] = args.sigma_b2_dbm
    if args.sigma_e2_dbm is not None:
        section("power")["sigma_e2_dbm"] = args.sigma_e2_dbm
    if args.delta is not None:
        section("power")["delta"] = args.delta
    if args.rs_bits is not None:
        cfg["rs_bits"] = args.rs_bits
    if args.mode is not None:
        cfg["mode"] = args.mode

    if args.k_target is not None and args.fixture_label is not None:
        raise ConfigError("--k-target and --fixture-label are mutually exclusive")
    if args.k_target is not None:
        cfg["k_source"] = {"type": "generated", "k_target": args.k_target,
                           "method": args.k_method or "projection",
                           "seed": args.k_seed if args.k_seed is not None else 0}
    elif args.fixture_label is not None or args.fixture_path is not None:
        cfg["k_source"] = {"type": "fixture",
                           "label": args.fixture_label or "K10405",
                           "path": args.fixture_path}
    return scenario_from_config(cfg)


def _geometry_from_args(args: argparse.Namespace) -> ArrayConfig:
    "Minimal array geometry for the closed-form subcommands."
    f0 = args.f0_hz if args.f0_hz is not None else 1e9
    df = args.delta_f_hz if args.delta_f_hz is not None else 1e6
    spacing = args.spacing_m if args.spacing_m is not None else half_wavelength_spacing(f0)
    return ArrayConfig(max(getattr(args, "m", None) or 1, 1), f0, df, spacing)


def _cmd_mmin(args: argparse.Namespace) -> int:
    cfg = _geometry_from_args(args)
    region = SecrecyRegion(args.dr_m or 1.0, math.radians(args.dtheta_deg))
    value = m_min(args.beta, region, math.radians(args.theta_b_deg), cfg)
    print(f"{value:.2f}")
    return 0


def _cmd_kmin(args: argparse.Namespace) -> int:
    cfg = _geometry_from_args(args)
    region = SecrecyRegion(args.dr_m, math.radians(args.dtheta_deg or 1.0))
    if args.m_min is not None:
        m_value = args.m_min
    else:
        if args.dtheta_deg is None or args.theta_b_deg is None:
            raise ConfigError("kmin needs either --m-min or both "
                              "--dtheta-deg and --theta-b-deg")
        m_value = m_min(args.beta, region, math.radians(args.theta_b_deg), cfg)
    print(f"{k_min(args.beta, region, cfg, m_value):.2f}")
    return 0


def _cmd_region(args: argparse.Namespace) -> int:
    s = _scenario_from_args(args)
    k_norm2 = args.k_norm2
    if k_norm2 is None:
        k_norm2 = resolve_k(s).K
    axes = ellipse_semi_axes(s.array, s.array.n_elements, k_norm2, args.beta,
                             s.bob.theta_rad)
    m_value = m_min(args.beta, s.region, s.bob.theta_rad, s.array)
    k_value = k_min(args.beta, s.region, s.array, m_value)
    fits = axes[0] <= s.region.dr_m and axes[1] <= s.region.dtheta_rad
    print(f"ellipse_dr_m={axes[0]:.6f}")
    print(f"ellipse_dtheta_deg={math.degrees(axes[1]):.6f}")
    print(f"m_min={m_value:.2f}")
    print(f"k_min={k_value:.2f}")
    print(f"fits_region={'yes' if fits else 'no'}")
    return 0


def _cmd_gen_k(args: argparse.Namespace) -> int:
    vec = generate_k(args.m, args.k_target, args.method, args.seed)
    print("k=" + ",".join(repr(float(v)) for v in vec.k))
    print(f"K={vec.K!r}")
    print(f"sum={float(vec.k.sum())!r}")
    print(f"rho1={rho1(vec)!r}")
    print(f"rho2={rho2(vec)!r}")
    return 0


def _cmd_beampattern(args: argparse.Namespace) -> int:
    s = _scenario_from_args(args)
    r_values = _grid(args.r_min if args.r_min is not None else s.bob.r_m - 3 * s.region.dr_m,
                     args.r_max if args.r_max is not None else s.bob.r_m + 3 * s.region.dr_m,
                     args.r_step)
    theta_lo = args.theta_min_deg if args.theta_min_deg is not None else \
        math.degrees(s.bob.theta_rad - 3 * s.region.dtheta_rad)
    theta_hi = args.theta_max_deg if args.theta_max_deg is not None else \
        math.degrees(s.bob.theta_rad + 3 * s.region.dtheta_rad)
    theta_values = [math.radians(t) for t in _grid(theta_lo, theta_hi, args.theta_step_deg)]
    rows = beampattern_grid(s, r_values, theta_values)
    payload = {"config": scenario_to_config(s),
               "grid": {"r": r_values, "theta_deg": _grid(theta_lo, theta_hi,
                                                          args.theta_step_deg)}}
    run_dir = Path(args.out) / f"beampattern-{config_hash(payload)}"
    run_dir.mkdir(parents=True, exist_ok=True)
    (run_dir / "result.csv").write_text(beampattern_csv_text(rows))
    payload["tool_version"] = VERSION
    (run_dir / "manifest.json").write_text(json.dumps(payload, sort_keys=True,
                                                      indent=2) + "\n")
    print(run_dir)
    return 0


def _cmd_capacity(args: argparse.Namespace) -> int:
    s = _scenario_from_args(args)
    schemes = _SCHEME_CHOICES[args.scheme]
    for scheme in schemes:
        if s.mode is Mode.MONTE_CARLO:
            mean, err = mc_capacity(s, args.trials, args.seed, scheme,
                                    workers=args.workers)
            print(f"{scheme.value}={mean:.4f} stderr={err:.4f}")
        else:
            value = lb_capacity(s, scheme, beta=args.beta, n_seeds=args.beta_seeds)
            print(f"{scheme.value}={value:.4f}")
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    s = _scenario_from_args(args)
    schemes = _SCHEME_CHOICES[args.scheme]
    common = dict(schemes=schemes, seed=args.seed)
    if args.kind == "power":
        result = sweep_power(s, _grid(args.pt_min, args.pt_max, args.pt_step),
                             trials=args.trials, workers=args.workers,
                             n_seeds=args.beta_seeds, **common)
    elif args.kind == "delta":
        result = sweep_delta(s, _grid(args.delta_min, args.delta_max, args.delta_step),
                             trials=args.trials, workers=args.workers,
                             n_seeds=args.beta_seeds, **common)
    elif args.kind == "bandwidth":
        result = sweep_bandwidth(s, trials=args.trials, workers=args.workers,
                                 n_seeds=args.beta_seeds, **common)
    else:
        if args.rs is not None:
            grid = [args.rs]
        else:
            grid = _grid(args.rs_min, args.rs_max, args.rs_step)
        result = sweep_rate(s, grid, fixed_eta=args.fixed_eta, **common)
    run_dir = write_run(result, args.out, f"sweep-{args.kind}")
    if args.svg:
        (run_dir / "plot.svg").write_text(line_chart(result, title=f"{args.kind} sweep"))
    print(run_dir)
    return 0


def _cmd_validate_fixtures(args: argparse.Namespace) -> int:
    report = validate_fixtures(args.fixtures)
    for row in report["rows"]:
        if "reason" in row:
            print(f"{row['label']}: FAIL ({row['reason']})")
            continue
        print(f"{row['label']}: k_squared={row['k_squared']:.2f} "
              f"({'ok' if row['k_squared_ok'] else 'FAIL'}) "
              f"span={row['span_mhz']:.1f} MHz "
              f"({'ok' if row['span_ok'] else 'FAIL'}) "
              f"sum={row['sum']:.2f} ({'ok' if row['sum_ok'] else 'FAIL'})")
    if report["ok"]:
        print("all fixture checks passed")
        return 0
    print("fixture checks FAILED", file=sys.stderr)
    return 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rfda-secrecy",
        description="Secrecy-region analysis for random frequency diverse array "
                    "directional modulation")
    parser.add_argument("--version", action="version", version=VERSION)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mmin", help="minimum element count for a region")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--dtheta-deg", type=float, required=True)
    p.add_argument("--theta-b-deg", type=float, required=True)
    p.add_argument("--dr-m", type=float)
    p.add_argument("--f0-hz", type=float)
    p.add_argument("--delta-f-hz", type=float)
    p.add_argument("--spacing-m", type=float)
    p.set_defaults(handler=_cmd_mmin, m=None)

    p = sub.add_parser("kmin", help="minimum squared frequency-spread norm")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--dr-m", type=float, required=True)
    p.add_argument("--m-min", type=float)
    p.add_argument("--dtheta-deg", type=float)
    p.add_argument("--theta-b-deg", type=float)
    p.add_argument("--f0-hz", type=float)
    p.add_argument("--delta-f-hz", type=float)
    p.add_argument("--spacing-m", type=float)
    p.set_defaults(handler=_cmd_kmin, m=None)

    p = sub.add_parser("region", help="confinement ellipse and resource minima")
    _add_scenario_flags(p)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--k-norm2", type=float,
                   help="squared norm of k (default: from the scenario's k source)")
    p.set_defaults(handler=_cmd_region)

    p = sub.add_parser("gen-k", help="draw a frequency-increment vector")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k-target", type=float, required=True)
    p.add_argument("--method", choices=("projection", "eigen"), default="projection")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_gen_k)

    p = sub.add_parser("beampattern", help="export a beampattern grid as CSV")
    _add_scenario_flags(p)
    p.add_argument("--r-min", type=float)
    p.add_argument("--r-max", type=float)
    p.add_argument("--r-step", type=float, default=0.5)
    p.add_argument("--theta-min-deg", type=float)
    p.add_argument("--theta-max-deg", type=float)
    p.add_argument("--theta-step-deg", type=float, default=0.25)
    p.add_argument("--out", default="out")
    p.set_defaults(handler=_cmd_beampattern)

    p = sub.add_parser("capacity", help="secrecy capacity for one scenario")
    _add_scenario_flags(p)
    p.add_argument("--scheme", choices=sorted(_SCHEME_CHOICES), default="both")
    p.add_argument("--beta", type=float, help="override the boundary correlation")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--beta-seeds", type=int, default=100)
    p.set_defaults(handler=_cmd_capacity)

    p = sub.add_parser("sweep", help="run a parameter sweep")
    p.add_argument("kind", choices=("power", "delta", "bandwidth", "rate"))
    _add_scenario_flags(p)
    p.add_argument("--scheme", choices=sorted(_SCHEME_CHOICES), default="both")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--beta-seeds", type=int, default=100)
    p.add_argument("--out", default="out")
    p.add_argument("--svg", action="store_true")
    p.add_argument("--pt-min", type=float, default=0.0)
    p.add_argument("--pt-max", type=float, default=30.0)
    p.add_argument("--pt-step", type=float, default=1.0)
    p.add_argument("--delta-min", type=float, default=0.05)
    p.add_argument("--delta-max", type=float, default=0.95)
    p.add_argument("--delta-step", type=float, default=0.05)
    p.add_argument("--rs", type=float, help="single-rate grid")
    p.add_argument("--rs-min", type=float, default=0.5)
    p.add_argument("--rs-max", type=float, default=6.0)
    p.add_argument("--rs-step", type=float, default=0.5)
    p.add_argument("--fixed-eta", type=float,
                   help="override the element-count feedback in the rate solver")
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("validate-fixtures", help="check the frequency table")
    p.add_argument("--fixtures", help="fixture CSV path (default: packaged table)")
    p.set_defaults(handler=_cmd_validate_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.handler(args)
    except InfeasibleRateError as exc:
        print(f"error: infeasible rate: {exc}", file=sys.stderr)
        return 3
    except ConvergenceError as exc:
        print(f"error: solver did not converge: {exc}", file=sys.stderr)
        return 4
    except FixtureError as exc:
        print(f"error: fixture: {exc}", file=sys.stderr)
        return 5
    except OSError as exc:
        print(f"error: i/o: {exc}", file=sys.stderr)
        return 5
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
