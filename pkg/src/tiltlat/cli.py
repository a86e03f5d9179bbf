"""Command-line surface.

Subcommands:
    run     one ensemble from a JSON config file
    scan    frequency/amplitude scan from a JSON config file
    preset  figure-reproduction scenario by name
    oracle  evaluate a closed form on a grid

Exit codes: 0 success, 2 configuration error, 3 numerical guard tripped
(edge contamination / unstable step).
"""

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .ensemble import run_ensemble
from .errors import BadTruncation, ConfigError, NumericalGuard
from .experiments import (PRESETS, ScanConfig, run_preset, write_scan)
from .model import LatticeParams, WavePacketSpec
from .engine import IntegratorConfig
from .ensemble import EnsembleConfig
from .oracle import (ballistic_width, bessel_j, bo_center, breathing_width,
                     chi, driven_center, driven_width, effective_model)
from .seriesio import (density_filename, read_sidecar, run_config_from_dict,
                       run_config_to_dict, write_density, write_series,
                       write_sidecar)

_SCAN_KEYS = {"axis", "grid", "params", "packet", "t_eval", "mode",
              "integrator", "ensemble", "window"}


def _load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from None


def _apply_overrides(cfg: dict, args) -> dict:
    if args.seed is not None:
        cfg.setdefault("ensemble", {})["master_seed"] = args.seed
    if args.realizations is not None:
        cfg.setdefault("ensemble", {})["n_realizations"] = args.realizations
    if args.t_final is not None:
        cfg["t_final"] = args.t_final
    if args.dt is not None:
        cfg.setdefault("integrator", {})["dt"] = args.dt
    return cfg


def _cmd_run(args) -> int:
    cfg = _load_json(args.config)
    if "config" in cfg and cfg.get("schema"):  # accept a run.json sidecar too
        cfg = cfg["config"]
    cfg = _apply_overrides(cfg, args)
    params, spec, icfg, ecfg, t_final, window, snaps = run_config_from_dict(cfg)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    ser = run_ensemble(spec, params, icfg, ecfg, t_final,
                       window=window, snapshot_times=snaps)
    write_series(ser, out / "series.csv")
    outputs = {"series": "series.csv", "densities": []}
    for t, p in ser.densities:
        write_density(t, ser.l_min, p, out)
        outputs["densities"].append(density_filename(t))
    write_sidecar(out, cfg, __version__, outputs)
    print(f"wrote {out / 'series.csv'} ({ser.times.size} samples, "
          f"{ser.n_realizations} realization(s))")
    return 0


def _cmd_scan(args) -> int:
    raw = _load_json(args.config)
    if not isinstance(raw, dict):
        raise ConfigError("scan config: expected a JSON object")
    unknown = sorted(set(raw) - _SCAN_KEYS)
    if unknown:
        raise ConfigError(f"scan config: unknown key(s) {', '.join(unknown)}")
    for key in ("axis", "grid", "params", "packet", "t_eval"):
        if key not in raw:
            raise ConfigError(f"scan config: missing required key {key!r}")
    params = LatticeParams(**raw["params"])
    spec = WavePacketSpec(**raw["packet"])
    icfg = IntegratorConfig(**raw.get("integrator", {}))
    ecfg = EnsembleConfig(**raw.get("ensemble", {}))
    if args.dt is not None:
        icfg = IntegratorConfig(dt=args.dt, sampling_stride=icfg.sampling_stride,
                                edge_guard_threshold=icfg.edge_guard_threshold)
    if args.seed is not None or args.realizations is not None:
        ecfg = EnsembleConfig(
            n_realizations=args.realizations or ecfg.n_realizations,
            master_seed=args.seed if args.seed is not None else ecfg.master_seed,
            average_density=ecfg.average_density)
    t_eval = [args.t_final] if args.t_final is not None else raw["t_eval"]
    window = tuple(raw["window"]) if raw.get("window") else None
    cfg = ScanConfig(raw["axis"], raw["grid"], params, spec, t_eval,
                     mode=raw.get("mode", "analytic"), int_config=icfg,
                     ens_config=ecfg, window=window)
    from .experiments import _scan
    rows = _scan(cfg)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_scan(rows, cfg.axis, out / "scan.csv")
    print(f"wrote {out / 'scan.csv'} ({len(rows)} rows)")
    return 0


def _cmd_preset(args) -> int:
    path = run_preset(args.name, args.out, seed=args.seed,
                      t_final=args.t_final, dt=args.dt,
                      n_realizations=args.realizations)
    print(f"wrote {path}")
    return 0


_ORACLE_FORMS = ("bo-center", "breathing-width", "ballistic-width",
                 "driven-center", "driven-width", "chi", "bessel-j",
                 "effective-model")


def _oracle_params(args) -> LatticeParams:
    return LatticeParams(J=args.J, dF=args.dF, dFomega=args.dFomega,
                         omega=args.omega, g=args.g)


def _cmd_oracle(args) -> int:
    lines = []
    if args.form == "effective-model":
        em = effective_model(_oracle_params(args), variant=args.variant)
        payload = {"J_eff": em.J_eff, "dF_eff": em.dF_eff,
                   "variant": em.variant,
                   "L_eff": em.L_eff if em.dF_eff != 0 else None}
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif args.form == "bessel-j":
        grid = np.linspace(args.z_from, args.z_to, args.points)
        lines = ["z,value"] + [f"{float(z)!r},{bessel_j(args.order, float(z))!r}"
                               for z in grid]
        text = "\n".join(lines) + "\n"
    else:
        p = _oracle_params(args)
        grid = np.linspace(args.t_from, args.t_to, args.points)
        if args.form == "chi":
            lines = ["t,abs_chi,phase"]
            for t in grid:
                c = chi(float(t), p)
                lines.append(f"{float(t)!r},{c.modulus!r},{c.phase!r}")
        else:
            fn = {
                "bo-center": lambda t: bo_center(t, p),
                "breathing-width": lambda t: breathing_width(t, args.sigma0, p),
                "ballistic-width": lambda t: ballistic_width(
                    t, args.sigma0, args.J, args.regime),
                "driven-center": lambda t: driven_center(t, p),
                "driven-width": lambda t: driven_width(t, args.sigma0, p),
            }[args.form]
            lines = ["t,value"] + [f"{float(t)!r},{fn(float(t))!r}" for t in grid]
        text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tiltlat",
        description="Wave-packet dynamics in driven tilted optical lattices")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--realizations", type=int, default=None)
        sp.add_argument("--t-final", dest="t_final", type=float, default=None)
        sp.add_argument("--dt", type=float, default=None)

    sp = sub.add_parser("run", help="run one ensemble from a JSON config")
    sp.add_argument("--config", required=True)
    sp.add_argument("--out", required=True)
    common(sp)
    sp.set_defaults(fn=_cmd_run)

    sp = sub.add_parser("scan", help="parameter scan from a JSON config")
    sp.add_argument("--config", required=True)
    sp.add_argument("--out", required=True)
    common(sp)
    sp.set_defaults(fn=_cmd_scan)

    sp = sub.add_parser("preset", help="run a figure-reproduction preset")
    sp.add_argument("name", choices=PRESETS)
    sp.add_argument("--out", required=True)
    common(sp)
    sp.set_defaults(fn=_cmd_preset)

    sp = sub.add_parser("oracle", help="evaluate a closed form on a grid")
    sp.add_argument("form", choices=_ORACLE_FORMS)
    sp.add_argument("--J", type=float, default=1.0)
    sp.add_argument("--dF", type=float, default=0.0)
    sp.add_argument("--dFomega", type=float, default=0.0)
    sp.add_argument("--omega", type=float, default=0.0)
    sp.add_argument("--g", type=float, default=0.0)
    sp.add_argument("--sigma0", type=float, default=10.0)
    sp.add_argument("--regime", choices=("slow_coherent", "fast_incoherent"),
                    default="slow_coherent")
    sp.add_argument("--variant", choices=("rwa", "bessel"), default="bessel")
    sp.add_argument("--order", type=int, default=1, help="Bessel order n")
    sp.add_argument("--t-from", dest="t_from", type=float, default=0.0)
    sp.add_argument("--t-to", dest="t_to", type=float, default=2.0 * math.pi)
    sp.add_argument("--z-from", dest="z_from", type=float, default=0.0)
    sp.add_argument("--z-to", dest="z_to", type=float, default=10.0)
    sp.add_argument("--points", type=int, default=101)
    sp.add_argument("--out", default=None)
    sp.set_defaults(fn=_cmd_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ConfigError, BadTruncation) as exc:
        # a refused truncation means the requested n_max was too small,
        # which is a configuration problem, not an instability
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalGuard as exc:
        print(f"numerical guard: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
