"""Scenario presets and parameter scans.

Each preset reproduces one figure-level experiment: it runs one or more
ensembles (or closed-form scans), and writes a directory tree

    <out>/<member>/series.csv + density_t*.csv + run.json
    <out>/<member>/scan.csv (scan members)
    <out>/preset.json

run.json sidecars alone are enough to reproduce a member run; the
preset.json manifest just lists the members for downstream plotting.
Scan CSVs use the long format `<axis>,t,sigma` (one row per grid point
and evaluation time); axis is `omega` or `F_omega_over_F`.
"""

import dataclasses
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import json
import numpy as np

from . import __version__ as _VERSION
from .engine import IntegratorConfig
from .ensemble import EnsembleConfig, ObservableSeries, run_ensemble
from .errors import ConfigError, UnknownPreset
from .model import LatticeParams, WavePacketSpec, auto_window
from .oracle import driven_width
from .seriesio import (density_filename, run_config_to_dict, write_density,
                       write_series, write_sidecar)

SCAN_AXES = ("frequency", "amplitude")
_AXIS_COLUMN = {"frequency": "omega", "amplitude": "F_omega_over_F"}


@dataclass(frozen=True)
class ScanConfig:
    """One-axis parameter scan evaluated at fixed time(s).

    axis: "frequency" (grid = omega values) or "amplitude"
    (grid = F_omega/F ratios applied to params.dF).  mode "analytic"
    evaluates the g = 0 closed-form width; "numeric" runs ensembles.
    """

    axis: str
    grid: Sequence[float]
    params: LatticeParams
    spec: WavePacketSpec
    t_eval: Sequence[float]
    mode: str = "analytic"
    int_config: IntegratorConfig = field(default_factory=IntegratorConfig)
    ens_config: EnsembleConfig = field(default_factory=EnsembleConfig)
    window: Optional[tuple] = None

    def __post_init__(self):
        if self.axis not in SCAN_AXES:
            raise ConfigError(f"axis must be one of {SCAN_AXES}")
        if self.mode not in ("analytic", "numeric"):
            raise ConfigError(f"mode must be analytic or numeric")
        grid = tuple(float(v) for v in self.grid)
        if not grid:
            raise ConfigError("empty scan grid")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ConfigError("scan grid must be strictly increasing")
        object.__setattr__(self, "grid", grid)
        tev = tuple(float(t) for t in (
            self.t_eval if isinstance(self.t_eval, (list, tuple, np.ndarray))
            else [self.t_eval]))
        if not tev or any(t <= 0 for t in tev):
            raise ConfigError("t_eval values must be > 0")
        object.__setattr__(self, "t_eval", tev)
        if self.mode == "analytic" and self.params.g != 0:
            raise ConfigError("analytic scans require g = 0")


def _params_at(cfg: ScanConfig, value: float) -> LatticeParams:
    if cfg.axis == "frequency":
        return dataclasses.replace(cfg.params, omega=value)
    return dataclasses.replace(cfg.params, dFomega=value * cfg.params.dF)


def _scan(cfg: ScanConfig) -> list:
    """Rows (axis_value, t, sigma), grid-point independent by design."""
    rows = []
    for value in cfg.grid:
        p = _params_at(cfg, value)
        if cfg.mode == "analytic":
            for t in cfg.t_eval:
                rows.append((value, t, driven_width(t, cfg.spec.sigma0, p)))
            continue
        ser = run_ensemble(cfg.spec, p, cfg.int_config, cfg.ens_config,
                           max(cfg.t_eval), window=cfg.window)
        for t in cfg.t_eval:
            i = int(np.argmin(np.abs(ser.times - t)))
            rows.append((value, float(ser.times[i]), float(ser.sigma[i])))
    return rows


def frequency_scan(cfg: ScanConfig) -> list:
    if cfg.axis != "frequency":
        raise ConfigError("frequency_scan needs axis='frequency'")
    return _scan(cfg)


def amplitude_scan(cfg: ScanConfig) -> list:
    if cfg.axis != "amplitude":
        raise ConfigError("amplitude_scan needs axis='amplitude'")
    return _scan(cfg)


def write_scan(rows: list, axis: str, path) -> None:
    lines = [f"{_AXIS_COLUMN[axis]},t,sigma"]
    for value, t, sigma in rows:
        lines.append(f"{float(value)!r},{float(t)!r},{float(sigma)!r}")
    Path(path).write_text("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# Presets

def _grid(a: float, b: float, step: float) -> list:
    n = int(round((b - a) / step))
    return [round(a + i * step, 10) for i in range(n + 1)]


def _member_run(base: dict, out_dir: Path, name: str, preset: str) -> ObservableSeries:
    """Execute one run-config dict and write series/densities/sidecar."""
    from .seriesio import run_config_from_dict

    params, spec, icfg, ecfg, t_final, window, snaps = run_config_from_dict(base)
    mdir = out_dir / name
    mdir.mkdir(parents=True, exist_ok=True)
    ser = run_ensemble(spec, params, icfg, ecfg, t_final,
                       window=window, snapshot_times=snaps)
    write_series(ser, mdir / "series.csv")
    outputs = {"series": "series.csv", "densities": []}
    for t, p in ser.densities:
        write_density(t, ser.l_min, p, mdir)
        outputs["densities"].append(density_filename(t))
    write_sidecar(mdir, base, _VERSION, outputs, preset=preset)
    return ser


def _member_scan(cfg: ScanConfig, out_dir: Path, name: str, preset: str) -> list:
    mdir = out_dir / name
    mdir.mkdir(parents=True, exist_ok=True)
    rows = _scan(cfg)
    write_scan(rows, cfg.axis, mdir / "scan.csv")
    config = {
        "scan": {
            "axis": cfg.axis, "grid": list(cfg.grid), "mode": cfg.mode,
            "t_eval": list(cfg.t_eval),
            "window": list(cfg.window) if cfg.window else None,
        },
        "params": {"J": cfg.params.J, "dF": cfg.params.dF,
                   "dFomega": cfg.params.dFomega, "omega": cfg.params.omega,
                   "g": cfg.params.g},
        "packet": {"kind": cfg.spec.kind, "sigma0": cfg.spec.sigma0,
                   "center": cfg.spec.center},
        "ensemble": {"n_realizations": cfg.ens_config.n_realizations,
                     "master_seed": cfg.ens_config.master_seed},
    }
    payload = {"schema": "tiltlat-scan-v1", "version": _VERSION,
               "preset": preset, "config": config,
               "outputs": {"scan": "scan.csv"}}
    (mdir / "run.json").write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return rows


def _run_cfg(params: dict, packet: dict, t_final: float, *, n: int = 1,
             seed: int = 0, dt: Optional[float] = None, stride: int = 10,
             window: Optional[tuple] = None, snaps: Optional[list] = None,
             edge_threshold: Optional[float] = None,
             average_density: bool = False) -> dict:
    integrator = {"sampling_stride": stride}
    if dt is not None:
        integrator["dt"] = dt
    if edge_threshold is not None:
        integrator["edge_guard_threshold"] = edge_threshold
    cfg = {
        "params": params,
        "packet": packet,
        "integrator": integrator,
        "ensemble": {"n_realizations": n, "master_seed": seed,
                     "average_density": average_density},
        "t_final": t_final,
    }
    if window is not None:
        cfg["window"] = [int(window[0]), int(window[1])]
    if snaps is not None:
        cfg["snapshot_times"] = [float(t) for t in snaps]
    return cfg


# Shared parameter groups.  The slow-lattice family uses J=1 and weak
# tilt; the driven family uses J=2, dF=0.5 so that F_omega=1.21F gives an
# effective hopping of ~1.
_SLOW = {"J": 1.0, "dF": 0.04, "dFomega": 0.0, "omega": 0.0}
_DRIVEN = {"J": 2.0, "dF": 0.5, "dFomega": 0.605}
_COH = {"kind": "coherent", "sigma0": 10.0, "center": 0}
_INC = {"kind": "incoherent", "sigma0": 10.0, "center": 0}


def _preset_fig3(out, seed, t_final, dt, n):
    t_j = 2.0 * math.pi
    tf = t_final if t_final else 1000.0 * t_j
    snaps = list(np.linspace(0.0, tf, 161))
    for name, packet, nn in (("coherent", _COH, 1), ("incoherent", _INC, n or 10)):
        cfg = _run_cfg(dict(_SLOW, g=10.0), packet, tf, n=nn, seed=seed, dt=dt,
                       stride=25, snaps=snaps, average_density=True)
        yield name, cfg


def _preset_fig4(out, seed, t_final, dt, n):
    t_j = 2.0 * math.pi
    tf = t_final if t_final else 1000.0 * t_j
    snaps = [10.0 * t_j, 100.0 * t_j, tf]
    for g in (0.0, 10.0):
        cfg = _run_cfg(dict(_SLOW, g=g), _INC, tf, n=n or 10, seed=seed, dt=dt,
                       stride=25, snaps=[t for t in snaps if t <= tf],
                       average_density=True)
        yield f"g{g:g}", cfg


def _preset_fig6(out, seed, t_final, dt, n):
    tf = t_final if t_final else 12600.0
    for g in (0.0, 10.0, 20.0, 30.0, 40.0):
        cfg = _run_cfg({"J": 1.0, "dF": 0.05, "dFomega": 0.0, "omega": 0.0,
                        "g": g}, _INC, tf, n=n or 10, seed=seed,
                       dt=dt if dt else 2.0 * math.pi / 100.0, stride=100)
        yield f"g{g:g}", cfg


def _preset_fig7(out, seed, t_final, dt, n):
    tf = t_final if t_final else 2.0 * (2.0 * math.pi / 0.02)
    for name, packet, nn in (("coherent", _COH, 1), ("incoherent", _INC, n or 10)):
        cfg = _run_cfg(dict(_DRIVEN, omega=0.48, g=0.0), packet, tf,
                       n=nn, seed=seed, dt=dt, stride=10)
        yield name, cfg


def _preset_fig9(out, seed, t_final, dt, n):
    tf = t_final if t_final else 20.0 * math.pi
    for g in (0.0, 10.0, 20.0, 30.0, 40.0):
        cfg = _run_cfg({"J": 1.0, "dF": 0.0, "dFomega": 0.0, "omega": 0.0,
                        "g": g}, _INC, tf, n=n or 100, seed=seed, dt=dt,
                       stride=25, snaps=[tf], average_density=True)
        yield f"g{g:g}", cfg


def _preset_fig10c(out, seed, t_final, dt, n):
    tf = t_final if t_final else 200.0 * math.pi
    for ratio in (1.21, 1.84, 3.83):
        cfg = _run_cfg({"J": 2.0, "dF": 0.5, "dFomega": ratio * 0.5,
                        "omega": 0.52, "g": 40.0}, _INC, tf,
                       n=n or 10, seed=seed, dt=dt, stride=25)
        yield f"amp{ratio:g}", cfg


def _preset_figC(out, seed, t_final, dt, n):
    tf = t_final if t_final else 100.0 * math.pi
    for g in (0.0, 5.0, 10.0, 20.0, 30.0, 40.0):
        cfg = _run_cfg(dict(_DRIVEN, omega=0.5, g=g), _INC, tf,
                       n=n or 10, seed=seed, dt=dt, stride=25,
                       window=(-1024, 1024))
        yield f"g{g:g}", cfg


_RUN_PRESETS = {
    "fig3": _preset_fig3,
    "fig4": _preset_fig4,
    "fig6": _preset_fig6,
    "fig7": _preset_fig7,
    "fig9": _preset_fig9,
    "fig10c": _preset_fig10c,
    "figC": _preset_figC,
}


def _scan_members_fig15(seed, t_final, dt, n):
    p = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.5)
    spec = WavePacketSpec(**_INC)
    tev = [t_final] if t_final else [200.0 * math.pi]
    yield "analytic", ScanConfig("frequency", _grid(0.05, 1.0, 0.005), p, spec,
                                 tev, mode="analytic")


def _scan_members_fig16(seed, t_final, dt, n):
    spec = WavePacketSpec(**_INC)
    tev = [t_final] if t_final else [200.0 * math.pi]
    p0 = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.5)
    yield "analytic", ScanConfig("frequency", _grid(0.40, 0.60, 0.0025), p0,
                                 spec, tev, mode="analytic")
    icfg = IntegratorConfig(dt=dt, sampling_stride=50)
    for g in (10.0, 40.0):
        pg = dataclasses.replace(p0, g=g)
        yield f"g{g:g}", ScanConfig(
            "frequency", _grid(0.40, 0.60, 0.0125), pg, spec, tev,
            mode="numeric", int_config=icfg,
            ens_config=EnsembleConfig(n or 4, seed), window=(-1024, 1024))


def _scan_members_fig17(seed, t_final, dt, n):
    spec = WavePacketSpec(**_INC)
    tev = [t_final] if t_final else [50.0 * math.pi, 100.0 * math.pi,
                                     200.0 * math.pi]
    p = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.5, g=40.0)
    yield "g40", ScanConfig(
        "frequency", _grid(0.40, 0.60, 0.0125), p, spec, tev, mode="numeric",
        int_config=IntegratorConfig(dt=dt, sampling_stride=50),
        ens_config=EnsembleConfig(n or 4, seed), window=(-1024, 1024))


def _preset_fig18(out, seed, t_final, dt, n):
    # time series at exact resonance (upper panel)
    tf = t_final if t_final else 200.0 * math.pi
    members = [
        ("coherent_g0", _COH, 0.0, 1),
        ("coherent_g40", _COH, 40.0, 1),
        ("incoherent_g0", _INC, 0.0, n or 10),
    ]
    for name, packet, g, nn in members:
        yield name, _run_cfg(dict(_DRIVEN, omega=0.5, g=g), packet, tf,
                             n=nn, seed=seed, dt=dt, stride=25,
                             window=(-1024, 1024))


def _scan_members_fig18(seed, t_final, dt, n):
    spec = WavePacketSpec(**_INC)
    tev = [t_final] if t_final else [200.0 * math.pi]
    grid = _grid(0.2, 4.4, 0.3)
    p0 = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.5)
    # fast law with the drive-renormalized hopping, no simulation
    yield "analytic", ScanConfig("amplitude", grid, p0, spec, tev,
                                 mode="analytic")
    icfg = IntegratorConfig(dt=dt, sampling_stride=50)
    for g in (10.0, 40.0):
        pg = dataclasses.replace(p0, g=g)
        yield f"g{g:g}", ScanConfig(
            "amplitude", grid, pg, spec, tev, mode="numeric",
            int_config=icfg, ens_config=EnsembleConfig(n or 4, seed),
            window=(-1024, 1024))


_SCAN_PRESETS = {
    "fig15": _scan_members_fig15,
    "fig16": _scan_members_fig16,
    "fig17": _scan_members_fig17,
    "fig18": _scan_members_fig18,
}

PRESETS = ("fig3", "fig4", "fig6", "fig7", "fig9", "fig10c", "fig15",
           "fig16", "fig17", "fig18", "figC")


def run_preset(name: str, out_dir, seed: Optional[int] = None,
               t_final: Optional[float] = None, dt: Optional[float] = None,
               n_realizations: Optional[int] = None) -> Path:
    """Execute a preset into out_dir and return the manifest path.

    seed/t_final/dt/n_realizations override the preset defaults uniformly
    across members (t_final replaces scan evaluation times too).
    Identical inputs produce identical output bytes.
    """
    if name not in PRESETS:
        raise UnknownPreset(
            f"unknown preset {name!r}; available: {', '.join(PRESETS)}")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    seed = 0 if seed is None else seed
    members = []

    if name in _RUN_PRESETS:
        for member, cfg in _RUN_PRESETS[name](out, seed, t_final, dt,
                                              n_realizations):
            _member_run(cfg, out, member, name)
            members.append(member)
    if name == "fig18":
        for member, cfg in _preset_fig18(out, seed, t_final, dt, n_realizations):
            _member_run(cfg, out, member, name)
            members.append(member)
    if name in _SCAN_PRESETS:
        for member, scfg in _SCAN_PRESETS[name](seed, t_final, dt, n_realizations):
            _member_scan(scfg, out, member, name)
            members.append(member)

    if name == "figC":
        _write_suppression_files(out, members)

    manifest = {"schema": "tiltlat-preset-v1", "version": _VERSION,
                "preset": name, "members": members}
    path = out / "preset.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return path


def _write_suppression_files(out: Path, members: list) -> None:
    """figC extra: C(t) = sigma_g/sigma_0 ratio files, schema t,C."""
    from .seriesio import read_series

    base = read_series(out / "g0" / "series.csv")
    for member in members:
        if member == "g0":
            continue
        ser = read_series(out / member / "series.csv")
        lines = ["t,C"]
        for i in range(ser.times.size):
            ratio = ser.sigma[i] / base.sigma[i] if base.sigma[i] > 0 else 1.0
            lines.append(f"{float(ser.times[i])!r},{float(ratio)!r}")
        (out / f"suppression_{member}.csv").write_text("\n".join(lines) + "\n")
