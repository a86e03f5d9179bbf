"""CSV/JSON serialization of runs.

Series CSV (bit-exact contract): header
    t,t_over_TJ,x,sigma,sigma2,stderr_sigma2
one row per sampling instant, floats as Python repr (shortest decimal
that round-trips).  Density snapshots go to separate files
density_t<stamp>.csv with columns l,P.  Every run directory carries a
run.json sidecar with the full configuration, seed, and code version;
re-loading the sidecar reproduces the run byte-for-byte.  Unknown keys
anywhere in a config or sidecar are errors, to catch typos in physics
parameters.
"""

import json
from pathlib import Path
from typing import Optional

import numpy as np

from .engine import IntegratorConfig
from .ensemble import EnsembleConfig, ObservableSeries
from .errors import ConfigError
from .model import LatticeParams, WavePacketSpec

SERIES_HEADER = "t,t_over_TJ,x,sigma,sigma2,stderr_sigma2"
DENSITY_HEADER = "l,P"
SIDECAR_SCHEMA = "tiltlat-run-v1"


def _fmt(x) -> str:
    return repr(float(x))


def density_filename(t: float) -> str:
    return f"density_t{_fmt(t)}.csv"


def write_series(series: ObservableSeries, path, t_j: Optional[float] = None) -> None:
    if t_j is None:
        if series.params is None:
            raise ConfigError("series has no params; pass t_j explicitly")
        t_j = series.params.T_J
    lines = [SERIES_HEADER]
    for i in range(series.times.size):
        lines.append(",".join([
            _fmt(series.times[i]),
            _fmt(series.times[i] / t_j),
            _fmt(series.x[i]),
            _fmt(series.sigma[i]),
            _fmt(series.sigma2[i]),
            _fmt(series.stderr_sigma2[i]),
        ]))
    Path(path).write_text("\n".join(lines) + "\n")


def read_series(path) -> ObservableSeries:
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise ConfigError(f"{path}: empty file")
    if lines[0] != SERIES_HEADER:
        got = lines[0].split(",")
        want = SERIES_HEADER.split(",")
        for col in want:
            if col not in got:
                raise ConfigError(f"{path}: missing column {col!r}")
        raise ConfigError(f"{path}: header {lines[0]!r} != {SERIES_HEADER!r}")
    rows = []
    for ln_no, ln in enumerate(lines[1:], start=2):
        if not ln:
            continue
        parts = ln.split(",")
        if len(parts) != 6:
            raise ConfigError(f"{path}:{ln_no}: expected 6 fields, got {len(parts)}")
        try:
            rows.append([float(v) for v in parts])
        except ValueError as exc:
            raise ConfigError(f"{path}:{ln_no}: {exc}") from None
    arr = np.asarray(rows, dtype=np.float64).reshape(-1, 6)
    return ObservableSeries(
        times=arr[:, 0], x=arr[:, 2], sigma=arr[:, 3], sigma2=arr[:, 4],
        stderr_sigma2=arr[:, 5], l_min=0, n_realizations=0,
    )


def write_density(t: float, l_min: int, p: np.ndarray, directory) -> Path:
    path = Path(directory) / density_filename(t)
    lines = [DENSITY_HEADER]
    for i, v in enumerate(np.asarray(p, dtype=np.float64)):
        lines.append(f"{l_min + i},{_fmt(v)}")
    path.write_text("\n".join(lines) + "\n")
    return path


def read_density(path):
    lines = Path(path).read_text().splitlines()
    if not lines or lines[0] != DENSITY_HEADER:
        raise ConfigError(f"{path}: expected header {DENSITY_HEADER!r}")
    ls, ps = [], []
    for ln_no, ln in enumerate(lines[1:], start=2):
        if not ln:
            continue
        try:
            a, b = ln.split(",")
            ls.append(int(a))
            ps.append(float(b))
        except ValueError as exc:
            raise ConfigError(f"{path}:{ln_no}: {exc}") from None
    return np.asarray(ls), np.asarray(ps)


# ---------------------------------------------------------------------------
# Config / sidecar JSON

_PARAM_KEYS = {"J", "dF", "dFomega", "omega", "g"}
_PACKET_KEYS = {"kind", "sigma0", "center"}
_INTEGRATOR_KEYS = {"dt", "sampling_stride", "edge_guard_threshold"}
_ENSEMBLE_KEYS = {"n_realizations", "master_seed", "average_density"}
_RUN_KEYS = {"params", "packet", "integrator", "ensemble", "t_final",
             "window", "snapshot_times"}


def _check_keys(d: dict, allowed: set, where: str) -> None:
    if not isinstance(d, dict):
        raise ConfigError(f"{where}: expected an object")
    unknown = sorted(set(d) - allowed)
    if unknown:
        raise ConfigError(f"{where}: unknown key(s) {', '.join(unknown)}")


def run_config_to_dict(params: LatticeParams, spec: WavePacketSpec,
                       int_config: IntegratorConfig, ens_config: EnsembleConfig,
                       t_final: float, window=None, snapshot_times=None) -> dict:
    cfg = {
        "params": {"J": params.J, "dF": params.dF, "dFomega": params.dFomega,
                   "omega": params.omega, "g": params.g},
        "packet": {"kind": spec.kind, "sigma0": spec.sigma0, "center": spec.center},
        "integrator": {"dt": int_config.dt,
                       "sampling_stride": int_config.sampling_stride,
                       "edge_guard_threshold": int_config.edge_guard_threshold},
        "ensemble": {"n_realizations": ens_config.n_realizations,
                     "master_seed": ens_config.master_seed,
                     "average_density": ens_config.average_density},
        "t_final": t_final,
    }
    if window is not None:
        cfg["window"] = [int(window[0]), int(window[1])]
    if snapshot_times is not None:
        cfg["snapshot_times"] = [float(t) for t in snapshot_times]
    return cfg


def run_config_from_dict(cfg: dict):
    """-> (params, spec, int_config, ens_config, t_final, window, snapshot_times)"""
    _check_keys(cfg, _RUN_KEYS, "run config")
    for key in ("params", "packet", "t_final"):
        if key not in cfg:
            raise ConfigError(f"run config: missing required key {key!r}")
    _check_keys(cfg["params"], _PARAM_KEYS, "params")
    if "J" not in cfg["params"]:
        raise ConfigError("params: missing required key 'J'")
    params = LatticeParams(**cfg["params"])
    _check_keys(cfg["packet"], _PACKET_KEYS, "packet")
    if "kind" not in cfg["packet"]:
        raise ConfigError("packet: missing required key 'kind'")
    spec = WavePacketSpec(**cfg["packet"])
    icfg = cfg.get("integrator", {})
    _check_keys(icfg, _INTEGRATOR_KEYS, "integrator")
    int_config = IntegratorConfig(**icfg)
    ecfg = cfg.get("ensemble", {})
    _check_keys(ecfg, _ENSEMBLE_KEYS, "ensemble")
    ens_config = EnsembleConfig(**ecfg)
    t_final = float(cfg["t_final"])
    window = cfg.get("window")
    if window is not None:
        if (not isinstance(window, (list, tuple)) or len(window) != 2
                or not all(isinstance(v, int) for v in window)):
            raise ConfigError("window: expected [l_min, l_max] integers")
        window = (window[0], window[1])
    snapshot_times = cfg.get("snapshot_times")
    return params, spec, int_config, ens_config, t_final, window, snapshot_times


def write_sidecar(directory, config: dict, version: str,
                  outputs: dict, preset: Optional[str] = None) -> Path:
    payload = {
        "schema": SIDECAR_SCHEMA,
        "version": version,
        "preset": preset,
        "config": config,
        "outputs": outputs,
    }
    path = Path(directory) / "run.json"
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return path


def read_sidecar(path) -> dict:
    try:
        payload = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    _check_keys(payload, {"schema", "version", "preset", "config", "outputs"},
                str(path))
    if payload.get("schema") != SIDECAR_SCHEMA:
        raise ConfigError(f"{path}: schema {payload.get('schema')!r} != {SIDECAR_SCHEMA!r}")
    run_config_from_dict(payload["config"])  # validates
    return payload
