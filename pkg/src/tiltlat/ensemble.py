"""Realization ensembles and derived observables.

Averaging policy: densities are averaged over random-phase realizations
first, moments are taken of the averaged density.  Since the first and
second site moments are linear in P_l, this reduces to averaging the
per-realization sums Sigma l P_l and Sigma l^2 P_l.  Standard errors come
from the across-realization sample variance of Sigma l^2 P_l.
"""

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .engine import IntegratorConfig, Trajectory, evolve
from .errors import ConfigError, GridMismatch, NotNormalized, WindowTooShort
from .model import (LatticeParams, WavePacketSpec, auto_window, make_coherent,
                    make_incoherent_realization)


@dataclass(frozen=True)
class EnsembleConfig:
    """n_realizations: phase realizations to average (1 for coherent
    packets); master_seed: root of the per-realization seed tree."""

    n_realizations: int = 10
    master_seed: int = 0
    average_density: bool = False

    def __post_init__(self):
        if self.n_realizations < 1:
            raise ConfigError("n_realizations must be >= 1")


@dataclass
class ObservableSeries:
    """Ensemble-averaged moments on a common time grid.

    sigma2 is the second central moment of the averaged density;
    stderr_sigma2 estimates the seed-to-seed error of mean(Sigma l^2 P).
    densities holds (t, averaged P_l) snapshot pairs when requested.
    """

    times: np.ndarray
    x: np.ndarray
    sigma: np.ndarray
    sigma2: np.ndarray
    stderr_sigma2: np.ndarray
    l_min: int
    n_realizations: int
    densities: list = field(default_factory=list)
    params: Optional[LatticeParams] = None
    spec: Optional[WavePacketSpec] = None
    master_seed: Optional[int] = None
    dt: Optional[float] = None


@dataclass(frozen=True)
class FitResult:
    """Power-law exponent of sigma^2(t) ~ t^nu over [t_lo, t_hi]."""

    nu: float
    t_lo: float
    t_hi: float
    r2: float
    nu_stderr: float
    n_points: int


def moments(p: np.ndarray, l_min: int) -> tuple:
    """(x, sigma) of a density snapshot; requires sum(p) = 1 to 1e-6."""
    p = np.asarray(p, dtype=np.float64)
    s0 = float(p.sum())
    if abs(s0 - 1.0) > 1e-6:
        raise NotNormalized(f"density sums to {s0!r}, not 1")
    l = np.arange(l_min, l_min + p.size, dtype=np.float64)
    x = float(l @ p)
    var = float((l * l) @ p) - x * x
    return x, math.sqrt(max(var, 0.0))


def realization_seed(master_seed: int, k: int) -> np.random.SeedSequence:
    """Seed for realization k: SeedSequence(master_seed, spawn_key=(k,)).

    Counter-based mixing, so realizations are reproducible independent of
    the order in which they are evaluated.
    """
    return np.random.SeedSequence(master_seed, spawn_key=(k,))


def run_ensemble(
    spec: WavePacketSpec,
    params: LatticeParams,
    int_config: IntegratorConfig,
    ens_config: EnsembleConfig,
    t_final: float,
    window: Optional[tuple] = None,
    snapshot_times: Optional[Sequence[float]] = None,
) -> ObservableSeries:
    """Average an ensemble of evolve() runs.

    Coherent packets are deterministic, so a single trajectory is run no
    matter n_realizations.  Incoherent packets run n trajectories with
    seeds realization_seed(master_seed, k), k = 0..n-1, reduced in k
    order so results are bit-stable.
    """
    if window is None:
        window = auto_window(spec, params)
    l_min, l_max = window
    want_density = ens_config.average_density or bool(snapshot_times)
    snaps = snapshot_times if want_density else None

    if spec.kind == "coherent":
        n = 1
    else:
        n = ens_config.n_realizations

    sum_s1 = sum_s2 = sumsq_s2 = None
    dens_acc = None
    times = None
    l_min_out = l_min
    dt_used = None
    for k in range(n):
        if spec.kind == "coherent":
            state = make_coherent(spec, l_min, l_max)
        else:
            state = make_incoherent_realization(
                spec, l_min, l_max, realization_seed(ens_config.master_seed, k)
            )
        try:
            traj = evolve(state, params, int_config, t_final, snapshot_times=snaps)
        except Exception as exc:
            exc.args = (f"realization {k}: {exc}",) + exc.args[1:]
            raise
        s1 = traj.x
        s2 = traj.sigma2 + traj.x**2
        if times is None:
            times = traj.times
            dt_used = traj.dt
            sum_s1 = np.zeros_like(s1)
            sum_s2 = np.zeros_like(s2)
            sumsq_s2 = np.zeros_like(s2)
            dens_acc = [(t, np.zeros_like(p)) for t, p in traj.snapshots]
        sum_s1 += s1
        sum_s2 += s2
        sumsq_s2 += s2 * s2
        for (t_ref, acc), (_, p) in zip(dens_acc, traj.snapshots):
            acc += p

    x = sum_s1 / n
    mean_s2 = sum_s2 / n
    sigma2 = np.maximum(mean_s2 - x * x, 0.0)
    if n > 1:
        var_s2 = np.maximum(sumsq_s2 / n - mean_s2**2, 0.0) * n / (n - 1)
        stderr = np.sqrt(var_s2 / n)
    else:
        stderr = np.zeros_like(mean_s2)
    densities = [(t, acc / n) for t, acc in dens_acc]
    return ObservableSeries(
        times=times,
        x=x,
        sigma=np.sqrt(sigma2),
        sigma2=sigma2,
        stderr_sigma2=stderr,
        l_min=l_min_out,
        n_realizations=n,
        densities=densities,
        params=params,
        spec=spec,
        master_seed=ens_config.master_seed,
        dt=dt_used,
    )


def series_from_trajectory(traj: Trajectory) -> ObservableSeries:
    """Wrap a single run as a one-member series (stderr = 0)."""
    return ObservableSeries(
        times=traj.times,
        x=traj.x.copy(),
        sigma=traj.sigma.copy(),
        sigma2=traj.sigma2.copy(),
        stderr_sigma2=np.zeros_like(traj.sigma2),
        l_min=traj.l_min,
        n_realizations=1,
        densities=list(traj.snapshots),
        params=traj.params,
        dt=traj.dt,
    )


MIN_FIT_POINTS = 10
_DECADES_REQUIRED = 1.5


def fit_subdiffusion(
    series: ObservableSeries,
    params: Optional[LatticeParams] = None,
    t_lo: Optional[float] = None,
    t_hi: Optional[float] = None,
) -> FitResult:
    """Least-squares slope of log sigma^2 vs log t.

    Default window: the last decade of available time, additionally
    excluding the single-particle transient t < 10 T_B (when the series
    has a tilt).  The series must reach at least 1.5 decades past the
    transient for the asymptote to be visible at all.
    """
    if params is None:
        params = series.params
    t = np.asarray(series.times, dtype=np.float64)
    if t.size == 0:
        raise WindowTooShort("empty series")
    t_max = float(t[-1])
    transient = 0.0
    if params is not None and params.dF > 0:
        transient = 10.0 * params.T_B
    if t_hi is None:
        t_hi = t_max
    if t_lo is None:
        if transient > 0 and t_max < transient * 10.0**_DECADES_REQUIRED:
            raise WindowTooShort(
                f"series ends at t = {t_max:g}, less than {_DECADES_REQUIRED} "
                f"decades past the transient t = {transient:g}"
            )
        t_lo = max(t_hi / 10.0, transient)
    if not (t_lo < t_hi):
        raise WindowTooShort(f"bad fit window [{t_lo:g}, {t_hi:g}]")

    mask = (t >= t_lo) & (t <= t_hi) & (t > 0) & (series.sigma2 > 0)
    if int(mask.sum()) < MIN_FIT_POINTS:
        raise WindowTooShort(
            f"only {int(mask.sum())} usable points in [{t_lo:g}, {t_hi:g}]"
        )
    lx = np.log(t[mask])
    ly = np.log(series.sigma2[mask])
    n_pts = lx.size
    design = np.column_stack([lx, np.ones_like(lx)])
    coef, res, *_ = np.linalg.lstsq(design, ly, rcond=None)
    nu = float(coef[0])
    pred = design @ coef
    ss_res = float(np.sum((ly - pred) ** 2))
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    if n_pts > 2:
        s2_resid = ss_res / (n_pts - 2)
        sxx = float(np.sum((lx - lx.mean()) ** 2))
        stderr = math.sqrt(s2_resid / sxx) if sxx > 0 else math.inf
    else:
        stderr = math.inf
    return FitResult(nu=nu, t_lo=float(t_lo), t_hi=float(t_hi), r2=r2,
                     nu_stderr=stderr, n_points=n_pts)


def suppression_coefficient(series_g: ObservableSeries,
                            series_0: ObservableSeries) -> np.ndarray:
    """Pointwise C(t) = sigma_g(t) / sigma_0(t) on the common grid."""
    if series_g.times.shape != series_0.times.shape or not np.array_equal(
        series_g.times, series_0.times
    ):
        raise GridMismatch("series are not on the same time grid")
    with np.errstate(divide="ignore", invalid="ignore"):
        c = np.where(series_0.sigma > 0, series_g.sigma / series_0.sigma, 1.0)
    return c
