"""Split-step integrator against exact linear propagation and invariants."""

import math
import re

import numpy as np
import pytest
import scipy.linalg
import scipy.special

from tiltlat.engine import IntegratorConfig, energy, evolve, step
from tiltlat.errors import ConfigError, EdgeContamination
from tiltlat.model import LatticeParams, LatticeState, WavePacketSpec, make_coherent


def delta_state(l_min, l_max, at=0):
    c = np.zeros(l_max - l_min + 1, dtype=np.complex128)
    c[at - l_min] = 1.0
    return LatticeState(c, l_min, 0.0)


def random_state(l_min, l_max, seed, envelope=4.0):
    rng = np.random.default_rng(seed)
    l = np.arange(l_min, l_max + 1)
    c = np.exp(-(l / (2.0 * envelope)) ** 2) * (
        rng.normal(size=l.size) + 1j * rng.normal(size=l.size))
    c /= np.linalg.norm(c)
    return LatticeState(c, l_min, 0.0)


def ed_propagate(state, params, t):
    """Dense eigendecomposition of the g = 0 Hamiltonian, the linear oracle."""
    n = state.n_sites
    h = np.zeros((n, n))
    for i in range(n - 1):
        h[i, i + 1] = h[i + 1, i] = -params.J / 2.0
    h += np.diag(params.dF * state.sites)
    w, v = scipy.linalg.eigh(h)
    return (v * np.exp(-1j * w * t)) @ (v.conj().T @ state.amplitudes)


# -- exact linear limits -----------------------------------------------------

def test_free_lattice_bessel_spreading():
    # dF = g = 0: the hop substep is the whole propagator and is exact,
    # P_l(t) = J_l(J t)^2 from a single occupied site
    p = LatticeParams(J=1.0)
    s = delta_state(-64, 64)
    traj = evolve(s, p, IntegratorConfig(), t_final=10.0)
    got = traj.final_state.density()
    want = scipy.special.jv(np.arange(-64, 65), 10.0) ** 2
    assert np.max(np.abs(got - want)) < 1e-10
    # sigma = J t / sqrt(2) for the delta start
    assert traj.sigma[-1] == pytest.approx(10.0 / math.sqrt(2.0), rel=1e-10)


def test_tilted_linear_matches_ed():
    p = LatticeParams(J=1.0, dF=0.25)
    s = random_state(-32, 31, seed=3)
    want = ed_propagate(s, p, 10.0)
    traj = evolve(s, p, IntegratorConfig(dt=5e-4, sampling_stride=100),
                  t_final=10.0)
    assert np.max(np.abs(traj.final_state.amplitudes - want)) < 1e-6


def test_nearly_diagonal_phase_is_exact():
    # J ~ 0: the evolution is a pure site-local phase, analytically
    # exp(-i [dF t + (dFw/w) sin(w t)] l - i g |c_l|^2 t)
    p = LatticeParams(J=1e-12, dF=0.7, dFomega=0.3, omega=1.3, g=2.0)
    s = random_state(-16, 16, seed=11, envelope=2.0)
    t = 4.0
    traj = evolve(s, p, IntegratorConfig(dt=0.04), t_final=t)
    l = s.sites
    a = p.dF * t + (p.dFomega / p.omega) * math.sin(p.omega * t)
    want = s.amplitudes * np.exp(-1j * (a * l + p.g * s.density() * t))
    assert np.max(np.abs(traj.final_state.amplitudes - want)) < 1e-10


def test_bloch_revival_and_amplitude():
    p = LatticeParams(J=1.0, dF=0.04)
    s = make_coherent(WavePacketSpec("coherent", 10.0), -512, 511)
    traj = evolve(s, p, IntegratorConfig(sampling_stride=5), t_final=p.T_B)
    fidelity = abs(np.vdot(s.amplitudes, traj.final_state.amplitudes))
    assert fidelity > 1.0 - 1e-5
    assert traj.max_norm_err < 1e-8
    # drift spans 2L = 50 sites downhill
    assert np.max(np.abs(traj.x)) == pytest.approx(2.0 * p.L, rel=1e-2)
    assert np.max(traj.x) < 1e-6
    assert traj.sigma[-1] == pytest.approx(10.0, abs=1e-3)


# -- structural properties ---------------------------------------------------

def test_linearity_at_g_zero():
    p = LatticeParams(J=1.0, dF=0.3, dFomega=0.2, omega=1.1)
    u = random_state(-32, 32, seed=1)
    v0 = random_state(-32, 32, seed=2).amplitudes
    v0 -= np.vdot(u.amplitudes, v0) * u.amplitudes
    v0 /= np.linalg.norm(v0)
    v = LatticeState(v0, -32, 0.0)
    w = LatticeState(0.6 * u.amplitudes + 0.8j * v0, -32, 0.0)
    cfg = IntegratorConfig(dt=0.02)
    fu = evolve(u, p, cfg, 3.0).final_state.amplitudes
    fv = evolve(v, p, cfg, 3.0).final_state.amplitudes
    fw = evolve(w, p, cfg, 3.0).final_state.amplitudes
    assert np.max(np.abs(fw - (0.6 * fu + 0.8j * fv))) < 1e-8


def test_translation_covariance_without_tilt():
    # dF = 0 keeps the lattice homogeneous even with interactions
    p = LatticeParams(J=1.0, g=3.0)
    base = make_coherent(WavePacketSpec("coherent", 5.0), -128, 127)
    shifted = LatticeState(np.roll(base.amplitudes, 7), -128, 0.0)
    cfg = IntegratorConfig(dt=0.02)
    fb = evolve(base, p, cfg, 6.0).final_state.amplitudes
    fs = evolve(shifted, p, cfg, 6.0).final_state.amplitudes
    assert np.max(np.abs(np.roll(fb, 7)[32:-32] - fs[32:-32])) < 1e-9


def test_second_order_convergence():
    p = LatticeParams(J=1.0, dF=0.3, dFomega=0.2, omega=1.1, g=5.0)
    s = random_state(-64, 64, seed=5)
    ref = evolve(s, p, IntegratorConfig(dt=0.04 / 16.0), 5.0).final_state.amplitudes

    def err(dt):
        f = evolve(s, p, IntegratorConfig(dt=dt), 5.0).final_state.amplitudes
        return np.max(np.abs(f - ref))

    ratio = err(0.04) / err(0.02)
    assert 3.2 < ratio < 4.8


def test_fused_sweep_matches_single_steps():
    p = LatticeParams(J=1.0, dF=0.3, dFomega=0.2, omega=1.1, g=5.0)
    s = random_state(-32, 32, seed=9)
    # t_final is not a multiple of dt, forcing a short final step
    traj = evolve(s, p, IntegratorConfig(dt=0.02, sampling_stride=7), 1.001)
    manual = s
    for k in range(50):
        manual = step(manual, p, 0.02 * k, 0.02)
    manual = step(manual, p, 1.0, 0.001)
    assert np.max(np.abs(traj.final_state.amplitudes - manual.amplitudes)) < 1e-12
    assert traj.times[-1] == pytest.approx(1.001)


def test_evolve_is_deterministic():
    p = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.48, g=10.0)
    s = random_state(-64, 64, seed=17)
    a = evolve(s, p, IntegratorConfig(), 5.0).final_state.amplitudes
    b = evolve(s, p, IntegratorConfig(), 5.0).final_state.amplitudes
    assert np.array_equal(a, b)


# -- conserved quantities ----------------------------------------------------

def test_energy_point_values():
    assert energy(delta_state(-8, 8), LatticeParams(J=1.0)) == 0.0
    assert energy(delta_state(-8, 8), LatticeParams(J=1.0, g=2.0)) == 1.0
    assert energy(delta_state(-8, 8, at=1),
                  LatticeParams(J=1.0, dF=0.5)) == pytest.approx(0.5)


def test_energy_conservation_undriven():
    p = LatticeParams(J=1.0, dF=0.3, g=5.0)
    s = random_state(-64, 64, seed=23)
    e0 = energy(s, p)

    def drift(dt):
        worst = [0.0]

        def obs(t, st):
            worst[0] = max(worst[0], abs(energy(st, p) - e0))

        evolve(s, p, IntegratorConfig(dt=dt, sampling_stride=25),
               100.0 * p.T_J, observer=obs)
        return worst[0]

    d = drift(0.05)
    assert d < 5e-4
    # second order: quartering the step cuts the drift ~ 16x (the max
    # over a run is lumpier than the final-state error, hence the slack)
    assert drift(0.0125) < d / 6.0


def test_norm_conservation_long_run():
    p = LatticeParams(J=1.0, dF=0.04, g=10.0)
    s = make_coherent(WavePacketSpec("coherent", 10.0), -512, 511)
    traj = evolve(s, p, IntegratorConfig(sampling_stride=50), 50.0 * p.T_J)
    assert traj.max_norm_err < 1e-8


# -- guards and bookkeeping --------------------------------------------------

def test_edge_guard_trips_on_undersized_window():
    p = LatticeParams(J=1.0)
    s = make_coherent(WavePacketSpec("coherent", 5.0), -48, 48)
    with pytest.raises(EdgeContamination) as exc:
        evolve(s, p, IntegratorConfig(sampling_stride=5), 100.0)
    m = re.search(r"edge mass ([0-9.e+-]+)", str(exc.value))
    assert m is not None
    # caught promptly, not after the leak has grown orders of magnitude
    assert float(m.group(1)) < 1e-8 * 50


def test_snapshots_and_observer():
    p = LatticeParams(J=1.0, dF=0.04)
    s = make_coherent(WavePacketSpec("coherent", 10.0), -512, 511)
    seen = []
    traj = evolve(s, p, IntegratorConfig(sampling_stride=10), 10.0,
                  observer=lambda t, st: seen.append((t, st)),
                  snapshot_times=[0.0, 4.9, 20.0])
    assert [t for t, _ in seen] == list(traj.times)
    # observer gets copies: mutating them cannot corrupt the run
    seen[0][1].amplitudes[:] = 0.0
    assert traj.max_norm_err < 1e-10
    # snapshots land on the first sampling instant at/after the request;
    # requests beyond t_final stay pending
    assert len(traj.snapshots) == 2
    assert traj.snapshots[0][0] == 0.0
    assert traj.snapshots[1][0] >= 4.9 - 1e-9
    assert traj.snapshots[1][1].sum() == pytest.approx(1.0, abs=1e-9)


def test_config_validation():
    with pytest.raises(ConfigError):
        IntegratorConfig(dt=-0.1)
    with pytest.raises(ConfigError):
        IntegratorConfig(sampling_stride=0)
    with pytest.raises(ConfigError):
        IntegratorConfig(edge_guard_threshold=0.0)
    with pytest.raises(ConfigError):
        IntegratorConfig(scheme="euler")
    p = LatticeParams(J=1.0, dF=0.04)
    with pytest.raises(ConfigError):
        IntegratorConfig(dt=p.T_J / 10.0).resolve_dt(p)  # above T_J/100
    pd = LatticeParams(J=1.0, dF=0.5, dFomega=0.5, omega=60.0)
    with pytest.raises(ConfigError):
        # fine against T_J/100 but too coarse for the drive period
        IntegratorConfig(dt=p.T_J / 150.0).resolve_dt(pd)
    s = delta_state(-8, 8)
    with pytest.raises(ConfigError):
        evolve(LatticeState(s.amplitudes, -8, 5.0), p, IntegratorConfig(), 1.0)
