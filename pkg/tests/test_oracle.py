"""Closed-form oracles: Wannier-Stark states, oscillation laws, chi."""

import math

import numpy as np
import pytest
import scipy.special

from tiltlat.errors import (BadTruncation, ConfigError, WindowTooNarrow,
                            ZeroTilt)
from tiltlat.model import LatticeParams
from tiltlat.oracle import (ballistic_width, bo_center, breathing_width, chi,
                            converged_n_max, default_eps_resonance,
                            default_n_max, driven_center, driven_width,
                            effective_model, wannier_stark_state,
                            ws_dipole_element)


# -- Wannier-Stark ladder ----------------------------------------------------

def tridiagonal_h(l_min, l_max, J, dF):
    n = l_max - l_min + 1
    h = np.zeros((n, n))
    for i in range(n - 1):
        h[i, i + 1] = h[i + 1, i] = -J / 2.0
    for i in range(n):
        h[i, i] = dF * (l_min + i)
    return h


def test_ws_state_is_eigenvector():
    p = LatticeParams(J=1.0, dF=0.04)  # z = 25
    a = wannier_stark_state(0, p, -512, 512)
    h = tridiagonal_h(-512, 512, p.J, p.dF)
    residual = h @ a - 0.0 * a
    assert np.max(np.abs(residual)) < 1e-8
    assert abs(np.sum(a * a) - 1.0) < 1e-10


def test_ws_state_offset_center_eigenvalue():
    p = LatticeParams(J=1.0, dF=0.2)  # z = 5
    m = 3
    a = wannier_stark_state(m, p, -64, 64)
    h = tridiagonal_h(-64, 64, p.J, p.dF)
    assert np.max(np.abs(h @ a - p.dF * m * a)) < 1e-8


def test_ws_state_delta_limit():
    p = LatticeParams(J=1.0, dF=1000.0)  # z -> 0
    a = wannier_stark_state(0, p, -16, 16)
    assert a[16] == pytest.approx(1.0, abs=1e-6)
    assert np.max(np.abs(np.delete(a, 16))) < 1e-3


def test_ws_state_guards():
    with pytest.raises(ZeroTilt):
        wannier_stark_state(0, LatticeParams(J=1.0), -64, 64)
    with pytest.raises(WindowTooNarrow):
        wannier_stark_state(0, LatticeParams(J=1.0, dF=0.04), -50, 50)
    # small z still needs the floor margin of 12 sites
    with pytest.raises(WindowTooNarrow):
        wannier_stark_state(0, LatticeParams(J=1.0, dF=2.0), -8, 8)


def test_ws_completeness():
    p = LatticeParams(J=1.0, dF=0.2)  # z = 5, margin 20
    states = {m: wannier_stark_state(m, p, -64, 64) for m in range(-40, 41)}
    idx = lambda l: l + 64
    for l in range(-8, 9, 4):
        for lp in range(-8, 9, 4):
            s = sum(states[m][idx(l)] * states[m][idx(lp)]
                    for m in range(-40, 41))
            assert abs(s - (1.0 if l == lp else 0.0)) < 1e-8


def test_dipole_elements():
    p = LatticeParams(J=4.0, dF=2.0)  # z = 2
    assert ws_dipole_element(3, 3, p) == 3.0
    assert ws_dipole_element(3, 4, p) == 1.0
    assert ws_dipole_element(4, 3, p) == 1.0
    assert ws_dipole_element(3, 7, p) == 0.0
    with pytest.raises(ZeroTilt):
        ws_dipole_element(0, 0, LatticeParams(J=1.0))


def test_dipole_against_brute_force_sum():
    # sum_l l J_{l-m}(z) J_{l-m'}(z), scipy Bessel as the oracle
    for z in (0.7, 2.0, 9.5):
        p = LatticeParams(J=z, dF=1.0)
        ls = np.arange(-120, 121)
        for m in (-2, 0, 3):
            for mp in (m - 3, m - 1, m, m + 1, m + 2):
                brute = float(np.sum(
                    ls * scipy.special.jv(ls - m, z) * scipy.special.jv(ls - mp, z)))
                assert abs(ws_dipole_element(m, mp, p) - brute) < 1e-8


# -- undriven laws -----------------------------------------------------------

def test_bo_center_values():
    p = LatticeParams(J=1.0, dF=0.04)
    assert bo_center(0.0, p) == 0.0
    assert bo_center(math.pi / p.omega_B, p) == pytest.approx(50.0)  # 2L
    assert bo_center(p.T_B, p) == pytest.approx(0.0, abs=1e-10)
    with pytest.raises(ZeroTilt):
        bo_center(1.0, LatticeParams(J=1.0))
    with pytest.raises(ConfigError):
        bo_center(1.0, LatticeParams(J=1.0, dF=0.1, dFomega=0.1, omega=1.0))


def test_breathing_width_values():
    p = LatticeParams(J=1.0, dF=0.04)
    assert breathing_width(0.0, 10.0, p) == 10.0
    peak = breathing_width(0.5 * p.T_B, 10.0, p)
    assert peak == pytest.approx(math.sqrt(100.0 + 2.0 * 625.0))  # 36.74
    # dF -> 0 at fixed t approaches the fast ballistic law
    t = 3.7
    for dF in (1e-4, 1e-5):
        pw = LatticeParams(J=1.0, dF=dF)
        lim = ballistic_width(t, 10.0, 1.0, "fast_incoherent")
        assert abs(breathing_width(t, 10.0, pw) - lim) < 1e-5


def test_ballistic_width_values():
    assert ballistic_width(0.0, 10.0, 1.0, "slow_coherent") == 10.0
    assert ballistic_width(0.0, 10.0, 1.0, "fast_incoherent") == 10.0
    v = ballistic_width(200.0 * math.pi, 10.0, 1.0, "slow_coherent")
    assert v == pytest.approx(math.sqrt(100.0 + (10.0 * math.pi) ** 2))
    # asymptotic rates
    t = 1e6
    slow = ballistic_width(t, 10.0, 1.0, "slow_coherent") / t
    fast = ballistic_width(t, 7.0, 1.0, "fast_incoherent") / t
    assert slow == pytest.approx(1.0 / 20.0, rel=1e-6)
    assert fast == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-6)
    with pytest.raises(ConfigError):
        ballistic_width(1.0, 10.0, 1.0, "warp")
    with pytest.raises(ConfigError):
        ballistic_width(-1.0, 10.0, 1.0, "slow_coherent")


# -- chi ---------------------------------------------------------------------

def test_chi_zero_time_and_undriven_reduction():
    p = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.48)
    assert chi(0.0, p).value == 0.0
    # dFomega = 0: only the n=0 harmonic survives and the width law
    # collapses onto the breathing law
    p0 = LatticeParams(J=1.0, dF=0.04, dFomega=0.0, omega=1.0)
    ref = LatticeParams(J=1.0, dF=0.04)
    for t in np.linspace(0.0, 100.0 * p0.T_J, 101):
        assert abs(driven_width(t, 10.0, p0)
                   - breathing_width(t, 10.0, ref)) < 1e-8


def test_chi_free_lattice_reduction():
    # dF = 0 on top of dFomega = 0: fast ballistic law
    p = LatticeParams(J=1.0, dFomega=0.0, omega=1.0)
    for t in np.linspace(0.0, 100.0 * p.T_J, 51):
        assert abs(driven_width(t, 10.0, p)
                   - ballistic_width(t, 10.0, 1.0, "fast_incoherent")) < 1e-8


def test_chi_resonant_linear_growth():
    p = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.5)
    j1 = scipy.special.jv(1, 1.21)
    for t in (50.0, 500.0, 5000.0):
        assert chi(t, p).modulus / t == pytest.approx(j1 * p.J / 2.0, rel=5e-2)
    # asymptotically exact
    t = 2.0e4
    assert chi(t, p).modulus / t == pytest.approx(j1 * p.J / 2.0, rel=1e-3)


def test_chi_nmax_invariance():
    p = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.48)
    for t in (3.0, 100.0, 700.0):
        a = chi(t, p).value
        b = chi(t, p, n_max=40).value
        assert abs(a - b) < 1e-10


def test_chi_truncation_guard():
    p = LatticeParams(J=1.0, dF=0.5, dFomega=15.0, omega=0.5)  # z_q = 30
    with pytest.raises(BadTruncation):
        chi(10.0, p)  # default n_max leaves J_41(30) ~ 1e-3 out
    chi(10.0, p, n_max=90)  # converged sum is accepted
    with pytest.raises(ConfigError):
        chi(10.0, p, n_max=12)  # below the convergence floor


def test_converged_n_max_clears_the_guard():
    # weak drive: the floor default already converges
    weak = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.48)
    assert converged_n_max(weak) == default_n_max(weak)
    # strong drive (z_q = 12.1): the floor default is refused, the
    # converged order is accepted
    strong = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.05)
    nm = converged_n_max(strong)
    assert nm > default_n_max(strong)
    with pytest.raises(BadTruncation):
        chi(5.0, strong)
    chi(5.0, strong, n_max=nm)
    assert abs(scipy.special.jv(nm + 1, 12.1)) <= 1e-12
    assert abs(scipy.special.jv(nm, 12.1)) > 1e-13  # not wastefully large


def test_chi_resonance_continuity():
    # crossing the removable-limit branch changes chi by < 1e-8 at
    # moderate t (the limit substitution is exact to O(eps * t^2))
    base = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.5)
    eps = default_eps_resonance(base)
    for t in (0.5, 2.0, 5.0):
        inside = LatticeParams(J=2.0, dF=0.5, dFomega=0.605,
                               omega=0.5 - 0.49 * eps)
        outside = LatticeParams(J=2.0, dF=0.5, dFomega=0.605,
                                omega=0.5 - 1.51 * eps)
        assert abs(chi(t, inside).value - chi(t, outside).value) < 1e-8


def test_driven_center_envelope():
    # fig-7-style drive: slow oscillation with amplitude ~ 2 L_eff
    p = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.48)
    em = effective_model(p)
    t_super = 2.0 * math.pi / abs(em.dF_eff)
    xs = [abs(driven_center(t, p)) for t in np.linspace(0.0, t_super, 800)]
    assert max(xs) == pytest.approx(2.0 * abs(em.L_eff), rel=0.06)


def test_driven_width_trivials():
    p = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.48)
    assert driven_width(0.0, 10.0, p) == 10.0
    assert driven_width(5.0, 10.0, p) >= 10.0


# -- effective model ---------------------------------------------------------

def test_effective_model_variants():
    p = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.48)
    em = effective_model(p)
    assert em.J_eff == pytest.approx(1.0, rel=0.005)
    assert em.dF_eff == pytest.approx(0.02)
    assert em.L_eff == pytest.approx(50.0, rel=0.005)
    rwa = effective_model(p, variant="rwa")
    assert rwa.J_eff == pytest.approx(1.21)
    # small drive: both variants agree to first order
    ps = LatticeParams(J=1.0, dF=1.0, dFomega=0.1, omega=0.9)
    assert effective_model(ps, "rwa").J_eff == pytest.approx(0.05)
    assert effective_model(ps).J_eff == pytest.approx(0.04994, abs=1e-5)


def test_effective_model_band_collapse():
    p = LatticeParams(J=2.0, dF=0.5, dFomega=0.5 * 3.8317, omega=0.48)
    assert abs(effective_model(p).J_eff) < 1e-4


def test_effective_model_guards():
    with pytest.raises(ZeroTilt):
        effective_model(LatticeParams(J=1.0))
    p = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.5)
    with pytest.raises(ConfigError):
        effective_model(p).L_eff  # exact resonance: dF_eff = 0
    with pytest.raises(ConfigError):
        effective_model(p, variant="floquet")
