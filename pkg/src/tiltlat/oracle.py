"""Closed-form g = 0 results and the effective-Hamiltonian mapping.

Everything here is analytic: Wannier-Stark states and their dipole matrix
elements, Bloch-oscillation center and breathing-width laws, ballistic
spreading laws, the driven-lattice response function chi(t), and the
effective (J_eff, dF_eff) description of a near-resonantly driven tilt.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .bessel import bessel_j, bessel_j_all
from .errors import BadTruncation, ConfigError, WindowTooNarrow, ZeroTilt
from .model import LatticeParams

BESSEL_TAIL_TOL = 1e-12


# ---------------------------------------------------------------------------
# Wannier-Stark ladder

def wannier_stark_state(m: int, params: LatticeParams, l_min: int, l_max: int) -> np.ndarray:
    """Amplitudes a_l = J_{l-m}(J/dF) of the ladder state centered at m.

    The window must cover the Bessel support; we require margin
    max(ceil(4z), 12) on both sides of m so the missing tail keeps
    sum a_l^2 = 1 within 1e-10 even at small z.
    """
    if params.dF <= 0:
        raise ZeroTilt("Wannier-Stark states need dF > 0")
    z = params.z
    margin = max(math.ceil(4.0 * z), 12)
    if l_min > m - margin or l_max < m + margin:
        raise WindowTooNarrow(
            f"window [{l_min}, {l_max}] lacks margin {margin} around m = {m}"
        )
    n_hi = max(abs(l_min - m), abs(l_max - m))
    tab = bessel_j_all(z, n_hi)
    idx = np.arange(l_min, l_max + 1) - m
    a = tab[np.abs(idx)]
    a[(idx < 0) & (np.abs(idx) % 2 == 1)] *= -1.0
    return a


def ws_dipole_element(m: int, m_prime: int, params: LatticeParams) -> float:
    """Position matrix element between ladder states: m on the diagonal,
    z/2 on the first off-diagonals, zero beyond."""
    if params.dF <= 0:
        raise ZeroTilt("dipole elements need dF > 0")
    if m_prime == m:
        return float(m)
    if abs(m_prime - m) == 1:
        return 0.5 * params.z
    return 0.0


# ---------------------------------------------------------------------------
# Undriven tilt: Bloch oscillations

def bo_center(t: float, params: LatticeParams) -> float:
    """Center trajectory L(1 - cos(omega_B t)) of a wide coherent packet."""
    if params.dF <= 0:
        raise ZeroTilt("Bloch oscillations need dF > 0")
    if params.dFomega != 0:
        raise ConfigError("bo_center applies to the undriven lattice only")
    return params.L * (1.0 - math.cos(params.omega_B * t))


def breathing_width(t: float, sigma0: float, params: LatticeParams) -> float:
    """Width sqrt(sigma0^2 + 2 L^2 sin^2(omega_B t / 2)) of a wide
    incoherent packet; period T_B, maximum sqrt(sigma0^2 + 2 L^2)."""
    if params.dF <= 0:
        raise ZeroTilt("breathing law needs dF > 0")
    if params.dFomega != 0:
        raise ConfigError("breathing_width applies to the undriven lattice only")
    s = math.sin(0.5 * params.omega_B * t)
    return math.sqrt(sigma0**2 + 2.0 * params.L**2 * s * s)


def ballistic_width(t: float, sigma0: float, J: float, regime: str, hbar: float = 1.0) -> float:
    """Free (F = 0, g = 0) spreading laws.

    regime "slow_coherent":   sqrt(sigma0^2 + (J t / 2 hbar sigma0)^2),
                              asymptotic rate J / (2 hbar sigma0);
    regime "fast_incoherent": sqrt(sigma0^2 + 2 (J t / 2 hbar)^2),
                              asymptotic rate J / (sqrt(2) hbar).
    """
    if t < 0:
        raise ConfigError("t must be >= 0")
    if sigma0 < 1:
        raise ConfigError("sigma0 must be >= 1")
    if regime == "slow_coherent":
        return math.sqrt(sigma0**2 + (J * t / (2.0 * hbar * sigma0)) ** 2)
    if regime == "fast_incoherent":
        return math.sqrt(sigma0**2 + 2.0 * (J * t / (2.0 * hbar)) ** 2)
    raise ConfigError(f"unknown regime {regime!r}")


# ---------------------------------------------------------------------------
# Driven tilt: response function chi(t)

@dataclass(frozen=True)
class ChiValue:
    """chi(t) in sites; modulus feeds the width law, phase the center."""

    value: complex

    @property
    def modulus(self) -> float:
        return abs(self.value)

    @property
    def phase(self) -> float:
        return cmath.phase(self.value)


def default_n_max(params: LatticeParams) -> int:
    return max(5, math.ceil(params.dFomega / (params.hbar * params.omega)) + 10)


def default_eps_resonance(params: LatticeParams) -> float:
    # scale on max(omega_B, omega) so the guard survives dF = 0
    return 1e-9 * max(params.omega_B, params.omega)


def converged_n_max(params: LatticeParams, tol: float = BESSEL_TAIL_TOL) -> int:
    """Smallest order at/above the default floor whose first omitted
    Bessel factor is below tol, so chi() cannot refuse the truncation.
    The default floor ceil(z_q) + 10 sits past the Bessel turning point,
    where J_n(z_q) decays monotonically in n.
    """
    if not (params.omega > 0):
        raise ConfigError("converged_n_max needs omega > 0")
    zq = params.dFomega / (params.hbar * params.omega)
    n = default_n_max(params)
    while abs(bessel_j(n + 1, zq)) > tol:
        n += 1
    return n


def chi(t: float, params: LatticeParams, n_max: int | None = None,
        eps_resonance: float | None = None) -> ChiValue:
    """Response function of the driven tilt, as a harmonic sum
    J sum_n J_n(dFomega/hbar omega) * f(Omega_n, t) with
    Omega_n = omega_B + n omega and
    f = (1/hbar Omega_n) exp(-i Omega_n t / 2) sin(Omega_n t / 2).

    This is the exact single-particle solution for the force
    dF + dFomega cos(omega t) integrated by the engine: the coherent
    center is 2 Im chi and the incoherent width sqrt(sigma0^2 + 2|chi|^2)
    (the same law is often quoted with harmonics omega_B - n omega, which
    belongs to the opposite drive sign; only the relabeling n -> -n and
    the resulting signs of the coefficients differ).  Near resonance the
    slow harmonic is n = -1, detuned by omega_B - omega.

    Terms within eps_resonance of resonance use the exact removable limit
    f -> t / (2 hbar).  The sum runs over |n| <= n_max; if the first
    omitted Bessel factor is above 1e-12 the truncation is refused.
    """
    if not (params.omega > 0):
        raise ConfigError("chi needs omega > 0")
    if n_max is None:
        n_max = default_n_max(params)
    if n_max < math.ceil(params.dFomega / (params.hbar * params.omega)) + 10:
        raise ConfigError(f"n_max = {n_max} below the convergence floor")
    if eps_resonance is None:
        eps_resonance = default_eps_resonance(params)

    zq = params.dFomega / (params.hbar * params.omega)
    tab = bessel_j_all(zq, n_max + 1)
    if abs(tab[n_max + 1]) > BESSEL_TAIL_TOL:
        raise BadTruncation(
            f"J_{n_max + 1}({zq:g}) = {tab[n_max + 1]:.3e} above {BESSEL_TAIL_TOL:g}"
        )

    hbar = params.hbar
    total = 0.0 + 0.0j
    for n in range(-n_max, n_max + 1):
        jn = tab[abs(n)]
        if n < 0 and abs(n) % 2 == 1:
            jn = -jn
        if jn == 0.0:
            continue
        delta = params.omega_B + n * params.omega
        if abs(delta) < eps_resonance:
            f = 0.5 * t / hbar
        else:
            half = 0.5 * delta * t
            f = cmath.exp(-1j * half) * math.sin(half) / (hbar * delta)
        total += jn * f
    # builtin complex: jn comes from an ndarray and would otherwise
    # leak numpy scalars into CSV reprs downstream
    return ChiValue(complex(params.J * total))


def driven_center(t: float, params: LatticeParams, **kw) -> float:
    """Coherent-packet center 2 |chi| sin(phi) = 2 Im(chi).

    Matches the engine's x(t) including sign: the literal potential
    +[dF + dFomega cos(omega t)] l pushes the packet downhill, so the
    undriven limit is -L(1 - cos(omega_B t)) while bo_center() quotes the
    magnitude-convention +L(1 - cos).  Envelope comparisons use |x|.

    Unlike chi(), picks a converged n_max automatically when none is
    given (the floor default can refuse strong drives, z_q >~ 6).
    """
    kw.setdefault("n_max", converged_n_max(params))
    return 2.0 * chi(t, params, **kw).value.imag


def driven_width(t: float, sigma0: float, params: LatticeParams, **kw) -> float:
    """Incoherent-packet width sqrt(sigma0^2 + 2 |chi|^2); converged
    n_max picked automatically, as in driven_center()."""
    kw.setdefault("n_max", converged_n_max(params))
    c = chi(t, params, **kw)
    return math.sqrt(sigma0**2 + 2.0 * c.modulus**2)


# ---------------------------------------------------------------------------
# Effective stationary lattice for near-resonant driving

@dataclass(frozen=True)
class EffectiveModel:
    """Stationary-lattice equivalent (J_eff, dF_eff) of a driven tilt."""

    J_eff: float
    dF_eff: float
    variant: str

    @property
    def L_eff(self) -> float:
        if self.dF_eff == 0.0:
            raise ConfigError("L_eff undefined at exact resonance (dF_eff = 0)")
        return self.J_eff / self.dF_eff


def effective_model(params: LatticeParams, variant: str = "bessel") -> EffectiveModel:
    """Map an omega ~ omega_B drive onto a stationary lattice.

    variant "rwa":    J_eff = (J/2)(Fomega/F), first order in the drive;
    variant "bessel": J_eff = J * J1(Fomega/F), resums the drive and is the
                      default (it captures band collapse at the J1 zeros).
    dF_eff = hbar (omega_B - omega) in both.
    """
    if params.dF <= 0:
        raise ZeroTilt("effective model needs dF > 0")
    ratio = params.dFomega / params.dF
    if variant == "rwa":
        j_eff = 0.5 * params.J * ratio
    elif variant == "bessel":
        j_eff = params.J * bessel_j(1, ratio)
    else:
        raise ConfigError(f"unknown variant {variant!r}")
    return EffectiveModel(j_eff, params.hbar * (params.omega_B - params.omega), variant)
