"""Domain types and initial-state constructors.

Conventions: hbar = 1, lattice period d = 1, positions in units of sites.
Site index l runs over a contiguous integer window containing l = 0.
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .bessel import bessel_j
from .errors import ConfigError, NotNormalized, WindowTooNarrow

TRUNCATION_TOL = 1e-12  # allowed Gaussian mass outside the window


@dataclass(frozen=True)
class LatticeParams:
    """Physical parameters of the driven tilted lattice.

    J       hopping energy
    dF      static tilt per site (energy)
    dFomega AC drive amplitude per site (energy)
    omega   drive angular frequency
    g       nonlinear interaction constant (energy)
    """

    J: float
    dF: float = 0.0
    dFomega: float = 0.0
    omega: float = 0.0
    g: float = 0.0
    hbar: float = field(default=1.0, repr=False)
    d: float = field(default=1.0, repr=False)

    def __post_init__(self):
        if self.hbar != 1.0 or self.d != 1.0:
            raise ConfigError("only hbar = 1, d = 1 units are supported")
        if not (self.J > 0):
            raise ConfigError(f"J must be > 0, got {self.J}")
        if self.dF < 0:
            raise ConfigError(f"dF must be >= 0, got {self.dF}")
        if self.dFomega < 0:
            raise ConfigError(f"dFomega must be >= 0, got {self.dFomega}")
        if self.dFomega > 0 and not (self.omega > 0):
            raise ConfigError("omega must be > 0 when dFomega > 0")
        if self.omega < 0:
            raise ConfigError(f"omega must be >= 0, got {self.omega}")
        if self.g < 0:
            warnings.warn("g < 0 (attractive) is accepted but untested", stacklevel=2)

    # -- derived quantities ------------------------------------------------

    @property
    def omega_B(self) -> float:
        """Bloch frequency dF/hbar."""
        return self.dF / self.hbar

    @property
    def T_B(self) -> float:
        """Bloch period 2*pi/omega_B; requires dF > 0."""
        if self.dF <= 0:
            raise ConfigError("T_B undefined for dF = 0")
        return 2.0 * math.pi / self.omega_B

    @property
    def T_J(self) -> float:
        """Hopping time 2*pi*hbar/J."""
        return 2.0 * math.pi * self.hbar / self.J

    @property
    def L(self) -> float:
        """Static localization length J/dF; requires dF > 0."""
        if self.dF <= 0:
            raise ConfigError("L undefined for dF = 0")
        return self.J / self.dF

    @property
    def z(self) -> float:
        """Dimensionless J/dF, the Bessel argument of the localized states."""
        return self.L


@dataclass
class LatticeState:
    """Complex amplitudes c_l on a contiguous site window, plus time."""

    amplitudes: np.ndarray
    l_min: int
    time: float = 0.0

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=np.complex128)
        if self.amplitudes.ndim != 1 or self.amplitudes.size < 3:
            raise ConfigError("amplitudes must be a 1d array with >= 3 sites")
        if not (self.l_min <= 0 <= self.l_max):
            raise ConfigError("window must contain site l = 0")
        nrm = float(np.sum(np.abs(self.amplitudes) ** 2))
        if abs(nrm - 1.0) > 1e-8:
            raise NotNormalized(f"state norm {nrm!r} differs from 1 by > 1e-8")

    @property
    def n_sites(self) -> int:
        return self.amplitudes.size

    @property
    def l_max(self) -> int:
        return self.l_min + self.amplitudes.size - 1

    @property
    def sites(self) -> np.ndarray:
        return np.arange(self.l_min, self.l_max + 1)

    def density(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def copy(self) -> "LatticeState":
        return LatticeState(self.amplitudes.copy(), self.l_min, self.time)


@dataclass(frozen=True)
class WavePacketSpec:
    """Initial Gaussian wave packet: coherent (flat phase) or incoherent."""

    kind: str  # "coherent" | "incoherent"
    sigma0: float = 10.0
    center: int = 0

    def __post_init__(self):
        if self.kind not in ("coherent", "incoherent"):
            raise ConfigError(f"unknown packet kind {self.kind!r}")
        if self.sigma0 < 1:
            raise ConfigError(f"sigma0 must be >= 1, got {self.sigma0}")
        if self.sigma0 < 5:
            warnings.warn(
                f"sigma0 = {self.sigma0} is narrow; analytic wide-packet "
                "expressions assume sigma0 >> 1",
                stacklevel=2,
            )


def _gaussian_density(spec: WavePacketSpec, l_min: int, l_max: int) -> np.ndarray:
    if not (l_min <= spec.center <= l_max):
        raise WindowTooNarrow(
            f"center {spec.center} outside window [{l_min}, {l_max}]"
        )
    # mass of the continuum Gaussian left outside [l_min, l_max]
    lo = (l_min - 0.5 - spec.center) / (math.sqrt(2.0) * spec.sigma0)
    hi = (l_max + 0.5 - spec.center) / (math.sqrt(2.0) * spec.sigma0)
    outside = 0.5 * (math.erfc(-lo) + math.erfc(hi))
    if outside > TRUNCATION_TOL:
        raise WindowTooNarrow(
            f"Gaussian mass {outside:.3e} outside [{l_min}, {l_max}] "
            f"exceeds {TRUNCATION_TOL:g}"
        )
    l = np.arange(l_min, l_max + 1)
    rho = np.exp(-((l - spec.center) ** 2) / (2.0 * spec.sigma0**2))
    return rho / rho.sum()


def make_coherent(spec: WavePacketSpec, l_min: int, l_max: int) -> LatticeState:
    """Gaussian packet sqrt(rho_l), all phases zero, t = 0."""
    rho = _gaussian_density(spec, l_min, l_max)
    return LatticeState(np.sqrt(rho).astype(np.complex128), l_min, 0.0)


def make_incoherent_realization(
    spec: WavePacketSpec, l_min: int, l_max: int, seed
) -> LatticeState:
    """One random-phase realization sqrt(rho_l) exp(i theta_l).

    theta_l are iid uniform on [0, 2pi).  `seed` may be an integer master
    seed or a numpy SeedSequence; realization streams should be derived by
    the caller via SeedSequence.spawn-style keys so the ensemble is
    reproducible independent of evaluation order.
    """
    rho = _gaussian_density(spec, l_min, l_max)
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    rng = np.random.Generator(np.random.Philox(seed))
    theta = rng.uniform(0.0, 2.0 * math.pi, size=rho.size)
    return LatticeState(np.sqrt(rho) * np.exp(1j * theta), l_min, 0.0)


def make_packet(spec: WavePacketSpec, l_min: int, l_max: int, seed=None) -> LatticeState:
    if spec.kind == "coherent":
        return make_coherent(spec, l_min, l_max)
    if seed is None:
        raise ConfigError("incoherent packets need a seed")
    return make_incoherent_realization(spec, l_min, l_max, seed)


def _next_pow2(x: float) -> int:
    return 1 << max(0, math.ceil(math.log2(max(1.0, x))))


def auto_window(spec: WavePacketSpec, params: LatticeParams, w_min: int = 512):
    """Default site window [center - W, center + W] for a simulation.

    W = max(8 sigma0, 4 L, 4 L_eff, w_min) rounded up to a power of two,
    with L = J/dF (static) and L_eff the driven effective localization
    length J*J1(Fomega/F)/|hbar(omega_B - omega)|, each included only when
    defined.  Covers Bloch excursions (amplitude 2L) and the slow
    super-period excursions (amplitude 2 L_eff).
    """
    need = 8.0 * spec.sigma0
    if params.dF > 0:
        need = max(need, 4.0 * params.L)
        if params.dFomega > 0 and params.omega > 0:
            detune = params.omega_B - params.omega
            if detune != 0.0:
                j_eff = params.J * bessel_j(1, params.dFomega / params.dF)
                need = max(need, 4.0 * abs(j_eff / detune))
    w = _next_pow2(max(need, float(w_min)))
    return spec.center - w, spec.center + w
