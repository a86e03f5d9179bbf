"""Integer-order Bessel functions of the first kind.

Evaluation strategy: ascending power series at small argument, downward
(Miller) recurrence with sum normalization otherwise.  Absolute accuracy
target is 1e-10 over |n| <= 1e4, |z| <= 1e4.
"""

import math

import numpy as np

from .errors import OutOfRange

ORDER_LIMIT = 10_000
ARG_LIMIT = 1.0e4

# below this argument the ascending series is cheaper and free of the
# Miller start-order bookkeeping; cancellation stays under ~1e-11
_SERIES_Z_MAX = 10.0

_RESCALE = 1.0e250


def _series_jn(n: int, z: float) -> float:
    # J_n(z) = sum_m (-1)^m (z/2)^(n+2m) / (m! (n+m)!),  n >= 0
    half = 0.5 * z
    log_lead = n * math.log(half) - math.lgamma(n + 1) if half > 0.0 else -math.inf
    if log_lead < -745.0:  # leading term underflows; |J_n| < 1e-300
        return 0.0
    term = math.exp(log_lead)
    total = term
    zq = -(half * half)
    for m in range(1, 200):
        term *= zq / (m * (n + m))
        total += term
        if abs(term) <= 1e-18 * max(1.0, abs(total)):
            break
    return total


def _miller_all(z: float, n_max: int) -> np.ndarray:
    """All of J_0(z)..J_n_max(z) by downward recurrence, z > 0."""
    start = int(max(n_max, math.ceil(z)) + 16.0 * max(1.0, z ** (1.0 / 3.0))) + 22
    if start % 2:
        start += 1
    out = np.zeros(n_max + 1)
    jp = 0.0          # J_{k+1} (unnormalized)
    jc = 1e-30        # J_k
    norm = 0.0        # accumulates J_0 + 2*sum_{even k>0} J_k
    for k in range(start, 0, -1):
        jm = (2.0 * k / z) * jc - jp
        jp = jc
        jc = jm
        if k - 1 <= n_max:
            out[k - 1] = jc
        if (k - 1) % 2 == 0:
            norm += jc if k == 1 else 2.0 * jc
        if abs(jc) > _RESCALE:
            jc /= _RESCALE
            jp /= _RESCALE
            norm /= _RESCALE
            out /= _RESCALE
    return out / norm


def bessel_j_all(z: float, n_max: int) -> np.ndarray:
    """Array [J_0(z), ..., J_n_max(z)] for z >= 0."""
    if n_max < 0:
        raise OutOfRange(f"n_max must be >= 0, got {n_max}")
    if n_max > ORDER_LIMIT or abs(z) > ARG_LIMIT:
        raise OutOfRange(f"supported range is |n| <= {ORDER_LIMIT}, |z| <= {ARG_LIMIT}")
    if z == 0.0:
        out = np.zeros(n_max + 1)
        out[0] = 1.0
        return out
    if z < _SERIES_Z_MAX and n_max <= 60:
        return np.array([_series_jn(n, z) for n in range(n_max + 1)])
    return _miller_all(z, n_max)


def bessel_j(n: int, z: float) -> float:
    """First-kind Bessel function of integer order n at real z.

    Uses the reflections J_{-n}(z) = (-1)^n J_n(z) and
    J_n(-z) = (-1)^n J_n(z) to reduce to n >= 0, z >= 0.
    """
    n = int(n)
    if abs(n) > ORDER_LIMIT or abs(z) > ARG_LIMIT:
        raise OutOfRange(f"supported range is |n| <= {ORDER_LIMIT}, |z| <= {ARG_LIMIT}")
    sign = 1.0
    if n < 0:
        n = -n
        if n % 2:
            sign = -sign
    if z < 0.0:
        z = -z
        if n % 2:
            sign = -sign
    if z == 0.0:
        return 1.0 if n == 0 else 0.0
    if z < _SERIES_Z_MAX:
        return sign * _series_jn(n, z)
    return sign * float(_miller_all(z, n)[n])
