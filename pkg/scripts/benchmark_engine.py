#!/usr/bin/env python3
"""Integrator throughput check.

Times the split-step scheme for a few window sizes at the default dt
(T_J/200) and prints steps/s, site-updates/s, and the worst norm error
over the run.  Numbers are single-core; the first row includes jit
warm-up unless --warmup is kept.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from tiltlat.engine import IntegratorConfig, evolve  # noqa: E402
from tiltlat.model import LatticeParams, WavePacketSpec, make_coherent  # noqa: E402


def bench(n_half: int, t_final: float, g: float) -> tuple:
    params = LatticeParams(J=1.0, dF=0.04, g=g)
    spec = WavePacketSpec(kind="coherent", sigma0=10.0)
    state = make_coherent(spec, -n_half, n_half)
    cfg = IntegratorConfig(sampling_stride=50)
    t0 = time.perf_counter()
    traj = evolve(state, params, cfg, t_final)
    wall = time.perf_counter() - t0
    n_steps = round(t_final / traj.dt)
    return n_steps, wall, traj.max_norm_err


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--t-final", dest="t_final", type=float,
                    default=100.0 * 2.0 * 3.141592653589793)
    ap.add_argument("--g", type=float, default=10.0)
    ap.add_argument("--sizes", type=int, nargs="*",
                    default=[512, 1024, 2048, 4096])
    ap.add_argument("--no-warmup", action="store_true",
                    help="skip the jit warm-up run")
    args = ap.parse_args(argv)

    if not args.no_warmup:
        bench(128, 10.0, args.g)  # compile the numba kernel off the clock

    print(f"{'sites':>7} {'steps':>8} {'wall s':>8} {'steps/s':>9} "
          f"{'Msite/s':>9} {'norm err':>10}")
    for n_half in args.sizes:
        n_sites = 2 * n_half + 1
        n_steps, wall, err = bench(n_half, args.t_final, args.g)
        print(f"{n_sites:>7} {n_steps:>8} {wall:>8.2f} "
              f"{n_steps / wall:>9.0f} "
              f"{n_steps * n_sites / wall / 1e6:>9.1f} {err:>10.2e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
