#!/usr/bin/env python3
"""Regenerate every preset data tree at full resolution.

Each preset lands in <out>/<preset>/ as the usual series.csv /
density_t*.csv / run.json tree (or scan.csv for analytic scans).  The
long ones (fig3, fig6, figC) take tens of minutes each on one core; use
--only to cherry-pick and --realizations / --t-final for quick smoke
runs.  The frontend sample trees under frontend/samples/ were produced
by frontend/tools/make_samples.sh with exactly such reduced settings.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from tiltlat.experiments import PRESETS, run_preset  # noqa: E402


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="data", help="output root (default: data/)")
    ap.add_argument("--only", nargs="*", metavar="NAME", choices=PRESETS,
                    help="subset of presets (default: all)")
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--realizations", type=int, default=None,
                    help="override ensemble size (smoke runs)")
    ap.add_argument("--t-final", dest="t_final", type=float, default=None,
                    help="override final time (smoke runs)")
    args = ap.parse_args(argv)

    names = args.only or list(PRESETS)
    root = Path(args.out)
    failures = []
    for name in names:
        t0 = time.perf_counter()
        print(f"[{name}] running ...", flush=True)
        try:
            run_preset(name, root / name, seed=args.seed,
                       t_final=args.t_final,
                       n_realizations=args.realizations)
        except Exception as exc:  # keep going; report at the end
            failures.append((name, exc))
            print(f"[{name}] FAILED: {exc}", file=sys.stderr, flush=True)
            continue
        print(f"[{name}] done in {time.perf_counter() - t0:.1f} s", flush=True)
    if failures:
        print(f"{len(failures)} preset(s) failed", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
