"""Run time of the bounded avoidance checks as the prefix grows.

    python scripts/evidence_scaling.py [--bound 30]
"""
import argparse
import time

from thetapat.involutions import Mode
from thetapat.provers import verify_construction

ap = argparse.ArgumentParser()
ap.add_argument("--bound", type=int, default=30)
ap.add_argument("--lengths", type=int, nargs="+", default=[1000, 3000, 10000, 30000])
args = ap.parse_args()

for mode in Mode:
    for n in args.lengths:
        t0 = time.perf_counter()
        ev = verify_construction(mode, n, args.bound)
        print(f"{mode.value:<12} prefix={ev.prefix_len:<7} max_var_len={args.bound} "
              f"{ev.result} {time.perf_counter() - t0:.2f}s")
