"""Binary certificate depths and search sizes, full vs. first-letter-reduced.

    python scripts/prover_depths.py
"""
import time

from thetapat.involutions import Mode
from thetapat.patterns import parse_pattern
from thetapat.provers import prove_unavoidable, symmetry_reduced_prove

PATTERNS = [
    "a t(a) a", "t(a) a t(a)", "a a t(a)", "t(a) a a", "t(a) t(a) a", "a t(a) t(a)",
    "a a", "a a b", "b a a", "a a b a", "a b b a", "a a b b", "a b a b", "a a b a a", "a a b a b",
]

print(f"{'pattern':<14} {'mode':<12} {'depth':>5} {'nodes':>7} {'reduced':>7} {'secs':>6}")
for text in PATTERNS:
    p = parse_pattern(text)
    for mode in (Mode.MORPHIC,) if p.theta_free else tuple(Mode):
        t0 = time.perf_counter()
        full = prove_unavoidable(p, 2, mode, 64)
        red = symmetry_reduced_prove(p, 2, mode, 64)
        dt = time.perf_counter() - t0
        depth = getattr(full, "depth", "-")
        print(f"{text:<14} {mode.value:<12} {depth:>5} {full.nodes_explored:>7} {red.nodes_explored:>7} {dt:6.2f}")
