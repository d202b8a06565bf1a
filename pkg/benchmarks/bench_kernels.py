"""Compare the compiled kernel lane against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [repeats]

Each workload runs on both lanes and reports the best wall time of
``repeats`` runs plus the speedup.  Exits nonzero if the lanes disagree
on any output.
"""

import sys
import time

from blockprim._kernel import ACTIVE, pyfallback

try:
    from blockprim._kernel import _ckernel
except ImportError:
    _ckernel = None


def sym_gens(n):
    cycle = tuple(range(1, n)) + (0,)
    swap = (1, 0) + tuple(range(2, n))
    return [cycle, swap]


def dihedral_gens(n):
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((n - i) % n for i in range(n))
    return [rot, ref]


WORKLOADS = [
    ("closure S7 (5040 elems)", "closure", (7, sym_gens(7), 10000)),
    ("closure S8 (40320 elems)", "closure", (8, sym_gens(8), 50000)),
    ("orbit D120 from 0", "orbit", (120, dihedral_gens(120), 0)),
    ("pair_orbit D60 (0,1)", "pair_orbit", (60, dihedral_gens(60), 0, 1)),
    ("pair_orbit D90 (0,2)", "pair_orbit", (90, dihedral_gens(90), 0, 2)),
]


def best_time(fn, args, repeats):
    best = None
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main(argv):
    repeats = int(argv[1]) if len(argv) > 1 else 3
    print(f"active lane: {ACTIVE}")
    if _ckernel is None:
        print("compiled lane unavailable; nothing to compare")
        return 0
    mismatches = 0
    header = f"{'workload':32} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, op, args in WORKLOADS:
        t_pure, r_pure = best_time(getattr(pyfallback, op), args, repeats)
        t_comp, r_comp = best_time(getattr(_ckernel, op), args, repeats)
        if r_pure != r_comp:
            mismatches += 1
            note = "  MISMATCH"
        else:
            note = ""
        ratio = t_pure / t_comp if t_comp > 0 else float("inf")
        print(f"{label:32} {t_pure * 1e3:9.2f}ms {t_comp * 1e3:9.2f}ms "
              f"{ratio:7.1f}x{note}")
    if mismatches:
        print(f"{mismatches} workload(s) disagreed between lanes")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
