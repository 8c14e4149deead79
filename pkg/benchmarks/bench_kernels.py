"""Compare the compiled and pure-Python modular nested-sum kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeat 3] [--json]
"""
from __future__ import annotations

import argparse
import json
import time

import numpy as np

from mpldual import kernels

# (label, ks, consts, variables, coefs, nvars, N, modulus, star)
CASES = [
    ("scalar r=4 p=1009 M=2", (1, 2, 1, 3), (1, 1, 2, 1), (-1, -1, -1, -1), (0, 0, 0, 0), 0, 1009, 1009 ** 2, False),
    ("scalar star r=6 p=2003", (1,) * 6, (1,) * 6, (-1,) * 6, (0,) * 6, 0, 2003, 2003, True),
    ("symbolic 1 var p=101 M=2", (1, 2, 1), (0, 1, 1), (0, -1, -1), (1, 0, 0), 1, 101, 101 ** 2, True),
    ("symbolic 2 vars p=101", (1, 1), (0, 0), (0, 1), (1, 1), 2, 101, 101 ** 2, False),
    ("symbolic 2 vars p=53 star r=3", (1, 2, 1), (0, 1, 0), (0, -1, 1), (1, 0, 1), 2, 53, 53 ** 2, True),
]


def time_backend(name: str, case: tuple, repeat: int) -> tuple[float, np.ndarray]:
    _, ks, consts, variables, coefs, nvars, N, m, star = case
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = kernels.nested_sum_mod(ks, consts, variables, coefs, nvars, N, m, star, backend=name)
        best = min(best, time.perf_counter() - t0)
    return best, np.asarray(out, dtype=object)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    ns = ap.parse_args()
    backends = kernels.available_backends()
    rows = []
    for case in CASES:
        row = {"case": case[0]}
        results = {}
        for b in backends:
            row[b], results[b] = time_backend(b, case, ns.repeat)
        row["agree"] = all(np.array_equal(results[b], results["python"]) for b in backends)
        if "cython" in row:
            row["speedup"] = row["python"] / row["cython"]
        rows.append(row)
    if ns.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'case':34s} " + " ".join(f"{b:>10s}" for b in backends) + "   speedup agree")
    for row in rows:
        times = " ".join(f"{row[b]:9.4f}s" for b in backends)
        speed = f"{row['speedup']:7.1f}x" if "speedup" in row else "      -"
        print(f"{row['case']:34s} {times} {speed} {row['agree']}")


if __name__ == "__main__":
    main()
