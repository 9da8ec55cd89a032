"""Compare the compiled and pure-Python kernels on the same piece grids.

    python3 benchmarks/bench_kernels.py [--pieces 200]

Each backend gets identical inputs; the script reports time per piece and
checks that the enclosures of both backends overlap.
"""

import argparse
import time

import numpy as np

from zetabound import kernels

CASES = (
    ("EM, t near 20", 20.0, 0, 10, 1e-12),
    ("EM, t near 150", 150.0, 0, 10, 1e-12),
    ("RS C0 only, t near 500", 500.0, 0, 10, 1e-12),
    ("RS C0..C2, t near 500", 500.0, 2, 10, 1e-12),
)


def run_case(backend, start, terms, em_k, em_tol, pieces):
    edges = start + np.arange(pieces + 1) / 1024.0
    t0 = time.perf_counter()
    lo, hi, _ = backend.abs_zeta_grid(edges, terms, em_k, em_tol)
    return time.perf_counter() - t0, lo, hi


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pieces", type=int, default=200)
    args = ap.parse_args()
    names = kernels.available()
    if "cython" not in names:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'case':28s}" + "".join(f"{n:>16s}" for n in names) + "   speedup  overlap")
    for label, start, terms, em_k, em_tol in CASES:
        row = {}
        for n in names:
            row[n] = run_case(kernels.get_backend(n), start, terms, em_k, em_tol, args.pieces)
        cells = "".join(f"{row[n][0] / args.pieces * 1e6:13.1f} us" for n in names)
        if len(names) == 2:
            (tc, lc, hc), (tp, lp, hp) = row["cython"], row["python"]
            overlap = bool(np.all((lc <= hp) & (lp <= hc)))
            print(f"{label:28s}{cells}   {tp / tc:7.1f}x  {overlap}")
        else:
            print(f"{label:28s}{cells}")


if __name__ == "__main__":
    main()
