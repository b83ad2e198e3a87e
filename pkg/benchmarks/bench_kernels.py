"""Compare the compiled and pure-Python facet-scan kernels.

    python3 benchmarks/bench_kernels.py --repeat 5

Both backends must return identical scans; the script exits non-zero if
they disagree or the compiled kernel is missing.
"""

from __future__ import annotations

import argparse
import sys
import timeit

from monoclinic import kernels
from monoclinic.polytope import integer_points
from monoclinic.reference import synthetic
from monoclinic.variants import build_variants, material


def cases():
    yield "NiTi", material("NiTi")
    yield "eps=delta", synthetic("boundary")
    yield "eps>delta", synthetic("Ib")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if kernels.BACKEND != "cython":
        print("compiled kernel not available; build the extension first", file=sys.stderr)
        return 1
    print(f"{'case':<10} {'python (s)':>11} {'cython (s)':>11} {'speedup':>8}")
    for name, params in cases():
        pts = integer_points(build_variants(params))
        py = kernels.scan_facets(pts, backend="python")
        cy = kernels.scan_facets(pts, backend="cython")
        if py != cy:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        t_py = min(timeit.repeat(lambda: kernels.scan_facets(pts, backend="python"), number=1, repeat=args.repeat))
        t_cy = min(timeit.repeat(lambda: kernels.scan_facets(pts, backend="cython"), number=1, repeat=args.repeat))
        print(f"{name:<10} {t_py:>11.4f} {t_cy:>11.4f} {t_py / t_cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
