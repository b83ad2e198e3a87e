"""Pure-Python facet scan; mirrors ``_kernels.pyx`` line for line."""

from __future__ import annotations

from itertools import combinations
from math import gcd

TRACE_ROW = (1, 1, 1, 0, 0, 0)

# column pairs (a, b) with a < b, used in the Laplace expansion of 4x4 minors
_PAIRS = tuple(combinations(range(4), 2))


def _det4(rows, cols) -> int:
    """Determinant of rows[0..3] restricted to the 4 given columns."""
    total = 0
    for a, b in _PAIRS:
        c, d = (k for k in range(4) if k != a and k != b)
        top = rows[0][cols[a]] * rows[1][cols[b]] - rows[0][cols[b]] * rows[1][cols[a]]
        bot = rows[2][cols[c]] * rows[3][cols[d]] - rows[2][cols[d]] * rows[3][cols[c]]
        # sign of the permutation (a, b, c, d)
        s = -1 if (a + b + 1) % 2 else 1
        total += s * top * bot
    return total


def normal_of(diffs) -> list[int]:
    """Signed 5x5 minors of [TRACE_ROW; diffs] (generalised cross product)."""
    normal = []
    for k in range(6):
        cols = [c for c in range(6) if c != k]
        # expand the 5x5 minor along the trace row
        acc = 0
        for pos, c in enumerate(cols):
            if TRACE_ROW[c]:
                sub = [cc for cc in cols if cc != c]
                acc += (-1 if pos % 2 else 1) * _det4(diffs, sub)
        normal.append(acc if k % 2 == 0 else -acc)
    return normal


def scan_facets(points, n: int = 12, k: int = 5):
    """Scan all k-subsets of the integer points.

    Returns ``(n_independent, hits)``, where ``hits`` lists
    ``(subset, normal, zero_mask)`` for subsets whose normal is nonzero and
    leaves every other point weakly on one side.  Normals are oriented so
    exterior points evaluate at or below zero, then made primitive.  Bit j of
    ``zero_mask`` is set when point j lies on the hyperplane.
    """
    n_independent = 0
    hits = []
    for sub in combinations(range(n), k):
        base = points[sub[0]]
        diffs = [[points[i][c] - base[c] for c in range(6)] for i in sub[1:]]
        normal = normal_of(diffs)
        if not any(normal):
            continue
        n_independent += 1
        pos = neg = False
        mask = 0
        for j in range(n):
            val = sum(normal[c] * (points[j][c] - base[c]) for c in range(6))
            if val > 0:
                pos = True
            elif val < 0:
                neg = True
            else:
                mask |= 1 << j
            if pos and neg:
                break
        if pos and neg:
            continue
        if pos:
            normal = [-x for x in normal]
        g = 0
        for x in normal:
            g = gcd(g, x)
        hits.append((sub, tuple(x // g for x in normal), mask))
    return n_independent, hits
