# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled facet scan over 128-bit integers; see ``_kernels_py`` for the reference."""

from itertools import combinations

cdef extern from *:
    ctypedef long long i128 "__int128"

cdef int[6][2] PAIRS = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
cdef int[6] TRACE_ROW = [1, 1, 1, 0, 0, 0]


cdef i128 det4(i128 rows[4][6], int cols[4]) nogil:
    cdef i128 total = 0, top, bot
    cdef int p, a, b, c, d, k, s
    for p in range(6):
        a = PAIRS[p][0]
        b = PAIRS[p][1]
        c = -1
        for k in range(4):
            if k != a and k != b:
                if c < 0:
                    c = k
                else:
                    d = k
        top = rows[0][cols[a]] * rows[1][cols[b]] - rows[0][cols[b]] * rows[1][cols[a]]
        bot = rows[2][cols[c]] * rows[3][cols[d]] - rows[2][cols[d]] * rows[3][cols[c]]
        s = -1 if (a + b + 1) % 2 else 1
        total += s * top * bot
    return total


cdef void normal_of(i128 diffs[4][6], i128 out[6]) nogil:
    cdef int k, c, cc, pos, m, q
    cdef int cols[5]
    cdef int sub[4]
    cdef i128 acc
    for k in range(6):
        m = 0
        for c in range(6):
            if c != k:
                cols[m] = c
                m += 1
        acc = 0
        for pos in range(5):
            c = cols[pos]
            if TRACE_ROW[c]:
                q = 0
                for cc in range(5):
                    if cols[cc] != c:
                        sub[q] = cols[cc]
                        q += 1
                acc += (-1 if pos % 2 else 1) * det4(diffs, sub)
        out[k] = acc if k % 2 == 0 else -acc


cdef i128 iabs(i128 x) nogil:
    return -x if x < 0 else x


cdef i128 gcd128(i128 a, i128 b) nogil:
    a = iabs(a)
    b = iabs(b)
    while b:
        a, b = b, a % b
    return a


cdef object to_py(i128 x):
    cdef bint negative = x < 0
    cdef i128 a = -x if negative else x
    cdef unsigned long long lo = <unsigned long long>(a & <i128>0xFFFFFFFFFFFFFFFF)
    cdef unsigned long long hi = <unsigned long long>(a >> 64)
    v = (int(hi) << 64) | int(lo)
    return -v if negative else v


def scan_facets(points, int n=12, int k=5):
    """Same contract as ``_kernels_py.scan_facets``; ``k`` must be 5.

    Callers must keep coordinates small enough for 128-bit intermediates
    (see ``kernels.C_COORD_LIMIT``).
    """
    if k != 5:
        raise ValueError("compiled kernel supports 5-subsets only")
    cdef i128 P[12][6]
    cdef i128 diffs[4][6]
    cdef i128 normal[6]
    cdef i128 val, g
    cdef int i, j, c, r, n_independent = 0
    cdef bint pos, neg, nz
    cdef long long mask
    for i in range(n):
        for c in range(6):
            P[i][c] = <long long>points[i][c]
    hits = []
    for sub in combinations(range(n), 5):
        for r in range(4):
            for c in range(6):
                diffs[r][c] = P[sub[r + 1]][c] - P[sub[0]][c]
        normal_of(diffs, normal)
        nz = False
        for c in range(6):
            if normal[c] != 0:
                nz = True
        if not nz:
            continue
        n_independent += 1
        pos = False
        neg = False
        mask = 0
        for j in range(n):
            val = 0
            for c in range(6):
                val += normal[c] * (P[j][c] - P[sub[0]][c])
            if val > 0:
                pos = True
            elif val < 0:
                neg = True
            else:
                mask |= (<long long>1) << j
            if pos and neg:
                break
        if pos and neg:
            continue
        if pos:
            for c in range(6):
                normal[c] = -normal[c]
        g = 0
        for c in range(6):
            g = gcd128(g, normal[c])
        hits.append((sub, tuple([to_py(normal[c] // g) for c in range(6)]), int(mask)))
    return n_independent, hits
