"""T3 configurations: detection, scaffold parameters, nodes and constructions.

Scaffold parameters follow the cyclic convention on an ordered vertex triple
(e1, e2, e3):

    e33 = l12 e1 + (1 - l12) e2,  e11 = l23 e2 + (1 - l23) e3,
    e22 = l31 e3 + (1 - l31) e1,

with e_ii compatible with e_i.  Each l is the unique root in (0, 1) of the
cubic  l -> det(l e_a + (1 - l) e_b - e_c).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from .errors import (
    DegenerateLambda,
    DegenerateT3,
    IncompatibleCenter,
    InsufficientSamples,
    MixedField,
    MultipleRootsInUnitInterval,
    NotT3,
    TraceMismatch,
)
from .exact import univariate as up
from .exact.algebraic import AlgebraicScalar, embed, root_in
from .exact.intervals import enclose, excludes_zero, idet, isub
from .exact.polynomial import Polynomial
from .exact.roots import Interval, isolate_cubic_roots, refine
from .exact.scalars import is_zero, sign
from .linalg import IncrementalRank, rank
from .plane_cone import binary_cubic
from .strain import SymStrain, is_compatible
from .symmetry import R0, Permutation, generators, incompatible_triples, s4
from .variants import VariantSet, build_variants, symbolic_variants

UNIT = Interval(0, 1)
PAIR_LABELS = ("12", "23", "31")


# -- combinations of variants ------------------------------------------------
def combo_strain(v: VariantSet, combo: dict) -> SymStrain:
    """``sum(c * e(i))`` over a mapping ``{variant index: coefficient}``."""
    acc = None
    for i, c in sorted(combo.items()):
        term = v[i] * c
        acc = term if acc is None else acc + term
    return acc


def permute_combo(p: Permutation, combo: dict) -> dict:
    return {p(i): c for i, c in combo.items()}


def _add_combos(*pairs) -> dict:
    out: dict = {}
    for weight, combo in pairs:
        for i, c in combo.items():
            out[i] = out[i] + weight * c if i in out else weight * c
    return out


# -- detection ---------------------------------------------------------------
@dataclass(frozen=True)
class T3Test:
    is_t3: bool
    sign: int
    dets: tuple

    def __bool__(self):
        return self.is_t3


def is_t3(e1: SymStrain, e2: SymStrain, e3: SymStrain) -> T3Test:
    """Equal, nonzero signs of det(e1-e2), det(e2-e3), det(e3-e1)."""
    t = e1.trace()
    if not is_zero(e2.trace() - t) or not is_zero(e3.trace() - t):
        raise TraceMismatch("T3 vertices must share a trace")
    dets = ((e1 - e2).det(), (e2 - e3).det(), (e3 - e1).det())
    signs = {sign(d) for d in dets}
    if len(signs) == 1 and 0 not in signs:
        return T3Test(True, signs.pop(), dets)
    return T3Test(False, 0, dets)


def enumerate_incompatible_triples(v: VariantSet) -> list[tuple]:
    """The pairwise-incompatible triples of variants, each certified as a T3."""
    from .errors import DegenerateParams

    if v.params.all_compatible:
        raise DegenerateParams("all variants are pairwise compatible")
    out = []
    for t in sorted(tuple(sorted(x)) for x in incompatible_triples(v)):
        if not is_t3(*v.points(t)):
            raise AssertionError(f"incompatible triple {t} fails the T3 sign test")
        out.append(t)
    return out


# -- scaffold parameters -----------------------------------------------------
@dataclass(frozen=True)
class ScaffoldLambda:
    """Root in (0, 1) of a cubic (ascending coefficients over Q or Q(theta))."""

    pair: str
    cubic: tuple
    interval: Interval
    value: object = None  # Fraction or AlgebraicScalar when the cubic is rational

    def enclosure(self, width=Fraction(1, 10**9)) -> Interval:
        if self.value is not None:
            return enclose(self.value, width)
        return refine(list(self.cubic), self.interval, width)

    def __float__(self):
        return float(self.enclosure(Fraction(1, 2**60)).mid)


def scaffold_cubic(ea: SymStrain, eb: SymStrain, ec: SymStrain) -> list:
    """Ascending coefficients of  l -> det(l ea + (1 - l) eb - ec)."""
    c3, c2, c1, c0 = binary_cubic(ea - eb, eb - ec)
    return [c0, c1, c2, c3]


def _rational(coeffs) -> bool:
    return all(isinstance(c, (int, Fraction)) for c in coeffs)


def _solve_lambda(pair: str, coeffs: list, cache: dict) -> ScaffoldLambda:
    roots = isolate_cubic_roots(coeffs, UNIT, closed=False)
    if not roots:
        raise NotT3(f"no scaffold parameter in (0,1) for pair {pair}")
    if len(roots) > 1:
        raise MultipleRootsInUnitInterval(f"{len(roots)} roots in (0,1) for pair {pair}")
    iv = roots[0][0]
    value = None
    if _rational(coeffs):
        key = tuple(up.monic([Fraction(c) for c in coeffs]))
        if key not in cache:
            cache[key] = root_in(coeffs, iv)
        value = cache[key]
    return ScaffoldLambda(pair, tuple(coeffs), iv, value)


# -- records -----------------------------------------------------------------
@dataclass(frozen=True)
class T3Record:
    vertices: tuple
    indices: tuple | None
    sign: int
    lambdas: tuple  # (l12, l23, l31)
    scaffold: tuple | None  # (e11, e22, e33)
    nodes: tuple | None  # (e12, e23, e31)
    node_barycentric: tuple | None  # barycentric coordinates of the nodes
    segment_params: tuple | None  # position of each node along its two scaffold segments
    is_symmetric: bool
    orientation: str
    note: str = ""

    def lambda_values(self) -> tuple:
        return tuple(lam.value for lam in self.lambdas)

    def barycentre(self) -> SymStrain:
        e1, e2, e3 = self.vertices
        return (e1 + e2 + e3) * Fraction(1, 3)


def _common_field(values):
    """Embed exact values into the field of the first irrational one."""
    fld = next((x.field for x in values if isinstance(x, AlgebraicScalar)), None)
    if fld is None:
        return list(values)
    return [embed(x, fld) for x in values]


def _node_solve(lams):
    """Barycentric nodes from exact (l12, l23, l31)."""
    l12, l23, l31 = lams
    one = Fraction(1)
    unit = [(one, 0 * one, 0 * one), (0 * one, one, 0 * one), (0 * one, 0 * one, one)]
    unit = [tuple(Fraction(x) for x in u) for u in unit]
    scaf = [
        (Fraction(0), l23, 1 - l23),  # e11
        (1 - l31, Fraction(0), l31),  # e22
        (l12, 1 - l12, Fraction(0)),  # e33
    ]
    nodes, params = [], []
    for i, j in ((0, 1), (1, 2), (2, 0)):
        di = [a - b for a, b in zip(scaf[i], unit[i])]
        dj = [a - b for a, b in zip(scaf[j], unit[j])]
        rhs = [a - b for a, b in zip(unit[j], unit[i])]
        # s di - t dj = rhs, using two independent coordinates
        for r1, r2 in ((0, 1), (0, 2), (1, 2)):
            det = -di[r1] * dj[r2] + dj[r1] * di[r2]
            if not is_zero(det):
                break
        else:
            raise NotT3("scaffold segments are parallel")
        s = (-rhs[r1] * dj[r2] + dj[r1] * rhs[r2]) / det
        t = (di[r1] * rhs[r2] - rhs[r1] * di[r2]) / det
        bary = tuple(u + s * d for u, d in zip(unit[i], di))
        check = tuple(u + t * d for u, d in zip(unit[j], dj))
        if not all(is_zero(a - b) for a, b in zip(bary, check)):
            raise AssertionError("scaffold segments do not meet")
        nodes.append(bary)
        params.append((s, t))
    return nodes, params


def solve_t3(e1: SymStrain, e2: SymStrain, e3: SymStrain, *, indices: tuple | None = None) -> T3Record:
    """Scaffold parameters, scaffold points and nodes of a T3.

    With ``indices`` the vertices are reordered by ascending variant index.
    Exact scaffold points and nodes are produced when the vertices are
    rational; over an algebraic field the parameters are kept as isolated
    roots of their cubics and nodes are omitted.
    """
    verts = [e1, e2, e3]
    orientation = "as-given"
    if indices is not None:
        order = sorted(range(3), key=lambda k: indices[k])
        verts = [verts[k] for k in order]
        indices = tuple(indices[k] for k in order)
        orientation = "ascending"
    test = is_t3(*verts)
    if not test:
        raise NotT3("vertices fail the T3 sign test")
    cache: dict = {}
    lams = []
    for label, (a, b, c) in zip(PAIR_LABELS, ((0, 1, 2), (1, 2, 0), (2, 0, 1))):
        lams.append(_solve_lambda(label, scaffold_cubic(verts[a], verts[b], verts[c]), cache))
    same_cubic = len({tuple(up.monic(list(lam.cubic))) for lam in lams if _rational(lam.cubic)}) == 1
    if not all(_rational(lam.cubic) for lam in lams):
        cubics = [up.monic(list(lam.cubic)) for lam in lams]
        same_cubic = all(
            len(cubics[0]) == len(c) and all(is_zero(a - b) for a, b in zip(cubics[0], c)) for c in cubics
        )
        return T3Record(
            tuple(verts), indices, test.sign, tuple(lams), None, None, None, None, same_cubic, orientation,
            "parameters are roots of cubics over an algebraic field; nodes not formed",
        )
    try:
        l12, l23, l31 = _common_field([lam.value for lam in lams])
    except MixedField:
        return T3Record(
            tuple(verts), indices, test.sign, tuple(lams), None, None, None, None, False, orientation,
            "scaffold parameters lie in unrelated cubic fields",
        )
    v1, v2, v3 = verts
    scaffold = (v2 * l23 + v3 * (1 - l23), v3 * l31 + v1 * (1 - l31), v1 * l12 + v2 * (1 - l12))
    bary, params = _node_solve((l12, l23, l31))
    nodes = tuple(v1 * b[0] + v2 * b[1] + v3 * b[2] for b in bary)
    symmetric = same_cubic or (is_zero(l12 - l23) and is_zero(l23 - l31))
    return T3Record(tuple(verts), indices, test.sign, tuple(lams), scaffold, nodes, tuple(bary), tuple(params),
                    symmetric, orientation)


def solve_variant_t3(v: VariantSet, triple) -> T3Record:
    return solve_t3(*v.points(triple), indices=tuple(triple))


# -- node checks -------------------------------------------------------------
@dataclass(frozen=True)
class CheckReport:
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def t3_nodes_checks(t: T3Record) -> CheckReport:
    e = t.vertices
    checks = {}
    bary = t.barycentre()
    checks["barycentre incompatible with every vertex"] = all(not is_compatible(bary, x) for x in e)
    if t.nodes is None:
        return CheckReport(checks)
    n12, n23, n31 = t.nodes
    checks["scaffold points compatible with opposite vertex"] = all(
        is_compatible(s, x) for s, x in zip(t.scaffold, e)
    )
    checks["nodes pairwise compatible"] = all(is_compatible(a, b) for a, b in combinations(t.nodes, 2))
    checks["node compatible with its two vertices"] = all(
        is_compatible(n, e[i]) and is_compatible(n, e[j]) for n, (i, j) in zip(t.nodes, ((0, 1), (1, 2), (2, 0)))
    )
    checks["nodes distinct"] = all(not (a - b).is_zero() for a, b in combinations(t.nodes, 2))
    checks["nodes on both scaffold segments"] = all(0 <= s <= 1 and 0 <= u <= 1 for s, u in t.segment_params)
    checks["scaffold parameters in (0,1)"] = all(0 < lam.value < 1 for lam in t.lambdas)
    return CheckReport(checks)


# -- skeleton ----------------------------------------------------------------
@dataclass(frozen=True)
class Skeleton:
    segments: tuple  # ((vertex, node), ...) one per vertex
    triangle: tuple
    case: str  # "left": segments end at e12, e23, e31; "right": at e31, e12, e23
    sign: int


def t3_skeleton(t: T3Record) -> Skeleton:
    """Segments from each vertex to the far node on its scaffold line, plus the node triangle."""
    if t.nodes is None:
        raise NotT3("skeleton needs exact nodes")
    n12, n23, n31 = t.nodes
    # along [e1, e11]: e12 sits at s of node 12, e31 at t of node 31
    s12 = t.segment_params[0][0]
    s31 = t.segment_params[2][1]
    e1, e2, e3 = t.vertices
    if s12 >= s31:
        case, ends = "left", (n12, n23, n31)
    else:
        case, ends = "right", (n31, n12, n23)
    return Skeleton(tuple(zip((e1, e2, e3), ends)), (n12, n23, n31), case, t.sign)


# -- 3D continuum ------------------------------------------------------------
def continuum_t3(t: T3Record, e0: SymStrain, lam) -> T3Record:
    """The T3 with vertices  lam e0 + (1 - lam) e_i."""
    lam = Fraction(lam)
    if lam == 1:
        raise DegenerateLambda("lambda = 1 collapses the triple onto e0")
    if not 0 <= lam < 1:
        raise ValueError("lambda must lie in [0, 1)")
    if not all(is_compatible(e0, x) for x in t.vertices):
        raise IncompatibleCenter("e0 must be compatible with all three vertices")
    new = [e0 * lam + x * (1 - lam) for x in t.vertices]
    return solve_t3(*new, indices=t.indices)


def continuum_det_scaling(t: T3Record, e0: SymStrain, lam) -> bool:
    """det(e_i^l - e_j^l) == (1 - l)^3 det(e_i - e_j) for all three pairs."""
    lam = Fraction(lam)
    f = (1 - lam) ** 3
    new = [e0 * lam + x * (1 - lam) for x in t.vertices]
    return all(
        is_zero((new[i] - new[j]).det() - f * (t.vertices[i] - t.vertices[j]).det())
        for i, j in ((0, 1), (1, 2), (2, 0))
    )


# -- similarity --------------------------------------------------------------
def _lam(values, i: int, j: int):
    # l_ij for the cyclic pairs; l_ji = 1 - l_ij
    idx = {(0, 1): 0, (1, 2): 1, (2, 0): 2}
    if (i, j) in idx:
        return values[idx[(i, j)]]
    return 1 - values[idx[(j, i)]]


def are_similar(t: T3Record, u: T3Record) -> bool:
    try:
        vals = _common_field(list(t.lambda_values()) + list(u.lambda_values()))
    except MixedField:
        return False
    a, b = vals[:3], vals[3:]
    for sg in permutations(range(3)):
        if all(is_zero(_lam(b, i, j) - _lam(a, sg[i], sg[j])) for i, j in ((0, 1), (1, 2), (2, 0))):
            return True
    return False


# -- dual pairs --------------------------------------------------------------
def dual_triple(triple) -> tuple:
    return tuple(sorted(R0.apply(tuple(triple))))


@dataclass(frozen=True)
class DualPairReport:
    triple: tuple
    dual: tuple
    pairing: tuple  # dual vertices in the order that makes all cyclic shifts compatible
    identities: tuple  # three booleans: determinant vanishes identically
    nodes_pairwise_compatible: bool
    hull_dim: int | None
    certificate: str
    interval_lower_bound: int
    vertex_span_dim: int


def _cyclic_shifts(t: tuple) -> list[tuple]:
    return [t, (t[2], t[0], t[1]), (t[1], t[2], t[0])]


@lru_cache(maxsize=None)
def dual_identity(triple: tuple) -> tuple:
    """Ordering of the dual triple and the three symbolic determinant identities."""
    sv = symbolic_variants()
    x, y, z = (Polynomial.var(n) for n in "xyz")
    a, b, c = triple
    p = sv[a] * x + sv[b] * y + sv[c] * z
    best = None
    for order in permutations(dual_triple(triple)):
        flags = []
        for d1, d2, d3 in _cyclic_shifts(order):
            q = sv[d1] * x + sv[d2] * y + sv[d3] * z
            flags.append((p - q).det().is_zero())
        if all(flags):
            return order, tuple(flags)
        if best is None:
            best = (order, tuple(flags))
    return best


def interval_rank_lower_bound(points: list[SymStrain], target: int, width=Fraction(1, 10**12)) -> int:
    """Largest k <= target such that some k x k minor of the difference matrix
    has an interval determinant excluding zero."""
    base = points[0]
    rows = [list((p - base).entries) for p in points[1:]]
    exact_rows = rows
    for k in range(min(target, len(rows)), 0, -1):
        for rs in combinations(range(len(rows)), k):
            for cs in combinations(range(6), k):
                sub = [[exact_rows[r][c] for c in cs] for r in rs]
                if rank(sub) < k:
                    continue
                w = Fraction(width)
                for _ in range(8):
                    m = [[enclose(x, w) for x in row] for row in sub]
                    if excludes_zero(idet(m)):
                        return k
                    w /= 2**16
        # no certified minor of this size; try smaller
    return 0


def affine_rank_exact(points: list[SymStrain]) -> int:
    base = points[0]
    r = IncrementalRank()
    for p in points[1:]:
        r.add(list((p - base).entries))
    return r.rank


def dual_pair_identities(v: VariantSet, triple) -> DualPairReport:
    triple = tuple(sorted(triple))
    dual = dual_triple(triple)
    pairing, flags = dual_identity(triple)
    t = solve_variant_t3(v, triple)
    u = solve_variant_t3(v, dual)
    verts = v.points(triple + dual)
    vspan = affine_rank_exact(verts)
    try:
        fld = next((x.field for x in t.lambda_values() if isinstance(x, AlgebraicScalar)), None)
        if fld is not None:
            u_nodes = [n.map(lambda x: embed(x, fld)) for n in u.nodes]
        else:
            u_nodes = list(u.nodes)
        nodes = list(t.nodes) + u_nodes
        compat = all(is_compatible(a, b) for a, b in combinations(nodes, 2))
        dim = affine_rank_exact(nodes)
        cert = "exact"
    except MixedField:
        nodes = list(t.nodes) + list(u.nodes)
        compat = all(
            is_compatible(a, b) for a, b in combinations(t.nodes, 2)
        ) and all(is_compatible(a, b) for a, b in combinations(u.nodes, 2))
        dim = None
        cert = "interval lower bound, vertex-span upper bound"
    lower = interval_rank_lower_bound(nodes if dim is not None else list(t.nodes) + list(u.nodes), 4)
    if dim is None and lower == vspan:
        dim = lower
    return DualPairReport(triple, dual, pairing, flags, compat, dim, cert, lower, vspan)


# -- level-2 T3s -------------------------------------------------------------
def neighbours(v: VariantSet, triple) -> list[tuple]:
    """Triples adjacent to ``triple`` on the cube: images under quarter turns."""
    s = frozenset(triple)
    gens = generators()
    out = set()
    for name in ("r1", "r2", "r3"):
        g = gens[name]
        for p in (g, g.inverse()):
            img = p.apply(s)
            if img != s:
                out.add(tuple(sorted(img)))
    if len(out) != 3:
        raise AssertionError(f"expected three cube neighbours of {triple}, got {sorted(out)}")
    return sorted(out)


def diagonal_rotation(triple, first_neighbour) -> Permutation:
    """Order-3 rotation fixing ``triple`` and its dual; the one sending the
    smallest vertex of ``first_neighbour`` to the smaller index."""
    s, d = frozenset(triple), frozenset(dual_triple(triple))
    cands = [
        p for p in s4().elements
        if not p.is_identity() and (p * p * p).is_identity() and p.apply(s) == s and p.apply(d) == d
    ]
    if len(cands) != 2:
        raise AssertionError(f"expected two diagonal rotations, found {len(cands)}")
    a = min(first_neighbour)
    return min(cands, key=lambda p: p(a))


@dataclass(frozen=True)
class Level2Setup:
    triple: tuple
    neighbours: tuple  # tau_1, tau_2, tau_3 as ordered vertex tuples (tau_k = r^(k-1) tau_1)
    rotation: Permutation


def level2_setup(v: VariantSet, triple) -> Level2Setup:
    triple = tuple(sorted(triple))
    tau1 = neighbours(v, triple)[0]
    r = diagonal_rotation(triple, tau1)
    t2 = r.apply(tau1)
    t3 = r.apply(t2)
    if {frozenset(tau1), frozenset(t2), frozenset(t3)} != set(map(frozenset, neighbours(v, triple))):
        raise AssertionError("rotation does not cycle the neighbours")
    return Level2Setup(triple, (tau1, t2, t3), r)


@dataclass(frozen=True)
class Level2Result:
    triple: tuple
    neighbour: tuple
    rotation: tuple
    xyz: tuple
    combos: tuple  # (n1, r n1, r^2 n1) as {variant: coefficient}
    chain_identity: bool
    common_det: object
    barycentre_incompatible: bool
    record: T3Record | None


@lru_cache(maxsize=None)
def _chain_identity(params, triple, k) -> bool:
    # determinant chain as polynomials in x, y, z (with the given parameters)
    v = build_variants(params, check=False)
    setup = level2_setup(v, triple)
    x, y, z = (Polynomial.var(n) for n in "xyz")
    base = setup.neighbours[k - 1]
    combos = _orbit_combos(setup.rotation, {base[0]: x, base[1]: y, base[2]: z})
    pts = [combo_strain(v, c) for c in combos]
    d = [(pts[0] - pts[1]).det(), (pts[1] - pts[2]).det(), (pts[2] - pts[0]).det()]
    return d[0] == d[1] == d[2] and not d[0].is_zero()


def _orbit_combos(r: Permutation, combo: dict) -> tuple:
    c1 = permute_combo(r, combo)
    return (combo, c1, permute_combo(r, c1))


def level2_t3(v: VariantSet, triple, k: int, xyz, *, solve: bool = True) -> Level2Result:
    """The triple (n1, r n1, r^2 n1) for n1 = x e_a + y e_b + z e_c on neighbour k."""
    if k not in (1, 2, 3):
        raise ValueError("neighbour choice must be 1, 2 or 3")
    x, y, z = xyz
    if not is_zero(x + y + z - 1) or any(sign(c) < 0 for c in (x, y, z)):
        raise ValueError("(x, y, z) must lie on the closed standard simplex")
    setup = level2_setup(v, triple)
    base = setup.neighbours[k - 1]
    combos = _orbit_combos(setup.rotation, {base[0]: x, base[1]: y, base[2]: z})
    pts = [combo_strain(v, c) for c in combos]
    chain = _chain_identity(v.params, setup.triple, k)
    test = is_t3(*pts)
    common = test.dets[0]
    if is_zero(common):
        raise DegenerateT3(f"common determinant vanishes at (x, y, z) = {tuple(map(str, xyz))}")
    bary = (pts[0] + pts[1] + pts[2]) * Fraction(1, 3)
    bary_ok = all(not is_compatible(bary, p) for p in pts)
    record = solve_t3(*pts) if solve else None
    return Level2Result(setup.triple, base, setup.rotation.images, tuple(xyz), combos, chain, common, bary_ok, record)


def node_barycentrics(v: VariantSet, triple) -> list[tuple]:
    """Barycentric coordinates of the three nodes over the ascending vertex order."""
    return list(solve_variant_t3(v, triple).node_barycentric)


def level2_family(v: VariantSet, *, solve: bool = False) -> list[Level2Result]:
    """All level-2 T3s: eight base triples times the three nodes of the first neighbour."""
    out = []
    for triple in enumerate_incompatible_triples(v):
        setup = level2_setup(v, triple)
        for bary in node_barycentrics(v, setup.neighbours[0]):
            out.append(level2_t3(v, triple, 1, bary, solve=solve))
    return out


# -- five-dimensional witness --------------------------------------------------
_PRIMES = (2, 3, 5, 7, 11)


def van_der_corput(k: int, base: int) -> Fraction:
    out, denom = Fraction(0), 1
    while k:
        k, digit = divmod(k, base)
        denom *= base
        out += Fraction(digit, denom)
    return out


def simplex_point(k: int) -> tuple:
    """k-th Halton point mapped to the 5-simplex (six nonnegative rationals summing to 1)."""
    cuts = sorted(van_der_corput(k, p) for p in _PRIMES)
    edges = [Fraction(0)] + cuts + [Fraction(1)]
    return tuple(b - a for a, b in zip(edges, edges[1:]))


@dataclass(frozen=True)
class WitnessReport:
    triple: tuple
    neighbour: tuple
    dual: tuple
    samples: int
    all_t3: bool
    rank: int
    certificate: tuple  # (sample number, power of r) of the six affinely independent points
    boundary_claim: str


def five_dim_witness(v: VariantSet, triple=(3, 8, 11), n: int = 32, *, facets=None) -> WitnessReport:
    """Sample p1 in the hull of the nodes of tau_1 and its dual; certify T3s and rank 5."""
    setup = level2_setup(v, triple)
    tau1 = tuple(sorted(setup.neighbours[0]))
    dual = dual_triple(tau1)
    t = solve_variant_t3(v, tau1)
    u = solve_variant_t3(v, dual)
    fld = next((x.field for x in t.lambda_values() if isinstance(x, AlgebraicScalar)), None)

    def lift(c):
        return embed(c, fld) if fld is not None else c

    node_combos = [dict(zip(tau1, b)) for b in t.node_barycentric]
    node_combos += [{i: lift(c) for i, c in zip(dual, b)} for b in u.node_barycentric]
    r = setup.rotation
    ranker = IncrementalRank()
    base = None
    cert = []
    all_ok = True
    for k in range(1, n + 1):
        mu = simplex_point(k)
        p1 = _add_combos(*zip(mu, node_combos))
        combos = _orbit_combos(r, p1)
        pts = [combo_strain(v, c) for c in combos]
        if not is_t3(*pts):
            all_ok = False
        for power, p in enumerate(pts):
            if base is None:
                base = p
                cert.append((k, power))
            elif ranker.rank < 5 and ranker.add(list((p - base).entries)):
                cert.append((k, power))
    if ranker.rank < 5:
        raise InsufficientSamples(f"affine rank {ranker.rank} after {n} samples")
    claim = "not applicable (regime Ib)"
    if v.params.regime in ("Ia", "boundary"):
        claim = "applicable"
        if facets is not None:
            s = frozenset(tau1 + dual)
            claim = "contained in a facet" if any(s <= f.vertices for f in facets) else "NOT in any facet"
    return WitnessReport(setup.triple, tau1, dual, n, all_ok, ranker.rank + 0, tuple(cert), claim)
