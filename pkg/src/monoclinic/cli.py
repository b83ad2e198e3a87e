"""Command-line front end.

    monoclinic compat --material NiTi --format json
    monoclinic facets --params 0.0243,-0.0437,1/20,1/20
    monoclinic t3 lambdas --material CuZr
    monoclinic verify
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateParams, FlatPolytope, InvalidParams, MonoclinicError, UnknownMaterial
from .exact.scalars import parse_rational
from .polytope import enumerate_facets
from .report import DEFAULT_WIDTH, Table, approx, interval_str, render
from .strain import COMPONENTS
from .symmetry import (
    compatible_pairs,
    generators,
    incompatible_pairs,
    incompatible_triples,
    is_symmetry,
    is_tuple_symmetry,
    orbits,
    r0_is_linear,
    r0_matches_epsilon_flip,
    s4,
    s4xc2,
)
from .t3 import (
    PAIR_LABELS,
    dual_triple,
    enumerate_incompatible_triples,
    five_dim_witness,
    is_t3,
    level2_family,
    solve_variant_t3,
    t3_nodes_checks,
)
from .variants import (
    INDICES,
    LatticeParams,
    build_variants,
    compatibility_table,
    distance_table,
    functional_extremisers,
    functionals,
    material,
    material_names,
)
from .verify import FAIL, Claim, run_verify

SYMBOLIC_DEFAULT = {"variants", "compat", "distances", "symmetry"}
T3_SUBCOMMANDS = ("list", "lambdas", "nodes", "level2", "witness")


@dataclass(frozen=True)
class RunConfig:
    command: str
    params: LatticeParams
    fmt: str = "text"
    width: Fraction = DEFAULT_WIDTH
    samples: int = 32
    seed: str = "halton"
    sub: str | None = None
    check: str | None = None

    def __post_init__(self):
        if self.width <= 0:
            raise InvalidParams("--width must be positive")
        if self.samples < 1:
            raise InvalidParams("--samples must be at least 1")


def parse_params(text: str) -> LatticeParams:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise InvalidParams("--params needs four values alpha,beta,delta,epsilon")
    try:
        return LatticeParams.from_strings(*parts, name="custom")
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParams(f"cannot parse --params {text!r}: {exc}") from None


def resolve_params(command: str, material_name: str | None, params: str | None) -> LatticeParams:
    if material_name and params:
        raise InvalidParams("give either --material or --params, not both")
    if material_name:
        return material(material_name)
    if params:
        return parse_params(params)
    if command in SYMBOLIC_DEFAULT:
        return LatticeParams.symbolic()
    return material("NiTi")


def _params_cells(p: LatticeParams) -> dict:
    out = {"name": p.name}
    out.update({k: str(v) for k, v in p.as_dict().items()})
    return out


def _table(cfg: RunConfig, title: str, columns: list) -> Table:
    return Table(cfg.command if cfg.sub is None else f"{cfg.command} {cfg.sub}", title, columns,
                 params=_params_cells(cfg.params))


def _variants(cfg: RunConfig):
    return build_variants(cfg.params)


def _require_numeric(cfg: RunConfig):
    if not cfg.params.is_numeric:
        raise InvalidParams(f"{cfg.command} needs numeric lattice parameters")


# -- tables ------------------------------------------------------------------
def cmd_variants(cfg: RunConfig) -> Table:
    v = _variants(cfg)
    t = _table(cfg, "Transformation strains", ["variant"] + [f"e{c}" for c in COMPONENTS] + ["trace"])
    for i in INDICES:
        e = v[i]
        t.add(variant=i, trace=str(e.trace()), **{f"e{c}": str(x) for c, x in zip(COMPONENTS, e.entries)})
    t.meta["trace 2alpha+beta"] = str(v.trace)
    return t


def cmd_compat(cfg: RunConfig) -> Table:
    v = _variants(cfg)
    table = compatibility_table(v)
    t = _table(cfg, "Compatibility: det(e(j) - e(i))", ["variant", "zero", "plus", "minus"])
    for i in INDICES:
        row = table[i]
        t.add(variant=i, zero=sorted(row.zero), plus=sorted(row.plus), minus=sorted(row.minus))
    p = v.params
    t.meta["plus value"] = str(4 * p.epsilon * p.degeneracy)
    t.meta["degenerate"] = table.degenerate
    t.notes.append("plus/minus hold j with det(e(j) - e(i)) = +4eps D / -4eps D, D = (alpha-beta)delta+eps^2-delta^2")
    return t


def cmd_distances(cfg: RunConfig) -> Table:
    v = _variants(cfg)
    t = _table(cfg, "Squared distances |e(i) - e(j)|^2", ["i", "j", "compatible", "class", "value"])
    for (i, j), entry in sorted(distance_table(v).items()):
        t.add(i=i, j=j, compatible=v.is_compatible(i, j), **{"class": entry.label, "value": str(entry.value)})
    return t


def cmd_symmetry(cfg: RunConfig) -> Table:
    v = _variants(cfg)
    gens = generators()
    names = ["r1", "r2", "r3", "r0"] if cfg.check is None else [cfg.check]
    for n in names:
        if n not in gens:
            raise InvalidParams(f"unknown generator {n!r}; choose from r0, r1, r2, r3")
    cols = ["generator", "images", "symmetry of E", "compatible pairs", "incompatible pairs", "incompatible triples"]
    t = _table(cfg, "Index permutations and symmetry checks", cols)
    fams = {
        "compatible pairs": compatible_pairs(v),
        "incompatible pairs": incompatible_pairs(v),
        "incompatible triples": incompatible_triples(v),
    }
    for n in names:
        p = gens[n]
        row = {"generator": n, "images": list(p.images), "symmetry of E": is_symmetry(p, v)}
        for k, fam in fams.items():
            row[k] = is_tuple_symmetry(p, fam, v)
        t.add(**row)
    t.meta["checked"] = "as polynomial identities" if not v.params.is_numeric else "at the given parameters"
    t.meta["order <r1,r2,r3>"] = s4().order
    t.meta["order <r0,r1,r2,r3>"] = s4xc2().order
    t.meta["rotation orbits on compatible pairs"] = len(orbits(fams["compatible pairs"], s4()))
    if "r0" in names:
        t.meta["r0 acts as eps -> -eps"] = r0_matches_epsilon_flip(v)
        t.meta["r0 induced by a linear map"] = r0_is_linear(v)
    return t


def cmd_functionals(cfg: RunConfig) -> Table:
    _require_numeric(cfg)
    v = _variants(cfg)
    t = _table(cfg, "Linear functionals on the variants", ["functional", "coefficients", "values", "minimisers", "maximisers"])
    for name, h in functionals().items():
        lo, hi = functional_extremisers(v, h)
        t.add(functional=name, coefficients=[str(Fraction(c)) for c in h.coeffs],
              values=[str(h(v[i])) for i in INDICES], minimisers=sorted(lo), maximisers=sorted(hi))
    t.meta["regime"] = v.params.regime
    t.notes.append("coefficients act on the entries (11, 22, 33, 12, 13, 23)")
    return t


REGIME_BANNER = {"Ia": "eps < delta (monoclinic-Ia)", "boundary": "eps = delta", "Ib": "eps > delta (monoclinic-Ib)"}


def cmd_facets(cfg: RunConfig) -> Table:
    _require_numeric(cfg)
    v = _variants(cfg)
    report = enumerate_facets(v)
    t = _table(cfg, "Facets of the convex hull of the variants", ["group", "vertices", "normal", "offset"])
    for f in report:
        t.add(group=f.group, vertices=f.sorted_vertices(), normal=f.normal, offset=str(f.offset))
    t.meta["regime"] = REGIME_BANNER[v.params.regime]
    t.meta["facets"] = len(report)
    t.meta["groups"] = [f"{g} {len(fs)}" for g, fs in report.by_group().items()]
    t.meta["5-subsets"] = report.n_subsets
    t.meta["affinely independent"] = report.n_independent
    t.meta["supporting"] = report.n_supporting
    t.notes.append("normals are outward, primitive, trace-free; <n, e> = offset on the facet and < offset elsewhere")
    return t


def _lambda_cells(lam, width) -> dict:
    x = lam.value if lam.value is not None else lam.enclosure(width / 4)
    return {"lambda": approx(x, width), "interval": interval_str(lam.value if lam.value is not None else lam.enclosure(width), width)}


def cmd_t3(cfg: RunConfig) -> Table:
    _require_numeric(cfg)
    v = _variants(cfg)
    sub = cfg.sub
    triples = enumerate_incompatible_triples(v)
    if sub == "list":
        t = _table(cfg, "Pairwise incompatible triples", ["triple", "det sign", "dual"])
        for tr in triples:
            t.add(triple=list(tr), **{"det sign": is_t3(*v.points(tr)).sign, "dual": list(dual_triple(tr))})
        return t
    if sub == "lambdas":
        t = _table(cfg, "Scaffold parameters", ["triple", "pair", "lambda", "interval"])
        for tr in triples:
            rec = solve_variant_t3(v, tr)
            for lam in rec.lambdas:
                t.add(triple=list(tr), pair=lam.pair, **_lambda_cells(lam, cfg.width))
        t.meta["orientation"] = "vertices in ascending index order; lambda_ji = 1 - lambda_ij"
        t.meta["(alpha-beta)delta+eps^2-delta^2"] = approx(v.params.degeneracy, Fraction(1, 10**4))
        return t
    if sub == "nodes":
        t = _table(cfg, "Nodes in barycentric coordinates", ["triple", "node", "barycentric", "checks passed"])
        for tr in triples:
            rec = solve_variant_t3(v, tr)
            ok = t3_nodes_checks(rec).passed
            for label, bary in zip(PAIR_LABELS, rec.node_barycentric):
                t.add(triple=list(tr), node=label, barycentric=[approx(b, cfg.width) for b in bary],
                      **{"checks passed": ok})
        return t
    if sub == "level2":
        cols = ["triple", "neighbour", "xyz", "chain identity", "barycentre incompatible", "symmetric", "lambda", "interval"]
        t = _table(cfg, "Level-2 T3s from the nodes of the first neighbour", cols)
        for r in level2_family(v, solve=True):
            lam = r.record.lambdas[0]
            t.add(triple=list(r.triple), neighbour=list(r.neighbour), xyz=[approx(c, cfg.width) for c in r.xyz],
                  symmetric=r.record.is_symmetric, **{"chain identity": r.chain_identity,
                  "barycentre incompatible": r.barycentre_incompatible}, **_lambda_cells(lam, cfg.width))
        t.meta["count"] = len(t.rows)
        return t
    if sub == "witness":
        facets = enumerate_facets(v).facets if v.params.regime in ("Ia", "boundary") else None
        w = five_dim_witness(v, n=cfg.samples, facets=facets)
        cols = ["triple", "neighbour", "dual", "samples", "all T3", "rank", "certificate"]
        t = _table(cfg, "Five-dimensional witness", cols)
        t.add(triple=list(w.triple), neighbour=list(w.neighbour), dual=list(w.dual), samples=w.samples,
              rank=w.rank, certificate=[f"{k}:r^{p}" for k, p in w.certificate], **{"all T3": w.all_t3})
        t.meta["sampling"] = f"{cfg.seed} points on the 5-simplex (deterministic)"
        t.meta["boundary claim"] = w.boundary_claim
        t.notes.append("certificate entries k:r^p name the p-th rotation image of sample k")
        return t
    raise InvalidParams(f"unknown t3 subcommand {sub!r}")


def cmd_verify(cfg: RunConfig) -> tuple[Table, int]:
    led = run_verify(cfg.params, samples=cfg.samples)
    t = _table(cfg, "Verification ledger", ["status", "claim", "detail"])
    for c in led.claims:
        t.add(status=c.status, claim=c.name, detail=c.detail)
    t.meta["failures"] = sum(1 for c in led.claims if c.status == FAIL)
    return t, (1 if led.failed else 0)


COMMANDS = {
    "variants": cmd_variants,
    "compat": cmd_compat,
    "distances": cmd_distances,
    "symmetry": cmd_symmetry,
    "functionals": cmd_functionals,
    "facets": cmd_facets,
    "t3": cmd_t3,
}


# -- argument parsing --------------------------------------------------------
def _common(p: argparse.ArgumentParser):
    p.add_argument("--material", help=f"registered material ({', '.join(material_names())})")
    p.add_argument("--params", help="alpha,beta,delta,epsilon as decimals or a/b rationals")
    p.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    p.add_argument("--width", default=str(DEFAULT_WIDTH), help="width of reported isolating intervals (default 1/10^9)")
    p.add_argument("--samples", type=int, default=32, help="sample budget for the 5D witness")
    p.add_argument("--seed", default="halton", help="label recorded for the deterministic sampler")
    p.add_argument("--out", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monoclinic", description="Exact tables for monoclinic-I martensite.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("variants", "compat", "distances", "functionals", "facets", "verify"):
        _common(sub.add_parser(name))
    sym = sub.add_parser("symmetry")
    _common(sym)
    sym.add_argument("--check", choices=("r0", "r1", "r2", "r3"), help="report a single generator")
    t3 = sub.add_parser("t3")
    t3.add_argument("sub", choices=T3_SUBCOMMANDS)
    _common(t3)
    return parser


def config_from_args(args) -> RunConfig:
    params = resolve_params(args.command, args.material, args.params)
    try:
        width = parse_rational(args.width)
    except (ValueError, ZeroDivisionError):
        raise InvalidParams(f"cannot parse --width {args.width!r}") from None
    return RunConfig(args.command, params, args.fmt, width, args.samples, args.seed,
                     getattr(args, "sub", None), getattr(args, "check", None))


def run(cfg: RunConfig) -> tuple[str, int]:
    """Rendered output and exit code for a configuration."""
    if cfg.command == "verify":
        table, code = cmd_verify(cfg)
        if cfg.fmt == "text":
            lines = [f"verification ledger for {cfg.params.name}"]
            lines += [Claim(r["claim"], r["status"], r["detail"]).line() for r in table.rows]
            lines.append(f"{'FAILED' if code else 'OK'}: {table.meta['failures']} failure(s)")
            return "\n".join(lines) + "\n", code
        return render(table, cfg.fmt), code
    return render(COMMANDS[cfg.command](cfg), cfg.fmt), 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        text, code = run(cfg)
    except UnknownMaterial as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    except InvalidParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FlatPolytope as exc:
        print(f"error: {exc}; with alpha = beta the variants span a 3-dimensional polytope", file=sys.stderr)
        return 1
    except DegenerateParams as exc:
        print(f"error: {exc}; (alpha-beta)delta+eps^2-delta^2 = 0, so the lamination and convex hulls agree",
              file=sys.stderr)
        return 1
    except MonoclinicError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
