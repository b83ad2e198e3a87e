"""Tables and their text, JSON and CSV renderings.

Every command produces one :class:`Table`.  Cells hold exact values; the
renderers turn them into strings (text, CSV) or JSON scalars and arrays.
Algebraic numbers become a decimal at the configured width, with the
isolating interval kept in a sibling column by the caller.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .exact.algebraic import AlgebraicScalar
from .exact.roots import Interval
from .strain import SymStrain

SCHEMA_VERSION = 1
DEFAULT_WIDTH = Fraction(1, 10**9)


@dataclass
class Table:
    command: str
    title: str
    columns: list
    rows: list = field(default_factory=list)  # dicts keyed by column name
    meta: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    params: dict = field(default_factory=dict)

    def add(self, **row):
        missing = set(self.columns) - set(row)
        if missing:
            raise KeyError(f"row lacks columns {sorted(missing)}")
        self.rows.append(row)


def digits_for(width) -> int:
    """Decimal places that resolve ``width``."""
    w = Fraction(width)
    if w <= 0:
        raise ValueError("width must be positive")
    k = 1
    while Fraction(1, 10**k) > w:
        k += 1
    return k


def decimal_str(x: Fraction, places: int) -> str:
    """Round-half-even decimal rendering of an exact rational."""
    q = round(Fraction(x) * 10**places)
    neg = q < 0
    s = str(abs(q)).rjust(places + 1, "0")
    out = f"{s[:-places]}.{s[-places:]}" if places else s
    return "-" + out if neg else out


def approx(x, width=DEFAULT_WIDTH) -> str:
    """Decimal rendering of an exact scalar, good to ``width``."""
    if isinstance(x, AlgebraicScalar):
        x = x.enclosure(Fraction(width) / 4).mid
    elif isinstance(x, Interval):
        x = x.mid
    return decimal_str(Fraction(x), digits_for(width))


def interval_str(x, width=DEFAULT_WIDTH) -> str:
    if isinstance(x, AlgebraicScalar):
        x = x.enclosure(Fraction(width))
    if isinstance(x, Interval):
        return f"[{x.lo}, {x.hi}]"
    return f"[{x}, {x}]"


def cell_json(x):
    """JSON value of a cell."""
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (frozenset, set)):
        return sorted(cell_json(y) for y in x)
    if isinstance(x, (list, tuple)):
        return [cell_json(y) for y in x]
    if isinstance(x, SymStrain):
        return [str(y) for y in x.entries]
    if isinstance(x, AlgebraicScalar):
        return approx(x)
    return str(x)


def cell_text(x) -> str:
    """String form of a JSON cell value, shared by text and CSV output."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, list):
        return " ".join(cell_text(y) for y in x)
    return str(x)


def to_json_obj(t: Table) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": t.command,
        "title": t.title,
        "params": {k: cell_json(v) for k, v in t.params.items()},
        "columns": list(t.columns),
        "rows": [{c: cell_json(r[c]) for c in t.columns} for r in t.rows],
        "meta": {k: cell_json(v) for k, v in t.meta.items()},
        "notes": list(t.notes),
    }


def render_json(t: Table) -> str:
    return json.dumps(to_json_obj(t), indent=2, sort_keys=False) + "\n"


def render_csv(t: Table) -> str:
    obj = to_json_obj(t)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(obj["columns"])
    for row in obj["rows"]:
        w.writerow([cell_text(row[c]) for c in obj["columns"]])
    return buf.getvalue()


def render_text(t: Table) -> str:
    obj = to_json_obj(t)
    lines = [t.title]
    if obj["params"]:
        lines.append("parameters: " + ", ".join(f"{k}={cell_text(v)}" for k, v in obj["params"].items()))
    for k, v in obj["meta"].items():
        lines.append(f"{k}: {cell_text(v)}")
    cols = obj["columns"]
    body = [[cell_text(r[c]) for c in cols] for r in obj["rows"]]
    widths = [max([len(c)] + [len(b[i]) for b in body]) for i, c in enumerate(cols)]
    if cols:
        lines.append("")
        lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
        lines.append("  ".join("-" * w for w in widths))
        for b in body:
            lines.append("  ".join(x.ljust(w) for x, w in zip(b, widths)).rstrip())
    for n in obj["notes"]:
        lines.append(f"note: {n}")
    return "\n".join(lines) + "\n"


RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


def render(t: Table, fmt: str) -> str:
    return RENDERERS[fmt](t)


def load_schema() -> dict:
    return json.loads(resources.files("monoclinic.data").joinpath("report.schema.json").read_text())
