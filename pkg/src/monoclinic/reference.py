"""Published reference tables shipped with the package (read-only)."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .variants import LatticeParams


@lru_cache(maxsize=None)
def reference() -> dict:
    return json.loads(resources.files("monoclinic.data").joinpath("reference.json").read_text())


def synthetic(regime: str) -> LatticeParams:
    """Synthetic parameters for the ``"boundary"`` (eps = delta) or ``"Ib"`` regime."""
    row = reference()["synthetic_params"][regime]
    return LatticeParams.from_strings(row["alpha"], row["beta"], row["delta"], row["epsilon"], name=f"synthetic-{regime}")


def facet_sets(regime: str) -> dict[str, set[frozenset]]:
    return {g: {frozenset(f) for f in fs} for g, fs in reference()["facets"][regime].items()}
