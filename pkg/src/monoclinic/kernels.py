"""Backend selection for the facet-scan kernel.

The compiled extension is used when it imported and the coordinates are
small enough for its 128-bit arithmetic; otherwise the pure-Python twin runs.
Set ``MONOCLINIC_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    if os.environ.get("MONOCLINIC_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

# |normal| <= 5! B^4 and each hyperplane value sums 6 products with 2B, so
# 1440 B^5 must stay below 2^126.
C_COORD_LIMIT = 8_000_000


def resolve_backend(points, backend: str | None = None) -> str:
    """The backend that will actually run for ``points``."""
    backend = backend or BACKEND
    if backend not in ("cython", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not available")
        if max(abs(x) for row in points for x in row) > C_COORD_LIMIT // 2:
            return "python"
    return backend


def scan_facets(points, *, backend: str | None = None):
    """Dispatch to the chosen backend; see ``_kernels_py.scan_facets``."""
    if resolve_backend(points, backend) == "cython":
        return _compiled.scan_facets(points, len(points), 5)
    return _kernels_py.scan_facets(points, len(points), 5)
