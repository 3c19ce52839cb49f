"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``WITTENLAB_PURE_PYTHON=1`` to force the fallback.
"""

import os
from array import array

from . import _kernel_py

try:
    from . import _kernel as _compiled
except ImportError:  # extension not built
    _compiled = None

_INT64_MAX = 2**63 - 1

BACKEND = "compiled" if _compiled is not None and not os.environ.get("WITTENLAB_PURE_PYTHON") else "python"


def evolve(next_state, n_trans, counts, steps, backend=None):
    """Count walks of length <= steps through the transposition state graph.

    Returns a list of per-state count sequences, one per step. The compiled
    path uses int64 and is skipped when the walk count could overflow.
    """
    backend = backend or BACKEND
    if backend == "compiled" and _compiled is not None and sum(counts) * max(n_trans, 1) ** steps <= _INT64_MAX:
        table = array("q", next_state)
        return [list(row) for row in _compiled.evolve(table, n_trans, counts, steps)]
    if backend not in ("compiled", "python"):
        raise ValueError(f"unknown kernel backend {backend!r}")
    return _kernel_py.evolve(next_state, n_trans, counts, steps)


def compiled_available() -> bool:
    return _compiled is not None
