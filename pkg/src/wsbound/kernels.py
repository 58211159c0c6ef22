"""Kernel backend selection.

Imports the compiled Cython kernels when the extension was built,
otherwise the pure-Python twins.  Both expose the same functions with
identical semantics; `BACKEND` records which one is active so callers
(and the benchmark) can report it.
"""

from __future__ import annotations

try:
    from . import _kernels_cy as _impl

    BACKEND = "cython"
except ImportError:  # extension not built on this install
    from . import _kernels_py as _impl

    BACKEND = "python"

sturm_count = _impl.sturm_count
tridiag_solve = _impl.tridiag_solve
default_pivmin = _impl.default_pivmin

__all__ = ["BACKEND", "sturm_count", "tridiag_solve", "default_pivmin"]
