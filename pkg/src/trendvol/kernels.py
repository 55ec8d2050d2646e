"""Kernel backend selection.

The per-sample window fits reduce to dot products of fixed weight vectors
with every trailing window of the data — the one hot loop in the package.
Two interchangeable implementations exist: a compiled extension
(``trendvol._native``, built from Cython) and a pure-NumPy fallback.
The compiled kernel is preferred when importable.

Set ``TRENDVOL_KERNEL=python`` to force the fallback or
``TRENDVOL_KERNEL=native`` to require the extension (raising if it is
missing). ``benchmarks/bench_kernels.py`` compares the two.
"""
import os

from . import _fallback
from .errors import InvalidParameter


def _select():
    choice = os.environ.get("TRENDVOL_KERNEL", "auto").strip().lower() or "auto"
    if choice not in ("auto", "native", "python"):
        raise InvalidParameter(
            f"TRENDVOL_KERNEL must be auto, native or python, got {choice!r}")
    if choice == "python":
        return _fallback.sliding_dot, "python"
    try:
        from . import _native
    except ImportError:
        if choice == "native":
            raise
        return _fallback.sliding_dot, "python"
    return _native.sliding_dot, "native"


sliding_dot, BACKEND = _select()
