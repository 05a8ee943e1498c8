"""Kernel selection: compiled sweep when available, pure Python otherwise.

Set PSEUDOLINE_PURE=1 to force the pure kernel (used by the test suite and
the benchmark to compare both).
"""

import os

from . import _sweep_py

if os.environ.get("PSEUDOLINE_PURE") == "1":
    _impl = _sweep_py
else:
    try:
        from . import _sweep_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _sweep_py

KERNEL = "compiled" if _impl is not _sweep_py else "pure"

SweepResult = _sweep_py.SweepResult


def sweep_arrays(n, swaps):
    return _impl.sweep_arrays(n, swaps)


def census_sides(n, swaps):
    return _impl.census_sides(n, swaps)
