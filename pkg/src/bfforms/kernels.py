"""Sweep-kernel selection: compiled extension if available, else pure Python.

Set ``BFFORMS_PURE=1`` to force the pure-Python kernels even when the
compiled extension is installed.  Both backends implement identical
semantics and produce identical counts; ``BACKEND`` names the active one.
"""

import os

if os.environ.get("BFFORMS_PURE") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
analyze_counts = _impl.analyze_counts
analyze_batch = _impl.analyze_batch
min_sop_counts = _impl.min_sop_counts
rm_minima = _impl.rm_minima
arith_minima = _impl.arith_minima
sweep_counts = _impl.sweep_counts
