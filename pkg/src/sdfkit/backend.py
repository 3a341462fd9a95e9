"""Kernel backend selection.

The compiled extension is preferred when importable; SDFKIT_PURE=1 forces the
numpy fallback.  Both expose the same two functions with identical results
(see tests/test_backends.py for the differential check).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("SDFKIT_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND_NAME
sdf_scan = _impl.sdf_scan
z_scan = _impl.z_scan


def available_backends():
    """Name -> module for every importable backend (used by the benchmark)."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels  # type: ignore[attr-defined]

        out["cython"] = _kernels
    except ImportError:
        pass
    return out
