"""Kernel selection.

The compiled extension is used when it imports; setting the environment
variable ``RAMONOID_PURE_PYTHON=1`` forces the numpy fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("RAMONOID_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

rref = _impl.rref
nullspace = _impl.nullspace
containment_matrix = _impl.containment_matrix
subgroup_closure = _impl.subgroup_closure

__all__ = ["BACKEND", "rref", "nullspace", "containment_matrix", "subgroup_closure"]
