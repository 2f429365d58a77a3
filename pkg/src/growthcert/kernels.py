"""Facade over the compiled and fallback kernel implementations.

Importing this module binds the kernel names to the backend chosen in
:mod:`growthcert._backend` (numba-compiled when available and not disabled
via ``GROWTHCERT_DISABLE_NUMBA``, pure numpy otherwise).  Both
implementations share signatures, algorithms and status codes, so callers
never branch on the backend.
"""

from __future__ import annotations

from . import _backend
from . import _kernels_numpy as _numpy_impl

if _backend.BACKEND == "numba":
    from . import _kernels_numba as _impl
else:  # pragma: no cover - numpy fallback, exercised via env flag
    _impl = _numpy_impl

jacobi_eigh = _impl.jacobi_eigh
eliminate_packed = _impl.eliminate_packed
lu_determinant = _impl.lu_determinant
schur_complement_dense = _impl.schur_complement_dense
cholesky_lower = _impl.cholesky_lower


def backend_name() -> str:
    """Name of the active kernel backend: ``"numba"`` or ``"numpy"``."""
    return _backend.BACKEND
