"""The dense complex matrix carrier used by every module.

:class:`ComplexDenseMatrix` is a thin immutable wrapper around a C-contiguous
``complex128`` array.  It validates shape and finiteness once at construction
so downstream numerics never have to re-check.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from .errors import DimensionMismatch, DomainError

__all__ = ["ComplexDenseMatrix", "as_complex_array"]


class ComplexDenseMatrix:
    """Immutable dense complex matrix.

    Parameters
    ----------
    entries : array-like
        Anything :func:`numpy.asarray` accepts that yields a two-dimensional
        array.  Values are converted to ``complex128``.

    Raises
    ------
    DimensionMismatch
        If the input is not two-dimensional or has an empty axis.
    DomainError
        If any entry is NaN or infinite.
    """

    __slots__ = ("_array",)

    def __init__(self, entries: Any):
        arr = np.array(entries, dtype=np.complex128, order="C", copy=True)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-D array, got ndim={arr.ndim}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DimensionMismatch(f"matrix axes must be nonempty, got shape {arr.shape}")
        if not np.all(np.isfinite(arr.view(np.float64))):
            raise DomainError("matrix entries must be finite")
        arr.setflags(write=False)
        self._array = arr

    @property
    def rows(self) -> int:
        return self._array.shape[0]

    @property
    def cols(self) -> int:
        return self._array.shape[1]

    @property
    def is_square(self) -> bool:
        return self._array.shape[0] == self._array.shape[1]

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the underlying ``complex128`` array."""
        return self._array

    def to_array(self) -> np.ndarray:
        """Writable copy of the underlying array."""
        return self._array.copy()

    def __array__(self, dtype=None, copy=None) -> np.ndarray:
        if dtype is None:
            return self._array.copy()
        return self._array.astype(dtype)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ComplexDenseMatrix):
            return bool(np.array_equal(self._array, other._array))
        return NotImplemented

    __hash__ = None  # mutable-free but array equality makes hashing error-prone

    def __repr__(self) -> str:
        return f"ComplexDenseMatrix(rows={self.rows}, cols={self.cols})"


def as_complex_array(value: Any, *, square: bool = False) -> np.ndarray:
    """Coerce supported matrix carriers to a ``complex128`` ndarray.

    Accepts :class:`ComplexDenseMatrix`, objects exposing a ``matrix``
    attribute (the validated class wrappers), ndarrays and nested sequences.
    The returned array is a fresh writable C-contiguous copy.
    """
    if isinstance(value, ComplexDenseMatrix):
        arr = value.to_array()
    else:
        inner = getattr(value, "matrix", None)
        if inner is not None and not callable(inner):
            return as_complex_array(inner, square=square)
        arr = np.array(value, dtype=np.complex128, order="C", copy=True)
    if arr.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D array, got ndim={arr.ndim}")
    if square and arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {arr.shape}")
    return arr
