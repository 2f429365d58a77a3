"""Gaussian elimination without pivoting, growth factors, and the
determinant-ratio oracle for active diagonal entries.

Stage ``k`` (one-based) leaves the trailing ``(n-k) x (n-k)`` active matrix,
which equals the Schur complement of the leading ``k x k`` block.  The
growth factor is the post-elimination convention: the largest active entry
modulus over stages ``1 .. n-1`` divided by the largest original entry
modulus — the original matrix itself (stage 0) is excluded from the
maximum, so the growth factor of a diagonal matrix can be below one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from . import kernels
from .errors import DimensionMismatch, DomainError, SingularLeadingBlock, ZeroPivot
from .linalg import determinant
from .matrix import ComplexDenseMatrix, as_complex_array
from .tolerances import PIVOT_TOL_FACTOR

__all__ = [
    "EliminationTrace",
    "GrowthReport",
    "eliminate_no_pivot",
    "growth_report",
    "active_diagonal_oracle",
]


@dataclass(frozen=True)
class EliminationTrace:
    """Record of a pivotless elimination sweep.

    ``actives[k-1]`` is the active matrix after stage ``k`` (dimension
    ``(n-k) x (n-k)``), ``stage_max[k-1]`` its largest entry modulus, and
    ``pivot_moduli[k-1]`` the modulus of the pivot consumed by stage ``k``.
    """

    original: ComplexDenseMatrix
    actives: tuple[ComplexDenseMatrix, ...]
    stage_max: tuple[float, ...]
    pivot_moduli: tuple[float, ...]


@dataclass(frozen=True)
class GrowthReport:
    """Stage-wise and overall growth factors of one elimination.

    ``rho`` maximizes ``rho_stage`` over stages ``1 .. n-1`` only;
    ``rho_including_initial`` is the ``max(1, rho)`` variant that also
    counts the original matrix, exposed for convention comparisons.
    ``argmax_stage`` is the one-based stage attaining ``rho``.
    """

    M0: float
    rho_stage: tuple[float, ...]
    rho: float
    argmax_stage: int
    rho_including_initial: float


def eliminate_no_pivot(A: Any) -> EliminationTrace:
    """Run pivotless Gaussian elimination, recording every active matrix.

    Applies the outer-product update ``a_ij -= a_ik a_kj / a_kk`` for
    stages ``1 .. n-1``.

    Raises
    ------
    ZeroPivot
        When a pivot modulus is at or below the pivot threshold (1e-13
        relative to the largest initial entry modulus); the attached
        ``stage`` is the one-based failing stage.
    DimensionMismatch
        If the matrix is not square or has ``n < 2``.
    """
    a = as_complex_array(A, square=True)
    n = a.shape[0]
    if n < 2:
        raise DimensionMismatch("elimination needs a matrix of dimension at least 2")
    original = ComplexDenseMatrix(a)
    pivot_tol = PIVOT_TOL_FACTOR * float(np.abs(a).max())
    packed, stage_max, pivot_moduli, fail_stage = kernels.eliminate_packed(a, pivot_tol)
    if fail_stage != 0:
        raise ZeroPivot(fail_stage)
    actives = []
    pos = 0
    for k in range(1, n):
        size = n - k
        block = packed[pos : pos + size * size].reshape(size, size)
        pos += size * size
        actives.append(ComplexDenseMatrix(block))
    return EliminationTrace(
        original=original,
        actives=tuple(actives),
        stage_max=tuple(float(v) for v in stage_max),
        pivot_moduli=tuple(float(v) for v in pivot_moduli),
    )


def growth_report(trace: EliminationTrace) -> GrowthReport:
    """Growth factors of a recorded elimination.

    ``rho_stage[k-1]`` is the stage-``k`` ratio (largest active entry
    modulus over the largest original entry modulus); ``rho`` is their
    maximum over stages ``1 .. n-1``.
    """
    m0 = float(np.abs(trace.original.array).max())
    rho_stage = tuple(v / m0 for v in trace.stage_max)
    argmax = max(range(len(rho_stage)), key=rho_stage.__getitem__)
    rho = rho_stage[argmax]
    return GrowthReport(
        M0=m0,
        rho_stage=rho_stage,
        rho=rho,
        argmax_stage=argmax + 1,
        rho_including_initial=max(1.0, rho),
    )


def active_diagonal_oracle(A: Any, k: int, j: int) -> complex:
    """Independent value of the stage-``k`` active diagonal entry ``(j, j)``.

    Evaluates the determinant ratio
    ``det A[{1..k, j}, {1..k, j}] / det A[{1..k}, {1..k}]`` with row-pivoted
    determinants — an oracle for the elimination trace that shares no code
    with the update sweep.

    Parameters
    ----------
    A : matrix-like
    k : int
        Stage, ``1 <= k < n``.
    j : int
        One-based original row/column index, ``k < j <= n``.

    Raises
    ------
    SingularLeadingBlock
        If the leading ``k x k`` determinant vanishes.
    DomainError
        If ``k`` or ``j`` is out of range.
    """
    a = as_complex_array(A, square=True)
    n = a.shape[0]
    if not 1 <= k < n:
        raise DomainError(f"stage must satisfy 1 <= k < {n}, got {k}")
    if not k < j <= n:
        raise DomainError(f"index must satisfy {k} < j <= {n}, got {j}")
    idx = list(range(k)) + [j - 1]
    top = determinant(a[np.ix_(idx, idx)])
    bottom = determinant(a[:k, :k])
    if bottom == 0:
        raise SingularLeadingBlock(f"leading {k}x{k} block has zero determinant")
    return top / bottom
