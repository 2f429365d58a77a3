"""Dense linear-algebra primitives: eigenvalues, factorizations, Schur
complements and Loewner-order tests.

All eigenvalue computations go through the package's cyclic-Jacobi kernel;
complex Hermitian matrices are handled via the real symmetric embedding
``[[X, -Y], [Y, X]]`` whose spectrum doubles that of ``X + iY``.  Every
operation is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from . import kernels
from .errors import (
    ConvergenceError,
    DimensionMismatch,
    DomainError,
    NonHermitianInput,
    NotPositiveDefinite,
    SingularLeadingBlock,
)
from .matrix import ComplexDenseMatrix, as_complex_array
from .tolerances import PD_TOL_FACTOR, PIVOT_TOL_FACTOR, SYMMETRY_TOL

__all__ = [
    "HermitianSpectrum",
    "CongruencePair",
    "hermitian_eigenvalues",
    "condition_number",
    "cholesky",
    "simultaneous_congruence",
    "schur_complement",
    "loewner_geq",
    "determinant",
]


@dataclass(frozen=True)
class HermitianSpectrum:
    """Real eigenvalues of a Hermitian matrix, sorted ascending."""

    eigenvalues: tuple[float, ...]
    min: float
    max: float

    @classmethod
    def from_values(cls, values: np.ndarray) -> "HermitianSpectrum":
        vals = tuple(float(v) for v in values)
        return cls(eigenvalues=vals, min=vals[0], max=vals[-1])


@dataclass(frozen=True)
class CongruencePair:
    """Congruence transform diagonalizing an SPD pair.

    ``transform.T @ P @ transform`` is the identity and
    ``transform.T @ Q @ transform`` is ``diag(diagonal)`` with positive
    entries sorted ascending.
    """

    transform: np.ndarray
    diagonal: np.ndarray


def _max_abs(a: np.ndarray) -> float:
    return float(np.abs(a).max()) if a.size else 0.0


def _hermitian_defect(a: np.ndarray) -> float:
    """Largest entrywise modulus of ``A - A*``."""
    return _max_abs(a - a.conj().T)


def _require_hermitian(a: np.ndarray, what: str = "matrix") -> np.ndarray:
    """Validate the symmetry of ``a`` and return its Hermitian part.

    The Hermitian part ``(A + A*)/2`` is exactly Hermitian in floating
    point and coincides with ``a`` up to the validated defect.
    """
    scale = _max_abs(a)
    defect = _hermitian_defect(a)
    if defect > SYMMETRY_TOL * max(scale, 1e-300):
        raise NonHermitianInput(
            f"{what} is not Hermitian: defect {defect:.3e} exceeds "
            f"{SYMMETRY_TOL:.1e} relative to magnitude {scale:.3e}"
        )
    return (a + a.conj().T) / 2.0


def _jacobi(a: np.ndarray, *, vectors: bool = False):
    """Run the Jacobi kernel on an exactly symmetric float64 array."""
    w, v, status = kernels.jacobi_eigh(np.ascontiguousarray(a, dtype=np.float64))
    if status != 0:
        raise ConvergenceError("Jacobi eigensolver did not converge within its sweep budget")
    return (w, v) if vectors else w


def _eigvalsh(h: np.ndarray) -> np.ndarray:
    """Eigenvalues of an exactly Hermitian complex array, ascending.

    Real-symmetric inputs use the Jacobi kernel directly; genuinely complex
    ones go through the doubled real symmetric embedding, whose sorted
    spectrum contains each eigenvalue twice.
    """
    x = np.ascontiguousarray(h.real)
    y = h.imag
    if not y.any():
        return _jacobi(x)
    m = np.block([[x, -y], [y, x]])
    w2 = _jacobi(m)
    return w2[::2].copy()


def hermitian_eigenvalues(H: Any) -> HermitianSpectrum:
    """Eigenvalues of a Hermitian matrix, sorted ascending.

    Parameters
    ----------
    H : matrix-like
        Square matrix, Hermitian within the relative symmetry tolerance.

    Returns
    -------
    HermitianSpectrum

    Raises
    ------
    NonHermitianInput
        If the symmetry defect exceeds the tolerance.
    DimensionMismatch
        If the input is not square.
    """
    a = as_complex_array(H, square=True)
    h = _require_hermitian(a)
    return HermitianSpectrum.from_values(_eigvalsh(h))


def condition_number(H: Any) -> float:
    """Spectral condition number of a Hermitian positive definite matrix.

    Returns ``lambda_max / lambda_min``.

    Raises
    ------
    NotPositiveDefinite
        If the smallest eigenvalue is at or below the definiteness
        threshold (1e-12 relative to the spectral radius).
    """
    spectrum = hermitian_eigenvalues(H)
    scale = max(abs(spectrum.min), abs(spectrum.max))
    if spectrum.min <= PD_TOL_FACTOR * scale or spectrum.min <= 0.0:
        raise NotPositiveDefinite(
            f"smallest eigenvalue {spectrum.min:.6e} is not positive "
            f"relative to spectral radius {scale:.6e}"
        )
    return spectrum.max / spectrum.min


def _as_real_symmetric(P: Any, what: str) -> np.ndarray:
    """Coerce to a float64 symmetric array, validating realness and symmetry."""
    a = as_complex_array(P, square=True)
    scale = _max_abs(a)
    if _max_abs(a.imag) > SYMMETRY_TOL * max(scale, 1e-300):
        raise NonHermitianInput(f"{what} must be real")
    h = _require_hermitian(a, what)
    return np.ascontiguousarray(h.real)


def cholesky(P: Any) -> np.ndarray:
    """Lower-triangular Cholesky factor of a real SPD matrix.

    Returns ``L`` with positive diagonal and ``L @ L.T`` reconstructing the
    input to the package's relative reconstruction tolerance.

    Raises
    ------
    NotPositiveDefinite
        When a factorization pivot falls at or below the definiteness
        threshold (1e-12 relative to the largest entry modulus).
    """
    p = _as_real_symmetric(P, "Cholesky input")
    tol = PD_TOL_FACTOR * _max_abs(p)
    L, status = kernels.cholesky_lower(p, tol)
    if status != 0:
        raise NotPositiveDefinite(f"Cholesky pivot {status} is not positive")
    return L


def _solve_lower(L: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Solve ``L X = B`` with ``L`` lower-triangular (forward substitution)."""
    n = L.shape[0]
    X = np.array(B, dtype=np.result_type(L, B), copy=True)
    if X.ndim == 1:
        X = X[:, None]
        squeeze = True
    else:
        squeeze = False
    for i in range(n):
        if i:
            X[i] -= L[i, :i] @ X[:i]
        X[i] /= L[i, i]
    return X[:, 0] if squeeze else X


def _solve_lower_transpose(L: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Solve ``L.T X = B`` with ``L`` lower-triangular (back substitution)."""
    n = L.shape[0]
    X = np.array(B, dtype=np.result_type(L, B), copy=True)
    if X.ndim == 1:
        X = X[:, None]
        squeeze = True
    else:
        squeeze = False
    for i in range(n - 1, -1, -1):
        if i + 1 < n:
            X[i] -= L[i + 1 :, i] @ X[i + 1 :]
        X[i] /= L[i, i]
    return X[:, 0] if squeeze else X


def simultaneous_congruence(P: Any, Q: Any) -> CongruencePair:
    """Diagonalize an SPD pair by a single congruence.

    Computes a nonsingular ``R`` with ``R.T @ P @ R = I`` and
    ``R.T @ Q @ R = diag(D)``, ``D > 0`` ascending.  Uses the Cholesky
    factor of ``P`` followed by a Jacobi eigendecomposition of the
    transformed ``Q``.

    Raises
    ------
    NotPositiveDefinite
        If either input fails its definiteness test.
    DimensionMismatch
        If the shapes differ.
    """
    p = _as_real_symmetric(P, "first congruence input")
    q = _as_real_symmetric(Q, "second congruence input")
    if p.shape != q.shape:
        raise DimensionMismatch(f"shape mismatch: {p.shape} vs {q.shape}")
    L = cholesky(p)
    half = _solve_lower(L, q)
    w_mat = _solve_lower(L, half.T).T
    w_mat = (w_mat + w_mat.T) / 2.0
    d, V = _jacobi(w_mat, vectors=True)
    scale = max(abs(d[0]), abs(d[-1]))
    if d[0] <= PD_TOL_FACTOR * scale or d[0] <= 0.0:
        raise NotPositiveDefinite(
            f"congruence-transformed matrix has non-positive eigenvalue {d[0]:.6e}"
        )
    R = _solve_lower_transpose(L, V)
    return CongruencePair(transform=R, diagonal=d.copy())


def schur_complement(M: Any, k: int) -> ComplexDenseMatrix:
    """Trailing Schur complement ``A22 - A21 A11^{-1} A12``.

    Parameters
    ----------
    M : matrix-like
        Square matrix of dimension ``n``.
    k : int
        Leading block size, ``1 <= k < n``.

    Raises
    ------
    SingularLeadingBlock
        If the leading block's row-pivoted LU meets a pivot at or below the
        pivot threshold (1e-13 relative to the largest entry modulus of M).
    DomainError
        If ``k`` is out of range.
    """
    a = as_complex_array(M, square=True)
    n = a.shape[0]
    if not 1 <= k < n:
        raise DomainError(f"leading block size must satisfy 1 <= k < {n}, got {k}")
    pivot_tol = PIVOT_TOL_FACTOR * _max_abs(a)
    s, status = kernels.schur_complement_dense(a, k, pivot_tol)
    if status != 0:
        raise SingularLeadingBlock(f"leading {k}x{k} block is numerically singular")
    return ComplexDenseMatrix(s)


def loewner_geq(X: Any, Y: Any, tol: float = 1e-10) -> bool:
    """Loewner-order test ``X >= Y`` for Hermitian matrices.

    True iff the smallest eigenvalue of ``X - Y`` is at least
    ``-tol * max(1, |X|, |Y|)`` where ``|.|`` is the largest entry modulus.

    Raises
    ------
    DimensionMismatch
        If the shapes differ.
    NonHermitianInput
        If either operand fails its symmetry test.
    """
    x = as_complex_array(X, square=True)
    y = as_complex_array(Y, square=True)
    if x.shape != y.shape:
        raise DimensionMismatch(f"shape mismatch: {x.shape} vs {y.shape}")
    hx = _require_hermitian(x, "first Loewner operand")
    hy = _require_hermitian(y, "second Loewner operand")
    lam_min = float(_eigvalsh(hx - hy)[0])
    scale = max(1.0, _max_abs(x), _max_abs(y))
    return lam_min >= -tol * scale


def determinant(M: Any) -> complex:
    """Determinant of a square complex matrix.

    Uses row-pivoted LU with permutation-sign tracking; triangular inputs
    short-circuit to the exact product of their diagonal entries.
    """
    a = as_complex_array(M, square=True)
    lower_zero = not np.tril(a, -1).any()
    upper_zero = not np.triu(a, 1).any()
    if lower_zero or upper_zero:
        det = 1.0 + 0.0j
        for v in a.diagonal():
            det *= complex(v)
        return det
    return complex(kernels.lu_determinant(a))
