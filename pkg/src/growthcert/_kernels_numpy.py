"""Pure-numpy reference implementations of the hot kernels.

Each function mirrors its numba twin in ``_kernels_numba`` one-for-one: same
signature, same status codes, same algorithm and per-element arithmetic.
The numpy versions vectorize row/column updates where natural, which keeps
the fallback usable (if slower) when numba is unavailable or disabled.

All kernels follow a no-exception contract: failures are reported through
integer status codes so the two backends stay interchangeable.  Input arrays
are mutated where documented; callers pass fresh copies.
"""

from __future__ import annotations

import numpy as np

_EPS = 2.220446049250313e-16
_MAX_SWEEPS = 60


def jacobi_eigh(a: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """Eigendecomposition of a real symmetric matrix by cyclic Jacobi sweeps.

    Parameters
    ----------
    a : float64 ndarray, shape (n, n)
        Exactly symmetric input; not mutated.

    Returns
    -------
    (w, V, status)
        Eigenvalues ascending, orthonormal eigenvectors as columns, and a
        status code (0 = converged, 1 = sweep budget exhausted).
    """
    n = a.shape[0]
    A = a.copy()
    V = np.eye(n)
    if n == 1:
        return A.diagonal().copy(), V, 0
    fro = np.sqrt(np.sum(A * A))
    tol = n * _EPS * fro
    status = 1
    for _ in range(_MAX_SWEEPS):
        off = np.sqrt(2.0 * np.sum(np.triu(A, 1) ** 2))
        if off <= tol:
            status = 0
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                tau = (A[q, q] - A[p, p]) / (2.0 * apq)
                if abs(tau) > 1e150:
                    t = 1.0 / (2.0 * tau)
                elif tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                app = A[p, p]
                aqq = A[q, q]
                colp = A[:, p].copy()
                colq = A[:, q].copy()
                newp = c * colp - s * colq
                newq = s * colp + c * colq
                A[:, p] = newp
                A[p, :] = newp
                A[:, q] = newq
                A[q, :] = newq
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
                vcolp = V[:, p].copy()
                vcolq = V[:, q].copy()
                V[:, p] = c * vcolp - s * vcolq
                V[:, q] = s * vcolp + c * vcolq
    w = A.diagonal().copy()
    order = np.argsort(w, kind="mergesort")
    return w[order], V[:, order].copy(), status


def eliminate_packed(
    a: np.ndarray, pivot_tol: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    """Pivotless outer-product elimination recording every active matrix.

    Parameters
    ----------
    a : complex128 ndarray, shape (n, n)
        Working copy; mutated in place.
    pivot_tol : float
        Absolute pivot-modulus threshold.

    Returns
    -------
    (packed, stage_max, pivot_moduli, fail_stage)
        ``packed`` concatenates the row-major entries of the trailing active
        matrix after each stage (sizes (n-1)^2, ..., 1); ``stage_max`` holds
        the largest active entry modulus per stage; ``fail_stage`` is 0 on
        success or the one-based stage whose pivot was at or below the
        threshold.
    """
    n = a.shape[0]
    m = n - 1
    total = sum(k * k for k in range(1, n))
    packed = np.empty(total, np.complex128)
    stage_max = np.zeros(m)
    pivot_moduli = np.zeros(m)
    pos = 0
    fail_stage = 0
    for k in range(m):
        piv = a[k, k]
        pm = abs(piv)
        pivot_moduli[k] = pm
        if pm <= pivot_tol:
            fail_stage = k + 1
            break
        a[k + 1 :, k + 1 :] -= np.outer(a[k + 1 :, k] / piv, a[k, k + 1 :])
        act = a[k + 1 :, k + 1 :]
        cnt = act.size
        packed[pos : pos + cnt] = act.ravel()
        pos += cnt
        stage_max[k] = np.abs(act).max()
    return packed, stage_max, pivot_moduli, fail_stage


def lu_determinant(a: np.ndarray) -> complex:
    """Determinant via row-pivoted LU with permutation-sign tracking.

    Parameters
    ----------
    a : complex128 ndarray, shape (n, n)
        Working copy; mutated in place.
    """
    n = a.shape[0]
    det = 1.0 + 0.0j
    sign = 1.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) == 0.0:
            return 0.0 + 0.0j
        if p != k:
            a[[k, p], :] = a[[p, k], :]
            sign = -sign
        piv = a[k, k]
        det *= piv
        if k + 1 < n:
            a[k + 1 :, k + 1 :] -= np.outer(a[k + 1 :, k] / piv, a[k, k + 1 :])
    return complex(sign * det)


def schur_complement_dense(
    a: np.ndarray, k: int, pivot_tol: float
) -> tuple[np.ndarray, int]:
    """Trailing Schur complement after a leading k-by-k block.

    Factors the leading block with partial pivoting, refusing pivots at or
    below ``pivot_tol``; the input array is not mutated.

    Returns
    -------
    (s, status)
        ``s`` is the (n-k)-by-(n-k) complement; ``status`` is 0 on success
        or 1 when the leading block is numerically singular.
    """
    n = a.shape[0]
    lu = a[:k, :k].copy()
    b = a[:k, k:].copy()
    for col in range(k):
        p = col + int(np.argmax(np.abs(lu[col:, col])))
        if abs(lu[p, col]) <= pivot_tol:
            return np.zeros((n - k, n - k), np.complex128), 1
        if p != col:
            lu[[col, p], :] = lu[[p, col], :]
            b[[col, p], :] = b[[p, col], :]
        piv = lu[col, col]
        if col + 1 < k:
            mults = lu[col + 1 :, col] / piv
            lu[col + 1 :, col] = mults
            lu[col + 1 :, col + 1 :] -= np.outer(mults, lu[col, col + 1 :])
            b[col + 1 :, :] -= np.outer(mults, b[col, :])
    for col in range(k - 1, -1, -1):
        if col + 1 < k:
            b[col, :] -= lu[col, col + 1 :] @ b[col + 1 :, :]
        b[col, :] /= lu[col, col]
    s = a[k:, k:] - a[k:, :k] @ b
    return s, 0


def cholesky_lower(p: np.ndarray, tol: float) -> tuple[np.ndarray, int]:
    """Lower Cholesky factor of a real symmetric matrix.

    Parameters
    ----------
    p : float64 ndarray, shape (n, n)
        Symmetric input; not mutated.
    tol : float
        Absolute threshold: a diagonal Schur value at or below it fails.

    Returns
    -------
    (L, status)
        ``status`` is 0 on success, or the one-based index of the first
        failing pivot.
    """
    n = p.shape[0]
    L = np.zeros((n, n))
    for j in range(n):
        d = p[j, j] - L[j, :j] @ L[j, :j]
        if d <= tol:
            return L, j + 1
        root = np.sqrt(d)
        L[j, j] = root
        if j + 1 < n:
            L[j + 1 :, j] = (p[j + 1 :, j] - L[j + 1 :, :j] @ L[j, :j]) / root
    return L, 0
