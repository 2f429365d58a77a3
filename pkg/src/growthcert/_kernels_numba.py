"""Numba-compiled hot kernels.

One-for-one twins of the functions in ``_kernels_numpy``: same signatures,
same status codes, same algorithms with identical per-element arithmetic.
See that module for the full docstrings; only compilation differs here.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_EPS = 2.220446049250313e-16
_MAX_SWEEPS = 60


@njit(cache=True)
def jacobi_eigh(a):  # pragma: no cover - exercised through the kernels facade
    n = a.shape[0]
    A = a.copy()
    V = np.eye(n)
    w = np.empty(n)
    if n == 1:
        w[0] = A[0, 0]
        return w, V, 0
    fro = 0.0
    for i in range(n):
        for j in range(n):
            fro += A[i, j] * A[i, j]
    fro = np.sqrt(fro)
    tol = n * _EPS * fro
    status = 1
    for _ in range(_MAX_SWEEPS):
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += 2.0 * A[i, j] * A[i, j]
        off = np.sqrt(off)
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
                for r in range(n):
                    if r != p and r != q:
                        arp = A[r, p]
                        arq = A[r, q]
                        A[r, p] = c * arp - s * arq
                        A[p, r] = A[r, p]
                        A[r, q] = s * arp + c * arq
                        A[q, r] = A[r, q]
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
                for r in range(n):
                    vrp = V[r, p]
                    vrq = V[r, q]
                    V[r, p] = c * vrp - s * vrq
                    V[r, q] = s * vrp + c * vrq
    for i in range(n):
        w[i] = A[i, i]
    order = np.argsort(w, kind="mergesort")
    w_sorted = np.empty(n)
    V_sorted = np.empty((n, n))
    for idx in range(n):
        src = order[idx]
        w_sorted[idx] = w[src]
        for r in range(n):
            V_sorted[r, idx] = V[r, src]
    return w_sorted, V_sorted, status


@njit(cache=True)
def eliminate_packed(a, pivot_tol):  # pragma: no cover
    n = a.shape[0]
    m = n - 1
    total = 0
    for k in range(1, n):
        total += k * k
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
        for i in range(k + 1, n):
            mult = a[i, k] / piv
            for j in range(k + 1, n):
                a[i, j] = a[i, j] - mult * a[k, j]
        mx = 0.0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = a[i, j]
                packed[pos] = v
                pos += 1
                av = abs(v)
                if av > mx:
                    mx = av
        stage_max[k] = mx
    return packed, stage_max, pivot_moduli, fail_stage


@njit(cache=True)
def lu_determinant(a):  # pragma: no cover
    n = a.shape[0]
    det = 1.0 + 0.0j
    sign = 1.0
    for k in range(n):
        p = k
        best = abs(a[k, k])
        for i in range(k + 1, n):
            v = abs(a[i, k])
            if v > best:
                best = v
                p = i
        if best == 0.0:
            return 0.0 + 0.0j
        if p != k:
            for j in range(n):
                tmp = a[k, j]
                a[k, j] = a[p, j]
                a[p, j] = tmp
            sign = -sign
        piv = a[k, k]
        det *= piv
        for i in range(k + 1, n):
            mult = a[i, k] / piv
            for j in range(k + 1, n):
                a[i, j] = a[i, j] - mult * a[k, j]
    return sign * det


@njit(cache=True)
def schur_complement_dense(a, k, pivot_tol):  # pragma: no cover
    n = a.shape[0]
    w = n - k
    lu = a[:k, :k].copy()
    b = a[:k, k:].copy()
    for col in range(k):
        p = col
        best = abs(lu[col, col])
        for i in range(col + 1, k):
            v = abs(lu[i, col])
            if v > best:
                best = v
                p = i
        if best <= pivot_tol:
            return np.zeros((w, w), np.complex128), 1
        if p != col:
            for j in range(k):
                tmp = lu[col, j]
                lu[col, j] = lu[p, j]
                lu[p, j] = tmp
            for j in range(w):
                tmp = b[col, j]
                b[col, j] = b[p, j]
                b[p, j] = tmp
        piv = lu[col, col]
        for i in range(col + 1, k):
            mult = lu[i, col] / piv
            lu[i, col] = mult
            for j in range(col + 1, k):
                lu[i, j] = lu[i, j] - mult * lu[col, j]
            for j in range(w):
                b[i, j] = b[i, j] - mult * b[col, j]
    for col in range(k - 1, -1, -1):
        for j in range(w):
            acc = b[col, j]
            for t in range(col + 1, k):
                acc -= lu[col, t] * b[t, j]
            b[col, j] = acc / lu[col, col]
    s = np.empty((w, w), np.complex128)
    for i in range(w):
        for j in range(w):
            acc = a[k + i, k + j]
            for t in range(k):
                acc -= a[k + i, t] * b[t, j]
            s[i, j] = acc
    return s, 0


@njit(cache=True)
def cholesky_lower(p, tol):  # pragma: no cover
    n = p.shape[0]
    L = np.zeros((n, n))
    for j in range(n):
        d = p[j, j]
        for t in range(j):
            d -= L[j, t] * L[j, t]
        if d <= tol:
            return L, j + 1
        root = np.sqrt(d)
        L[j, j] = root
        for i in range(j + 1, n):
            acc = p[i, j]
            for t in range(j):
                acc -= L[i, t] * L[j, t]
            L[i, j] = acc / root
    return L, 0
