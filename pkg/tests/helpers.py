"""Shared helpers for the test suite: deterministic sample streams and
small independent oracles used to cross-check library results."""

from __future__ import annotations

import itertools

import numpy as np

from growthcert import SamplerConfig, per_sample_seed, random_ad, random_higham


def sample_configs(count, ns, omegas, base_seed, spectrum_style="log-uniform"):
    """Yield ``count`` SamplerConfigs cycling a deterministic (n, omega) grid."""
    pairs = itertools.cycle(
        [(n, float(w)) for n in ns for w in omegas]
    )
    for index, (n, omega) in enumerate(itertools.islice(pairs, count)):
        yield SamplerConfig(
            n=n,
            omega=omega,
            seed=per_sample_seed(base_seed, n, 0, index),
            spectrum_style=spectrum_style,
        )


def higham_samples(count, ns, omegas, base_seed):
    for config in sample_configs(count, ns, omegas, base_seed):
        yield random_higham(config)


def ad_samples(count, ns, omegas, base_seed):
    for config in sample_configs(count, ns, omegas, base_seed):
        yield random_ad(config)


def cofactor_determinant(a: np.ndarray) -> complex:
    """Recursive cofactor expansion along the first row: an independent
    determinant oracle, practical for n <= 5."""
    a = np.asarray(a, dtype=np.complex128)
    n = a.shape[0]
    if n == 1:
        return complex(a[0, 0])
    total = 0.0 + 0.0j
    for j in range(n):
        minor = np.delete(np.delete(a, 0, axis=0), j, axis=1)
        total += ((-1) ** j) * complex(a[0, j]) * cofactor_determinant(minor)
    return total


def charpoly_eigenvalues(h: np.ndarray) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix via the roots of its characteristic
    polynomial — an independent oracle for small n."""
    h = np.asarray(h)
    coeffs = np.poly(h)
    roots = np.roots(coeffs)
    return np.sort(roots.real)


def max_entry_modulus(a) -> float:
    return float(np.max(np.abs(np.asarray(a))))
