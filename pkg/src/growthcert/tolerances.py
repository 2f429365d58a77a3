"""Numerical tolerances used throughout the package.

All thresholds are chosen for double precision at desk scale (dimensions up
to a few hundred, condition numbers up to about 1e6).  They are deliberately
centralized so that every module applies the same contract:

* positive definiteness is decided from exact (dense) eigenvalues or
  factorization pivots, scaled by the matrix magnitude;
* reconstruction checks are relative;
* elimination pivots are compared against a threshold scaled by the largest
  initial entry modulus, because well-posed class members keep their pivots
  bounded away from zero — a tripped threshold indicates an out-of-class
  input rather than a tolerance problem;
* inequality certificates use a relative slack, while sharp-equality
  assertions use a small absolute slack.
"""

from __future__ import annotations

#: Machine epsilon for binary64.
EPS: float = 2.220446049250313e-16

#: Positive-definiteness: an eigenvalue or factorization pivot must exceed
#: ``PD_TOL_FACTOR * scale`` where ``scale`` is the spectral radius (when
#: eigenvalues are available) or the largest entry modulus (inside a
#: factorization).
PD_TOL_FACTOR: float = 1e-12

#: Relative tolerance for reconstruction residuals (factor products,
#: congruence round trips).
RECONSTRUCTION_RTOL: float = 1e-10

#: Elimination pivot threshold factor, relative to the largest entry modulus
#: of the *initial* matrix.
PIVOT_TOL_FACTOR: float = 1e-13

#: Relative tolerance applied to inequality certificates:
#: ``tol = CERT_RTOL * max(1, |measured|)``.
CERT_RTOL: float = 1e-9

#: Absolute slack allowed when asserting that a bound is attained exactly.
SHARP_EQUALITY_ATOL: float = 1e-8

#: Relative symmetry-defect threshold for class membership: the largest
#: entrywise modulus of ``A - A^T`` divided by the largest entry modulus.
SYMMETRY_TOL: float = 1e-10

#: Positive-semidefiniteness floor for the two-dimensional domination grid.
GRID_PSD_TOL: float = 1e-12
