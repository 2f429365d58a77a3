"""Matrix-class definitions, validation and membership statistics.

Two classes are supported, each determined by the Hermitian/skew split
``A = B + iC`` with ``B = (A + A*)/2`` and ``C = (A - A*)/(2i)``:

* the complex symmetric class: ``A`` symmetric with both split parts real
  symmetric positive definite (for symmetric ``A`` the split parts equal the
  entrywise real and imaginary parts);
* the wider class requiring only that both split parts are Hermitian
  positive definite.

The first class is contained in the second.  Validated wrappers cache the
part spectra so the measured condition numbers are computed exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, NamedTuple

import numpy as np

from .errors import NotInClass
from .linalg import HermitianSpectrum, _eigvalsh, _hermitian_defect, _max_abs
from .matrix import as_complex_array
from .tolerances import PD_TOL_FACTOR, SYMMETRY_TOL

__all__ = [
    "HighamMatrix",
    "AccretiveDissipativeMatrix",
    "ClassMembershipReport",
    "DiagonalMaximalityResult",
    "hermitian_parts",
    "classify",
    "diagonal_maximality_check",
    "as_higham_matrix",
    "as_accretive_dissipative_matrix",
]


def hermitian_parts(A: Any) -> tuple[np.ndarray, np.ndarray]:
    """Split a square matrix into its Hermitian and skew parts.

    Returns ``(B, C)`` with ``B = (A + A*)/2`` and ``C = (A - A*)/(2i)``,
    both exactly Hermitian in floating point, and ``B + iC`` reproducing
    ``A`` up to one rounding.  For a complex symmetric input the parts are
    the entrywise real and imaginary parts (with exactly zero imaginary
    components).
    """
    a = as_complex_array(A, square=True)
    b = (a + a.conj().T) / 2.0
    c = (a - a.conj().T) * (-0.5j)
    return b, c


def _is_pd(spectrum: HermitianSpectrum) -> bool:
    scale = max(abs(spectrum.min), abs(spectrum.max))
    return spectrum.min > PD_TOL_FACTOR * scale and spectrum.min > 0.0


def _part_spectrum(part: np.ndarray) -> HermitianSpectrum:
    return HermitianSpectrum.from_values(_eigvalsh(part))


@dataclass(frozen=True)
class ClassMembershipReport:
    """Outcome of :func:`classify`.

    ``kappa_B``, ``kappa_C`` and ``omega`` are ``inf`` when the respective
    part is not positive definite.  ``symmetry_defect`` is the largest
    entrywise modulus of ``A - A^T`` relative to the largest entry modulus.
    """

    is_higham: bool
    is_ad: bool
    lambda_min_B: float
    lambda_min_C: float
    symmetry_defect: float
    kappa_B: float
    kappa_C: float
    omega: float


def classify(A: Any) -> ClassMembershipReport:
    """Class membership and spectral statistics of a square matrix.

    Never raises on non-members: both flags are simply false and the
    condition numbers are ``inf`` for indefinite parts.
    """
    a = as_complex_array(A, square=True)
    scale = _max_abs(a)
    sym_defect_abs = _max_abs(a - a.T)
    symmetry_defect = sym_defect_abs / scale if scale > 0.0 else 0.0
    b, c = hermitian_parts(a)
    spec_b = _part_spectrum(b)
    spec_c = _part_spectrum(c)
    pd_b = _is_pd(spec_b)
    pd_c = _is_pd(spec_c)
    kappa_b = spec_b.max / spec_b.min if pd_b else float("inf")
    kappa_c = spec_c.max / spec_c.min if pd_c else float("inf")
    is_ad = pd_b and pd_c
    is_higham = is_ad and symmetry_defect <= SYMMETRY_TOL
    return ClassMembershipReport(
        is_higham=is_higham,
        is_ad=is_ad,
        lambda_min_B=spec_b.min,
        lambda_min_C=spec_c.min,
        symmetry_defect=symmetry_defect,
        kappa_B=kappa_b,
        kappa_C=kappa_c,
        omega=max(kappa_b, kappa_c),
    )


class _ValidatedPair:
    """Shared plumbing for the validated class wrappers."""

    __slots__ = ("B", "C", "n", "spectrum_B", "spectrum_C")

    def __init__(
        self,
        B: np.ndarray,
        C: np.ndarray,
        spectrum_B: HermitianSpectrum,
        spectrum_C: HermitianSpectrum,
    ):
        B.setflags(write=False)
        C.setflags(write=False)
        self.B = B
        self.C = C
        self.n = B.shape[0]
        self.spectrum_B = spectrum_B
        self.spectrum_C = spectrum_C

    @property
    def kappa_B(self) -> float:
        return self.spectrum_B.max / self.spectrum_B.min

    @property
    def kappa_C(self) -> float:
        return self.spectrum_C.max / self.spectrum_C.min

    @property
    def omega(self) -> float:
        """Measured worst condition number of the two parts."""
        return max(self.kappa_B, self.kappa_C)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, omega={self.omega:.6g})"


class HighamMatrix(_ValidatedPair):
    """Validated complex symmetric matrix with real SPD parts.

    Holds the real parts ``B`` and ``C`` (float64, read-only) so that
    ``matrix = B + iC`` is complex symmetric.  Construction validates
    symmetry and positive definiteness and caches both part spectra.
    """

    @classmethod
    def from_parts(cls, B: Any, C: Any) -> "HighamMatrix":
        b = np.array(B, dtype=np.float64, copy=True)
        c = np.array(C, dtype=np.float64, copy=True)
        if b.ndim != 2 or b.shape[0] != b.shape[1] or b.shape != c.shape:
            raise NotInClass(f"parts must be square with equal shapes, got {b.shape} and {c.shape}")
        for name, part in (("real part", b), ("imaginary part", c)):
            defect = _max_abs(part - part.T)
            scale = _max_abs(part)
            if defect > SYMMETRY_TOL * max(scale, 1e-300):
                raise NotInClass(f"{name} is not symmetric (defect {defect:.3e})")
        b = (b + b.T) / 2.0
        c = (c + c.T) / 2.0
        spec_b = HermitianSpectrum.from_values(_eigvalsh(b.astype(np.complex128)))
        spec_c = HermitianSpectrum.from_values(_eigvalsh(c.astype(np.complex128)))
        if not _is_pd(spec_b):
            raise NotInClass(f"real part is not positive definite (lambda_min {spec_b.min:.6e})")
        if not _is_pd(spec_c):
            raise NotInClass(f"imaginary part is not positive definite (lambda_min {spec_c.min:.6e})")
        return cls(b, c, spec_b, spec_c)

    @classmethod
    def from_matrix(cls, A: Any) -> "HighamMatrix":
        a = as_complex_array(A, square=True)
        scale = _max_abs(a)
        defect = _max_abs(a - a.T)
        if defect > SYMMETRY_TOL * max(scale, 1e-300):
            raise NotInClass(f"matrix is not complex symmetric (defect {defect:.3e})")
        sym = (a + a.T) / 2.0
        return cls.from_parts(sym.real, sym.imag)

    @property
    def matrix(self) -> np.ndarray:
        """The assembled complex symmetric matrix ``B + iC``."""
        return self.B + 1j * self.C


class AccretiveDissipativeMatrix(_ValidatedPair):
    """Validated matrix whose Hermitian and skew split parts are both PD.

    Holds the complex Hermitian parts ``B`` and ``C`` (read-only) with
    ``matrix = B + iC``.
    """

    @classmethod
    def from_parts(cls, B: Any, C: Any) -> "AccretiveDissipativeMatrix":
        b = np.array(B, dtype=np.complex128, copy=True)
        c = np.array(C, dtype=np.complex128, copy=True)
        if b.ndim != 2 or b.shape[0] != b.shape[1] or b.shape != c.shape:
            raise NotInClass(f"parts must be square with equal shapes, got {b.shape} and {c.shape}")
        for name, part in (("Hermitian part", b), ("skew part", c)):
            defect = _hermitian_defect(part)
            scale = _max_abs(part)
            if defect > SYMMETRY_TOL * max(scale, 1e-300):
                raise NotInClass(f"{name} is not Hermitian (defect {defect:.3e})")
        b = (b + b.conj().T) / 2.0
        c = (c + c.conj().T) / 2.0
        spec_b = _part_spectrum(b)
        spec_c = _part_spectrum(c)
        if not _is_pd(spec_b):
            raise NotInClass(f"Hermitian part is not positive definite (lambda_min {spec_b.min:.6e})")
        if not _is_pd(spec_c):
            raise NotInClass(f"skew part is not positive definite (lambda_min {spec_c.min:.6e})")
        return cls(b, c, spec_b, spec_c)

    @classmethod
    def from_matrix(cls, A: Any) -> "AccretiveDissipativeMatrix":
        b, c = hermitian_parts(A)
        return cls.from_parts(b, c)

    @property
    def matrix(self) -> np.ndarray:
        """The assembled matrix ``B + iC``."""
        return self.B + 1j * self.C


def as_higham_matrix(value: Any) -> HighamMatrix:
    """Coerce to a validated :class:`HighamMatrix` (raises ``NotInClass``)."""
    if isinstance(value, HighamMatrix):
        return value
    if isinstance(value, AccretiveDissipativeMatrix):
        return HighamMatrix.from_matrix(value.matrix)
    return HighamMatrix.from_matrix(value)


def as_accretive_dissipative_matrix(value: Any) -> AccretiveDissipativeMatrix:
    """Coerce to a validated :class:`AccretiveDissipativeMatrix`.

    A :class:`HighamMatrix` converts without recomputing spectra: its real
    symmetric parts are Hermitian with the same eigenvalues.
    """
    if isinstance(value, AccretiveDissipativeMatrix):
        return value
    if isinstance(value, HighamMatrix):
        return AccretiveDissipativeMatrix(
            value.B.astype(np.complex128),
            value.C.astype(np.complex128),
            value.spectrum_B,
            value.spectrum_C,
        )
    return AccretiveDissipativeMatrix.from_matrix(value)


class DiagonalMaximalityResult(NamedTuple):
    """Outcome of :func:`diagonal_maximality_check`.

    ``worst_pair`` are zero-based indices of the off-diagonal pair with the
    largest ratio ``|a_ij|^2 / (|a_ii| |a_jj|)``.
    """

    holds: bool
    worst_pair: tuple[int, int]
    worst_ratio: float


def diagonal_maximality_check(A: Any) -> DiagonalMaximalityResult:
    """Test whether every off-diagonal entry is dominated by the diagonal.

    Checks ``|a_ij|^2 < |a_ii| |a_jj|`` for all ``i != j`` (with a per-pair
    absolute slack of 1e-12 scaled by ``max(1, |a_ii||a_jj|)``), which
    forces the largest entry modulus onto the diagonal.
    """
    a = as_complex_array(A, square=True)
    n = a.shape[0]
    if n == 1:
        return DiagonalMaximalityResult(True, (0, 0), 0.0)
    p = np.abs(a)
    diag = p.diagonal()
    den = np.outer(diag, diag)
    num = p * p
    off_mask = ~np.eye(n, dtype=bool)
    tol = 1e-12 * np.maximum(1.0, den)
    holds = bool(np.all(num[off_mask] <= (den + tol)[off_mask]))
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = np.where(den > 0.0, num / den, np.where(num > 0.0, np.inf, 0.0))
    ratios[~off_mask] = -1.0
    flat_idx = int(np.argmax(ratios))
    worst = np.unravel_index(flat_idx, ratios.shape)
    worst_ratio = float(ratios[worst])
    if worst_ratio < 0.0:  # degenerate 1x1 handled above; ties all -1 impossible for n >= 2
        worst_ratio = 0.0
    return DiagonalMaximalityResult(holds, (int(worst[0]), int(worst[1])), worst_ratio)
