"""Constructors for the named example matrices and seeded random samplers
for both matrix classes with prescribed worst condition number.

Sampling model: eigenvalues are pinned at ``1`` and ``omega`` with interior
values drawn per the configured style, then conjugated by a Haar-distributed
orthogonal (real case) or unitary (complex case) matrix obtained by
orthonormalizing a standard-normal matrix with diagonal sign/phase
correction.  Every sampler is a pure function of its config — the same
config yields the same matrix bit for bit — and campaign drivers derive
per-sample seeds from (base seed, dimension index, grid index, sample
index) so results are independent of evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from .classes import AccretiveDissipativeMatrix, HighamMatrix
from .errors import DomainError

__all__ = [
    "SPECTRUM_STYLES",
    "SamplerConfig",
    "GapExamples",
    "per_sample_seed",
    "random_spd",
    "random_hermitian_pd",
    "random_higham",
    "random_ad",
    "extremal_pair",
    "diag_lower_example",
    "gap_examples",
]

SPECTRUM_STYLES = ("log-uniform", "pinned-endpoints-uniform")

_MAX_SEED = 2**64


@dataclass(frozen=True)
class SamplerConfig:
    """Immutable sampler parameters.

    ``spectrum_style`` picks how interior eigenvalues fill ``[1, omega]``:
    ``"log-uniform"`` (default; stresses both ends of the spectrum) or
    ``"pinned-endpoints-uniform"`` (linear-uniform interior).  The
    endpoints ``1`` and ``omega`` are always present, so the sample's
    condition number equals ``omega`` exactly up to rounding.
    """

    n: int
    omega: float
    seed: int
    spectrum_style: str = "log-uniform"

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 2:
            raise DomainError(f"dimension must be an integer >= 2, got {self.n!r}")
        omega = float(self.omega)
        if not math.isfinite(omega) or omega < 1.0:
            raise DomainError(
                f"condition-number target must be finite and >= 1, got {self.omega!r}"
            )
        object.__setattr__(self, "omega", omega)
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise DomainError(f"seed must be an integer, got {self.seed!r}")
        if not 0 <= self.seed < _MAX_SEED:
            raise DomainError(f"seed must fit in 64 bits, got {self.seed!r}")
        if self.spectrum_style not in SPECTRUM_STYLES:
            raise DomainError(
                f"spectrum_style must be one of {SPECTRUM_STYLES}, "
                f"got {self.spectrum_style!r}"
            )


def per_sample_seed(base_seed: int, n: int, grid_index: int, sample_index: int) -> int:
    """Derive a 64-bit per-sample seed from campaign coordinates.

    Uses a splittable seed sequence over the tuple
    ``(base_seed, n, grid_index, sample_index)``, so the seed for any
    sample is independent of the order in which samples are drawn.
    """
    ss = np.random.SeedSequence((base_seed, n, grid_index, sample_index))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


# ---------------------------------------------------------------------------
# Haar rotations and pinned spectra
# ---------------------------------------------------------------------------


def _haar_orthogonal(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the
    triangular factor's diagonal signs folded into Q."""
    z = rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    signs = np.where(np.diagonal(r) < 0.0, -1.0, 1.0)
    return q * signs


def _haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-distributed unitary matrix via the complex Gaussian analogue."""
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    moduli = np.abs(diag)
    phases = np.where(moduli == 0.0, 1.0 + 0.0j, diag / np.where(moduli == 0.0, 1.0, moduli))
    return q * phases.conj()


def _spectrum(rng: np.random.Generator, config: SamplerConfig) -> np.ndarray:
    """Eigenvalues for one sample: endpoints pinned at 1 and omega, interior
    drawn per style.  Drawn before the rotation so the stream layout is
    part of the determinism contract."""
    n, omega = config.n, config.omega
    if omega == 1.0:
        return np.ones(n)
    if n == 2:
        return np.array([1.0, omega])
    if config.spectrum_style == "log-uniform":
        interior = np.exp(rng.uniform(0.0, math.log(omega), size=n - 2))
    else:
        interior = rng.uniform(1.0, omega, size=n - 2)
    return np.sort(np.concatenate(([1.0, omega], interior)))


def random_spd(config: SamplerConfig) -> np.ndarray:
    """Real symmetric positive definite sample with condition number
    ``config.omega`` (endpoint eigenvalues pinned exactly)."""
    rng = np.random.default_rng(config.seed)
    values = _spectrum(rng, config)
    q = _haar_orthogonal(rng, config.n)
    m = (q * values) @ q.T
    return (m + m.T) / 2.0


def random_hermitian_pd(config: SamplerConfig) -> np.ndarray:
    """Complex Hermitian positive definite sample with condition number
    ``config.omega``."""
    rng = np.random.default_rng(config.seed)
    values = _spectrum(rng, config)
    q = _haar_unitary(rng, config.n)
    m = (q * values) @ q.conj().T
    return (m + m.conj().T) / 2.0


def _part_seeds(seed: int) -> tuple[int, int]:
    state = np.random.SeedSequence(seed).generate_state(2, dtype=np.uint64)
    return int(state[0]), int(state[1])


def random_higham(config: SamplerConfig) -> HighamMatrix:
    """Random symmetric-class member: both parts drawn independently via
    :func:`random_spd` from seeds split off ``config.seed``."""
    seed_b, seed_c = _part_seeds(config.seed)
    b = random_spd(replace(config, seed=seed_b))
    c = random_spd(replace(config, seed=seed_c))
    return HighamMatrix.from_parts(b, c)


def random_ad(config: SamplerConfig) -> AccretiveDissipativeMatrix:
    """Random Hermitian-parts class member: both parts drawn independently
    via :func:`random_hermitian_pd` from seeds split off ``config.seed``."""
    seed_b, seed_c = _part_seeds(config.seed)
    b = random_hermitian_pd(replace(config, seed=seed_b))
    c = random_hermitian_pd(replace(config, seed=seed_c))
    return AccretiveDissipativeMatrix.from_parts(b, c)


# ---------------------------------------------------------------------------
# Named example matrices
# ---------------------------------------------------------------------------


def _check_omega(omega: float, *, strict: bool = False) -> float:
    omega = float(omega)
    floor = 1.0
    if not math.isfinite(omega) or (omega <= floor if strict else omega < floor):
        relation = ">" if strict else ">="
        raise DomainError(
            f"condition-number parameter must be finite and {relation} 1, got {omega}"
        )
    return omega


def extremal_pair(omega: float) -> tuple[HighamMatrix, HighamMatrix]:
    """The 2x2 members attaining the scalar lower and upper endpoints.

    With ``c = (omega - 1)/(omega + 1)`` the pair has unit diagonal
    ``1 + i`` and off-diagonal ``c(1 + i)`` (first member, lower endpoint)
    respectively ``c(1 - i)`` (second member, upper endpoint).  Both parts
    have eigenvalues ``1 -+ c`` so each part's condition number is exactly
    ``omega``.
    """
    omega = _check_omega(omega)
    c = (omega - 1.0) / (omega + 1.0)
    b = np.array([[1.0, c], [c, 1.0]])
    a_minus = HighamMatrix.from_parts(b, b.copy())
    a_plus = HighamMatrix.from_parts(b, np.array([[1.0, -c], [-c, 1.0]]))
    return a_minus, a_plus


def diag_lower_example(omega: float, n: int) -> HighamMatrix:
    """``(1 + i) diag(omega, 1, ..., 1)``: attains the stage lower bound
    ``1/omega`` at every stage, with both parts' condition numbers equal to
    ``omega`` by construction."""
    omega = _check_omega(omega)
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise DomainError(f"dimension must be an integer >= 2, got {n!r}")
    d = np.ones(n)
    d[0] = omega
    b = np.diag(d)
    return HighamMatrix.from_parts(b, b.copy())


class GapExamples(NamedTuple):
    """The three counterexample matrices refuting shortcut arguments."""

    gap1: AccretiveDissipativeMatrix
    gap2: AccretiveDissipativeMatrix
    gap3: HighamMatrix


def gap_examples(r: float, omega: float = 4.0, n: int = 2) -> GapExamples:
    """Counterexample matrices for a parameter ``r`` in ``(0, 1)``.

    * ``gap1``: parts ``[[1, r], [r, 1]]`` and ``[[1, i r/2], [-i r/2, 1]]``
      — its trailing update ``q`` has ``(Im q)^2`` strictly larger than the
      square of the update computed from entrywise moduli, so bounding
      moduli entrywise before the update loses the inequality.
    * ``gap2``: the upper-triangular member ``[[1+i, 2r], [0, 1+i]]`` — for
      ``r > 1/sqrt(2)`` its largest entry modulus ``2r`` exceeds
      ``sqrt(2)`` times the largest diagonal modulus, so diagonal
      maximality fails outside the symmetric class.
    * ``gap3``: the diagonal example at ``omega`` (dimension ``n``) — its
      growth ``1/omega`` sits strictly below ``4*omega/(1+omega)^2``, so
      the stage lower bound depends on excluding the initial stage from
      the growth convention.

    ``omega`` (must be > 1) and ``n`` only affect ``gap3``.
    """
    r = float(r)
    if not math.isfinite(r) or not 0.0 < r < 1.0:
        raise DomainError(f"parameter must lie in (0, 1), got {r}")
    omega = _check_omega(omega, strict=True)
    b1 = np.array([[1.0, r], [r, 1.0]])
    c1 = np.array([[1.0, 0.5j * r], [-0.5j * r, 1.0]])
    gap1 = AccretiveDissipativeMatrix.from_parts(b1, c1)
    gap2 = AccretiveDissipativeMatrix.from_matrix(
        np.array([[1.0 + 1.0j, 2.0 * r], [0.0, 1.0 + 1.0j]])
    )
    gap3 = diag_lower_example(omega, n)
    return GapExamples(gap1=gap1, gap2=gap2, gap3=gap3)
