"""Inequality certificates: condition-number growth bounds, block
Kantorovich estimates, the two-dimensional domination inequality, Loewner lower
bounds for Schur complements, and the sectorial determinant route.

Every check is materialized as a :class:`BoundCertificate` holding the
measured quantity, the bound value(s), the slack on each side, and a
verdict.  Bounds are always evaluated at the *measured* worst condition
number of the validated input (exact eigenvalues); a caller-supplied cap
can only trigger :class:`~growthcert.errors.KappaExceeded`, never loosen a
bound.  One certificate (the conjectured sharper constant for the wider
class) is non-binding: it is recorded as evidence and never fails a run.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .classes import (
    AccretiveDissipativeMatrix,
    HighamMatrix,
    as_accretive_dissipative_matrix,
    as_higham_matrix,
)
from .elimination import GrowthReport, eliminate_no_pivot, growth_report
from .errors import (
    AngleOutOfRange,
    DomainError,
    KappaExceeded,
    NotInClass,
    NotPositiveDefinite,
)
from .linalg import (
    _eigvalsh,
    _jacobi,
    _require_hermitian,
    _solve_lower,
    cholesky,
    determinant,
    hermitian_eigenvalues,
    schur_complement,
)
from .matrix import as_complex_array
from .tolerances import CERT_RTOL, PD_TOL_FACTOR, SHARP_EQUALITY_ATOL

__all__ = [
    "BoundCertificate",
    "SectorInfo",
    "DominationWitness",
    "certificate",
    "equality_certificate",
    "certificate_satisfied",
    "stage_lower_bound",
    "stage_upper_bound",
    "ad_upper_bound",
    "diagonal_lower_factor",
    "theta",
    "domination_witness",
    "domination_inequality_check",
    "kantorovich_check",
    "scalar_schur_certificate",
    "higham_growth_certificates",
    "ad_growth_certificates",
    "loewner_schur_check",
    "drury_sector",
    "fischer_sector_check",
]

_SQRT2 = math.sqrt(2.0)


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundCertificate:
    """One inequality instance: measured value against bound value(s).

    ``slack_lower``/``slack_upper`` are ``measured - lower`` and
    ``upper - measured`` (``inf`` when the side is absent); negative slack
    on either side means the bound is violated beyond tolerance once it
    passes the relative tolerance in ``satisfied``.  Non-binding
    certificates record evidence only and never fail a suite.
    """

    name: str
    measured: float
    lower: float | None
    upper: float | None
    slack_lower: float
    slack_upper: float
    satisfied: bool
    binding: bool = True
    context: dict = field(default_factory=dict)


def certificate_satisfied(cert: BoundCertificate, tol: float = CERT_RTOL) -> bool:
    """Re-judge a certificate under a (possibly overridden) relative tolerance."""
    allowance = tol * max(1.0, abs(cert.measured))
    ok_lower = cert.lower is None or cert.measured >= cert.lower - allowance
    ok_upper = cert.upper is None or cert.measured <= cert.upper + allowance
    return ok_lower and ok_upper


def certificate(
    name: str,
    measured: float,
    lower: float | None = None,
    upper: float | None = None,
    *,
    binding: bool = True,
    context: dict | None = None,
) -> BoundCertificate:
    """Build a certificate, judging it at the package certificate tolerance."""
    measured = float(measured)
    slack_lower = measured - lower if lower is not None else math.inf
    slack_upper = upper - measured if upper is not None else math.inf
    allowance = CERT_RTOL * max(1.0, abs(measured))
    satisfied = (lower is None or measured >= lower - allowance) and (
        upper is None or measured <= upper + allowance
    )
    return BoundCertificate(
        name=name,
        measured=measured,
        lower=None if lower is None else float(lower),
        upper=None if upper is None else float(upper),
        slack_lower=float(slack_lower),
        slack_upper=float(slack_upper),
        satisfied=satisfied,
        binding=binding,
        context=dict(context or {}),
    )


def equality_certificate(
    name: str,
    measured: float,
    target: float,
    *,
    atol: float = SHARP_EQUALITY_ATOL,
    context: dict | None = None,
) -> BoundCertificate:
    """Certificate asserting a sharp equality within an absolute slack."""
    measured = float(measured)
    target = float(target)
    return BoundCertificate(
        name=name,
        measured=measured,
        lower=target,
        upper=target,
        slack_lower=measured - target,
        slack_upper=target - measured,
        satisfied=abs(measured - target) <= atol,
        binding=True,
        context=dict(context or {}),
    )


# ---------------------------------------------------------------------------
# The omega-dependent constants
# ---------------------------------------------------------------------------


def _check_omega(omega: float) -> float:
    omega = float(omega)
    if not math.isfinite(omega) or omega < 1.0:
        raise DomainError(f"condition-number parameter must be finite and >= 1, got {omega}")
    return omega


def stage_lower_bound(omega: float) -> float:
    """Lower bound ``1/omega`` for every stage growth ratio."""
    return 1.0 / _check_omega(omega)


def stage_upper_bound(omega: float) -> float:
    """Upper bound ``2(1 + omega^2)/(1 + omega)^2``: one at ``omega = 1``,
    nondecreasing, approaching two."""
    omega = _check_omega(omega)
    return 2.0 * (1.0 + omega * omega) / ((1.0 + omega) ** 2)


def ad_upper_bound(omega: float) -> float:
    """Upper growth bound ``2*sqrt(2)*(1 + omega^2)/(1 + omega)^2`` for the
    wider (Hermitian-parts) class."""
    return _SQRT2 * stage_upper_bound(omega)


def diagonal_lower_factor(omega: float) -> float:
    """Lower factor ``4*omega/(1 + omega)^2`` for active diagonal moduli."""
    omega = _check_omega(omega)
    return 4.0 * omega / ((1.0 + omega) ** 2)


# ---------------------------------------------------------------------------
# Two-dimensional domination inequality
# ---------------------------------------------------------------------------


def _clamp_angle(phi: float) -> float:
    p = float(phi)
    if not math.isfinite(p):
        raise DomainError(f"angle must be finite, got {p}")
    if abs(p) > math.pi:
        if abs(p) - math.pi <= 1e-12:
            return math.copysign(math.pi, p)
        raise DomainError(f"angle must lie in [-pi, pi], got {p}")
    return p


def theta(phi: float) -> float:
    """Piecewise-linear angle map with range ``[0, pi/2]``.

    Equals ``-phi/3`` on ``[-pi, 0)``, ``phi`` on ``[0, pi/2]`` and
    ``(2*pi - phi)/3`` on ``(pi/2, pi]``; continuous at ``0`` and ``pi/2``.
    Inputs within 1e-12 of ``+-pi`` (grid-endpoint rounding) are clamped.

    Raises
    ------
    DomainError
        If ``|phi|`` exceeds ``pi`` beyond the clamp window.
    """
    p = _clamp_angle(phi)
    if p < 0.0:
        return -p / 3.0
    if p <= math.pi / 2.0:
        return p
    return (2.0 * math.pi - p) / 3.0


@dataclass(frozen=True)
class DominationWitness:
    """PSD witness for the two-dimensional domination bound.

    ``K`` is ``diag(cos(theta), sin(theta))`` minus the Hermitian-form
    matrix of the angle/ratio pair; its smallest eigenvalue certifies the
    inequality.  ``det_identity_residual`` is the scaled defect of the
    closed-form determinant expression on the branch where it applies: on
    the outer branches ``(1 + d^2) det K`` has the closed form
    ``4 sin(theta) cos(theta) (sin(theta) - d cos(theta))^2``, while on the
    middle branch (``0 <= phi <= pi/2``) ``K`` is rank one and the
    determinant itself vanishes identically.  The residual is normalized by
    the magnitude of the products entering the 2x2 determinant, because
    both sides grow like ``d^2`` and an absolute comparison would drown in
    rounding for extreme ``d``.
    """

    phi: float
    d: float
    theta: float
    K: np.ndarray
    lambda_min_K: float
    det_identity_residual: float


def domination_witness(phi: float, d: float) -> DominationWitness:
    """Construct the 2x2 PSD witness for an angle ``phi`` and ratio ``d > 0``.

    Raises
    ------
    DomainError
        If ``d`` is not positive and finite or ``phi`` is out of range.
    """
    d = float(d)
    if not math.isfinite(d) or d <= 0.0:
        raise DomainError(f"ratio must be positive and finite, got {d}")
    p = _clamp_angle(phi)
    th = theta(p)
    ct, st = math.cos(th), math.sin(th)
    cp, sp = math.cos(p), math.sin(p)
    denom = 1.0 + d * d
    rd = math.sqrt(d)
    if 0.0 <= p <= math.pi / 2.0:
        # middle branch: theta == phi makes K rank one, and the factored
        # form avoids the cancellation the generic subtraction would incur
        mu = (d * cp + sp) / denom
        k00 = d * mu
        k01 = -rd * mu
        k11 = mu
    else:
        h00 = (cp - d * sp) / denom
        h11 = d * (d * sp - cp) / denom
        k00 = ct - h00
        k01 = -rd * (d * cp + sp) / denom
        k11 = st - h11
    K = np.array([[k00, k01], [k01, k11]])
    K.setflags(write=False)
    lam_min = 0.5 * ((k00 + k11) - math.hypot(k00 - k11, 2.0 * k01))
    det_k = k00 * k11 - k01 * k01
    lhs = denom * det_k
    scale = max(1.0, denom * (abs(k00 * k11) + k01 * k01))
    if 0.0 <= p <= math.pi / 2.0:
        residual = abs(lhs) / scale
    else:
        rhs = 4.0 * st * ct * (st - d * ct) ** 2
        residual = abs(lhs - rhs) / max(scale, abs(rhs))
    return DominationWitness(
        phi=p,
        d=d,
        theta=th,
        K=K,
        lambda_min_K=lam_min,
        det_identity_residual=residual,
    )


def domination_inequality_check(
    phi: float, d: float, s: complex, t: complex
) -> BoundCertificate:
    """Certify the two-dimensional domination inequality at one point.

    Measures ``Re(e^{-i phi} (conj(s) + i conj(t)) (s + i t) / (1 + i d))``
    against the upper bound
    ``cos(theta(phi)) |s|^2 + sin(theta(phi)) |t|^2 / d``.
    """
    d = float(d)
    if not math.isfinite(d) or d <= 0.0:
        raise DomainError(f"ratio must be positive and finite, got {d}")
    p = _clamp_angle(phi)
    th = theta(p)
    s = complex(s)
    t = complex(t)
    left = (
        cmath.exp(-1j * p)
        * (s.conjugate() + 1j * t.conjugate())
        * (s + 1j * t)
        / (1.0 + 1j * d)
    ).real
    right = math.cos(th) * abs(s) ** 2 + math.sin(th) * abs(t) ** 2 / d
    return certificate(
        "two-dimensional-domination",
        left,
        upper=right,
        context={"phi": p, "d": d},
    )


# ---------------------------------------------------------------------------
# Kantorovich block estimate and the trailing-scalar bounds
# ---------------------------------------------------------------------------


def kantorovich_check(H: Any, omega: float) -> BoundCertificate:
    """Certify the block estimate ``h* H11^{-1} h <= c^2 eta`` with
    ``c = (kappa - 1)/(kappa + 1)``.

    ``H`` is Hermitian positive definite with a scalar trailing block
    ``eta``; ``h`` is the trailing column above it.  The bound uses the
    measured condition number and is sharp for the 2x2 matrix with unit
    diagonal and off-diagonal ``c``.

    Raises
    ------
    NotPositiveDefinite
        If ``H`` fails its definiteness test.
    KappaExceeded
        If the measured condition number exceeds ``omega`` beyond the
        certificate tolerance.
    """
    omega = _check_omega(omega)
    a = as_complex_array(H, square=True)
    n = a.shape[0]
    if n < 2:
        raise DomainError("need at least a 1x1 leading block plus the trailing scalar")
    h = _require_hermitian(a, "Kantorovich input")
    spectrum = hermitian_eigenvalues(h)
    scale = max(abs(spectrum.min), abs(spectrum.max))
    if spectrum.min <= PD_TOL_FACTOR * scale or spectrum.min <= 0.0:
        raise NotPositiveDefinite(
            f"smallest eigenvalue {spectrum.min:.6e} is not positive"
        )
    kappa = spectrum.max / spectrum.min
    if kappa > omega * (1.0 + CERT_RTOL):
        raise KappaExceeded(
            f"measured condition number {kappa:.6g} exceeds the cap {omega:.6g}"
        )
    col = h[:-1, -1]
    eta = float(h[-1, -1].real)
    solved = np.linalg.solve(h[:-1, :-1], col)
    measured = float(np.real(np.vdot(col, solved)))
    c = (kappa - 1.0) / (kappa + 1.0)
    return certificate(
        "block-kantorovich",
        measured,
        upper=c * c * eta,
        context={"kappa": kappa, "eta": eta},
    )


def scalar_schur_certificate(
    M: Any, omega: float
) -> tuple[BoundCertificate, BoundCertificate]:
    """Certify the trailing-scalar Schur bounds of a class member.

    Partition the matrix with a scalar trailing block ``alpha`` and let
    ``q = a_{n,1:n-1} A11^{-1} a_{1:n-1,n}`` and ``sigma = alpha - q`` (the
    one-step trailing Schur scalar).  Returns two certificates:

    * ``|q| <= ((omega - 1)/(omega + 1))^2 |alpha|``;
    * ``4 omega/(1 + omega)^2 |alpha| <= |sigma|
      <= 2 (1 + omega^2)/(1 + omega)^2 |alpha|``.

    ``omega`` here is the measured worst condition number of the validated
    parts; the argument is only a cap.

    Raises
    ------
    NotInClass
        If the matrix has an indefinite Hermitian or skew part.
    KappaExceeded
        If the measured condition number exceeds the cap.
    """
    cap = _check_omega(omega)
    ad = as_accretive_dissipative_matrix(M)
    if ad.n < 2:
        raise DomainError("need dimension at least 2 for a scalar trailing block")
    measured_omega = ad.omega
    if measured_omega > cap * (1.0 + CERT_RTOL):
        raise KappaExceeded(
            f"measured condition number {measured_omega:.6g} exceeds the cap {cap:.6g}"
        )
    a = ad.matrix
    row = a[-1, :-1]
    col = a[:-1, -1]
    alpha = complex(a[-1, -1])
    q = complex(row @ np.linalg.solve(a[:-1, :-1], col))
    sigma = alpha - q
    c = (measured_omega - 1.0) / (measured_omega + 1.0)
    context = {
        "omega": measured_omega,
        "alpha_modulus": abs(alpha),
        "q": q,
        "sigma": sigma,
    }
    q_cert = certificate(
        "trailing-update-magnitude",
        abs(q),
        upper=c * c * abs(alpha),
        context=context,
    )
    sigma_cert = certificate(
        "trailing-schur-scalar",
        abs(sigma),
        lower=diagonal_lower_factor(measured_omega) * abs(alpha),
        upper=stage_upper_bound(measured_omega) * abs(alpha),
        context=context,
    )
    return q_cert, sigma_cert


# ---------------------------------------------------------------------------
# Growth certificates for the two classes
# ---------------------------------------------------------------------------


def _higham_report_and_certificates(
    hm: HighamMatrix,
) -> tuple[GrowthReport, list[BoundCertificate]]:
    omega = hm.omega
    trace = eliminate_no_pivot(hm.matrix)
    report = growth_report(trace)
    lo = stage_lower_bound(omega)
    up = stage_upper_bound(omega)
    certs = [
        certificate(
            "overall-growth-ratio", report.rho, lo, up, context={"omega": omega}
        ),
        certificate(
            "overall-growth-below-two", report.rho, upper=2.0, context={"omega": omega}
        ),
    ]
    for k, ratio in enumerate(report.rho_stage, start=1):
        certs.append(
            certificate(
                f"stage-growth-ratio[{k}]",
                ratio,
                lo,
                up,
                context={"omega": omega, "stage": k},
            )
        )
    return report, certs


def higham_growth_certificates(A: Any) -> list[BoundCertificate]:
    """Stage-wise and overall growth certificates for a symmetric-class
    member: every ratio lies in
    ``[1/omega, 2(1 + omega^2)/(1 + omega)^2]`` and the overall growth is
    below two.
    """
    _, certs = _higham_report_and_certificates(as_higham_matrix(A))
    return certs


def _ad_report_and_certificates(
    ad: AccretiveDissipativeMatrix,
) -> tuple[GrowthReport, list[BoundCertificate]]:
    omega = ad.omega
    a = ad.matrix
    trace = eliminate_no_pivot(a)
    report = growth_report(trace)
    lo = stage_lower_bound(omega)
    up_binding = ad_upper_bound(omega)
    up_conjectured = stage_upper_bound(omega)
    diag_lo = diagonal_lower_factor(omega)
    original_diag = np.abs(np.diagonal(a))
    certs = [
        certificate(
            "overall-growth-ratio",
            report.rho,
            lo,
            up_binding,
            context={"omega": omega},
        )
    ]
    for k, active in enumerate(trace.actives, start=1):
        diag_moduli = np.abs(np.diagonal(active.array))
        certs.append(
            certificate(
                f"entry-vs-diagonal[{k}]",
                float(trace.stage_max[k - 1] / diag_moduli.max()),
                upper=_SQRT2,
                context={"omega": omega, "stage": k},
            )
        )
        for offset, value in enumerate(diag_moduli):
            j = k + offset + 1
            ref = float(original_diag[j - 1])
            certs.append(
                certificate(
                    f"active-diagonal[{k},{j}]",
                    float(value),
                    diag_lo * ref,
                    up_conjectured * ref,
                    context={"omega": omega, "stage": k, "index": j},
                )
            )
    certs.append(
        certificate(
            "overall-growth-conjectured-bound",
            report.rho,
            upper=up_conjectured,
            binding=False,
            context={"omega": omega},
        )
    )
    return report, certs


def ad_growth_certificates(A: Any) -> list[BoundCertificate]:
    """Growth certificates for a Hermitian-parts class member.

    Covers the overall growth against
    ``[1/omega, 2*sqrt(2)*(1 + omega^2)/(1 + omega)^2]``, the per-stage
    max-entry-to-diagonal ratio against ``sqrt(2)``, the two-sided bounds on
    every active diagonal modulus relative to its original entry, and a
    non-binding record of the overall growth against the conjectured
    sharper constant ``2(1 + omega^2)/(1 + omega)^2``.
    """
    _, certs = _ad_report_and_certificates(as_accretive_dissipative_matrix(A))
    return certs


# ---------------------------------------------------------------------------
# Loewner lower bounds for active parts
# ---------------------------------------------------------------------------


def loewner_schur_check(A: Any, k: int) -> tuple[BoundCertificate, BoundCertificate]:
    """Certify the Loewner lower bounds of the stage-``k`` active matrix.

    With ``S_k`` the Schur complement after the leading ``k``-block and
    ``R_k``/``T_k`` its Hermitian/skew parts, certifies (as smallest
    eigenvalues, bundled via their minimum):

    * ``R_k >= (Schur complement of the Hermitian part)`` and
      ``R_k >= lambda_min(B) I``;
    * the same pair for ``T_k`` against the skew part.

    Both certificates carry the individual eigenvalue slacks in their
    context.
    """
    ad = as_accretive_dissipative_matrix(A)
    if not 1 <= k < ad.n:
        raise DomainError(f"stage must satisfy 1 <= k < {ad.n}, got {k}")
    s = schur_complement(ad.matrix, k).array
    r_part = (s + s.conj().T) / 2.0
    t_part = (s - s.conj().T) * (-0.5j)
    b_schur = schur_complement(np.asarray(ad.B), k).array
    c_schur = schur_complement(np.asarray(ad.C), k).array
    b_schur = (b_schur + b_schur.conj().T) / 2.0
    c_schur = (c_schur + c_schur.conj().T) / 2.0
    dom_r = float(_eigvalsh(r_part - b_schur)[0])
    dom_t = float(_eigvalsh(t_part - c_schur)[0])
    floor_r = float(_eigvalsh(r_part)[0]) - ad.spectrum_B.min
    floor_t = float(_eigvalsh(t_part)[0]) - ad.spectrum_C.min
    r_cert = certificate(
        f"hermitian-part-schur-floors[{k}]",
        min(dom_r, floor_r),
        lower=0.0,
        context={"stage": k, "domination_slack": dom_r, "floor_slack": floor_r},
    )
    t_cert = certificate(
        f"skew-part-schur-floors[{k}]",
        min(dom_t, floor_t),
        lower=0.0,
        context={"stage": k, "domination_slack": dom_t, "floor_slack": floor_t},
    )
    return r_cert, t_cert


# ---------------------------------------------------------------------------
# Sectorial route
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SectorInfo:
    """Per-matrix sector data.

    ``delta`` is the spectral norm of the congruence-normalized part
    difference (always below one for a valid member), ``alpha`` its
    arctangent, and ``refined_bound = 1 + delta^2 < 2`` the induced growth
    bound.
    """

    delta: float
    alpha: float
    refined_bound: float


def drury_sector(A: Any) -> SectorInfo:
    """Sector data of a symmetric-class member.

    Computes ``delta`` as the largest eigenvalue modulus of
    ``L^{-1} (C - B) L^{-T}`` where ``L`` is the Cholesky factor of
    ``B + C``; this equals the spectral norm of the congruence-normalized
    difference of the parts.

    Raises
    ------
    NotInClass
        If the input is not a valid member (propagated from validation, or
        defensively if the computed norm reaches one).
    """
    hm = as_higham_matrix(A)
    b = np.asarray(hm.B, dtype=np.float64)
    c = np.asarray(hm.C, dtype=np.float64)
    L = cholesky(b + c)
    half = _solve_lower(L, c - b)
    w_mat = _solve_lower(L, half.T).T
    w_mat = (w_mat + w_mat.T) / 2.0
    eigs = _jacobi(w_mat)
    delta = float(max(abs(eigs[0]), abs(eigs[-1])))
    if delta >= 1.0:
        raise NotInClass(
            f"normalized part difference has norm {delta:.6g} >= 1; "
            "the parts do not define a valid sector"
        )
    return SectorInfo(
        delta=delta, alpha=math.atan(delta), refined_bound=1.0 + delta * delta
    )


def fischer_sector_check(A: Any, alpha: float, p: int) -> BoundCertificate:
    """Certify the sectorial determinant split at a leading block size.

    Measures ``|det A|`` against
    ``sec^2(m * alpha) |det A11| |det A22|`` with ``m = min(p, n - p)``.
    Sector membership (half-angle ``alpha``) is the caller's assertion; for
    symmetric-class members use :func:`drury_sector`'s angle or ``pi/4``.

    Raises
    ------
    AngleOutOfRange
        If ``alpha`` is negative, non-finite, or ``m * alpha >= pi/2``.
    DomainError
        If ``p`` does not split the matrix.
    """
    a = as_complex_array(A, square=True)
    n = a.shape[0]
    if not 1 <= p < n:
        raise DomainError(f"leading block size must satisfy 1 <= p < {n}, got {p}")
    alpha = float(alpha)
    m = min(p, n - p)
    if not math.isfinite(alpha) or alpha < 0.0 or m * alpha >= math.pi / 2.0:
        raise AngleOutOfRange(
            f"need 0 <= m*alpha < pi/2, got alpha={alpha} with m={m}"
        )
    sec = 1.0 / math.cos(m * alpha)
    measured = abs(determinant(a))
    bound = sec * sec * abs(determinant(a[:p, :p])) * abs(determinant(a[p:, p:]))
    return certificate(
        "sectorial-determinant-split",
        measured,
        upper=bound,
        context={"alpha": alpha, "p": p, "m": m},
    )
