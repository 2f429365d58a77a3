"""Verification campaigns: seeded sweeps over both matrix classes, a
conjecture search over the wider class, the fixed counterexample battery,
and machine-readable reporting.

A campaign is a pure function of its config.  Per-sample seeds are derived
from (base seed, dimension, grid index, sample index), so results do not
depend on evaluation order; the driver here runs cells sequentially and
merges results in (n, omega, sample) order, which makes reports
byte-identical across runs (a timestamp in the metadata is the only
nondeterministic field, and it is excluded from the comparable body).
"""

from __future__ import annotations

import csv
import datetime as _dt
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any, Callable

from . import __version__
from .bounds import (
    BoundCertificate,
    _ad_report_and_certificates,
    _higham_report_and_certificates,
    ad_upper_bound,
    certificate,
    certificate_satisfied,
    diagonal_lower_factor,
    drury_sector,
    kantorovich_check,
    scalar_schur_certificate,
    stage_lower_bound,
    stage_upper_bound,
)
from .classes import diagonal_maximality_check
from .elimination import eliminate_no_pivot, growth_report
from .errors import ConfigError, GrowthcertError
from .generators import (
    SPECTRUM_STYLES,
    SamplerConfig,
    diag_lower_example,
    extremal_pair,
    gap_examples,
    per_sample_seed,
    random_ad,
    random_higham,
)
from .kernels import backend_name
from .matrixio import matrix_to_text
from .tolerances import CERT_RTOL, SHARP_EQUALITY_ATOL

__all__ = [
    "CAMPAIGN_MODES",
    "CampaignConfig",
    "CellRecord",
    "Finding",
    "CheckResult",
    "CampaignReport",
    "load_campaign_config",
    "run_campaign",
    "emit_report",
    "report_body_bytes",
    "write_report",
]

CAMPAIGN_MODES = (
    "verify-higham",
    "verify-ad",
    "conjecture-search",
    "drury",
    "counterexamples",
    "extremal-sweep",
)

_SAMPLING_MODES = ("verify-higham", "verify-ad", "conjecture-search", "drury")

_SAMPLING_NOTE = (
    "samples draw part spectra pinned at [1, omega] (interior per "
    "spectrum_style) conjugated by Haar rotations; this is one reasonable "
    "probability model over each class, not canonical"
)

_SQRT2 = math.sqrt(2.0)


# ---------------------------------------------------------------------------
# Config
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CampaignConfig:
    """Validated campaign parameters.

    ``cert_tol`` overrides the relative tolerance used to judge binding
    certificates; ``sharp_tol`` the absolute slack for sharp-equality
    checks.  ``output_path`` selects the report format by extension
    (``.csv`` for CSV, anything else JSON).
    """

    mode: str
    n_list: tuple[int, ...] = ()
    omega_grid: tuple[float, ...] = ()
    samples_per_cell: int = 0
    seed: int = 0
    cert_tol: float = CERT_RTOL
    sharp_tol: float = SHARP_EQUALITY_ATOL
    spectrum_style: str = "log-uniform"
    output_path: str | None = None

    def __post_init__(self) -> None:
        if self.mode not in CAMPAIGN_MODES:
            raise ConfigError(
                f"unknown mode {self.mode!r}; expected one of {CAMPAIGN_MODES}"
            )
        object.__setattr__(self, "n_list", tuple(self.n_list))
        object.__setattr__(self, "omega_grid", tuple(self.omega_grid))
        for n in self.n_list:
            if not isinstance(n, int) or isinstance(n, bool) or n < 2:
                raise ConfigError(f"n_list entries must be integers >= 2, got {n!r}")
        for omega in self.omega_grid:
            if not isinstance(omega, (int, float)) or isinstance(omega, bool):
                raise ConfigError(f"omega_grid entries must be numbers, got {omega!r}")
            if not math.isfinite(float(omega)) or float(omega) < 1.0:
                raise ConfigError(f"omega_grid entries must be >= 1, got {omega!r}")
        object.__setattr__(
            self, "omega_grid", tuple(float(w) for w in self.omega_grid)
        )
        if self.mode in _SAMPLING_MODES:
            if not self.n_list:
                raise ConfigError(f"mode {self.mode!r} requires a nonempty n_list")
            if not self.omega_grid:
                raise ConfigError(f"mode {self.mode!r} requires a nonempty omega_grid")
            if self.samples_per_cell < 1:
                raise ConfigError(
                    f"mode {self.mode!r} requires samples_per_cell >= 1, "
                    f"got {self.samples_per_cell!r}"
                )
        if self.mode == "extremal-sweep" and not self.omega_grid:
            raise ConfigError("mode 'extremal-sweep' requires a nonempty omega_grid")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise ConfigError(f"seed must be an integer, got {self.seed!r}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must fit in 64 bits, got {self.seed!r}")
        for name in ("cert_tol", "sharp_tol"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ConfigError(f"{name} must be a number, got {value!r}")
            if not math.isfinite(float(value)) or float(value) <= 0.0:
                raise ConfigError(f"{name} must be positive, got {value!r}")
            object.__setattr__(self, name, float(value))
        if self.spectrum_style not in SPECTRUM_STYLES:
            raise ConfigError(
                f"spectrum_style must be one of {SPECTRUM_STYLES}, "
                f"got {self.spectrum_style!r}"
            )
        if self.output_path is not None and not isinstance(self.output_path, str):
            raise ConfigError(f"output_path must be a string, got {self.output_path!r}")


_CONFIG_KEYS = (
    "mode",
    "n_list",
    "omega_grid",
    "samples_per_cell",
    "seed",
    "cert_tol",
    "sharp_tol",
    "spectrum_style",
    "output_path",
)


def load_campaign_config(source: Any) -> CampaignConfig:
    """Load a config from a JSON file path, a readable stream, or a dict.

    Unknown keys are rejected; every parse or validation failure raises
    :class:`~growthcert.errors.ConfigError`.
    """
    if isinstance(source, dict):
        data = source
    else:
        try:
            if hasattr(source, "read"):
                data = json.load(source)
            else:
                with open(source, "r", encoding="utf-8") as handle:
                    data = json.load(handle)
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"config root must be an object, got {type(data).__name__}")
    unknown = sorted(set(data) - set(_CONFIG_KEYS))
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    if "mode" not in data:
        raise ConfigError("config is missing the required key 'mode'")
    kwargs = dict(data)
    if "n_list" in kwargs:
        raw = kwargs["n_list"]
        if not isinstance(raw, (list, tuple)):
            raise ConfigError(f"n_list must be a list, got {raw!r}")
        kwargs["n_list"] = tuple(raw)
    if "omega_grid" in kwargs:
        raw = kwargs["omega_grid"]
        if not isinstance(raw, (list, tuple)):
            raise ConfigError(f"omega_grid must be a list, got {raw!r}")
        kwargs["omega_grid"] = tuple(raw)
    for name in ("samples_per_cell", "seed"):
        if name in kwargs and (
            not isinstance(kwargs[name], int) or isinstance(kwargs[name], bool)
        ):
            raise ConfigError(f"{name} must be an integer, got {kwargs[name]!r}")
    try:
        return CampaignConfig(**kwargs)
    except TypeError as exc:
        raise ConfigError(f"invalid config: {exc}") from exc


# ---------------------------------------------------------------------------
# Report structures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Finding:
    """A sampled matrix worth keeping: a binding-certificate violation or an
    exceedance of the non-binding conjectured constant.  Carries the full
    matrix serialization so it can be re-checked independently."""

    kind: str
    n: int
    omega: float
    sample_index: int
    certificate_name: str
    measured: float
    lower: float | None
    upper: float | None
    matrix_text: str


@dataclass(frozen=True)
class CellRecord:
    """Aggregates for one (n, omega) cell."""

    n: int
    omega: float
    sample_count: int
    failed_samples: int
    rho_min: float
    rho_max: float
    rho_mean: float
    worst_slack: float
    worst_slack_certificate: str
    violations: tuple[dict, ...]


@dataclass(frozen=True)
class CheckResult:
    """One named reproduction check (counterexample battery or extremal
    sweep): measured value, reference value, and verdict."""

    name: str
    passed: bool
    measured: float
    expected: float | None = None
    detail: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "passed", bool(self.passed))
        object.__setattr__(self, "measured", float(self.measured))
        if self.expected is not None:
            object.__setattr__(self, "expected", float(self.expected))


@dataclass(frozen=True)
class CampaignReport:
    mode: str
    cells: tuple[CellRecord, ...]
    findings: tuple[Finding, ...]
    checks: tuple[CheckResult, ...]
    metadata: dict = field(default_factory=dict)

    @property
    def binding_violations(self) -> int:
        """Total binding failures: per-cell certificate violations plus
        failed reproduction checks."""
        from_cells = sum(len(cell.violations) for cell in self.cells)
        from_checks = sum(1 for check in self.checks if not check.passed)
        return from_cells + from_checks


# ---------------------------------------------------------------------------
# Sampling-mode driver
# ---------------------------------------------------------------------------


def _min_slack(cert: BoundCertificate) -> float:
    return min(cert.slack_lower, cert.slack_upper)


def _cell_loop(
    config: CampaignConfig,
    evaluate: Callable[[SamplerConfig], tuple[float, list[BoundCertificate], Any]],
) -> tuple[tuple[CellRecord, ...], tuple[Finding, ...]]:
    """Run ``evaluate`` over every (n, omega, sample) coordinate.

    ``evaluate`` returns (rho, certificates, matrix-like) for one sample;
    certificate verdicts are re-judged under ``config.cert_tol``.
    """
    cells: list[CellRecord] = []
    findings: list[Finding] = []
    for n in config.n_list:
        for omega_index, omega in enumerate(config.omega_grid):
            rhos: list[float] = []
            failed = 0
            violations: list[dict] = []
            worst = math.inf
            worst_name = ""
            for sample_index in range(config.samples_per_cell):
                sampler = SamplerConfig(
                    n=n,
                    omega=omega,
                    seed=per_sample_seed(config.seed, n, omega_index, sample_index),
                    spectrum_style=config.spectrum_style,
                )
                try:
                    rho, certs, matrix = evaluate(sampler)
                except GrowthcertError:
                    failed += 1
                    continue
                rhos.append(rho)
                for cert in certs:
                    slack = _min_slack(cert)
                    if slack < worst:
                        worst = slack
                        worst_name = cert.name
                    ok = certificate_satisfied(cert, config.cert_tol)
                    if ok:
                        continue
                    if cert.binding:
                        violations.append(
                            {
                                "sample_index": sample_index,
                                "certificate": cert.name,
                                "measured": cert.measured,
                                "lower": cert.lower,
                                "upper": cert.upper,
                            }
                        )
                        kind = "binding-violation"
                    else:
                        kind = "conjecture-exceedance"
                    findings.append(
                        Finding(
                            kind=kind,
                            n=n,
                            omega=omega,
                            sample_index=sample_index,
                            certificate_name=cert.name,
                            measured=cert.measured,
                            lower=cert.lower,
                            upper=cert.upper,
                            matrix_text=matrix_to_text(
                                matrix,
                                comment=(
                                    f"{kind} {cert.name} n={n} omega={omega!r} "
                                    f"sample={sample_index}"
                                ),
                            ),
                        )
                    )
            count = len(rhos)
            cells.append(
                CellRecord(
                    n=n,
                    omega=omega,
                    sample_count=count,
                    failed_samples=failed,
                    rho_min=min(rhos) if rhos else math.nan,
                    rho_max=max(rhos) if rhos else math.nan,
                    rho_mean=(sum(rhos) / count) if rhos else math.nan,
                    worst_slack=worst if count else math.nan,
                    worst_slack_certificate=worst_name,
                    violations=tuple(violations),
                )
            )
    return tuple(cells), tuple(findings)


def _evaluate_higham(sampler: SamplerConfig):
    hm = random_higham(sampler)
    report, certs = _higham_report_and_certificates(hm)
    return report.rho, certs, hm.matrix


def _evaluate_ad(sampler: SamplerConfig):
    ad = random_ad(sampler)
    report, certs = _ad_report_and_certificates(ad)
    return report.rho, certs, ad.matrix


def _evaluate_conjecture(sampler: SamplerConfig):
    """Slim per-sample path for large searches: overall growth against the
    proven constant (binding) and the conjectured one (non-binding)."""
    ad = random_ad(sampler)
    omega = ad.omega
    report = growth_report(eliminate_no_pivot(ad.matrix))
    certs = [
        certificate(
            "overall-growth-ratio",
            report.rho,
            stage_lower_bound(omega),
            ad_upper_bound(omega),
            context={"omega": omega},
        ),
        certificate(
            "overall-growth-conjectured-bound",
            report.rho,
            upper=stage_upper_bound(omega),
            binding=False,
            context={"omega": omega},
        ),
    ]
    return report.rho, certs, ad.matrix


def _evaluate_drury(sampler: SamplerConfig):
    hm = random_higham(sampler)
    report = growth_report(eliminate_no_pivot(hm.matrix))
    info = drury_sector(hm)
    certs = [
        certificate(
            "refined-growth-bound",
            report.rho,
            upper=info.refined_bound,
            context={"delta": info.delta},
        ),
        certificate(
            "refined-bound-below-two",
            info.refined_bound,
            upper=2.0,
            context={"delta": info.delta},
        ),
    ]
    return report.rho, certs, hm.matrix


_EVALUATORS = {
    "verify-higham": _evaluate_higham,
    "verify-ad": _evaluate_ad,
    "conjecture-search": _evaluate_conjecture,
    "drury": _evaluate_drury,
}


# ---------------------------------------------------------------------------
# Check modes
# ---------------------------------------------------------------------------


def _equality_check(
    name: str, measured: float, expected: float, atol: float, detail: str = ""
) -> CheckResult:
    return CheckResult(
        name=name,
        passed=abs(measured - expected) <= atol,
        measured=float(measured),
        expected=float(expected),
        detail=detail,
    )


def _extremal_sweep_checks(config: CampaignConfig) -> tuple[CheckResult, ...]:
    checks: list[CheckResult] = []
    diag_dims = config.n_list or (5,)
    for omega in config.omega_grid:
        a_minus, a_plus = extremal_pair(omega)
        upper = stage_upper_bound(omega)
        rho_plus = growth_report(eliminate_no_pivot(a_plus.matrix)).rho
        checks.append(
            _equality_check(
                f"upper-endpoint-growth[omega={omega!r}]",
                rho_plus,
                upper,
                config.sharp_tol,
                detail="2x2 upper-endpoint member attains the stage upper bound",
            )
        )
        _, sigma_cert = scalar_schur_certificate(a_minus, omega)
        checks.append(
            _equality_check(
                f"lower-endpoint-schur-scalar[omega={omega!r}]",
                sigma_cert.measured,
                diagonal_lower_factor(omega) * _SQRT2,
                config.sharp_tol,
                detail="2x2 lower-endpoint member attains the scalar lower endpoint",
            )
        )
        info = drury_sector(a_plus)
        checks.append(
            _equality_check(
                f"upper-endpoint-refined-bound[omega={omega!r}]",
                info.refined_bound,
                upper,
                config.sharp_tol,
                detail="normalized part difference squared matches the upper constant",
            )
        )
        for n in diag_dims:
            report = growth_report(
                eliminate_no_pivot(diag_lower_example(max(omega, 1.0), n).matrix)
            )
            checks.append(
                _equality_check(
                    f"diagonal-example-growth[omega={omega!r},n={n}]",
                    report.rho,
                    1.0 / omega,
                    config.sharp_tol,
                    detail="diagonal example attains the stage lower bound",
                )
            )
    return tuple(checks)


def _counterexample_checks(config: CampaignConfig) -> tuple[CheckResult, ...]:
    """Fixed battery reproducing the documented counterexample numerics and
    the extremal equalities at canonical parameter values."""
    checks: list[CheckResult] = []
    atol = config.sharp_tol

    # First counterexample, r = 1/2: trailing update value and the failure
    # of the entrywise-modulus shortcut.
    r = 0.5
    gaps = gap_examples(r)
    a1 = gaps.gap1.matrix
    q = complex(a1[1, 0] * a1[0, 1] / a1[0, 0])
    q_expected = (3.0 / 32.0) * (1.0 - 1.0j)
    checks.append(
        CheckResult(
            name="gap1-trailing-update-value[r=0.5]",
            passed=abs(q - q_expected) <= 1e-14,
            measured=abs(q - q_expected),
            expected=0.0,
            detail="q equals 3/32*(1-i) to 1e-14",
        )
    )
    imag_sq = q.imag**2
    modulus_route = (r**4) / 16.0
    checks.append(
        CheckResult(
            name="gap1-imaginary-part-dominates[r=0.5]",
            passed=(abs(imag_sq - 9.0 * r**4 / 64.0) <= 1e-14)
            and (imag_sq > modulus_route),
            measured=imag_sq,
            expected=9.0 * r**4 / 64.0,
            detail="(Im q)^2 = 9r^4/64 strictly exceeds the entrywise-modulus value r^4/16",
        )
    )

    # Second counterexample, r = 0.9: off-diagonal growth past sqrt(2) and
    # the failure of diagonal maximality in the wider class.
    gaps9 = gap_examples(0.9)
    a2 = gaps9.gap2.matrix
    off = abs(a2[0, 1])
    checks.append(
        CheckResult(
            name="gap2-offdiagonal-exceeds-sqrt2[r=0.9]",
            passed=abs(off - 1.8) <= atol and off > _SQRT2,
            measured=off,
            expected=1.8,
            detail="largest entry modulus 2r exceeds sqrt(2) times the diagonal maximum",
        )
    )
    diag_check = diagonal_maximality_check(a2)
    checks.append(
        CheckResult(
            name="gap2-diagonal-maximality-fails[r=0.9]",
            passed=not diag_check.holds,
            measured=diag_check.worst_ratio,
            expected=None,
            detail="strict diagonal dominance of moduli fails off the symmetric class",
        )
    )
    rho2 = growth_report(eliminate_no_pivot(a2)).rho
    omega2 = gaps9.gap2.omega
    checks.append(
        CheckResult(
            name="gap2-growth-within-bounds[r=0.9]",
            passed=abs(rho2 - _SQRT2 / 1.8) <= atol and rho2 >= 1.0 / omega2 - atol,
            measured=rho2,
            expected=_SQRT2 / 1.8,
            detail="growth sqrt(2)/1.8 still respects the lower bound 1/omega",
        )
    )

    # Third counterexample, omega = 4: growth below the post-elimination
    # diagonal floor, showing the convention matters.
    gap3 = gaps.gap3
    rho3 = growth_report(eliminate_no_pivot(gap3.matrix)).rho
    floor = diagonal_lower_factor(4.0)
    checks.append(
        CheckResult(
            name="gap3-growth-below-diagonal-floor[omega=4]",
            passed=abs(rho3 - 0.25) <= atol and rho3 < floor,
            measured=rho3,
            expected=0.25,
            detail="growth 1/omega sits strictly below 4*omega/(1+omega)^2 = 0.64",
        )
    )

    # Extremal equalities at omega = 3.
    omega = 3.0
    a_minus, a_plus = extremal_pair(omega)
    rho_plus = growth_report(eliminate_no_pivot(a_plus.matrix)).rho
    checks.append(
        _equality_check(
            "extremal-upper-growth[omega=3]",
            rho_plus,
            stage_upper_bound(omega),
            atol,
            detail="upper-endpoint member reaches 1.25",
        )
    )
    _, sigma_cert = scalar_schur_certificate(a_minus, omega)
    checks.append(
        _equality_check(
            "extremal-lower-schur-scalar[omega=3]",
            sigma_cert.measured,
            diagonal_lower_factor(omega) * _SQRT2,
            atol,
            detail="lower-endpoint member reaches 4*omega/(1+omega)^2 * sqrt(2)",
        )
    )

    # Sharpness of the block estimate at the same canonical omega.
    c = (omega - 1.0) / (omega + 1.0)
    kant = kantorovich_check([[1.0, c], [c, 1.0]], omega)
    checks.append(
        CheckResult(
            name="kantorovich-sharpness[omega=3]",
            passed=abs(kant.slack_upper) <= 1e-12,
            measured=kant.measured,
            expected=kant.upper,
            detail="2x2 off-diagonal (omega-1)/(omega+1) attains the block estimate",
        )
    )
    return tuple(checks)


# ---------------------------------------------------------------------------
# Driver and serialization
# ---------------------------------------------------------------------------


def run_campaign(config: CampaignConfig) -> CampaignReport:
    """Execute a campaign and return its report.

    Sampling modes aggregate per-cell growth statistics and certificate
    verdicts; check modes run fixed reproductions.  Per-sample errors abort
    only the affected sample and are counted in the cell record.
    """
    cells: tuple[CellRecord, ...] = ()
    findings: tuple[Finding, ...] = ()
    checks: tuple[CheckResult, ...] = ()
    if config.mode in _EVALUATORS:
        cells, findings = _cell_loop(config, _EVALUATORS[config.mode])
    elif config.mode == "extremal-sweep":
        checks = _extremal_sweep_checks(config)
    else:
        checks = _counterexample_checks(config)
    metadata = {
        "version": __version__,
        "mode": config.mode,
        "seed": config.seed,
        "tolerances": {"cert_tol": config.cert_tol, "sharp_tol": config.sharp_tol},
        "spectrum_style": config.spectrum_style,
        "backend": backend_name(),
        "sampling_note": _SAMPLING_NOTE,
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
    }
    return CampaignReport(
        mode=config.mode,
        cells=cells,
        findings=findings,
        checks=checks,
        metadata=metadata,
    )


def _report_payload(report: CampaignReport, *, with_timestamp: bool) -> dict:
    metadata = dict(report.metadata)
    if not with_timestamp:
        metadata.pop("timestamp", None)
    return {
        "mode": report.mode,
        "metadata": metadata,
        "cells": [
            {
                "n": cell.n,
                "omega": cell.omega,
                "sample_count": cell.sample_count,
                "failed_samples": cell.failed_samples,
                "rho_min": cell.rho_min,
                "rho_max": cell.rho_max,
                "rho_mean": cell.rho_mean,
                "worst_slack": cell.worst_slack,
                "worst_slack_certificate": cell.worst_slack_certificate,
                "violations": list(cell.violations),
            }
            for cell in report.cells
        ],
        "findings": [
            {
                "kind": finding.kind,
                "n": finding.n,
                "omega": finding.omega,
                "sample_index": finding.sample_index,
                "certificate": finding.certificate_name,
                "measured": finding.measured,
                "lower": finding.lower,
                "upper": finding.upper,
                "matrix": finding.matrix_text,
            }
            for finding in report.findings
        ],
        "checks": [
            {
                "name": check.name,
                "passed": check.passed,
                "measured": check.measured,
                "expected": check.expected,
                "detail": check.detail,
            }
            for check in report.checks
        ],
        "binding_violations": report.binding_violations,
    }


def _csv_value(value: Any) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def emit_report(report: CampaignReport, format: str = "json") -> bytes:
    """Serialize a report deterministically.

    JSON embeds findings (including their matrix file text) inline; CSV has
    one row per (n, omega, statistic) plus one row per check and finding,
    and carries no timestamp at all.
    """
    if format == "json":
        payload = _report_payload(report, with_timestamp=True)
        text = json.dumps(payload, indent=2, sort_keys=True, allow_nan=True)
        return (text + "\n").encode("utf-8")
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "omega", "statistic", "value"])
        for cell in report.cells:
            stats = (
                ("sample_count", cell.sample_count),
                ("failed_samples", cell.failed_samples),
                ("rho_min", cell.rho_min),
                ("rho_max", cell.rho_max),
                ("rho_mean", cell.rho_mean),
                ("worst_slack", cell.worst_slack),
                ("violation_count", len(cell.violations)),
            )
            for name, value in stats:
                writer.writerow([cell.n, _csv_value(cell.omega), name, _csv_value(value)])
        for check in report.checks:
            writer.writerow(["", "", f"check[{check.name}]", 1 if check.passed else 0])
        for finding in report.findings:
            writer.writerow(
                [
                    finding.n,
                    _csv_value(finding.omega),
                    f"finding[{finding.kind}:{finding.certificate_name}]",
                    _csv_value(finding.measured),
                ]
            )
        return buffer.getvalue().encode("utf-8")
    raise ConfigError(f"unknown report format {format!r}; expected 'json' or 'csv'")


def report_body_bytes(report: CampaignReport) -> bytes:
    """Canonical comparable serialization: the JSON payload with the
    timestamp removed.  Two runs of the same config produce identical
    bodies."""
    payload = _report_payload(report, with_timestamp=False)
    text = json.dumps(payload, indent=2, sort_keys=True, allow_nan=True)
    return (text + "\n").encode("utf-8")


def write_report(report: CampaignReport, path: str) -> bytes:
    """Write a report to ``path``, choosing CSV when the extension is
    ``.csv`` and JSON otherwise.  Returns the bytes written."""
    format = "csv" if path.lower().endswith(".csv") else "json"
    data = emit_report(report, format)
    with open(path, "wb") as handle:
        handle.write(data)
    return data
