"""Command-line interface.

Subcommands
-----------
* ``growth <matrixfile>``: run pivotless elimination, print the growth report.
* ``classify <matrixfile>``: print class membership and part diagnostics.
* ``certify <matrixfile>``: print every applicable bound certificate.
* ``extremal --omega W [--minus|--plus]``: emit an endpoint member as a
  matrix file.
* ``campaign --config <file>``: run a campaign, write its report.
* ``counterexamples``: reproduce the counterexample battery, print a
  pass/fail table.

Exit codes: 0 — success with all binding certificates satisfied;
2 — a binding certificate or reproduction check failed;
3 — configuration, parsing, or input-domain error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import __version__
from .bounds import (
    BoundCertificate,
    ad_growth_certificates,
    drury_sector,
    higham_growth_certificates,
    scalar_schur_certificate,
)
from .campaign import CampaignConfig, emit_report, load_campaign_config, run_campaign, write_report
from .classes import classify
from .elimination import eliminate_no_pivot, growth_report
from .errors import GrowthcertError
from .generators import extremal_pair
from .matrixio import emit_matrix_file, parse_matrix_file

__all__ = ["main"]


class _UsageError(Exception):
    """Raised instead of argparse's default SystemExit(2), so bad usage maps
    to the config-error exit code 3."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: A003 - argparse API
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="growthcert",
        description=(
            "Pivotless Gaussian elimination growth factors and "
            "condition-number bound certificates for structured complex "
            "matrix classes."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_growth = sub.add_parser("growth", help="print the growth report for a matrix file")
    p_growth.add_argument("matrixfile", help="path to a matrix file")
    p_growth.set_defaults(func=_cmd_growth)

    p_classify = sub.add_parser("classify", help="print class membership diagnostics")
    p_classify.add_argument("matrixfile", help="path to a matrix file")
    p_classify.set_defaults(func=_cmd_classify)

    p_certify = sub.add_parser(
        "certify", help="evaluate every applicable bound certificate"
    )
    p_certify.add_argument("matrixfile", help="path to a matrix file")
    p_certify.set_defaults(func=_cmd_certify)

    p_extremal = sub.add_parser(
        "extremal", help="emit a 2x2 endpoint member as a matrix file"
    )
    p_extremal.add_argument(
        "--omega", type=float, required=True, help="part condition number (>= 1)"
    )
    side = p_extremal.add_mutually_exclusive_group()
    side.add_argument(
        "--minus", action="store_true", help="emit the lower-endpoint member"
    )
    side.add_argument(
        "--plus",
        action="store_true",
        help="emit the upper-endpoint member (default)",
    )
    p_extremal.add_argument(
        "-o", "--output", default=None, help="write to this path instead of stdout"
    )
    p_extremal.set_defaults(func=_cmd_extremal)

    p_campaign = sub.add_parser("campaign", help="run a verification campaign")
    p_campaign.add_argument(
        "--config", required=True, help="path to a JSON campaign config"
    )
    p_campaign.set_defaults(func=_cmd_campaign)

    p_counter = sub.add_parser(
        "counterexamples",
        help="reproduce the counterexample battery and extremal equalities",
    )
    p_counter.set_defaults(func=_cmd_counterexamples)
    return parser


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_growth(args: argparse.Namespace) -> int:
    matrix = parse_matrix_file(args.matrixfile)
    report = growth_report(eliminate_no_pivot(matrix))
    print(f"matrix: {matrix.rows}x{matrix.cols}")
    print(f"max initial entry modulus: {report.M0!r}")
    print(f"growth factor (post-elimination stages): {report.rho!r}")
    print(f"growth factor including the initial stage: {report.rho_including_initial!r}")
    print(f"argmax stage: {report.argmax_stage}")
    print("stage ratios:")
    for stage, ratio in enumerate(report.rho_stage, start=1):
        print(f"  stage {stage}: {ratio!r}")
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    report = classify(parse_matrix_file(args.matrixfile))
    print(f"is_higham: {str(report.is_higham).lower()}")
    print(f"is_ad: {str(report.is_ad).lower()}")
    print(f"symmetry_defect: {report.symmetry_defect!r}")
    print(f"lambda_min_B: {report.lambda_min_B!r}")
    print(f"lambda_min_C: {report.lambda_min_C!r}")
    print(f"kappa_B: {report.kappa_B!r}")
    print(f"kappa_C: {report.kappa_C!r}")
    print(f"omega: {report.omega!r}")
    return 0


def _format_bound(value: float | None) -> str:
    return "-" if value is None else repr(value)


def _print_certificate(cert: BoundCertificate) -> None:
    if cert.satisfied:
        status = "ok       "
    elif cert.binding:
        status = "VIOLATED "
    else:
        status = "exceeded*"
    print(
        f"{status} {cert.name}: measured={cert.measured!r} "
        f"lower={_format_bound(cert.lower)} upper={_format_bound(cert.upper)}"
    )


def _cmd_certify(args: argparse.Namespace) -> int:
    matrix = parse_matrix_file(args.matrixfile)
    membership = classify(matrix)
    if not membership.is_ad:
        print(
            "error: matrix is not a class member "
            f"(lambda_min_B={membership.lambda_min_B!r}, "
            f"lambda_min_C={membership.lambda_min_C!r}); no certificates apply",
            file=sys.stderr,
        )
        return 3
    certs: list[BoundCertificate] = []
    if membership.is_higham:
        certs.extend(higham_growth_certificates(matrix))
        info = drury_sector(matrix)
        print(f"sector: delta={info.delta!r} alpha={info.alpha!r} refined_bound={info.refined_bound!r}")
    certs.extend(ad_growth_certificates(matrix))
    if matrix.rows >= 2:
        certs.extend(scalar_schur_certificate(matrix, membership.omega))
    for cert in certs:
        _print_certificate(cert)
    binding_failures = sum(1 for c in certs if c.binding and not c.satisfied)
    total_binding = sum(1 for c in certs if c.binding)
    print(f"binding certificates: {total_binding - binding_failures}/{total_binding} satisfied")
    return 2 if binding_failures else 0


def _cmd_extremal(args: argparse.Namespace) -> int:
    a_minus, a_plus = extremal_pair(args.omega)
    if args.minus:
        member, side = a_minus, "lower"
    else:
        member, side = a_plus, "upper"
    comment = f"{side}-endpoint 2x2 member, omega={args.omega!r}"
    if args.output:
        emit_matrix_file(member.matrix, args.output, comment=comment)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(emit_matrix_file(member.matrix, comment=comment))
    return 0


def _cmd_campaign(args: argparse.Namespace) -> int:
    config = load_campaign_config(args.config)
    report = run_campaign(config)
    if config.output_path:
        data = write_report(report, config.output_path)
        print(f"report written to {config.output_path} ({len(data)} bytes)")
        print(
            f"cells: {len(report.cells)}  findings: {len(report.findings)}  "
            f"checks: {len(report.checks)}  binding violations: {report.binding_violations}"
        )
    else:
        sys.stdout.buffer.write(emit_report(report, "json"))
    return 2 if report.binding_violations else 0


def _cmd_counterexamples(args: argparse.Namespace) -> int:
    report = run_campaign(CampaignConfig(mode="counterexamples"))
    width = max(len(check.name) for check in report.checks)
    passed = 0
    for check in report.checks:
        verdict = "PASS" if check.passed else "FAIL"
        passed += check.passed
        expected = "-" if check.expected is None else repr(check.expected)
        print(
            f"{verdict}  {check.name:<{width}}  measured={check.measured!r} "
            f"expected={expected}"
        )
    print(f"{passed}/{len(report.checks)} checks passed")
    return 0 if passed == len(report.checks) else 2


def main(argv: Sequence[str] | None = None) -> int:
    """CLI entry point; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 3
    try:
        return args.func(args)
    except GrowthcertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
