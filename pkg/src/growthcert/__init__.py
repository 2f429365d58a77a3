"""growthcert: growth factors of pivotless Gaussian elimination on
structured complex matrix classes, with certified condition-number bounds.

The package eliminates dense complex matrices without pivoting, measures
entry growth stage by stage, and checks every measured quantity against
sharp two-sided bounds driven by the condition numbers of the matrix's
symmetric (or Hermitian) parts.  Random samplers with prescribed condition
number, a counterexample battery, and a campaign harness with
machine-readable reports round out the toolkit.

Hot kernels are compiled with numba when available; set
``GROWTHCERT_DISABLE_NUMBA=1`` to force the pure-numpy fallback.
"""

__version__ = "0.1.0"

from .errors import (
    AngleOutOfRange,
    ConfigError,
    ConvergenceError,
    DimensionMismatch,
    DomainError,
    GrowthcertError,
    KappaExceeded,
    NonHermitianInput,
    NotInClass,
    NotPositiveDefinite,
    ParseError,
    RaggedRowError,
    SingularLeadingBlock,
    ZeroPivot,
)
from .matrix import ComplexDenseMatrix
from .linalg import (
    CongruencePair,
    HermitianSpectrum,
    cholesky,
    condition_number,
    determinant,
    hermitian_eigenvalues,
    loewner_geq,
    schur_complement,
    simultaneous_congruence,
)
from .classes import (
    AccretiveDissipativeMatrix,
    ClassMembershipReport,
    DiagonalMaximalityResult,
    HighamMatrix,
    classify,
    diagonal_maximality_check,
    hermitian_parts,
)
from .elimination import (
    EliminationTrace,
    GrowthReport,
    active_diagonal_oracle,
    eliminate_no_pivot,
    growth_report,
)
from .bounds import (
    BoundCertificate,
    DominationWitness,
    SectorInfo,
    ad_growth_certificates,
    ad_upper_bound,
    certificate_satisfied,
    diagonal_lower_factor,
    domination_inequality_check,
    domination_witness,
    drury_sector,
    fischer_sector_check,
    higham_growth_certificates,
    kantorovich_check,
    loewner_schur_check,
    scalar_schur_certificate,
    stage_lower_bound,
    stage_upper_bound,
    theta,
)
from .generators import (
    GapExamples,
    SamplerConfig,
    diag_lower_example,
    extremal_pair,
    gap_examples,
    per_sample_seed,
    random_ad,
    random_hermitian_pd,
    random_higham,
    random_spd,
)
from .matrixio import emit_matrix_file, matrix_to_text, parse_matrix_file, parse_matrix_text
from .campaign import (
    CampaignConfig,
    CampaignReport,
    CellRecord,
    CheckResult,
    Finding,
    emit_report,
    load_campaign_config,
    report_body_bytes,
    run_campaign,
    write_report,
)
from .kernels import backend_name

__all__ = [
    "__version__",
    # errors
    "GrowthcertError",
    "DimensionMismatch",
    "NonHermitianInput",
    "NotPositiveDefinite",
    "SingularLeadingBlock",
    "ZeroPivot",
    "DomainError",
    "KappaExceeded",
    "NotInClass",
    "AngleOutOfRange",
    "ConvergenceError",
    "ParseError",
    "RaggedRowError",
    "ConfigError",
    # carriers and linear algebra
    "ComplexDenseMatrix",
    "HermitianSpectrum",
    "CongruencePair",
    "hermitian_eigenvalues",
    "condition_number",
    "cholesky",
    "simultaneous_congruence",
    "schur_complement",
    "loewner_geq",
    "determinant",
    # classes
    "ClassMembershipReport",
    "HighamMatrix",
    "AccretiveDissipativeMatrix",
    "DiagonalMaximalityResult",
    "classify",
    "hermitian_parts",
    "diagonal_maximality_check",
    # elimination
    "EliminationTrace",
    "GrowthReport",
    "eliminate_no_pivot",
    "growth_report",
    "active_diagonal_oracle",
    # bounds
    "BoundCertificate",
    "SectorInfo",
    "DominationWitness",
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
    # generators
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
    # i/o and campaigns
    "parse_matrix_file",
    "parse_matrix_text",
    "emit_matrix_file",
    "matrix_to_text",
    "CampaignConfig",
    "CampaignReport",
    "CellRecord",
    "Finding",
    "CheckResult",
    "load_campaign_config",
    "run_campaign",
    "emit_report",
    "report_body_bytes",
    "write_report",
    "backend_name",
]
