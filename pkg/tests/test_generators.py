"""Tests for the sample generators: conditioned SPD/HPD factories, the
structured class samplers, extremal endpoints, and the gap examples."""

import math

import numpy as np
import pytest

from growthcert import (
    DomainError,
    NotInClass,
    classify,
    condition_number,
    eliminate_no_pivot,
    growth_report,
    hermitian_eigenvalues,
    stage_upper_bound,
)
from growthcert.generators import (
    SPECTRUM_STYLES,
    SamplerConfig,
    diag_lower_example,
    extremal_pair,
    gap_examples,
    per_sample_seed,
    random_ad,
    random_higham,
    random_hermitian_pd,
    random_spd,
)


# ---------------------------------------------------------------------------
# configuration object
# ---------------------------------------------------------------------------


def test_config_defaults_and_fields():
    cfg = SamplerConfig(n=4, omega=10.0, seed=7)
    assert cfg.spectrum_style == "log-uniform"
    assert cfg.n == 4 and cfg.omega == 10.0 and cfg.seed == 7


def test_config_validation():
    with pytest.raises(DomainError):
        SamplerConfig(n=1, omega=2.0, seed=0)
    with pytest.raises(DomainError):
        SamplerConfig(n=True, omega=2.0, seed=0)
    with pytest.raises(DomainError):
        SamplerConfig(n=3, omega=0.5, seed=0)
    with pytest.raises(DomainError):
        SamplerConfig(n=3, omega=math.nan, seed=0)
    with pytest.raises(DomainError):
        SamplerConfig(n=3, omega=2.0, seed=-1)
    with pytest.raises(DomainError):
        SamplerConfig(n=3, omega=2.0, seed=2**64)
    with pytest.raises(DomainError):
        SamplerConfig(n=3, omega=2.0, seed=0, spectrum_style="gaussian")


def test_per_sample_seed_deterministic_and_spread():
    a = per_sample_seed(42, 5, 3, 11)
    b = per_sample_seed(42, 5, 3, 11)
    assert a == b
    assert isinstance(a, int) and 0 <= a < 2**64
    neighbors = {
        per_sample_seed(42, 5, 3, 12),
        per_sample_seed(42, 5, 4, 11),
        per_sample_seed(42, 6, 3, 11),
        per_sample_seed(43, 5, 3, 11),
    }
    assert a not in neighbors and len(neighbors) == 4


# ---------------------------------------------------------------------------
# conditioned factor samplers
# ---------------------------------------------------------------------------


def test_random_spd_deterministic():
    cfg = SamplerConfig(n=6, omega=25.0, seed=99)
    first = random_spd(cfg)
    second = random_spd(cfg)
    assert np.array_equal(first, second)


def test_random_spd_exact_two_point_spectrum():
    cfg = SamplerConfig(n=2, omega=7.0, seed=3)
    spectrum = hermitian_eigenvalues(random_spd(cfg))
    assert spectrum.min == pytest.approx(1.0, rel=1e-12)
    assert spectrum.max == pytest.approx(7.0, rel=1e-12)


def test_random_spd_condition_number_pinned():
    for seed in range(40):
        cfg = SamplerConfig(n=8, omega=120.0, seed=seed)
        m = random_spd(cfg)
        assert np.allclose(m, m.T)
        assert np.isrealobj(m)
        kappa = condition_number(m)
        assert abs(kappa - 120.0) <= 1e-9 * 120.0


def test_random_spd_omega_one_is_identity_like():
    cfg = SamplerConfig(n=5, omega=1.0, seed=11)
    assert np.allclose(random_spd(cfg), np.eye(5), atol=1e-12)


def test_random_hermitian_pd_condition_number_pinned():
    for seed in range(40):
        cfg = SamplerConfig(n=7, omega=60.0, seed=seed)
        m = random_hermitian_pd(cfg)
        assert np.allclose(m, m.conj().T)
        kappa = condition_number(m)
        assert abs(kappa - 60.0) <= 1e-9 * 60.0


def test_spectrum_styles_differ_in_interior():
    log_cfg = SamplerConfig(n=12, omega=1000.0, seed=5, spectrum_style="log-uniform")
    lin_cfg = SamplerConfig(
        n=12, omega=1000.0, seed=5, spectrum_style="pinned-endpoints-uniform"
    )
    log_vals = np.asarray(hermitian_eigenvalues(random_spd(log_cfg)).eigenvalues)
    lin_vals = np.asarray(hermitian_eigenvalues(random_spd(lin_cfg)).eigenvalues)
    for vals in (log_vals, lin_vals):
        assert vals[0] == pytest.approx(1.0, rel=1e-10)
        assert vals[-1] == pytest.approx(1000.0, rel=1e-10)
    assert not np.allclose(log_vals[1:-1], lin_vals[1:-1])
    assert SPECTRUM_STYLES == ("log-uniform", "pinned-endpoints-uniform")


# ---------------------------------------------------------------------------
# class samplers
# ---------------------------------------------------------------------------


def test_random_higham_members_and_kappa_cap():
    for seed in range(25):
        hm = random_higham(SamplerConfig(n=6, omega=35.0, seed=seed))
        report = classify(hm.matrix)
        assert report.is_higham and report.is_ad
        assert report.omega <= 35.0 * (1 + 1e-9)
        assert hm.omega <= 35.0 * (1 + 1e-9)


def test_random_higham_deterministic_and_part_independence():
    cfg = SamplerConfig(n=5, omega=12.0, seed=77)
    first = random_higham(cfg)
    second = random_higham(cfg)
    assert np.array_equal(first.matrix, second.matrix)
    assert not np.allclose(np.asarray(first.B), np.asarray(first.C))


def test_random_ad_members():
    for seed in range(25):
        ad = random_ad(SamplerConfig(n=5, omega=40.0, seed=seed))
        report = classify(ad.matrix)
        assert report.is_ad
        assert report.omega <= 40.0 * (1 + 1e-9)


def test_random_ad_generally_not_symmetric():
    ad = random_ad(SamplerConfig(n=6, omega=10.0, seed=13))
    a = ad.matrix
    assert not np.allclose(a, a.T)


# ---------------------------------------------------------------------------
# extremal endpoints and named examples
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("omega", (1.0, 2.0, 3.0, 10.0, 100.0))
def test_extremal_pair_saturates_endpoints(omega):
    a_minus, a_plus = extremal_pair(omega)
    c = (omega - 1.0) / (omega + 1.0)
    assert a_minus.matrix[0, 1] == pytest.approx(c * (1 + 1j), abs=1e-15)
    assert a_plus.matrix[0, 1] == pytest.approx(c * (1 - 1j), abs=1e-15)
    for member in (a_minus, a_plus):
        assert member.omega == pytest.approx(omega, rel=1e-12)
    rho = growth_report(eliminate_no_pivot(a_plus.matrix)).rho
    assert abs(rho - stage_upper_bound(omega)) <= 1e-8


def test_extremal_pair_rejects_bad_omega():
    with pytest.raises(DomainError):
        extremal_pair(0.9)


def test_diag_lower_example_shape_and_kappa():
    hm = diag_lower_example(9.0, 6)
    a = hm.matrix
    assert a.shape == (6, 6)
    assert np.allclose(a, np.diag(np.diag(a)))
    assert a[0, 0] == pytest.approx(9.0 * (1 + 1j), abs=1e-15)
    assert hm.omega == pytest.approx(9.0, rel=1e-12)
    report = growth_report(eliminate_no_pivot(a))
    assert report.rho == pytest.approx(1.0 / 9.0, abs=1e-14)


def test_diag_lower_example_validation():
    with pytest.raises(DomainError):
        diag_lower_example(0.5, 4)
    with pytest.raises(DomainError):
        diag_lower_example(3.0, 1)


def test_gap_examples_values():
    gaps = gap_examples(0.5)
    g1 = gaps.gap1.matrix
    assert g1[0, 1] == pytest.approx(0.25, abs=1e-15)
    assert g1[1, 0] == pytest.approx(0.75, abs=1e-15)
    g2 = gaps.gap2.matrix
    assert g2[0, 0] == pytest.approx(1 + 1j, abs=1e-15)
    assert g2[0, 1] == pytest.approx(1.0, abs=1e-15)
    assert g2[1, 0] == 0.0
    g3 = gaps.gap3.matrix
    assert g3[0, 0] == pytest.approx(4.0 * (1 + 1j), abs=1e-15)
    # gap-1 and gap-2 live in the larger class only; gap-3 is complex symmetric
    assert not classify(g2).is_higham
    assert classify(g2).is_ad
    assert classify(g3.copy()).is_higham


def test_gap_examples_validation():
    with pytest.raises(DomainError):
        gap_examples(0.0)
    with pytest.raises(DomainError):
        gap_examples(1.0)
    with pytest.raises(DomainError):
        gap_examples(0.5, omega=1.0)
    with pytest.raises(DomainError):
        gap_examples(0.5, n=1)
