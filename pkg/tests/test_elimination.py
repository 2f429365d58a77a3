"""Tests for pivotless elimination, the growth report, and the
determinant-ratio diagonal oracle."""

import numpy as np
import pytest

from growthcert import (
    DimensionMismatch,
    DomainError,
    SingularLeadingBlock,
    ZeroPivot,
    active_diagonal_oracle,
    classify,
    diagonal_maximality_check,
    eliminate_no_pivot,
    growth_report,
    schur_complement,
)
from growthcert.generators import diag_lower_example, extremal_pair

from helpers import ad_samples, higham_samples


# ---------------------------------------------------------------------------
# eliminate_no_pivot
# ---------------------------------------------------------------------------


def test_diagonal_input_no_fill_in():
    hm = diag_lower_example(4.0, 4)
    trace = eliminate_no_pivot(hm.matrix)
    assert len(trace.actives) == 3
    for active in trace.actives:
        arr = active.array
        off = arr - np.diag(np.diagonal(arr))
        assert np.max(np.abs(off)) == 0.0


def test_upper_endpoint_trailing_scalar():
    for omega in (1.0, 3.0, 10.0):
        _, a_plus = extremal_pair(omega)
        trace = eliminate_no_pivot(a_plus.matrix)
        assert trace.actives[-1].array.shape == (1, 1)
        expected = 2 * (1 + omega**2) / (1 + omega) ** 2 * (1 + 1j)
        assert trace.actives[-1].array[0, 0] == pytest.approx(expected, abs=1e-12)


def test_zero_pivot_raises_with_stage():
    with pytest.raises(ZeroPivot) as info:
        eliminate_no_pivot(np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex))
    assert info.value.stage == 1


def test_later_zero_pivot_stage_number():
    # second pivot becomes exactly zero: [[1,1],[1,1]] eliminates to [[0]]
    m = np.array([[1.0, 1.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 1.0]], dtype=complex)
    with pytest.raises(ZeroPivot) as info:
        eliminate_no_pivot(m)
    assert info.value.stage == 2


def test_rejects_tiny_or_rectangular():
    with pytest.raises(DimensionMismatch):
        eliminate_no_pivot(np.ones((1, 1)))
    with pytest.raises(DimensionMismatch):
        eliminate_no_pivot(np.ones((2, 3)))


def test_trace_shapes_and_stage_max():
    hm = next(higham_samples(1, ns=(6,), omegas=(10.0,), base_seed=23))
    trace = eliminate_no_pivot(hm.matrix)
    n = 6
    assert len(trace.actives) == n - 1
    assert len(trace.stage_max) == n - 1
    assert len(trace.pivot_moduli) == n - 1
    for k, active in enumerate(trace.actives, start=1):
        assert active.array.shape == (n - k, n - k)
        assert trace.stage_max[k - 1] == pytest.approx(
            np.max(np.abs(active.array)), rel=1e-15
        )
    assert trace.pivot_moduli[0] == pytest.approx(abs(hm.matrix[0, 0]), rel=1e-15)


def test_actives_match_schur_complements():
    for sample in higham_samples(4, ns=(5, 8), omegas=(7.0,), base_seed=31):
        a = sample.matrix
        trace = eliminate_no_pivot(a)
        for k, active in enumerate(trace.actives, start=1):
            s = schur_complement(a, k).array
            assert np.allclose(active.array, s, rtol=1e-10, atol=1e-12 * np.max(np.abs(a)))


# ---------------------------------------------------------------------------
# growth_report
# ---------------------------------------------------------------------------


def test_growth_diag_example():
    report = growth_report(eliminate_no_pivot(diag_lower_example(4.0, 5).matrix))
    assert report.rho == pytest.approx(0.25, abs=1e-14)
    assert all(r == pytest.approx(0.25, abs=1e-14) for r in report.rho_stage)
    assert report.rho_including_initial == 1.0
    assert report.argmax_stage == 1


def test_growth_upper_endpoint_value():
    _, a_plus = extremal_pair(3.0)
    report = growth_report(eliminate_no_pivot(a_plus.matrix))
    assert report.rho == pytest.approx(1.25, abs=1e-12)
    assert report.M0 == pytest.approx(np.sqrt(2.0), rel=1e-15)


def test_growth_identity_scaled():
    report = growth_report(eliminate_no_pivot((1 + 1j) * np.eye(3)))
    assert report.rho == pytest.approx(1.0, abs=1e-15)
    assert report.rho_including_initial == pytest.approx(1.0, abs=1e-15)


def test_growth_scale_invariance():
    hm = next(higham_samples(1, ns=(7,), omegas=(25.0,), base_seed=41))
    base = growth_report(eliminate_no_pivot(hm.matrix)).rho
    for c in (2.0, -3.0 + 1.0j, 1e-6, 1e6):
        scaled = growth_report(eliminate_no_pivot(c * hm.matrix)).rho
        assert scaled == pytest.approx(base, rel=1e-12)


def test_growth_argmax_first_occurrence():
    # diagonal example attains the max at every stage; first stage reported
    report = growth_report(eliminate_no_pivot(diag_lower_example(9.0, 6).matrix))
    assert report.argmax_stage == 1


# ---------------------------------------------------------------------------
# heredity and diagonal maximality of actives
# ---------------------------------------------------------------------------


def test_actives_stay_in_class_with_diagonal_max():
    for hm in higham_samples(8, ns=(4, 6, 9), omegas=(2.0, 60.0), base_seed=55):
        trace = eliminate_no_pivot(hm.matrix)
        for active in trace.actives:
            arr = active.array
            assert classify(arr).is_higham
            max_entry = np.max(np.abs(arr))
            max_diag = np.max(np.abs(np.diagonal(arr)))
            assert max_entry <= max_diag * (1 + 1e-12)
            assert diagonal_maximality_check(arr).holds


def test_ad_actives_stay_in_class():
    for ad in ad_samples(6, ns=(4, 7), omegas=(2.0, 60.0), base_seed=56):
        trace = eliminate_no_pivot(ad.matrix)
        for active in trace.actives:
            assert classify(active.array).is_ad


# ---------------------------------------------------------------------------
# active_diagonal_oracle
# ---------------------------------------------------------------------------


def test_oracle_block_diagonal_unchanged():
    m = np.zeros((4, 4), dtype=complex)
    m[:2, :2] = [[2.0, 1.0], [1.0, 2.0]]
    m[2:, 2:] = [[5 + 1j, 0.0], [0.0, 7.0]]
    assert active_diagonal_oracle(m, 2, 3) == pytest.approx(5 + 1j, abs=1e-13)
    assert active_diagonal_oracle(m, 2, 4) == pytest.approx(7.0, abs=1e-13)


def test_oracle_upper_endpoint_scalar():
    omega = 5.0
    _, a_plus = extremal_pair(omega)
    got = active_diagonal_oracle(a_plus.matrix, 1, 2)
    expected = 2 * (1 + omega**2) / (1 + omega) ** 2 * (1 + 1j)
    assert got == pytest.approx(expected, abs=1e-13)


def test_oracle_matches_elimination_on_samples():
    samples = list(higham_samples(3, ns=(8,), omegas=(1000.0,), base_seed=60))
    samples += list(ad_samples(3, ns=(12,), omegas=(1000.0,), base_seed=61))
    for sample in samples:
        a = sample.matrix
        n = a.shape[0]
        trace = eliminate_no_pivot(a)
        for k, active in enumerate(trace.actives, start=1):
            diag = np.diagonal(active.array)
            for offset, value in enumerate(diag):
                j = k + offset + 1
                oracle = active_diagonal_oracle(a, k, j)
                assert abs(value - oracle) <= 1e-8 * abs(oracle)


def test_oracle_argument_validation():
    m = np.eye(3, dtype=complex)
    with pytest.raises(DomainError):
        active_diagonal_oracle(m, 0, 2)
    with pytest.raises(DomainError):
        active_diagonal_oracle(m, 1, 1)
    with pytest.raises(DomainError):
        active_diagonal_oracle(m, 1, 4)


def test_oracle_singular_leading_block():
    m = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    with pytest.raises(SingularLeadingBlock):
        active_diagonal_oracle(m, 1, 2)
