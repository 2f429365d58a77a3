"""Tests for the dense complex matrix carrier."""

import numpy as np
import pytest

from growthcert import ComplexDenseMatrix, DimensionMismatch, DomainError
from growthcert.matrix import as_complex_array


def test_construction_from_nested_lists():
    m = ComplexDenseMatrix([[1, 2j], [3, 4 + 1j]])
    assert m.rows == 2 and m.cols == 2
    assert m.is_square
    assert m.array.dtype == np.complex128
    assert m.array[0, 1] == 2j


def test_array_is_read_only_and_to_array_copies():
    m = ComplexDenseMatrix(np.eye(2))
    with pytest.raises(ValueError):
        m.array[0, 0] = 5.0
    copy = m.to_array()
    copy[0, 0] = 5.0
    assert m.array[0, 0] == 1.0


def test_source_mutation_does_not_leak():
    src = np.eye(2, dtype=np.complex128)
    m = ComplexDenseMatrix(src)
    src[0, 0] = 7.0
    assert m.array[0, 0] == 1.0


def test_rectangular_allowed():
    m = ComplexDenseMatrix(np.ones((2, 3)))
    assert m.rows == 2 and m.cols == 3
    assert not m.is_square


@pytest.mark.parametrize(
    "bad", [np.ones(3), np.ones((2, 0)), np.ones((0, 2)), np.ones((2, 2, 2))]
)
def test_bad_shapes_rejected(bad):
    with pytest.raises(DimensionMismatch):
        ComplexDenseMatrix(bad)


@pytest.mark.parametrize("value", [np.nan, np.inf, -np.inf, np.nan * 1j])
def test_non_finite_rejected(value):
    with pytest.raises(DomainError):
        ComplexDenseMatrix([[1.0, value], [0.0, 1.0]])


def test_equality_by_value():
    a = ComplexDenseMatrix([[1, 2], [3, 4]])
    b = ComplexDenseMatrix(np.array([[1.0, 2.0], [3.0, 4.0]]))
    c = ComplexDenseMatrix([[1, 2], [3, 5]])
    assert a == b
    assert a != c
    assert a != "not a matrix"


def test_as_complex_array_square_requirement():
    with pytest.raises(DimensionMismatch):
        as_complex_array(np.ones((2, 3)), square=True)


def test_as_complex_array_returns_writable_copy():
    m = ComplexDenseMatrix(np.eye(2))
    arr = as_complex_array(m)
    arr[0, 0] = 9.0
    assert m.array[0, 0] == 1.0


def test_numpy_interop():
    m = ComplexDenseMatrix([[1, 2], [3, 4]])
    assert np.trace(np.asarray(m)) == 5.0
