"""Exact integer/rational matrix helpers."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from coxlat.intmat import (
    as_imatrix,
    char_poly,
    det_exact,
    frac_inverse,
    iidentity,
    is_integral,
    is_symmetric,
    mat_eq,
    matrix_order,
    to_int,
)
from coxlat.rootsys import RootSystemId, cartan_matrix


def test_as_imatrix_rejects_floats_and_nonsquare():
    with pytest.raises(TypeError):
        as_imatrix([[1.0, 0.0], [0.0, 1.0]])
    with pytest.raises(ValueError):
        as_imatrix([[1, 2, 3], [4, 5, 6]])


def test_as_imatrix_accepts_fractions():
    M = as_imatrix([[Fraction(1, 2), 0], [0, 1]])
    assert M[0, 0] == Fraction(1, 2)
    assert not is_integral(M)
    assert is_integral(as_imatrix([[2, -1], [-1, 2]]))


def test_identity_and_eq():
    I3 = iidentity(3)
    assert mat_eq(I3, I3)
    assert is_symmetric(I3)
    assert not mat_eq(I3, as_imatrix([[1, 0, 0], [0, 1, 0], [0, 1, 1]]))


def test_frac_inverse_known_2x2():
    M = as_imatrix([[2, 1], [1, 1]])
    Minv = frac_inverse(M)
    assert mat_eq(to_int(Minv), as_imatrix([[1, -1], [-1, 2]]))
    assert mat_eq(to_int(M @ Minv), iidentity(2))


def test_frac_inverse_singular_raises():
    with pytest.raises(ValueError):
        frac_inverse(as_imatrix([[1, 2], [2, 4]]))


# det A(A_n) = n+1; D_n -> 4; E6 -> 3; E7 -> 2; E8 -> 1 (classical values)
@pytest.mark.parametrize(
    "name,det",
    [("A1", 2), ("A2", 3), ("A5", 6), ("D4", 4), ("D6", 4), ("E6", 3), ("E7", 2), ("E8", 1)],
)
def test_det_exact_cartan(name, det):
    assert det_exact(cartan_matrix(RootSystemId.parse(name))) == det


def test_char_poly_a2():
    # det(tI - A) = t^2 - 4t + 3 for the A2 Cartan matrix
    assert char_poly(cartan_matrix(RootSystemId.parse("A2"))) == [1, -4, 3]


def test_char_poly_matches_determinant():
    M = as_imatrix([[1, 2, 0], [0, 1, 3], [4, 0, 1]])
    coeffs = char_poly(M)
    # constant term is (-1)^n det
    assert coeffs[-1] == -det_exact(M)
    assert coeffs[0] == 1


def test_matrix_order():
    C = as_imatrix([[0, -1], [1, -1]])
    assert matrix_order(C) == 3
    assert matrix_order(iidentity(4)) == 1
    with pytest.raises(ValueError):
        matrix_order(C, cap=2)
