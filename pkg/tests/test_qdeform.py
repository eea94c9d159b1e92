"""One-parameter deformation A(q): spectrum law, certificates, exponents."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxlat.intmat import as_imatrix
from coxlat.qdeform import (
    QDeformedCartan,
    conjugation_certificate,
    deform,
    evaluate,
    exponent_vector,
    general_eigenvalues,
    q_eigenvalue,
    q_eigenvector,
    q_spectrum,
)
from coxlat.rootsys import RootSystemId, cartan_matrix

Q_GRID = (0.25, 0.5, 2.0, 4.0)
SYSTEMS = [f"A{n}" for n in range(1, 9)] + ["D4", "D5", "E6", "E7", "E8"]


def _D(name: str) -> QDeformedCartan:
    return deform(cartan_matrix(RootSystemId.parse(name)))


def test_deform_splits_into_unit_triangulars():
    D = _D("A3")
    L = np.array(D.L, dtype=float)
    U = np.array(D.U, dtype=float)
    assert np.allclose(L + U, np.array(cartan_matrix(RootSystemId.parse("A3")), dtype=float))
    assert np.allclose(np.diag(L), 1.0)
    assert np.allclose(np.diag(U), 1.0)
    assert np.allclose(np.triu(L, 1), 0.0)
    assert np.allclose(np.tril(U, -1), 0.0)


def test_evaluate_at_one_recovers_cartan():
    for name in ("A4", "D5", "E8"):
        D = _D(name)
        A = np.array(cartan_matrix(RootSystemId.parse(name)), dtype=float)
        assert np.allclose(evaluate(D, 1.0), A)


def test_deform_rejects_bad_input():
    with pytest.raises(ValueError):
        deform(as_imatrix([[1, -1], [-1, 2]]))  # diagonal must be 2
    cycle = as_imatrix([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
    with pytest.raises(ValueError):
        deform(cycle)  # not a tree
    disconnected = as_imatrix([[2, 0], [0, 2]])
    with pytest.raises(ValueError):
        deform(disconnected)
    asymmetric = as_imatrix([[2, -1], [0, 2]])
    with pytest.raises(ValueError):
        deform(asymmetric)


def test_q_must_be_positive():
    D = _D("A2")
    for bad in (0.0, -1.0):
        with pytest.raises(ValueError):
            evaluate(D, bad)
        with pytest.raises(ValueError):
            q_spectrum(D, bad)


@pytest.mark.parametrize(
    "name,k",
    [
        ("A5", (0, 1, 2, 3, 4)),
        ("D4", (0, 1, 2, 2)),
        ("D5", (0, 1, 2, 3, 3)),
        ("E6", (0, 1, 1, 2, 3, 4)),
        ("E7", (0, 1, 1, 2, 3, 4, 5)),
        ("E8", (0, 1, 1, 2, 3, 4, 5, 6)),
    ],
)
def test_exponent_vectors(name, k):
    assert _D(name).exponent_vector == k


@settings(max_examples=30, deadline=None)
@given(
    name=st.sampled_from(SYSTEMS),
    root=st.integers(min_value=1, max_value=8),
)
def test_exponent_vector_is_root_independent(name, root):
    # after the min-0 normalization the DFS root does not matter
    D = _D(name)
    r = (root - 1) % D.rank + 1
    assert exponent_vector(D, root=r) == D.exponent_vector


def test_q_eigenvalue_law_at_one():
    assert q_eigenvalue(3.0, 1.0) == 3.0


def test_a2_spectrum_frozen():
    # A2 at q=2: eigenvalues 3 - sqrt(2) and 3 + sqrt(2)
    rep = q_spectrum(_D("A2"), 2.0)
    got = sorted(float(v.real) for v in np.atleast_1d(rep["eigenvalues"]))
    assert abs(got[0] - (3 - math.sqrt(2))) < 1e-12
    assert abs(got[1] - (3 + math.sqrt(2))) < 1e-12
    assert rep["status"] == "pass"


@pytest.mark.parametrize("name", SYSTEMS)
@pytest.mark.parametrize("q", Q_GRID)
def test_spectrum_law_on_grid(name, q):
    rep = q_spectrum(_D(name), q)
    assert rep["status"] == "pass"
    assert rep["max_abs_deviation"] <= 1e-8


@pytest.mark.parametrize("name", SYSTEMS)
@pytest.mark.parametrize("q", Q_GRID)
def test_conjugation_certificate_on_grid(name, q):
    rep = conjugation_certificate(_D(name), q)
    assert rep["status"] == "pass"
    assert rep["max_abs_deviation"] <= 1e-10


def test_certificate_identity_explicit():
    # A(q) = S A'(q) S^{-1} with S = diag(q^{k_i/2}), A' = sqrt(q) A + (1-sqrt(q))^2 I
    D = _D("E6")
    q = 2.0
    A = np.array(cartan_matrix(RootSystemId.parse("E6")), dtype=float)
    s = np.array([q ** (k / 2) for k in D.exponent_vector])
    A_prime = math.sqrt(q) * A + (1 - math.sqrt(q)) ** 2 * np.eye(6)
    lhs = evaluate(D, q)
    rhs = (s[:, None] * A_prime) / s[None, :]
    assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_q_eigenvector_transport():
    D = _D("A4")
    q = 4.0
    A = np.array(cartan_matrix(RootSystemId.parse("A4")), dtype=float)
    lams, vecs = np.linalg.eigh(A)
    for lam, x in zip(lams, vecs.T):
        y = q_eigenvector(x, D, q, lam=lam)
        Aq = evaluate(D, q)
        lam_q = q_eigenvalue(lam, q)
        assert np.max(np.abs(Aq @ y - lam_q * y)) < 1e-8


def test_q_eigenvector_rejects_garbage():
    D = _D("A4")
    with pytest.raises(ValueError):
        q_eigenvector(np.array([1.0, 0.0, 0.0, 0.0]), D, 2.0, lam=1.0)


def test_general_eigenvalues_deterministic_order():
    M = np.array([[0.0, -1.0], [1.0, 0.0]])
    got = general_eigenvalues(M)
    assert np.allclose(got, [-1j, 1j])
