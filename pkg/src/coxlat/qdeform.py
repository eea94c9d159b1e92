"""q-deformation of generalized Cartan matrices: A(q) = qL + U.

A = L + U is the unique split into unit-diagonal lower/upper triangular
parts.  When the graph of A (vertices i, j joined iff a_ij != 0) is a
tree, the deformed spectrum is {1 + (lambda-2)sqrt(q) + q} over
eigenvalues lambda of A, and eigenvectors transport coordinatewise by
powers q^{k_i/2} with an integer exponent vector read off the tree:
along any edge, the numerically larger endpoint has k one more than the
smaller (making diag(q^{k_i/2}) conjugate sqrt(q)A + (1-sqrt(q))^2 I
into A(q)).

q is restricted to positive reals, so sqrt(q) is unambiguous.
Disconnected graphs are rejected along with cycles; per-component
application would be the natural extension for forests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .intmat import as_imatrix
from .spectral import jacobi_eigh, residual

__all__ = [
    "QDeformedCartan",
    "deform",
    "evaluate",
    "q_eigenvalue",
    "exponent_vector",
    "q_eigenvector",
    "conjugation_certificate",
    "q_spectrum",
    "general_eigenvalues",
]


@dataclass(frozen=True)
class QDeformedCartan:
    """Unit-triangular split A = L + U with the tree exponent vector."""

    L: np.ndarray
    U: np.ndarray
    exponent_vector: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.L.shape[0]

    @property
    def A(self) -> np.ndarray:
        return self.L + self.U


def _graph_edges(A: np.ndarray) -> List[Tuple[int, int]]:
    n = A.shape[0]
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if (A[i, j] != 0) != (A[j, i] != 0):
                raise ValueError("off-diagonal zero pattern must be symmetric")
            if A[i, j] != 0:
                out.append((i + 1, j + 1))
    return out


def _adjacency(n: int, edges: Sequence[Tuple[int, int]]) -> Dict[int, List[int]]:
    adj: Dict[int, List[int]] = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _exponents_from_edges(
    n: int, edges: Sequence[Tuple[int, int]], root: int = 1
) -> Tuple[int, ...]:
    """k over the tree: k_root = 0, k grows by 1 toward larger labels."""
    if len(edges) != n - 1:
        raise ValueError("graph is not a tree (wrong edge count)")
    adj = _adjacency(n, edges)
    k: Dict[int, int] = {root: 0}
    stack = [root]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in k:
                k[v] = k[u] + (1 if v > u else -1)
                stack.append(v)
    if len(k) != n:
        raise ValueError("graph is not a tree (disconnected)")
    low = min(k.values())
    return tuple(k[v] - low for v in range(1, n + 1))


def deform(A) -> QDeformedCartan:
    """Split a generalized Cartan matrix (tree graph) into L + U."""
    A = as_imatrix(A)
    n = A.shape[0]
    for i in range(n):
        if A[i, i] != 2:
            raise ValueError("diagonal entries must equal 2")
    edges = _graph_edges(A)
    ks = _exponents_from_edges(n, edges)
    L = np.zeros((n, n), dtype=object)
    U = np.zeros((n, n), dtype=object)
    for i in range(n):
        L[i, i] = 1
        U[i, i] = 1
        for j in range(n):
            if i > j:
                L[i, j] = A[i, j]
            elif i < j:
                U[i, j] = A[i, j]
    return QDeformedCartan(L=L, U=U, exponent_vector=ks)


def _check_q(q: float) -> float:
    q = float(q)
    if q <= 0:
        raise ValueError("q must be positive")
    return q


def evaluate(D: QDeformedCartan, q: float) -> np.ndarray:
    """qL + U as a float matrix."""
    q = _check_q(q)
    return q * np.array(D.L, dtype=float) + np.array(D.U, dtype=float)


def q_eigenvalue(lam: float, q: float) -> float:
    """The deformed eigenvalue 1 + (lambda - 2)sqrt(q) + q."""
    q = _check_q(q)
    return 1 + (lam - 2) * math.sqrt(q) + q


def exponent_vector(D: QDeformedCartan, root: int = 1) -> Tuple[int, ...]:
    """Tree exponents k_i (min 0) with an optional re-rooting.

    The default root is vertex 1; any other root shifts all k_i by a
    constant before normalization, which a global diagonal scalar
    absorbs — transported eigenvector residuals are root-independent.
    """
    edges = _graph_edges(as_imatrix(D.A))
    return _exponents_from_edges(D.rank, edges, root=root)


def q_eigenvector(
    x, D: QDeformedCartan, q: float, lam: Optional[float] = None, check_tol: float = 1e-8
) -> np.ndarray:
    """Transport an eigenvector of A to one of A(q): x_i -> q^{k_i/2} x_i."""
    q = _check_q(q)
    x = np.asarray(x, dtype=complex)
    A = np.array(D.A, dtype=float)
    if lam is None:
        lam = float((np.conj(x) @ (A @ x)).real / (np.conj(x) @ x).real)
    if residual(A, x, lam) > 1e-9:
        raise ValueError("x is not an eigenvector of A to tolerance")
    scale = np.array([q ** (k / 2.0) for k in D.exponent_vector])
    xq = scale * x
    if residual(evaluate(D, q), xq, q_eigenvalue(lam, q)) > check_tol:
        raise ValueError("transported vector failed the deformed residual check")
    return xq.real if np.allclose(xq.imag, 0, atol=1e-14) else xq


def conjugation_certificate(D: QDeformedCartan, q: float) -> dict:
    """Deviation of S·(sqrt(q)A + (1-sqrt(q))² I)·S⁻¹ from A(q), S = diag(q^{k_i/2}).

    A deviation at rounding level certifies the deformed spectrum law
    constructively for this q.
    """
    q = _check_q(q)
    A = np.array(D.A, dtype=float)
    n = D.rank
    rq = math.sqrt(q)
    Aprime = rq * A + (1 - rq) ** 2 * np.eye(n)
    s = np.array([q ** (k / 2.0) for k in D.exponent_vector])
    lhs = (s[:, None] * Aprime) / s[None, :]
    dev = float(np.max(np.abs(lhs - evaluate(D, q))))
    return {
        "q": q,
        "max_abs_deviation": dev,
        "status": "pass" if dev <= 1e-10 else "fail",
        "exponent_vector": list(D.exponent_vector),
    }


def general_eigenvalues(M) -> np.ndarray:
    """Eigenvalues of a general real matrix, sorted by (real, imag).

    Thin wrapper over the library QR solver; used as the independent
    oracle for nonsymmetric deformed matrices.
    """
    w = np.linalg.eigvals(np.array(M, dtype=float))
    order = np.lexsort((w.imag, w.real))
    return w[order]


def q_spectrum(D: QDeformedCartan, q: float) -> dict:
    """Actual spectrum of A(q) next to the predicted {1+(lambda-2)sqrt(q)+q}."""
    q = _check_q(q)
    A = np.array(D.A, dtype=float)
    if np.max(np.abs(A - A.T)) == 0.0:
        lams = jacobi_eigh(A)[0]
        predicted = np.sort(np.array([q_eigenvalue(l, q) for l in lams]))
        actual = general_eigenvalues(evaluate(D, q))
        deviation = float(np.max(np.abs(actual - predicted)))
        actual_out = actual
    else:
        lams = general_eigenvalues(A)
        predicted = np.array(
            [1 + (l - 2) * math.sqrt(q) + q for l in lams], dtype=complex
        )
        order = np.lexsort((predicted.imag, predicted.real))
        predicted = predicted[order]
        actual_out = general_eigenvalues(evaluate(D, q)).astype(complex)
        deviation = float(np.max(np.abs(actual_out - predicted)))
    return {
        "q": q,
        "eigenvalues": actual_out,
        "predicted": predicted,
        "max_abs_deviation": deviation,
        "status": "pass" if deviation <= 1e-8 else "fail",
    }
