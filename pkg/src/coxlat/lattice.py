"""Polarized lattices, Coxeter automorphisms, and bipartite decompositions.

A polarized lattice is a pair (A, L) with A = L + Lᵗ; the Coxeter
automorphism is C = -L⁻¹Lᵗ.  Everything here is exact integer (or
rational) arithmetic on object arrays; floating point never enters.
Includes the Kronecker join product and the black/white decomposition
C_B + C_W = 2I - A.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from .intmat import (
    as_imatrix,
    det_exact,
    frac_inverse,
    iidentity,
    is_integral,
    is_symmetric,
    mat_eq,
    matrix_order,
    to_int,
)

__all__ = [
    "PolarizedLattice",
    "CoxeterElement",
    "standard_polarization",
    "coxeter",
    "orthogonality_check",
    "gauge_transform",
    "join",
    "coxeter_order",
    "steinberg_decomposition",
    "bipartite_coxeter",
]


@dataclass(frozen=True)
class PolarizedLattice:
    """Lattice with symmetric form A and Seifert form L, A = L + Lᵗ."""

    A: np.ndarray
    L: np.ndarray

    def __post_init__(self):
        A = as_imatrix(self.A)
        L = as_imatrix(self.L)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "L", L)
        if A.shape != L.shape:
            raise ValueError("A and L must have equal shape")
        if not is_symmetric(A):
            raise ValueError("A must be symmetric")
        if not mat_eq(A, L + L.T):
            raise ValueError("A = L + L^t violated")
        if det_exact(L) == 0:
            raise ValueError("L must be invertible over the rationals")

    @property
    def rank(self) -> int:
        return self.A.shape[0]


@dataclass(frozen=True)
class CoxeterElement:
    """Matrix of a Coxeter automorphism; order is filled in lazily."""

    C: np.ndarray
    integral: bool
    order: Optional[int] = None


def standard_polarization(A) -> PolarizedLattice:
    """Upper-triangular polarization: l_ii = a_ii/2, l_ij = a_ij above."""
    A = as_imatrix(A)
    if not is_symmetric(A):
        raise ValueError("A must be symmetric")
    n = A.shape[0]
    L = np.zeros((n, n), dtype=object)
    for i in range(n):
        if A[i, i] % 2 != 0:
            raise ValueError("diagonal entries must be even")
        L[i, i] = A[i, i] // 2
        for j in range(i + 1, n):
            L[i, j] = A[i, j]
    return PolarizedLattice(A=A, L=L)


def coxeter(P: PolarizedLattice) -> CoxeterElement:
    """C = -L⁻¹Lᵗ; integral whenever det L = ±1.

    The order is filled in for integral C when it is at most 1000
    (always the case on the catalog, where it equals the Coxeter
    number); otherwise it is left as None.
    """
    Linv = frac_inverse(P.L)
    C = -(Linv @ P.L.T)
    if is_integral(C):
        C = to_int(C)
        try:
            order: Optional[int] = matrix_order(C)
        except ValueError:
            order = None
        return CoxeterElement(C=C, integral=True, order=order)
    return CoxeterElement(C=C, integral=False)


def orthogonality_check(A, C) -> bool:
    """True iff CᵗAC = A exactly."""
    A = as_imatrix(A)
    C = as_imatrix(C)
    if A.shape != C.shape:
        raise ValueError("dimension mismatch")
    return mat_eq(C.T @ A @ C, A)


def gauge_transform(P: PolarizedLattice, M) -> PolarizedLattice:
    """Base change L -> MᵗLM; the Coxeter element transforms to M⁻¹CM."""
    M = as_imatrix(M)
    if det_exact(M) == 0:
        raise ValueError("M must be invertible")
    return PolarizedLattice(A=M.T @ P.A @ M, L=M.T @ P.L @ M)


def join(P1: PolarizedLattice, P2: PolarizedLattice) -> PolarizedLattice:
    """Tensor (join) product: L = L1 ⊗ L2, first factor major.

    The basis is lexicographic: e_i ⊗ f_j comes before e_k ⊗ f_l iff
    (i, j) < (k, l).  The Coxeter element of the product is -C1 ⊗ C2.
    """
    L = np.kron(P1.L, P2.L)
    return PolarizedLattice(A=L + L.T, L=L)


def coxeter_order(C, cap: int = 1000) -> int:
    """Smallest h >= 1 with Cʰ = I, by exact repeated multiplication."""
    M = C.C if isinstance(C, CoxeterElement) else as_imatrix(C)
    return matrix_order(M, cap=cap)


_COLOR_ALIASES = {"black": "black", "b": "black", "white": "white", "w": "white"}


def _normalize_coloring(n: int, coloring: Dict[int, str]) -> Dict[int, str]:
    out = {}
    for v in range(1, n + 1):
        if v not in coloring:
            raise ValueError(f"vertex {v} missing from coloring")
        c = _COLOR_ALIASES.get(str(coloring[v]).lower())
        if c is None:
            raise ValueError(f"unknown color {coloring[v]!r}")
        out[v] = c
    return out


def steinberg_decomposition(A, coloring: Dict[int, str]) -> Tuple[np.ndarray, np.ndarray]:
    """Black/white factors of the bipartite Coxeter element.

    With vertices ordered black-first, A = [[2I, X], [Y, 2I]] and

        C_B = [[-I, -X], [0, I]],   C_W = [[I, 0], [-Y, -I]],

    returned here in the original vertex order.  C_B (resp. C_W) equals
    the product of the simple reflections at black (resp. white)
    vertices, and C_B + C_W = 2I - A exactly.  An empty color class
    yields the identity for that factor.
    """
    A = as_imatrix(A)
    n = A.shape[0]
    coloring = _normalize_coloring(n, coloring)
    for i in range(n):
        if A[i, i] != 2:
            raise ValueError("diagonal entries must equal 2")
        for j in range(i + 1, n):
            if (A[i, j] != 0 or A[j, i] != 0) and coloring[i + 1] == coloring[j + 1]:
                raise ValueError(f"coloring not proper at edge ({i + 1},{j + 1})")
    blacks = [v - 1 for v in range(1, n + 1) if coloring[v] == "black"]
    whites = [v - 1 for v in range(1, n + 1) if coloring[v] == "white"]
    p, q = len(blacks), len(whites)
    X = A[np.ix_(blacks, whites)]
    Y = A[np.ix_(whites, blacks)]
    CB_bf = np.zeros((n, n), dtype=object)
    CW_bf = np.zeros((n, n), dtype=object)
    CB_bf[:p, :p] = -iidentity(p)
    CB_bf[:p, p:] = -X
    CB_bf[p:, p:] = iidentity(q)
    CW_bf[:p, :p] = iidentity(p)
    CW_bf[p:, :p] = -Y
    CW_bf[p:, p:] = -iidentity(q)
    sigma = blacks + whites
    C_B = np.zeros((n, n), dtype=object)
    C_W = np.zeros((n, n), dtype=object)
    C_B[np.ix_(sigma, sigma)] = CB_bf
    C_W[np.ix_(sigma, sigma)] = CW_bf
    return C_B, C_W


def bipartite_coxeter(A, coloring: Dict[int, str]) -> np.ndarray:
    """The black/white Coxeter element C_W·C_B (black reflections act first).

    This is the order used by the eigenvector phase rules (white
    coordinates carry e^{+iθ/2}); the opposite product C_B·C_W is its
    conjugate by either factor.
    """
    C_B, C_W = steinberg_decomposition(A, coloring)
    return C_W @ C_B
