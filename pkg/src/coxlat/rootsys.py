"""Catalog of finite simply-laced root systems in Bourbaki numbering.

Provides Cartan matrices, Dynkin tree edge lists, Coxeter numbers,
exponents, and the bipartite (black/white) coloring used by the Coxeter
element machinery.  Vertices are numbered 1..rank throughout.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .intmat import as_imatrix

__all__ = [
    "RootSystemId",
    "RootSystemData",
    "cartan_matrix",
    "dynkin_edges",
    "exponents",
    "bipartition",
    "root_system",
    "join_exponent_arithmetic",
    "CATALOG_IDS",
]

_ID_RE = re.compile(r"^([ADE])(\d+)$")


@dataclass(frozen=True)
class RootSystemId:
    """Identifier of a catalog root system: family A, D, or E plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family == "A":
            ok = self.rank >= 1
        elif self.family == "D":
            ok = self.rank >= 4
        elif self.family == "E":
            ok = self.rank in (6, 7, 8)
        else:
            ok = False
        if not ok:
            raise ValueError(f"invalid root system {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "RootSystemId":
        m = _ID_RE.match(text.strip().upper())
        if not m:
            raise ValueError(f"cannot parse root system name {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class RootSystemData:
    """Immutable catalog record for one root system."""

    id: RootSystemId
    rank: int
    cartan: np.ndarray
    edges: Tuple[Tuple[int, int], ...]
    h: int
    exponents: Tuple[int, ...]
    coloring: Dict[int, str]


def dynkin_edges(rid: RootSystemId) -> List[Tuple[int, int]]:
    """Bourbaki Dynkin tree as a list of vertex pairs (1-based)."""
    n = rid.rank
    if rid.family == "A":
        return [(i, i + 1) for i in range(1, n)]
    if rid.family == "D":
        # chain 1..n-2 with both n-1 and n attached to n-2
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    # E6/E7/E8: chain 1-3-4-...-n with 2 attached to 4
    chain = [(1, 3)] + [(i, i + 1) for i in range(3, n)]
    return chain + [(2, 4)]


def cartan_matrix(rid: RootSystemId) -> np.ndarray:
    """Simply-laced Cartan matrix: 2 on the diagonal, -1 at tree edges."""
    n = rid.rank
    A = np.zeros((n, n), dtype=object)
    for i in range(n):
        A[i, i] = 2
    for i, j in dynkin_edges(rid):
        A[i - 1, j - 1] = -1
        A[j - 1, i - 1] = -1
    return A


def exponents(rid: RootSystemId) -> Tuple[int, List[int]]:
    """Coxeter number h and the sorted exponent list (with multiplicity)."""
    n = rid.rank
    if rid.family == "A":
        return n + 1, list(range(1, n + 1))
    if rid.family == "D":
        # 1, 3, ..., 2n-3 together with n-1 (repeated for even n)
        return 2 * n - 2, sorted(list(range(1, 2 * n - 2, 2)) + [n - 1])
    table = {
        6: (12, [1, 4, 5, 7, 8, 11]),
        7: (18, [1, 5, 7, 9, 11, 13, 17]),
        8: (30, [1, 7, 11, 13, 17, 19, 23, 29]),
    }
    h, exps = table[n]
    return h, list(exps)


def bipartition(rid: RootSystemId) -> Dict[int, str]:
    """Proper 2-coloring of the Dynkin tree; vertex 1 is white by convention."""
    adj: Dict[int, List[int]] = {i: [] for i in range(1, rid.rank + 1)}
    for u, v in dynkin_edges(rid):
        adj[u].append(v)
        adj[v].append(u)
    color = {1: "white"}
    queue = deque([1])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in color:
                color[v] = "black" if color[u] == "white" else "white"
                queue.append(v)
    return color


def root_system(rid: RootSystemId) -> RootSystemData:
    h, exps = exponents(rid)
    return RootSystemData(
        id=rid,
        rank=rid.rank,
        cartan=cartan_matrix(rid),
        edges=tuple(dynkin_edges(rid)),
        h=h,
        exponents=tuple(exps),
        coloring=bipartition(rid),
    )


def join_exponent_arithmetic(ids: Sequence[RootSystemId]) -> Tuple[int, List[int]]:
    """Exponent arithmetic for a join of root systems.

    The Coxeter eigenvalue arguments of a join are the sums k_1/h_1 + ... +
    k_m/h_m taken mod 1 over all exponent combinations.  The result is
    returned in canonical reduced form: h is the least common denominator of
    the reduced fractional parts and the exponents are the numerators over
    that h, sorted with multiplicity.

    For (A4, A2, A1) this reproduces Exp(E8) over h = 30, and for
    (A3, A2, A1) it reproduces Exp(E6) over h = 12.
    """
    if not ids:
        raise ValueError("need at least one root system id")
    fracs = [Fraction(0)]
    for rid in ids:
        h, exps = exponents(rid)
        fracs = [f + Fraction(k, h) for f in fracs for k in exps]
    fracs = [f - math.floor(f) for f in fracs]
    hout = 1
    for f in fracs:
        hout = hout * f.denominator // math.gcd(hout, f.denominator)
    return hout, sorted(int(f * hout) for f in fracs)


def _catalog_ids() -> List[RootSystemId]:
    out = [RootSystemId("A", n) for n in range(1, 9)]
    out += [RootSystemId("D", n) for n in range(4, 9)]
    out += [RootSystemId("E", n) for n in (6, 7, 8)]
    return out


CATALOG_IDS: Tuple[RootSystemId, ...] = tuple(_catalog_ids())
