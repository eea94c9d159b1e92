"""Exact integer and rational matrix arithmetic on small dense matrices.

All exact-arithmetic modules in this package represent matrices as square
numpy arrays of dtype=object holding Python ints (or Fractions where a
computation leaves the integers).  Python integers never overflow, and
numpy's object matmul dispatches to exact Python arithmetic, so every
identity checked through this module is an exact statement.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "as_imatrix",
    "iidentity",
    "mat_eq",
    "is_symmetric",
    "is_integral",
    "to_int",
    "frac_inverse",
    "det_exact",
    "char_poly",
    "matrix_order",
]


def as_imatrix(data) -> np.ndarray:
    """Build a square object-dtype matrix of exact scalars (int or Fraction)."""
    M = np.array(data, dtype=object)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    out = np.empty(M.shape, dtype=object)
    for i in range(M.shape[0]):
        for j in range(M.shape[1]):
            v = M[i, j]
            if isinstance(v, Fraction):
                out[i, j] = int(v) if v.denominator == 1 else v
            elif isinstance(v, (int, np.integer)):
                out[i, j] = int(v)
            else:
                raise TypeError(f"non-exact entry {v!r} at ({i},{j})")
    return out


def iidentity(n: int) -> np.ndarray:
    M = np.zeros((n, n), dtype=object)
    for i in range(n):
        M[i, i] = 1
    return M


def mat_eq(A: np.ndarray, B: np.ndarray) -> bool:
    """Exact entrywise equality."""
    return A.shape == B.shape and bool(np.equal(A, B).all())


def is_symmetric(A: np.ndarray) -> bool:
    return mat_eq(A, A.T)


def is_integral(M: np.ndarray) -> bool:
    return all(
        isinstance(v, (int, np.integer)) or (isinstance(v, Fraction) and v.denominator == 1)
        for v in M.flat
    )


def to_int(M: np.ndarray) -> np.ndarray:
    """Convert an integral matrix of Fractions/ints to plain ints."""
    if not is_integral(M):
        raise ValueError("matrix has non-integer entries")
    out = np.empty(M.shape, dtype=object)
    for idx, v in np.ndenumerate(M):
        out[idx] = int(v)
    return out


def frac_inverse(M: np.ndarray) -> np.ndarray:
    """Exact inverse by Gauss-Jordan elimination over the rationals.

    Returns an object matrix whose entries are ints where possible and
    Fractions otherwise.  Raises ValueError on singular input.
    """
    n = M.shape[0]
    aug = [
        [Fraction(M[i, j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix has no inverse")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            v = aug[i][n + j]
            out[i, j] = int(v) if v.denominator == 1 else v
    return out


def det_exact(M: np.ndarray):
    """Exact determinant via fraction-free Bareiss elimination."""
    n = M.shape[0]
    a = [[Fraction(M[i, j]) for j in range(n)] for i in range(n)]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    d = sign * a[n - 1][n - 1]
    return int(d) if d.denominator == 1 else d


def char_poly(M: np.ndarray) -> list:
    """Coefficients of det(xI - M), highest degree first, exact.

    Computed by evaluating the determinant at n+1 integer points and
    interpolating; avoids any floating-point round trip.
    """
    n = M.shape[0]
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        S = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                S[i, j] = (x if i == j else 0) - M[i, j]
        ys.append(Fraction(det_exact(S)))
    # Newton's divided differences, then expand to monomial coefficients.
    coef = list(ys)
    for j in range(1, n + 1):
        for i in range(n, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / Fraction(xs[i] - xs[i - j])
    poly = [coef[n]]  # lowest-degree-first
    for k in range(n - 1, -1, -1):
        # poly <- poly*(x - xs[k]) + coef[k]
        shifted = [Fraction(0)] + poly
        poly = [s - Fraction(xs[k]) * p for s, p in zip(shifted, poly + [Fraction(0)])]
        while len(poly) > 1 and poly[-1] == 0:
            poly.pop()
        poly[0] += coef[k]
    poly += [Fraction(0)] * (n + 1 - len(poly))
    out = []
    for c in reversed(poly):
        out.append(int(c) if c.denominator == 1 else c)
    return out


def matrix_order(M: np.ndarray, cap: int = 1000) -> int:
    """Smallest h >= 1 with M^h = I, exact; raises if none found within cap."""
    n = M.shape[0]
    I = iidentity(n)
    P = M
    for h in range(1, cap + 1):
        if mat_eq(P, I):
            return h
        P = P @ M
    raise ValueError(f"order not found <= {cap}")
