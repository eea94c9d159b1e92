"""Eigenvector machinery: Jacobi diagonalization, Cartan/Coxeter transfer,
closed-form eigenvectors for A_n, E6, E8, and the Perron-Frobenius vector.

Eigenvalue bookkeeping: a rank-n Cartan matrix has eigenvalues
lambda_k = 2 - 2cos(k*pi/h) = 4 sin^2(k*pi/2h) over the exponents k,
while the Coxeter element has eigenvalues e^{2*pi*i*k/h}.  (Some
references quote theta_k = 2*pi*k/h for the Cartan spectrum as well;
that angle belongs to the Coxeter side only — the numeric spectrum
settles it.)

Everything here is floating point; the residual contract is
||A v - lambda v||_inf <= 1e-9 * max(1, ||A||_inf * ||v||_inf).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .gabrielov import (
    E8_CONJUGATOR_WORD,
    e8_factorization,
    weyl_apply,
)
from .intmat import as_imatrix, frac_inverse, to_int
from .lattice import bipartite_coxeter
from .rootsys import RootSystemId, cartan_matrix, exponents, root_system

__all__ = [
    "Eigenpair",
    "DELTA",
    "residual",
    "normalize_eigvec",
    "projective_distance",
    "jacobi_eigh",
    "eig_sym",
    "cartan_spectrum",
    "transfer_eigenvalue",
    "cartan_coxeter_transfer",
    "coxeter_cartan_transfer",
    "coxeter_eigvec_from_cartan",
    "an_eigenvector",
    "an_coxeter_eigenvector",
    "eigenvalue_for_angles",
    "e8_eigenvector",
    "e6_eigenvector",
    "factorized_coxeter_eigenvector",
    "perron_frobenius",
    "zamolodchikov_vector",
    "pf_closed_form",
    "ITER_TOL",
    "IDENTITY_TOL",
    "PIPELINE_TOL",
]

# tolerance ladder: iteration stops, identity acceptance, long pipelines
ITER_TOL = 1e-13
IDENTITY_TOL = 1e-9
PIPELINE_TOL = 1e-7

DELTA = math.pi / 2


@dataclass
class Eigenpair:
    lam: float
    vector: np.ndarray
    k: Optional[int] = None
    h: Optional[int] = None
    residual: float = 0.0


def residual(A, v, lam) -> float:
    """Relative infinity-norm eigen residual."""
    A = np.asarray(A, dtype=complex)
    v = np.asarray(v, dtype=complex)
    num = np.max(np.abs(A @ v - lam * v))
    scale = max(1.0, np.max(np.abs(A)) * np.max(np.abs(v)))
    return float(num / scale)


def normalize_eigvec(v: np.ndarray) -> np.ndarray:
    """Scale so the largest-modulus coordinate equals +1."""
    v = np.asarray(v, dtype=complex)
    j = int(np.argmax(np.abs(v)))
    if v[j] == 0:
        raise ValueError("zero vector")
    out = v / v[j]
    return out.real if np.allclose(out.imag, 0, atol=1e-14) else out


def projective_distance(u, v) -> float:
    """sin of the angle between the lines spanned by u and v."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0 or nv == 0:
        raise ValueError("zero vector")
    c = abs(np.vdot(u, v)) / (nu * nv)
    return math.sqrt(max(0.0, 1.0 - min(1.0, c) ** 2))


def jacobi_eigh(A, tol: float = ITER_TOL, max_sweeps: int = 100):
    """Cyclic Jacobi diagonalization of a real symmetric matrix.

    Returns (w, V) with eigenvalues ascending and orthonormal columns.
    Sweeps stop when the off-diagonal Frobenius mass drops below tol.
    """
    M = np.array(A, dtype=float)
    n = M.shape[0]
    if M.shape != (n, n) or np.max(np.abs(M - M.T)) > 1e-12:
        raise ValueError("matrix must be symmetric within 1e-12")
    M = 0.5 * (M + M.T)
    V = np.eye(n)
    for _ in range(max_sweeps):
        off = math.sqrt(2.0 * sum(M[p, q] ** 2 for p in range(n) for q in range(p + 1, n)))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = M[p, q]
                if abs(apq) < 1e-300:
                    continue
                tau = (M[q, q] - M[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau)) if tau != 0 else 1.0
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                rp, rq = M[p, :].copy(), M[q, :].copy()
                M[p, :] = c * rp - s * rq
                M[q, :] = s * rp + c * rq
                cp, cq = M[:, p].copy(), M[:, q].copy()
                M[:, p] = c * cp - s * cq
                M[:, q] = s * cp + c * cq
                M[p, q] = M[q, p] = 0.0
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    else:
        raise RuntimeError("Jacobi sweeps did not converge")
    w = np.diag(M).copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


def eig_sym(A, tol: float = ITER_TOL, max_sweeps: int = 100) -> List[Eigenpair]:
    """Full spectrum of a real symmetric matrix as normalized Eigenpairs."""
    w, V = jacobi_eigh(A, tol=tol, max_sweeps=max_sweeps)
    out = []
    for i, lam in enumerate(w):
        vec = normalize_eigvec(V[:, i])
        out.append(Eigenpair(lam=float(lam), vector=vec, residual=residual(A, vec, lam)))
    return out


def cartan_spectrum(rid: RootSystemId) -> List[Eigenpair]:
    """Spectrum of the catalog Cartan matrix with (k, h) exponent labels."""
    data = root_system(rid)
    pairs = eig_sym(np.array(data.cartan, dtype=float))
    for pair, k in zip(pairs, data.exponents):
        pair.k = int(k)
        pair.h = data.h
    return pairs


def transfer_eigenvalue(mu: complex, branch: int = 1) -> complex:
    """lambda = 2 - (±sqrt(mu) + 1/±sqrt(mu)), principal square root."""
    if mu == 0:
        raise ValueError("mu must be nonzero")
    r = branch * cmath.sqrt(mu)
    return 2 - r - 1 / r


def cartan_coxeter_transfer(v1, v2, mu: complex, branch: int = 1) -> np.ndarray:
    """Coxeter eigenvector (v1; v2) for mu -> Cartan eigenvector (v1; sqrt(mu)·v2).

    Block order follows the bipartite split used to build C = -U⁻¹L: the
    first block is the one with the identity upper-left in both factors
    (white), the second (black) picks up the sqrt(mu) factor.  The image
    is an eigenvector for lambda = 2 - sqrt(mu) - 1/sqrt(mu).
    """
    if mu == 0:
        raise ValueError("mu must be nonzero")
    r = branch * cmath.sqrt(mu)
    v1 = np.asarray(v1, dtype=complex)
    v2 = np.asarray(v2, dtype=complex)
    return np.concatenate([v1, r * v2])


def coxeter_cartan_transfer(w1, w2, mu: complex, branch: int = 1) -> np.ndarray:
    """Inverse of cartan_coxeter_transfer: (w1; w2) -> (w1; w2/sqrt(mu))."""
    if mu == 0:
        raise ValueError("mu must be nonzero")
    r = branch * cmath.sqrt(mu)
    w1 = np.asarray(w1, dtype=complex)
    w2 = np.asarray(w2, dtype=complex)
    return np.concatenate([w1, w2 / r])


def coxeter_eigvec_from_cartan(
    x,
    theta: float,
    coloring: Dict[int, str],
    A=None,
    check_tol: float = 1e-8,
) -> np.ndarray:
    """Phase-dress a Cartan eigenvector into a bipartite-Coxeter eigenvector.

    Coordinate j of x is multiplied by e^{+i theta/2} at white vertices
    and e^{-i theta/2} at black ones; the result is an eigenvector of
    C_W·C_B for e^{2i theta}.  If A is given, the precondition
    (x is an A-eigenvector for 2 - 2cos(theta)) and the postcondition
    are both verified.
    """
    x = np.asarray(x, dtype=complex)
    lam = 2 - 2 * math.cos(theta)
    if A is not None and residual(A, x, lam) > IDENTITY_TOL:
        raise ValueError("x is not an eigenvector for 2 - 2cos(theta)")
    phase = np.array(
        [
            cmath.exp(1j * theta / 2 if coloring[j + 1] == "white" else -1j * theta / 2)
            for j in range(len(x))
        ]
    )
    xc = phase * x
    if A is not None:
        # bipartite_coxeter wants an exact integer matrix
        A_exact = as_imatrix(np.rint(np.asarray(A, dtype=float)).astype(int))
        C = np.array(bipartite_coxeter(A_exact, coloring), dtype=float)
        if residual(C, xc, cmath.exp(2j * theta)) > check_tol:
            raise ValueError("phase-dressed vector failed the Coxeter residual check")
    return xc


def an_eigenvector(n: int, k: int) -> np.ndarray:
    """Eigenvector of A(A_n) for 2 - 2cos(k*pi/(n+1)), component sums of phases.

    Component j (1-based) is sum_{m=0}^{n-j} e^{i(n-j-2m)theta}; the
    symmetric sum is real.
    """
    if not 1 <= k <= n:
        raise ValueError("exponent out of range")
    theta = k * math.pi / (n + 1)
    out = np.zeros(n)
    for j in range(1, n + 1):
        s = sum(cmath.exp(1j * (n - j - 2 * m) * theta) for m in range(n - j + 1))
        out[j - 1] = s.real
    return out


def an_coxeter_eigenvector(n: int, theta: float) -> np.ndarray:
    """Eigenvector of C(A_n) (standard polarization) for e^{2i theta}:
    component j is sum_{m=0}^{n-j} e^{2i m theta}."""
    return np.array(
        [sum(cmath.exp(2j * m * theta) for m in range(n - j + 1)) for j in range(1, n + 1)]
    )


def eigenvalue_for_angles(theta: float, gam: float) -> float:
    """lambda(alpha) = 2 - 2cos(theta + gamma + pi/2)."""
    return 2 - 2 * math.cos(theta + gam + DELTA)


def e8_eigenvector(a: int, b: int, form: str = "simplified") -> np.ndarray:
    """Closed-form eigenvector of A(E8) for 2 - 2cos(a*pi/5 + b*pi/3 + pi/2).

    The 8 pairs (a, b) with 1 <= a <= 4, 1 <= b <= 2 cover the 8
    eigenvalues 2 - 2cos(pi + k*pi/30), k in Exp(E8), bijectively.
    Both forms return the same vector: "long" is the raw cosine sums,
    "simplified" the factored products.
    """
    if not (1 <= a <= 4 and 1 <= b <= 2):
        raise ValueError("need 1 <= a <= 4 and 1 <= b <= 2")
    t = a * math.pi / 5
    g = b * math.pi / 3
    d = DELTA
    cos = math.cos
    if form == "long":
        return np.array(
            [
                cos(g + t - d) + cos(g - 3 * t - d) + cos(g - t - d),
                cos(2 * g + 2 * t),
                cos(2 * g) + cos(2 * g + 2 * t) + cos(2 * g - 2 * t) + cos(4 * t) + cos(2 * t),
                cos(g + 3 * t - d) + cos(g + t - d) + cos(-g + 3 * t - d),
                2 * cos(2 * g) + 2 * cos(2 * g + 2 * t) + cos(2 * g - 2 * t)
                + cos(2 * g + 4 * t) + cos(4 * t) + 2 * cos(2 * t) + 1,
                cos(g + 3 * t - d) + cos(g + t - d),
                cos(2 * g) + cos(2 * t - 2 * d),
                cos(g - t - d),
            ]
        )
    if form != "simplified":
        raise ValueError("form must be 'simplified' or 'long'")
    return np.array(
        [
            -2 * cos(4 * t) * cos(g - t - d),
            cos(2 * g + 2 * t),
            -2 * cos(t) ** 2,
            2 * cos(g) * cos(3 * t - d) + cos(g + t - d),
            # constant term restored so this row equals the cosine-sum form:
            # 4cos^2(2t) + 2cos(2t) = 1 on the admissible grid t = a*pi/5
            2 * cos(2 * g + 3 * t) * cos(t) - cos(2 * g) - 1,
            2 * cos(t) * cos(g + 2 * t - d),
            2 * cos(g + t - d) * cos(g - t + d),
            cos(g - t - d),
        ]
    )


def e6_eigenvector(a: int, b: int) -> np.ndarray:
    """Closed-form eigenvector of A(E6) for 2 - 2cos(a*pi/4 + b*pi/3 + pi/2),
    with 1 <= a <= 3, 1 <= b <= 2 covering the 6 eigenvalues."""
    if not (1 <= a <= 3 and 1 <= b <= 2):
        raise ValueError("need 1 <= a <= 3 and 1 <= b <= 2")
    t = a * math.pi / 4
    g = b * math.pi / 3
    d = DELTA
    cos = math.cos
    return np.array(
        [
            cos(3 * g + 3 * t - d),
            2 * cos(t) ** 2,
            -2 * cos(3 * g + 3 * t - d) * cos(g + t - d),
            -4 * cos(t) ** 2 * cos(g + t - d),
            1 - 2 * cos(2 * g + 3 * t) * cos(t),
            -2 * cos(g) * cos(t - d),
        ]
    )


def factorized_coxeter_eigenvector(k4: int, k2: int) -> np.ndarray:
    """Eigenvector of C_BW(E8) built from factor eigenvectors: w·G⁻¹·x_*.

    x_* = X_{C(A4)}(k4·pi/5) ⊗ X_{C(A2)}(k2·pi/3) ⊗ (1) is an eigenvector
    of C(A4)⊗C(A2)⊗C(A1) for mu = e^{2i alpha}, alpha = theta+gamma+pi/2;
    G⁻¹ carries it to the E8 simple-root basis and w conjugates the
    Gabrielov Coxeter element into the bipartite one.
    """
    if not (1 <= k4 <= 4 and 1 <= k2 <= 2):
        raise ValueError("need 1 <= k4 <= 4 and 1 <= k2 <= 2")
    theta = k4 * math.pi / 5
    gam = k2 * math.pi / 3
    x_star = np.kron(
        np.kron(an_coxeter_eigenvector(4, theta), an_coxeter_eigenvector(2, gam)),
        an_coxeter_eigenvector(1, 0.0),
    )
    G, _ = e8_factorization()
    Ginv = np.array(to_int(frac_inverse(G)), dtype=float)
    rid = RootSystemId("E", 8)
    w = np.array(weyl_apply(rid, E8_CONJUGATOR_WORD), dtype=float)
    return w @ (Ginv @ x_star)


def perron_frobenius(A, tol: float = ITER_TOL, max_iter: int = 200000) -> np.ndarray:
    """Positive eigenvector for the smallest Cartan eigenvalue, min entry 1.

    Power iteration on 5I - A (positive for catalog inputs) until
    successive 2-norm-normalized iterates differ by < tol in the
    infinity norm, then a fixed polishing stretch to machine precision
    (the golden-ratio checks want a couple of digits beyond tol).
    """
    A = np.array(A, dtype=float)
    n = A.shape[0]
    M = 5.0 * np.eye(n) - A
    v = np.ones(n) / math.sqrt(n)
    for _ in range(max_iter):
        prev = v
        u = M @ v
        v = u / np.linalg.norm(u)
        if np.max(np.abs(v - prev)) < tol:
            break
    else:
        raise RuntimeError("power iteration did not converge")
    for _ in range(1000):
        u = M @ v
        v = u / np.linalg.norm(u)
    if np.max(v) < 0:
        v = -v
    if np.min(v) <= 0:
        raise RuntimeError("iterate is not strictly positive; matrix irreducible?")
    return v / np.min(v)


def zamolodchikov_vector(m: float = 1.0) -> np.ndarray:
    """The increasing mass vector (m1..m8) with overall scale m."""
    c = math.cos
    pi = math.pi
    return m * np.array(
        [
            1.0,
            2 * c(pi / 5),
            2 * c(pi / 30),
            4 * c(pi / 5) * c(7 * pi / 30),
            4 * c(pi / 5) * c(2 * pi / 15),
            4 * c(pi / 5) * c(pi / 30),
            8 * c(pi / 5) ** 2 * c(7 * pi / 30),
            8 * c(pi / 5) ** 2 * c(2 * pi / 15),
        ]
    )


def pf_closed_form() -> np.ndarray:
    """Closed-form PF eigenvector of A(E8) in vertex order (not sorted)."""
    c = math.cos
    pi = math.pi
    return np.array(
        [
            2 * c(pi / 5) * c(11 * pi / 30),
            c(pi / 15),
            2 * c(pi / 5) ** 2,
            2 * c(pi / 15) * c(pi / 30),
            2 * c(4 * pi / 15) * c(pi / 5) + 0.5,
            2 * c(pi / 5) * c(7 * pi / 30),
            2 * c(pi / 30) * c(11 * pi / 30),
            c(11 * pi / 30),
        ]
    )
