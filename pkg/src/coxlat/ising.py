"""Exact diagonalization of the periodic Ising chain with both fields.

    H = -J sum_n sigma^z_n sigma^z_{n+1} - h_z sum_n sigma^z_n
        - h_x sum_n sigma^x_n        (site N+1 = site 1)

Basis: product sigma^z states indexed by bitstrings; site 1 is the most
significant bit, bit 0 means spin +1.  H is real-symmetric with exact
entries, the translation T is a bit rotation, and [H, T] = 0 exactly.
Momentum sectors come from the projector (1/N) sum_n e^{-2 pi i k n/N} T^n
applied to one basis state per T-orbit (nonzero iff k·(orbit size) = 0
mod N), which lands directly on an orthonormal sector basis.

This exists for property verification at desk scale — it makes no
attempt at scaling-limit physics, and the dispersion fit is explicitly
exploratory.  Dense solvers only; the top of the N range is slow.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

__all__ = [
    "IsingParams",
    "MomentumLevel",
    "MAX_STATES",
    "build_hamiltonian",
    "translation_operator",
    "classical_energies",
    "momentum_spectrum",
    "dispersion_probe",
    "free_fermion_energy",
    "critical_field",
]

MAX_STATES = 16384


@dataclass(frozen=True)
class IsingParams:
    N: int
    J: float = 1.0
    h_z: float = 0.0
    h_x: float = 0.0

    def __post_init__(self):
        if self.N < 2 or 2**self.N > MAX_STATES:
            raise ValueError(f"N must satisfy 2 <= N and 2^N <= {MAX_STATES}")
        if self.J <= 0 or self.h_z < 0 or self.h_x < 0:
            raise ValueError("need J > 0, h_z >= 0, h_x >= 0")


@dataclass
class MomentumLevel:
    p: float
    epsilon: float
    k: int = 0
    vector: Optional[np.ndarray] = None


def _rotl(b: int, N: int) -> int:
    return ((b << 1) & ((1 << N) - 1)) | (b >> (N - 1))


def _sz(b: int, site: int, N: int) -> int:
    """sigma^z at 1-based site: +1 when the bit is clear."""
    return 1 - 2 * ((b >> (N - site)) & 1)


def build_hamiltonian(params: IsingParams) -> np.ndarray:
    """Dense 2^N x 2^N real-symmetric matrix of H."""
    N, J, h_z, h_x = params.N, params.J, params.h_z, params.h_x
    dim = 1 << N
    H = np.zeros((dim, dim))
    for b in range(dim):
        bonds = sum(_sz(b, n, N) * _sz(b, n % N + 1, N) for n in range(1, N + 1))
        mag = sum(_sz(b, n, N) for n in range(1, N + 1))
        H[b, b] = -J * bonds - h_z * mag
        for n in range(1, N + 1):
            H[b ^ (1 << (N - n)), b] -= h_x
    return H


def translation_operator(N: int) -> np.ndarray:
    """Permutation matrix of the cyclic shift sending site n+1 to site n."""
    dim = 1 << N
    T = np.zeros((dim, dim), dtype=int)
    for b in range(dim):
        T[_rotl(b, N), b] = 1
    return T


def classical_energies(params: IsingParams) -> np.ndarray:
    """Sorted diagonal energies at h_x = 0 (brute-force bitstring sum)."""
    N, J, h_z = params.N, params.J, params.h_z
    out = []
    for b in range(1 << N):
        bonds = sum(_sz(b, n, N) * _sz(b, n % N + 1, N) for n in range(1, N + 1))
        mag = sum(_sz(b, n, N) for n in range(1, N + 1))
        out.append(-J * bonds - h_z * mag)
    return np.sort(np.array(out, dtype=float))


def _orbits(N: int) -> List[List[int]]:
    seen = [False] * (1 << N)
    orbits = []
    for b in range(1 << N):
        if seen[b]:
            continue
        orbit = []
        c = b
        while not seen[c]:
            seen[c] = True
            orbit.append(c)
            c = _rotl(c, N)
        orbits.append(orbit)
    return orbits


def _sector_basis(N: int, k: int, orbits: List[List[int]]) -> np.ndarray:
    """Orthonormal momentum-k basis: one column per compatible orbit."""
    p = 2 * math.pi * k / N
    cols = []
    for orbit in orbits:
        d = len(orbit)
        if (k * d) % N != 0:
            continue
        v = np.zeros(1 << N, dtype=complex)
        for n, state in enumerate(orbit):
            v[state] = cmath.exp(-1j * p * n) / math.sqrt(d)
        cols.append(v)
    return np.array(cols).T if cols else np.zeros((1 << N, 0), dtype=complex)


def _wrap_momentum(k: int, N: int) -> float:
    p = 2 * math.pi * k / N
    return p if p <= math.pi + 1e-12 else p - 2 * math.pi


def momentum_spectrum(
    params: IsingParams, with_vectors: bool = False
) -> List[MomentumLevel]:
    """All 2^N levels as (p, epsilon) with epsilon >= 0 above the ground state.

    Within each momentum sector H restricts to a Hermitian block, which
    is diagonalized densely; levels come back sorted by (k, epsilon).
    The ground level is the single entry with epsilon = 0 — its p is
    whatever the diagonalization says, not an assumption.
    """
    N = params.N
    H = build_hamiltonian(params)
    orbits = _orbits(N)
    levels: List[MomentumLevel] = []
    for k in range(N):
        Q = _sector_basis(N, k, orbits)
        if Q.shape[1] == 0:
            continue
        Hk = Q.conj().T @ H @ Q
        w, psi = np.linalg.eigh(Hk)
        p = _wrap_momentum(k, N)
        for i, e in enumerate(w):
            vec = Q @ psi[:, i] if with_vectors else None
            levels.append(MomentumLevel(p=p, epsilon=float(e), k=k, vector=vec))
    e0 = min(level.epsilon for level in levels)
    for level in levels:
        level.epsilon -= e0
    levels.sort(key=lambda level: (level.k, level.epsilon))
    return levels


def dispersion_probe(params: IsingParams, band_count: int) -> dict:
    """Exploratory quasiparticle fit epsilon ~ sqrt(m^2 + c·p_lat^2).

    Bands are the j-th excitation energies per momentum (ground level
    dropped), p_lat = 2 sin(p/2) is the lattice momentum proxy, and the
    fit is linear least squares on epsilon^2.  Finite chains are far
    from the scaling limit: the output carries no pass/fail meaning.
    """
    if band_count < 0:
        raise ValueError("band_count must be nonnegative")
    levels = momentum_spectrum(params)
    by_p: Dict[float, List[float]] = {}
    ground_dropped = False
    for level in sorted(levels, key=lambda l: l.epsilon):
        if not ground_dropped and level.epsilon == 0.0:
            ground_dropped = True
            continue
        by_p.setdefault(round(level.p, 12), []).append(level.epsilon)
    bands = []
    for j in range(band_count):
        pts = [
            (p, es[j])
            for p, es in sorted(by_p.items())
            if len(es) > j
        ]
        if len(pts) < 2:
            raise ValueError(f"insufficient momentum points for band {j}")
        x = np.array([(2 * math.sin(p / 2)) ** 2 for p, _ in pts])
        y = np.array([e**2 for _, e in pts])
        design = np.vstack([np.ones_like(x), x]).T
        (m2, c), *_ = np.linalg.lstsq(design, y, rcond=None)
        mass = math.sqrt(max(m2, 0.0))
        fit = np.sqrt(np.maximum(m2 + c * x, 0.0))
        rms = float(np.sqrt(np.mean((np.sqrt(y) - fit) ** 2)))
        bands.append(
            {
                "band": j,
                "points": pts,
                "mass": mass,
                "slope": float(c),
                "rms_residual": rms,
            }
        )
    masses = [b["mass"] for b in bands]
    ratios = [m / masses[0] for m in masses] if masses and masses[0] > 0 else []
    return {"exploratory": True, "bands": bands, "masses": masses, "mass_ratios": ratios}


def free_fermion_energy(J: float, h_x: float, p: float) -> float:
    """Single-quasiparticle energy on the h_z = 0 line:
    2·sqrt(J² + h_x² - 2·J·h_x·cos p)."""
    return 2 * math.sqrt(J**2 + h_x**2 - 2 * J * h_x * math.cos(p))


def critical_field(J: float = 1.0, samples: int = 2001) -> float:
    """h_x minimizing the free-fermion gap min_p epsilon(p) at h_z = 0.

    The minimum over p sits at p = 0, giving gap 2|J - h_x|; the scan
    returns h_x = J under this Hamiltonian normalization (conventions
    that halve the fields quote J/2).
    """
    grid = np.linspace(0.0, 2.0 * J, samples)
    gaps = [min(free_fermion_energy(J, h, p) for p in (0.0, math.pi)) for h in grid]
    return float(grid[int(np.argmin(gaps))])
