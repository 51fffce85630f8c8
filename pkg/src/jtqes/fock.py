"""Brute-force oracle: the two-mode Jahn-Teller Hamiltonian in truncated Fock space.

The Hamiltonian couples a two-level system to two boson modes,

    H = n1 + n2 + 1 + (1/2 + 2 mu) sigma0
        + 2 kappa [ (a1 + a2+) sigma+  +  (a1+ + a2) sigma- ],

and commutes with the angular momentum J = n1 - n2 + sigma0/2.  The sector
with J eigenvalue j + 1/2 (j = 0, 1, 2, ...) is spanned by the normalized
states

    up(n)   = |j+n, n>   (x) |spin up>
    down(n) = |j+1+n, n> (x) |spin down>,      n = 0, 1, 2, ...

Matrix elements in the interleaved order [up(0), down(0), up(1), ...] were
derived directly from H:

    <up(n)|H|up(n)>     = (j + 2n) + 1 + (1/2 + 2 mu)
    <down(n)|H|down(n)> = (j + 2n + 1) + 1 - (1/2 + 2 mu)
    <up(n)|H|down(n)>   = 2 kappa sqrt(j + 1 + n)        (from a1 sigma+)
    <up(n)|H|down(n-1)> = 2 kappa sqrt(n)                (from a2+ sigma+)

so the sector matrix is tridiagonal in this order.  The tests rebuild H on
the full (unsectored) boson space and verify that its J-blocks reproduce
these matrices; nothing here is trusted without that cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import math

import numpy as np
import scipy.linalg


class OracleNonConvergence(RuntimeError):
    """Spectrum drift did not fall below tolerance by the truncation cap."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x).limit_denominator(10**12)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


@dataclass(frozen=True)
class SectorParams:
    """Physical parameter bundle: sector label j, level-shift mu, coupling kappa,
    and the block-size label k (2k a nonnegative integer for the exact solver)."""

    j: Fraction
    mu: Fraction
    kappa: float = 0.0
    k: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "j", as_fraction(self.j))
        object.__setattr__(self, "mu", as_fraction(self.mu))
        object.__setattr__(self, "k", as_fraction(self.k))

    @property
    def realizable_sector(self) -> bool:
        """True iff j labels an actual angular-momentum sector: integer >= 0."""
        return self.j.denominator == 1 and self.j >= 0

    @property
    def two_k(self) -> int:
        tk = 2 * self.k
        if tk.denominator != 1 or tk < 0:
            raise ValueError(f"2k must be a nonnegative integer, got k={self.k}")
        return int(tk)

    @property
    def level_separation(self) -> Fraction:
        return Fraction(1, 2) + 2 * self.mu


@dataclass(frozen=True)
class SectorBasis:
    """Interleaved labels [up(0), down(0), ..., up(N), down(N)]."""

    j: int
    truncation: int

    @property
    def dimension(self) -> int:
        return 2 * (self.truncation + 1)

    def labels(self):
        out = []
        for n in range(self.truncation + 1):
            out.append(("up", n))
            out.append(("down", n))
        return out


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: tuple
    truncation_used: int
    convergence_gap: float
    window: int


def build_sector_hamiltonian(p: SectorParams, N: int):
    """Sector Hamiltonian at truncation N (boson index n = 0..N), as a
    SymmetricMatrix of dimension 2(N+1)."""
    from .jacobi import SymmetricMatrix

    if not p.realizable_sector:
        raise ValueError(f"sector j={p.j} is not realizable (needs integer j >= 0)")
    if N < 1:
        raise ValueError("N must be at least 1")
    j = int(p.j)
    mu = float(p.mu)
    kappa = float(p.kappa)
    dim = 2 * (N + 1)
    h = np.zeros((dim, dim))
    for n in range(N + 1):
        iu, idn = 2 * n, 2 * n + 1
        h[iu, iu] = (j + 2 * n) + 1 + (0.5 + 2 * mu)
        h[idn, idn] = (j + 2 * n + 1) + 1 - (0.5 + 2 * mu)
        c = 2 * kappa * math.sqrt(j + 1 + n)
        h[iu, idn] = c
        h[idn, iu] = c
        if n >= 1:
            c = 2 * kappa * math.sqrt(n)
            h[iu, idn - 2] = c
            h[idn - 2, iu] = c
    return SymmetricMatrix(h)


def _band_eigvals(h: np.ndarray) -> np.ndarray:
    """Eigenvalues of the tridiagonal sector matrix via its banded form."""
    n = h.shape[0]
    bands = np.zeros((2, n))
    bands[0] = np.diag(h)
    bands[1, : n - 1] = np.diag(h, -1)
    return scipy.linalg.eig_banded(bands, lower=True, eigvals_only=True)


def sector_eigvals(p: SectorParams, N: int) -> np.ndarray:
    return _band_eigvals(np.array(build_sector_hamiltonian(p, N)))


def converged_spectrum(p: SectorParams, window: int, tol: float,
                       n_start: int = 16, n_max: int = 4096) -> SpectrumReport:
    """Double the truncation until the lowest `window` eigenvalues settle.

    The drift between consecutive truncations, restricted to the reported
    window, must fall below tol; otherwise OracleNonConvergence is raised at
    the cap.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = n_start
    prev = np.sort(sector_eigvals(p, n))[:window]
    while True:
        n *= 2
        if n > n_max:
            raise OracleNonConvergence(
                f"no convergence below tol={tol} by N={n_max} for {p}")
        cur = np.sort(sector_eigvals(p, n))[:window]
        gap = float(np.max(np.abs(cur - prev)))
        if gap <= tol:
            return SpectrumReport(tuple(float(e) for e in cur), n, gap, window)
        prev = cur


def contains_energy(report: SpectrumReport, energy: float, tol: float):
    """(within-tol, minimal |eigenvalue - energy|) over the reported window."""
    arr = np.asarray(report.eigenvalues)
    dist = float(np.min(np.abs(arr - energy)))
    return dist <= tol, dist


def residual_norm(state, p: SectorParams, N: int, energy: float, margin: int = 2) -> float:
    """||(H - E) psi|| / ||psi|| with H built at truncation N + margin.

    The extra rows absorb the boundary of the truncated state; margin >= 2.
    """
    if margin < 2:
        raise ValueError("margin must be >= 2")
    psi = np.asarray(state, dtype=float)
    nrm = np.linalg.norm(psi)
    if nrm == 0:
        raise ValueError("zero state")
    h = np.array(build_sector_hamiltonian(p, N + margin))
    v = np.zeros(h.shape[0])
    v[: psi.size] = psi
    return float(np.linalg.norm(h @ v - energy * v) / nrm)


# ---------------------------------------------------------------------------
# Full (unsectored) space: used to prove the symmetry and the block structure
# ---------------------------------------------------------------------------

@dataclass
class FullSpace:
    """Two bosons and a spin, truncated at total boson number <= nmax."""

    nmax: int
    states: list = field(default_factory=list)

    def __post_init__(self):
        self.states = [
            (n1, n2, s)
            for n1 in range(self.nmax + 1)
            for n2 in range(self.nmax + 1 - n1)
            for s in (+1, -1)
        ]
        self.index = {st: i for i, st in enumerate(self.states)}


def full_space_hamiltonian(mu, kappa, nmax: int):
    """H on the full truncated space; returns (FullSpace, matrix)."""
    sp = FullSpace(nmax)
    mu = float(as_fraction(mu))
    kappa = float(kappa)
    dim = len(sp.states)
    h = np.zeros((dim, dim))
    for (n1, n2, s), i in sp.index.items():
        h[i, i] = n1 + n2 + 1 + (0.5 + 2 * mu) * s
        if s == -1:
            # (a1 + a2+) sigma+ sends |n1,n2,down> up a spin
            if n1 >= 1:
                h[sp.index[(n1 - 1, n2, +1)], i] += 2 * kappa * math.sqrt(n1)
            if (n1, n2 + 1, +1) in sp.index:
                h[sp.index[(n1, n2 + 1, +1)], i] += 2 * kappa * math.sqrt(n2 + 1)
        else:
            # (a1+ + a2) sigma- is the conjugate coupling
            if (n1 + 1, n2, -1) in sp.index:
                h[sp.index[(n1 + 1, n2, -1)], i] += 2 * kappa * math.sqrt(n1 + 1)
            if n2 >= 1:
                h[sp.index[(n1, n2 - 1, -1)], i] += 2 * kappa * math.sqrt(n2)
    return sp, h


def angular_momentum_matrix(sp: FullSpace) -> np.ndarray:
    return np.diag([n1 - n2 + 0.5 * s for (n1, n2, s) in sp.states])


def check_J_commutes(mu, kappa, N: int, tol: float = 1e-12) -> bool:
    """||J H - H J|| below tol on the full truncated space.

    The commutator vanishes identically; truncation at fixed total boson
    number is J-invariant, so no boundary terms appear.
    """
    sp, h = full_space_hamiltonian(mu, kappa, N)
    jmat = angular_momentum_matrix(sp)
    return float(np.max(np.abs(jmat @ h - h @ jmat))) <= tol
