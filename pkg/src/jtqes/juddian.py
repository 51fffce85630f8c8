"""Isolated exact points: determinant roots, exact verification, reconstruction.

Pipeline for one parameter cell (k, j, mu):

1. build the pair-recurrence block in the operator convention and take its
   exact determinant in t = kappa^2;
2. isolate all real roots in (0, kappa_max^2] with exact arithmetic;
3. for each root, solve the null vector and run the eigen-check of the block
   operator L in Q[t]/(m), m the squarefree factor carrying the root - no
   floating point anywhere in the verification;
4. on realizable sectors (integer j >= 0), cross-validate against the
   brute-force oracle: the baseline energy must appear in the converged
   spectrum, and the state reconstructed from the coefficient chains must
   have a tiny Hamiltonian residual.

Sign dictionary.  The commonly tabulated recurrence matrix carries the
level-shift parameter mu with the opposite sign to the Hamiltonian it
describes: the restriction of L(k, j, mu) equals the tabulated matrix
evaluated at -mu, and the oracle confirms the roots of exactly that matrix
against the Hamiltonian at +mu.  All public entry points here take the
physical mu (the one in the Hamiltonian and in SectorParams) and flip it
internally; recurrence.build_recurrence_matrix keeps the tabulated form.
For mu = 0 the two conventions coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .fock import (
    SectorParams,
    as_fraction,
    contains_energy,
    converged_spectrum,
    residual_norm,
)
from .generators import baseline_epsilon, build_L, energy_from_epsilon, l_matrix, qes_lambda
from .polynomials import (
    Poly,
    RootEnclosure,
    isolate_real_roots_with_factors,
    poly_gcd,
    refine_enclosure,
)
from .quotient import NonInvertibleError, QuotientElement
from .recurrence import RecurrenceSystem, build_recurrence_matrix, determinant_polynomial
from .spinors import PolynomialSpinor


class DegenerateDeterminantError(ArithmeticError):
    """The block determinant vanishes identically: every coupling solves the
    compatibility condition, so there are no isolated points to report."""


def operator_recurrence_matrix(k, j, mu) -> RecurrenceSystem:
    """The recurrence block in the operator (= physical) convention.

    Identical to build_recurrence_matrix except that the level shift enters
    with the sign used by the Hamiltonian; see the module docstring.
    """
    return build_recurrence_matrix(k, j, -as_fraction(mu))


def juddian_determinant(k, j, mu) -> Poly:
    return determinant_polynomial(operator_recurrence_matrix(k, j, mu))


def bridge_identity_holds(k, j, mu) -> bool:
    """Entry-by-entry equality of the L restriction with the recurrence block.

    matrix(L(k,j,mu) - lambda) in the factorial basis == operator-convention
    recurrence matrix, both exact over Q[t].
    """
    lm = l_matrix(k, j, mu)             # symbolic t
    rs = operator_recurrence_matrix(k, j, mu)
    if len(lm) != rs.order:
        return False
    for i in range(rs.order):
        for jj in range(rs.order):
            a = lm[i][jj]
            if not isinstance(a, Poly):
                a = Poly.const(a)
            if a != rs.matrix[i][jj]:
                return False
    return True


# ---------------------------------------------------------------------------
# Null vectors and the exact eigen-check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoefficientVector:
    """Chains (w_0..w_{2k}) and (v_1..v_{2k}) as residues mod the root factor,
    normalized to w_0 = 1."""

    omega: tuple
    v: tuple
    modulus: Poly


@dataclass(frozen=True)
class ValidationReport:
    exact_eigencheck: bool
    realizable: bool
    oracle_distance: float | None = None
    oracle_truncation: int | None = None
    reconstruction_residual: float | None = None


@dataclass(frozen=True)
class JuddianPoint:
    """One isolated exact solution: root bracket for t = kappa^2, exact energy,
    coefficient chains, and its validation record."""

    k: Fraction
    j: Fraction
    mu: Fraction
    kappa_sq: RootEnclosure
    kappa: tuple                 # (float lower, float upper) bracket for kappa > 0
    multiplicity: int
    modulus: Poly                # squarefree determinant factor carrying the root
    energy_exact: QuotientElement
    energy: float
    coefficients: CoefficientVector
    validation: ValidationReport

    @property
    def kappa_mid(self) -> float:
        return 0.5 * (self.kappa[0] + self.kappa[1])


def _strip_zero_root(modulus: Poly) -> Poly:
    while modulus.degree > 0 and modulus.coefficient(0) == 0:
        modulus = modulus.exact_div(Poly.variable())
    return modulus


def _piece_with_root(pieces, enc: RootEnclosure) -> Poly:
    for piece in pieces:
        if enc.is_point:
            if piece(enc.lower) == 0:
                return piece
        else:
            lo, hi = piece(enc.lower), piece(enc.upper)
            if lo == 0 or hi == 0 or (lo < 0) != (hi < 0):
                return piece
    raise ArithmeticError("no factor piece brackets the root")


def solve_null_vector(rs: RecurrenceSystem, modulus: Poly, enc: RootEnclosure):
    """Kernel vector of the block at the enclosed root, exact in Q[t]/(modulus).

    The band makes this a forward substitution: each row determines the next
    unknown after dividing by the superdiagonal t.  The free variable is the
    head of the chain, normalized to 1; the final row must then vanish in the
    quotient ring, which is exactly the determinant condition.  If an
    inversion meets a zero divisor the modulus splits; we retry in the piece
    that still brackets the root.
    """
    modulus = _strip_zero_root(modulus)
    while True:
        try:
            return _solve_null_vector_once(rs, modulus)
        except NonInvertibleError as err:
            g = err.factor
            pieces = [g, modulus.exact_div(g)]
            modulus = _piece_with_root(pieces, enc)


def _solve_null_vector_once(rs: RecurrenceSystem, modulus: Poly):
    d = rs.order
    one = QuotientElement(Poly.const(1), modulus)
    zero = QuotientElement(Poly(), modulus)
    tbar = QuotientElement.generator(modulus)
    t_inv = tbar.inverse()
    u = [zero] * d
    u[0] = one
    for r in range(d - 1):
        sub = rs.matrix[r][r - 1] if r >= 1 else Poly()
        diag = rs.matrix[r][r]
        acc = zero
        if not sub.is_zero:
            acc = acc + QuotientElement(sub, modulus) * u[r - 1]
        if not diag.is_zero:
            acc = acc + QuotientElement(diag, modulus) * u[r]
        u[r + 1] = -acc * t_inv
    last = rs.matrix[d - 1]
    resid = QuotientElement(last[d - 2], modulus) * u[d - 2] \
        + QuotientElement(last[d - 1], modulus) * u[d - 1]
    if resid:
        # the squarefree modulus still mixes root components; its gcd with the
        # residual representative separates them
        g = poly_gcd(resid.rep, modulus)
        if g.degree == 0 or g.degree == modulus.degree:
            raise ArithmeticError("null-vector residual does not vanish")
        raise NonInvertibleError(g)
    omega = tuple(u[i] for i in range(0, d, 2))
    v = tuple(u[i] for i in range(1, d, 2))
    return CoefficientVector(omega, v, modulus), u


def spinor_from_coefficients(coeffs: CoefficientVector) -> PolynomialSpinor:
    """Flag-space spinor in the factorial basis: phi1 = sum w_n x^n/n!,
    phi2 = sum v_{n+1} x^n/n!, coefficients in the quotient ring."""
    up = [w * Fraction(1, math.factorial(n)) for n, w in enumerate(coeffs.omega)]
    lo = [vv * Fraction(1, math.factorial(n)) for n, vv in enumerate(coeffs.v)]
    return PolynomialSpinor(Poly(up), Poly(lo))


def exact_eigencheck(coeffs: CoefficientVector, k, j, mu) -> bool:
    """L . spinor == lambda . spinor in Q[t]/(modulus); no floating point.

    mu is the physical sign; L is built at that mu and lambda comes from the
    same parameters, so this is a self-contained operator-level verification,
    independent of the matrix route that produced the coefficients.
    """
    k, j, mu = as_fraction(k), as_fraction(j), as_fraction(mu)
    tbar = QuotientElement.generator(coeffs.modulus)
    l_op = build_L(k, mu, tbar)
    spinor = spinor_from_coefficients(coeffs)
    lam = qes_lambda(k, j, mu)
    out = l_op.apply(spinor)
    return out.phi1 == spinor.phi1.scale(lam) and out.phi2 == spinor.phi2.scale(lam)


# ---------------------------------------------------------------------------
# Reconstruction in the Fock sector
# ---------------------------------------------------------------------------

# fixed-point big-integer helpers: value(v) = v / 2**prec
def _fx(v: Fraction, prec: int) -> int:
    return (v.numerator << prec) // v.denominator


def _fmul(a: int, b: int, prec: int) -> int:
    return (a * b) >> prec


def _fdiv(a: int, b: int, prec: int) -> int:
    return (a << prec) // b


def _fx_float(a: int, prec: int) -> float:
    if a == 0:
        return 0.0
    sign = -1.0 if a < 0 else 1.0
    a = abs(a)
    shift = a.bit_length() - 53
    if shift > 0:
        return sign * math.ldexp(a >> shift, shift - prec)
    return sign * math.ldexp(a, -prec)


def _amplitude_chains(k: Fraction, j: int, mu: Fraction, t_hat: Fraction,
                      terms: int, prec: int):
    """Sector amplitude chains c_m (upper) and e_m = kappa d_m (lower) at
    rational coupling t_hat, in fixed-point arithmetic.

    With eps pinned to the baseline the chains satisfy

        (m - eps + mu) c_m + e_{m-1} + (m + j + 1) e_m = 0
        (m + 1) c_{m+1} + c_m + (m - eps - mu) e_m / t = 0

    solved forward from c_0 = 1.  At an exact root the solution decays
    superexponentially; away from one it blows up, which is what makes the
    residual check meaningful.  Fixed-point avoids rational-gcd blowup; the
    caller compares two precisions to bound the roundoff.
    """
    eps = baseline_epsilon(k, j, t_hat)
    t_fixed = _fx(t_hat, prec)
    c = [1 << prec]
    e = []
    for m in range(terms):
        prev_e = e[m - 1] if m >= 1 else 0
        num = _fmul(_fx(m - eps + mu, prec), c[m], prec) + prev_e
        e.append(-num * (m + j + 1).denominator // (m + j + 1).numerator
                 if isinstance(m + j + 1, Fraction) else -num // (m + j + 1))
        f = _fdiv(e[m], t_fixed, prec)
        c.append(-(c[m] + _fmul(_fx(m - eps - mu, prec), f, prec)) // (m + 1))
    return c, e


def _amplitudes(params: SectorParams, c, e, t_hat: Fraction, terms: int,
                prec: int) -> np.ndarray:
    j = int(params.j)
    kappa = math.sqrt(float(t_hat))
    psi = np.zeros(2 * terms)
    for m in range(terms):
        w = math.sqrt(math.factorial(j + m) * math.factorial(m))
        psi[2 * m] = _fx_float(c[m], prec) * w
        w = math.sqrt(math.factorial(j + 1 + m) * math.factorial(m))
        psi[2 * m + 1] = (_fx_float(e[m], prec) / kappa) * w
    return psi


def reconstruct_fock_state(point: JuddianPoint, params: SectorParams, N: int) -> np.ndarray:
    """Sector amplitudes [up(0), down(0), ..., up(N), down(N)] of the exact state.

    The chains are solved at a rational midpoint of a hard-refined root
    enclosure (tight enough that the coupling offset cannot excite the
    growing solution), then recomputed at higher fixed-point precision as a
    roundoff guard.  The returned vector is unit-normalized.
    """
    if not params.realizable_sector:
        raise ValueError("reconstruction needs a realizable sector (integer j >= 0)")
    if point.kappa_sq.lower <= 0 and not point.kappa_sq.is_point:
        raise ValueError("enclosure touches kappa = 0")
    j = int(params.j)
    terms = N + 1
    # offset and roundoff budgets both scale with the recurrence growth
    enc = refine_enclosure(point.modulus, point.kappa_sq,
                           Fraction(1, 10 ** (40 + 6 * terms)))
    t_hat = enc.midpoint
    prec = 512 + 28 * terms
    prev = None
    for _ in range(3):
        c, e = _amplitude_chains(point.k, j, params.mu, t_hat, terms, prec)
        psi = _amplitudes(params, c, e, t_hat, terms, prec)
        nrm = np.linalg.norm(psi)
        if nrm == 0:
            raise ArithmeticError("reconstructed state vanished")
        psi = psi / nrm
        if prev is not None and float(np.max(np.abs(psi - prev))) < 1e-11:
            return psi
        prev = psi
        prec += 256
    return prev


# ---------------------------------------------------------------------------
# The top-level search
# ---------------------------------------------------------------------------

def juddian_points(k, j, mu, kappa_max=10, tol=Fraction(1, 10**12),
                   validate: bool = True, oracle_tol: float = 1e-6,
                   truncation: int = 48) -> list:
    """All isolated exact points with 0 < kappa <= kappa_max for one cell.

    Every emitted point has passed the exact eigen-check; on realizable
    sectors the oracle distance and the reconstruction residual are filled in
    as well (validate=False skips the numerical stage, never the exact one).
    """
    k, j, mu = as_fraction(k), as_fraction(j), as_fraction(mu)
    kappa_max = as_fraction(kappa_max)
    if kappa_max <= 0:
        raise ValueError("kappa_max must be positive")
    tol = as_fraction(tol)
    rs = operator_recurrence_matrix(k, j, mu)
    det = determinant_polynomial(rs)
    if det.is_zero:
        diag = ", ".join(str(rs.matrix[i][i].coefficient(0)) for i in range(rs.order))
        raise DegenerateDeterminantError(
            f"determinant vanishes identically for k={k}, j={j}, mu={mu} "
            f"(diagonal entries {diag}); the compatibility condition holds for "
            f"every coupling and no isolated points exist")

    params = SectorParams(j=j, mu=mu, k=k)
    points = []
    for enc, factor in isolate_real_roots_with_factors(det, Fraction(0), kappa_max ** 2):
        if enc.upper <= 0 or (enc.is_point and enc.lower == 0):
            continue
        modulus = _strip_zero_root(factor)
        if modulus.degree == 1:
            # rational root: collapse the bracket to the exact point
            root = -modulus.coefficient(0) / modulus.coefficient(1)
            if root in enc:
                enc = RootEnclosure(root, root, enc.multiplicity_hint)
        enc = refine_enclosure(modulus, enc, tol)
        while enc.lower <= 0 and not enc.is_point:
            # bracket still touches zero: shrink until strictly positive
            enc = refine_enclosure(modulus, enc, enc.width / 4)
        coeffs, _ = solve_null_vector(rs, modulus, enc)
        modulus = coeffs.modulus
        ok = exact_eigencheck(coeffs, k, j, mu)
        tbar = QuotientElement.generator(modulus)
        energy_exact = energy_from_epsilon(baseline_epsilon(k, j, tbar), j)
        mid = refine_enclosure(modulus, enc, Fraction(1, 10**30)).midpoint
        energy_float = float(energy_exact.evaluate(mid))
        kappa_bracket = (math.sqrt(float(enc.lower)), math.sqrt(float(enc.upper)))

        oracle_distance = None
        oracle_n = None
        residual = None
        if validate and params.realizable_sector:
            run = replace(params, kappa=float(math.sqrt(mid)))
            window = 8
            while True:
                report = converged_spectrum(run, window, oracle_tol / 10)
                if max(report.eigenvalues) > energy_float + 1.0 or window >= 128:
                    break
                window *= 2
            _, oracle_distance = contains_energy(report, energy_float, oracle_tol)
            oracle_n = report.truncation_used

            point_tmp = JuddianPoint(k, j, mu, enc, kappa_bracket, enc.multiplicity_hint,
                                     modulus, energy_exact, energy_float, coeffs,
                                     ValidationReport(ok, True))
            psi = reconstruct_fock_state(point_tmp, run, truncation)
            residual = residual_norm(psi, run, truncation, energy_float)

        points.append(JuddianPoint(
            k, j, mu, enc, kappa_bracket, enc.multiplicity_hint, modulus,
            energy_exact, energy_float, coeffs,
            ValidationReport(ok, params.realizable_sector, oracle_distance,
                             oracle_n, residual)))
    points.sort(key=lambda p: p.kappa_sq.lower)
    return points
