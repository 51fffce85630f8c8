"""Dense univariate polynomials with exact coefficients, and real-root isolation.

Coefficients default to `fractions.Fraction`; any commutative-ring element
supporting ``+``, ``-``, ``*``, truthiness (zero test) and equality works, so
polynomials over quotient-ring elements or over other polynomials (a second
formal variable) reuse the same class.  Division-based algorithms (divmod,
gcd, Sturm chains, isolation) additionally need ``/`` on coefficients, i.e. a
field; in practice those paths run over Fraction.

Throughout the package the variable is formal.  The solver instantiates it as
t = kappa^2 for determinant work and as x for wavefunction components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest


def _coeff(c):
    return Fraction(c) if isinstance(c, int) else c


class Poly:
    """sum(c[i] * X**i) with trailing zero coefficients stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------
    @staticmethod
    def const(c) -> "Poly":
        return Poly([c])

    @staticmethod
    def variable() -> "Poly":
        return Poly([0, 1])

    @staticmethod
    def from_roots(roots) -> "Poly":
        p = Poly([1])
        for r in roots:
            p = p * Poly([-_coeff(r), 1])
        return p

    # -- basic queries ------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*X^{i}" if i else f"{c}")
        return "Poly(" + " + ".join(terms) + ")"

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly([a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=Fraction(0))])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "Poly":
        """Coefficient-wise multiplication by a scalar of the coefficient ring."""
        c = _coeff(c)
        return Poly([a * c for a in self.coeffs])

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out, base = Poly([1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        """Horner evaluation; x may live in any extension of the coefficient ring."""
        if self.is_zero:
            return Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([c * i for i, c in enumerate(self.coeffs)][1:])

    # -- euclidean structure (field coefficients) ----------------------
    def __divmod__(self, other: "Poly"):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        den = other.coeffs
        dd = len(den) - 1
        if len(rem) - 1 < dd:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        lead = den[-1]
        for i in range(len(rem) - 1, dd - 1, -1):
            if not rem[i]:
                continue
            q = rem[i] / lead
            quot[i - dd] = q
            for j, d in enumerate(den):
                rem[i - dd + j] = rem[i - dd + j] - q * d
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ArithmeticError("division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (Euclid); gcd(p, 0) = monic p."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def poly_xgcd(a: Poly, b: Poly):
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = Poly([1]), Poly()
    t0, t1 = Poly(), Poly([1])
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    lead = r0.leading
    return r0.monic(), s0.scale(1 / lead), t0.scale(1 / lead)


def squarefree_decomposition(p: Poly):
    """Yun's algorithm: list of (monic factor, multiplicity), factors pairwise coprime."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return []
    f = p.monic()
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return [(f, 1)]
    c = f.exact_div(g)
    d = f.derivative().exact_div(g) - c.derivative()
    out = []
    i = 1
    while c.degree > 0:
        a = poly_gcd(c, d)
        if a.degree > 0:
            out.append((a, i))
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        i += 1
    return out


def squarefree_part(p: Poly) -> Poly:
    prod = Poly([1])
    for f, _ in squarefree_decomposition(p):
        prod = prod * f
    return prod


# ---------------------------------------------------------------------------
# Sturm chains and root isolation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootEnclosure:
    """Rational bracket around one distinct real root.

    ``lower == upper`` marks an exactly-known rational root.  The hint records
    the multiplicity of the root in the polynomial the enclosure came from.
    """

    lower: Fraction
    upper: Fraction
    multiplicity_hint: int = 1

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    @property
    def is_point(self) -> bool:
        return self.lower == self.upper

    def __contains__(self, x) -> bool:
        return self.lower <= x <= self.upper


def sturm_chain(q: Poly):
    """Sturm chain of a squarefree polynomial."""
    chain = [q, q.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero:
        chain.pop()
    return chain


def _sign_variations(values) -> int:
    signs = [(-1 if v < 0 else 1) for v in values if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: Poly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi)."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        return 0
    q = squarefree_part(p)
    chain = sturm_chain(q)
    return _sign_variations([f(lo) for f in chain]) - _sign_variations([f(hi) for f in chain])


def _isolate_squarefree(q: Poly, lo: Fraction, hi: Fraction):
    """Brackets for all roots of squarefree q in [lo, hi].

    Returns (a, b, carrier) triples.  The carrier is the deflation of q by
    every exact rational root peeled off along the way; open brackets hold a
    strict sign change of their carrier, with no other carrier root at or
    inside the bracket, so later bisection is safe.  Point brackets carry the
    linear factor of their root.
    """
    out = []
    # peel off exact rational roots found during the search; deflation is exact
    for endpoint in (lo, hi):
        if q.degree > 0 and q(endpoint) == 0:
            out.append((endpoint, endpoint, Poly([-endpoint, 1])))
            q = q.exact_div(Poly([-endpoint, 1]))
    while True:
        if q.degree <= 0:
            return out
        chain = sturm_chain(q)

        def var(x):
            return _sign_variations([f(x) for f in chain])

        restart = False
        stack = [(lo, hi, var(lo), var(hi))]
        found = []
        while stack:
            a, b, va, vb = stack.pop()
            n = va - vb
            if n == 0:
                continue
            if n == 1:
                found.append((a, b))
                continue
            mid = (a + b) / 2
            if q(mid) == 0:
                # exact rational root: record, deflate, redo with the smaller q
                out.append((mid, mid, Poly([-mid, 1])))
                q = q.exact_div(Poly([-mid, 1]))
                restart = True
                break
            vm = var(mid)
            stack.append((a, mid, va, vm))
            stack.append((mid, b, vm, vb))
        if not restart:
            # single-root brackets of the current deflation: narrow each until
            # the carrier changes sign strictly inside (endpoints never vanish
            # here: endpoint roots were peeled before the Sturm pass)
            out.extend((a, b, q) for a, b in found)
            return out


def isolate_real_roots_with_factors(p: Poly, range_low, range_high):
    """Disjoint enclosures for every distinct real root of p in [lo, hi],
    each paired with a squarefree divisor of p that brackets it.

    The input is squarefree-factored first; each enclosure carries the
    multiplicity of its root in p.  Open brackets hold a strict sign change
    of their divisor and no other root of it, so they can be refined by
    plain bisection; point brackets pair with the linear factor of their
    exact rational root.
    """
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    lo, hi = Fraction(range_low), Fraction(range_high)
    if lo > hi:
        raise ValueError("empty range")
    pairs = []
    for factor, mult in squarefree_decomposition(p):
        for a, b, carrier in _isolate_squarefree(factor, lo, hi):
            enc = RootEnclosure(a, b, mult)
            while not enc.is_point and enc.width > 1:
                enc = _bisect_once(carrier, enc)
            pairs.append((enc, carrier))
    pairs.sort(key=lambda ef: (ef[0].lower, ef[0].upper))
    # shrink any overlapping neighbours (roots of distinct factors are distinct)
    for i in range(len(pairs) - 1):
        e1, f1 = pairs[i]
        e2, f2 = pairs[i + 1]
        while e1.upper > e2.lower:
            if e1.width >= e2.width:
                e1 = _bisect_once(f1, e1)
            else:
                e2 = _bisect_once(f2, e2)
        pairs[i] = (e1, f1)
        pairs[i + 1] = (e2, f2)
    return pairs


def isolate_real_roots(p: Poly, range_low, range_high):
    """Disjoint enclosures covering every distinct real root of p in [lo, hi]."""
    return [e for e, _ in isolate_real_roots_with_factors(p, range_low, range_high)]


def _bisect_once(q: Poly, e: RootEnclosure) -> RootEnclosure:
    if e.is_point:
        return e
    mid = e.midpoint
    vmid = q(mid)
    if vmid == 0:
        return RootEnclosure(mid, mid, e.multiplicity_hint)
    if (q(e.lower) < 0) != (vmid < 0):
        return RootEnclosure(e.lower, mid, e.multiplicity_hint)
    return RootEnclosure(mid, e.upper, e.multiplicity_hint)


def refine_enclosure(p: Poly, e: RootEnclosure, tol) -> RootEnclosure:
    """Shrink an enclosure below tol by bisection on exact sign evaluations.

    Works on the squarefree part of p, where the enclosed root is simple and
    the bracket carries a strict sign change.  An exact rational root hit by
    a midpoint collapses the enclosure to a point.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if e.is_point:
        return e
    q = squarefree_part(p)
    qlo, qhi = q(e.lower), q(e.upper)
    if qlo == 0:
        return RootEnclosure(e.lower, e.lower, e.multiplicity_hint)
    if qhi == 0:
        return RootEnclosure(e.upper, e.upper, e.multiplicity_hint)
    if (qlo < 0) == (qhi < 0):
        raise ValueError("invalid enclosure: no sign change over bracket")
    while e.width > tol:
        e = _bisect_once(q, e)
        if e.is_point:
            break
    return e
