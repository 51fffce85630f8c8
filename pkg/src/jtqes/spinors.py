"""Two-component polynomial spinors and matrix differential operators on them.

A SpinorOperator is a 2x2 matrix whose entries are finite sums
c(x) * (d/dx)^m with polynomial coefficients c.  Coefficients may live in any
exact ring handled by Poly (rationals, polynomials in a second variable such
as t = kappa^2, or quotient-ring residues), so the same machinery serves both
symbolic identities and verification at an algebraic coupling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .polynomials import Poly


@dataclass(frozen=True)
class PolynomialSpinor:
    """Column spinor (phi1, phi2), both components polynomials in x."""

    phi1: Poly
    phi2: Poly

    def in_space(self, n: int) -> bool:
        """Membership in the flag space: deg(phi1) <= n+1, deg(phi2) <= n.
        n = -1 means the lower component must vanish."""
        return self.phi1.degree <= n + 1 and self.phi2.degree <= n

    def __add__(self, other: "PolynomialSpinor"):
        return PolynomialSpinor(self.phi1 + other.phi1, self.phi2 + other.phi2)

    def __sub__(self, other: "PolynomialSpinor"):
        return PolynomialSpinor(self.phi1 - other.phi1, self.phi2 - other.phi2)

    def scale(self, c) -> "PolynomialSpinor":
        return PolynomialSpinor(self.phi1.scale(c), self.phi2.scale(c))

    @property
    def is_zero(self) -> bool:
        return self.phi1.is_zero and self.phi2.is_zero


class ScalarDiffOp:
    """sum_m c_m(x) (d/dx)^m, normalized: no zero coefficient polynomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        norm = {}
        for order, c in (terms or {}).items():
            if not isinstance(c, Poly):
                c = Poly.const(c)
            if c:
                norm[order] = norm.get(order, Poly()) + c
        self.terms = {m: c for m, c in sorted(norm.items()) if c}

    @staticmethod
    def zero():
        return ScalarDiffOp()

    @staticmethod
    def mul(c) -> "ScalarDiffOp":
        """Multiplication operator by the polynomial (or scalar) c."""
        return ScalarDiffOp({0: c if isinstance(c, Poly) else Poly.const(c)})

    @staticmethod
    def d(order: int = 1) -> "ScalarDiffOp":
        return ScalarDiffOp({order: Poly.const(1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, ScalarDiffOp) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "ScalarDiffOp(0)"
        bits = [f"({c!r})D^{m}" if m else f"({c!r})" for m, c in self.terms.items()]
        return "ScalarDiffOp(" + " + ".join(bits) + ")"

    def __add__(self, other: "ScalarDiffOp"):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Poly()) + c
        return ScalarDiffOp(out)

    def __neg__(self):
        return ScalarDiffOp({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "ScalarDiffOp":
        return ScalarDiffOp({m: c.scale(s) for m, c in self.terms.items()})

    def compose(self, other: "ScalarDiffOp") -> "ScalarDiffOp":
        """Operator product self . other, expanded by the Leibniz rule."""
        out = {}
        for m, c in self.terms.items():
            for l, e in other.terms.items():
                # D^m (e * g) = sum_i C(m,i) e^(i) D^(m-i) g
                ei = e
                for i in range(m + 1):
                    coeff = c * ei.scale(comb(m, i))
                    if coeff:
                        key = m - i + l
                        out[key] = out.get(key, Poly()) + coeff
                    ei = ei.derivative()
                    if ei.is_zero and i < m:
                        break
        return ScalarDiffOp(out)

    def apply(self, f: Poly) -> Poly:
        out = Poly()
        for m, c in self.terms.items():
            g = f
            for _ in range(m):
                g = g.derivative()
            out = out + c * g
        return out


class SpinorOperator:
    """2x2 matrix of ScalarDiffOp acting on PolynomialSpinor columns."""

    __slots__ = ("e",)

    def __init__(self, entries=None):
        if entries is None:
            entries = [[ScalarDiffOp.zero(), ScalarDiffOp.zero()],
                       [ScalarDiffOp.zero(), ScalarDiffOp.zero()]]
        self.e = [[entries[i][j] for j in range(2)] for i in range(2)]

    # -- constructors ----------------------------------------------------
    @staticmethod
    def zero():
        return SpinorOperator()

    @staticmethod
    def diag(upper: ScalarDiffOp, lower: ScalarDiffOp):
        z = ScalarDiffOp.zero()
        return SpinorOperator([[upper, z], [z, lower]])

    @staticmethod
    def scalar(op: ScalarDiffOp):
        return SpinorOperator.diag(op, op)

    @staticmethod
    def raise_slot(op: ScalarDiffOp):
        """op times the matrix moving the lower component up (sigma+)."""
        z = ScalarDiffOp.zero()
        return SpinorOperator([[z, op], [z, z]])

    @staticmethod
    def lower_slot(op: ScalarDiffOp):
        """op times the matrix moving the upper component down (sigma-)."""
        z = ScalarDiffOp.zero()
        return SpinorOperator([[z, z], [op, z]])

    # -- algebra -----------------------------------------------------------
    def __add__(self, other: "SpinorOperator"):
        return SpinorOperator([[self.e[i][j] + other.e[i][j] for j in range(2)] for i in range(2)])

    def __neg__(self):
        return SpinorOperator([[-self.e[i][j] for j in range(2)] for i in range(2)])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "SpinorOperator":
        return SpinorOperator([[self.e[i][j].scale(s) for j in range(2)] for i in range(2)])

    def compose(self, other: "SpinorOperator") -> "SpinorOperator":
        out = SpinorOperator()
        for i in range(2):
            for j in range(2):
                acc = ScalarDiffOp.zero()
                for l in range(2):
                    acc = acc + self.e[i][l].compose(other.e[l][j])
                out.e[i][j] = acc
        return out

    def apply(self, s: PolynomialSpinor) -> PolynomialSpinor:
        return PolynomialSpinor(
            self.e[0][0].apply(s.phi1) + self.e[0][1].apply(s.phi2),
            self.e[1][0].apply(s.phi1) + self.e[1][1].apply(s.phi2),
        )

    def __eq__(self, other):
        return isinstance(other, SpinorOperator) and all(
            self.e[i][j] == other.e[i][j] for i in range(2) for j in range(2)
        )

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.e))

    def __repr__(self):
        return f"SpinorOperator({self.e!r})"

    def equal_on_monomials(self, other: "SpinorOperator", max_degree: int) -> bool:
        """Exact apply-and-compare on every monomial spinor of degree <= max_degree."""
        for deg in range(max_degree + 1):
            for slot in (0, 1):
                mono = Poly([0] * deg + [1])
                s = PolynomialSpinor(mono, Poly()) if slot == 0 else PolynomialSpinor(Poly(), mono)
                a, b = self.apply(s), other.apply(s)
                if a.phi1 != b.phi1 or a.phi2 != b.phi2:
                    return False
        return True


def commutator(a: SpinorOperator, b: SpinorOperator) -> SpinorOperator:
    return a.compose(b) - b.compose(a)


def anticommutator(a: SpinorOperator, b: SpinorOperator) -> SpinorOperator:
    return a.compose(b) + b.compose(a)


def apply_operator(op: SpinorOperator, s: PolynomialSpinor) -> PolynomialSpinor:
    return op.apply(s)


def monomial_spinor(degree: int, slot: int) -> PolynomialSpinor:
    mono = Poly([0] * degree + [1])
    if slot == 0:
        return PolynomialSpinor(mono, Poly())
    return PolynomialSpinor(Poly(), mono)


def lift_coeffs(op: ScalarDiffOp, lift) -> ScalarDiffOp:
    """Map every polynomial coefficient through `lift` (ring embedding)."""
    return ScalarDiffOp({m: Poly([lift(c) for c in p.coeffs]) for m, p in op.terms.items()})
