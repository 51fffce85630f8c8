"""Arithmetic in Q[t]/(m): exact computation at an algebraic number.

A Juddian coupling enters the algebra only through t = kappa^2, a root of a
determinant factor m(t).  Working with residues modulo m keeps every
verification exact; no floating point is involved until a result is finally
evaluated on a refined enclosure of the root.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import Poly, poly_gcd, poly_xgcd


class NonInvertibleError(ArithmeticError):
    """Raised when an element shares a factor with the modulus.

    The offending factor is attached so the caller can split the modulus and
    retry in the piece that actually contains its root.
    """

    def __init__(self, factor: Poly):
        super().__init__(f"element not invertible; modulus factor {factor!r}")
        self.factor = factor


class QuotientElement:
    """Residue class ``rep mod modulus`` with deg(rep) < deg(modulus)."""

    __slots__ = ("rep", "modulus")

    def __init__(self, rep: Poly, modulus: Poly):
        if modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        self.modulus = modulus
        self.rep = rep % modulus

    # -- helpers --------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuotientElement):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return other
        if isinstance(other, (int, Fraction)):
            return QuotientElement(Poly.const(Fraction(other)), self.modulus)
        if isinstance(other, Poly):
            return QuotientElement(other, self.modulus)
        return None

    @staticmethod
    def generator(modulus: Poly) -> "QuotientElement":
        """The residue of t itself."""
        return QuotientElement(Poly.variable(), modulus)

    def __bool__(self):
        return not self.rep.is_zero

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.rep == o.rep

    def __hash__(self):
        return hash((self.rep, self.modulus))

    def __repr__(self):
        return f"QuotientElement({self.rep!r} mod {self.modulus!r})"

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuotientElement(self.rep + o.rep, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return QuotientElement(-self.rep, self.modulus)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuotientElement(self.rep - o.rep, self.modulus)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuotientElement(self.rep * o.rep, self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "QuotientElement":
        g, s, _ = poly_xgcd(self.rep, self.modulus)
        if g.degree != 0:
            raise NonInvertibleError(g)
        return QuotientElement(s.scale(1 / g.leading), self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuotientElement(Poly.const(1), self.modulus)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- evaluation --------------------------------------------------------
    def evaluate(self, t_value: Fraction) -> Fraction:
        """Exact evaluation of the representative at a rational point."""
        return self.rep(Fraction(t_value))

    def __float__(self):
        raise TypeError("evaluate() at a refined root enclosure instead")


def is_coprime_to_modulus(e: QuotientElement) -> bool:
    return poly_gcd(e.rep, e.modulus).degree == 0
