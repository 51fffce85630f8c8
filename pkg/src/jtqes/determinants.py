"""Exact determinants of matrices with polynomial entries.

Fraction-free (Bareiss) elimination keeps intermediate entries in the
polynomial ring: every division performed is exact.  Cofactor expansion is
quadratic in cost per minor and explodes combinatorially, so it is left to
the test suite as an independent cross-check on small orders.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import Poly


def _as_poly(entry) -> Poly:
    if isinstance(entry, Poly):
        return entry
    return Poly.const(Fraction(entry) if isinstance(entry, int) else entry)


def _exact_div(a, b):
    if isinstance(a, Poly) or isinstance(b, Poly):
        return _as_poly(a).exact_div(_as_poly(b))
    return a / b


def check_bandwidth(rows, bandwidth: int) -> None:
    n = len(rows)
    for i in range(n):
        if len(rows[i]) != n:
            raise ValueError("matrix is not square")
        for j in range(n):
            if abs(i - j) > bandwidth and _as_poly(rows[i][j]):
                raise ValueError(f"nonzero entry ({i},{j}) outside bandwidth {bandwidth}")


def banded_determinant(rows, bandwidth: int | None = None) -> Poly:
    """Exact determinant via fraction-free elimination with row pivoting.

    `rows` is a square list-of-lists of Poly (or scalars).  When `bandwidth`
    is given the band structure is validated first; elimination itself is
    general and tolerates zero pivots anywhere.
    """
    n = len(rows)
    if n == 0:
        return Poly.const(1)
    if bandwidth is not None:
        check_bandwidth(rows, bandwidth)
    m = [[_as_poly(e) for e in row] for row in rows]
    for row in m:
        if len(row) != n:
            raise ValueError("matrix is not square")
    sign = 1
    prev = Poly.const(1)
    for col in range(n - 1):
        pivot = col
        while pivot < n and m[pivot][col].is_zero:
            pivot += 1
        if pivot == n:
            return Poly()
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                num = m[i][j] * m[col][col] - m[i][col] * m[col][j]
                m[i][j] = num.exact_div(prev)
            m[i][col] = Poly()
        prev = m[col][col]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det
