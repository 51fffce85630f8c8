import random
from fractions import Fraction as F

import pytest

from jtqes.polynomials import (
    Poly,
    RootEnclosure,
    count_real_roots,
    isolate_real_roots,
    refine_enclosure,
)
from jtqes.recurrence import build_recurrence_matrix, determinant_polynomial, eta_rho_parameters

X = Poly.variable()


def test_sqrt2_single_enclosure():
    encs = isolate_real_roots(X * X - 2, 0, 10)
    assert len(encs) == 1
    (e,) = encs
    assert 1 <= e.lower and e.upper <= 2


def test_no_real_roots():
    assert isolate_real_roots(X * X + 1, -10, 10) == []


def test_double_root_multiplicity_hint():
    encs = isolate_real_roots((X - 3) * (X - 3), 0, 10)
    assert len(encs) == 1
    assert encs[0].multiplicity_hint == 2
    assert 3 in encs[0]


def test_counts_match_sturm():
    p = (X - 1) * (X - 2) * (X + 5) * (X * X + 1)
    assert count_real_roots(p, -10, 10) == 3
    assert count_real_roots(p, F(3, 2), 10) == 1
    assert len(isolate_real_roots(p, -10, 10)) == 3


def test_random_linear_factor_products():
    rng = random.Random(515)
    for _ in range(25):
        n = rng.randint(1, 6)
        roots = set()
        while len(roots) < n:
            roots.add(F(rng.randint(-40, 40), rng.randint(1, 8)))
        p = Poly.from_roots(sorted(roots))
        encs = isolate_real_roots(p, -50, 50)
        assert len(encs) == n
        for e, r in zip(encs, sorted(roots)):
            assert r in e


def test_refine_sqrt2():
    (e,) = isolate_real_roots(X * X - 2, 0, 10)
    e = refine_enclosure(X * X - 2, e, F(1, 1000))
    assert e.width <= F(1, 1000)
    # the bracket still contains sqrt(2): check via sign of the polynomial
    assert (e.lower ** 2 - 2) <= 0 <= (e.upper ** 2 - 2)


def test_refine_collapses_on_exact_rational_root():
    p = X - F(1, 2)
    e = refine_enclosure(p, RootEnclosure(F(0), F(1)), F(1, 10))
    assert e.is_point and e.lower == F(1, 2)


def test_refine_rejects_bracket_without_root():
    with pytest.raises(ValueError):
        refine_enclosure(X * X - 2, RootEnclosure(F(3), F(4)), F(1, 10))


def test_refine_block_determinant_root():
    # smallest nontrivial block at eta = rho = 1: determinant has only the
    # trivial root t = 0, found and collapsed exactly
    j, mu = eta_rho_parameters(1, 1)
    det = determinant_polynomial(build_recurrence_matrix(F(1, 2), j, mu))
    encs = isolate_real_roots(det, 0, 100)
    assert len(encs) == 1
    e = refine_enclosure(det, encs[0], F(1, 10**6))
    assert e.is_point and e.lower == 0


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        isolate_real_roots(Poly(), 0, 1)
