import random
from fractions import Fraction as F

import pytest

from jtqes.generators import (
    algebra_relations_report,
    baseline_epsilon,
    build_L,
    energy_from_epsilon,
    generator_set,
    l_matrix,
    ode_system_13,
    parameter_maps,
    preserves_flag,
    qes_lambda,
    substitute_xi,
    transform_13_to_16,
)
from jtqes.polynomials import Poly
from jtqes.spinors import PolynomialSpinor, monomial_spinor

X = Poly.variable()


@pytest.mark.parametrize("two_k", [0, 1, 2, 3, 4])
def test_all_defining_relations_exact(two_k):
    gens = generator_set(F(two_k, 2))
    report = algebra_relations_report(gens)
    bad = [name for name, ok in report.items() if not ok]
    assert not bad, f"failing relations for 2k={two_k}: {bad}"


def test_j_plus_on_constant_upper():
    gens = generator_set(F(1))
    out = gens.j_plus.apply(PolynomialSpinor(Poly.const(1), Poly()))
    assert out.phi1 == X and out.phi2.is_zero


def test_j_zero_monomial_weights():
    # J0 (x^n, 0) = (n - k + c1) (x^n, 0) with c1 the projector eigenvalue on
    # the upper slot, which is 0 in this realization
    k = F(3, 2)
    gens = generator_set(k)
    for n in range(4):
        out = gens.j_zero.apply(monomial_spinor(n, 0))
        assert out.phi1 == (X ** n).scale(n - k)
        out = gens.j_zero.apply(monomial_spinor(n, 1))
        assert out.phi2 == (X ** n).scale(n - k + F(1, 2))


def test_fermionic_slot_directions():
    gens = generator_set(F(1))
    s = PolynomialSpinor(X ** 2, Poly())
    # Q's move upper content down
    assert gens.q1.apply(s).phi1.is_zero and not gens.q1.apply(s).phi2.is_zero
    assert gens.q2.apply(s).phi1.is_zero
    s2 = PolynomialSpinor(Poly(), X)
    # Qbar's move lower content up
    assert gens.qbar1.apply(s2).phi2.is_zero and gens.qbar1.apply(s2).phi1 == X ** 2
    assert gens.qbar2.apply(s2).phi1 == X


@pytest.mark.parametrize("two_k", [0, 1, 2, 3, 4])
def test_flag_invariance_of_L(two_k):
    # L preserves P_{n+1,n} with n+1 = 2k (upper cap 2k, lower cap 2k-1)
    assert preserves_flag(F(two_k, 2), F(1, 3), two_k - 1)


def test_flag_invariance_fails_off_by_one():
    # the next flag up is not preserved: the up-shifted cap leaks
    assert not preserves_flag(F(1), F(1, 3), 2)


def test_l_action_reproduces_recurrence_coefficients():
    # acting on the scaled basis, L - lambda produces exactly the three-term
    # pattern: subdiagonal integers, diagonal constants, superdiagonal t
    k, j, mu = F(1), F(2), F(1, 4)
    m = l_matrix(k, j, mu)
    d = len(m)
    assert d == 5
    T = Poly.variable()
    for r in range(d):
        for c in range(d):
            entry = m[r][c]
            if abs(r - c) > 1:
                assert entry == Poly()
            elif c == r + 1:
                assert entry == T


def test_lambda_epsilon_energy_maps():
    lam, eps, en = parameter_maps(0, 0, 0, F(0))
    assert (lam, eps, en) == (F(1, 2), F(-1, 2), F(1, 2))
    # energy at k=1, t=1/4: E = 2(1 - 1/2 - 1/4) + 3/2 = 2
    lam, eps, en = parameter_maps(1, 0, 0, F(1, 4))
    assert en == 2
    # epsilon depends on (k, j) only through the fixed offset, minus t
    assert baseline_epsilon(F(2), F(1), F(1, 3)) == 2 - F(1, 2) - F(1, 2) - F(1, 3)
    assert energy_from_epsilon(F(1, 4), 1) == F(3)
    assert qes_lambda(F(1, 2), 0, F(1, 4)) == F(1 + 0, 2) + F(1, 4) + F(1, 2) * (1 + 1) / 1


def test_qes_lambda_closed_form():
    k, j, mu = F(3, 2), F(-2), F(1, 8)
    assert qes_lambda(k, j, mu) == (1 + j + 2 * mu + 2 * k * (1 + 4 * mu)) / 2


# ---------------------------------------------------------------------------
# the first-order system in xi and its transform
# ---------------------------------------------------------------------------

def test_ode13_decouples_at_kappa_zero():
    sys0 = ode_system_13(j=0, mu=F(1, 4), kappa=0, epsilon=F(9, 4))
    # with eps - mu = 2, phi1 = xi^2 solves the decoupled first row
    row1 = sys0.operator.e[0][0].apply(X ** 2)
    assert row1.is_zero
    assert sys0.operator.e[0][1].is_zero and sys0.operator.e[1][0].is_zero


def test_ode13_on_constant_spinor():
    sys1 = ode_system_13(j=1, mu=0, kappa=F(1, 2), epsilon=F(3, 4))
    out = sys1.operator.apply(PolynomialSpinor(Poly.const(1), Poly()))
    assert out.phi1 == Poly.const(-F(3, 4))      # -(eps - mu)
    assert out.phi2 == Poly.const(F(1, 2))       # kappa


def test_transform_matches_printed_second_row():
    sys1 = ode_system_13(j=1, mu=F(1, 8), kappa=F(2, 3), epsilon=F(-1, 2))
    rep = transform_13_to_16(sys1)
    assert rep.second_row_matches
    assert rep.first_row_is_row_difference
    # t*x term present in the printed first row's phi2 coefficient
    c = rep.printed.e[0][1].terms[0]
    assert c.coefficient(1) == F(2, 3) ** 2


def test_transform_rejects_zero_kappa():
    with pytest.raises(ValueError):
        transform_13_to_16(ode_system_13(0, 0, 0, 0))


def test_transform_against_direct_substitution():
    """The derived rows must agree with transporting polynomials through the
    substitution by hand: phi1 = f1 + f2, phi2 = -(1/kappa) f2, xi = t(1+x)."""
    rng = random.Random(5150)
    for _ in range(6):
        j = F(rng.randint(0, 3))
        mu = F(rng.randint(-2, 2), 4)
        kappa = F(rng.randint(1, 5), rng.randint(1, 3))
        eps = F(rng.randint(-6, 6), rng.randint(1, 4))
        system = ode_system_13(j, mu, kappa, eps)
        rep = transform_13_to_16(system)
        t = kappa ** 2
        f1 = Poly([F(rng.randint(-5, 5)) for _ in range(4)])
        f2 = Poly([F(rng.randint(-5, 5)) for _ in range(3)])
        # build phi's as polynomials in xi, via x = xi/t - 1
        back = Poly([-1, 1 / t])
        f1_of_xi = f1(back) if isinstance(f1(back), Poly) else Poly.const(f1(back))
        f2_of_xi = f2(back) if isinstance(f2(back), Poly) else Poly.const(f2(back))
        phi1 = f1_of_xi + f2_of_xi
        phi2 = f2_of_xi.scale(-1 / kappa)
        original = system.operator.apply(PolynomialSpinor(phi1, phi2))
        # derived row1 = direct transform of the first row
        lhs1 = substitute_xi(original.phi1, kappa)
        rhs1 = rep.derived.e[0][0].apply(f1) + rep.derived.e[0][1].apply(f2)
        assert lhs1 == rhs1
        # derived row2 = kappa times the transform of the second row
        lhs2 = substitute_xi(original.phi2, kappa).scale(kappa)
        rhs2 = rep.derived.e[1][0].apply(f1) + rep.derived.e[1][1].apply(f2)
        assert lhs2 == rhs2


def test_build_L_symbolic_vs_numeric():
    k, mu = F(1), F(1, 4)
    t0 = F(5, 7)
    sym = build_L(k, mu)            # coefficients are polynomials in t
    num = build_L(k, mu, t0)
    s = PolynomialSpinor(X ** 2 + 1, X.scale(3))
    out_sym = sym.apply(s)
    out_num = num.apply(s)
    # evaluating the symbolic output at t0 must give the numeric one
    for sym_c, num_c in ((out_sym.phi1, out_num.phi1), (out_sym.phi2, out_num.phi2)):
        evaluated = Poly([c(t0) if isinstance(c, Poly) else c for c in sym_c.coeffs])
        assert evaluated == num_c
