"""End-to-end solver tests.

Frozen expected roots below were computed by hand from the closed-form
determinants and verified against brute-force diagonalization before being
pinned (the acceptance suite re-runs the full oracle sweep).
"""

import random
from dataclasses import replace
from fractions import Fraction as F

import numpy as np
import pytest

from jtqes.fock import SectorParams
from jtqes.generators import build_L, qes_lambda
from jtqes.juddian import (
    CoefficientVector,
    DegenerateDeterminantError,
    bridge_identity_holds,
    exact_eigencheck,
    juddian_determinant,
    juddian_points,
    operator_recurrence_matrix,
    reconstruct_fock_state,
    solve_null_vector,
    spinor_from_coefficients,
)
from jtqes.polynomials import Poly, isolate_real_roots
from jtqes.quotient import QuotientElement
from jtqes.recurrence import determinant_polynomial

T = Poly.variable()


# -- the mu sign dictionary --------------------------------------------------

def test_operator_matrix_is_mu_mirror_of_tabulated():
    from jtqes.recurrence import build_recurrence_matrix

    a = operator_recurrence_matrix(F(1), F(2), F(1, 4))
    b = build_recurrence_matrix(F(1), F(2), F(-1, 4))
    assert a.matrix == b.matrix
    # at mu = 0 the two conventions coincide
    c = operator_recurrence_matrix(F(1), F(2), 0)
    d = build_recurrence_matrix(F(1), F(2), 0)
    assert c.matrix == d.matrix


def test_bridge_identity_random_draws():
    rng = random.Random(8080)
    for two_k in range(5):
        for _ in range(3):
            j = F(rng.randint(-8, 8), rng.choice([1, 2, 4]))
            mu = F(rng.randint(-8, 8), rng.choice([1, 2, 4]))
            assert bridge_identity_holds(F(two_k, 2), j, mu)


# -- frozen determinants and roots -------------------------------------------

def test_frozen_determinant_k1_j2():
    det = juddian_determinant(1, 2, 0)
    assert det == Poly([-F(45, 32), F(29, 2), -12])
    roots = isolate_real_roots(det, 0, 100)
    assert len(roots) == 2


@pytest.mark.parametrize("k,j,mu,t_expected,e_expected", [
    (F(1, 2), 1, F(0), F(3, 16), F(9, 8)),
    (F(1, 2), 1, F(1, 4), F(21, 160), F(99, 80)),
    (F(1, 2), 2, F(0), F(2, 3), F(1, 6)),
    (F(1), 1, F(0), F(1, 2), F(3, 2)),
])
def test_rational_root_cells(k, j, mu, t_expected, e_expected):
    pts = juddian_points(k, j, mu, kappa_max=4, validate=False)
    assert len(pts) == 1
    (p,) = pts
    assert t_expected in p.kappa_sq
    assert p.kappa_sq.is_point and p.kappa_sq.lower == t_expected
    assert p.energy == pytest.approx(float(e_expected), abs=1e-12)
    assert p.validation.exact_eigencheck


def test_energy_formula_is_baseline():
    pts = juddian_points(F(1), 1, 0, kappa_max=4, validate=False)
    (p,) = pts
    # E = 2k + 1/2 - 2t, independent of j and mu
    assert p.energy == pytest.approx(float(2 * F(1) + F(1, 2) - 2 * F(1, 2)))


def test_algebraic_roots_quadratic_field():
    pts = juddian_points(F(1), 2, 0, kappa_max=4, validate=False)
    assert len(pts) == 2
    assert all(p.modulus.degree == 2 for p in pts)
    assert all(p.validation.exact_eigencheck for p in pts)
    # det = -12 t^2 + 29/2 t - 45/32: roots (29 -+ sqrt(571))/48, E = 5/2 - 2t
    s = 571 ** 0.5
    es = sorted(p.energy for p in pts)
    assert es[0] == pytest.approx(2.5 - (29 + s) / 24, abs=1e-10)
    assert es[1] == pytest.approx(2.5 - (29 - s) / 24, abs=1e-10)


def test_oracle_validation_fills_report():
    pts = juddian_points(F(1, 2), 1, F(1, 4), kappa_max=4)
    (p,) = pts
    assert p.validation.realizable
    assert p.validation.oracle_distance <= 1e-6
    assert p.validation.reconstruction_residual <= 1e-8
    assert p.validation.oracle_truncation >= 32


def test_unrealizable_sector_skips_oracle():
    pts = juddian_points(F(1), F(-2), 0, kappa_max=4)
    for p in pts:
        assert not p.validation.realizable
        assert p.validation.oracle_distance is None
        assert p.validation.exact_eigencheck


def test_no_points_when_determinant_constant():
    # order-1 block with nonzero constant determinant
    assert juddian_points(0, 0, 0, kappa_max=10) == []


def test_no_points_when_only_root_is_zero():
    assert juddian_points(F(1, 2), 0, 0, kappa_max=10) == []


def test_degenerate_determinant_raises():
    with pytest.raises(DegenerateDeterminantError):
        juddian_points(0, -1, 0)


def test_root_count_bounded_by_degree():
    rng = random.Random(99)
    for _ in range(6):
        two_k = rng.randint(1, 3)
        j = F(rng.randint(-4, 4), 2)
        mu = F(rng.randint(-2, 2), 4)
        det = juddian_determinant(F(two_k, 2), j, mu)
        if det.is_zero:
            continue
        pts = juddian_points(F(two_k, 2), j, mu, kappa_max=10, validate=False)
        assert sum(p.multiplicity for p in pts) <= det.degree <= two_k


# -- null vectors and the exact eigen-check ----------------------------------

def test_null_vector_satisfies_both_recurrences():
    k, j, mu = F(1), F(2), F(0)
    rs = operator_recurrence_matrix(k, j, mu)
    det = determinant_polynomial(rs)
    pts = juddian_points(k, j, mu, kappa_max=4, validate=False)
    for p in pts:
        cv = p.coefficients
        tbar = QuotientElement.generator(cv.modulus)
        u = []
        for w, v in zip(cv.omega, list(cv.v) + [None]):
            u.append(w)
            if v is not None:
                u.append(v)
        zero = QuotientElement(Poly(), cv.modulus)
        for r in range(rs.order):
            acc = zero
            for c in range(max(0, r - 1), min(rs.order, r + 2)):
                entry = rs.matrix[r][c]
                if not entry.is_zero:
                    acc = acc + QuotientElement(entry, cv.modulus) * u[c]
            assert not acc, f"row {r} does not vanish"
        assert det % cv.modulus == Poly()   # modulus really divides the determinant


def test_eigencheck_soundness_probe():
    k, j, mu = F(1, 2), F(1), F(0)
    pts = juddian_points(k, j, mu, kappa_max=4, validate=False)
    (p,) = pts
    cv = p.coefficients
    assert exact_eigencheck(cv, k, j, mu)
    # perturbing one coefficient by 1 must break the identity
    bad_omega = (cv.omega[0] + 1,) + cv.omega[1:]
    assert not exact_eigencheck(CoefficientVector(bad_omega, cv.v, cv.modulus), k, j, mu)


def test_eigencheck_is_operator_level():
    # apply L directly and compare against lambda * spinor
    k, j, mu = F(1, 2), F(1), F(1, 4)
    (p,) = juddian_points(k, j, mu, kappa_max=4, validate=False)
    cv = p.coefficients
    tbar = QuotientElement.generator(cv.modulus)
    l_op = build_L(k, mu, tbar)
    s = spinor_from_coefficients(cv)
    out = l_op.apply(s)
    lam = qes_lambda(k, j, mu)
    assert out.phi1 == s.phi1.scale(lam)
    assert out.phi2 == s.phi2.scale(lam)


# -- reconstruction -----------------------------------------------------------

def test_reconstruction_residual_tiny():
    (p,) = juddian_points(F(1), 1, 0, kappa_max=4, validate=False)
    params = SectorParams(j=1, mu=0, kappa=p.kappa_mid)
    psi = reconstruct_fock_state(p, params, 48)
    assert psi.shape == (98,)
    assert np.linalg.norm(psi) == pytest.approx(1.0)
    from jtqes.fock import residual_norm

    assert residual_norm(psi, params, 48, p.energy) <= 1e-10


def test_reconstruction_requires_realizable():
    (p,) = juddian_points(F(1, 2), 1, 0, kappa_max=4, validate=False)
    with pytest.raises(ValueError):
        reconstruct_fock_state(p, SectorParams(j=F(1, 2), mu=0), 40)


def test_amplitude_map_single_down_component():
    from jtqes.juddian import _amplitudes

    params = SectorParams(j=2, mu=0, kappa=0.5)
    psi = _amplitudes(params, [F(0), F(0)], [F(3), F(0)], F(1, 4), 2)
    # only the first lower-chain coefficient feeds down(0)
    assert psi[1] != 0
    assert np.count_nonzero(psi) == 1


def test_reconstructed_state_matches_oracle_eigenvector():
    (p,) = juddian_points(F(1), 1, 0, kappa_max=4, validate=False)
    params = SectorParams(j=1, mu=0, kappa=p.kappa_mid)
    psi = reconstruct_fock_state(p, params, 48)
    from jtqes.fock import build_sector_hamiltonian

    h = np.array(build_sector_hamiltonian(params, 48))
    w, v = np.linalg.eigh(h)
    idx = int(np.argmin(np.abs(w - p.energy)))
    overlap = abs(float(v[:, idx] @ psi))
    assert overlap == pytest.approx(1.0, abs=1e-9)
