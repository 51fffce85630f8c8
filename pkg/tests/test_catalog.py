from fractions import Fraction as F

import pytest

from jtqes.catalog import (
    PRESETS,
    ConstraintViolation,
    displaced_oscillator_energy,
    preset,
)
from jtqes.juddian import exact_eigencheck, juddian_points


def test_displaced_oscillator_mapping():
    m = preset("displaced-oscillator", j=0, mu=0, k=1)
    assert m.params.j == -1
    assert not m.params.realizable_sector
    assert any("j = -(0) - 1" in s for s in m.substitutions)


def test_dimer_g_identification():
    m = preset("dimer", j=0, g=F(3, 5), k=1)
    assert m.params.mu == F(3, 10)
    assert m.g == F(3, 5)
    assert any("G/2" in s for s in m.substitutions)


def test_linear_exe_half_integer():
    m = preset("linear-ExE", j=F(1, 2), mu=0, k=F(1, 2))
    assert m.params.j == F(-3, 2)
    assert m.raw_j == F(1, 2)


def test_gamma8_labels():
    m = preset("Gamma8", j=1, mu=0, k=1, label="Gamma8xTau2")
    assert m.label == "Gamma8xTau2"
    with pytest.raises(ConstraintViolation):
        preset("Gamma8", j=1, mu=0, label="nope")


def test_constraints_enforced():
    with pytest.raises(ConstraintViolation):
        preset("dimer", j=0, mu=0)             # dimer needs mu != 0
    with pytest.raises(ConstraintViolation):
        preset("displaced-oscillator", j=1, mu=0)
    with pytest.raises(ConstraintViolation):
        preset("linear-ExE", j=1, mu=0)        # j must be half-integer
    with pytest.raises(ConstraintViolation):
        preset("ExE-external-field", j=F(1, 2), mu=0)
    with pytest.raises(ConstraintViolation):
        preset("unknown-case", j=0, mu=0)


def test_preset_is_deterministic():
    a = preset("dimer", j=0, g=F(1, 2), k=F(1, 2))
    b = preset("dimer", j=0, g=F(1, 2), k=F(1, 2))
    assert a == b


def test_preset_output_feeds_solver_cleanly():
    # points from mapped parameters must still pass the exact eigen-check
    m = preset("ExE-external-field", j=F(1, 2), mu=F(1, 4), k=F(1, 2))
    pts = juddian_points(m.params.k, m.params.j, m.params.mu, kappa_max=4, validate=False)
    for p in pts:
        assert p.validation.exact_eigencheck
        assert exact_eigencheck(p.coefficients, m.params.k, m.params.j, m.params.mu)


def test_oscillator_energy_closed_forms():
    r = displaced_oscillator_energy(0, 0.0)
    assert r.printed == pytest.approx(1.5)
    r = displaced_oscillator_energy(1, 1.0)
    assert r.printed == pytest.approx(2.5)
    assert r.derived == pytest.approx(0.5)


def test_oscillator_energy_reports_both_and_scans():
    r = displaced_oscillator_energy(F(1, 2), 0.6, scan_oracle=True, scan_truncation=80)
    assert r.printed != r.derived
    assert len(r.oracle_scan) == 2
    # neither closed form is confirmed on the realizable analogue sectors
    assert r.confirmed is None


def test_all_cases_listed():
    assert set(PRESETS) == {"displaced-oscillator", "linear-ExE", "Gamma8",
                            "dimer", "ExE-external-field"}
