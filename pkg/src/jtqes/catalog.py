"""Named presets for the physical systems covered by the solver.

Each preset maps the raw parameters a system is usually quoted with onto the
solver's SectorParams, recording every substitution so runs stay auditable.
The common relabeling is the sector mirror j -> -j - 1; the dimer family
additionally identifies its level splitting G with 2 mu.

Constraints per case:

    displaced-oscillator   mu = 0,  raw j = 0
    linear-ExE             mu = 0,  raw j half-integer
    Gamma8                 mu = 0,  raw j integer     (two octahedral systems
                                                       share one determinant
                                                       family; a label tells
                                                       them apart)
    dimer                  mu != 0, raw j = 0         (G = 2 mu)
    ExE-external-field     mu != 0, raw j half-integer

Most mapped sectors are not realizable (j < 0 after the mirror); those points
are validated by the exact eigen-check only, never by the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .fock import SectorParams, as_fraction, sector_eigvals


@dataclass(frozen=True)
class PhysicalCase:
    name: str
    description: str
    requires_mu_zero: bool
    j_kind: str                  # "zero" | "half-integer" | "integer"
    uses_g: bool = False
    labels: tuple = ()


PRESETS = {
    "displaced-oscillator": PhysicalCase(
        "displaced-oscillator",
        "single displaced oscillator limit; the energy baseline is exact for every coupling",
        requires_mu_zero=True, j_kind="zero"),
    "linear-ExE": PhysicalCase(
        "linear-ExE",
        "linear two-mode Jahn-Teller system",
        requires_mu_zero=True, j_kind="half-integer"),
    "Gamma8": PhysicalCase(
        "Gamma8",
        "octahedral quartet systems; both members share the same determinants "
        "under equal coupling",
        requires_mu_zero=True, j_kind="integer",
        labels=("Gamma8xTau2", "Gamma8x(Eps+Tau2)")),
    "dimer": PhysicalCase(
        "dimer",
        "resonantly excited dimer; level splitting G enters as 2 mu",
        requires_mu_zero=False, j_kind="zero", uses_g=True),
    "ExE-external-field": PhysicalCase(
        "ExE-external-field",
        "linear two-mode system in an external field (mu != 0)",
        requires_mu_zero=False, j_kind="half-integer"),
}


@dataclass(frozen=True)
class AppliedMapping:
    """Audit trail: exactly which substitutions produced the SectorParams."""

    case: str
    raw_j: Fraction
    raw_mu: Fraction
    g: Fraction | None
    substitutions: tuple
    params: SectorParams
    label: str | None = None


def _check_j_kind(kind: str, j: Fraction) -> bool:
    if kind == "zero":
        return j == 0
    if kind == "half-integer":
        return j.denominator == 2
    if kind == "integer":
        return j.denominator == 1
    raise ValueError(kind)


class ConstraintViolation(ValueError):
    pass


def preset(name: str, *, j=None, mu=None, g=None, k=Fraction(0), label=None) -> AppliedMapping:
    """Resolve a named case into SectorParams, with a full substitution record."""
    if name not in PRESETS:
        raise ConstraintViolation(f"unknown case {name!r}; known: {sorted(PRESETS)}")
    case = PRESETS[name]
    subs = []
    raw_j = as_fraction(j if j is not None else 0)
    if case.uses_g:
        if g is None and mu is None:
            raise ConstraintViolation(f"{name} needs G (or mu) nonzero")
        if g is not None:
            mu = as_fraction(g) / 2
            subs.append(f"mu = G/2 = {mu}")
        g = as_fraction(g) if g is not None else 2 * as_fraction(mu)
    raw_mu = as_fraction(mu if mu is not None else 0)
    if case.requires_mu_zero and raw_mu != 0:
        raise ConstraintViolation(f"{name} requires mu = 0, got mu={raw_mu}")
    if not case.requires_mu_zero and raw_mu == 0:
        raise ConstraintViolation(f"{name} requires mu != 0")
    if not _check_j_kind(case.j_kind, raw_j):
        raise ConstraintViolation(f"{name} requires j of kind {case.j_kind!r}, got j={raw_j}")
    if label is not None and case.labels and label not in case.labels:
        raise ConstraintViolation(f"{name} labels are {case.labels}, got {label!r}")

    mapped_j = -raw_j - 1
    subs.append(f"sector mirror: j = -({raw_j}) - 1 = {mapped_j}")
    params = SectorParams(j=mapped_j, mu=raw_mu, k=as_fraction(k))
    if not params.realizable_sector:
        subs.append("mapped sector is not realizable; validation is exact-only")
    return AppliedMapping(name, raw_j, raw_mu, g if case.uses_g else None,
                          tuple(subs), params, label)


# ---------------------------------------------------------------------------
# Displaced-oscillator energy: two published forms, one arbitration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OscillatorEnergyReport:
    """Both candidate closed forms for the displaced-oscillator baseline.

    The quoted closed form and the one obtained by composing the baseline
    relations disagree; neither may be presented as correct without evidence.
    `confirmed` names the variant the oracle supports, if any: the composed
    form is the one that matches converged eigenvalues at every isolated
    exact point on realizable sectors, while the quoted form has no oracle
    confirmation anywhere we can test it.
    """

    k: Fraction
    kappa: float
    printed: float               # (2k + 3/2) - kappa^2
    derived: float               # 2k + 1/2 - 2 kappa^2  (baseline composition)
    confirmed: str | None
    oracle_scan: tuple           # ((sector j, mu, dist_printed, dist_derived), ...)


def displaced_oscillator_energy(k, kappa: float, scan_oracle: bool = False,
                                scan_truncation: int = 120) -> OscillatorEnergyReport:
    """Report both candidate energies at (k, kappa); optionally scan realizable
    analogue sectors for either value."""
    k = as_fraction(k)
    if k < 0:
        raise ValueError("k must be nonnegative")
    kaps = float(kappa) ** 2
    printed = float(2 * k + Fraction(3, 2)) - kaps
    derived = float(2 * k + Fraction(1, 2)) - 2 * kaps
    scan = []
    confirmed = None
    if scan_oracle:
        for sector_j, sector_mu in ((0, Fraction(0)), (0, Fraction(-1, 2))):
            p = SectorParams(j=sector_j, mu=sector_mu, kappa=float(kappa))
            ev = np.sort(sector_eigvals(p, scan_truncation))[:24]
            dp = float(np.min(np.abs(ev - printed)))
            dd = float(np.min(np.abs(ev - derived)))
            scan.append((sector_j, sector_mu, dp, dd))
        dps = [row[2] for row in scan]
        dds = [row[3] for row in scan]
        if min(dds) <= 1e-6 and min(dps) > 1e-6:
            confirmed = "derived"
        elif min(dps) <= 1e-6 and min(dds) > 1e-6:
            confirmed = "printed"
    return OscillatorEnergyReport(k, float(kappa), printed, derived, confirmed, tuple(scan))
