"""jtqes: isolated exact (Juddian) spectra of the generalized two-mode
E(x)eps Jahn-Teller Hamiltonian.

Exact-arithmetic location and verification of isolated exact solutions
(recurrence determinants, quotient-ring eigen-checks) plus a brute-force
truncated-Fock-space oracle that independently validates every point.
"""

from .catalog import PRESETS, displaced_oscillator_energy, preset
from .fock import (
    SectorParams,
    SectorBasis,
    SpectrumReport,
    build_sector_hamiltonian,
    check_J_commutes,
    contains_energy,
    converged_spectrum,
    residual_norm,
)
from .generators import (
    GeneratorSet,
    algebra_relations_report,
    build_L,
    generator_set,
    ode_system_13,
    parameter_maps,
    qes_lambda,
    transform_13_to_16,
)
from .jacobi import SymmetricMatrix, symmetric_eigen
from .juddian import (
    CoefficientVector,
    JuddianPoint,
    bridge_identity_holds,
    exact_eigencheck,
    juddian_points,
    operator_recurrence_matrix,
    reconstruct_fock_state,
)
from .polynomials import Poly, RootEnclosure, isolate_real_roots, refine_enclosure
from .quotient import NonInvertibleError, QuotientElement
from .recurrence import (
    RecurrenceSystem,
    build_recurrence_matrix,
    compare_with_printed,
    determinant_polynomial,
    printed_polynomial,
)
from .spinors import PolynomialSpinor, SpinorOperator, anticommutator, apply_operator, commutator

__version__ = "0.1.0"

__all__ = [
    "PRESETS", "preset", "displaced_oscillator_energy",
    "SectorParams", "SectorBasis", "SpectrumReport", "build_sector_hamiltonian",
    "check_J_commutes", "contains_energy", "converged_spectrum", "residual_norm",
    "GeneratorSet", "generator_set", "algebra_relations_report", "build_L",
    "ode_system_13", "parameter_maps", "qes_lambda", "transform_13_to_16",
    "SymmetricMatrix", "symmetric_eigen",
    "CoefficientVector", "JuddianPoint", "bridge_identity_holds",
    "exact_eigencheck", "juddian_points", "operator_recurrence_matrix",
    "reconstruct_fock_state",
    "Poly", "RootEnclosure", "isolate_real_roots", "refine_enclosure",
    "NonInvertibleError", "QuotientElement",
    "RecurrenceSystem", "build_recurrence_matrix", "compare_with_printed",
    "determinant_polynomial", "printed_polynomial",
    "PolynomialSpinor", "SpinorOperator", "anticommutator", "apply_operator",
    "commutator",
]
