"""Bound states of the generalized Woods-Saxon potential family.

Two independent routes to the same physics:

* closed-form level energies and Jacobi-polynomial wavefunctions obtained
  by reducing the radial problem to a hypergeometric-type equation
  (:mod:`wsbound.nu`, :mod:`wsbound.spectrum`, :mod:`wsbound.wavefunction`);
* a finite-difference eigensolver on the radial grid, used as a
  cross-check oracle (:mod:`wsbound.fdsolver`).

:mod:`wsbound.report` lines both up in a deterministic comparison table
and :mod:`wsbound.cli` exposes everything on the command line.
"""

from .errors import (
    ConstructionError,
    ConvergenceError,
    DegenerateWavefunctionError,
    DomainError,
    NoBoundBranchError,
    NoRealLevelError,
    NoRootError,
    NoSuchLevelError,
    NonSquareRadicandError,
    OverflowDomainError,
    PoleError,
    SpecialCaseError,
    WsboundError,
)
from .fdsolver import (
    BoundState,
    RadialGrid,
    TridiagonalHamiltonian,
    build_hamiltonian,
    count_states_below,
    default_grid,
    refine_to_tolerance,
    solve_bound_state,
)
from .kernels import BACKEND
from .potential import (
    CentrifugalMode,
    PhysicalSystem,
    PotentialFamily,
    PotentialParams,
    QuantumNumbers,
    centrifugal_term,
    effective_potential,
    make_params,
    potential_value,
    r_of_s,
    s_of_r,
)
from .report import (
    CSV_HEADER,
    ComparisonRow,
    build_row,
    fmt17,
    parse_json,
    serialize_csv,
    serialize_json,
    sort_rows,
)
from .spectrum import (
    CoeffSet,
    DimensionlessSet,
    Reading,
    SpecialCase,
    coeff_set,
    delta0_term,
    dimensionless_set,
    energy_large_c,
    energy_small_c,
    energy_special,
    regime_label,
)
from .wavefunction import (
    RadialSamples,
    WavefunctionSpec,
    count_nodes,
    jacobi_eval,
    normalization_constant,
    radial_wavefunction,
    rodrigues_chi,
    wavefunction_spec,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundState",
    "CSV_HEADER",
    "CentrifugalMode",
    "CoeffSet",
    "ComparisonRow",
    "ConstructionError",
    "ConvergenceError",
    "DegenerateWavefunctionError",
    "DimensionlessSet",
    "DomainError",
    "NoBoundBranchError",
    "NoRealLevelError",
    "NoRootError",
    "NoSuchLevelError",
    "NonSquareRadicandError",
    "OverflowDomainError",
    "PhysicalSystem",
    "PoleError",
    "PotentialFamily",
    "PotentialParams",
    "QuantumNumbers",
    "RadialGrid",
    "RadialSamples",
    "Reading",
    "SpecialCase",
    "SpecialCaseError",
    "TridiagonalHamiltonian",
    "WavefunctionSpec",
    "WsboundError",
    "__version__",
    "build_hamiltonian",
    "build_row",
    "centrifugal_term",
    "coeff_set",
    "count_nodes",
    "count_states_below",
    "default_grid",
    "delta0_term",
    "dimensionless_set",
    "effective_potential",
    "energy_large_c",
    "energy_small_c",
    "energy_special",
    "fmt17",
    "jacobi_eval",
    "make_params",
    "normalization_constant",
    "parse_json",
    "potential_value",
    "r_of_s",
    "radial_wavefunction",
    "refine_to_tolerance",
    "regime_label",
    "rodrigues_chi",
    "s_of_r",
    "serialize_csv",
    "serialize_json",
    "solve_bound_state",
    "sort_rows",
    "wavefunction_spec",
]
