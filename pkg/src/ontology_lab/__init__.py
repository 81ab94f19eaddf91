"""Numerical laboratory for deterministic systems beneath quantum mechanics.

The package builds finite deterministic automata (periodic clocks,
dissipative state machines, expanding sheet flows), lifts them to Hilbert
space, and checks the resulting operator identities, spectra, and continuum
limits against closed-form predictions.

Modules
-------
linalg      shared Hermitian eigensolver, unitarity checks, DFT matrix
clock       periodic N-state automaton and its energy eigenbasis
oscillator  the clock embedded in a spin multiplet; harmonic continuum limit
infoloss    non-invertible automata, merge classes, limit-cycle census
fermion     sheet variables, helicity spinors, position-space waves
flow        Hermitian lift of an arbitrary circle flow; packet transport
blackhole   horizon thermodynamics as discrete state counting
cli         the ontology-lab experiment runner
"""

__version__ = "0.1.0"

from .linalg import (
    DimMismatchError,
    NotHermitianError,
    NoConvergenceError,
    Spectrum,
    commutator,
    dft_matrix,
    hermitian_eigensystem,
    is_hermitian,
    is_unitary,
)
from .clock import (
    ClockModel,
    closed_form_energies,
    energy_spectrum,
    evolution_matrix,
    ontological_to_energy,
    step_state,
)
from .oscillator import (
    ContinuumScan,
    SpinRep,
    build_spin_rep,
    casimir_residual,
    commutator_identity_residual,
    continuum_scan,
    hamiltonian,
    hamiltonian_identity_residual,
    oscillator_hamiltonian,
    oscillator_levels,
    predicted_deviation,
    richardson_limit,
    su2_residual,
)
from .infoloss import (
    CensusReport,
    FunctionalGraph,
    Quotient,
    equivalence_classes,
    evolution_matrix as infoloss_evolution_matrix,
    limit_cycle_census,
    quotient_evolution,
    random_functional_graph,
    read_graph,
    shift_with_merge,
    write_graph,
)
from .fermion import (
    BeableCommutatorReport,
    DriftReport,
    GridTooSmallError,
    QuadratureUnderResolvedError,
    SheetGrid,
    SheetState,
    beable_commutator_residuals,
    beable_to_position_wave,
    direction_vector,
    distance_growth_check,
    evolve_sheet,
    helicity_spinor,
    load_grid,
    ray_grid,
    save_grid,
    single_ray_grid,
    sphere_product_grid,
    transform_with_refinement,
    weyl_consistency_check,
)
from .flow import (
    FlowSystem,
    PacketUnresolvedError,
    TransportReport,
    build_flow_generator,
    characteristic_oracle,
    momentum_operator,
    transport_check,
    wrapped_gaussian,
)
from .blackhole import (
    DensityRatio,
    HorizonCount,
    absorption_cross_section,
    hawking_temperature,
    hawking_temperature_kelvin,
    horizon_bits,
    log_density_ratio,
    table_rows,
)
from .cli import ConfigError, UpstreamError, Report, list_experiments, run_experiment

__all__ = [
    "__version__",
    # linalg
    "DimMismatchError", "NotHermitianError", "NoConvergenceError",
    "Spectrum", "commutator", "dft_matrix", "hermitian_eigensystem",
    "is_hermitian", "is_unitary",
    # clock
    "ClockModel", "closed_form_energies", "energy_spectrum",
    "evolution_matrix", "ontological_to_energy", "step_state",
    # oscillator
    "ContinuumScan", "SpinRep", "build_spin_rep", "casimir_residual",
    "commutator_identity_residual", "continuum_scan", "hamiltonian",
    "hamiltonian_identity_residual", "oscillator_hamiltonian",
    "oscillator_levels", "predicted_deviation", "richardson_limit",
    "su2_residual",
    # infoloss
    "CensusReport", "FunctionalGraph", "Quotient", "equivalence_classes",
    "infoloss_evolution_matrix", "limit_cycle_census", "quotient_evolution",
    "random_functional_graph", "read_graph", "shift_with_merge", "write_graph",
    # fermion
    "BeableCommutatorReport", "DriftReport", "GridTooSmallError",
    "QuadratureUnderResolvedError", "SheetGrid", "SheetState",
    "beable_commutator_residuals", "beable_to_position_wave",
    "direction_vector", "distance_growth_check", "evolve_sheet",
    "helicity_spinor", "load_grid", "ray_grid", "save_grid",
    "single_ray_grid", "sphere_product_grid", "transform_with_refinement",
    "weyl_consistency_check",
    # flow
    "FlowSystem", "PacketUnresolvedError", "TransportReport",
    "build_flow_generator", "characteristic_oracle", "momentum_operator",
    "transport_check", "wrapped_gaussian",
    # blackhole
    "DensityRatio", "HorizonCount", "absorption_cross_section",
    "hawking_temperature", "hawking_temperature_kelvin", "horizon_bits",
    "log_density_ratio", "table_rows",
    # cli
    "ConfigError", "UpstreamError", "Report", "list_experiments",
    "run_experiment",
]
