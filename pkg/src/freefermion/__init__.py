"""Free-fermion solvability of Pauli spin Hamiltonians via line-graph recognition."""

from .errors import (
    InputError,
    ObstructionError,
    OracleSizeError,
    ResourceCapError,
)
from .frustration import (
    FrustrationGraph,
    TwinReduction,
    build_frustration_graph,
    connected_components,
    reduce_twins,
    twin_classes,
)
from .linegraph import (
    BEINEKE_GRAPHS,
    KrauszDecomposition,
    NotLineGraphError,
    ObstructionWitness,
    RootGraph,
    forbidden_witness,
    is_line_graph,
    line_graph_of,
    recognize,
    resolve_whitney_ambiguity,
    verify_krausz,
)
from .oracle import (
    compare_multisets,
    dense_matrix,
    full_spectrum,
    sector_project,
)
from .pauli import (
    HamiltonianSpec,
    PauliWord,
    SignedPauli,
    multiply,
    parse_pauli,
    pauli_product,
    symplectic_inner,
    validate_hamiltonian,
)
from .solver import (
    FreeFermionSpectrum,
    ModelAnalysis,
    SectorSolution,
    SolveOptions,
    SpectrumReport,
    analyze,
    block_diagonalize,
    build_h,
    orient,
    recognize_components,
    sector_spectrum,
    single_particle_lambdas,
    solve_full,
    solve_sector,
)
from .symmetry import (
    find_t_join,
    fundamental_cycles,
    rank_audit,
    spanning_tree,
)
from .verify import VerifyResult, verify_against_oracle

__version__ = "0.1.0"

__all__ = [
    "BEINEKE_GRAPHS",
    "FrustrationGraph",
    "FreeFermionSpectrum",
    "HamiltonianSpec",
    "InputError",
    "KrauszDecomposition",
    "ModelAnalysis",
    "NotLineGraphError",
    "ObstructionError",
    "ObstructionWitness",
    "OracleSizeError",
    "PauliWord",
    "ResourceCapError",
    "RootGraph",
    "SectorSolution",
    "SignedPauli",
    "SolveOptions",
    "SpectrumReport",
    "TwinReduction",
    "VerifyResult",
    "analyze",
    "block_diagonalize",
    "build_frustration_graph",
    "build_h",
    "compare_multisets",
    "connected_components",
    "dense_matrix",
    "find_t_join",
    "forbidden_witness",
    "full_spectrum",
    "fundamental_cycles",
    "is_line_graph",
    "line_graph_of",
    "multiply",
    "orient",
    "parse_pauli",
    "pauli_product",
    "rank_audit",
    "recognize",
    "recognize_components",
    "reduce_twins",
    "resolve_whitney_ambiguity",
    "sector_project",
    "sector_spectrum",
    "single_particle_lambdas",
    "solve_full",
    "solve_sector",
    "spanning_tree",
    "symplectic_inner",
    "twin_classes",
    "validate_hamiltonian",
    "verify_against_oracle",
    "verify_krausz",
]
