"""Sector-by-sector free-fermion solve of a recognized model.

Pipeline: build the frustration graph, reduce twins per component,
recognize each reduced component's root graph, collect cycle and parity
symmetries, then for every symmetry sector orient the root edges, fill
the antisymmetric single-particle matrix, block-diagonalize it, and
enumerate occupation energies with exact multiplicity accounting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import schur

from .errors import ObstructionError, ResourceCapError
from .frustration import (
    FrustrationGraph,
    TwinReduction,
    build_frustration_graph,
    connected_components,
    fold_coefficients,
    reduce_twins_structural,
)
from .gf2 import Gf2Basis
from .linegraph import NotLineGraphError, ObstructionWitness, RootGraph, recognize
from .pauli import HamiltonianSpec, PauliWord, pauli_product
from .sectors import GeneratorLedger, SectorPlan
from .symmetry import (
    ComponentSymmetry,
    SymmetryReport,
    find_t_join,
    fundamental_cycles,
    ParityInfo,
    rank_audit,
    spanning_tree,
)

ZERO_MODE_RTOL = 1e-12
ENERGY_GROUP_TOL = 1e-10


# ---------------------------------------------------------------------------
# exact Majorana monomial arithmetic


@dataclass(frozen=True)
class MajoranaMonomial:
    """i**phase_power times an ascending product of distinct Majorana modes."""

    phase_power: int
    modes: tuple[int, ...]

    @staticmethod
    def identity() -> "MajoranaMonomial":
        return MajoranaMonomial(0, ())

    @staticmethod
    def hop(a: int, b: int) -> "MajoranaMonomial":
        """The Hermitian hopping term i*gamma_a*gamma_b, order-sensitive."""
        if a == b:
            raise ValueError("hopping term needs two distinct modes")
        if a < b:
            return MajoranaMonomial(1, (a, b))
        return MajoranaMonomial(3, (b, a))

    def __mul__(self, other: "MajoranaMonomial") -> "MajoranaMonomial":
        sign, modes = _normalize_modes(self.modes + other.modes)
        phase = (self.phase_power + other.phase_power + (2 if sign < 0 else 0)) % 4
        return MajoranaMonomial(phase, modes)


def _normalize_modes(seq: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sort a Majorana mode string, tracking anticommutation signs; cancel squares."""
    items = list(seq)
    swaps = 0
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            swaps += 1
            j -= 1
    out: list[int] = []
    for m in items:
        if out and out[-1] == m:
            out.pop()
        else:
            out.append(m)
    return (-1 if swaps % 2 else 1), tuple(out)


# ---------------------------------------------------------------------------
# structural analysis


@dataclass(frozen=True)
class ComponentAnalysis:
    """One connected twin-reduced component, ready for per-sector solves."""

    index: int
    parent_reduction: int
    graph: FrustrationGraph  # reduced, connected
    root: RootGraph
    sym: ComponentSymmetry

    @property
    def term_ids(self) -> tuple[int, ...]:
        return self.graph.term_ids

    @property
    def num_modes(self) -> int:
        return self.root.num_modes


@dataclass
class ModelAnalysis:
    """Sector-independent structure of a model."""

    spec: HamiltonianSpec
    graph: FrustrationGraph
    reductions: list[TwinReduction]
    components: list[ComponentAnalysis]
    ledger: GeneratorLedger
    plan: SectorPlan
    n_logical: int = 0
    center_size: int = 0
    fermionic_qubits: int = 0

    @property
    def num_free_bits(self) -> int:
        return self.plan.num_bits

    def symmetry_report(self) -> SymmetryReport:
        twins = tuple(g for g in self.ledger.entries if g.kind == "twin" and g.is_free)
        cycles = tuple(g for g in self.ledger.entries if g.kind == "cycle" and g.is_free)
        parities = tuple(
            (c.index, c.sym.parity.product, not c.sym.parity.in_span)
            for c in self.components
            if c.sym.parity is not None
        )
        return SymmetryReport(
            n=self.spec.n,
            num_terms=self.spec.num_terms,
            fermionic_qubits=self.fermionic_qubits,
            center_size=self.center_size,
            n_logical=self.n_logical,
            cycle_rank=sum(c.sym.cycle_rank for c in self.components),
            twin_generators=twins,
            cycle_generators=cycles,
            parity_words=parities,
            free_labels=self.plan.labels(),
        )


def _component_words(graph: FrustrationGraph) -> list[PauliWord]:
    return [graph.word(i) for i in range(graph.num_vertices)]


def recognize_components(spec: HamiltonianSpec, k3_root: str = "claw"):
    """Roots of the raw per-component frustration graphs, without twin reduction.

    This certifies term-for-term (injective) solvability; models that need
    twin reduction are rejected here with a witness even though the full
    solve handles them.  Witness vertices are reported as term indices.
    """
    graph = build_frustration_graph(spec)
    out = []
    for comp in connected_components(graph):
        try:
            root = recognize(comp.adj, k3_root)
        except NotLineGraphError as err:
            raise NotLineGraphError(_map_witness(err.witness, comp)) from None
        out.append((comp, root))
    return out


def _map_witness(w: ObstructionWitness, comp: FrustrationGraph) -> ObstructionWitness:
    return ObstructionWitness(
        tuple(sorted(comp.term_ids[v] for v in w.vertices)),
        w.beineke_index,
        tuple(comp.term_ids[v] for v in w.mapping),
    )


def analyze(spec: HamiltonianSpec, k3_root: str = "claw") -> ModelAnalysis:
    """Run the structural pipeline; raises with a witness on obstruction."""
    graph = build_frustration_graph(spec)
    ledger = GeneratorLedger(spec.n)
    reductions: list[TwinReduction] = []
    reduced_pieces: list[tuple[int, FrustrationGraph]] = []
    for comp in connected_components(graph):
        reduction = reduce_twins_structural(comp, ledger, component=len(reductions))
        reductions.append(reduction)
        # twin removal preserves connectivity in every case seen, but a
        # split reduced graph is handled by solving each piece separately
        for piece in connected_components(reduction.graph):
            reduced_pieces.append((len(reductions) - 1, piece))

    components: list[ComponentAnalysis] = []
    for parent, piece in reduced_pieces:
        index = len(components)
        try:
            root = recognize(piece.adj, k3_root)
        except NotLineGraphError as err:
            raise NotLineGraphError(_map_witness(err.witness, piece)) from None
        tree = spanning_tree(root)
        words = _component_words(piece)
        cycles = fundamental_cycles(root, tree, words, ledger, index)
        sym = ComponentSymmetry(index, root, tree, cycles, parity=None)
        components.append(ComponentAnalysis(index, parent, piece, root, sym))

    # parity pass: runs after every cycle is registered so dependence checks
    # see the full stabilizer span
    parity_basis = Gf2Basis()
    for gen in ledger.free:
        parity_basis.add(gen.word.symplectic_vector())
    independent_parities = 0
    for i, comp in enumerate(components):
        t_join = find_t_join(comp.root, comp.sym.tree)
        if t_join is None:
            continue
        words = _component_words(comp.graph)
        product = pauli_product([words[t] for t in t_join], n=spec.n)
        in_span, combo, base_sign = (
            (True, 0, 1) if product.word.is_identity else ledger.locate(product.word)
        )
        if not in_span:
            idx, _ = parity_basis.add(product.word.symplectic_vector())
            if idx is None:
                raise NotImplementedError(
                    "parity operators of distinct components are GF(2)-coupled; "
                    "this configuration is not supported"
                )
            independent_parities += 1
        parity = ParityInfo(t_join, product, in_span, combo, base_sign)
        sym = ComponentSymmetry(
            comp.sym.component, comp.root, comp.sym.tree, comp.sym.cycles, parity
        )
        components[i] = ComponentAnalysis(
            comp.index, comp.parent_reduction, comp.graph, comp.root, sym
        )

    analysis = ModelAnalysis(
        spec, graph, reductions, components, ledger, SectorPlan(tuple(ledger.free))
    )
    analysis.fermionic_qubits = sum(
        (c.num_modes - (1 if c.num_modes % 2 else 2)) // 2 for c in components
    )
    analysis.center_size = ledger.num_free + independent_parities
    analysis.n_logical = spec.n - analysis.fermionic_qubits - analysis.center_size
    if analysis.n_logical < 0:
        raise AssertionError("negative logical qubit count: accounting broken")
    return analysis


def run_rank_audit(analysis: ModelAnalysis) -> bool:
    """Adjacency GF(2)-rank check on every reduced component."""
    return all(rank_audit(c.graph.adj, c.root) for c in analysis.components)


# ---------------------------------------------------------------------------
# orientation and single-particle matrix


def orient(
    comp: ComponentAnalysis,
    cycle_values: dict[int, int],
    tree_flips: frozenset[int] = frozenset(),
) -> list[tuple[int, int]]:
    """Directions for every root edge such that each fundamental-cycle
    hopping product reproduces the sector eigenvalue of its cycle operator.

    Tree edges run low mode to high mode unless flipped (a gauge choice);
    each non-tree edge is then solved independently by exact sign
    arithmetic.
    """
    directions: dict[int, tuple[int, int]] = {}
    for t in comp.sym.tree.tree_terms:
        a, b = comp.root.edges[t]
        directions[t] = (b, a) if t in tree_flips else (a, b)
    for cycle in comp.sym.cycles:
        a, b = comp.root.edges[cycle.term]
        directions[cycle.term] = (a, b)
        mono = MajoranaMonomial.identity()
        for z in cycle.member_terms:
            mono = mono * MajoranaMonomial.hop(*directions[z])
        assert mono.modes == (), "cycle product must be scalar"
        want = cycle_values.get(cycle.term, 1)
        d = (-cycle.product.phase_power) % 4
        phase = (d + mono.phase_power) % 4
        assert phase % 2 == 0, "cycle constraint has an imaginary residue"
        value = 1 if phase == 0 else -1
        if value != want:
            directions[cycle.term] = (b, a)
    return [directions[t] for t in range(comp.root.num_edges)]


def build_h(
    comp: ComponentAnalysis,
    directions: list[tuple[int, int]],
    coeffs: list[float],
) -> np.ndarray:
    """Antisymmetric single-particle matrix: term c on edge (a, b) puts c/2
    at (a, b) and -c/2 at (b, a)."""
    v = comp.num_modes
    h = np.zeros((v, v))
    for t, (a, b) in enumerate(directions):
        assert h[a, b] == 0.0, "duplicate root edge"
        h[a, b] = coeffs[t] / 2.0
        h[b, a] = -coeffs[t] / 2.0
    return h


@dataclass(frozen=True)
class FreeFermionSpectrum:
    """Paired singular values of an antisymmetric matrix, sorted descending.

    ``det_w`` is the determinant of the real orthogonal transform that
    brings the matrix to canonical 2x2 block form with all blocks
    [[0, -lam], [lam, 0]]; it fixes which occupation patterns carry which
    fermion parity.  ``zero_mode`` marks the unpaired column of an
    odd-dimensional matrix.
    """

    lambdas: tuple[float, ...]
    det_w: int
    num_modes: int

    @property
    def zero_mode(self) -> bool:
        return self.num_modes % 2 == 1

    @property
    def num_pairs(self) -> int:
        return self.num_modes // 2


def block_diagonalize(h: np.ndarray) -> FreeFermionSpectrum:
    """Real Schur canonical form of an antisymmetric matrix.

    Blocks are sign-normalized and sorted by descending lambda; column
    operations are tracked exactly so det_w is the determinant of the
    final orthogonal transform.
    """
    v = h.shape[0]
    if not np.array_equal(h, -h.T):
        raise ValueError("matrix is not antisymmetric")
    scale = np.abs(h).max()
    tol = ZERO_MODE_RTOL * max(scale, 1.0)
    if scale == 0.0:
        return FreeFermionSpectrum((0.0,) * (v // 2), 1, v)
    t, w = schur(h, output="real")
    det_w = 1 if np.linalg.det(w) > 0 else -1
    blocks: list[tuple[float, int, bool]] = []  # (lam, col, needs_swap)
    singles: list[int] = []
    i = 0
    while i < v:
        if i + 1 < v and abs(t[i + 1, i]) > tol:
            lam = abs(t[i, i + 1])
            blocks.append((lam, i, t[i + 1, i] < 0))
            i += 2
        else:
            singles.append(i)
            i += 1
    blocks.sort(key=lambda b: (-b[0], b[1]))
    perm: list[int] = []
    for lam, col, needs_swap in blocks:
        # within-pair swap flips the block sign to [[0, -lam], [lam, 0]]
        perm.extend([col + 1, col] if needs_swap else [col, col + 1])
    perm.extend(singles)
    det_w *= _permutation_sign(perm)
    lams = [lam if lam > tol else 0.0 for lam, _, _ in blocks]
    lams += [0.0] * (len(singles) // 2)
    return FreeFermionSpectrum(tuple(lams), det_w, v)


def _permutation_sign(perm: list[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# ---------------------------------------------------------------------------
# occupation enumeration and sector assembly


def fock_energies(lams) -> tuple[np.ndarray, np.ndarray]:
    """Energies 2*sum((-1)^x_j lam_j) and occupation parities for all labels."""
    energies = np.zeros(1)
    parity = np.zeros(1, dtype=np.int64)
    for lam in lams:
        energies = np.concatenate([energies + 2.0 * lam, energies - 2.0 * lam])
        parity = np.concatenate([parity, parity ^ 1])
    return energies, parity


def group_energies(values: np.ndarray, counts=None, tol: float = ENERGY_GROUP_TOL):
    """Collapse a float multiset into (value, multiplicity) pairs."""
    order = np.argsort(values, kind="stable")
    values = values[order]
    counts = np.ones(len(values), dtype=object) if counts is None else counts[order]
    out: list[list] = []
    for v, c in zip(values, counts):
        if out and abs(v - out[-1][0]) <= tol:
            out[-1][1] += c
        else:
            out.append([float(v), c])
    return [(v, int(c)) for v, c in out]


def minkowski_sum(a, b, state_cap: int):
    """Combine spectra of independent components by energy addition."""
    if len(a) * len(b) > state_cap:
        raise ResourceCapError(
            f"cross-component state assembly exceeds cap ({len(a)}x{len(b)})"
        )
    vals = np.array([va + vb for va, _ in a for vb, _ in b])
    cnts = np.array([ca * cb for _, ca in a for _, cb in b], dtype=object)
    return group_energies(vals, cnts)


@dataclass(frozen=True)
class ComponentSectorData:
    """Per-component outcome inside one sector."""

    component: int
    spectrum: FreeFermionSpectrum
    parity_filter_sign: int | None  # kept fermionic parity, None = unfiltered
    parity_link: int | None  # tau: fermionic parity = tau * eigenvalue of parity word
    energies: tuple[tuple[float, int], ...]
    ground: float


@dataclass(frozen=True)
class SectorSolution:
    """Spectrum of one symmetry sector, logical degeneracy included."""

    bits: int
    label: str
    energies: tuple[tuple[float, int], ...]
    ground_energy: float
    components: tuple[ComponentSectorData, ...]
    num_states: int


def sector_spectrum(
    spectrum: FreeFermionSpectrum,
    parity_filter_sign: int | None = None,
    state_cap: int = 1 << 22,
):
    """Occupation energies of one component, optionally parity-filtered.

    ``parity_filter_sign`` keeps only occupation labels whose fermionic
    parity det_w * (-1)^(pairs + sum x) matches it.
    """
    m = spectrum.num_pairs
    if 1 << m > state_cap:
        raise ResourceCapError(f"occupation enumeration of 2^{m} states exceeds cap")
    energies, occ_parity = fock_energies(spectrum.lambdas)
    if parity_filter_sign is not None:
        eig = spectrum.det_w * np.where((m + occ_parity) % 2 == 0, 1, -1)
        keep = eig == parity_filter_sign
        energies = energies[keep]
    return group_energies(energies)


def _component_ground(
    spectrum: FreeFermionSpectrum, parity_filter_sign: int | None
) -> float:
    total = -2.0 * float(sum(spectrum.lambdas))
    if parity_filter_sign is None:
        return total
    m = spectrum.num_pairs
    all_filled = spectrum.det_w * (1 if (m + m) % 2 == 0 else -1)
    if all_filled == parity_filter_sign or m == 0:
        return total
    return total + 4.0 * float(min(spectrum.lambdas))


def _solve_component(
    analysis: ModelAnalysis,
    comp: ComponentAnalysis,
    coeffs_by_term: dict[int, float],
    bits: int,
    tree_flips: frozenset[int],
    state_cap: int,
    enumerate_states: bool,
) -> ComponentSectorData:
    ledger = analysis.ledger
    cycle_values = {
        c.term: ledger.value(c.generator, bits)
        for c in comp.sym.cycles
        if c.generator is not None
    }
    directions = orient(comp, cycle_values, tree_flips)
    coeffs = [coeffs_by_term[t] for t in comp.term_ids]
    spectrum = block_diagonalize(build_h(comp, directions, coeffs))

    filter_sign = None
    tau = None
    parity = comp.sym.parity
    if parity is not None:
        mono = MajoranaMonomial.identity()
        for t in parity.t_join:
            mono = mono * MajoranaMonomial.hop(*directions[t])
        assert mono.modes == tuple(range(comp.num_modes)), "T-join misses modes"
        m = comp.num_modes // 2
        exponent = (parity.product.phase_power - mono.phase_power + m * (2 * m - 1)) % 4
        assert exponent % 2 == 0, "parity link has an imaginary residue"
        tau = 1 if exponent == 0 else -1
        if parity.in_span:
            value = parity.base_sign * ledger.combo_value(parity.combo, bits)
            filter_sign = tau * value

    energies: tuple = ()
    if enumerate_states:
        energies = tuple(sector_spectrum(spectrum, filter_sign, state_cap))
    ground = _component_ground(spectrum, filter_sign)
    return ComponentSectorData(
        comp.index, spectrum, filter_sign, tau, energies, ground
    )


def solve_sector(
    analysis: ModelAnalysis,
    bits: int,
    tree_flips: dict[int, frozenset[int]] | None = None,
    state_cap: int = 1 << 22,
    enumerate_states: bool = True,
) -> SectorSolution:
    """Solve one symmetry sector of an analyzed model."""
    folded: dict[int, float] = {}
    for reduction in analysis.reductions:
        folded.update(fold_coefficients(reduction, analysis.ledger, bits))
    parts = []
    for comp in analysis.components:
        flips = (tree_flips or {}).get(comp.index, frozenset())
        parts.append(
            _solve_component(
                analysis, comp, folded, bits, flips, state_cap, enumerate_states
            )
        )
    logical_factor = 1 << analysis.n_logical
    combined = [(0.0, 1)]
    if enumerate_states:
        for part in parts:
            combined = minkowski_sum(combined, list(part.energies), state_cap)
        combined = [(e, c * logical_factor) for e, c in combined]
    ground = sum(part.ground for part in parts)
    num_states = sum(c for _, c in combined) if enumerate_states else 0
    return SectorSolution(
        bits,
        analysis.plan.format_bits(bits),
        tuple(combined) if enumerate_states else (),
        ground,
        tuple(parts),
        num_states,
    )


@dataclass
class SolveOptions:
    k3_root: str = "claw"
    sectors: object = "auto"  # 'auto' | iterable of bit strings
    max_sectors: int = 1 << 16
    state_cap: int = 1 << 22
    gauge_seed: int | None = None
    enumerate_states: bool = True


@dataclass
class SpectrumReport:
    """Full solve outcome: per-sector spectra plus global accounting."""

    analysis: ModelAnalysis
    sectors: list[SectorSolution]
    ground_energy: float
    complete: bool
    total_states: int

    def full_spectrum(self):
        """Merged (energy, multiplicity) list across all solved sectors."""
        vals = np.array([e for s in self.sectors for e, _ in s.energies])
        cnts = np.array(
            [c for s in self.sectors for _, c in s.energies], dtype=object
        )
        if len(vals) == 0:
            return []
        return group_energies(vals, cnts)

    def audit_exact(self) -> bool:
        return self.complete and self.total_states == 1 << self.analysis.spec.n


def _gauge_flips(analysis: ModelAnalysis, seed: int | None):
    if seed is None:
        return None
    rng = np.random.default_rng(seed)
    flips = {}
    for comp in analysis.components:
        terms = sorted(comp.sym.tree.tree_terms)
        mask = rng.integers(0, 2, size=len(terms))
        flips[comp.index] = frozenset(t for t, b in zip(terms, mask) if b)
    return flips


def solve_full(spec: HamiltonianSpec, options: SolveOptions | None = None) -> SpectrumReport:
    """Whole pipeline: analysis plus per-sector solves.

    Raises NotLineGraphError (with witness) on obstruction and
    ResourceCapError when enumeration would exceed the configured caps.
    """
    options = options or SolveOptions()
    analysis = analyze(spec, options.k3_root)
    nbits = analysis.num_free_bits
    if options.sectors == "auto":
        if 1 << nbits > options.max_sectors:
            raise ResourceCapError(
                f"2^{nbits} sectors exceed the cap of {options.max_sectors}; "
                "name sectors explicitly"
            )
        bit_list = list(range(1 << nbits))
        complete = True
    else:
        bit_list = [analysis.plan.parse_bits(s) for s in options.sectors]
        complete = False
    flips = _gauge_flips(analysis, options.gauge_seed)
    sectors = [
        solve_sector(
            analysis,
            bits,
            flips,
            options.state_cap,
            options.enumerate_states,
        )
        for bits in bit_list
    ]
    ground = min(s.ground_energy for s in sectors)
    total = sum(s.num_states for s in sectors)
    return SpectrumReport(analysis, sectors, ground, complete, total)


def single_particle_lambdas(
    analysis: ModelAnalysis,
    bits: int = 0,
    coeff_overrides: dict[int, float] | None = None,
) -> np.ndarray:
    """All paired singular values across components, sorted descending.

    ``coeff_overrides`` substitutes term coefficients by term index before
    twin folding, which lets one structure serve a coupling sweep.
    """
    if coeff_overrides:
        terms = list(analysis.spec.terms)
        for tid, value in coeff_overrides.items():
            terms[tid] = (terms[tid][0], float(value))
        spec = HamiltonianSpec(analysis.spec.n, tuple(terms))
        work = ModelAnalysis(
            spec,
            analysis.graph,
            [_rebind_reduction(r, spec) for r in analysis.reductions],
            analysis.components,
            analysis.ledger,
            analysis.plan,
            analysis.n_logical,
            analysis.center_size,
            analysis.fermionic_qubits,
        )
    else:
        work = analysis
    folded: dict[int, float] = {}
    for reduction in work.reductions:
        folded.update(fold_coefficients(reduction, work.ledger, bits))
    lams: list[float] = []
    for comp in work.components:
        cycle_values = {
            c.term: work.ledger.value(c.generator, bits)
            for c in comp.sym.cycles
            if c.generator is not None
        }
        directions = orient(comp, cycle_values)
        coeffs = [folded[t] for t in comp.term_ids]
        lams.extend(block_diagonalize(build_h(comp, directions, coeffs)).lambdas)
    return np.array(sorted(lams, reverse=True))


def _rebind_reduction(reduction: TwinReduction, spec: HamiltonianSpec) -> TwinReduction:
    original = FrustrationGraph(spec, reduction.original.term_ids, reduction.original.adj)
    graph = FrustrationGraph(spec, reduction.graph.term_ids, reduction.graph.adj)
    return TwinReduction(original, graph, reduction.removals)
