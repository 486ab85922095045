"""Pauli symmetries of a recognized model: cycles, parity, and counting.

Every product of Hamiltonian terms around a cycle of the root graph
commutes with the whole Hamiltonian, as does the product over a T-join
(a set of terms hitting every mode an odd number of times), which exists
exactly when the mode count is even.  Together with twin stabilizers
these generate the full commutant within the group generated by the
terms; whatever is left over counts logical qubits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import gf2_rank
from .linegraph import RootGraph
from .pauli import PauliWord, SignedPauli, pauli_product
from .sectors import FixedGenerator, GeneratorLedger


@dataclass(frozen=True)
class SpanningTree:
    """BFS tree of a root graph; terms double as root edges."""

    root_mode: int
    tree_terms: frozenset[int]
    parent_mode: dict[int, int]
    parent_term: dict[int, int]


def spanning_tree(root: RootGraph, root_mode: int = 0) -> SpanningTree:
    """Breadth-first spanning tree from the lowest mode, deterministic."""
    incident: list[list[tuple[int, int]]] = [[] for _ in range(root.num_modes)]
    for t, (a, b) in enumerate(root.edges):
        incident[a].append((b, t))
        incident[b].append((a, t))
    for lst in incident:
        lst.sort()
    parent_mode: dict[int, int] = {root_mode: root_mode}
    parent_term: dict[int, int] = {}
    tree_terms: set[int] = set()
    frontier = [root_mode]
    while frontier:
        nxt = []
        for u in frontier:
            for v, t in incident[u]:
                if v not in parent_mode:
                    parent_mode[v] = u
                    parent_term[v] = t
                    tree_terms.add(t)
                    nxt.append(v)
        frontier = sorted(nxt)
    if len(parent_mode) != root.num_modes:
        raise ValueError("root graph is disconnected")
    return SpanningTree(root_mode, frozenset(tree_terms), parent_mode, parent_term)


def tree_path_terms(tree: SpanningTree, mode: int) -> list[int]:
    """Terms along the unique tree path from ``mode`` to the tree root."""
    path = []
    while mode != tree.root_mode:
        path.append(tree.parent_term[mode])
        mode = tree.parent_mode[mode]
    return path


@dataclass(frozen=True)
class CycleInfo:
    """Fundamental cycle closed by one non-tree term.

    ``product`` is the exact ordered product of the member terms (ascending
    index): product == i**phase_power * canonical(word).  A trivial cycle
    (identity word) forces its sector bit to 0 and has no generator.
    """

    term: int
    member_terms: tuple[int, ...]
    product: SignedPauli
    generator: FixedGenerator | None

    @property
    def trivial(self) -> bool:
        return self.generator is None


@dataclass(frozen=True)
class ParityInfo:
    """T-join data for an even-mode component.

    ``in_span`` marks a parity word that reduces to a product of fixed
    stabilizers, in which case only one fermionic parity class is physical
    in every sector.  Otherwise the parity operator is an independent
    symmetry and both classes survive.
    """

    t_join: tuple[int, ...]
    product: SignedPauli
    in_span: bool
    combo: int
    base_sign: int

    @property
    def word(self) -> PauliWord:
        return self.product.word

    @property
    def trivial_in_sector(self) -> bool:
        return self.in_span


@dataclass(frozen=True)
class ComponentSymmetry:
    component: int
    root: RootGraph
    tree: SpanningTree
    cycles: tuple[CycleInfo, ...]
    parity: ParityInfo | None

    @property
    def cycle_rank(self) -> int:
        return len(self.cycles)


def fundamental_cycles(
    root: RootGraph,
    tree: SpanningTree,
    words: list[PauliWord],
    ledger: GeneratorLedger,
    component: int,
) -> tuple[CycleInfo, ...]:
    """One cycle per non-tree term; register non-identity cycle words."""
    cycles = []
    for t in range(root.num_edges):
        if t in tree.tree_terms:
            continue
        a, b = root.edges[t]
        members = set(tree_path_terms(tree, a))
        members ^= set(tree_path_terms(tree, b))
        members.add(t)
        member_terms = tuple(sorted(members))
        product = pauli_product([words[z] for z in member_terms])
        gen = None
        if not product.word.is_identity:
            gen = ledger.add(product.word, "cycle", component)
        cycles.append(CycleInfo(t, member_terms, product, gen))
    return tuple(cycles)


def find_t_join(root: RootGraph, tree: SpanningTree) -> tuple[int, ...] | None:
    """A term set hitting every mode an odd number of times, or None when odd.

    Built by pairing modes along tree paths and taking the symmetric
    difference.
    """
    if root.num_modes % 2 == 1:
        return None
    join: set[int] = set()
    modes = list(range(root.num_modes))
    for i in range(0, len(modes), 2):
        u, v = modes[i], modes[i + 1]
        join ^= set(tree_path_terms(tree, u))
        join ^= set(tree_path_terms(tree, v))
    degree = [0] * root.num_modes
    for t in join:
        a, b = root.edges[t]
        degree[a] += 1
        degree[b] += 1
    assert all(d % 2 == 1 for d in degree), "T-join construction failed"
    return tuple(sorted(join))


def rank_audit(adj, root: RootGraph) -> bool:
    """GF(2) rank of the adjacency must be mode count minus (1 if odd else 2).

    Follows from the factorization of a line-graph adjacency through the
    edge-mode incidence matrix.
    """
    rank = gf2_rank(adj)
    v = root.num_modes
    expected = v - 1 if v % 2 == 1 else v - 2
    return rank == expected


@dataclass(frozen=True)
class SymmetryReport:
    """Global symmetry accounting for a solved model."""

    n: int
    num_terms: int
    fermionic_qubits: int
    center_size: int
    n_logical: int
    cycle_rank: int
    twin_generators: tuple[FixedGenerator, ...]
    cycle_generators: tuple[FixedGenerator, ...]
    parity_words: tuple[tuple[int, SignedPauli, bool], ...]  # (component, product, independent)
    free_labels: tuple[str, ...]
