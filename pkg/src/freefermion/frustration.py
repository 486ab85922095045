"""Frustration graphs: anticommutation structure of Hamiltonian terms.

Vertices are term indices, with an edge whenever two terms anticommute.
Also implements twin-vertex reduction: vertices with identical
neighborhoods have a product that commutes with every term, and one of
the pair can be folded into the other inside each eigenspace of that
product.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pauli import HamiltonianSpec, PauliWord, multiply, symplectic_inner
from .sectors import FixedGenerator, GeneratorLedger


@dataclass(frozen=True)
class FrustrationGraph:
    """Graph over (a subset of) the terms of a Hamiltonian.

    ``term_ids`` are indices into ``spec.terms``; ``adj`` holds one bitmask
    row per vertex in local indexing (bit j of row i set iff local vertices
    i and j anticommute).
    """

    spec: HamiltonianSpec
    term_ids: tuple[int, ...]
    adj: tuple[int, ...]

    @property
    def num_vertices(self) -> int:
        return len(self.term_ids)

    def word(self, local: int) -> PauliWord:
        return self.spec.terms[self.term_ids[local]][0]

    def coefficient(self, local: int) -> float:
        return self.spec.terms[self.term_ids[local]][1]

    def labels(self) -> tuple[str, ...]:
        return tuple(self.word(i).to_string() for i in range(self.num_vertices))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.num_vertices):
            row = self.adj[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    out.append((i, j))
                row >>= 1
                j += 1
        return out

    def subgraph(self, locals_sorted: list[int]) -> "FrustrationGraph":
        pos = {v: p for p, v in enumerate(locals_sorted)}
        rows = []
        for v in locals_sorted:
            row = 0
            r = self.adj[v]
            while r:
                j = r & -r
                idx = j.bit_length() - 1
                if idx in pos:
                    row |= 1 << pos[idx]
                r ^= j
            rows.append(row)
        return FrustrationGraph(
            self.spec,
            tuple(self.term_ids[v] for v in locals_sorted),
            tuple(rows),
        )


def build_frustration_graph(spec: HamiltonianSpec) -> FrustrationGraph:
    """Adjacency over all terms: edge iff the symplectic inner product is 1."""
    words = spec.words()
    m = len(words)
    rows = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if symplectic_inner(words[i], words[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return FrustrationGraph(spec, tuple(range(m)), tuple(rows))


def connected_components(g: FrustrationGraph) -> list[FrustrationGraph]:
    """Split into connected components, ordered by smallest term index."""
    m = g.num_vertices
    seen = [False] * m
    comps = []
    for start in range(m):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            row = g.adj[v]
            while row:
                j = row & -row
                idx = j.bit_length() - 1
                if not seen[idx]:
                    seen[idx] = True
                    stack.append(idx)
                row ^= j
        comps.append(g.subgraph(sorted(comp)))
    return comps


def twin_classes(g: FrustrationGraph) -> list[tuple[int, ...]]:
    """Classes of vertices with identical neighborhoods, sizes >= 2.

    Twins are never adjacent, so equal adjacency rows are exactly the
    twin relation.  Returned as tuples of global term ids.
    """
    groups: dict[int, list[int]] = {}
    for i, row in enumerate(g.adj):
        groups.setdefault(row, []).append(i)
    out = []
    for locals_ in groups.values():
        if len(locals_) >= 2:
            out.append(tuple(g.term_ids[i] for i in locals_))
    out.sort()
    return out


@dataclass(frozen=True)
class TwinRemoval:
    """Folding of one twin into its class representative.

    rel_sign is the exact scalar s in sigma^kept sigma^removed = s * sigma^w
    (s is +/-1 since twins commute); the sector value of sigma^w supplies
    the remaining sign at fold time.
    """

    removed_term: int
    kept_term: int
    generator: FixedGenerator
    rel_sign: int


@dataclass(frozen=True)
class TwinReduction:
    """Structural record of iterated twin removal on one component."""

    original: FrustrationGraph
    graph: FrustrationGraph
    removals: tuple[TwinRemoval, ...]

    @property
    def generators(self) -> tuple[FixedGenerator, ...]:
        seen = []
        for r in self.removals:
            if r.generator not in seen:
                seen.append(r.generator)
        return tuple(seen)


def reduce_twins_structural(
    g: FrustrationGraph, ledger: GeneratorLedger, component: int
) -> TwinReduction:
    """Iterate twin removal to a fixed point, registering stabilizer generators.

    Removal can create new twins, hence the outer loop.  The lowest term
    index in each class is kept.
    """
    current = g
    removals: list[TwinRemoval] = []
    while True:
        classes = twin_classes(current)
        if not classes:
            break
        removed_terms = set()
        for cls in classes:
            kept = cls[0]
            kept_word = g.spec.terms[kept][0]
            for other in cls[1:]:
                prod = multiply(kept_word, g.spec.terms[other][0])
                gen = ledger.add(prod.word, "twin", component)
                removals.append(TwinRemoval(other, kept, gen, prod.sign))
                removed_terms.add(other)
        keep_locals = [
            i for i in range(current.num_vertices)
            if current.term_ids[i] not in removed_terms
        ]
        current = current.subgraph(keep_locals)
    return TwinReduction(g, current, tuple(removals))


def fold_coefficients(
    reduction: TwinReduction, ledger: GeneratorLedger, bits: int
) -> dict[int, float]:
    """Sector-resolved coefficients of the surviving terms.

    Folds may cancel to zero; zero-weight terms are kept so the reduced
    graph structure stays sector-independent.
    """
    spec = reduction.original.spec
    coeffs = {t: spec.terms[t][1] for t in reduction.original.term_ids}
    for r in reduction.removals:
        sign = r.rel_sign * ledger.value(r.generator, bits)
        coeffs[r.kept_term] += sign * coeffs.pop(r.removed_term)
    return coeffs


def reduce_twins(
    g: FrustrationGraph, sector_bits: str | int = 0
) -> tuple[HamiltonianSpec, FrustrationGraph, TwinReduction]:
    """One-shot twin reduction of a graph in a chosen stabilizer sector.

    ``sector_bits`` assigns an eigenvalue (-1)**bit to each independent
    twin-product generator, in discovery order; a string must have exactly
    one character per independent generator.
    """
    ledger = GeneratorLedger(g.spec.n)
    reduction = reduce_twins_structural(g, ledger, component=0)
    if isinstance(sector_bits, str):
        if len(sector_bits) != ledger.num_free or set(sector_bits) - {"0", "1"}:
            raise ValueError(
                f"sector string must be {ledger.num_free} characters over 0/1"
            )
        bits = sum(1 << i for i, ch in enumerate(sector_bits) if ch == "1")
    else:
        bits = int(sector_bits)
        if bits >> ledger.num_free:
            raise ValueError("sector bits exceed the independent generator count")
    coeffs = fold_coefficients(reduction, ledger, bits)
    terms = tuple(
        (g.spec.terms[t][0], coeffs[t]) for t in reduction.graph.term_ids
    )
    reduced_spec = HamiltonianSpec(g.spec.n, terms)
    reduced_graph = FrustrationGraph(
        reduced_spec, tuple(range(len(terms))), reduction.graph.adj
    )
    return reduced_spec, reduced_graph, reduction
