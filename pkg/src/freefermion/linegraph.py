"""Line-graph recognition with certified output.

Given a connected graph G (bitmask adjacency rows), either produce a root
graph R with L(R) isomorphic to G vertex-for-vertex, together with the
clique partition that witnesses it, or a minimal induced subgraph from
the nine-graph forbidden family proving no root exists.

Recognition strategy: graphs on <= 6 vertices go through an exact
backtracking clique-partition search (this covers every graph whose
Krausz structure is ambiguous); larger connected graphs use local
odd-triangle cell splitting, which is deterministic and linear-ish.
Either way the result is certified afterwards by rebuilding L(R) and
comparing edge-for-edge, so a returned root is always sound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ObstructionError


# Minimal graphs that cannot occur as induced subgraphs of any line graph,
# in deterministic order: (name, vertex count, edges).  Index 1 is the claw.
BEINEKE_GRAPHS: tuple[tuple[str, int, tuple[tuple[int, int], ...]], ...] = (
    ("claw (K1,3)", 4, ((0, 1), (0, 2), (0, 3))),
    ("beineke-2", 5, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4))),
    ("K5 minus an edge", 5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4))),
    ("beineke-4", 6, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5))),
    ("beineke-5", 6, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5), (4, 5))),
    ("beineke-6", 6, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (4, 5))),
    ("beineke-7", 6, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 4), (3, 5))),
    ("beineke-8", 6, ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (2, 4), (3, 5), (4, 5))),
    ("beineke-9", 6, ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (4, 5))),
)


@dataclass(frozen=True)
class KrauszDecomposition:
    """Partition of a graph's edges into cliques, every vertex in at most two."""

    cliques: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class RootGraph:
    """Fermion hopping graph: graph vertex i maps to root edge ``edges[i]``."""

    num_modes: int
    edges: tuple[tuple[int, int], ...]
    krausz: KrauszDecomposition

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> tuple[int, ...]:
        """Adjacency rows of the root graph itself (modes as vertices)."""
        rows = [0] * self.num_modes
        for a, b in self.edges:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return tuple(rows)


@dataclass(frozen=True)
class ObstructionWitness:
    """Induced subgraph isomorphic to a forbidden graph.

    ``mapping[c]`` is the witness vertex realizing canonical vertex c of
    ``BEINEKE_GRAPHS[beineke_index - 1]``.
    """

    vertices: tuple[int, ...]
    beineke_index: int
    mapping: tuple[int, ...]

    @property
    def name(self) -> str:
        return BEINEKE_GRAPHS[self.beineke_index - 1][0]

    def verify(self, adj: tuple[int, ...]) -> bool:
        """Check the claimed isomorphism against the host graph exactly."""
        _, k, edges = BEINEKE_GRAPHS[self.beineke_index - 1]
        if len(self.mapping) != k or set(self.mapping) != set(self.vertices):
            return False
        want = {tuple(sorted((self.mapping[a], self.mapping[b]))) for a, b in edges}
        for a, b in itertools.combinations(sorted(self.vertices), 2):
            present = bool(adj[a] >> b & 1)
            if present != ((a, b) in want):
                return False
        return True


class NotLineGraphError(ObstructionError):
    """Recognition failed; ``witness`` holds the verified forbidden subgraph."""


# ---------------------------------------------------------------------------
# plain bitmask-graph helpers


def line_graph_of(num_modes: int, edges) -> tuple[int, ...]:
    """Adjacency rows of L(R): edges adjacent iff they share exactly one mode."""
    masks = [(1 << a) | (1 << b) for a, b in edges]
    m = len(masks)
    rows = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if (masks[i] & masks[j]).bit_count() == 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return tuple(rows)


def induced_subgraph(adj, keep) -> tuple[int, ...]:
    pos = {v: p for p, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        r = adj[v]
        while r:
            low = r & -r
            idx = low.bit_length() - 1
            if idx in pos:
                row |= 1 << pos[idx]
            r ^= low
        rows.append(row)
    return tuple(rows)


def graph_components(adj) -> list[list[int]]:
    n = len(adj)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            r = adj[v]
            while r:
                low = r & -r
                idx = low.bit_length() - 1
                if not seen[idx]:
                    seen[idx] = True
                    stack.append(idx)
                r ^= low
        comps.append(sorted(comp))
    return comps


def _degree_sequence(adj) -> tuple[int, ...]:
    return tuple(sorted(r.bit_count() for r in adj))


def find_isomorphism(adj_a, adj_b) -> tuple[int, ...] | None:
    """Brute-force isomorphism for small graphs: mapping[i of a] = vertex of b."""
    n = len(adj_a)
    if len(adj_b) != n or _degree_sequence(adj_a) != _degree_sequence(adj_b):
        return None
    deg_a = [r.bit_count() for r in adj_a]
    deg_b = [r.bit_count() for r in adj_b]
    for perm in itertools.permutations(range(n)):
        if any(deg_a[i] != deg_b[perm[i]] for i in range(n)):
            continue
        ok = True
        for i in range(n):
            for j in range(i + 1, n):
                if (adj_a[i] >> j & 1) != (adj_b[perm[i]] >> perm[j] & 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return perm
    return None


def _adj_from_edges(n: int, edges) -> tuple[int, ...]:
    rows = [0] * n
    for a, b in edges:
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return tuple(rows)


# ---------------------------------------------------------------------------
# Krausz construction


def _krausz_small(adj) -> list[frozenset[int]] | None:
    """Exact backtracking clique partition for graphs on <= 6 vertices."""
    n = len(adj)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i] >> j & 1:
                edges.append((i, j))
    assigned = [False] * len(edges)
    edge_index = {e: k for k, e in enumerate(edges)}
    count = [0] * n
    cliques: list[set[int]] = []

    def next_unassigned():
        for k, done in enumerate(assigned):
            if not done:
                return k
        return None

    def search() -> bool:
        k = next_unassigned()
        if k is None:
            return True
        u, v = edges[k]
        # grow an existing clique by one vertex
        for c in cliques:
            for inside, outside in ((u, v), (v, u)):
                if inside in c and outside not in c and count[outside] < 2:
                    if all(adj[outside] >> w & 1 for w in c):
                        new_edges = [edge_index[tuple(sorted((outside, w)))] for w in c]
                        if all(not assigned[e] for e in new_edges):
                            for e in new_edges:
                                assigned[e] = True
                            c.add(outside)
                            count[outside] += 1
                            if search():
                                return True
                            count[outside] -= 1
                            c.remove(outside)
                            for e in new_edges:
                                assigned[e] = False
        # start a fresh clique from this edge
        if count[u] < 2 and count[v] < 2:
            assigned[k] = True
            count[u] += 1
            count[v] += 1
            cliques.append({u, v})
            if search():
                return True
            cliques.pop()
            count[u] -= 1
            count[v] -= 1
            assigned[k] = False
        return False

    if not search():
        return None
    return [frozenset(c) for c in cliques]


def _odd_triangle(adj, u: int, x: int, y: int) -> bool:
    t = (1 << u) | (1 << x) | (1 << y)
    return any((row & t).bit_count() & 1 for row in adj)


def _krausz_cells(adj) -> list[frozenset[int]] | None:
    """Cell construction for connected graphs on >= 7 vertices.

    Neighbors x, y of u share u's cell exactly when they are adjacent and
    the triangle (u, x, y) is odd; even triangles come from root-graph
    triangles and must split.  All ambiguous configurations live on <= 6
    vertices and never reach this routine.
    """
    n = len(adj)
    cells_at: list[list[frozenset[int]]] = []
    for u in range(n):
        nbrs = []
        r = adj[u]
        while r:
            low = r & -r
            nbrs.append(low.bit_length() - 1)
            r ^= low
        parent = {x: x for x in nbrs}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for x, y in itertools.combinations(nbrs, 2):
            if adj[x] >> y & 1 and _odd_triangle(adj, u, x, y):
                parent[find(x)] = find(y)
        groups: dict[int, set[int]] = {}
        for x in nbrs:
            groups.setdefault(find(x), set()).add(x)
        classes = [frozenset(g) for g in groups.values()]
        if len(classes) > 2:
            return None
        for cls in classes:
            for x, y in itertools.combinations(sorted(cls), 2):
                if not adj[x] >> y & 1:
                    return None
        cells_at.append([frozenset({u}) | c for c in classes])

    # consistency: an edge must see the same cell from both endpoints
    cells: set[frozenset[int]] = set()
    for u in range(n):
        for cell in cells_at[u]:
            for v in cell:
                if v != u and cell not in cells_at[v]:
                    return None
            cells.add(cell)
    return sorted(cells, key=lambda c: tuple(sorted(c)))


def _root_from_cliques(adj, cliques) -> RootGraph | None:
    """Assemble root modes/edges from a clique list and certify L(R) == G."""
    n = len(adj)
    cliques = sorted((frozenset(c) for c in cliques), key=lambda c: tuple(sorted(c)))
    cell_ids: list[list[int]] = [[] for _ in range(n)]
    for ci, c in enumerate(cliques):
        for v in c:
            cell_ids[v].append(ci)
    if any(len(ids) > 2 for ids in cell_ids):
        return None
    next_mode = len(cliques)
    edges = []
    for v in range(n):
        ids = cell_ids[v]
        if len(ids) == 2:
            edges.append((ids[0], ids[1]))
        elif len(ids) == 1:
            edges.append((ids[0], next_mode))
            next_mode += 1
        else:
            edges.append((next_mode, next_mode + 1))
            next_mode += 2
    edges = [tuple(sorted(e)) for e in edges]
    if len(set(edges)) != n:
        return None
    if line_graph_of(next_mode, edges) != tuple(adj):
        return None
    return RootGraph(next_mode, tuple(edges), KrauszDecomposition(tuple(cliques)))


def _is_complete_triangle(adj) -> bool:
    return len(adj) == 3 and all(r.bit_count() == 2 for r in adj)


def _try_root(adj, k3_root: str = "claw") -> RootGraph | None:
    """Recognition without the witness machinery; None when not a line graph."""
    n = len(adj)
    if n == 0:
        raise ValueError("empty graph")
    if _is_complete_triangle(adj):
        return resolve_whitney_ambiguity(adj, k3_root)
    cliques = _krausz_small(adj) if n <= 6 else _krausz_cells(adj)
    if cliques is None:
        return None
    return _root_from_cliques(adj, cliques)


def resolve_whitney_ambiguity(adj, preference: str = "claw") -> RootGraph:
    """Pick a root for the one ambiguous graph, the triangle.

    ``claw`` yields four modes (a star), ``triangle`` three modes.
    """
    if not _is_complete_triangle(adj):
        raise ValueError("root-choice override only applies to a triangle component")
    if preference == "claw":
        cliques = [frozenset({0, 1, 2})]
    elif preference == "triangle":
        cliques = [frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})]
    else:
        raise ValueError(f"unknown triangle root preference {preference!r}")
    root = _root_from_cliques(adj, cliques)
    assert root is not None
    return root


def is_line_graph(adj) -> bool:
    """True iff every connected component has a certified root."""
    if len(adj) == 0:
        return True
    for comp in graph_components(adj):
        if _try_root(induced_subgraph(adj, comp)) is None:
            return False
    return True


def verify_krausz(adj, cliques) -> bool:
    """Check a clique list is an edge partition with every vertex in <= 2 cliques."""
    n = len(adj)
    counts = [0] * n
    seen_edges: set[tuple[int, int]] = set()
    for c in cliques:
        members = sorted(c)
        if any(v < 0 or v >= n for v in members):
            return False
        for v in members:
            counts[v] += 1
        for a, b in itertools.combinations(members, 2):
            if not adj[a] >> b & 1:
                return False
            if (a, b) in seen_edges:
                return False
            seen_edges.add((a, b))
    if any(cnt > 2 for cnt in counts):
        return False
    total_edges = sum(r.bit_count() for r in adj) // 2
    return len(seen_edges) == total_edges


def _find_claw(adj) -> tuple[int, int, int, int] | None:
    n = len(adj)
    for v in range(n):
        nbrs = [u for u in range(n) if adj[v] >> u & 1]
        for a, b, c in itertools.combinations(nbrs, 3):
            if not (adj[a] >> b & 1 or adj[a] >> c & 1 or adj[b] >> c & 1):
                return v, a, b, c
    return None


def forbidden_witness(adj) -> ObstructionWitness:
    """Minimal forbidden induced subgraph of a graph that is not a line graph.

    Greedy vertex deletion preserves non-line-ness (the class is
    hereditary), so the fixed point is one of the nine minimal graphs.
    """
    if is_line_graph(adj):
        raise ValueError("graph is a line graph; no witness exists")
    claw = _find_claw(adj)
    if claw is not None:
        witness = ObstructionWitness(tuple(sorted(claw)), 1, claw)
        assert witness.verify(tuple(adj))
        return witness

    current = list(range(len(adj)))
    cur_adj = tuple(adj)
    improved = True
    while improved:
        improved = False
        for pos in range(len(current)):
            keep = [p for p in range(len(current)) if p != pos]
            trial = induced_subgraph(cur_adj, keep)
            for comp in graph_components(trial):
                comp_adj = induced_subgraph(trial, comp)
                if not is_line_graph(comp_adj):
                    current = [current[keep[p]] for p in comp]
                    cur_adj = comp_adj
                    improved = True
                    break
            if improved:
                break

    for idx, (_, k, edges) in enumerate(BEINEKE_GRAPHS, start=1):
        if k != len(current):
            continue
        mapping = find_isomorphism(_adj_from_edges(k, edges), cur_adj)
        if mapping is not None:
            witness = ObstructionWitness(
                tuple(sorted(current)),
                idx,
                tuple(current[mapping[c]] for c in range(k)),
            )
            assert witness.verify(tuple(adj))
            return witness
    raise AssertionError("minimal non-line graph failed to match the forbidden family")


def recognize(adj, k3_root: str = "claw") -> RootGraph:
    """Root graph of a connected G, or raise with a forbidden-subgraph witness.

    The returned object carries the clique partition and the vertex->edge
    map (vertex i of G is edge ``edges[i]`` of the root); the isomorphism
    L(R) == G has been checked edge-for-edge before returning.
    """
    if len(graph_components(adj)) != 1:
        raise ValueError("recognition expects a connected graph")
    root = _try_root(adj, k3_root)
    if root is None:
        raise NotLineGraphError(forbidden_witness(adj))
    return root
