"""Recognition, Krausz certification, and forbidden-subgraph witnesses."""

import itertools
import random

import numpy as np
import pytest

from conftest import adj_from_edges
from freefermion.linegraph import (
    BEINEKE_GRAPHS,
    NotLineGraphError,
    forbidden_witness,
    find_isomorphism,
    graph_components,
    induced_subgraph,
    is_line_graph,
    line_graph_of,
    recognize,
    resolve_whitney_ambiguity,
    verify_krausz,
)

nx = pytest.importorskip("networkx")
from networkx.generators.line import inverse_line_graph  # noqa: E402

K3 = adj_from_edges(3, [(0, 1), (1, 2), (0, 2)])
CLAW = adj_from_edges(4, [(0, 1), (0, 2), (0, 3)])


def _nx_is_line(adjacency) -> bool:
    G = nx.Graph()
    G.add_nodes_from(range(len(adjacency)))
    for i in range(len(adjacency)):
        for j in range(i + 1, len(adjacency)):
            if adjacency[i] >> j & 1:
                G.add_edge(i, j)
    for comp in nx.connected_components(G):
        try:
            inverse_line_graph(G.subgraph(comp).copy())
        except nx.NetworkXError:
            return False
    return True


def test_triangle_roots_by_preference():
    claw_root = recognize(K3, "claw")
    assert claw_root.num_modes == 4
    tri_root = recognize(K3, "triangle")
    assert tri_root.num_modes == 3
    assert resolve_whitney_ambiguity(K3, "claw").num_modes == 4
    with pytest.raises(ValueError):
        resolve_whitney_ambiguity(adj_from_edges(3, [(0, 1), (1, 2)]), "claw")
    with pytest.raises(ValueError):
        resolve_whitney_ambiguity(K3, "pentagon")


def test_path_root():
    p3 = adj_from_edges(3, [(0, 1), (1, 2)])
    root = recognize(p3)
    # L(P4) = P3
    assert root.num_modes == 4
    degrees = sorted(r.bit_count() for r in root.adjacency())
    assert degrees == [1, 1, 2, 2]


def test_isolated_vertex_maps_to_single_edge_root():
    root = recognize((0,))
    assert root.num_modes == 2 and root.edges == ((0, 1),)


def test_claw_is_rejected_with_its_own_witness():
    with pytest.raises(NotLineGraphError) as err:
        recognize(CLAW)
    witness = err.value.witness
    assert witness.beineke_index == 1
    assert witness.verify(CLAW)


def test_recognition_is_certified_line_graph():
    for edges, modes in [
        ([(0, 1), (1, 2), (2, 3), (3, 0)], 4),  # C4 = L(C4)
        ([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], None),  # diamond = L(paw)
        ([(i, j) for i in range(4) for j in range(i + 1, 4)], 5),  # K4 = L(K1,4)
    ]:
        n = max(max(e) for e in edges) + 1
        adj = adj_from_edges(n, edges)
        root = recognize(adj)
        assert line_graph_of(root.num_modes, root.edges) == adj
        if modes is not None:
            assert root.num_modes == modes


def test_verify_krausz_on_l_k6():
    edges = sorted((i, j) for i in range(6) for j in range(i + 1, 6))
    adj = line_graph_of(6, edges)
    root = recognize(adj)
    cliques = [set(c) for c in root.krausz.cliques]
    assert len(cliques) == 6 and all(len(c) == 5 for c in cliques)
    assert verify_krausz(adj, cliques)
    # drop one edge from a clique: no longer a partition of all edges
    broken = [sorted(c) for c in cliques]
    broken[0] = broken[0][:-1]
    assert not verify_krausz(adj, broken)
    # a vertex in three cliques
    assert not verify_krausz(adj, [*cliques, {0, 1}])


def test_verify_krausz_rejects_non_edges():
    assert not verify_krausz(CLAW, [{1, 2, 3}])


def test_forbidden_witness_requires_non_line_input():
    with pytest.raises(ValueError):
        forbidden_witness(K3)


def test_witness_beyond_the_claw():
    # K5 minus an edge is claw-free but still forbidden
    edges = [(i, j) for i in range(5) for j in range(i + 1, 5) if (i, j) != (3, 4)]
    adj = adj_from_edges(5, edges)
    assert not is_line_graph(adj)
    witness = forbidden_witness(adj)
    assert witness.verify(adj)
    assert witness.beineke_index == 3


def test_planted_beineke_recovery():
    rng = random.Random(42)
    for index, (name, k, edges) in enumerate(BEINEKE_GRAPHS, start=1):
        for extra in (2, 4):
            total = k + extra
            all_edges = list(edges)
            for u in range(k, total):
                targets = rng.sample(range(u), rng.randint(1, min(3, u)))
                all_edges.extend((t, u) for t in targets)
            adj = adj_from_edges(total, all_edges)
            witness = forbidden_witness(adj)
            assert witness.verify(adj), (name, extra)


def test_hereditary_property():
    edges = sorted((i, j) for i in range(6) for j in range(i + 1, 6))
    adj = line_graph_of(6, edges)  # L(K6), 15 vertices
    for v in range(len(adj)):
        keep = [u for u in range(len(adj)) if u != v]
        assert is_line_graph(induced_subgraph(adj, keep))


def test_random_graphs_agree_with_networkx():
    rng = random.Random(7)
    checked = 0
    for _ in range(600):
        n = rng.randint(1, 9)
        G = nx.gnp_random_graph(n, rng.uniform(0.15, 0.9), seed=rng.randint(0, 10**9))
        if not nx.is_connected(G):
            continue
        adj = adj_from_edges(n, list(G.edges()))
        mine = is_line_graph(adj)
        assert mine == _nx_is_line(adj)
        if mine:
            root = recognize(adj)
            assert line_graph_of(root.num_modes, root.edges) == adj
        else:
            witness = forbidden_witness(adj)
            assert witness.verify(adj)
        checked += 1
    assert checked > 300


def test_planted_roots_recovered():
    rng = random.Random(11)
    recovered = 0
    for _ in range(120):
        v = rng.randint(4, 10)
        R = nx.gnp_random_graph(v, rng.uniform(0.25, 0.8), seed=rng.randint(0, 10**9))
        if not nx.is_connected(R):
            continue
        edges = sorted(tuple(sorted(e)) for e in R.edges())
        adj = line_graph_of(v, edges)
        if len(adj) == 3 and all(r.bit_count() == 2 for r in adj):
            continue  # triangle: ambiguous root
        root = recognize(adj)
        A = nx.Graph(list(root.edges))
        A.add_nodes_from(range(root.num_modes))
        B = nx.Graph(edges)
        B.add_nodes_from(range(v))
        assert nx.is_isomorphic(A, B)
        recovered += 1
    assert recovered > 60


def _canonical_edge_bits(n: int, perms, edge_index, bits):
    """Minimum edge bit-vector over all vertex permutations (vectorized)."""
    best = None
    for perm_map in perms:
        packed = bits[perm_map].dot(1 << np.arange(len(edge_index), dtype=np.int64))
        best = packed if best is None else np.minimum(best, packed)
    return best


def test_forbidden_family_regenerates_from_first_principles():
    """Enumerate all graphs on <= 6 vertices: the vertex-minimal non-line
    graphs must be exactly the frozen nine."""
    found = set()
    for n in (4, 5, 6):
        pairs = list(itertools.combinations(range(n), 2))
        edge_index = {e: i for i, e in enumerate(pairs)}
        # permutation action on edge slots
        perm_maps = []
        for perm in itertools.permutations(range(n)):
            perm_maps.append(
                [edge_index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs]
            )
        perm_maps = np.array(perm_maps)
        num_graphs = 1 << len(pairs)
        bits = (
            (np.arange(num_graphs, dtype=np.int64)[:, None] >> np.arange(len(pairs)))
            & 1
        ).astype(np.int64)
        weights = 1 << np.arange(len(pairs), dtype=np.int64)
        canon = None
        for pm in perm_maps:
            packed = bits[:, pm].dot(weights)
            canon = packed if canon is None else np.minimum(canon, packed)
        reps = np.unique(canon)
        for code in reps:
            edges = [pairs[i] for i in range(len(pairs)) if code >> i & 1]
            adj = adj_from_edges(n, edges)
            if len(graph_components(adj)) != 1:
                continue
            if is_line_graph(adj):
                continue
            minimal = True
            for v in range(n):
                keep = [u for u in range(n) if u != v]
                if not is_line_graph(induced_subgraph(adj, keep)):
                    minimal = False
                    break
            if minimal:
                canonical = tuple(sorted(edges))
                found.add((n, canonical))
    expected = set()
    for name, k, edges in BEINEKE_GRAPHS:
        # normalize the frozen entries the same way
        pairs = list(itertools.combinations(range(k), 2))
        best = None
        for perm in itertools.permutations(range(k)):
            cand = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
            best = cand if best is None or cand < best else best
        expected.add((k, best))
    normalized = set()
    for n, edges in found:
        best = None
        for perm in itertools.permutations(range(n)):
            cand = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
            best = cand if best is None or cand < best else best
        normalized.add((n, best))
    assert normalized == expected
    assert len(expected) == 9


def test_find_isomorphism_roundtrip():
    a = adj_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    b = adj_from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
    mapping = find_isomorphism(a, b)
    assert mapping is not None
    for i in range(5):
        for j in range(i + 1, 5):
            assert (a[i] >> j & 1) == (b[mapping[i]] >> mapping[j] & 1)
    assert find_isomorphism(a, CLAW + (0,)) is None
