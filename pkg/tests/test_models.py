"""Model generators: counts, determinism, and structural claims."""

import numpy as np
import pytest

from freefermion import models
from freefermion.errors import InputError
from freefermion.frustration import build_frustration_graph, connected_components
from freefermion.linegraph import find_isomorphism, line_graph_of, recognize
from freefermion.solver import analyze


def test_xy_chain_term_counts():
    spec = models.xy_chain(3, couplings={"xx": 1.0, "xy": 1.0, "yx": 1.0, "yy": 1.0})
    assert spec.num_terms == 8  # 4 couplings on 2 bonds, no fields
    spec = models.xy_chain(
        4, couplings={"xx": 1.0, "xy": 1.0, "yx": 1.0, "yy": 1.0},
        fields=0.5, periodic=True,
    )
    assert spec.num_terms == 4 * 4 + 4


def test_tfim_is_the_expected_instance():
    spec = models.tfim_chain(2)
    assert set(spec.term_strings()) == {"XX", "ZI", "IZ"}


def test_xy_chain_needs_two_sites():
    with pytest.raises(InputError):
        models.xy_chain(1)


def test_xy_chain_deterministic_by_seed():
    a = models.xy_chain(6, seed=12)
    b = models.xy_chain(6, seed=12)
    assert a == b
    assert a != models.xy_chain(6, seed=13)


def test_honeycomb_counts_and_validation():
    spec = models.kitaev_honeycomb(2, 2)
    assert spec.n == 8 and spec.num_terms == 12
    spec = models.kitaev_honeycomb(4, 4)
    assert spec.n == 32 and spec.num_terms == 48
    with pytest.raises(InputError):
        models.kitaev_honeycomb(1, 4)
    with pytest.raises(InputError):
        models.kitaev_honeycomb(2, 2, wrapping="mobius")


def test_honeycomb_root_is_the_interaction_graph():
    spec = models.kitaev_honeycomb(3, 2)
    g = build_frustration_graph(spec)
    root = recognize(g.adj)
    assert root.num_modes == spec.n
    assert all(r.bit_count() == 3 for r in root.adjacency())


def test_sierpinski_sizes_match_closed_forms():
    for k in range(1, 6):
        spec = models.sierpinski_hanoi(k)
        counts = models.sierpinski_counts(k)
        assert spec.n == counts["n"]
        assert spec.num_terms == counts["terms"]


def test_sierpinski_frustration_graph_is_hanoi_like():
    # depth 2: the three cells are mutually frustrated
    g = build_frustration_graph(models.sierpinski_hanoi(2))
    assert g.num_vertices == 3 and all(r.bit_count() == 2 for r in g.adj)
    # deeper: 3 corner cells of degree 2, the rest degree 3
    for k in (3, 4):
        g = build_frustration_graph(models.sierpinski_hanoi(k))
        degrees = sorted(r.bit_count() for r in g.adj)
        assert degrees.count(2) == 3
        assert degrees.count(3) == g.num_vertices - 3
        edge_count = sum(r.bit_count() for r in g.adj) // 2
        assert edge_count == 3 * (3 ** (k - 1) - 1) // 2


def test_sierpinski_field_terms():
    spec = models.sierpinski_hanoi(2, 0.3)
    singles = [w for w, c in spec.terms if w.weight == 1]
    assert len(singles) == 3  # all three shared qubits at depth 2
    spec3 = models.sierpinski_hanoi(3, 0.3)
    singles3 = [w for w, c in spec3.terms if w.weight == 1]
    assert len(singles3) == 3  # only the bridges between sub-triangles
    spec4 = models.sierpinski_hanoi(4, 0.3)
    assert sum(1 for w, _ in spec4.terms if w.weight == 1) == 12


def test_sierpinski_field_root_mode_counts_are_even():
    for k, expected in ((2, 6), (3, 12), (4, 36)):
        a = analyze(models.sierpinski_hanoi(k, 0.5))
        modes = sum(c.num_modes for c in a.components)
        assert modes == expected
        degrees = sorted(
            d for c in a.components for d in
            (row.bit_count() for row in c.root.adjacency())
        )
        assert set(degrees) <= {1, 3}


def test_planted_model_has_planted_line_graph():
    for seed in range(8):
        spec, edges = models.planted_root_model(6 + seed % 4, seed=seed)
        g = build_frustration_graph(spec)
        v = max(max(e) for e in edges) + 1
        assert g.adj == line_graph_of(v, edges)


def test_planted_six_vertices_nine_edges_recovers():
    spec, edges = models.planted_root_model(6, num_edges=9, seed=0)
    g = build_frustration_graph(spec)
    root = recognize(g.adj)
    planted_adj = tuple()
    rows = [0] * 6
    for a, b in edges:
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    assert find_isomorphism(root.adjacency(), tuple(rows)) is not None


def test_planted_model_rejects_bad_edge_counts():
    with pytest.raises(InputError):
        models.planted_root_model(5, num_edges=3)
    with pytest.raises(InputError):
        models.planted_root_model(4, num_edges=7)


def test_two_qubit_parity_is_trivial_with_filter():
    a = analyze(models.two_qubit_full_model())
    (comp,) = a.components
    assert comp.num_modes == 6
    assert comp.sym.parity is not None
    assert comp.sym.parity.in_span  # (XX)(YY)(ZZ) = -I: word reduces to identity


def test_jw_majorana_strings():
    assert models.jw_majorana(0, 3).to_string() == "XII"
    assert models.jw_majorana(1, 3).to_string() == "YII"
    assert models.jw_majorana(4, 3).to_string() == "ZZX"
    with pytest.raises(InputError):
        models.jw_majorana(6, 3)


def test_canned_examples_cover_named_set():
    canned = models.canned_examples()
    assert set(canned) == {
        "single_qubit",
        "two_qubit_full",
        "claw_obstruction",
        "twin_demo",
        "planted_6_9",
    }
