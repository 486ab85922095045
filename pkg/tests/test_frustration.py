"""Frustration graph construction, components, and twin reduction."""

import numpy as np
import pytest

from freefermion import models
from freefermion.frustration import (
    build_frustration_graph,
    connected_components,
    reduce_twins,
    twin_classes,
)
from freefermion.linegraph import recognize
from freefermion.oracle import (
    compare_multisets,
    expand_multiplicities,
    projected_spectrum,
)
from freefermion.pauli import symplectic_inner, validate_hamiltonian
from freefermion.sectors import signed_generator
from freefermion.solver import solve_full


def test_single_qubit_graph_is_triangle():
    g = build_frustration_graph(models.single_qubit_model())
    assert g.num_vertices == 3
    assert all(row.bit_count() == 2 for row in g.adj)


def test_two_qubit_graph_is_line_graph_of_k6():
    g = build_frustration_graph(models.two_qubit_full_model())
    assert g.num_vertices == 15
    root = recognize(g.adj)
    assert root.num_modes == 6
    assert all(row.bit_count() == 8 for row in g.adj)  # L(K6) is 8-regular


def test_claw_model_graph_is_claw_centered_on_xxx():
    spec = models.claw_obstruction_model()
    g = build_frustration_graph(spec)
    degrees = {g.word(i).to_string(): g.adj[i].bit_count() for i in range(4)}
    assert degrees == {"XXX": 3, "YII": 1, "IYI": 1, "IIY": 1}


def test_components_examples():
    g = build_frustration_graph(models.single_qubit_model())
    assert len(connected_components(g)) == 1

    spec = validate_hamiltonian(2, [("XI", 1.0), ("IZ", 1.0)])
    comps = connected_components(build_frustration_graph(spec))
    assert [c.num_vertices for c in comps] == [1, 1]

    # two disjoint anticommuting pairs
    spec = validate_hamiltonian(
        4, [("XXII", 1.0), ("ZIII", 1.0), ("IIXX", 1.0), ("IIIZ", 1.0)]
    )
    comps = connected_components(build_frustration_graph(spec))
    assert sorted(c.num_vertices for c in comps) == [2, 2]


def test_twin_classes_of_twin_demo():
    spec = models.twin_demo_model()
    g = build_frustration_graph(spec)
    classes = {
        frozenset(spec.terms[t][0].to_string() for t in cls)
        for cls in twin_classes(g)
    }
    assert classes == {frozenset({"XX", "YY"}), frozenset({"ZI", "IZ"})}


def test_single_qubit_has_no_twins():
    assert twin_classes(build_frustration_graph(models.single_qubit_model())) == []


def test_thin_honeycomb_twins_pair_doubled_links():
    spec = models.kitaev_honeycomb(2, 2, wrapping="thin")
    g = build_frustration_graph(spec)
    classes = twin_classes(g)
    assert len(classes) == 4
    big = [cls for cls in classes if len(cls) == 4]
    assert len(big) == 2
    for cls in big:
        # each doubly-linked qubit pair carries an XX and a YY twin term
        supports = {}
        for t in cls:
            word = spec.terms[t][0]
            body = "".join(c for c in word.to_string() if c != "I")
            supports.setdefault(word.support, set()).add(body)
        assert all(bodies == {"XX", "YY"} for bodies in supports.values())


def test_reduce_twins_folds_coefficients_with_sector_sign():
    spec = models.twin_demo_model()
    g = build_frustration_graph(spec)
    for bits, sign in ((0, 1), (1, -1)):
        reduced, graph, reduction = reduce_twins(g, bits)
        coeffs = dict(zip(reduced.term_strings(), reduced.coefficients()))
        # sigma^XX sigma^YY = -ZZ, so folding YY into XX carries -(sector value)
        assert coeffs["XX"] == pytest.approx(1.0 - sign * 0.5)
        assert coeffs["ZI"] == pytest.approx(1.0 + sign * 1.0)
        assert graph.num_vertices == 2
    with pytest.raises(ValueError):
        reduce_twins(g, "01")  # only one independent generator


def test_reduce_twins_identity_on_twin_free_input():
    g = build_frustration_graph(models.single_qubit_model())
    reduced, graph, reduction = reduce_twins(g, 0)
    assert reduced.term_strings() == g.spec.term_strings()
    assert reduction.removals == ()


def test_three_mutual_twins_yield_two_generators():
    spec = models.claw_obstruction_model()
    g = build_frustration_graph(spec)
    _, graph, reduction = reduce_twins(g, 0)
    assert len(reduction.removals) == 2
    assert len({r.generator.free_index for r in reduction.removals}) == 2
    assert graph.num_vertices == 2


def test_twin_generators_commute_with_every_term(model_corpus):
    for name, spec in model_corpus:
        g = build_frustration_graph(spec)
        _, _, reduction = reduce_twins(g, 0)
        for gen in reduction.generators:
            for word, _ in spec.terms:
                assert symplectic_inner(gen.word, word) == 0, (name, gen.word)


def test_twin_sector_spectra_match_projected_oracle():
    """Spectra of the reduced model in each sector equal the projected dense spectra."""
    spec = models.twin_demo_model()
    report = solve_full(spec)
    ledger = report.analysis.ledger
    for sector in report.sectors:
        stabs = [
            (signed_generator(gen, 1), ledger.value(gen, sector.bits))
            for gen in report.analysis.plan.free_generators
        ]
        ref = projected_spectrum(spec, stabs)
        mine = expand_multiplicities(sector.energies)
        assert compare_multisets(mine, ref, 1e-8).equal


def test_twin_sector_state_counts_cover_full_space(model_corpus):
    for name, spec in model_corpus:
        report = solve_full(spec)
        assert report.total_states == 1 << spec.n, name
