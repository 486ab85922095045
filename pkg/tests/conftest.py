"""Shared helpers: bitmask graph builders and the small-model corpus."""

from __future__ import annotations

import pytest

from freefermion import models
from freefermion.pauli import HamiltonianSpec


def adj_from_edges(n: int, edges) -> tuple[int, ...]:
    rows = [0] * n
    for a, b in edges:
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return tuple(rows)


def corpus() -> list[tuple[str, HamiltonianSpec]]:
    """Small solvable models used by property-style tests (all oracle-sized)."""
    items = [
        ("single_qubit", models.single_qubit_model()),
        ("two_qubit_full", models.two_qubit_full_model()),
        ("twin_demo", models.twin_demo_model()),
        ("tfim_2", models.tfim_chain(2)),
        ("tfim_4", models.tfim_chain(4, 1.0, 0.7)),
        ("xy_open_5", models.xy_chain(5, seed=3)),
        ("xy_open_6", models.xy_chain(6, seed=5)),
        ("xy_periodic_4", models.xy_chain(4, periodic=True, seed=4)),
        ("xy_periodic_6", models.xy_chain(6, periodic=True, seed=6)),
        ("claw_twins", models.claw_obstruction_model()),
        ("honeycomb_2x2", models.kitaev_honeycomb(2, 2, (1.0, 0.8, 0.6))),
        ("honeycomb_2x2_thin", models.kitaev_honeycomb(2, 2, (1.0, 0.8, 0.6), wrapping="thin")),
        ("honeycomb_2x3", models.kitaev_honeycomb(3, 2, (0.9, 1.1, 0.5))),
        ("sierpinski_2", models.sierpinski_hanoi(2)),
        ("sierpinski_2_field", models.sierpinski_hanoi(2, 0.3)),
        ("commuting_pair", models.validate_hamiltonian(2, [("XI", 0.4), ("IZ", -1.1)])),
    ]
    for seed in range(4):
        spec, _ = models.planted_root_model(5 + seed, seed=seed)
        items.append((f"planted_{seed}", spec))
    return items


@pytest.fixture(scope="session")
def model_corpus():
    return corpus()
