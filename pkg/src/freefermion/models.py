"""Deterministic model generators used by the CLI and the test corpus."""

from __future__ import annotations

import math

import numpy as np

from .errors import InputError
from .pauli import HamiltonianSpec, PauliWord, multiply, validate_hamiltonian

_XY_TYPES = (("x", "x"), ("x", "y"), ("y", "x"), ("y", "y"))
_CHAR_MASKS = {"x": (1, 0), "y": (1, 1), "z": (0, 1)}


def _word(n: int, sites_types) -> PauliWord:
    x = z = 0
    for site, typ in sites_types:
        xb, zb = _CHAR_MASKS[typ]
        x |= xb << site
        z |= zb << site
    return PauliWord(n, x, z)


def xy_chain(
    n: int,
    couplings=None,
    fields=None,
    periodic: bool = False,
    seed: int | None = 0,
) -> HamiltonianSpec:
    """Nearest-neighbor chain with all four XX/XY/YX/YY bond types plus Z fields.

    ``couplings`` maps 'xx'/'xy'/'yx'/'yy' to a scalar or a per-bond array
    (n-1 bonds, one more when periodic); ``fields`` is a scalar or length-n
    array of Z coefficients.  With ``couplings=None`` every bond coupling
    and field is drawn from a seeded standard normal.
    """
    if n < 2:
        raise InputError("chain needs at least 2 qubits")
    bonds = [(j, j + 1) for j in range(n - 1)]
    if periodic:
        bonds.append((n - 1, 0))
    rng = np.random.default_rng(seed)
    random_model = couplings is None
    couplings = couplings or {}
    terms = []
    for key in ("xx", "xy", "yx", "yy"):
        if random_model:
            values = rng.standard_normal(len(bonds))
        else:
            raw = couplings.get(key, 0.0)
            values = np.broadcast_to(np.asarray(raw, dtype=float), (len(bonds),))
        a, b = key[0], key[1]
        for (i, j), value in zip(bonds, values):
            if value != 0.0:
                terms.append((_word(n, [(i, a), (j, b)]), float(value)))
    if random_model:
        field_values = rng.standard_normal(n)
    else:
        field_values = np.broadcast_to(np.asarray(fields if fields is not None else 0.0, dtype=float), (n,))
    for j, value in enumerate(field_values):
        if value != 0.0:
            terms.append((_word(n, [(j, "z")]), float(value)))
    return validate_hamiltonian(n, terms)


def tfim_chain(n: int = 2, j: float = 1.0, g: float = 1.0) -> HamiltonianSpec:
    """Transverse-field Ising chain: j XX bonds plus g Z fields."""
    return xy_chain(n, couplings={"xx": j}, fields=g)


def kitaev_honeycomb(
    lx: int, ly: int, j_couplings=(1.0, 1.0, 1.0), wrapping: str = "standard"
) -> HamiltonianSpec:
    """Honeycomb torus with XX/YY/ZZ links along the three compass directions.

    Sublattice A of unit cell (row i, column j) is qubit 2*(i*lx + j), its
    B partner the next index.  The default wrapping uses the primitive
    identification: z couples A(i, j) to B(i, j), x to B(i, j-1), y to
    B(i-1, j); the interaction graph is simple and connected for all
    lx, ly >= 2.  ``wrapping='thin'`` instead routes x and y links to
    B(i, j+1) and B(i, j-1): a sheared identification under which the
    lx=2 torus acquires doubly-linked qubit pairs, so the x and y terms
    there become twin vertices of the frustration graph.
    """
    if lx < 2 or ly < 2:
        raise InputError("honeycomb torus needs lx, ly >= 2")
    n = 2 * lx * ly

    def a_site(i, j):
        return 2 * ((i % ly) * lx + (j % lx))

    def b_site(i, j):
        return a_site(i, j) + 1

    jx, jy, jz = (
        (j_couplings, j_couplings, j_couplings)
        if np.isscalar(j_couplings)
        else j_couplings
    )
    terms = []
    for i in range(ly):
        for j in range(lx):
            if wrapping == "standard":
                x_pair = (a_site(i, j), b_site(i, j - 1))
                y_pair = (a_site(i, j), b_site(i - 1, j))
                z_pair = (a_site(i, j), b_site(i, j))
            elif wrapping == "thin":
                x_pair = (a_site(i, j), b_site(i, j + 1))
                y_pair = (a_site(i, j), b_site(i, j - 1))
                z_pair = (a_site(i, j), b_site(i - 1, j))
            else:
                raise InputError(f"unknown wrapping {wrapping!r}")
            terms.append((_word(n, [(x_pair[0], "x"), (x_pair[1], "x")]), jx))
            terms.append((_word(n, [(y_pair[0], "y"), (y_pair[1], "y")]), jy))
            terms.append((_word(n, [(z_pair[0], "z"), (z_pair[1], "z")]), jz))
    return validate_hamiltonian(n, terms)


def _sierpinski_cells(k: int):
    """Upward unit cells of the depth-k sieve as (top, bottom-left, bottom-right)."""
    cells = []

    def subdivide(r, c, size):
        if size == 1:
            cells.append(((r, c), (r + 1, c), (r + 1, c + 1)))
            return
        half = size // 2
        subdivide(r, c, half)
        subdivide(r + half, c, half)
        subdivide(r + half, c + half, half)

    subdivide(0, 0, 1 << (k - 1))
    return cells


def sierpinski_hanoi(k: int, field: float = 0.0) -> HamiltonianSpec:
    """Three-body XYZ terms on the shaded cells of the depth-k sieve.

    Every cell acts with X on its top vertex, Y on the bottom-left, Z on
    the bottom-right.  With ``field`` nonzero, single-qubit terms are
    added on qubits shared between two cells, each carrying the third
    Pauli type; at k >= 3 only the qubits bridging different sub-triangles
    take a field (a field inside a fully mutually-frustrated triple has no
    quadratic fermion image).
    """
    if k < 1:
        raise InputError("recursion depth must be >= 1")
    cells = _sierpinski_cells(k)
    coords = sorted({v for cell in cells for v in cell})
    qubit = {v: i for i, v in enumerate(coords)}
    n = len(coords)
    types = ("x", "y", "z")
    terms = []
    acting: dict[int, list[tuple[int, str]]] = {}
    for ci, cell in enumerate(cells):
        sites_types = [(qubit[v], t) for v, t in zip(cell, types)]
        terms.append((_word(n, sites_types), 1.0))
        for site, t in sites_types:
            acting.setdefault(site, []).append((ci, t))
    if field != 0.0:
        shared = {q: lst for q, lst in acting.items() if len(lst) == 2}
        neighbors: dict[int, set[int]] = {ci: set() for ci in range(len(cells))}
        for (c1, _), (c2, _) in shared.values():
            neighbors[c1].add(c2)
            neighbors[c2].add(c1)
        for q in sorted(shared):
            (c1, t1), (c2, t2) = shared[q]
            if k >= 3 and neighbors[c1] & neighbors[c2]:
                continue  # the two cells close a triangle with a third cell
            third = ({"x", "y", "z"} - {t1, t2}).pop()
            terms.append((_word(n, [(q, third)]), field))
    return validate_hamiltonian(n, terms)


def sierpinski_counts(k: int) -> dict[str, int]:
    """Closed-form size counts for the field-free sieve model.

    ``n_logical_closed_form`` is the naive closed-form count; for even k
    it exceeds the generator-derived value by one, so the solver's counted
    value is authoritative.
    """
    n = 3 * (3 ** (k - 1) + 1) // 2
    modes = 2 if k == 1 else (5 * 3 ** (k - 2) + 3) // 2
    cycles = 0 if k <= 2 else (3 ** (k - 2) - 1) // 2
    if k == 1:
        n_logical = 2
    else:
        n_logical = (11 * 3 ** (k - 2) + 8 + (-1) ** k) // 4
    return {
        "n": n,
        "terms": 3 ** (k - 1),
        "modes": modes,
        "cycles": cycles,
        "n_logical_closed_form": n_logical,
    }


def jw_majorana(index: int, n: int) -> PauliWord:
    """Majorana mode 2q (Z..ZX) or 2q+1 (Z..ZY) of the standard chain encoding."""
    q, odd = divmod(index, 2)
    if q >= n:
        raise InputError("Majorana index out of range")
    sites = [(m, "z") for m in range(q)]
    sites.append((q, "y" if odd else "x"))
    return _word(n, sites)


def planted_root_model(
    num_vertices: int,
    num_edges: int | None = None,
    seed: int = 0,
    extra_edge_prob: float = 0.35,
):
    """Random connected graph mapped edge-by-edge to Majorana bilinears.

    Every edge (p, q) becomes the chain-encoded image of i*gamma_p*gamma_q
    with a seeded normal coupling, so the frustration graph of the result
    is the line graph of the planted root by construction.

    Returns (spec, edges) with edges the planted root's edge list.
    """
    if num_vertices < 2:
        raise InputError("planted root needs at least 2 vertices")
    rng = np.random.default_rng(seed)
    edges = _random_connected_graph(num_vertices, num_edges, extra_edge_prob, rng)
    n = (num_vertices + 1) // 2
    terms = []
    for p, q in edges:
        prod = multiply(jw_majorana(p, n), jw_majorana(q, n))
        sign = 1 if (prod.phase_power + 1) % 4 == 0 else -1
        coupling = float(rng.standard_normal())
        if coupling == 0.0:
            coupling = 1.0
        terms.append((prod.word, sign * coupling))
    return validate_hamiltonian(n, terms), edges


def _random_connected_graph(v: int, num_edges, extra_prob: float, rng) -> list[tuple[int, int]]:
    edges = set()
    for node in range(1, v):
        edges.add((int(rng.integers(0, node)), node))
    all_pairs = [(i, j) for i in range(v) for j in range(i + 1, v)]
    if num_edges is None:
        for pair in all_pairs:
            if pair not in edges and rng.random() < extra_prob:
                edges.add(pair)
    else:
        if num_edges < v - 1 or num_edges > len(all_pairs):
            raise InputError("edge count incompatible with a connected simple graph")
        candidates = [p for p in all_pairs if p not in edges]
        extra = num_edges - len(edges)
        chosen = rng.choice(len(candidates), size=extra, replace=False) if extra else []
        for idx in chosen:
            edges.add(candidates[int(idx)])
    return sorted(edges)


def single_qubit_model(hx: float = 1.0, hy: float = 0.7, hz: float = -0.3) -> HamiltonianSpec:
    return validate_hamiltonian(1, [("X", hx), ("Y", hy), ("Z", hz)])


def two_qubit_full_model(seed: int = 7) -> HamiltonianSpec:
    """All fifteen non-identity two-qubit words with seeded couplings."""
    rng = np.random.default_rng(seed)
    terms = []
    for a in "IXYZ":
        for b in "IXYZ":
            if a == b == "I":
                continue
            terms.append((a + b, float(rng.standard_normal())))
    return validate_hamiltonian(2, terms)


def claw_obstruction_model() -> HamiltonianSpec:
    """Four terms whose frustration graph is the claw."""
    return validate_hamiltonian(
        3, [("XXX", 1.0), ("YII", 0.8), ("IYI", 0.6), ("IIY", -0.4)]
    )


def twin_demo_model() -> HamiltonianSpec:
    return validate_hamiltonian(
        2, [("XX", 1.0), ("YY", 0.5), ("ZI", 1.0), ("IZ", 1.0)]
    )


def canned_examples() -> dict[str, HamiltonianSpec]:
    """Named small models exercised throughout the test corpus."""
    planted, _ = planted_root_model(6, num_edges=9, seed=0)
    return {
        "single_qubit": single_qubit_model(),
        "two_qubit_full": two_qubit_full_model(),
        "claw_obstruction": claw_obstruction_model(),
        "twin_demo": twin_demo_model(),
        "planted_6_9": planted,
    }
