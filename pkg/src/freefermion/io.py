"""File formats: Hamiltonian JSON, report JSON/CSV, and DOT exports.

The Hamiltonian schema is the CLI contract:
    {"n": <int>, "terms": [{"pauli": "<string over IXYZ>", "coeff": <float>}, ...]}
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError
from .frustration import FrustrationGraph
from .linegraph import ObstructionWitness
from .pauli import HamiltonianSpec, validate_hamiltonian
from .solver import ComponentAnalysis, ModelAnalysis, SpectrumReport


def hamiltonian_to_dict(spec: HamiltonianSpec) -> dict:
    return {
        "n": spec.n,
        "terms": [
            {"pauli": word.to_string(), "coeff": coeff} for word, coeff in spec.terms
        ],
    }


def hamiltonian_from_dict(data) -> HamiltonianSpec:
    if not isinstance(data, dict):
        raise InputError("Hamiltonian file must hold a JSON object")
    try:
        n = data["n"]
        raw_terms = data["terms"]
    except (KeyError, TypeError) as err:
        raise InputError(f"missing Hamiltonian field: {err}") from None
    if not isinstance(n, int):
        raise InputError("'n' must be an integer")
    if not isinstance(raw_terms, list) or not raw_terms:
        raise InputError("'terms' must be a non-empty list")
    terms = []
    for k, entry in enumerate(raw_terms):
        if not isinstance(entry, dict) or "pauli" not in entry or "coeff" not in entry:
            raise InputError(f"term {k} must be an object with 'pauli' and 'coeff'")
        pauli = entry["pauli"]
        coeff = entry["coeff"]
        if not isinstance(pauli, str):
            raise InputError(f"term {k}: 'pauli' must be a string")
        if isinstance(coeff, bool) or not isinstance(coeff, (int, float)):
            raise InputError(f"term {k}: 'coeff' must be a real number")
        terms.append((pauli, float(coeff)))
    return validate_hamiltonian(n, terms)


def load_hamiltonian(path) -> HamiltonianSpec:
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise InputError(f"cannot read {path}: {err}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError(f"malformed JSON in {path}: {err}") from None
    return hamiltonian_from_dict(data)


def save_hamiltonian(spec: HamiltonianSpec, path) -> None:
    Path(path).write_text(json.dumps(hamiltonian_to_dict(spec), indent=2) + "\n")


def witness_to_dict(witness: ObstructionWitness, spec: HamiltonianSpec | None = None) -> dict:
    """Witness JSON; vertices become Pauli strings when a Hamiltonian is known."""
    if spec is not None:
        vertices = [spec.terms[v][0].to_string() for v in witness.vertices]
        mapping = [spec.terms[v][0].to_string() for v in witness.mapping]
    else:
        vertices = list(witness.vertices)
        mapping = list(witness.mapping)
    return {
        "vertices": vertices,
        "beineke_index": witness.beineke_index,
        "name": witness.name,
        "isomorphism": mapping,
    }


def symmetry_report_to_dict(analysis: ModelAnalysis) -> dict:
    report = analysis.symmetry_report()
    gens = []
    for gen in analysis.ledger.free:
        gens.append(
            {
                "kind": gen.kind,
                "component": gen.component,
                "pauli": "+" + gen.word.to_string(),
            }
        )
    parities = []
    for comp, product, independent in report.parity_words:
        parities.append(
            {
                "component": comp,
                "pauli": product.word.to_string(),
                "independent": independent,
            }
        )
    return {
        "n": report.n,
        "num_terms": report.num_terms,
        "fermionic_qubits": report.fermionic_qubits,
        "independent_symmetry_count": report.center_size,
        "n_logical": report.n_logical,
        "cycle_rank": report.cycle_rank,
        "free_generators": gens,
        "parity_operators": parities,
        "sector_bit_labels": list(report.free_labels),
        "components": [
            {
                "terms": [analysis.spec.terms[t][0].to_string() for t in c.term_ids],
                "modes": c.num_modes,
                "cycles": c.sym.cycle_rank,
                "has_parity_operator": c.sym.parity is not None,
                "parity_trivial_in_sector": (
                    c.sym.parity.in_span if c.sym.parity is not None else None
                ),
            }
            for c in analysis.components
        ],
    }


def spectrum_report_to_dict(report: SpectrumReport) -> dict:
    analysis = report.analysis
    return {
        "n": analysis.spec.n,
        "n_logical": analysis.n_logical,
        "independent_symmetry_count": analysis.center_size,
        "ground_energy": report.ground_energy,
        "sector_bit_labels": list(analysis.plan.labels()),
        "sectors": {
            sol.label: [[e, c] for e, c in sol.energies] for sol in report.sectors
        },
        "sector_ground_energies": {s.label: s.ground_energy for s in report.sectors},
        "audit": {
            "complete_enumeration": report.complete,
            "total_states": report.total_states,
            "expected_states": 1 << analysis.spec.n,
            "exact": report.audit_exact(),
        },
    }


def spectrum_csv_lines(report: SpectrumReport) -> list[str]:
    lines = ["energy,multiplicity,sector"]
    for sector in report.sectors:
        label = sector.label or "-"
        for energy, count in sector.energies:
            lines.append(f"{energy!r},{count},{label}")
    return lines


def write_spectrum_csv(report: SpectrumReport, path) -> None:
    Path(path).write_text("\n".join(spectrum_csv_lines(report)) + "\n")


def sweep_csv_lines(values, lam_rows, param_name: str = "J") -> list[str]:
    width = len(lam_rows[0]) if lam_rows else 0
    header = [param_name] + [f"lambda_{i + 1}" for i in range(width)]
    lines = [",".join(header)]
    for value, lams in zip(values, lam_rows):
        lines.append(",".join([repr(float(value))] + [repr(float(x)) for x in lams]))
    return lines


def write_sweep_csv(values, lam_rows, path, param_name: str = "J") -> None:
    Path(path).write_text("\n".join(sweep_csv_lines(values, lam_rows, param_name)) + "\n")


def frustration_dot(graph: FrustrationGraph) -> str:
    lines = ["graph frustration {"]
    for i in range(graph.num_vertices):
        lines.append(f'  v{i} [label="{graph.word(i).to_string()}"];')
    for i, j in graph.edges():
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def root_dot(parts, spec: HamiltonianSpec) -> str:
    """Root graphs of components, spanning-tree edges (when known) drawn bold.

    ``parts`` holds (graph, root, tree_terms or None) triples; vertices of
    each graph must carry term ids into ``spec``.
    """
    lines = ["graph root {"]
    for index, (graph, root, tree) in enumerate(parts):
        prefix = f"c{index}m"
        for mode in range(root.num_modes):
            lines.append(f'  {prefix}{mode} [label="{mode}"];')
        for t, (a, b) in enumerate(root.edges):
            label = spec.terms[graph.term_ids[t]][0].to_string()
            style = " style=bold penwidth=2" if tree and t in tree else ""
            lines.append(f'  {prefix}{a} -- {prefix}{b} [label="{label}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def analysis_root_parts(analysis: ModelAnalysis):
    return [
        (c.graph, c.root, c.sym.tree.tree_terms) for c in analysis.components
    ]


def krausz_to_dict(parts, spec: HamiltonianSpec) -> dict:
    out = []
    for index, (graph, root, _) in enumerate(parts):
        cliques = [
            sorted(spec.terms[graph.term_ids[v]][0].to_string() for v in clique)
            for clique in root.krausz.cliques
        ]
        out.append(
            {
                "component": index,
                "modes": root.num_modes,
                "cliques": cliques,
                "edges": [
                    {
                        "pauli": spec.terms[graph.term_ids[t]][0].to_string(),
                        "modes": list(root.edges[t]),
                    }
                    for t in range(root.num_edges)
                ],
            }
        )
    return {"components": out}
