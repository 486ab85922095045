"""Command-line front end.

Exit codes: 0 success, 1 input error (or failed verification), 2 certified
obstruction (witness emitted), 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import io, models
from .errors import InputError, ObstructionError, ResourceCapError
from .solver import (
    SolveOptions,
    analyze,
    recognize_components,
    single_particle_lambdas,
    solve_full,
)
from .verify import verify_against_oracle

_CANNED = {
    "single_qubit": lambda args: models.single_qubit_model(),
    "two_qubit_full": lambda args: models.two_qubit_full_model(seed=args.seed),
    "claw_obstruction": lambda args: models.claw_obstruction_model(),
    "twin_demo": lambda args: models.twin_demo_model(),
}


def _add_model_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("model generation (alternative to --input)")
    group.add_argument(
        "--model",
        choices=[
            "xy_chain",
            "tfim",
            "kitaev_honeycomb",
            "sierpinski_hanoi",
            "planted",
            *_CANNED,
        ],
        help="generate a model instead of reading a file",
    )
    group.add_argument("--n", type=int, default=8, help="chain length")
    group.add_argument("--periodic", action="store_true")
    group.add_argument("--lx", type=int, default=2)
    group.add_argument("--ly", type=int, default=2)
    group.add_argument("--wrapping", choices=["standard", "thin"], default="standard")
    group.add_argument("--size-k", type=int, default=2, help="sieve recursion depth")
    group.add_argument("--coupling-j", type=float, default=0.0, help="sieve field strength")
    group.add_argument("--vertices", type=int, default=6, help="planted root size")
    group.add_argument("--edges", type=int, default=None, help="planted root edge count")
    group.add_argument("--seed", type=int, default=0)


def _build_model(args):
    if args.model == "xy_chain":
        return models.xy_chain(args.n, periodic=args.periodic, seed=args.seed)
    if args.model == "tfim":
        return models.tfim_chain(args.n)
    if args.model == "kitaev_honeycomb":
        return models.kitaev_honeycomb(args.lx, args.ly, wrapping=args.wrapping)
    if args.model == "sierpinski_hanoi":
        return models.sierpinski_hanoi(args.size_k, args.coupling_j)
    if args.model == "planted":
        spec, _ = models.planted_root_model(args.vertices, args.edges, args.seed)
        return spec
    return _CANNED[args.model](args)


def _load_spec(args):
    if getattr(args, "input", None):
        return io.load_hamiltonian(args.input)
    if getattr(args, "model", None):
        return _build_model(args)
    raise InputError("provide --input FILE or --model FAMILY")


def _emit_json(data, path, default_stdout=True) -> None:
    text = json.dumps(data, indent=2) + "\n"
    if path:
        Path(path).write_text(text)
    elif default_stdout:
        sys.stdout.write(text)


def _solve_options(args) -> SolveOptions:
    sector = getattr(args, "sector", "auto")
    if sector == "auto":
        sectors = "auto"
    elif sector == "zeros":
        sectors = [None]  # resolved after analysis; placeholder
    else:
        sectors = [sector]
    return SolveOptions(
        k3_root=getattr(args, "k3_root", "claw"),
        sectors=sectors,
        max_sectors=getattr(args, "max_sectors", 1 << 16),
    )


def _resolve_sectors(options: SolveOptions, analysis) -> SolveOptions:
    if options.sectors != "auto":
        options.sectors = [
            "0" * analysis.num_free_bits if s is None else s for s in options.sectors
        ]
    return options


def cmd_recognize(args) -> int:
    spec = _load_spec(args)
    try:
        parts = [
            (graph, root, None)
            for graph, root in recognize_components(spec, args.k3_root)
        ]
    except ObstructionError as err:
        _emit_json(io.witness_to_dict(err.witness, spec), args.out_json)
        print(f"obstruction: induced {err.witness.name}", file=sys.stderr)
        return 2
    modes = sum(root.num_modes for _, root, _ in parts)
    print(f"line graph: {len(parts)} component(s), {modes} fermion modes")
    _emit_json(io.krausz_to_dict(parts, spec), args.out_json, default_stdout=False)
    if args.out_dot:
        Path(args.out_dot).write_text(io.root_dot(parts, spec))
    return 0


def cmd_symmetries(args) -> int:
    spec = _load_spec(args)
    try:
        analysis = analyze(spec, args.k3_root)
    except ObstructionError as err:
        _emit_json(io.witness_to_dict(err.witness, spec), args.out_json)
        print(f"obstruction: induced {err.witness.name}", file=sys.stderr)
        return 2
    _emit_json(io.symmetry_report_to_dict(analysis), args.out_json)
    return 0


def _run_sweep(args, spec) -> int:
    try:
        param, lo, hi, step = args.sweep.split(":")
    except ValueError:
        raise InputError("--sweep expects param:lo:hi:step") from None
    if args.model != "sierpinski_hanoi" or param != "J":
        raise InputError("sweeps support --model sierpinski_hanoi with parameter J")
    reference = models.sierpinski_hanoi(args.size_k, 1.0)
    analysis = analyze(reference, args.k3_root)
    field_terms = [
        i for i, (w, _) in enumerate(reference.terms) if w.weight == 1
    ]
    values = np.arange(float(lo), float(hi) + 1e-12, float(step))
    sector = getattr(args, "sector", "zeros")
    bits = 0 if sector in ("auto", "zeros") else analysis.plan.parse_bits(sector)
    rows = [
        single_particle_lambdas(analysis, bits, {t: j for t in field_terms})
        for j in values
    ]
    if args.out_csv:
        io.write_sweep_csv(values, rows, args.out_csv, param)
        plot_path = args.out_plot or _sibling_plot(args.out_csv)
        if plot_path:
            from .plots import render_sweep_plot

            render_sweep_plot(values, rows, plot_path, param)
    else:
        for line in io.sweep_csv_lines(values, rows, param):
            print(line)
    print(f"sweep: {len(values)} points, {len(rows[0])} levels each")
    return 0


def _sibling_plot(csv_path) -> str | None:
    return str(Path(csv_path).with_suffix(".png"))


def cmd_solve(args) -> int:
    spec = _load_spec(args)
    if args.sweep:
        return _run_sweep(args, spec)
    options = _solve_options(args)
    try:
        analysis = analyze(spec, options.k3_root)
        options = _resolve_sectors(options, analysis)
        report = solve_full(spec, options)
    except ObstructionError as err:
        _emit_json(io.witness_to_dict(err.witness, spec), args.out_json)
        print(f"obstruction: induced {err.witness.name}", file=sys.stderr)
        return 2
    print(
        f"solved: {len(report.sectors)} sector(s), ground energy {report.ground_energy!r}, "
        f"n_logical {report.analysis.n_logical}"
    )
    if report.complete:
        status = "exact" if report.audit_exact() else "FAILED"
        print(f"state audit: {report.total_states} of {1 << spec.n} ({status})")
    _emit_json(io.spectrum_report_to_dict(report), args.out_json, default_stdout=False)
    if args.out_csv:
        io.write_spectrum_csv(report, args.out_csv)
        plot_path = args.out_plot or _sibling_plot(args.out_csv)
        if plot_path and not args.no_plot:
            from .plots import render_spectrum_plot

            render_spectrum_plot(report, plot_path)
    elif args.out_plot:
        from .plots import render_spectrum_plot

        render_spectrum_plot(report, args.out_plot)
    if args.out_dot:
        Path(args.out_dot).write_text(
            io.root_dot(io.analysis_root_parts(report.analysis), spec)
        )
    if args.verify:
        result = verify_against_oracle(report)
        for line in result.summary_lines():
            print(line)
        if not result.equal:
            return 1
    return 0


def cmd_verify(args) -> int:
    spec = _load_spec(args)
    options = _solve_options(args)
    try:
        analysis = analyze(spec, options.k3_root)
        options = _resolve_sectors(options, analysis)
        report = solve_full(spec, options)
    except ObstructionError as err:
        _emit_json(io.witness_to_dict(err.witness, spec), args.out_json)
        print(f"obstruction: induced {err.witness.name}", file=sys.stderr)
        return 2
    result = verify_against_oracle(report)
    for line in result.summary_lines():
        print(line)
    return 0 if result.equal else 1


def cmd_model(args) -> int:
    if not args.model:
        raise InputError("--model FAMILY is required")
    spec = _build_model(args)
    data = io.hamiltonian_to_dict(spec)
    if args.out:
        Path(args.out).write_text(json.dumps(data, indent=2) + "\n")
        print(f"wrote {args.out}: n={spec.n}, {spec.num_terms} terms")
    else:
        print(json.dumps(data, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freefermion",
        description=(
            "Decide whether a Pauli Hamiltonian maps to free fermions hopping "
            "on a graph; emit the hopping graph, symmetries, and exact spectra, "
            "or a minimal obstruction certificate."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, model_args=True):
        p.add_argument("--input", help="Hamiltonian JSON file")
        p.add_argument("--out-json", help="write the primary JSON output here")
        p.add_argument("--k3-root", choices=["claw", "triangle"], default="claw")
        if model_args:
            _add_model_arguments(p)

    p = sub.add_parser("recognize", help="certify the hopping graph or an obstruction")
    common(p)
    p.add_argument("--out-dot", help="write the root graph in DOT format")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("symmetries", help="symmetry generators and logical-qubit count")
    common(p)
    p.set_defaults(func=cmd_symmetries)

    p = sub.add_parser("solve", help="exact spectra per symmetry sector")
    common(p)
    p.add_argument("--sector", default="auto", help="'auto', 'zeros', or a bit string")
    p.add_argument("--max-sectors", type=int, default=1 << 16)
    p.add_argument("--out-csv", help="energy,multiplicity,sector table")
    p.add_argument("--out-dot", help="root graph with spanning tree highlighted")
    p.add_argument("--out-plot", help="figure path (defaults to the CSV path with .png)")
    p.add_argument("--no-plot", action="store_true", help="skip figure rendering")
    p.add_argument("--verify", action="store_true", help="cross-check against dense diagonalization")
    p.add_argument("--sweep", help="param:lo:hi:step coupling sweep (model-specific)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="compare the pipeline against dense diagonalization")
    common(p)
    p.add_argument("--sector", default="auto")
    p.add_argument("--max-sectors", type=int, default=1 << 16)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("model", help="emit a generated Hamiltonian as JSON")
    _add_model_arguments(p)
    p.add_argument("--out", help="output file (stdout when omitted)")
    p.set_defaults(func=cmd_model)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as err:
        print(f"input error: {err}", file=sys.stderr)
        return 1
    except ResourceCapError as err:
        print(f"resource cap: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
