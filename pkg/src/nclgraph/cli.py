"""Command-line interface.

Subcommands: ``gen``, ``ncl``, ``invariants``, ``obstruct``, ``surface``,
``verify``, ``experiment``.  ``-`` names stdin/stdout for graph files.
Exit codes: 0 success (for ``obstruct``: no obstruction found; for
``verify``: certificate valid), 1 obstructed / invalid certificate,
2 usage or input errors.

The NCL vertex cap can be raised or lowered with the ``NCLGRAPH_NCL_CAP``
environment variable; ``NCLGRAPH_PURE=1`` forces the pure-Python kernels.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .experiments import ExperimentConfig, run_enumeration_experiment
from .generators import ETA_MODES, GraphFamilySpec
from .graph import Graph, from_edgelist_text, to_edgelist_text
from .graph6 import decode_graph6, encode_graph6
from .invariants import (
    chromatic_number,
    clique_number,
    density,
    half_graph_height,
)
from .ncl import (
    NCL_VERTEX_CAP,
    NestedComplexitySequence,
    check_certificate,
    ncl_exact,
    ncl_naive,
)
from .obstructions import OBSTRUCTED, ObstructionBudget, obstruct
from .surface import surface_params

_FAMILY_POSITIONALS = {
    "half_graph": ("n",),
    "bipartite_half_graph": ("n",),
    "multipartite": ("r", "t"),
    "marking": ("genus", "punctures"),
    "complete": ("n",),
    "edgeless": ("n",),
    "cycle": ("n",),
    "random": ("n", "edge_probability", "seed"),
}


def _ncl_cap() -> int:
    raw = os.environ.get("NCLGRAPH_NCL_CAP")
    if raw is None:
        return NCL_VERTEX_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"NCLGRAPH_NCL_CAP must be an integer, got {raw!r}") from None


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read_graph(path: str) -> Graph:
    """Load a graph, sniffing the format.

    Lines starting with a digit mean the edge-list text format; anything
    else (all graph6 bytes are >= '?') is decoded as graph6.
    """
    text = _read_text(path)
    stripped = text.lstrip()
    if stripped.startswith(">>graph6<<"):
        return decode_graph6(stripped.strip())
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line[0].isdigit():
            return from_edgelist_text(text)
        return decode_graph6(line)
    raise ValueError("empty graph input")


def _print_json(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def _print_aligned(pairs: list[tuple[str, object]]) -> None:
    width = max(len(k) for k, _ in pairs)
    for key, value in pairs:
        print(f"{key.ljust(width)}  {value}")


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_gen(args) -> int:
    family = args.family
    names = _FAMILY_POSITIONALS[family]
    if len(args.params) != len(names):
        raise ValueError(
            f"family {family!r} takes {len(names)} parameters {names}, "
            f"got {len(args.params)}"
        )
    params: dict[str, object] = {}
    for name, raw in zip(names, args.params):
        if name == "edge_probability":
            params[name] = Fraction(raw)
        else:
            params[name] = int(raw)
    if family == "marking":
        params["eta_adjacency"] = args.transversals
    g = GraphFamilySpec(family, params).build()
    if args.format == "graph6":
        text = encode_graph6(g).decode("ascii") + "\n"
    else:
        text = to_edgelist_text(g)
    _write_text(args.output, text)
    return 0


def _cmd_ncl(args) -> int:
    g = _read_graph(args.graph)
    if args.naive:
        if args.certificate:
            raise ValueError("--certificate requires the exact engine, not --naive")
        print(ncl_naive(g))
        return 0
    if g.vertex_count == 0:
        print("note: empty graph, nested complexity length reported as 0", file=sys.stderr)
    value, certificate = ncl_exact(
        g, want_certificate=args.certificate, vertex_cap=_ncl_cap()
    )
    if args.certificate:
        _print_json(
            {
                "schema_version": 1,
                "ncl": value,
                "certificate": certificate.to_json_dict() if certificate else None,
            }
        )
    else:
        print(value)
    return 0


def _cmd_invariants(args) -> int:
    g = _read_graph(args.graph)
    general_height, _ = half_graph_height(g)
    bipartite_height, _ = half_graph_height(g, bipartite_only=True)
    data = {
        "schema_version": 1,
        "vertex_count": g.vertex_count,
        "edge_count": g.edge_count,
        "density": str(density(g)) if g.vertex_count >= 2 else None,
        "clique_number": clique_number(g),
        "chromatic_number": chromatic_number(g),
        "half_graph_height_general": general_height,
        "half_graph_height_bipartite": bipartite_height,
    }
    if args.json:
        _print_json(data)
    else:
        _print_aligned([(k, v) for k, v in data.items() if k != "schema_version"])
    return 0


def _cmd_obstruct(args) -> int:
    g = _read_graph(args.graph)
    surface = surface_params(args.genus, args.punctures)
    budget = ObstructionBudget(ncl_vertices=_ncl_cap())
    report = obstruct(g, surface, budget=budget, all_tests=args.all_tests)
    if args.json:
        _print_json(report.to_json_dict())
    else:
        print(f"verdict: {report.verdict}")
        for test in report.fired_tests:
            print(
                f"fired: {test.test_name} (threshold {test.threshold}, "
                f"measured {test.measured_value})"
            )
        for key, value in report.informational.items():
            if key == "skipped_tests":
                for entry in value:
                    print(f"skipped: {entry['test_name']} ({entry['reason']})")
            else:
                print(f"info: {key} = {value}")
        for line in report.disclaimers:
            print(f"note: {line}")
    return 1 if report.verdict == OBSTRUCTED else 0


def _cmd_surface(args) -> int:
    params = surface_params(args.genus, args.punctures)
    data = params.to_json_dict()
    if args.json:
        _print_json({"schema_version": 1, **data})
    else:
        _print_aligned(list(data.items()))
    return 0


def _cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    payload = json.loads(_read_text(args.certificate))
    if isinstance(payload, dict) and "certificate" in payload:
        payload = payload["certificate"]
    cert = NestedComplexitySequence.from_json_dict(payload)
    problems = check_certificate(g, cert)
    if problems:
        print("invalid certificate:")
        for line in problems:
            print(f"  {line}")
        return 1
    print(f"valid: nested complexity sequence of length {len(cert)}")
    return 0


def _cmd_experiment(args) -> int:
    surface = surface_params(args.genus, args.punctures)
    if args.samples is None:
        cfg = ExperimentConfig(n=args.n, surface=surface, mode="exhaustive")
    else:
        cfg = ExperimentConfig(
            n=args.n,
            surface=surface,
            mode="sampled",
            sample_count=args.samples,
            seed=args.seed,
        )
    summary = run_enumeration_experiment(cfg, workers=args.workers)
    _print_json(summary.to_json_dict())
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nclgraph",
        description="Nested complexity length and curve-graph obstruction checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph from a named family")
    p.add_argument("family", choices=sorted(_FAMILY_POSITIONALS))
    p.add_argument("params", nargs="*", help="family parameters, e.g. 'multipartite 3 2'")
    p.add_argument("-o", "--output", default="-", help="output file, '-' for stdout")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p.add_argument(
        "--transversals",
        choices=ETA_MODES,
        default="all",
        help="transversal adjacency for the marking family",
    )
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("ncl", help="exact nested complexity length of a graph")
    p.add_argument("graph", help="graph file (edgelist or graph6), '-' for stdin")
    p.add_argument("--certificate", action="store_true", help="emit an optimal sequence")
    p.add_argument("--naive", action="store_true", help="use the enumeration oracle")
    p.set_defaults(func=_cmd_ncl)

    p = sub.add_parser("invariants", help="classical invariants of a graph")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("obstruct", help="run the obstruction tests for one surface")
    p.add_argument("graph")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--punctures", type=int, required=True)
    p.add_argument("--all-tests", action="store_true", help="do not stop at the first fired test")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_obstruct)

    p = sub.add_parser("surface", help="derived constants of a surface")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--punctures", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_surface)

    p = sub.add_parser("verify", help="check a nested complexity certificate")
    p.add_argument("graph")
    p.add_argument("certificate", help='JSON file {"b": [...], "a": [...]}')
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("experiment", help="batch experiments")
    exp_sub = p.add_subparsers(dest="experiment_command", required=True)
    e = exp_sub.add_parser(
        "enumerate",
        help="fraction of clique-passing graphs caught by the deeper tests",
    )
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--genus", type=int, required=True)
    e.add_argument("--punctures", type=int, required=True)
    e.add_argument("--samples", type=int, default=None, help="sampled mode (default: exhaustive)")
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--workers", type=int, default=1)
    e.set_defaults(func=_cmd_experiment)

    return parser


def cli_dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_dispatch())


if __name__ == "__main__":
    main()
