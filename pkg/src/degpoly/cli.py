"""Command-line interface.

Subcommands: ``dp`` (degree polynomials of a graph), ``family`` (standard
family sequences), ``op`` (the five graph operations, optionally verified
against their closed forms), ``check`` (necessary conditions on a
sequence), ``realize`` (exhaustive realizability search) and ``classify``
(all sequences at a fixed order).

Exit codes: 0 success, 1 usage or data errors, 2 for a checked-and-negative
verdict (a failed condition or a proven-unrealizable sequence).  Output is
deterministic for fixed inputs and flags; ``--format structured`` prints a
single JSON object.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from . import dp as dp_mod
from . import graphs
from . import realizability as realize_mod
from .dp import PolySequence, dp_report, verify_operation
from .errors import DegpolyError
from .graphs import OpKind, SimpleGraph, emit_dot, from_edge_list
from .poly import format_poly

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE = 2

ENV_MAX_N = "DEGPOLY_MAX_N"


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on usage errors; the CLI reserves 2 for
    negative verdicts, so remap usage failures to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: usage: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _default_max_n() -> int:
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return realize_mod.DEFAULT_SEARCH_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise DegpolyError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="degpoly", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="output format (structured prints one JSON object)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dp = sub.add_parser("dp", help="degree polynomials of a graph")
    p_dp.add_argument("graph", help="edge-list file path or inline edge list")

    p_family = sub.add_parser("family", help="degree polynomial sequence of a family")
    p_family.add_argument("kind", choices=graphs.FAMILY_KINDS)
    p_family.add_argument("params", nargs="+", type=int)
    p_family.add_argument(
        "--closed-form",
        action="store_true",
        help="use the closed form instead of building the graph",
    )

    p_op = sub.add_parser("op", help="apply a graph operation")
    p_op.add_argument("kind", choices=[k.value for k in OpKind])
    p_op.add_argument("graph1", help="edge-list file path or inline edge list")
    p_op.add_argument("graph2", nargs="?", help="second operand (binary operations)")
    p_op.add_argument(
        "--verify",
        action="store_true",
        help="check every vertex against the closed-form formula",
    )
    p_op.add_argument("--dot", action="store_true", help="emit the result as DOT")

    p_check = sub.add_parser("check", help="necessary conditions on a sequence")
    p_check.add_argument("sequence", help="sequence file path or inline sequence")

    p_realize = sub.add_parser("realize", help="exhaustive realizability search")
    p_realize.add_argument("sequence", help="sequence file path or inline sequence")
    p_realize.add_argument("--max-n", type=int, default=None, help="search bound")
    p_realize.add_argument(
        "--all",
        action="store_true",
        help="collect every isomorphism class instead of stopping at the first witness",
    )
    p_realize.add_argument("--dot", action="store_true", help="emit witnesses as DOT")
    p_realize.add_argument("--workers", type=int, default=1)

    p_classify = sub.add_parser(
        "classify", help="all degree polynomial sequences at one order"
    )
    p_classify.add_argument("--n", type=int, required=True)
    p_classify.add_argument("--workers", type=int, default=1)

    return parser


def _read_input(arg: str) -> str:
    """An argument naming an existing file is read from disk; anything else
    is taken as inline literal content."""
    path = Path(arg)
    try:
        if path.is_file():
            return path.read_text()
    except OSError:
        pass
    return arg


def _load_graph(arg: str) -> SimpleGraph:
    result = from_edge_list(_read_input(arg))
    for u, v in result.duplicate_edges:
        labels = result.graph.labels
        print(
            f"warning: duplicate edge {labels[u]} {labels[v]} collapsed",
            file=sys.stderr,
        )
    return result.graph


def _load_sequence(arg: str) -> PolySequence:
    text = _read_input(arg).strip()
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DegpolyError(f"bad structured sequence: {exc}") from None
        return PolySequence.from_pairs(data)
    return PolySequence.parse(text)


def _emit(obj: dict, lines: list[str], structured: bool) -> None:
    if structured:
        print(json.dumps(obj, separators=(",", ":")))
    else:
        for line in lines:
            print(line)


def _cmd_dp(args) -> int:
    g = _load_graph(args.graph)
    report = dp_report(g)
    lines = []
    for v in range(g.n):
        lines.append(
            f"vertex {g.labels[v]}: degree {g.degree(v)}, "
            f"dp = {format_poly(report.vertex_polys[v])}"
        )
    lines.append(f"dp(G) = {format_poly(report.graph_poly)}")
    if report.sequence is not None:
        lines.append(f"sequence: {report.sequence}")
        if report.regular_r is not None:
            lines.append(f"regular: r = {report.regular_r}")
    else:
        isolated = ", ".join(g.labels[v] for v in g.isolated_vertices())
        lines.append(f"sequence: unavailable (isolated vertices: {isolated})")
    _emit({"command": "dp", **report.to_dict()}, lines, args.format == "structured")
    return EXIT_OK


def _cmd_family(args) -> int:
    if args.closed_form:
        seq = dp_mod.closed_form_sequence(args.kind, *args.params)
        graph_dict = None
        lines = [f"sequence: {seq}"]
    else:
        g = graphs.family(args.kind, *args.params)
        seq = dp_mod.degree_polynomial_sequence(g)
        graph_dict = g.to_dict()
        lines = [
            f"graph: {g.n} vertices, {g.edge_count} edges",
            f"sequence: {seq}",
        ]
    obj = {
        "command": "family",
        "kind": args.kind,
        "params": args.params,
        "closed_form": args.closed_form,
        "graph": graph_dict,
        "sequence": seq.to_pairs(),
    }
    _emit(obj, lines, args.format == "structured")
    return EXIT_OK


def _cmd_op(args) -> int:
    op = OpKind(args.kind)
    g = _load_graph(args.graph1)
    h: Optional[SimpleGraph] = None
    if op is OpKind.COMPLEMENT:
        if args.graph2 is not None:
            raise DegpolyError("complement takes a single graph")
    else:
        if args.graph2 is None:
            raise DegpolyError(f"{op.value} takes two graphs")
        h = _load_graph(args.graph2)

    check = verify_operation(op, g, h) if args.verify else None
    result = check.result if check else graphs.apply_operation(op, g, h)

    lines = [f"result: {result.n} vertices, {result.edge_count} edges"]
    if args.dot:
        lines.append(emit_dot(result).rstrip("\n"))
    else:
        lines.extend(
            f"{result.labels[u]} {result.labels[v]}" for u, v in result.edges()
        )
    obj = {
        "command": "op",
        "kind": op.value,
        "result": result.to_dict(),
    }
    exit_code = EXIT_OK
    if check is not None:
        matched = sum(1 for c in check.checks if c.match)
        lines.append(f"{matched}/{check.vertices_checked} vertices match formula")
        obj["verify"] = check.to_dict()
        if not check.ok:
            exit_code = EXIT_NEGATIVE
    _emit(obj, lines, args.format == "structured")
    return exit_code


def _condition_lines(report) -> list[str]:
    lines = [
        f"(a) {'PASS' if report.cond_a_pass else 'FAIL'}"
        f" (degree total {report.degree_total})",
    ]
    if report.cond_b_pass:
        lines.append("(b) PASS")
    else:
        j, e, c = report.cond_b_violation
        lines.append(f"(b) FAIL (entry {j + 1}: term {c}*x^{e} lacks partners)")
    lines.append(
        f"(c) {'PASS' if report.cond_c_pass else 'FAIL'}"
        f" (even-exponent sums: odd class {report.odd_class_even_exponent_sum},"
        f" even class {report.even_class_even_exponent_sum})"
    )
    projection = ",".join(str(x) for x in report.projection)
    graphical = "graphical" if report.projection_graphical else "not graphical"
    lines.append(f"projection ({projection}): {graphical}")
    return lines


def _cmd_check(args) -> int:
    seq = _load_sequence(args.sequence)
    report = realize_mod.necessary_conditions(seq)
    lines = [f"sequence: {seq}"]
    lines.extend(_condition_lines(report))
    lines.append("verdict: " + ("conditions pass" if report.all_pass
                                else f"not realizable (condition {report.first_failure()})"))
    obj = {"command": "check", "sequence": seq.to_pairs(), **report.to_dict()}
    _emit(obj, lines, args.format == "structured")
    return EXIT_OK if report.all_pass else EXIT_NEGATIVE


def _cmd_realize(args) -> int:
    seq = _load_sequence(args.sequence)
    max_n = args.max_n if args.max_n is not None else _default_max_n()
    report = realize_mod.realize(
        seq,
        max_n=max_n,
        want_all_witnesses=args.all,
        workers=max(1, args.workers),
    )
    lines = [f"sequence: {seq}"]
    lines.extend(_condition_lines(report.conditions))
    if report.searched:
        scope = "exhaustive" if report.exhaustive else "stopped early"
        lines.append(f"{report.nonisomorphic_count} witnesses ({scope})")
        for i, w in enumerate(report.witnesses):
            if args.dot:
                lines.append(emit_dot(w.graph()).rstrip("\n"))
            else:
                edges = " ".join(f"{u}-{v}" for u, v in w.edges)
                lines.append(f"witness {i + 1}: {edges}")
    lines.append(f"verdict: {report.reason}")
    obj = {"command": "realize", **report.to_dict()}
    _emit(obj, lines, args.format == "structured")
    if report.realizable is False:
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_classify(args) -> int:
    classified = realize_mod.classify_all(args.n, workers=max(1, args.workers))
    lines = [f"{len(classified)} distinct sequences on {args.n} vertices"]
    for entry in classified:
        lines.append(f"{entry.isomorphism_classes} class(es): {entry.sequence}")
    obj = {
        "command": "classify",
        "n": args.n,
        "sequences": [entry.to_dict() for entry in classified],
    }
    _emit(obj, lines, args.format == "structured")
    return EXIT_OK


_HANDLERS = {
    "dp": _cmd_dp,
    "family": _cmd_family,
    "op": _cmd_op,
    "check": _cmd_check,
    "realize": _cmd_realize,
    "classify": _cmd_classify,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except DegpolyError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
