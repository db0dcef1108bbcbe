"""Command-line interface.

Commands:
    spectrum   closed-form and/or numeric spectrum of a family matrix
    matrix     dump a family matrix as text, CSV, or JSON
    quotient   canonical equitable quotient and its eigenvalues
    tables     recompute the bundled reference tables, flagging mismatches
    verify     closed-form vs numeric sweep over a parameter grid
    export     write a graph as an edge list or in DOT format

Families are ``fan`` (m hubs joined to an n-path) and ``nc`` (two such
fans with matched hubs).  Closed forms exist for the laplacian and
distance-laplacian kinds; every other kind is numeric only.

Exit codes: 0 success; 1 verify sweep found failing cases; 2 usage
errors; 3 invalid parameter values; 4 unsupported family/kind/mode
combination; 5 disconnected graph; 6 eigensolver non-convergence.

Output is deterministic: text uses 6 significant digits, JSON full
precision.  Only ``export`` ever writes a file, and only when asked to.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .closed_forms import (
    fan_distance_laplacian_spectrum,
    fan_laplacian_spectrum,
    nc_distance_laplacian_spectrum,
    nc_laplacian_spectrum,
)
from .eigen import (
    DEFAULT_CONVERGENCE_TOL,
    DEFAULT_GROUPING_TOL,
    JacobiConvergenceError,
    group_multiplicities,
    symmetric_eigenvalues,
)
from .graphs import DisconnectedGraphError, generalized_fan, nc_graph, to_dot, to_edge_list
from .matrices import MatrixKind, build_matrix
from .quotient import fan_partition, nc_partition, quotient_eigenvalues, quotient_matrix
from .tables import reproduce_fan_table, reproduce_generalized_fan_table
from .verify import CASE_KINDS, compare_spectra, reports_to_json, sweep


class UnsupportedCombination(Exception):
    """Family/kind/mode request outside what the toolkit provides."""


EXIT_VERIFY_FAILED = 1
EXIT_BAD_PARAMETER = 3
EXIT_UNSUPPORTED = 4
EXIT_DISCONNECTED = 5
EXIT_NO_CONVERGENCE = 6

CLOSED_FORMS = {
    ("fan", "laplacian"): fan_laplacian_spectrum,
    ("fan", "distance-laplacian"): fan_distance_laplacian_spectrum,
    ("nc", "laplacian"): nc_laplacian_spectrum,
    ("nc", "distance-laplacian"): nc_distance_laplacian_spectrum,
}

KIND_CHOICES = [k.value for k in MatrixKind]


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def _family_graph(family: str, m: int, n: int):
    if family == "fan":
        return generalized_fan(m, n)
    if family == "nc":
        return nc_graph(m, n)
    raise UnsupportedCombination(f"unknown family {family!r}")


def _group_deviations(closed_pairs, closed_expanded, numeric_expanded):
    """Per closed-form group, the max gap against the numeric values at the
    same sorted positions."""
    deviations = []
    position = 0
    for _, mult in closed_pairs:
        gaps = [
            abs(closed_expanded[position + i] - numeric_expanded[position + i])
            for i in range(mult)
        ]
        deviations.append(max(gaps))
        position += mult
    return deviations


def _cmd_spectrum(args) -> int:
    graph = _family_graph(args.family, args.m, args.n)
    closed = None
    numeric = None
    if args.mode in ("closed", "both"):
        form = CLOSED_FORMS.get((args.family, args.kind))
        if form is None:
            raise UnsupportedCombination(
                f"no closed form for family {args.family!r} and kind {args.kind!r}"
            )
        closed = form(args.m, args.n)
    if args.mode in ("numeric", "both"):
        matrix = build_matrix(graph, args.kind, t=args.t)
        raw = symmetric_eigenvalues(matrix, convergence_tol=args.convergence_tol)
        numeric = group_multiplicities(raw, grouping_tol=args.grouping_tol)

    payload: dict = {
        "family": args.family,
        "m": args.m,
        "n": args.n,
        "kind": args.kind,
        "mode": args.mode,
    }
    deviation = None
    deviations = None
    if closed is not None:
        payload["closed"] = {
            "pairs": [[v, k] for v, k in closed.pairs],
            "source": closed.source,
            "errata_notes": list(closed.errata_notes),
        }
    if numeric is not None:
        payload["numeric"] = {"pairs": [[v, k] for v, k in numeric.pairs]}
    if closed is not None and numeric is not None:
        deviation = compare_spectra(closed, numeric)
        deviations = _group_deviations(closed.pairs, closed.expanded(), numeric.expanded())
        payload["max_abs_deviation"] = deviation

    if args.format == "json":
        print(json.dumps(payload))
        return 0

    rows: list[tuple] = []
    if args.mode == "numeric":
        rows = [(v, k, None) for v, k in numeric.pairs]
    elif args.mode == "closed":
        rows = [(v, k, None) for v, k in closed.pairs]
    else:
        rows = [(v, k, d) for (v, k), d in zip(closed.pairs, deviations)]

    if args.format == "csv":
        header = "value,multiplicity" + (",deviation" if args.mode == "both" else "")
        print(header)
        for v, k, d in rows:
            line = f"{v!r},{k}"
            if args.mode == "both":
                line += f",{d!r}"
            print(line)
        return 0

    print(f"{args.family} m={args.m} n={args.n} {args.kind} [{args.mode}]")
    header = f"{'value':>12}  {'mult':>4}"
    if args.mode == "both":
        header += f"  {'deviation':>10}"
    print(header)
    for v, k, d in rows:
        line = f"{_fmt(v):>12}  {k:>4}"
        if args.mode == "both":
            line += f"  {_fmt(d):>10}"
        print(line)
    if deviation is not None:
        print(f"max |closed - numeric| = {_fmt(deviation)}")
    if closed is not None:
        for note in closed.errata_notes:
            print(f"note: {note}")
    return 0


def _print_matrix_text(matrix: np.ndarray) -> None:
    for row in matrix:
        print(" ".join(_fmt(v) for v in row))


def _cmd_matrix(args) -> int:
    graph = _family_graph(args.family, args.m, args.n)
    matrix = build_matrix(graph, args.kind, t=args.t)
    if args.format == "json":
        print(json.dumps({"order": matrix.shape[0], "entries": [float(v) for v in matrix.ravel()]}))
    elif args.format == "csv":
        for row in matrix:
            print(",".join(repr(float(v)) for v in row))
    else:
        _print_matrix_text(matrix)
    return 0


def _cmd_quotient(args) -> int:
    if args.kind not in ("laplacian", "distance-laplacian"):
        raise UnsupportedCombination(
            f"canonical quotients exist for laplacian and distance-laplacian, not {args.kind!r}"
        )
    graph = _family_graph(args.family, args.m, args.n)
    partition = (
        fan_partition(args.m, args.n) if args.family == "fan" else nc_partition(args.m, args.n)
    )
    matrix = build_matrix(graph, args.kind)
    quotient = quotient_matrix(matrix, partition)
    eigenvalues = quotient_eigenvalues(matrix, partition, grouping_tol=args.grouping_tol)
    raw = symmetric_eigenvalues(matrix, convergence_tol=args.convergence_tol)
    contained = all(float(np.min(np.abs(raw - v))) <= 1e-8 for v in eigenvalues.expanded())
    if args.format == "json":
        print(
            json.dumps(
                {
                    "family": args.family,
                    "m": args.m,
                    "n": args.n,
                    "kind": args.kind,
                    "block_sizes": list(quotient.block_sizes),
                    "matrix": [[float(v) for v in row] for row in quotient.matrix],
                    "eigenvalues": [[v, k] for v, k in eigenvalues.pairs],
                    "contained_in_full_spectrum": contained,
                }
            )
        )
        return 0
    print(f"{args.family} m={args.m} n={args.n} {args.kind} quotient")
    print(f"block sizes: {' '.join(str(s) for s in quotient.block_sizes)}")
    _print_matrix_text(quotient.matrix)
    print("eigenvalues:")
    for v, k in eigenvalues.pairs:
        print(f"{_fmt(v):>12}  {k:>4}")
    print(f"contained in full spectrum (tol 1e-08): {'yes' if contained else 'NO'}")
    return 0


def _cmd_tables(args) -> int:
    if args.which == 1:
        rows = reproduce_fan_table()
        key_header = "n"
        titles = ["reference table 1: single-hub fans F(1, n)"]
    else:
        rows = reproduce_generalized_fan_table()
        key_header = "m n"
        titles = [
            "reference table 2: generalized fans F(m, n)",
            "note: reference column headers are swapped; keys shown are the true (m, n)",
        ]
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "key": list(row.key),
                        "adjacency": {
                            "reference": list(row.adjacency.reference),
                            "computed": list(row.adjacency.computed),
                            "ok": row.adjacency.ok,
                            "note": row.adjacency.note,
                        },
                        "laplacian": {
                            "reference": list(row.laplacian.reference),
                            "computed": list(row.laplacian.computed),
                            "ok": row.laplacian.ok,
                            "note": row.laplacian.note,
                        },
                    }
                    for row in rows
                ]
            )
        )
        return 0
    if args.format == "csv":
        print("key,column,ok,computed,reference")
        for row in rows:
            key = " ".join(str(k) for k in row.key)
            for column, cell in (("adjacency", row.adjacency), ("laplacian", row.laplacian)):
                computed = " ".join(f"{v:.2f}" for v in cell.computed)
                reference = " ".join(f"{v:.2f}" for v in cell.reference)
                print(f"{key},{column},{'yes' if cell.ok else 'no'},{computed},{reference}")
        return 0
    for title in titles:
        print(title)
    print(f"{key_header} | adjacency (computed) | laplacian (computed)")
    for row in rows:
        key = " ".join(str(k) for k in row.key)
        cells = []
        for cell in (row.adjacency, row.laplacian):
            text = " ".join(f"{v:.2f}" for v in cell.computed)
            if not cell.ok:
                text += " [ERRATUM vs reference " + " ".join(f"{v:.2f}" for v in cell.reference) + "]"
            cells.append(text)
        print(f"{key} | {cells[0]} | {cells[1]}")
    for row in rows:
        for cell in (row.adjacency, row.laplacian):
            if cell.note:
                print(f"note ({' '.join(str(k) for k in row.key)}): {cell.note}")
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"range {text!r} must look like LO:HI")
    try:
        return int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"range {text!r} must be integer LO:HI") from exc


def _cmd_verify(args) -> int:
    kinds = tuple(args.kinds.split(",")) if args.kinds != "all" else CASE_KINDS
    reports = sweep(args.m_range, args.n_range, kinds=kinds, tol=args.tol)
    failed = [r for r in reports if not r.passed]
    if args.format == "json":
        print(reports_to_json(reports))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(
                f"{r.family}-{r.kind} m={r.m} n={r.n} "
                f"dev={r.max_abs_deviation:.3e} trace={r.trace_residual:.3e} "
                f"psd={'ok' if r.psd_ok else 'NO'} "
                f"quotient={'ok' if r.quotient_containment_ok else 'NO'} {status}"
            )
        print(f"{len(reports) - len(failed)}/{len(reports)} cases passed")
    return EXIT_VERIFY_FAILED if failed else 0


def _cmd_export(args) -> int:
    graph = _family_graph(args.family, args.m, args.n)
    if args.format == "dot":
        text = to_dot(graph, name=f"{args.family}_{args.m}_{args.n}")
    else:
        text = to_edge_list(graph)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanspectra",
        description="Spectra of generalized fan graphs and hub-matched fan pairs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_args(p):
        p.add_argument("family", choices=["fan", "nc"])
        p.add_argument("m", type=int)
        p.add_argument("n", type=int)

    def add_tols(p):
        p.add_argument("--grouping-tol", type=float, default=DEFAULT_GROUPING_TOL)
        p.add_argument("--convergence-tol", type=float, default=DEFAULT_CONVERGENCE_TOL)

    p = sub.add_parser("spectrum", help="spectrum of a family matrix")
    add_family_args(p)
    p.add_argument("kind", choices=KIND_CHOICES)
    p.add_argument("--mode", choices=["closed", "numeric", "both"], default="both")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--t", type=float, default=None, help="blend parameter for generalized-distance")
    add_tols(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("matrix", help="dump a family matrix")
    add_family_args(p)
    p.add_argument("kind", choices=KIND_CHOICES)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--t", type=float, default=None)
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("quotient", help="canonical equitable quotient and its eigenvalues")
    add_family_args(p)
    p.add_argument("kind", choices=["laplacian", "distance-laplacian"])
    p.add_argument("--format", choices=["text", "json"], default="text")
    add_tols(p)
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("tables", help="recompute a bundled reference table")
    p.add_argument("which", type=int, choices=[1, 2])
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("verify", help="closed form vs numeric sweep")
    p.add_argument("--m-range", type=_parse_range, default=(2, 12))
    p.add_argument("--n-range", type=_parse_range, default=(2, 12))
    p.add_argument(
        "--kinds",
        default="all",
        help="comma-separated subset of: " + ",".join(CASE_KINDS),
    )
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export", help="write a graph as an edge list or DOT")
    add_family_args(p)
    p.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    p.add_argument("-o", "--output", default=None, help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedCombination as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except JacobiConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMETER


if __name__ == "__main__":
    sys.exit(main())
