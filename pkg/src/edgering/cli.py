"""Command-line front end.

Subcommands:
  analyze    full pipeline for one graph, single JSON document on stdout
  survey     one JSON line per input graph plus a trailing summary object
  oracle     brute-force Betti table, with a match flag against the formulas
  decompose  quasi-forest decomposition of a complex or of a graph's
             complement flag complex

Exit codes: 0 ok, 1 partial (some survey lines skipped), 2 malformed input,
3 size cap exceeded, 4 not a quasi-forest.  All JSON is emitted with sorted
keys and stable list orders, so identical inputs and flags produce
byte-identical output for every --jobs value.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys

from . import chordal, complexes, conjecture, invariants, oracle
from .errors import (
    EdgeRingError,
    MalformedInputError,
    UndefinedInputError,
    UnsupportedSizeError,
)
from .graphs import (
    ENUMERATION_CAP,
    Graph,
    complement,
    max_degree,
    parse_edge_list,
    parse_graph6,
    rows_from_edge_mask,
    to_graph6,
)

EXIT_OK = 0
EXIT_PARTIAL = 1
EXIT_MALFORMED = 2
EXIT_SIZE_CAP = 3
EXIT_NOT_QUASI_FOREST = 4

ANALYZE_KEYS = (
    "input", "n", "complement_chordal", "chordless_cycle", "facets", "d", "r",
    "r_min", "hilbert_numerator", "betti", "pd", "depth", "dim", "cm", "d_tree",
    "max_deg", "conjecture_holds", "gap", "witness", "notes",
)


def _decompose_graph(g: Graph):
    """Chordality result plus (cliques, tree, decomposition) of the complement."""
    gbar = complement(g)
    res = chordal.is_chordal(gbar)
    if isinstance(res, chordal.NotChordal):
        return res, None
    cliques = chordal.maximal_cliques_chordal(gbar, res.peo)
    tree = chordal.clique_tree(cliques, gbar)
    return res, chordal.quasi_forest_order(tree)


def analyze_record(g: Graph) -> dict:
    """The full analyze document; formula fields are null when the complement
    is not chordal."""
    if g.n < 1:
        raise UndefinedInputError("analysis needs at least one vertex")
    rec: dict = {key: None for key in ANALYZE_KEYS}
    rec["input"] = to_graph6(g)
    rec["n"] = g.n
    rec["max_deg"] = max_degree(g)
    rec["notes"] = []
    res, qfd = _decompose_graph(g)
    if qfd is None:
        rec["complement_chordal"] = False
        rec["chordless_cycle"] = list(res.cycle)
        return rec
    rec["complement_chordal"] = True
    rec["facets"] = [sorted(f) for f in qfd.facets]
    rec["d"] = list(qfd.dims)
    rec["r"] = list(qfd.attach_dims)
    rec["r_min"] = qfd.r_min
    series = invariants.hilbert_from_decomposition(qfd)
    rec["hilbert_numerator"] = list(series.numerator)
    table = invariants.betti_from_numerator(series)
    rec["betti"] = [[i, j, v] for (i, j), v in table.items()]
    rec["pd"] = invariants.projective_dimension(qfd)
    rec["depth"] = invariants.depth(qfd)
    rec["dim"] = invariants.krull_dim(qfd)
    rec["cm"] = invariants.is_cm(qfd)
    try:
        sig = invariants.d_tree_signature(qfd)
        rec["d_tree"] = list(sig) if sig is not None else None
    except UnsupportedSizeError:
        rec["d_tree"] = None
        rec["notes"].append("d-tree recognition inconclusive above the facet cap")
    report = conjecture.report_from_decomposition(g, qfd)
    rec["conjecture_holds"] = report.holds
    rec["gap"] = report.gap
    if report.witness is not None:
        facet, vertex = report.witness
        rec["witness"] = {"facet": sorted(facet), "vertex": vertex}
    return rec


def survey_record(g: Graph) -> dict:
    """Abbreviated per-line record for surveys."""
    full = analyze_record(g)
    keys = ("input", "n", "complement_chordal", "r_min", "pd", "max_deg",
            "cm", "d_tree", "witness")
    rec = {k: full[k] for k in keys}
    rec["holds"] = full["conjecture_holds"]
    rec["gap"] = full["gap"]
    return rec


def _print_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _pretty_analyze(rec: dict) -> None:
    rows = [(k, rec[k]) for k in ANALYZE_KEYS]
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        sys.stdout.write(f"{k:<{width}}  {json.dumps(v, sort_keys=True)}\n")


def _read_graph(args) -> Graph:
    sources = [args.graph6 is not None, args.edges is not None, args.stdin]
    if sum(sources) != 1:
        raise MalformedInputError(
            "exactly one input source required: positional graph6, --edges, or --stdin"
        )
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.edges is not None:
        return parse_edge_list(args.edges)
    line = sys.stdin.readline()
    if not line.strip():
        raise MalformedInputError("no graph6 line on standard input")
    return parse_graph6(line)


def cmd_analyze(args) -> int:
    try:
        g = _read_graph(args)
        rec = analyze_record(g)
    except UnsupportedSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP
    except (MalformedInputError, UndefinedInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    if args.pretty:
        _pretty_analyze(rec)
    else:
        _print_json(rec)
    return EXIT_OK


def _survey_worker(item) -> tuple[int, bool, str, bool, bool, str]:
    """(line_no, ok, payload, is_2linear, holds, graph6); payload is a JSON
    line or an error message."""
    kind, line_no, data = item
    try:
        if kind == "mask":
            n, mask = data
            g = Graph(n, tuple(rows_from_edge_mask(n, mask)))
        else:
            g = parse_graph6(data)
        rec = survey_record(g)
    except EdgeRingError as exc:
        return (line_no, False, str(exc), False, False, "")
    return (
        line_no,
        True,
        json.dumps(rec, sort_keys=True),
        bool(rec["complement_chordal"]),
        bool(rec["holds"]),
        rec["input"],
    )


def cmd_survey(args) -> int:
    if args.all_labeled is not None:
        n = args.all_labeled
        if not 0 <= n <= ENUMERATION_CAP:
            print(f"error: --all-labeled supports 0..{ENUMERATION_CAP}", file=sys.stderr)
            return EXIT_SIZE_CAP
        if n < 1:
            print("error: surveys need graphs with at least one vertex", file=sys.stderr)
            return EXIT_MALFORMED
        items = (("mask", i, (n, mask)) for i, mask in enumerate(range(1 << (n * (n - 1) // 2))))
    else:
        lines = [ln.strip() for ln in sys.stdin]
        items = (("g6", i + 1, ln) for i, ln in enumerate(lines) if ln)
    jobs = max(1, args.jobs)
    skipped = 0
    total = emitted_2linear = emitted_holds = 0
    counterexamples: list[str] = []
    if jobs == 1:
        results = map(_survey_worker, items)
    else:
        pool = multiprocessing.Pool(jobs)
        results = pool.imap(_survey_worker, items, chunksize=64)
    try:
        for line_no, ok, payload, is_2linear, holds, g6 in results:
            if not ok:
                print(f"error: line {line_no}: {payload}", file=sys.stderr)
                skipped += 1
                continue
            if args.only_2linear and not is_2linear:
                continue
            sys.stdout.write(payload + "\n")
            total += 1
            emitted_2linear += is_2linear
            emitted_holds += holds
            if is_2linear and not holds:
                counterexamples.append(g6)
    finally:
        if jobs > 1:
            pool.close()
            pool.join()
    summary = {
        "summary": {
            "total": total,
            "2linear": emitted_2linear,
            "holds": emitted_holds,
            "fails": emitted_2linear - emitted_holds,
            "counterexamples": counterexamples,
        }
    }
    _print_json(summary)
    return EXIT_PARTIAL if skipped else EXIT_OK


def _load_complex(args) -> complexes.SimplicialComplex:
    if args.complex is not None:
        with open(args.complex, "r", encoding="ascii") as fh:
            return complexes.parse_complex(fh.read())
    if args.graph6 is None:
        raise MalformedInputError("either a graph6 argument or --complex FILE is required")
    g = parse_graph6(args.graph6)
    return complexes.flag_complex(complement(g))


def cmd_oracle(args) -> int:
    try:
        cx = _load_complex(args)
        table = oracle.hochster_betti(cx)
    except UnsupportedSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP
    except (MalformedInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    match = None
    qf = complexes.as_quasi_forest(cx)
    if qf.decomposition is not None:
        formula = invariants.betti_from_numerator(
            invariants.hilbert_from_decomposition(qf.decomposition)
        )
        match = formula.entries == table.entries
    rec = {
        "n": table.n,
        "subsets_examined": table.subsets_examined,
        "betti": [[0, 0, 1]] + [[i, j, v] for (i, j), v in table.items()],
        "pd": oracle.oracle_pd(table),
        "two_linear": oracle.oracle_is_2linear(table),
        "match": match,
    }
    _print_json(rec)
    return EXIT_OK


def cmd_decompose(args) -> int:
    try:
        if args.complex is not None:
            cx = _load_complex(args)
            result = complexes.as_quasi_forest(cx)
            qfd = result.decomposition
            reason = result.reason
            cycle = result.chordless_cycle
        else:
            if args.graph6 is None:
                raise MalformedInputError("either a graph6 argument or --complex FILE is required")
            g = parse_graph6(args.graph6)
            res, qfd = _decompose_graph(g)
            reason = complexes.SKELETON_NOT_CHORDAL if qfd is None else None
            cycle = tuple(res.cycle) if qfd is None else None
    except UnsupportedSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP
    except (MalformedInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    if qfd is None:
        rec = {"error": reason}
        rec["chordless_cycle"] = list(cycle) if cycle is not None else None
        _print_json(rec)
        return EXIT_NOT_QUASI_FOREST
    rec = {
        "facets": [sorted(f) for f in qfd.facets],
        "d": list(qfd.dims),
        "r": list(qfd.attach_dims),
        "r_min": qfd.r_min,
        "n": qfd.n,
        "k": qfd.k,
    }
    _print_json(rec)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgering",
        description="Homological invariants of edge rings with 2-linear resolutions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one graph end to end")
    p.add_argument("graph6", nargs="?", default=None, help="graph6 string")
    p.add_argument("--edges", default=None, metavar="LIST", help='edge list: "n u v u v ..."')
    p.add_argument("--stdin", action="store_true", help="read one graph6 line from stdin")
    p.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("survey", help="classify a stream of graphs")
    p.add_argument("--all-labeled", type=int, default=None, metavar="N",
                   help=f"all labeled graphs on N vertices (N <= {ENUMERATION_CAP})")
    p.add_argument("--only-2linear", action="store_true",
                   help="emit lines only for graphs with a 2-linear resolution")
    p.add_argument("--jobs", type=int, default=1, metavar="J", help="worker processes")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("oracle", help="brute-force Betti table")
    p.add_argument("graph6", nargs="?", default=None,
                   help="graph6 of G; the table is for the flag complex of its complement")
    p.add_argument("--complex", default=None, metavar="FILE",
                   help="read a simplicial-complex fixture instead")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("decompose", help="quasi-forest decomposition")
    p.add_argument("graph6", nargs="?", default=None,
                   help="graph6 of G; decomposes the flag complex of its complement")
    p.add_argument("--complex", default=None, metavar="FILE",
                   help="read a simplicial-complex fixture instead")
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MalformedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except UnsupportedSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP


if __name__ == "__main__":
    sys.exit(main())
