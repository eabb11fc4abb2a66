"""Command-line front door.

Subcommands: compute, enumerate, verify, walks, compare-s, transfer,
replay.  Exit codes: 0 success/pass, 1 usage error, 2 I/O or parse
error, 3 inconclusive verification, 4 failed verification.  Identical
invocations produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families
from .enumeration import enumerate_unicyclic, filter_by_diameter
from .errors import ArgumentError, ContractError, LimitError, ParseError, SleeError
from .graph6 import graph6_encode, read_graph6_file
from .graphs import Graph
from .semiwalk import DEFAULT_MAX_K, compare_s, compare_s_pair, walk_counts
from .spectral import spectral_summary
from .transforms import check_transfer_lemma, transfer
from .verify import (
    TheoremReport,
    replay_proof_steps,
    reports_to_json,
    verify_diameter_max,
    verify_max,
    verify_min,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_INCONCLUSIVE = 3
EXIT_FAILED = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="slee", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", help="family spec, e.g. C3S:2,0,0 or G1:7")
        p.add_argument("--input", help="path to a graph6 file (one graph per line)")

    p = sub.add_parser("compute", help="spectrum, SLEE and moments of a graph")
    add_source(p)
    p.add_argument("--moments", type=int, default=6, help="highest moment order (default 6)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="all unicyclic graphs on n vertices, one graph6 per line")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--diameter", type=int, default=None)
    p.add_argument("--out", help="write to this path instead of stdout")

    p = sub.add_parser("verify", help="check an extremal claim by exhaustive ranking")
    p.add_argument("--theorem", choices=("max", "min", "diameter"), required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("walks", help="exact semi-edge-walk counts between two vertices")
    add_source(p)
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", dest="target", type=int, required=True)
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("compare-s", help="bounded walk-count dominance between two vertices")
    add_source(p)
    p.add_argument("-x", type=int, required=True)
    p.add_argument("-y", type=int, required=True)
    p.add_argument("-w", type=int, default=None, help="compare walks from w to x vs to y")
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("transfer", help="move neighbors between vertices and compare SLEE")
    add_source(p)
    p.add_argument("--v", type=int, required=True, help="vertex losing the neighbors")
    p.add_argument("--u", type=int, required=True, help="vertex gaining the neighbors")
    p.add_argument("--neighbors", required=True, help="comma-separated vertex ids")
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("replay", help="verified reduction chains (whole universe via -n, or one graph)")
    p.add_argument("-n", type=int, default=None)
    add_source(p)
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
    p.add_argument("--json", action="store_true")
    return parser


def _load_graphs(args: argparse.Namespace) -> tuple[list[Graph], str | None]:
    """Graphs from --family or --input (exactly one source)."""
    if (args.family is None) == (args.input is None):
        raise ArgumentError("exactly one of --family or --input is required")
    if args.family is not None:
        return [families.make(args.family)], args.family
    try:
        graphs = read_graph6_file(args.input)
    except OSError as exc:
        raise OSError(f"cannot read graph6 file {args.input!r}: {exc}") from exc
    if not graphs:
        raise ParseError(f"no graphs found in {args.input!r}")
    return graphs, None


def _load_single_graph(args: argparse.Namespace) -> Graph:
    graphs, _ = _load_graphs(args)
    if len(graphs) != 1:
        raise ArgumentError(f"this command needs exactly one graph, got {len(graphs)}")
    return graphs[0]


def _cmd_compute(args: argparse.Namespace) -> int:
    graphs, family_text = _load_graphs(args)
    payload = []
    for g in graphs:
        summary = spectral_summary(g, args.moments)
        entry = {
            "g6": graph6_encode(g),
            "n": g.n,
            "m": g.m,
            "eigenvalues": list(summary.eigenvalues),
            "slee": summary.slee,
            "moments": list(summary.moments),
        }
        if family_text is not None:
            entry["roles"] = families.family_roles(family_text)
        payload.append(entry)
    if args.json:
        print(json.dumps({"reports": payload}, indent=2, sort_keys=True))
        return EXIT_OK
    for entry in payload:
        print(f"graph {entry['g6']}: n={entry['n']} m={entry['m']}")
        eig = ", ".join(format(x, ".10f") for x in entry["eigenvalues"])
        print(f"  eigenvalues (desc): [{eig}]")
        print(f"  SLEE = {entry['slee']:.10f}")
        moments = ", ".join(f"T_{k}={format(x, '.6g')}" for k, x in enumerate(entry["moments"]))
        print(f"  moments: {moments}")
        if "roles" in entry:
            roles = ", ".join(f"{name}->{idx}" for name, idx in entry["roles"].items())
            print(f"  roles: {roles}")
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    result = enumerate_unicyclic(args.n)
    if args.diameter is not None:
        result = filter_by_diameter(result, args.diameter)
    lines = [graph6_encode(g) for g in result.graphs]
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
    else:
        for line in lines:
            print(line)
    print(f"{len(lines)} graphs", file=sys.stderr)
    return EXIT_OK


def _verdict_exit(reports: list[TheoremReport]) -> int:
    verdicts = {r.verdict for r in reports}
    if "fail" in verdicts:
        return EXIT_FAILED
    if "inconclusive" in verdicts:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    reports: list[TheoremReport] = []
    if args.theorem == "max":
        if args.d is not None:
            raise ArgumentError("-d only applies to --theorem diameter")
        if args.n == 3:
            reports.append(_trivial_report("max", args.n))
        else:
            reports.extend(verify_max(args.n))
    elif args.theorem == "min":
        if args.d is not None:
            raise ArgumentError("-d only applies to --theorem diameter")
        if args.n == 3:
            reports.append(_trivial_report("min", args.n))
        else:
            reports.extend(verify_min(args.n))
    else:
        if args.d is not None:
            reports.append(verify_diameter_max(args.n, args.d))
        elif args.n < 4:
            reports.append(_trivial_report("diameter-max", args.n))
        else:
            for d in range(2, args.n - 1):
                reports.append(verify_diameter_max(args.n, d))
    if args.json:
        print(reports_to_json(reports))
    elif args.csv:
        from .verify import reports_to_csv

        print(reports_to_csv(reports), end="")
    else:
        for r in reports:
            print(r.summary_line())
    return _verdict_exit(reports)


def _trivial_report(theorem: str, n: int) -> TheoremReport:
    return TheoremReport(
        theorem=theorem,
        n=n,
        d=None,
        verdict="skipped",
        expected_spec=None,
        expected_g6=None,
        found_g6=None,
        slee_table=(),
        margin=None,
        runtime_ms=0.0,
        note="only one unicyclic graph exists on 3 vertices",
    )


def _cmd_walks(args: argparse.Namespace) -> int:
    g = _load_single_graph(args)
    table = walk_counts(g, args.max_k)
    counts = [table.entry(k, args.source, args.target) for k in range(args.max_k + 1)]
    if args.json:
        print(json.dumps({"from": args.source, "to": args.target, "counts": counts}))
    else:
        print(", ".join(str(c) for c in counts))
    return EXIT_OK


def _cmd_compare_s(args: argparse.Namespace) -> int:
    g = _load_single_graph(args)
    if args.w is None:
        verdict = compare_s(g, args.x, args.y, args.max_k)
    else:
        verdict = compare_s_pair(g, args.w, args.x, args.y, args.max_k)
    if args.json:
        print(
            json.dumps(
                {
                    "relation": verdict.relation.value,
                    "witness_k": verdict.witness_k,
                    "checked_up_to": verdict.checked_up_to,
                },
                sort_keys=True,
            )
        )
    else:
        print(str(verdict))
    return EXIT_OK


def _cmd_transfer(args: argparse.Namespace) -> int:
    g = _load_single_graph(args)
    try:
        moved = tuple(int(x) for x in args.neighbors.split(","))
    except ValueError as exc:
        raise ArgumentError(f"--neighbors expects comma-separated integers: {exc}") from exc
    plan = transfer(g, args.v, args.u, moved)
    check = check_transfer_lemma(plan.route, args.v, args.u, moved, args.max_k)
    if args.json:
        print(
            json.dumps(
                {
                    "source_g6": graph6_encode(g),
                    "route_g6": graph6_encode(plan.route),
                    "result_g6": graph6_encode(plan.result),
                    "slee_before": check.slee_with_v,
                    "slee_after": check.slee_with_u,
                    "slee_gap": check.slee_gap,
                    "hypotheses_hold": check.hypotheses_hold,
                    "checked_up_to": check.checked_up_to,
                },
                sort_keys=True,
            )
        )
    else:
        print(f"result {graph6_encode(plan.result)}")
        print(f"SLEE before = {check.slee_with_v:.10f}")
        print(f"SLEE after  = {check.slee_with_u:.10f}")
        print(f"gap = {check.slee_gap:.10g}")
        print(f"hypotheses hold up to K={check.checked_up_to}: {check.hypotheses_hold}")
    return EXIT_OK


def _cmd_replay(args: argparse.Namespace) -> int:
    if (args.n is None) == (args.family is None and args.input is None):
        raise ArgumentError("replay needs either -n or a single graph (--family/--input)")
    if args.n is not None:
        chains = replay_proof_steps(args.n, args.max_k)
    else:
        from .graphs import is_unicyclic
        from .verify import max_chain, min_chain

        g = _load_single_graph(args)
        if not is_unicyclic(g):
            raise ArgumentError("replay chains are defined for unicyclic graphs")
        chains = [max_chain(g, args.max_k), min_chain(g, args.max_k)]
    if args.json:
        payload = [
            {
                "direction": c.direction,
                "start_g6": c.start_g6,
                "target_g6": c.target_g6,
                "reached": c.reached,
                "monotone": c.monotone,
                "steps": [
                    {
                        "kind": s.kind,
                        "from": s.from_vertex,
                        "to": s.to_vertex,
                        "moved": list(s.moved),
                        "slee_before": s.slee_before,
                        "slee_after": s.slee_after,
                        "hypotheses_hold": s.hypotheses_hold,
                    }
                    for s in c.steps
                ],
            }
            for c in chains
        ]
        print(json.dumps({"chains": payload}, indent=2, sort_keys=True))
    else:
        for c in chains:
            status = "ok" if (c.reached and c.monotone) else "PROBLEM"
            print(
                f"{c.start_g6} --{c.direction}--> {c.target_g6}: "
                f"{len(c.steps)} steps, reached={c.reached}, monotone={c.monotone} [{status}]"
            )
    bad = [c for c in chains if not (c.reached and c.monotone)]
    return EXIT_OK if not bad else EXIT_FAILED


_HANDLERS = {
    "compute": _cmd_compute,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "walks": _cmd_walks,
    "compare-s": _cmd_compare_s,
    "transfer": _cmd_transfer,
    "replay": _cmd_replay,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"slee: parse error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"slee: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ArgumentError, ContractError, LimitError) as exc:
        print(f"slee: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SleeError as exc:
        print(f"slee: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
