"""Command-line entry point.

Exit status: 0 success, 1 mismatch or failed search, 2 usage or parse
error, 3 when a search reaches the unimplemented final branch.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .catalog_io import (
    FormatError,
    ReportLine,
    attach_expected,
    format_stanza,
    load_expected,
    load_forest,
    parse_catalog_entries,
    default_catalog_path,
)
from .constructions import catalog_graph, catalog_names, core_feasibility
from .forest import schedule_discovery, verify_forest
from .ramsey import classify_dataset
from .search import SearchState, Status

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ABORTED = 0, 1, 2, 3

EPILOG = "exit status: 0 success, 1 mismatch or failure, 2 usage/parse error, 3 unimplemented branch reached"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _graph(name: str):
    try:
        return catalog_graph(name)
    except KeyError:
        raise _UsageError(f"unknown graph {name!r}") from None


class _UsageError(Exception):
    pass


def _status_code(status: Status) -> int:
    if status is Status.SUCCESS:
        return EXIT_OK
    if status is Status.ABORTED:
        return EXIT_ABORTED
    return EXIT_FAIL


def cmd_prove(args) -> int:
    h, t = _graph(args.source), _graph(args.target)
    state = SearchState(h, t, args.budget)
    out = state.run()
    if args.trace:
        with open(args.trace, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out.trace_text())
    if out.status is Status.SUCCESS:
        print(ReportLine(args.source, args.target, out.added_count, out.weight))
    else:
        print(f"{args.source} -> {args.target}: {out.status.value} after {out.added_count} graphs, weight {out.weight}",
              file=sys.stderr)
    return _status_code(out.status)


def cmd_verify_forest(args) -> int:
    forest = load_forest(args.forest)
    for e in forest:
        _graph(e.source)
        _graph(e.target)
    if args.expected:
        forest = attach_expected(forest, load_expected(args.expected))

    def progress(res):
        flag = {True: "ok", False: "MISMATCH", None: "-"}[res.matches]
        logging.getLogger("hcsearch").info("%s [%s %s]", res.line, res.status.value, flag)

    report = verify_forest(forest, jobs=args.jobs, budget=args.budget, progress=progress,
                           cap_at_expected=args.cap_at_expected)
    for r in report.results:
        print(r.line)
    for r in report.mismatches:
        print(f"mismatch: got {r.line}, expected {r.edge.expected_count} {r.edge.expected_weight}", file=sys.stderr)
    for r in report.failures:
        print(f"unsuccessful: {r.edge.source} {r.edge.target} {r.status.value}", file=sys.stderr)
    print(report.summary(), file=sys.stderr)
    if any(r.status is Status.ABORTED for r in report.results) and not report.mismatches:
        return EXIT_ABORTED
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_check_ramsey(args) -> int:
    tally = classify_dataset(args.file, complement_first=args.complement)
    print(tally.summary_line())
    print(f"neither: {tally.neither}, unreadable lines: {len(tally.errors)}", file=sys.stderr)
    if tally.errors:
        return EXIT_USAGE
    return EXIT_OK


def cmd_core_check(args) -> int:
    ok = core_feasibility(_graph(args.source), _graph(args.target))
    print("feasible" if ok else "infeasible")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog_names():
            print(name)
        return EXIT_OK
    if args.name is None:
        raise _UsageError("catalog show needs a graph name")
    path = default_catalog_path()
    entries = parse_catalog_entries(path.read_text(encoding="utf-8"), str(path))
    if args.name in entries:
        sys.stdout.write(format_stanza(entries[args.name]))
        return EXIT_OK
    g = _graph(args.name)
    edges = " ".join(f"{e.lo}-{e.hi}" for e in g.edges())
    sys.stdout.write(f"graph {args.name} {g.n} direct\n  {edges}\n")
    return EXIT_OK


def cmd_discover(args) -> int:
    pairs = []
    with open(args.candidates, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].split()
            if not line:
                continue
            if len(line) != 2:
                raise FormatError(args.candidates, lineno, "expected 'source target'")
            _graph(line[0])
            _graph(line[1])
            pairs.append((line[0], line[1]))
    results = schedule_discovery(pairs, args.ceiling)
    for inst in results:
        print(f"{inst.source} {inst.target} {inst.status.value} {inst.state.added_count} {inst.weight}")
    if any(i.status is Status.ABORTED for i in results):
        return EXIT_ABORTED
    return EXIT_OK if all(i.status is Status.SUCCESS for i in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hcsearch", description="Proof search for forbidden induced subgraphs.", epilog=EPILOG)
    p.add_argument("-v", "--verbose", action="store_true", help="progress on standard error")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("prove", help="run the search from SRC for property 'contains DST'", epilog=EPILOG)
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("--budget", type=int, default=None, help="stop once the weight would exceed this")
    s.add_argument("--trace", metavar="PATH", help="write the event trace here")
    s.set_defaults(func=cmd_prove)

    s = sub.add_parser("verify-forest", help="run every arrow of a forest file", epilog=EPILOG)
    s.add_argument("forest")
    s.add_argument("--expected", metavar="FILE")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--budget", type=int, default=None)
    s.add_argument("--cap-at-expected", action="store_true",
                   help="stop each arrow once it passes its expected weight (needs --expected)")
    s.set_defaults(func=cmd_verify_forest)

    s = sub.add_parser("check-ramsey", help="classify a graph6 file", epilog=EPILOG)
    s.add_argument("file")
    s.add_argument("--complement", action="store_true", help="complement each graph before classifying")
    s.set_defaults(func=cmd_check_ramsey)

    s = sub.add_parser("core-check", help="2K2-core feasibility of SRC -> DST", epilog=EPILOG)
    s.add_argument("source")
    s.add_argument("target")
    s.set_defaults(func=cmd_core_check)

    s = sub.add_parser("catalog", help="list or show catalog graphs", epilog=EPILOG)
    s.add_argument("action", choices=["list", "show"])
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("discover", help="fair weight-ordered scheduling of candidate arrows", epilog=EPILOG)
    s.add_argument("candidates", help="file of 'source target' lines")
    s.add_argument("--ceiling", type=int, required=True)
    s.set_defaults(func=cmd_discover)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (_UsageError, FormatError, OSError, ValueError) as exc:
        print(f"hcsearch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
