"""Command line: analyze, enumerate, verify, count, probe.

Exit status 0 on success, 1 on usage or parse errors, 2 when a theorem
check fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, Iterable, Sequence

from . import reference, report, suite
from .core import INF, KupischSeries, NakayamaAlgebra, enumerate_cyclic, enumerate_linear
from .errors import NakayamaError, TheoremViolation, ValidationError
from .invariants import conjecture_probe, decide_auslander_regular_linear
from .monomial import DEFAULT_LABELLING_CAP, MonomialPresentation

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2

FILTERS: dict[str, Callable[[dict], bool]] = {
    "auslander-regular": lambda r: r["auslander_regular"],
    "not-auslander-regular": lambda r: not r["auslander_regular"],
    "auslander-gorenstein": lambda r: r["auslander_gorenstein"],
    "finite-gldim": lambda r: r["global_dimension"] != "inf",
    "infinite-gldim": lambda r: r["global_dimension"] == "inf",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> range:
    """"A..B" or a single "A"; both ends inclusive."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected A..B") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: need 1 <= A <= B")
    return range(lo, hi + 1)


def _names(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nakayama", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def family(p, need_range=True):
        fam = p.add_mutually_exclusive_group()
        fam.add_argument("--linear", dest="family", action="store_const", const="linear")
        fam.add_argument("--cyclic", dest="family", action="store_const", const="cyclic")
        p.set_defaults(family="linear")
        p.add_argument("-n", dest="n_range", type=parse_range, required=need_range, metavar="A..B")
        p.add_argument("--loewy", type=int, metavar="K", help="largest Loewy length (cyclic only)")
        p.add_argument("--up-to-rotation", action="store_true")
        p.add_argument("--jobs", type=int, default=1, metavar="N")

    def output(p, default_format="json"):
        p.add_argument("--format", choices=("json", "jsonl", "csv"), default=default_format)
        p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("analyze", help="invariants of one algebra")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--kupisch", metavar="STR")
    src.add_argument("--quiver", metavar="PATH")
    p.add_argument("--labelling-cap", type=int, default=DEFAULT_LABELLING_CAP, metavar="N")
    output(p)

    p = sub.add_parser("enumerate", help="reports for a whole family")
    family(p)
    p.add_argument("--filter", type=_names, default=[], metavar="LIST")
    output(p, "jsonl")

    p = sub.add_parser("verify", help="run theorem checks over a family")
    family(p, need_range=False)
    p.add_argument("--checks", type=_names, metavar="LIST")
    p.add_argument("--reference-examples", action="store_true", help="replay the published worked examples")
    output(p)

    p = sub.add_parser("count", help="Auslander regular algebras per size")
    family(p)
    output(p)

    p = sub.add_parser("probe", help="odd Ext dimensions into A for Auslander-Gorenstein algebras")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--kupisch", metavar="STR")
    src.add_argument("-n", dest="n_range", type=parse_range, metavar="A..B")
    fam = p.add_mutually_exclusive_group()
    fam.add_argument("--linear", dest="family", action="store_const", const="linear")
    fam.add_argument("--cyclic", dest="family", action="store_const", const="cyclic")
    p.set_defaults(family="linear")
    p.add_argument("--loewy", type=int, metavar="K")
    p.add_argument("--up-to-rotation", action="store_true")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    output(p)
    return parser


def family_stream(args) -> Iterable[KupischSeries]:
    if args.family == "cyclic":
        if args.loewy is None:
            raise UsageError("cyclic enumeration needs --loewy")
        if args.loewy < 2:
            raise UsageError("--loewy must be at least 2")
        for n in args.n_range:
            yield from enumerate_cyclic(n, args.loewy, up_to_rotation=args.up_to_rotation)
    else:
        if args.loewy is not None:
            raise UsageError("--loewy applies to cyclic families only")
        for n in args.n_range:
            yield from enumerate_linear(n)


def parallel_map(fn, items: Iterable, jobs: int) -> list:
    """Order-preserving map; one process per job when jobs > 1."""
    if jobs < 1:
        raise UsageError("--jobs must be positive")
    items = list(items)
    if jobs == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def render(records: Sequence[dict], fmt: str, single: bool = False) -> str:
    if fmt == "jsonl":
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    if fmt == "csv":
        buf = io.StringIO()
        if records and "cartan" in records[0]:
            rows = [report.csv_row(r) for r in records]
            fields = [k for k in report.REPORT_FIELDS if k not in ("cartan", "coxeter")]
        else:
            rows, fields = list(records), list(records[0]) if records else []
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    body = records[0] if single and len(records) == 1 else list(records)
    return json.dumps(body, indent=2, sort_keys=True) + "\n"


def emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_for(k: KupischSeries) -> dict:
    return report.nakayama_report(k)


def cmd_analyze(args) -> int:
    if args.kupisch is not None:
        rec = report.nakayama_report(KupischSeries.parse(args.kupisch))
    else:
        rec = report.monomial_report(MonomialPresentation.from_file(args.quiver), args.labelling_cap)
    if args.format == "csv" and "kupisch" not in rec["algebra"]:
        raise UsageError("CSV output needs a Kupisch series input")
    emit(render([rec], args.format, single=True), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    unknown = [f for f in args.filter if f not in FILTERS]
    if unknown:
        raise UsageError(f"unknown filter {', '.join(unknown)}; choose from {', '.join(FILTERS)}")
    records = parallel_map(_report_for, family_stream(args), args.jobs)
    records = [r for r in records if all(FILTERS[f](r) for f in args.filter)]
    emit(render(records, args.format), args.out)
    return EXIT_OK


def _run_suite(names: tuple[str, ...], k: KupischSeries) -> suite.SuiteReport:
    return suite.run_checks(NakayamaAlgebra(k), names)


def _no_csv(args):
    if args.format == "csv":
        raise UsageError(f"{args.command} output is nested; use json or jsonl")


def cmd_verify(args) -> int:
    _no_csv(args)
    if args.reference_examples:
        records = reference.replay()
        failed = [r for r in records if not r["ok"]]
        emit(render([{"checks": records, "mismatches": len(failed)}], args.format, single=True), args.out)
        return EXIT_VIOLATION if failed else EXIT_OK
    if args.n_range is None:
        raise UsageError("verify needs -n A..B or --reference-examples")
    default = suite.CYCLIC_SUITE if args.family == "cyclic" else suite.LINEAR_SUITE
    names = tuple(args.checks or default)
    unknown = [c for c in names if c not in suite.CHECKS]
    if unknown:
        raise UsageError(f"unknown check {', '.join(unknown)}; choose from {', '.join(suite.CHECKS)}")
    total = suite.SuiteReport()
    for part in parallel_map(partial(_run_suite, names), family_stream(args), args.jobs):
        total = total.merge(part)
    out = {"family": args.family, "n": [args.n_range.start, args.n_range.stop - 1], "checks": list(names)}
    out.update(total.to_json())
    emit(render([out], args.format, single=True), args.out)
    return EXIT_OK if total.ok else EXIT_VIOLATION


def _regular(k: KupischSeries) -> tuple[int, bool]:
    if k.orientation == "linear":
        return k.n, bool(decide_auslander_regular_linear(k).decision)
    a = NakayamaAlgebra(k)
    return k.n, bool(a.is_auslander_gorenstein().decision) and a.global_dimension() < INF


def cmd_count(args) -> int:
    tally = {n: {"algebras": 0, "auslander_regular": 0} for n in args.n_range}
    for n, regular in parallel_map(_regular, family_stream(args), args.jobs):
        tally[n]["algebras"] += 1
        tally[n]["auslander_regular"] += int(regular)
    records = [{"n": n, **v} for n, v in tally.items()]
    emit(render(records, args.format), args.out)
    return EXIT_OK


def _probe(k: KupischSeries) -> dict | None:
    a = NakayamaAlgebra(k)
    if not a.is_auslander_gorenstein().decision:
        return None
    return conjecture_probe(a).to_json()


def cmd_probe(args) -> int:
    _no_csv(args)
    if args.kupisch is not None:
        stream = [KupischSeries.parse(args.kupisch)]
    else:
        stream = family_stream(args)
    found = [r for r in parallel_map(_probe, stream, args.jobs) if r is not None]
    flagged = [r for r in found if r["violations"]]
    out = {"algebras_probed": len(found), "flagged": len(flagged), "findings": found}
    emit(render([out], args.format, single=True), args.out)
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "count": cmd_count,
    "probe": cmd_probe,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValidationError, OSError, json.JSONDecodeError) as exc:
        print(f"nakayama: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolation as exc:
        print(f"nakayama: theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except NakayamaError as exc:
        print(f"nakayama: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
