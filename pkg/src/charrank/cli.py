"""Command-line front end.

Subcommands:

* ``count box|set-exact|set-any|total`` — exact partition counts
* ``betti N K [DEGREE]`` — one Betti number or the whole table
* ``bound --set .. --dim .. --charrank .. --degree .. [--gapless]``
* ``verify IDENTITY [range flags]`` — identity sweeps; ``all`` runs every
  sweep at its default grid

Every subcommand takes ``--format text|json|csv`` (default text) and
``--output PATH`` to write the rendered record to a file instead of
stdout.  Counts are always emitted as decimal strings, never floats.
Exit codes: 0 success / all checks passed, 1 verification failure,
2 usage error.
"""

import argparse
import csv
import io
import json
import sys

from charrank.bounds import UNBOUNDED, BundleProfile, betti_upper_bound, betti_upper_bound_gapless
from charrank.errors import CharrankError
from charrank.grassmannian import betti, poincare
from charrank.identities import run_all, verify_sweep
from charrank.partitions import (
    PartsSet,
    count_box,
    count_set_any,
    count_set_exact,
    count_total,
)

_EXIT_OK = 0
_EXIT_VERIFY_FAIL = 1
_EXIT_USAGE = 2

#: Failures listed per report in text output before truncating.
_MAX_LISTED_FAILURES = 20

_VERIFY_CHOICES = (
    "eq3",
    "eq4",
    "eq5",
    "bijection",
    "oracle",
    "grassmannian-tables",
    "sharpness",
    "partition-function",
    "all",
)

# verify range flags, as (flag, dest) pairs; each identity accepts its own
# subset and verify_sweep rejects the rest.
_RANGE_FLAGS = (
    ("--max-mu", "max_mu"),
    ("--max-j", "max_j"),
    ("--max-k", "max_k"),
    ("--k", "k"),
    ("--max-x", "max_x"),
    ("--max-n", "max_n"),
    ("--max-part", "max_part"),
    ("--max-parts", "max_parts"),
    ("--max-weight", "max_weight"),
)


def _nonneg_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("value must be nonnegative")
    return value


def _parts_csv(text):
    """Comma-separated, strictly ascending positive integers."""
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )
    if not values or values[0] < 1:
        raise argparse.ArgumentTypeError("part values must be positive integers")
    for prev, cur in zip(values, values[1:]):
        if cur <= prev:
            raise argparse.ArgumentTypeError("part values must be strictly ascending")
    return values


def _extent(text):
    """A positive integer, or the literal ``inf`` for no finite bound."""
    if text.strip().lower() == "inf":
        return UNBOUNDED
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'inf', got {text!r}")


def _extent_str(value):
    return "inf" if value == UNBOUNDED else str(value)


def _json_dump(record):
    return json.dumps(record, indent=2) + "\n"


def _csv_rows(header, rows):
    sink = io.StringIO()
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return sink.getvalue()


def _render_scalar(record, fmt):
    if fmt == "json":
        return _json_dump(record)
    if fmt == "csv":
        return _csv_rows(["value"], [[record["results"]["value"]]])
    return record["results"]["value"] + "\n"


def _render_table(record, fmt):
    values = record["results"]["betti"]
    if fmt == "json":
        return _json_dump(record)
    if fmt == "csv":
        return _csv_rows(["degree", "value"], list(enumerate(values)))
    return " ".join(values) + "\n"


def _render_verify(record, fmt):
    if fmt == "json":
        return _json_dump(record)
    reports = record["results"]["reports"]
    if fmt == "csv":
        rows = [
            [rep["identity"], rep["checked"], str(len(rep["failures"])), rep["status"]]
            for rep in reports
        ]
        return _csv_rows(["identity", "checked", "failures", "status"], rows)
    lines = []
    for rep in reports:
        lines.append(
            f"{rep['identity']}: {rep['status']} "
            f"(checked={rep['checked']}, failures={len(rep['failures'])})"
        )
        listed = rep["failures"][:_MAX_LISTED_FAILURES]
        for failure in listed:
            settings = ", ".join(f"{k}={v}" for k, v in failure["params"].items())
            lines.append(f"  [{settings}] {failure['lhs']} != {failure['rhs']}")
        hidden = len(rep["failures"]) - len(listed)
        if hidden > 0:
            lines.append(f"  ... {hidden} more failures")
    lines.append(f"overall: {record['status']}")
    return "\n".join(lines) + "\n"


_RENDERERS = {
    "scalar": _render_scalar,
    "table": _render_table,
    "verify": _render_verify,
}


def _record(command, params, results, status="ok"):
    return {"command": command, "params": params, "results": results, "status": status}


def _cmd_count(args):
    if args.subject == "box":
        params = {
            "subject": "box",
            "max_part": str(args.max_part),
            "max_parts": str(args.max_parts),
            "weight": str(args.weight),
        }
        value = count_box(args.max_part, args.max_parts, args.weight)
    elif args.subject == "set-exact":
        params = {
            "subject": "set-exact",
            "parts": ",".join(map(str, args.parts)),
            "num_parts": str(args.num_parts),
            "weight": str(args.weight),
        }
        value = count_set_exact(args.parts, args.num_parts, args.weight)
    elif args.subject == "set-any":
        params = {
            "subject": "set-any",
            "parts": ",".join(map(str, args.parts)),
            "weight": str(args.weight),
        }
        value = count_set_any(args.parts, args.weight)
    else:
        params = {"subject": "total", "weight": str(args.weight)}
        value = count_total(args.weight)
    return _record("count", params, {"value": str(value)}), "scalar", _EXIT_OK


def _cmd_betti(args):
    params = {"n": str(args.n), "k": str(args.k)}
    if args.degree is not None:
        params["degree"] = str(args.degree)
        value = betti(args.n, args.k, args.degree)
        return _record("betti", params, {"value": str(value)}), "scalar", _EXIT_OK
    table = poincare(args.n, args.k)
    results = {"betti": [str(v) for v in table.betti]}
    return _record("betti", params, results), "table", _EXIT_OK


def _cmd_bound(args):
    profile = BundleProfile(dim_x=args.dim, s_set=PartsSet(args.set), t=args.charrank)
    if args.gapless:
        value = betti_upper_bound_gapless(profile, args.degree)
    else:
        value = betti_upper_bound(profile, args.degree)
    params = {
        "set": ",".join(map(str, args.set)),
        "dim": _extent_str(args.dim),
        "charrank": _extent_str(args.charrank),
        "degree": str(args.degree),
        "gapless": "true" if args.gapless else "false",
    }
    return _record("bound", params, {"value": str(value)}), "scalar", _EXIT_OK


def _report_payload(report):
    return {
        "identity": report.identity_id.value,
        "swept_ranges": report.swept_ranges,
        "checked": str(report.checked),
        "failures": [
            {
                "params": {str(k): str(v) for k, v in failure.params},
                "lhs": str(failure.lhs),
                "rhs": str(failure.rhs),
            }
            for failure in report.failures
        ],
        "status": report.status,
    }


def _cmd_verify(args):
    ranges = {}
    for _, dest in _RANGE_FLAGS:
        value = getattr(args, dest)
        if value is not None:
            ranges[dest] = value
    params = {"identity": args.identity}
    params.update({k.replace("_", "-"): str(v) for k, v in sorted(ranges.items())})
    if args.identity == "all":
        if ranges:
            raise ValueError("range flags are not accepted with 'all'")
        reports = run_all()
    else:
        reports = [verify_sweep(args.identity, ranges or None)]
    status = "pass" if all(r.passed for r in reports) else "fail"
    record = _record(
        "verify", params, {"reports": [_report_payload(r) for r in reports]}, status
    )
    code = _EXIT_OK if status == "pass" else _EXIT_VERIFY_FAIL
    return record, "verify", code


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--output",
        metavar="PATH",
        default=None,
        help="write the rendered output to PATH instead of stdout",
    )

    parser = argparse.ArgumentParser(
        prog="charrank",
        description="Exact restricted-partition counts, Grassmannian Betti "
        "tables, Betti-number upper bounds, and identity verification.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    count = subs.add_parser("count", help="exact partition counts")
    count_subs = count.add_subparsers(dest="subject", required=True)

    box = count_subs.add_parser("box", parents=[common], help="partitions in a box")
    box.add_argument("max_part", type=_nonneg_int, metavar="MAX_PART")
    box.add_argument("max_parts", type=_nonneg_int, metavar="MAX_PARTS")
    box.add_argument("weight", type=_nonneg_int, metavar="WEIGHT")
    box.set_defaults(handler=_cmd_count)

    set_exact = count_subs.add_parser(
        "set-exact", parents=[common], help="exactly NUM_PARTS parts from --parts"
    )
    set_exact.add_argument("--parts", type=_parts_csv, required=True, metavar="P1,P2,..")
    set_exact.add_argument("num_parts", type=_nonneg_int, metavar="NUM_PARTS")
    set_exact.add_argument("weight", type=_nonneg_int, metavar="WEIGHT")
    set_exact.set_defaults(handler=_cmd_count)

    set_any = count_subs.add_parser(
        "set-any", parents=[common], help="any number of parts from --parts"
    )
    set_any.add_argument("--parts", type=_parts_csv, required=True, metavar="P1,P2,..")
    set_any.add_argument("weight", type=_nonneg_int, metavar="WEIGHT")
    set_any.set_defaults(handler=_cmd_count)

    total = count_subs.add_parser(
        "total", parents=[common], help="unrestricted partition number"
    )
    total.add_argument("weight", type=_nonneg_int, metavar="WEIGHT")
    total.set_defaults(handler=_cmd_count)

    betti_cmd = subs.add_parser(
        "betti", parents=[common], help="Betti numbers of the k-planes-in-R^n Grassmannian"
    )
    betti_cmd.add_argument("n", type=_nonneg_int, metavar="N")
    betti_cmd.add_argument("k", type=_nonneg_int, metavar="K")
    betti_cmd.add_argument(
        "degree", type=_nonneg_int, nargs="?", default=None, metavar="DEGREE"
    )
    betti_cmd.set_defaults(handler=_cmd_betti)

    bound = subs.add_parser(
        "bound", parents=[common], help="Betti-number upper bound from a bundle profile"
    )
    bound.add_argument("--set", type=_parts_csv, required=True, metavar="P1,P2,..",
                       help="degrees with possibly nonzero classes, ascending")
    bound.add_argument("--dim", type=_extent, required=True, metavar="DIM|inf")
    bound.add_argument("--charrank", type=_extent, required=True, metavar="T|inf")
    bound.add_argument("--degree", type=_nonneg_int, required=True, metavar="DEGREE")
    bound.add_argument("--gapless", action="store_true",
                       help="evaluate through the box-count form (requires a gapless set)")
    bound.set_defaults(handler=_cmd_bound)

    verify = subs.add_parser(
        "verify", parents=[common], help="sweep an identity over a parameter grid"
    )
    verify.add_argument("identity", choices=_VERIFY_CHOICES, metavar="IDENTITY",
                        help="one of: " + ", ".join(_VERIFY_CHOICES))
    for flag, dest in _RANGE_FLAGS:
        verify.add_argument(flag, dest=dest, type=_nonneg_int, default=None)
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return _EXIT_OK if not exc.code else _EXIT_USAGE
    try:
        record, kind, code = args.handler(args)
        rendered = _RENDERERS[kind](record, args.format)
    except (CharrankError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as sink:
            sink.write(rendered)
    else:
        sys.stdout.write(rendered)
    return code


if __name__ == "__main__":
    sys.exit(main())
