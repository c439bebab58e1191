"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
3 distinctness precondition failed, 4 inverse infeasible (a condition c_s fails).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijection import ConditionViolation, NotDDistinctError, NotDistinctError, trace
from .enumeration import (
    PREDICATES,
    at_most_m_parts,
    d_distinct,
    meets_conditions,
    parts_at_most_m,
    partitions_of,
)
from .partition import (
    BRESSOUD,
    BRESSOUD_DUAL,
    NotAPartitionError,
    ResiduePermutation,
    format_partition,
    parse_partition,
    render_young,
)
from .verification import verify_range

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_INFEASIBLE = 4

FILTERS = (
    "all",
    "1-distinct",
    "d-distinct",
    "target",
    "at-most-m-parts",
    "parts-at-most-m",
    "all-odd",
    "even-part-count",
)


class UsageError(Exception):
    pass


def _add_pi_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--d", type=int, help="distinctness gap (inferred from --pi if omitted)")
    p.add_argument("--pi", help="residue permutation as the image list pi(0),...,pi(d-1)")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--bressoud", action="store_true", help="d=2, pi=1,0 (even parts exceed twice #odd)")
    grp.add_argument("--dual", action="store_true", help="d=2, pi=0,1 (odd parts exceed twice #even)")


def _resolve_pi(args) -> ResiduePermutation:
    if args.bressoud or args.dual:
        if args.pi is not None:
            raise UsageError("--pi cannot be combined with --bressoud/--dual")
        pi = BRESSOUD if args.bressoud else BRESSOUD_DUAL
        if args.d not in (None, 2):
            raise UsageError(f"--bressoud/--dual imply d=2, got --d {args.d}")
        return pi
    if args.pi is None:
        if args.d is None:
            raise UsageError("need --pi (or --bressoud/--dual)")
        if args.d < 1:
            raise UsageError(f"--d must be positive, got {args.d}")
        return ResiduePermutation.identity(args.d)
    try:
        return ResiduePermutation.parse(args.pi, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse(text: str):
    try:
        return parse_partition(text)
    except NotAPartitionError as exc:
        raise UsageError(str(exc)) from None


def _print_trace(t, as_json: bool, show_trace: bool) -> None:
    if as_json:
        print(t.to_json())
    elif show_trace:
        sys.stdout.write(t.render())
    else:
        print(format_partition(t.output))


def cmd_map(args) -> int:
    lam = _parse(args.partition)
    pi = _resolve_pi(args)
    try:
        t = trace(lam, pi, "forward")
    except NotDDistinctError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _print_trace(t, args.json, args.trace)
    return EXIT_OK


def cmd_unmap(args) -> int:
    mu = _parse(args.partition)
    pi = _resolve_pi(args)
    try:
        t = trace(mu, pi, "inverse")
    except NotDistinctError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ConditionViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    _print_trace(t, args.json, args.trace)
    return EXIT_OK


def _filter_predicate(args):
    f = args.filter
    if f == "all":
        return None
    if f == "1-distinct":
        return PREDICATES["all-distinct"]
    if f in ("all-odd", "even-part-count"):
        return PREDICATES[f]
    if f == "d-distinct":
        if args.d is None or args.d < 1:
            raise UsageError("filter d-distinct needs a positive --d")
        return d_distinct(args.d)
    if f == "target":
        return meets_conditions(_resolve_pi(args))
    if f in ("at-most-m-parts", "parts-at-most-m"):
        if args.m is None or args.m < 0:
            raise UsageError(f"filter {f} needs a nonnegative --m")
        return at_most_m_parts(args.m) if f == "at-most-m-parts" else parts_at_most_m(args.m)
    raise UsageError(f"unknown filter {f!r}")


def cmd_enumerate(args) -> int:
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    pred = _filter_predicate(args)
    stream = partitions_of(args.n)
    if pred is not None:
        stream = (lam for lam in stream if pred(lam))
    if args.count:
        k = sum(1 for _ in stream)
        print(json.dumps({"n": args.n, "filter": args.filter, "count": k}) if args.json else k)
    elif args.json:
        print(json.dumps([list(lam.parts) for lam in stream]))
    else:
        for lam in stream:
            print(format_partition(lam))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_max < 0 or args.d_max < 1:
        raise UsageError("need --n-max >= 0 and --d-max >= 1")
    result = verify_range(args.n_max, args.d_max, jobs=args.jobs)
    for line in result.json_lines():
        print(line)
    return EXIT_OK if result.passed else EXIT_VERIFY_FAILED


def cmd_render(args) -> int:
    lam = _parse(args.partition)
    if args.json:
        print(json.dumps({"parts": list(lam.parts), "weight": lam.weight,
                          "rows": render_young(lam).splitlines()}))
    elif lam.parts:
        print(render_young(lam, box=args.box))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bressoud",
        description="Generalized Bressoud bijection on d-distinct partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_ in (
        ("map", cmd_map, "image of a d-distinct partition"),
        ("unmap", cmd_unmap, "preimage of a 1-distinct partition"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("partition", help='comma-separated parts, e.g. 6,3; "-" for empty')
        _add_pi_options(p)
        p.add_argument("--trace", action="store_true", help="draw every step")
        p.add_argument("--json", action="store_true", help="emit the step trace as JSON")
        p.set_defaults(func=func)

    p = sub.add_parser("enumerate", help="list or count partitions of n")
    p.add_argument("n", type=int)
    p.add_argument("--filter", default="all", choices=FILTERS)
    p.add_argument("--m", type=int, help="bound for at-most-m-parts / parts-at-most-m")
    _add_pi_options(p)
    p.add_argument("--count", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustively check the identities")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a Young diagram")
    p.add_argument("partition")
    p.add_argument("--box", default="#")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
