"""Command-line front end.

Exit status: 0 success, 1 domain failure (invalid tuple, inequivalent pair,
out-of-range count), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .census import ComplexityBound, compare_counts, enumerate_census
from .decomposition import decompose, name_lookup
from .equivalence import MoveSystem, are_equivalent, canonical_form
from .homology import build_model, homology, singular_vertex_count
from .invariants import (
    TupleSyntaxError,
    parse_tuple,
    serialize_tuple,
    tuple_to_json,
    validate,
)


class DomainError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def _tuples(args, stdin: TextIO) -> list[str]:
    texts = list(args.tuples)
    if not texts:
        texts = [line.strip() for line in stdin if line.strip()]
    if not texts:
        raise TupleSyntaxError("no tuple given", 0)
    return texts


def _valid(text: str):
    t = parse_tuple(text)
    report = validate(t)
    if not report.ok:
        raise DomainError(f"{text}: " + "; ".join(v.message for v in report.violations))
    return t


def _moves(args) -> MoveSystem:
    return MoveSystem(oriented=args.oriented)


def cmd_validate(args, out, stdin) -> int:
    status = 0
    for text in _tuples(args, stdin):
        report = validate(parse_tuple(text))
        if args.json:
            out.write(_dumps(report.to_json()) + "\n")
        elif report.ok:
            out.write("ok\n")
        else:
            for v in report.violations:
                out.write(f"{v.rule}: {v.message}\n")
        status = status or (0 if report.ok else 1)
    return status


def cmd_canon(args, out, stdin) -> int:
    for text in _tuples(args, stdin):
        c = canonical_form(_valid(text), _moves(args)).inner
        if args.json:
            out.write(_dumps({**tuple_to_json(c), "canonical": True}) + "\n")
        else:
            out.write(serialize_tuple(c) + "\n")
    return 0


def cmd_eq(args, out, stdin) -> int:
    a, b = _valid(args.a), _valid(args.b)
    same = are_equivalent(a, b, _moves(args))
    out.write(("equivalent" if same else "inequivalent") + "\n")
    return 0 if same else 1


def cmd_decompose(args, out, stdin) -> int:
    for text in _tuples(args, stdin):
        d = decompose(_valid(text))
        out.write(_dumps(d.to_json(name_lookup(d, _moves(args)))) + "\n")
    return 0


def cmd_count(args, out, stdin) -> int:
    try:
        report = compare_counts(args.r, args.s)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    out.write(_dumps(report.to_json()) + "\n")
    return 0


_BOUND_FIELDS = ("max_genus", "max_f", "max_t", "max_s", "max_alpha", "max_pairs", "max_b_abs", "max_r")


def cmd_census(args, out, stdin) -> int:
    try:
        bound = ComplexityBound(**{k: getattr(args, k) for k in _BOUND_FIELDS})
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    for c in enumerate_census(bound, _moves(args), jobs=args.jobs):
        if args.format == "tuple":
            out.write(serialize_tuple(c.inner) + "\n")
        else:
            out.write(_dumps({**tuple_to_json(c.inner), "canonical": True}) + "\n")
    return 0


def cmd_homology(args, out, stdin) -> int:
    try:
        K = build_model(args.model)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    singular = singular_vertex_count(K) if K.dimension == 3 else None
    out.write(_dumps({"H": [h.to_json() for h in homology(K)], "singular_vertices": singular}) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--oriented", action="store_true",
                        help="disable the orientation-reversal move")
    common.add_argument("--json", action="store_true", help="JSON output where applicable")

    parser = argparse.ArgumentParser(
        prog="alexcircle",
        description="Invariants of circle actions on closed Alexandrov 3-spaces.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    for verb, fn, help_ in [
        ("validate", cmd_validate, "check legality of tuples"),
        ("canon", cmd_canon, "print canonical forms"),
        ("decompose", cmd_decompose, "split into manifold part and suspensions"),
    ]:
        p = sub.add_parser(verb, parents=[common], help=help_)
        p.add_argument("tuples", nargs="*", help="tuples; read from stdin (one per line) if omitted")
        p.set_defaults(func=fn)

    p = sub.add_parser("eq", parents=[common], help="decide equivalence of two tuples")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("count", parents=[common], help="compare the two action counts")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("census", parents=[common], help="stream canonical tuples within bounds")
    for name in _BOUND_FIELDS:
        p.add_argument("--" + name.replace("_", "-"), dest=name, type=int, default=0)
    p.add_argument("--format", choices=("jsonl", "tuple"), default="jsonl")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("homology", parents=[common], help="homology of a curated model")
    p.add_argument("--model", required=True,
                   help="rp2, or '#'-joined summands from s3, s2xs1, sus_rp2, sus_rp2^k")
    p.set_defaults(func=cmd_homology)
    return parser


def run(
    argv: Sequence[str] | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
    stdin: TextIO | None = None,
) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, stdout, stdin)
    except TupleSyntaxError as exc:
        stderr.write(f"parse error: {exc}\n")
        return 2
    except DomainError as exc:
        stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
