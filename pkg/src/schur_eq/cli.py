"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 disconnected shape, 4 survey disagreement.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .equality import (
    EQUALS,
    NOT_EQUAL,
    EqualityVerdict,
    schur_equal_finite,
    schur_equal_infinite,
    second_witness_bounded,
    second_witness_infinite,
)
from .errors import DisconnectedShape, SchurEqError
from .littlewood_richardson import expand_skew_schur, restrict_expansion
from .shapes import parse_shape
from .survey import run_survey
from .tableaux import superstandard_filling

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DISCONNECTED = 3
EXIT_DISAGREEMENT = 4

DEFAULT_MAX_BOXES = 12


def _max_boxes_cap() -> int:
    raw = os.environ.get("SCHUR_EQ_MAX_BOXES")
    if raw is None:
        return DEFAULT_MAX_BOXES
    try:
        return int(raw)
    except ValueError:
        raise SchurEqError(f"SCHUR_EQ_MAX_BOXES must be an integer, got {raw!r}") from None


def _parse_nvars_list(text: str) -> list[int]:
    try:
        values = [int(chunk) for chunk in text.split(",") if chunk.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"variable counts must be positive, got {text!r}")
    return values


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _infinite_verdict(shape) -> EqualityVerdict:
    nu = schur_equal_infinite(shape)
    if nu is not None:
        return EqualityVerdict(EQUALS, nu)
    return EqualityVerdict(NOT_EQUAL, witnesses=(superstandard_filling(shape), second_witness_infinite(shape)))


def cmd_expand(args: argparse.Namespace) -> int:
    shape = parse_shape(args.shape)
    expansion = expand_skew_schur(shape)
    if args.nvars is not None:
        expansion = restrict_expansion(expansion, args.nvars)
    if args.json:
        print(expansion.to_json())
    else:
        for nu, coeff in expansion.sorted_terms():
            print(f"{nu}: {coeff}")
        if not expansion:
            print("0")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    shape = parse_shape(args.shape)
    verdict = _infinite_verdict(shape) if args.nvars is None else schur_equal_finite(shape, args.nvars)
    if args.json:
        print(json.dumps(verdict.to_dict()))
        return EXIT_OK
    where = "" if args.nvars is None else f" in {args.nvars} variables"
    if verdict.status == EQUALS:
        print(f"s[{shape}] = s[{verdict.partition}]{where}")
    elif verdict.status == NOT_EQUAL:
        print(f"s[{shape}] is not a single Schur function{where}; two lattice fillings:")
        print("\n\n".join(w.render() for w in verdict.witnesses))
    else:
        print(f"s[{shape}] = 0{where}")
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    shape = parse_shape(args.shape)
    if args.nvars is None:
        witness = second_witness_infinite(shape)
    else:
        witness = second_witness_bounded(shape, args.nvars)
    if args.json:
        print(json.dumps({"witness": witness.render() if witness is not None else None}))
    elif witness is None:
        print("the column-superstandard filling is the only lattice filling")
    else:
        print(witness.render())
    return EXIT_OK


def cmd_survey(args: argparse.Namespace) -> int:
    cap = _max_boxes_cap()
    if args.max_boxes < 0:
        raise SchurEqError(f"--max-boxes must be non-negative, got {args.max_boxes}")
    if args.max_boxes > cap:
        raise SchurEqError(f"--max-boxes {args.max_boxes} exceeds the safety cap {cap} (set SCHUR_EQ_MAX_BOXES)")
    report = run_survey(args.max_boxes, args.nvars, jobs=args.jobs)
    text = json.dumps(report.to_dict(), indent=2) if args.json else report.render()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        summary = report.summary()
        print(f"wrote {summary['shapes']} records to {args.out}; disagreements={summary['disagreements']}")
    else:
        print(text)
    return EXIT_OK if report.passed else EXIT_DISAGREEMENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schur-eq",
        description="Decide when a skew Schur function equals a single Schur function.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def shape_command(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("shape", help='skew shape such as "4,3,2,2/2,1" or "3,2"')
        p.add_argument("--nvars", type=_positive, default=None, help="number of variables n")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    shape_command("expand", cmd_expand, "Schur expansion of a skew Schur function")
    shape_command("check", cmd_check, "is the skew Schur function a single Schur function?")
    shape_command("witness", cmd_witness, "a second lattice filling proving non-equality")

    p = sub.add_parser("survey", help="cross-check every connected shape up to a size bound")
    p.add_argument("--max-boxes", type=int, required=True)
    p.add_argument("--nvars", type=_parse_nvars_list, default=[1, 2, 3, 4], help="e.g. 2,3,4 (default 1,2,3,4)")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DisconnectedShape as exc:
        print(f"error: disconnected shape: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except SchurEqError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
