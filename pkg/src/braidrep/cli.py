"""Command-line interface.

Subcommands: phi, rep, burau, check, simulate.  Results are printed as a
single JSON document on stdout; diagnostics go to stderr.  Exit codes:
0 success, 1 computation-level failure (failing check, non-pure braid,
degenerate motion), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import braids
from .braids import BraidParseError, BraidWord, bigelow_beta
from .collinearity import (
    DegenerateEventError,
    TrajectoryError,
    calibrate_against_phi,
    detect_events,
    events_to_word,
    load_trajectories,
    sigma_motion,
)
from .gn3 import NotPureError, phi_pure, phi_word
from .laurent import LaurentRing, ParseError, rational_str
from .matrixrep import (
    burau_reduced,
    burau_unreduced,
    basis_index,
    check_braid_relations,
    check_relations,
    numeric_rep_of_word,
    rep_of_word,
    report_passed,
    strand_assignment,
)

USAGE_ERROR = 2
FAILURE = 1


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def build_parser():
    parser = argparse.ArgumentParser(
        prog="braidrep",
        description="Exact braid representations from collinearity events",
    )
    parser.add_argument(
        "--output",
        choices=("json", "pretty"),
        default="json",
        help="compact JSON (default) or indented output",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", help="image of a braid in the semidirect product")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("braid", help='braid word, e.g. "s1 s2^-1" or "1 -2"')

    p = sub.add_parser("rep", help="matrix of a pure braid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("braid", nargs="?", default=None)
    p.add_argument("--bigelow", action="store_true",
                   help="use the built-in Burau-kernel braid (n = 5 or 6)")
    p.add_argument(
        "--commutator-convention",
        choices=(braids.COMMUTATOR_ABA_B, braids.COMMUTATOR_A_B_AB),
        default=braids.DEFAULT_COMMUTATOR_CONVENTION,
        help="convention for the built-in commutator braid",
    )
    p.add_argument("--set", action="append", default=[], metavar="VAR=VALUE",
                   help="specialise a variable to an exact rational")
    p.add_argument("--set-rest", default=None, metavar="VALUE",
                   help="value for every variable not set explicitly")
    p.add_argument("--entry", nargs=2, default=None, metavar=("ROW", "COL"),
                   help="print a single entry, e.g. --entry x_1_2 x_1_2")
    p.add_argument("--symbolic", action="store_true",
                   help="allow the full symbolic matrix for long braids")

    p = sub.add_parser("burau", help="Burau matrix of a braid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("braid", nargs="?", default=None)
    p.add_argument("--bigelow", action="store_true")
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--set-t", default=None, metavar="VALUE",
                   help="specialise t to an exact rational")

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("which", choices=("gn-relations", "braid-relations", "oracle"))

    p = sub.add_parser("simulate", help="collinearity events of a motion")
    p.add_argument("file", nargs="?", default=None, help="trajectory JSON file")
    p.add_argument("--sigma", nargs=2, type=int, default=None, metavar=("N", "I"),
                   help="use the built-in swap motion of generator I on N points")
    p.add_argument("--segments", type=int, default=256)
    p.add_argument("--tolerance", type=float, default=1e-12)

    return parser


def _parse_braid(args):
    if getattr(args, "bigelow", False):
        if args.braid is not None:
            raise CliError("give either a braid word or --bigelow, not both",
                           USAGE_ERROR)
        convention = getattr(args, "commutator_convention",
                             braids.DEFAULT_COMMUTATOR_CONVENTION)
        try:
            return bigelow_beta(args.n, convention)
        except ValueError as exc:
            raise CliError(str(exc), USAGE_ERROR)
    if args.braid is None:
        raise CliError("missing braid word (or --bigelow)", USAGE_ERROR)
    try:
        return BraidWord.parse(args.braid, args.n)
    except (BraidParseError, ValueError) as exc:
        raise CliError(str(exc), USAGE_ERROR)


def _parse_rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"not a rational number: {text!r}", USAGE_ERROR) from exc


def _assignment(args, n):
    explicit = {}
    for item in args.set:
        if "=" not in item:
            raise CliError(f"--set expects VAR=VALUE, got {item!r}", USAGE_ERROR)
        name, _, value = item.partition("=")
        explicit[name.strip()] = _parse_rational(value.strip())
    if not explicit and args.set_rest is None:
        return None
    rest = _parse_rational(args.set_rest) if args.set_rest is not None else None
    names = LaurentRing.for_strands(n).names
    for name in explicit:
        if name not in names:
            raise CliError(f"unknown variable {name!r}", USAGE_ERROR)
    missing = [name for name in names if name not in explicit]
    if rest is None and missing:
        raise CliError(
            f"variables left unassigned (add --set-rest): {', '.join(missing)}",
            USAGE_ERROR,
        )
    if any(v == 0 for v in explicit.values()) or rest == 0:
        raise CliError("variables are units; zero assignments are not allowed",
                       USAGE_ERROR)
    return strand_assignment(n, explicit, rest if rest is not None else 1)


def _entry_pair(name, n):
    parts = name.split("_")
    if len(parts) == 3 and parts[0] == "x":
        try:
            pair = (int(parts[1]), int(parts[2]))
        except ValueError:
            pair = None
        if pair and pair in basis_index(n):
            return pair
    raise CliError(f"not a basis pair for n={n}: {name!r}", USAGE_ERROR)


def cmd_phi(args):
    if args.n < 2:
        raise CliError("need --n at least 2", USAGE_ERROR)
    word = _parse_braid(args)
    element = phi_word(word)
    return {
        "n": args.n,
        "permutation": list(element.perm.images),
        "word": element.word.to_json(),
    }


def cmd_rep(args):
    if args.n < 3:
        raise CliError("need --n at least 3", USAGE_ERROR)
    braid = _parse_braid(args)
    assignment = _assignment(args, args.n)
    try:
        word = phi_pure(braid)
    except NotPureError as exc:
        raise CliError(str(exc), FAILURE)
    if assignment is not None:
        matrix = numeric_rep_of_word(word, assignment)
        if args.entry:
            row = _entry_pair(args.entry[0], args.n)
            col = _entry_pair(args.entry[1], args.n)
            index = basis_index(args.n)
            return rational_str(matrix.entry(index[row], index[col]))
        basis = [f"x_{p}_{q}" for p, q in sorted(basis_index(args.n))]
        return matrix.to_json(basis, args.n)
    if len(word) > 60 and not args.symbolic:
        raise CliError(
            "long symbolic product; pass --symbolic to allow it, or "
            "specialise with --set/--set-rest",
            USAGE_ERROR,
        )
    matrix = rep_of_word(word)
    if args.entry:
        row = _entry_pair(args.entry[0], args.n)
        col = _entry_pair(args.entry[1], args.n)
        return str(matrix.pair_entry(row, col))
    return matrix.to_json()


def cmd_burau(args):
    if args.n < 2:
        raise CliError("need --n at least 2", USAGE_ERROR)
    braid = _parse_braid(args)
    if args.reduced:
        matrix = burau_reduced(braid)
        basis = [f"v_{i}" for i in range(1, args.n)]
    else:
        matrix = burau_unreduced(braid)
        basis = [f"e_{i}" for i in range(1, args.n + 1)]
    if args.set_t is not None:
        value = _parse_rational(args.set_t)
        if value == 0:
            raise CliError("t is a unit; zero is not allowed", USAGE_ERROR)
        return matrix.specialize({"t": value}).to_json(basis, args.n)
    return matrix.to_json(basis, args.n)


CHECK_BOUNDS = {
    "gn-relations": (4, 6),
    "braid-relations": (3, 5),
    "oracle": (3, 8),
}


def cmd_check(args):
    lo, hi = CHECK_BOUNDS[args.which]
    if not lo <= args.n <= hi:
        raise CliError(
            f"check {args.which} supports {lo} <= n <= {hi}", USAGE_ERROR
        )
    if args.which == "gn-relations":
        report = check_relations(args.n)
    elif args.which == "braid-relations":
        report = check_braid_relations(args.n)
    else:
        results = calibrate_against_phi(args.n)
        report = [
            {
                "relation": "oracle",
                "instance": f"i={r['i']}",
                "ok": r["match"] == "exact",
                **r,
            }
            for r in results
        ]
    passed = report_passed(report)
    doc = {
        "check": args.which,
        "n": args.n,
        "passed": passed,
        "instances": report,
    }
    if not passed:
        doc["failures"] = [e["instance"] for e in report if not e["ok"]]
    return doc, 0 if passed else FAILURE


def cmd_simulate(args):
    if (args.file is None) == (args.sigma is None):
        raise CliError("give a trajectory file or --sigma N I", USAGE_ERROR)
    if args.sigma is not None:
        n, i = args.sigma
        try:
            ts = sigma_motion(n, i, args.segments)
        except ValueError as exc:
            raise CliError(str(exc), USAGE_ERROR)
    else:
        try:
            ts = load_trajectories(args.file)
        except FileNotFoundError as exc:
            raise CliError(str(exc), USAGE_ERROR)
        except TrajectoryError as exc:
            raise CliError(f"malformed trajectory file: {exc}", USAGE_ERROR)
    try:
        events = detect_events(ts, args.tolerance)
    except DegenerateEventError as exc:
        raise CliError(str(exc), FAILURE)
    word = events_to_word(events, ts.n)
    return {
        "n": ts.n,
        "events": [
            {"time": e.time, "triple": list(e.triple)} for e in events
        ],
        "word": word.to_json(),
    }


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    handlers = {
        "phi": cmd_phi,
        "rep": cmd_rep,
        "burau": cmd_burau,
        "check": cmd_check,
        "simulate": cmd_simulate,
    }
    try:
        result = handlers[args.command](args)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    code = 0
    if isinstance(result, tuple):
        result, code = result
    if args.output == "pretty":
        print(json.dumps(result, indent=2))
    else:
        print(json.dumps(result))
    return code


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
