"""Command-line driver: ``ideal-lab witness|measure|verify``.

Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error,
3 semigroup cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import ideals
from .atoms import enumerate_atoms
from .automata import BOOLEAN_OPS, Dfa, minimize
from .semigroup import SemigroupOverflow
from .verify import measure_binary, measure_unary, verify
from .witnesses import CLASSES, MIN_N, apply_dialect, witness

CAP_ENV = "IDEAL_LAB_CAP"

UNARY = ("semigroup", "quotient_profile", "atom_count", "atoms", "reversal", "star", "complexity")
BINARY = ("product", "product_redirect") + BOOLEAN_OPS


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"3..6"`` -> [3, 4, 5, 6]; a single number is a one-element range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or LO..HI") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _cap(args) -> int | None:
    if args.cap is not None:
        return args.cap
    env = os.environ.get(CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{CAP_ENV} must be an integer, got {env!r}") from None
    return None


def _witness(cls: str, n: int, dialect: str | None) -> Dfa:
    try:
        return witness(cls, n, dialect)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load(path: str) -> Dfa:
    try:
        return Dfa.from_json(Path(path).read_text())
    except (OSError, ValueError, TypeError) as exc:
        raise UsageError(f"cannot read DFA from {path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_witness(args) -> int:
    dfa = _witness(args.cls, args.n, args.dialect or args.dialect_opt)
    _emit(dfa.to_json() + "\n", args.out)
    return 0


def _default_dialect(cls, measure, index=0):
    if cls not in ideals.DIALECTS:
        return None
    key = "atom_count" if measure == "atoms" else measure
    if key == "complexity":
        return None
    d = ideals.dialects_for(cls, key)
    return d[index] if isinstance(d, tuple) else d


def cmd_measure(args) -> int:
    measure = args.measure
    cap = _cap(args)
    params: dict = {}
    if measure in UNARY:
        if len(args.files) > 1:
            raise UsageError(f"{measure} takes one DFA")
        if args.files:
            dfa = _load(args.files[0])
            params["file"] = args.files[0]
        else:
            if args.cls is None or args.n is None:
                raise UsageError("give a DFA file or --class and --n")
            dialect = args.dialect or _default_dialect(args.cls, measure)
            dfa = _witness(args.cls, args.n, dialect)
            params.update({"class": args.cls, "n": args.n, "dialect": dialect})
        if measure == "complexity":
            value = minimize(dfa).n
        elif measure == "atoms":
            atoms = enumerate_atoms(minimize(dfa))
            value = len(atoms)
            params["atoms"] = [{"S": list(s.subset), "complexity": k} for s, k in atoms]
        else:
            value = measure_unary(measure, dfa, cap)
    else:
        if args.files:
            if len(args.files) != 2:
                raise UsageError(f"{measure} takes two DFA files")
            d1, d2 = (_load(f) for f in args.files)
            params["files"] = list(args.files)
        else:
            if args.cls is None or args.n is None or args.m is None:
                raise UsageError("give two DFA files or --class, --m and --n")
            if args.cls not in ideals.DIALECTS:
                raise UsageError(f"binary measures need an ideal class, got {args.cls!r}")
            key = "product" if measure == "product_redirect" else measure
            try:
                pair = ideals.dialects_for(args.cls, key, same_stream=args.same_stream)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            dia1 = args.dialect or pair[0]
            dia2 = args.dialect2 or pair[1]
            d1 = _witness(args.cls, args.m, dia1)
            d2 = _witness(args.cls, args.n, dia2)
            params.update({"class": args.cls, "m": args.m, "n": args.n, "dialect": [dia1, dia2]})
        try:
            value = measure_binary(measure, d1, d2)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _emit(json.dumps({"measure": measure, "params": params, "value": value}) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    cls = args.cls
    if cls not in ideals.MIN_N:
        raise UsageError(f"verify needs an ideal class, got {cls!r}")
    lo = ideals.MIN_N[cls]
    ns = parse_range(args.n) if args.n else list(range(lo, 8))
    mns = parse_range(args.mn) if args.mn else list(range(lo, 7))
    for v in ns + mns:
        if v < lo:
            raise UsageError(f"{cls}: n >= {lo} required, got {v}")
    report = verify(cls, ns, mns, corrupt=args.corrupt, cap=_cap(args), timing=args.timing,
                    jobs=args.jobs)
    _emit(report.render(args.format), args.out)
    s = report.to_dict()["summary"]
    print(f"{cls}: {s['pass']} passed, {s['fail']} failed", file=sys.stderr)
    return report.exit_code()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ideal-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witness", help="print a witness DFA as JSON")
    p.add_argument("cls", metavar="class", choices=CLASSES)
    p.add_argument("n", type=int)
    p.add_argument("dialect", nargs="?", help='slot string such as "a,b,-,d"')
    p.add_argument("--dialect", dest="dialect_opt")
    p.add_argument("--out")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("measure", help="measure one quantity")
    p.add_argument("measure", choices=UNARY + BINARY)
    p.add_argument("files", nargs="*", help="DFA JSON file(s) instead of a witness")
    p.add_argument("--class", dest="cls", choices=CLASSES)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--dialect")
    p.add_argument("--dialect2")
    p.add_argument("--same-stream", action="store_true",
                   help="use the same dialect for both boolean operands")
    p.add_argument("--cap", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("verify", help="run the verification grid for one class")
    p.add_argument("cls", metavar="class", nargs="?")
    p.add_argument("--class", dest="cls_opt")
    p.add_argument("--n", help="range for unary checks, e.g. 3..7")
    p.add_argument("--mn", help="range for m and n of binary checks, e.g. 3..6")
    p.add_argument("--format", choices=("json", "csv", "markdown"), default="json")
    p.add_argument("--cap", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="fill in per-check milliseconds")
    p.add_argument("--corrupt", action="store_true",
                   help="mutate one transition of every witness (negative control)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "verify":
        args.cls = args.cls or args.cls_opt
        if args.cls is None:
            print("error: verify needs a class", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SemigroupOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
