"""Measure witness streams by construction and compare against the bound tables."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import ideals
from .atoms import CaseNotCovered, atom_dfa, enumerate_atoms
from .automata import (
    Dfa,
    complexity,
    concat_epsilon,
    concat_ideal_redirect,
    boolean_product,
    minimize,
    quotient_complexities,
    reverse,
    star_generic,
)
from .semigroup import SemigroupOverflow, syntactic_semigroup_size
from .witnesses import apply_dialect, mutate, sorted_alphabet, witness

CLASS_ORDER = ("right", "left", "two_sided")
MEASURE_ORDER = ("semigroup", "quotient_profile", "atom_count", "atom_complexity", "reversal",
                 "star", "product", "product_redirect", "intersection", "symmetric_difference",
                 "difference", "union")


def base_witness(cls: str, n: int, corrupt: bool = False) -> Dfa:
    d = witness(cls, n)
    return mutate(d) if corrupt else d


def measure_unary(measure: str, dfa: Dfa, cap: int | None = None):
    """Measured value of a unary measure on ``dfa``."""
    if measure == "semigroup":
        return syntactic_semigroup_size(dfa, cap)
    if measure == "quotient_profile":
        return list(quotient_complexities(dfa))
    if measure == "atom_count":
        return len(enumerate_atoms(minimize(dfa)))
    if measure == "reversal":
        return complexity(reverse(dfa))
    if measure == "star":
        return complexity(star_generic(dfa))
    raise ValueError(f"unknown unary measure {measure!r}")


def measure_binary(measure: str, d1: Dfa, d2: Dfa):
    """Measured value of a binary measure; boolean operands are aligned by sorting letters."""
    if measure == "product":
        return complexity(concat_epsilon(d1, d2))
    if measure == "product_redirect":
        return complexity(concat_ideal_redirect(d1, d2))
    return complexity(boolean_product(sorted_alphabet(d1), sorted_alphabet(d2), measure))


@dataclass
class Record:
    cls: str
    measure: str
    params: dict
    expected: object = None
    measured: object = None
    passed: bool = False
    ms: float | None = None
    error: str | None = None

    def sort_key(self):
        p = self.params
        return (CLASS_ORDER.index(self.cls), MEASURE_ORDER.index(self.measure),
                bool(p.get("same_stream")), p.get("m") or 0, p.get("n") or 0,
                len(p.get("S") or ()), tuple(p.get("S") or ()))

    def to_dict(self) -> dict:
        d = {"class": self.cls, "measure": self.measure, "params": self.params,
             "expected": self.expected, "measured": self.measured, "pass": self.passed,
             "ms": self.ms}
        if self.error is not None:
            d["error"] = self.error
        return d


@dataclass
class VerificationReport:
    records: list[Record] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.records)

    @property
    def failed(self) -> int:
        return len(self.records) - self.passed

    @property
    def overflowed(self) -> bool:
        return any(r.error and r.error.startswith("SemigroupOverflow") for r in self.records)

    def exit_code(self) -> int:
        if self.failed == 0:
            return 0
        return 3 if self.overflowed else 1

    def to_dict(self) -> dict:
        return {"checks": [r.to_dict() for r in self.records],
                "summary": {"pass": self.passed, "fail": self.failed}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["class", "measure", "m", "n", "S", "same_stream", "dialect",
                         "expected", "measured", "pass", "ms"])
        for c in self.to_dict()["checks"]:
            p = c["params"]
            writer.writerow([c["class"], c["measure"], p.get("m", ""), p.get("n", ""),
                             _fmt(p.get("S", "")), p.get("same_stream", ""), _fmt(p.get("dialect", "")),
                             _fmt(c["expected"]), _fmt(c["measured"]), c["pass"],
                             "" if c["ms"] is None else c["ms"]])
        return out.getvalue()

    def to_markdown(self) -> str:
        lines = ["| class | measure | m | n | S | dialect | expected | measured | result |",
                 "|---|---|---|---|---|---|---|---|---|"]
        for c in self.to_dict()["checks"]:
            p = c["params"]
            measure = c["measure"] + (" (same stream)" if p.get("same_stream") else "")
            lines.append("| " + " | ".join(str(x) for x in (
                c["class"], measure, p.get("m", ""), p.get("n", ""), _fmt(p.get("S", "")),
                _fmt(p.get("dialect", "")), _fmt(c["expected"]), _fmt(c["measured"]),
                "pass" if c["pass"] else "FAIL")) + " |")
        s = self.to_dict()["summary"]
        lines.append("")
        lines.append(f"{s['pass']} passed, {s['fail']} failed")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "markdown":
            return self.to_markdown()
        raise ValueError(f"unknown format {fmt!r}")


def _fmt(value) -> str:
    if isinstance(value, (list, tuple)):
        return " ".join(str(x) for x in value) if value and not isinstance(value[0], str) \
            else "/".join(str(x) for x in value)
    return "" if value is None else str(value)


def _run(record: Record, measure_fn, timing: bool) -> Record:
    start = time.perf_counter()
    try:
        record.measured = measure_fn()
        record.passed = record.error is None and record.measured == record.expected
    except SemigroupOverflow as exc:
        record.error = f"SemigroupOverflow: {exc}"
    except Exception as exc:  # recorded, the run goes on
        record.error = f"{type(exc).__name__}: {exc}"
    if timing:
        record.ms = round((time.perf_counter() - start) * 1000, 3)
    return record


def _expected(record: Record, **kwargs) -> bool:
    try:
        record.expected = ideals.expected(record.cls, **kwargs)
        if isinstance(record.expected, tuple):
            record.expected = list(record.expected)
        return True
    except CaseNotCovered as exc:
        record.error = f"CaseNotCovered: {exc}"
    except ValueError as exc:
        record.error = f"ValueError: {exc}"
    return False


def unary_checks(cls: str, n: int, corrupt: bool = False, cap: int | None = None,
                 timing: bool = False) -> list[Record]:
    records = []
    for measure in ("semigroup", "quotient_profile", "atom_count", "reversal", "star"):
        dialect = ideals.dialects_for(cls, measure)
        rec = Record(cls, measure, {"n": n, "dialect": dialect})
        _expected(rec, measure=measure, n=n)
        records.append(_run(rec, lambda: measure_unary(
            measure, apply_dialect(base_witness(cls, n, corrupt), dialect), cap), timing))
    return records


def atom_checks(cls: str, n: int, corrupt: bool = False, timing: bool = False) -> list[Record]:
    """One record per non-empty atom of the full-alphabet witness."""
    dialect = ideals.dialects_for(cls, "atom_complexity")
    try:
        dfa = apply_dialect(base_witness(cls, n, corrupt), dialect)
        atoms = enumerate_atoms(dfa)
    except Exception as exc:
        rec = Record(cls, "atom_complexity", {"n": n, "dialect": dialect},
                     error=f"{type(exc).__name__}: {exc}")
        return [rec]
    records = []
    for s, _ in atoms:
        rec = Record(cls, "atom_complexity", {"n": n, "S": list(s.subset), "dialect": dialect})
        _expected(rec, measure="atom_complexity", n=n, subset=s.subset)
        records.append(_run(rec, lambda: atom_dfa(dfa, s).n, timing))
    return records


def binary_checks(cls: str, m: int, n: int, corrupt: bool = False,
                  timing: bool = False) -> list[Record]:
    records = []
    d1p, d2p = ideals.dialects_for(cls, "product")
    first = apply_dialect(base_witness(cls, m, corrupt), d1p)
    second = apply_dialect(base_witness(cls, n, corrupt), d2p)
    products = ["product"] if cls == "right" else ["product", "product_redirect"]
    for measure in products:
        rec = Record(cls, measure, {"m": m, "n": n, "dialect": [d1p, d2p]})
        _expected(rec, measure="product", m=m, n=n)
        records.append(_run(rec, lambda: measure_binary(measure, first, second), timing))
        if measure == "product_redirect" and rec.passed:
            agree = minimize(concat_ideal_redirect(first, second)) == concat_epsilon(first, second)
            if not agree:
                rec.passed = False
                rec.error = "redirect construction disagrees with the epsilon-NFA product"

    variants = [False]
    if ideals.has_same_stream(cls) and m != n:
        variants.append(True)
    for same in variants:
        d1b, d2b = ideals.dialects_for(cls, "union", same_stream=same)
        first = apply_dialect(base_witness(cls, m, corrupt), d1b)
        second = apply_dialect(base_witness(cls, n, corrupt), d2b)
        for op in ("intersection", "symmetric_difference", "difference", "union"):
            params = {"m": m, "n": n, "dialect": [d1b, d2b]}
            if same:
                params["same_stream"] = True
            rec = Record(cls, op, params)
            _expected(rec, measure=op, m=m, n=n, same_stream=same)
            records.append(_run(rec, lambda: measure_binary(op, first, second), timing))
    return records


def _task(args):
    kind, cls, a, b, corrupt, cap, timing = args
    if kind == "unary":
        return unary_checks(cls, b, corrupt, cap, timing)
    if kind == "atoms":
        return atom_checks(cls, b, corrupt, timing)
    return binary_checks(cls, a, b, corrupt, timing)


def verify(cls: str, ns, mns, corrupt: bool = False, cap: int | None = None,
           timing: bool = False, jobs: int = 1, atoms: bool = True) -> VerificationReport:
    """Run every check for ``cls`` over ``ns`` (unary) and ``mns`` x ``mns`` (binary)."""
    if cls not in CLASS_ORDER:
        raise ValueError(f"unknown class {cls!r}")
    tasks = [("unary", cls, None, n, corrupt, cap, timing) for n in ns]
    if atoms:
        tasks += [("atoms", cls, None, n, corrupt, cap, timing) for n in ns]
    tasks += [("binary", cls, m, n, corrupt, cap, timing) for m in mns for n in mns]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_task, tasks))
    else:
        chunks = [_task(t) for t in tasks]
    records = [r for chunk in chunks for r in chunk]
    records.sort(key=Record.sort_key)
    return VerificationReport(records)
