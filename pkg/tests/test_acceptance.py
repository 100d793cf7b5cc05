"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Every comparison is exact.  Expected values are written out as literal
formulas here rather than read from ``ideal_lab.ideals``.
"""

import random
import time

import pytest

from ideal_lab.atoms import atom_bound_formula, atom_dfa, enumerate_atoms
from ideal_lab.automata import (
    BOOLEAN_OPS,
    boolean_product,
    complexity,
    concat_epsilon,
    concat_ideal_redirect,
    determinize,
    minimize,
    quotient_complexities,
    reverse,
    star_generic,
)
from ideal_lab.semigroup import syntactic_semigroup_size
from ideal_lab.verify import verify
from ideal_lab.witnesses import (
    apply_dialect,
    check_ideal,
    is_right_ideal_structural,
    regular_witness,
    sorted_alphabet,
    witness,
)

from oracles import dfa_corpus, dfa_language, nfa_corpus, nfa_language, random_dfa

MAX_LEN = 8


@pytest.fixture
def report(capsys):
    def emit(number, title, failures, extra=""):
        status = "PASS" if not failures else "FAIL"
        line = f"[{status}] criterion {number}: {title}"
        if extra:
            line += f" ({extra})"
        if failures:
            line += f" -- {len(failures)} mismatches, first: {failures[:3]}"
        with capsys.disabled():
            print("\n" + line)
        assert not failures, line
    return emit


def W(cls, n, dialect=None):
    return witness(cls, n, dialect)


def boolean_value(cls, m, n, op, first, second):
    d1 = sorted_alphabet(W(cls, m, first))
    d2 = sorted_alphabet(W(cls, n, second))
    return complexity(boolean_product(d1, d2, op))


def mn_bound(op, m, n):
    return {"intersection": m * n, "symmetric_difference": m * n,
            "difference": m * n - (m - 1), "union": m * n - (m + n - 2)}[op]


def compare(failures, label, measured, expected):
    if measured != expected:
        failures.append((label, measured, expected))


# 1 -------------------------------------------------------------------------

def test_criterion_1_right_ideals(report):
    start = time.perf_counter()
    bad = []
    for n in range(3, 8):
        compare(bad, ("sigma", n), syntactic_semigroup_size(W("right", n)), n ** (n - 1))
        d = W("right", n, "a,-,-,d")
        compare(bad, ("quotients", n), quotient_complexities(d), [n] * (n - 1) + [1])
        compare(bad, ("atoms", n), len(enumerate_atoms(d)), 2 ** (n - 1))
        compare(bad, ("reversal", n), complexity(reverse(d)), 2 ** (n - 1))
        compare(bad, ("star", n), complexity(star_generic(d)), n + 1)
    for m in range(3, 7):
        for n in range(3, 7):
            product = concat_epsilon(W("right", m, "a,b,-,d"), W("right", n, "a,b,-,d"))
            compare(bad, ("product", m, n), product.n, m + 2 ** (n - 2))
            for op in BOOLEAN_OPS:
                compare(bad, (op, m, n),
                        boolean_value("right", m, n, op, "a,b,-,d", "b,a,-,d"), mn_bound(op, m, n))
                if m != n:
                    compare(bad, ("same-stream " + op, m, n),
                            boolean_value("right", m, n, op, "a,b,-,d", "a,b,-,d"), mn_bound(op, m, n))
    elapsed = time.perf_counter() - start
    if elapsed >= 120:
        bad.append(("runtime", round(elapsed, 1), "< 120 s"))
    report(1, "right-ideal suite", bad, f"{elapsed:.1f}s")


# 2 -------------------------------------------------------------------------

def test_criterion_2_left_ideals(report):
    start = time.perf_counter()
    bad = []
    for n in range(4, 8):
        compare(bad, ("sigma", n), syntactic_semigroup_size(W("left", n)), n ** (n - 1) + n - 1)
        compare(bad, ("quotients", n), quotient_complexities(W("left", n, "a,-,-,d,e")), [n] * n)
        d = W("left", n, "a,-,c,d,e")
        compare(bad, ("atoms", n), len(enumerate_atoms(d)), 2 ** (n - 1) + 1)
        compare(bad, ("reversal", n), complexity(reverse(d)), 2 ** (n - 1) + 1)
        compare(bad, ("star", n), complexity(star_generic(W("left", n, "a,-,-,-,e"))), n + 1)
    for m in range(4, 7):
        for n in range(4, 7):
            d1, d2 = W("left", m, "a,-,-,-,e"), W("left", n, "a,-,-,-,e")
            eps = concat_epsilon(d1, d2)
            redirected = minimize(concat_ideal_redirect(d1, d2))
            compare(bad, ("product", m, n), eps.n, m + n - 1)
            compare(bad, ("product redirect", m, n), redirected.n, m + n - 1)
            compare(bad, ("redirect == epsilon", m, n), redirected == eps, True)
            for op in BOOLEAN_OPS:
                compare(bad, (op, m, n),
                        boolean_value("left", m, n, op, "a,-,c,-,e", "a,-,e,-,c"), m * n)
    elapsed = time.perf_counter() - start
    if elapsed >= 120:
        bad.append(("runtime", round(elapsed, 1), "< 120 s"))
    report(2, "left-ideal suite", bad, f"{elapsed:.1f}s")


# 3 -------------------------------------------------------------------------

def test_criterion_3_two_sided_ideals(report):
    start = time.perf_counter()
    bad = []
    for n in range(5, 8):
        compare(bad, ("sigma", n), syntactic_semigroup_size(W("two_sided", n)),
                n ** (n - 2) + (n - 2) * 2 ** (n - 2) + 1)
        d = W("two_sided", n, "a,-,-,d,e,f")
        compare(bad, ("quotients", n), quotient_complexities(d), [n] * (n - 1) + [1])
        compare(bad, ("atoms", n), len(enumerate_atoms(d)), 2 ** (n - 2) + 1)
        compare(bad, ("reversal", n), complexity(reverse(d)), 2 ** (n - 2) + 1)
        compare(bad, ("star", n), complexity(star_generic(W("two_sided", n, "a,-,-,-,e,f"))), n + 1)
    for m in range(5, 8):
        for n in range(5, 8):
            d1, d2 = W("two_sided", m, "a,-,-,-,e,f"), W("two_sided", n, "a,-,-,-,e,f")
            compare(bad, ("product", m, n), complexity(concat_epsilon(d1, d2)), m + n - 1)
            for op in BOOLEAN_OPS:
                compare(bad, (op, m, n),
                        boolean_value("two_sided", m, n, op, "a,b,-,d,e,f", "b,a,-,d,e,f"),
                        mn_bound(op, m, n))
                if m != n:
                    compare(bad, ("same-stream " + op, m, n),
                            boolean_value("two_sided", m, n, op, "a,b,-,d,e,f", "a,b,-,d,e,f"),
                            mn_bound(op, m, n))
    elapsed = time.perf_counter() - start
    if elapsed >= 180:
        bad.append(("runtime", round(elapsed, 1), "< 180 s"))
    report(3, "two-sided-ideal suite", bad, f"{elapsed:.1f}s")


# 4 -------------------------------------------------------------------------

def test_criterion_4_atom_formulas(report):
    bad = []
    checked = 0
    for cls, ns in (("right", range(3, 8)), ("left", range(4, 8)), ("two_sided", range(5, 8))):
        for n in ns:
            d = W(cls, n)
            for s, k in enumerate_atoms(d):
                checked += 1
                try:
                    bound = atom_bound_formula(cls, n, s)
                except ValueError as exc:
                    bound = f"error: {exc}"
                compare(bad, (cls, n, s.subset), k, bound)
                if atom_dfa(d, s).n != k:
                    bad.append((cls, n, s.subset, "inconsistent atom_dfa"))
    by_class = {}
    for label, *_ in bad:
        by_class[label[0]] = by_class.get(label[0], 0) + 1
    report(4, "atom complexities equal the closed-form formulas", bad,
           f"{checked} atoms checked; mismatches by class: {by_class or 'none'}")


# 5 -------------------------------------------------------------------------

def test_criterion_5_alphabet_necessity(report):
    bad = []
    for cls, bound in (("right", 5 ** 4), ("left", 5 ** 4 + 4), ("two_sided", 150)):
        d = W(cls, 5)
        compare(bad, (cls, "full"), syntactic_semigroup_size(d), bound)
        for i, letter in enumerate(d.alphabet):
            slots = ",".join("-" if j == i else a for j, a in enumerate(d.alphabet))
            size = syntactic_semigroup_size(apply_dialect(d, slots))
            if not size < bound:
                bad.append((cls, "without " + letter, size, bound))
    report(5, "every letter is needed for the semigroup bound at n=5", bad)


# 6 -------------------------------------------------------------------------

_SET_OPS = {
    "union": set.__or__,
    "intersection": set.__and__,
    "difference": set.__sub__,
    "symmetric_difference": set.__xor__,
}


def test_criterion_6_property_suites(report):
    bad = []
    for i, nfa in enumerate(nfa_corpus(count=200)):
        if dfa_language(determinize(nfa), MAX_LEN) != nfa_language(nfa, MAX_LEN):
            bad.append(("determinize", i))

    dfas = dfa_corpus(count=200)
    for i, d in enumerate(dfas):
        lang = dfa_language(d, MAX_LEN)
        m = minimize(d)
        if dfa_language(m, MAX_LEN) != lang:
            bad.append(("minimize", i))
        r = reverse(d)
        if dfa_language(r, MAX_LEN) != {tuple(reversed(w)) for w in lang}:
            bad.append(("reverse", i))
        if len(enumerate_atoms(m)) != r.n:
            bad.append(("atoms vs reversal", i))

    rng = random.Random(99)
    for i in range(200):
        k = rng.randint(1, 3)
        d1, d2 = random_dfa(rng, k=k), random_dfa(rng, k=k)
        l1, l2 = dfa_language(d1, MAX_LEN), dfa_language(d2, MAX_LEN)
        for op in BOOLEAN_OPS:
            if dfa_language(boolean_product(d1, d2, op), MAX_LEN) != _SET_OPS[op](l1, l2):
                bad.append(("boolean " + op, i))

    for cls, ns in (("left", range(4, 8)), ("two_sided", range(5, 8))):
        dialect = "a,-,-,-,e" if cls == "left" else "a,-,-,-,e,f"
        for full in (False, True):
            for m in ns:
                for n in ns:
                    d1 = W(cls, m) if full else W(cls, m, dialect)
                    d2 = W(cls, n) if full else W(cls, n, dialect)
                    if minimize(concat_ideal_redirect(d1, d2)) != concat_epsilon(d1, d2):
                        bad.append(("redirect", cls, m, n, full))

    corpus = dfa_corpus(seed=31, count=200) + [
        W(c, n) for c, ns in (("regular", range(3, 7)), ("right", range(3, 8)),
                              ("left", range(4, 8)), ("two_sided", range(5, 8))) for n in ns]
    for i, d in enumerate(corpus):
        if is_right_ideal_structural(d) != check_ideal(d, "right"):
            bad.append(("check_ideal", i))
    report(6, "property suites against brute-force oracles", bad,
           "200 NFAs, 200 DFAs, 200 pairs, witness products, 222 ideal checks")


# 7 -------------------------------------------------------------------------

def test_criterion_7_negative_controls(report):
    bad = []
    corrupted = verify("right", [3], [3], corrupt=True)
    if corrupted.failed < 1 or corrupted.exit_code() != 1:
        bad.append(("corrupted witness not detected", corrupted.failed))
    d = regular_witness(4)
    for cls in ("right", "left", "two_sided"):
        if check_ideal(d, cls):
            bad.append(("regular witness accepted as", cls))
    report(7, "negative controls", bad, f"corrupted run: {corrupted.failed} failing checks")
