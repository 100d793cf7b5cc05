"""Witness DFA streams for regular languages and regular ideals, and their dialects."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .automata import (
    Dfa,
    concat_epsilon,
    cycle,
    determinize,
    isomorphic,
    left_ideal_closure_nfa,
    minimize,
    redirect,
    universal_dfa,
)

CLASSES = ("regular", "right", "left", "two_sided")
IDEAL_CLASSES = ("right", "left", "two_sided")
MIN_N = {"regular": 3, "right": 3, "left": 4, "two_sided": 5}


@dataclass(frozen=True)
class PartialPermutation:
    """A partial permutation of an ordered alphabet.

    ``images[i]`` is the letter that takes over the role of the i-th source
    letter, or ``None`` when that letter is deleted.
    """

    images: tuple[str | None, ...]

    def __post_init__(self):
        images = tuple(self.images)
        defined = [x for x in images if x is not None]
        if len(set(defined)) != len(defined):
            raise ValueError(f"dialect images must be distinct: {self}")
        object.__setattr__(self, "images", images)

    @classmethod
    def parse(cls, text: str) -> "PartialPermutation":
        """Parse ``"a,b,-,d"``; ``-`` marks an undefined slot."""
        parts = [p.strip() for p in text.split(",")]
        if any(p == "" for p in parts):
            raise ValueError(f"empty slot in dialect {text!r}")
        return cls(tuple(None if p == "-" else p for p in parts))

    @classmethod
    def identity(cls, alphabet: Sequence[str]) -> "PartialPermutation":
        return cls(tuple(alphabet))

    def __str__(self):
        return ",".join("-" if x is None else x for x in self.images)


def apply_dialect(dfa: Dfa, pi: PartialPermutation | str) -> Dfa:
    """Dialect of ``dfa``: ``pi(a_i)`` induces the transformation of ``a_i``.

    Undefined slots drop their letter; the remaining letters keep slot order,
    so ``(b,a,-,d)`` yields the alphabet ``(b, a, d)``.
    """
    if isinstance(pi, str):
        pi = PartialPermutation.parse(pi)
    if len(pi.images) != len(dfa.alphabet):
        raise ValueError(f"dialect {pi} has {len(pi.images)} slots, alphabet has {len(dfa.alphabet)}")
    source = set(dfa.alphabet)
    alphabet, delta = [], []
    for letter, t in zip(pi.images, dfa.delta):
        if letter is None:
            continue
        if letter not in source:
            raise ValueError(f"dialect letter {letter!r} is not in the alphabet {list(dfa.alphabet)}")
        alphabet.append(letter)
        delta.append(t)
    return Dfa(dfa.n, tuple(alphabet), tuple(delta), dfa.initial, dfa.finals)


def sorted_alphabet(dfa: Dfa) -> Dfa:
    """Same DFA with letters (and their transformations) in lexicographic order."""
    pairs = sorted(zip(dfa.alphabet, dfa.delta))
    return Dfa(dfa.n, tuple(a for a, _ in pairs), tuple(t for _, t in pairs), dfa.initial, dfa.finals)


def _check_n(cls: str, n: int) -> None:
    if n < MIN_N[cls]:
        raise ValueError(f"{cls} witness: n >= {MIN_N[cls]} required, got {n}")


def regular_witness(n: int) -> Dfa:
    _check_n("regular", n)
    return Dfa(n, ("a", "b", "c"),
               (cycle(n, range(1, n + 1)), cycle(n, (1, 2)), redirect(n, n, 1)),
               1, frozenset({n}))


def right_ideal_witness(n: int) -> Dfa:
    _check_n("right", n)
    return Dfa(n, ("a", "b", "c", "d"),
               (cycle(n, range(1, n)),
                cycle(n, range(2, n)),  # identity when n == 3
                redirect(n, n - 1, 1),
                redirect(n, n - 1, n)),
               1, frozenset({n}))


def left_ideal_witness(n: int) -> Dfa:
    _check_n("left", n)
    return Dfa(n, ("a", "b", "c", "d", "e"),
               (cycle(n, range(2, n + 1)),
                cycle(n, (2, 3)),
                redirect(n, n, 2),
                redirect(n, n, 1),
                redirect(n, range(1, n + 1), 2)),
               1, frozenset({n}))


def two_sided_witness(n: int) -> Dfa:
    _check_n("two_sided", n)
    return Dfa(n, ("a", "b", "c", "d", "e", "f"),
               (cycle(n, range(2, n)),
                cycle(n, (2, 3)),
                redirect(n, n - 1, 2),
                redirect(n, n - 1, 1),
                redirect(n, range(1, n), 2),
                redirect(n, 2, n)),
               1, frozenset({n}))


_BUILDERS = {
    "regular": regular_witness,
    "right": right_ideal_witness,
    "left": left_ideal_witness,
    "two_sided": two_sided_witness,
}


def witness(cls: str, n: int, dialect: PartialPermutation | str | None = None) -> Dfa:
    """Witness of class ``cls`` with ``n`` states, optionally restricted to a dialect."""
    try:
        build = _BUILDERS[cls]
    except KeyError:
        raise ValueError(f"unknown class {cls!r}; expected one of {CLASSES}") from None
    dfa = build(n)
    return dfa if dialect is None else apply_dialect(dfa, dialect)


def check_ideal(dfa: Dfa, cls: str) -> bool:
    """Decide whether ``L(dfa)`` is a (non-empty) ideal of the given kind."""
    if cls not in IDEAL_CLASSES:
        raise ValueError(f"unknown ideal class {cls!r}")
    target = minimize(dfa)
    if target.is_empty():
        return False
    closed = dfa
    if cls in ("left", "two_sided"):
        closed = determinize(left_ideal_closure_nfa(closed))
    if cls in ("right", "two_sided"):
        closed = concat_epsilon(closed, universal_dfa(dfa.alphabet))
    return isomorphic(minimize(closed), target)


def is_right_ideal_structural(dfa: Dfa) -> bool:
    """A minimal DFA accepts a right ideal iff its only final state is fixed by every letter."""
    m = minimize(dfa)
    if len(m.finals) != 1:
        return False
    (f,) = m.finals
    return all(t[f - 1] == f for t in m.delta)


def mutate(dfa: Dfa, letter: str | None = None, state: int = 1) -> Dfa:
    """Copy of ``dfa`` with one transition changed (for negative controls)."""
    letter = dfa.alphabet[0] if letter is None else letter
    i = dfa.alphabet.index(letter)
    images = list(dfa.delta[i])
    images[state - 1] = images[state - 1] % dfa.n + 1
    delta = dfa.delta[:i] + (tuple(images),) + dfa.delta[i + 1:]
    return Dfa(dfa.n, dfa.alphabet, delta, dfa.initial, dfa.finals)

