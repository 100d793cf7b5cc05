"""Atoms of a regular language: their automata, enumeration and closed-form complexities.

For a minimal DFA with states ``1..n`` the atom ``A_S`` is the set of words
lying in the language of every state of ``S`` and of no state outside ``S``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

from .automata import Dfa, is_minimal, minimize

MAX_SWEEP_N = 12


class CaseNotCovered(ValueError):
    """The closed-form atom formula has no case for this subset."""


@dataclass(frozen=True, order=True, init=False)
class AtomDescriptor:
    subset: tuple[int, ...]

    def __init__(self, subset: Iterable[int]):
        object.__setattr__(self, "subset", tuple(sorted(set(subset))))

    def __len__(self):
        return len(self.subset)

    def __iter__(self):
        return iter(self.subset)

    def __str__(self):
        return "{" + ",".join(map(str, self.subset)) + "}"


def atom_automaton(dfa: Dfa, s: AtomDescriptor | Iterable[int]) -> Dfa:
    """Unminimized pair-of-subsets automaton of the atom ``A_S``.

    States are pairs ``(X, Y)`` of state sets, starting from ``(S, Q - S)``;
    a pair accepts iff every state of ``X`` is final and no state of ``Y`` is.
    """
    s = frozenset(s)
    if any(not 1 <= q <= dfa.n for q in s):
        raise ValueError(f"atom subset {sorted(s)} references states outside 1..{dfa.n}")
    start = (s, frozenset(dfa.states) - s)
    numbering = {start: 1}
    order = [start]
    rows = []
    queue = deque(order)
    while queue:
        x, y = queue.popleft()
        row = []
        for t in dfa.delta:
            target = (frozenset(t[q - 1] for q in x), frozenset(t[q - 1] for q in y))
            if target not in numbering:
                numbering[target] = len(order) + 1
                order.append(target)
                queue.append(target)
            row.append(numbering[target])
        rows.append(row)
    delta = tuple(tuple(row[i] for row in rows) for i in range(len(dfa.alphabet)))
    finals = frozenset(i for i, (x, y) in enumerate(order, 1)
                       if x <= dfa.finals and not (y & dfa.finals))
    return Dfa(len(order), dfa.alphabet, delta, 1, finals)


def atom_dfa(dfa: Dfa, s: AtomDescriptor | Iterable[int]) -> Dfa:
    """Minimal DFA of the atom ``A_S`` (possibly the empty language)."""
    return minimize(atom_automaton(dfa, s))


def all_subsets(n: int):
    """Subsets of ``1..n`` by size, then lexicographically."""
    for k in range(n + 1):
        for c in combinations(range(1, n + 1), k):
            yield AtomDescriptor(c)


def enumerate_atoms(dfa: Dfa) -> list[tuple[AtomDescriptor, int]]:
    """Non-empty atoms of a minimal DFA with their complexities."""
    if dfa.n > MAX_SWEEP_N:
        raise ValueError(f"atom enumeration supports n <= {MAX_SWEEP_N}, got {dfa.n}")
    if not is_minimal(dfa):
        raise ValueError("enumerate_atoms expects a minimal DFA")
    found = []
    for s in all_subsets(dfa.n):
        atom = atom_dfa(dfa, s)
        if not atom.is_empty():
            found.append((s, atom.n))
    return found


def _double_sum(size: int, n: int, term) -> int:
    return sum(term(x, y) for x in range(1, size + 1) for y in range(1, n - size + 1))


def _c(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


_MIN_N = {"right": 3, "left": 4, "two_sided": 5}


def atom_bound_formula(cls: str, n: int, s: AtomDescriptor | Iterable[int]) -> int:
    """Maximal complexity of the atom ``A_S`` of an ideal of the given class.

    Raises ``CaseNotCovered`` for subsets the formula does not address.
    """
    if cls not in _MIN_N:
        raise ValueError(f"unknown ideal class {cls!r}")
    if n < _MIN_N[cls]:
        raise ValueError(f"{cls} atom formula needs n >= {_MIN_N[cls]}, got {n}")
    s = frozenset(s)
    if any(not 1 <= q <= n for q in s):
        raise ValueError(f"atom subset {sorted(s)} references states outside 1..{n}")
    k = len(s)
    full = k == n
    if cls == "right":
        if full:
            return 2 ** (n - 1)
        if k == 0:
            raise CaseNotCovered("right-ideal atom formula does not cover S = {}")
        return 1 + _double_sum(k, n, lambda x, y: _c(n - 1, x - 1) * _c(n - x, y - 1))
    if cls == "left":
        if full:
            return n
        if k == 0:
            return 2 ** (n - 1)
        return 1 + _double_sum(k, n, lambda x, y: _c(n - 1, x) * _c(n - x - 1, y - 1))
    if full:
        return n
    if s == frozenset(range(2, n + 1)):
        return 2 ** (n - 2) + n - 1
    return 1 + _double_sum(k, n, lambda x, y: _c(n - 2, x - 1) * _c(n - x - 1, y - 1))
