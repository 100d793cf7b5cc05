"""Transition semigroups of DFAs by breadth-first closure of the letter transformations."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automata import Dfa, Transformation, minimize


class SemigroupOverflow(RuntimeError):
    """The closure grew past the element cap."""

    def __init__(self, reached: int, cap: int):
        super().__init__(f"transition semigroup exceeded cap {cap} (reached {reached} elements)")
        self.reached = reached
        self.cap = cap


@dataclass(frozen=True)
class SemigroupClosure:
    """Transformations induced by non-empty words, each with a shortest witness word."""

    words: dict[Transformation, tuple[str, ...]]

    @property
    def elements(self) -> frozenset[Transformation]:
        return frozenset(self.words)

    @property
    def size(self) -> int:
        return len(self.words)

    def __contains__(self, t) -> bool:
        return tuple(t) in self.words


def default_cap(n: int) -> int:
    return 2 * n ** n + n


def transition_semigroup(dfa: Dfa, cap: int | None = None, letter_order=None) -> SemigroupClosure:
    """Closure of the letter transformations of ``dfa`` under composition.

    The empty word is not included, so the identity appears only when some
    non-empty word induces it.  ``letter_order`` permutes the exploration order
    of the generators; the element set does not depend on it.
    """
    cap = default_cap(dfa.n) if cap is None else cap
    if cap <= 0:
        raise ValueError("cap must be positive")
    letters = list(dfa.alphabet) if letter_order is None else list(letter_order)
    # padded generators so that composition is a plain index lookup
    gens = [(letter, (0,) + dfa.transformation(letter)) for letter in letters]

    words: dict[Transformation, tuple[str, ...]] = {}
    queue = deque()
    for letter, g in gens:
        t = g[1:]
        if t not in words:
            words[t] = (letter,)
            queue.append(t)
    if len(words) > cap:
        raise SemigroupOverflow(len(words), cap)
    while queue:
        t = queue.popleft()
        word = words[t]
        for letter, g in gens:
            u = tuple([g[x] for x in t])
            if u not in words:
                words[u] = word + (letter,)
                if len(words) > cap:
                    raise SemigroupOverflow(len(words), cap)
                queue.append(u)
    return SemigroupClosure(words)


def syntactic_semigroup_size(dfa: Dfa, cap: int | None = None) -> int:
    """Size of the syntactic semigroup: the transition semigroup of the minimal DFA."""
    return transition_semigroup(minimize(dfa), cap).size
