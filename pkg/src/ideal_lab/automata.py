"""Deterministic and nondeterministic automata and the generic constructions.

States are numbered ``1..n``.  A transformation is a tuple whose entry
``q - 1`` is the image of state ``q``.  Words are sequences of letters; the
empty word is the empty sequence and is never a letter.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

Transformation = tuple[int, ...]

EPSILON = None

BOOLEAN_OPS = ("union", "intersection", "difference", "symmetric_difference")

_BOOLEAN_TABLE = {
    "union": lambda x, y: x or y,
    "intersection": lambda x, y: x and y,
    "difference": lambda x, y: x and not y,
    "symmetric_difference": lambda x, y: x != y,
}


# -- transformations ---------------------------------------------------------

def identity(n: int) -> Transformation:
    return tuple(range(1, n + 1))


def compose(t: Transformation, s: Transformation) -> Transformation:
    """Apply ``t`` first, then ``s`` (left-to-right, like words)."""
    return tuple(s[x - 1] for x in t)


def cycle(n: int, states: Sequence[int]) -> Transformation:
    """The cycle ``(p1, p2, ..., pk)`` mapping each p_i to p_{i+1} and pk to p1."""
    images = list(range(1, n + 1))
    k = len(states)
    if k > 1:
        for i, p in enumerate(states):
            images[p - 1] = states[(i + 1) % k]
    return tuple(images)


def redirect(n: int, sources: Iterable[int] | int, target: int) -> Transformation:
    """``(p -> q)`` for a single state, or ``(P -> q)`` for a set of states."""
    if isinstance(sources, int):
        sources = (sources,)
    images = list(range(1, n + 1))
    for p in sources:
        images[p - 1] = target
    return tuple(images)


def image(states: Iterable[int], t: Transformation) -> frozenset[int]:
    return frozenset(t[q - 1] for q in states)


def _check_transformation(t: Sequence[int], n: int, letter: str) -> Transformation:
    t = tuple(t)
    if len(t) != n:
        raise ValueError(f"letter {letter!r}: expected {n} images, got {len(t)}")
    for x in t:
        if not isinstance(x, int) or not 1 <= x <= n:
            raise ValueError(f"letter {letter!r}: image {x!r} outside 1..{n}")
    return t


# -- DFA ---------------------------------------------------------------------

@dataclass(frozen=True)
class Dfa:
    """A complete DFA over an ordered alphabet.

    ``delta[i]`` is the transformation induced by ``alphabet[i]``.
    """

    n: int
    alphabet: tuple[str, ...]
    delta: tuple[Transformation, ...]
    initial: int
    finals: frozenset[int]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a DFA needs at least one state")
        alphabet = tuple(self.alphabet)
        if len(set(alphabet)) != len(alphabet):
            raise ValueError(f"alphabet letters must be distinct: {alphabet}")
        if len(self.delta) != len(alphabet):
            raise ValueError("one transformation per letter is required")
        delta = tuple(_check_transformation(t, self.n, a) for a, t in zip(alphabet, self.delta))
        if not 1 <= self.initial <= self.n:
            raise ValueError(f"initial state {self.initial} outside 1..{self.n}")
        finals = frozenset(self.finals)
        if any(not 1 <= q <= self.n for q in finals):
            raise ValueError(f"final states {sorted(finals)} not within 1..{self.n}")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "finals", finals)

    @classmethod
    def from_map(cls, n: int, transitions: Mapping[str, Sequence[int]], initial: int = 1,
                 finals: Iterable[int] = ()) -> "Dfa":
        """Build from ``{letter: images}``, keeping the mapping's key order."""
        return cls(n, tuple(transitions), tuple(tuple(v) for v in transitions.values()),
                   initial, frozenset(finals))

    @property
    def states(self) -> range:
        return range(1, self.n + 1)

    def transformation(self, letter: str) -> Transformation:
        return self.delta[self.alphabet.index(letter)]

    def transitions(self) -> dict[str, Transformation]:
        return dict(zip(self.alphabet, self.delta))

    def word_transformation(self, word: Sequence[str]) -> Transformation:
        t = identity(self.n)
        for letter in word:
            t = compose(t, self.transformation(letter))
        return t

    def run(self, word: Sequence[str], start: int | None = None) -> int:
        q = self.initial if start is None else start
        index = {a: i for i, a in enumerate(self.alphabet)}
        for letter in word:
            q = self.delta[index[letter]][q - 1]
        return q

    def accepts(self, word: Sequence[str]) -> bool:
        return self.run(word) in self.finals

    def rerooted(self, q: int) -> "Dfa":
        """Same automaton with initial state ``q``; accepts the language of ``q``."""
        return Dfa(self.n, self.alphabet, self.delta, q, self.finals)

    def with_finals(self, finals: Iterable[int]) -> "Dfa":
        return Dfa(self.n, self.alphabet, self.delta, self.initial, frozenset(finals))

    def reachable(self) -> list[int]:
        """Reachable states in breadth-first order, letters explored in alphabet order."""
        seen = {self.initial}
        order = [self.initial]
        queue = deque(order)
        while queue:
            q = queue.popleft()
            for t in self.delta:
                p = t[q - 1]
                if p not in seen:
                    seen.add(p)
                    order.append(p)
                    queue.append(p)
        return order

    def is_empty(self) -> bool:
        return not any(q in self.finals for q in self.reachable())

    def as_nfa(self) -> "Nfa":
        transitions = frozenset(
            (q, a, t[q - 1]) for a, t in zip(self.alphabet, self.delta) for q in self.states)
        return Nfa(self.n, self.alphabet, transitions, frozenset({self.initial}), self.finals)

    def to_dict(self) -> dict:
        return {
            "states": self.n,
            "alphabet": list(self.alphabet),
            "transitions": {a: list(t) for a, t in zip(self.alphabet, self.delta)},
            "initial": self.initial,
            "finals": sorted(self.finals),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Dfa":
        try:
            alphabet = tuple(data["alphabet"])
            transitions = data["transitions"]
            if set(transitions) != set(alphabet):
                raise ValueError("transition letters do not match the alphabet")
            return cls(int(data["states"]), alphabet,
                       tuple(tuple(transitions[a]) for a in alphabet),
                       int(data["initial"]), frozenset(data["finals"]))
        except KeyError as exc:
            raise ValueError(f"DFA JSON is missing field {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "Dfa":
        return cls.from_dict(json.loads(text))


def universal_dfa(alphabet: Sequence[str]) -> Dfa:
    """One-state DFA accepting every word."""
    return Dfa(1, tuple(alphabet), tuple((1,) for _ in alphabet), 1, frozenset({1}))


def empty_dfa(alphabet: Sequence[str]) -> Dfa:
    return Dfa(1, tuple(alphabet), tuple((1,) for _ in alphabet), 1, frozenset())


# -- NFA ---------------------------------------------------------------------

@dataclass(frozen=True)
class Nfa:
    """NFA with optional epsilon moves; an epsilon label is ``None``."""

    n: int
    alphabet: tuple[str, ...]
    transitions: frozenset[tuple[int, str | None, int]]
    initials: frozenset[int]
    finals: frozenset[int]
    allow_epsilon: bool = True

    def __post_init__(self):
        alphabet = tuple(self.alphabet)
        if len(set(alphabet)) != len(alphabet):
            raise ValueError(f"alphabet letters must be distinct: {alphabet}")
        letters = set(alphabet)
        transitions = frozenset(self.transitions)
        for p, label, q in transitions:
            if not (1 <= p <= self.n and 1 <= q <= self.n):
                raise ValueError(f"transition {(p, label, q)} leaves states 1..{self.n}")
            if label is EPSILON:
                if not self.allow_epsilon:
                    raise ValueError("epsilon transitions are not allowed here")
            elif label not in letters:
                raise ValueError(f"transition label {label!r} not in alphabet")
        initials, finals = frozenset(self.initials), frozenset(self.finals)
        if any(not 1 <= q <= self.n for q in initials | finals):
            raise ValueError(f"initial/final states not within 1..{self.n}")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "transitions", transitions)
        object.__setattr__(self, "initials", initials)
        object.__setattr__(self, "finals", finals)
        succ: dict[tuple[int, str | None], set[int]] = {}
        for p, label, q in transitions:
            succ.setdefault((p, label), set()).add(q)
        object.__setattr__(self, "_succ", {k: frozenset(v) for k, v in succ.items()})

    def successors(self, q: int, label: str | None) -> frozenset[int]:
        return self._succ.get((q, label), frozenset())

    def closure(self, states: Iterable[int]) -> frozenset[int]:
        """Epsilon closure."""
        result = set(states)
        stack = list(result)
        while stack:
            q = stack.pop()
            for p in self.successors(q, EPSILON):
                if p not in result:
                    result.add(p)
                    stack.append(p)
        return frozenset(result)

    def step(self, states: Iterable[int], letter: str) -> frozenset[int]:
        out: set[int] = set()
        for q in states:
            out |= self.successors(q, letter)
        return self.closure(out)

    def accepts(self, word: Sequence[str]) -> bool:
        current = self.closure(self.initials)
        for letter in word:
            current = self.step(current, letter)
        return bool(current & self.finals)


# -- constructions -----------------------------------------------------------

def determinize(nfa: Nfa) -> Dfa:
    """Subset construction over reachable subsets.

    The empty subset is kept as an explicit sink whenever it is reached, so the
    result is always complete.
    """
    start = nfa.closure(nfa.initials)
    numbering = {start: 1}
    order = [start]
    rows: list[list[int]] = []
    queue = deque(order)
    while queue:
        subset = queue.popleft()
        row = []
        for letter in nfa.alphabet:
            target = nfa.step(subset, letter)
            if target not in numbering:
                numbering[target] = len(order) + 1
                order.append(target)
                queue.append(target)
            row.append(numbering[target])
        rows.append(row)
    delta = tuple(tuple(row[i] for row in rows) for i in range(len(nfa.alphabet)))
    finals = frozenset(numbering[s] for s in order if s & nfa.finals)
    return Dfa(len(order), nfa.alphabet, delta, 1, finals)


def canonical(dfa: Dfa) -> Dfa:
    """Restrict to reachable states and renumber them in breadth-first order."""
    order = dfa.reachable()
    number = {q: i for i, q in enumerate(order, 1)}
    delta = tuple(tuple(number[t[q - 1]] for q in order) for t in dfa.delta)
    finals = frozenset(number[q] for q in order if q in dfa.finals)
    return Dfa(len(order), dfa.alphabet, delta, 1, finals)


def _equivalence_classes(dfa: Dfa, states: Sequence[int]) -> dict[int, int]:
    # Moore refinement: split blocks by (block, successor blocks) until stable.
    block = {q: int(q in dfa.finals) for q in states}
    count = len(set(block.values()))
    while True:
        signatures: dict[tuple, int] = {}
        refined = {}
        for q in states:
            sig = (block[q],) + tuple(block[t[q - 1]] for t in dfa.delta)
            refined[q] = signatures.setdefault(sig, len(signatures))
        if len(signatures) == count:
            return refined
        block, count = refined, len(signatures)


def minimize(dfa: Dfa) -> Dfa:
    """The minimal complete DFA of ``L(dfa)`` in canonical numbering."""
    reach = canonical(dfa)
    block = _equivalence_classes(reach, list(reach.states))
    # representatives: first state of each block in breadth-first order
    rep: dict[int, int] = {}
    for q in reach.states:
        rep.setdefault(block[q], q)
    k = len(rep)
    reps = list(rep.values())
    index = {b: i + 1 for i, b in enumerate(rep)}
    delta = tuple(tuple(index[block[t[q - 1]]] for q in reps) for t in reach.delta)
    finals = frozenset(index[block[q]] for q in reps if q in reach.finals)
    return canonical(Dfa(k, reach.alphabet, delta, index[block[reach.initial]], finals))


def complexity(dfa: Dfa) -> int:
    """Quotient complexity: the number of states of the minimal DFA."""
    return minimize(dfa).n


def is_minimal(dfa: Dfa) -> bool:
    return complexity(dfa) == dfa.n


def quotient_complexities(dfa: Dfa) -> list[int]:
    """Complexity of the language of each state.

    Reported per state of ``dfa`` when it is minimal, otherwise per state of
    ``minimize(dfa)``.
    """
    target = dfa if is_minimal(dfa) else minimize(dfa)
    return [complexity(target.rerooted(q)) for q in target.states]


def reverse(dfa: Dfa) -> Dfa:
    """Minimal DFA of the reversed language."""
    transitions = frozenset(
        (t[q - 1], a, q) for a, t in zip(dfa.alphabet, dfa.delta) for q in dfa.states)
    nfa = Nfa(dfa.n, dfa.alphabet, transitions, dfa.finals, frozenset({dfa.initial}))
    return minimize(determinize(nfa))


def _require_same_alphabet(d1: Dfa, d2: Dfa) -> None:
    if d1.alphabet != d2.alphabet:
        raise ValueError(f"alphabet mismatch: {list(d1.alphabet)} vs {list(d2.alphabet)}")


def direct_product(d1: Dfa, d2: Dfa, op: str) -> tuple[Dfa, list[tuple[int, int]]]:
    """Reachable part of the direct product with finals chosen by ``op``.

    Returns the (unminimized) product DFA and the state pair behind each state.
    """
    _require_same_alphabet(d1, d2)
    try:
        fn = _BOOLEAN_TABLE[op]
    except KeyError:
        raise ValueError(f"unknown boolean operation {op!r}; expected one of {BOOLEAN_OPS}") from None
    start = (d1.initial, d2.initial)
    numbering = {start: 1}
    pairs = [start]
    rows = []
    queue = deque(pairs)
    while queue:
        p, q = queue.popleft()
        row = []
        for t1, t2 in zip(d1.delta, d2.delta):
            target = (t1[p - 1], t2[q - 1])
            if target not in numbering:
                numbering[target] = len(pairs) + 1
                pairs.append(target)
                queue.append(target)
            row.append(numbering[target])
        rows.append(row)
    delta = tuple(tuple(row[i] for row in rows) for i in range(len(d1.alphabet)))
    finals = frozenset(i for i, (p, q) in enumerate(pairs, 1)
                       if fn(p in d1.finals, q in d2.finals))
    return Dfa(len(pairs), d1.alphabet, delta, 1, finals), pairs


def boolean_product(d1: Dfa, d2: Dfa, op: str) -> Dfa:
    """Minimal DFA of ``L(d1) op L(d2)``."""
    return minimize(direct_product(d1, d2, op)[0])


def complement(dfa: Dfa) -> Dfa:
    return dfa.with_finals(set(dfa.states) - dfa.finals)


def _disjoint_union(d1: Dfa, d2: Dfa) -> set[tuple[int, str | None, int]]:
    m = d1.n
    transitions = {(q, a, t[q - 1]) for a, t in zip(d1.alphabet, d1.delta) for q in d1.states}
    transitions |= {(q + m, a, t[q - 1] + m) for a, t in zip(d2.alphabet, d2.delta) for q in d2.states}
    return transitions


def concat_epsilon_nfa(d1: Dfa, d2: Dfa) -> Nfa:
    """Epsilon-NFA for ``L(d1) L(d2)``: d1 on states 1..m, d2 on m+1..m+n."""
    _require_same_alphabet(d1, d2)
    m = d1.n
    transitions = _disjoint_union(d1, d2)
    transitions |= {(f, EPSILON, d2.initial + m) for f in d1.finals}
    return Nfa(m + d2.n, d1.alphabet, frozenset(transitions), frozenset({d1.initial}),
               frozenset(q + m for q in d2.finals))


def concat_epsilon(d1: Dfa, d2: Dfa) -> Dfa:
    """Minimal DFA of ``L(d1) L(d2)`` via the epsilon-NFA and subset construction."""
    return minimize(determinize(concat_epsilon_nfa(d1, d2)))


def concat_ideal_redirect(d1: Dfa, d2: Dfa) -> Dfa:
    """Product DFA with ``m + n - 1`` states for ideals whose left factor has one final state.

    The final state of ``d1`` is dropped together with its outgoing
    transitions; transitions of ``d1`` entering it are sent to the initial
    state of ``d2`` instead.  States ``1..m-1`` are the non-final states of
    ``d1`` in their original order, followed by the states of ``d2``.
    The result is not minimized.
    """
    _require_same_alphabet(d1, d2)
    if len(d1.finals) != 1:
        raise ValueError(f"left operand must have exactly one final state, has {len(d1.finals)}")
    (final,) = d1.finals
    if d1.initial == final:
        raise ValueError("left operand's initial state is final; nothing to redirect")
    kept = [q for q in d1.states if q != final]
    number = {q: i for i, q in enumerate(kept, 1)}
    offset = len(kept)
    into_second = d2.initial + offset
    delta = []
    for t1, t2 in zip(d1.delta, d2.delta):
        row = [into_second if t1[q - 1] == final else number[t1[q - 1]] for q in kept]
        row += [x + offset for x in t2]
        delta.append(tuple(row))
    return Dfa(offset + d2.n, d1.alphabet, tuple(delta), number[d1.initial],
               frozenset(q + offset for q in d2.finals))


def star_generic(dfa: Dfa) -> Dfa:
    """Minimal DFA of ``L(dfa)*`` via the usual epsilon-NFA with a fresh initial state."""
    fresh = dfa.n + 1
    transitions = {(q, a, t[q - 1]) for a, t in zip(dfa.alphabet, dfa.delta) for q in dfa.states}
    transitions.add((fresh, EPSILON, dfa.initial))
    transitions |= {(f, EPSILON, dfa.initial) for f in dfa.finals}
    nfa = Nfa(fresh, dfa.alphabet, frozenset(transitions), frozenset({fresh}),
              dfa.finals | {fresh})
    return minimize(determinize(nfa))


def left_ideal_closure_nfa(dfa: Dfa) -> Nfa:
    """Epsilon-NFA for ``Sigma* L``: a new looping initial state with epsilon into the old one."""
    fresh = dfa.n + 1
    transitions = {(q, a, t[q - 1]) for a, t in zip(dfa.alphabet, dfa.delta) for q in dfa.states}
    transitions |= {(fresh, a, fresh) for a in dfa.alphabet}
    transitions.add((fresh, EPSILON, dfa.initial))
    return Nfa(fresh, dfa.alphabet, frozenset(transitions), frozenset({fresh}), dfa.finals)


def isomorphic(d1: Dfa, d2: Dfa) -> bool:
    """Whether two minimal DFAs over the same ordered alphabet are identical up to renaming."""
    for d in (d1, d2):
        if not is_minimal(d):
            raise ValueError("isomorphic() expects minimal DFAs")
    _require_same_alphabet(d1, d2)
    return canonical(d1) == canonical(d2)


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """Language equality of arbitrary DFAs over the same ordered alphabet."""
    return minimize(d1) == minimize(d2)
