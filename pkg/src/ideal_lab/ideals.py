"""Expected complexity values for the ideal witness streams.

Each class maps a measure to a formula; unary measures take ``n``, binary
ones ``(m, n)``.  ``DIALECTS`` records which restriction of the witness each
measure is evaluated on.
"""

from __future__ import annotations

from .atoms import atom_bound_formula

MIN_N = {"right": 3, "left": 4, "two_sided": 5}

UNARY_MEASURES = ("semigroup", "quotient_profile", "atom_count", "atom_complexity",
                  "reversal", "star")
BINARY_MEASURES = ("product", "union", "intersection", "difference", "symmetric_difference")
MEASURES = UNARY_MEASURES + BINARY_MEASURES


def _mn_bounds(cls):
    if cls == "left":
        return {op: (lambda m, n: m * n) for op in
                ("union", "intersection", "difference", "symmetric_difference")}
    return {
        "intersection": lambda m, n: m * n,
        "symmetric_difference": lambda m, n: m * n,
        "difference": lambda m, n: m * n - (m - 1),
        "union": lambda m, n: m * n - (m + n - 2),
    }


BOUNDS = {
    "right": {
        "semigroup": lambda n: n ** (n - 1),
        "quotient_profile": lambda n: (n,) * (n - 1) + (1,),
        "atom_count": lambda n: 2 ** (n - 1),
        "reversal": lambda n: 2 ** (n - 1),
        "star": lambda n: n + 1,
        "product": lambda m, n: m + 2 ** (n - 2),
        **_mn_bounds("right"),
    },
    "left": {
        "semigroup": lambda n: n ** (n - 1) + n - 1,
        "quotient_profile": lambda n: (n,) * n,
        "atom_count": lambda n: 2 ** (n - 1) + 1,
        "reversal": lambda n: 2 ** (n - 1) + 1,
        "star": lambda n: n + 1,
        "product": lambda m, n: m + n - 1,
        **_mn_bounds("left"),
    },
    "two_sided": {
        "semigroup": lambda n: n ** (n - 2) + (n - 2) * 2 ** (n - 2) + 1,
        "quotient_profile": lambda n: (n,) * (n - 1) + (1,),
        "atom_count": lambda n: 2 ** (n - 2) + 1,
        "reversal": lambda n: 2 ** (n - 2) + 1,
        "star": lambda n: n + 1,
        "product": lambda m, n: m + n - 1,
        **_mn_bounds("two_sided"),
    },
}

# Dialect (as a slot string) on which each measure is taken.  Binary measures
# list the (first, second) operand dialects; "same_stream" pairs use one
# dialect for both operands and are only meaningful for m != n.
DIALECTS = {
    "right": {
        "semigroup": "a,b,c,d",
        "quotient_profile": "a,-,-,d",
        "atom_count": "a,-,-,d",
        "atom_complexity": "a,b,c,d",
        "reversal": "a,-,-,d",
        "star": "a,-,-,d",
        "product": ("a,b,-,d", "a,b,-,d"),
        "boolean": ("a,b,-,d", "b,a,-,d"),
        "same_stream": ("a,b,-,d", "a,b,-,d"),
    },
    "left": {
        "semigroup": "a,b,c,d,e",
        "quotient_profile": "a,-,-,d,e",
        "atom_count": "a,-,c,d,e",
        "atom_complexity": "a,b,c,d,e",
        "reversal": "a,-,c,d,e",
        "star": "a,-,-,-,e",
        "product": ("a,-,-,-,e", "a,-,-,-,e"),
        "boolean": ("a,-,c,-,e", "a,-,e,-,c"),
    },
    "two_sided": {
        "semigroup": "a,b,c,d,e,f",
        "quotient_profile": "a,-,-,d,e,f",
        "atom_count": "a,-,-,d,e,f",
        "atom_complexity": "a,b,c,d,e,f",
        "reversal": "a,-,-,d,e,f",
        "star": "a,-,-,-,e,f",
        "product": ("a,-,-,-,e,f", "a,-,-,-,e,f"),
        "boolean": ("a,b,-,d,e,f", "b,a,-,d,e,f"),
        "same_stream": ("a,b,-,d,e,f", "a,b,-,d,e,f"),
    },
}


def dialects_for(cls: str, measure: str, same_stream: bool = False):
    table = DIALECTS[cls]
    if measure in BINARY_MEASURES and measure != "product":
        key = "same_stream" if same_stream else "boolean"
        if key not in table:
            raise ValueError(f"no same-stream boolean bounds for class {cls!r}")
        return table[key]
    return table[measure]


def has_same_stream(cls: str) -> bool:
    return "same_stream" in DIALECTS[cls]


def expected(cls: str, measure: str, m: int | None = None, n: int | None = None,
             subset=None, same_stream: bool = False):
    """Expected value of ``measure`` for the witness stream of ``cls``.

    ``quotient_profile`` yields a tuple (one entry per state);
    ``atom_complexity`` needs ``subset``.
    """
    if cls not in BOUNDS:
        raise ValueError(f"unknown class {cls!r}")
    if measure not in MEASURES:
        raise ValueError(f"unknown measure {measure!r}")
    if n is None or n < MIN_N[cls]:
        raise ValueError(f"{cls}: n >= {MIN_N[cls]} required, got {n}")
    if measure == "atom_complexity":
        if subset is None:
            raise ValueError("atom_complexity needs a subset")
        return atom_bound_formula(cls, n, subset)
    formula = BOUNDS[cls][measure]
    if measure in UNARY_MEASURES:
        return formula(n)
    if m is None or m < MIN_N[cls]:
        raise ValueError(f"{cls}: m >= {MIN_N[cls]} required, got {m}")
    if same_stream:
        if measure == "product":
            raise ValueError("same_stream applies to boolean operations only")
        if not has_same_stream(cls):
            raise ValueError(f"no same-stream boolean bounds for class {cls!r}")
        if m == n:
            raise ValueError("same-stream boolean bounds require m != n")
    return formula(m, n)
