"""Finite-automata laboratory for the state complexity of regular ideals."""

from .automata import (
    BOOLEAN_OPS,
    Dfa,
    Nfa,
    boolean_product,
    canonical,
    complexity,
    concat_epsilon,
    concat_ideal_redirect,
    determinize,
    isomorphic,
    minimize,
    quotient_complexities,
    reverse,
    star_generic,
)
from .atoms import AtomDescriptor, CaseNotCovered, atom_bound_formula, atom_dfa, enumerate_atoms
from .ideals import expected
from .semigroup import SemigroupOverflow, syntactic_semigroup_size, transition_semigroup
from .witnesses import (
    PartialPermutation,
    apply_dialect,
    check_ideal,
    left_ideal_witness,
    regular_witness,
    right_ideal_witness,
    two_sided_witness,
    witness,
)

__version__ = "0.1.0"
