"""
Irreducible representations of Weyl groups: labels and b-invariants, Murnaghan-Nakayama
characters, closed-form induction of sign characters and a character table oracle.
"""

__all__ = [
    "labels",
    "characters",
    "induction",
    "oracle",
    "b_invariant",
    "SubgroupSpec",
    "induce_sign_decompose",
    "j_induce_sign",
    "oracle_group",
]

from . import characters, induction, labels, oracle
from .induction import SubgroupSpec, induce_sign_decompose, j_induce_sign
from .labels import b_invariant
from .oracle import oracle_group
