"""
Claims about root systems and lattice quotients.
"""

from ...rootsys import (
    build,
    canonical_infinitesimal_character,
    integral_subsystem,
    positive_root_count,
    quotient,
)
from ..checks import Mismatches, expect_equal
from ..suite import ClaimSuite

suite = ClaimSuite("rootsys")

SIMPLE_TYPES = (
    [("A", r) for r in range(1, 9)]
    + [("B", r) for r in range(2, 9)]
    + [("C", r) for r in range(3, 9)]
    + [("D", r) for r in range(4, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)

SIMPLY_LACED = (
    [("A", r) for r in range(2, 9)]
    + [("D", r) for r in range(4, 9)]
    + [("E", 6), ("E", 7), ("E", 8)]
)


@suite.claim("positive-roots", topic="positive roots of the simple types up to rank 8")
def positive_roots():
    for cartan, rank in SIMPLE_TYPES:
        expect_equal(
            f"positive roots of {cartan}{rank}",
            positive_root_count(cartan, rank),
            build(cartan, rank).positive_count,
        )
    return f"{len(SIMPLE_TYPES)} types"


@suite.claim("canonical-regular", topic="the canonical infinitesimal character is integrally regular")
def canonical_regular():
    # integral_subsystem raises on a singular weight
    for cartan, rank in SIMPLE_TYPES:
        rs = build(cartan, rank)
        integral_subsystem(rs, canonical_infinitesimal_character(rs))
    return f"{len(SIMPLE_TYPES)} types"


@suite.claim("lattice-remark", topic="P/R against P/(2P+R) as the group of central characters")
def lattice_remark():
    mismatches = Mismatches()
    for cartan, rank in SIMPLY_LACED:
        rs = build(cartan, rank)
        by_roots = quotient(rs, "P", "R").order
        by_characters = quotient(rs, "P", "2P+R").order
        if by_roots != by_characters:
            mismatches.add(rs.label, by_roots, by_characters, key="lattice-remark")
    return mismatches.settle(f"{c}{r}" for c, r in SIMPLY_LACED)
