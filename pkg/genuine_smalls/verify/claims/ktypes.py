"""
Claims about K-types: lowest K-types against the printed grids, the parity split of restricted
K'-types, the outer automorphisms and the count of small representations against pairs.
"""

from typing import Optional

from ...fixtures import printed_grid
from ...ktypes import (
    GAMMA,
    SIGMA,
    KType,
    PairCounts,
    family_ktypes,
    outer_act,
    pair_counts,
    pair_grid,
    restrict_split,
    spin_families,
    spin_rows,
)
from ..checks import Mismatches, expect, expect_equal
from ..suite import ClaimSuite

suite = ClaimSuite("ktypes")

PAIR_COUNTS = {
    ("D", 4): PairCounts(16, 16, True),
    ("D", 5): PairCounts(4, 4, True),
    ("A", 4): PairCounts(4, 4, False),
    ("A", 8): PairCounts(4, 4, False),
}

# printed as two representations against two pairs
PRINTED_PAIR_COUNTS = {("A", 6): PairCounts(2, 2, True)}


def _compare_grid(cartan: str, n: int, key: Optional[str] = None) -> str:
    computed = {e.label: e for e in pair_grid(cartan, n)}
    printed = printed_grid(cartan, n)
    mismatches = Mismatches()
    total = 0
    for cell, entries in sorted(printed.items()):
        for label, vectors in entries:
            total += 1
            entry = computed.get(label)
            expect(entry is not None, f"{cartan}{n}: no representation {label}")
            same_vectors = vectors is None or entry.lowest.factors == vectors
            if entry.cell != cell or not same_vectors:
                shown = "" if vectors is None else str(KType(vectors))
                mismatches.add(
                    f"{cartan}{n} {label}",
                    (cell, shown),
                    (entry.cell, str(entry.lowest)),
                    key=key,
                )
    expect_equal(f"{cartan}{n}: number of representations", total, len(computed))
    return mismatches.settle([f"{cartan}{n}"])


@suite.claim("grid.D4", topic="lowest K-types and cells of the small representations of Spin(4,4)")
def grid_d4():
    return _compare_grid("D", 4)


@suite.claim("grid.D5", topic="lowest K-types and cells of the small representations of Spin(5,5)")
def grid_d5():
    return _compare_grid("D", 5, key="D-odd-pi-vectors")


@suite.claim("grid.D6", topic="lowest K-types and cells of the small representations of Spin(6,6)")
def grid_d6():
    return _compare_grid("D", 6, key="D-even-odd-m-labels")


@suite.claim("grid.A", topic="lowest K-types and cells for the double cover of SL(n,R)")
def grid_a():
    return "; ".join(_compare_grid("A", n) for n in (4, 5, 6, 8))


@suite.claim("parity-split", topic="restriction to K splits by parity into disjoint families")
def parity_split():
    for bound in (6, 8):
        for row in spin_rows(4):
            even, odd = restrict_split(row, bound)
            expect(not set(even) & set(odd), f"{row}: parities overlap at bound {bound}")
            expect_equal(
                f"{row}: restricted K-types at bound {bound}",
                sum(1 for _ in row.terms(bound)),
                len(even) + len(odd),
            )
            collected = [
                k for f in spin_families(4) if f.row == row for k in family_ktypes(f, bound)
            ]
            expect_equal(
                f"{row}: K-types of its representations at bound {bound}",
                sorted(even + odd, key=KType.sort_key),
                sorted(collected, key=KType.sort_key),
            )
    return "Spin(4,4), bounds 6 and 8"


@suite.claim("outer-automorphisms", topic="sigma and gamma permute the small representations")
def outer_automorphisms():
    bound = 4
    families = {f.label: frozenset(family_ktypes(f, bound)) for f in spin_families(4)}
    by_content = {content: label for label, content in families.items()}
    expect_equal("distinct representations", len(families), len(by_content))
    for g in (SIGMA, GAMMA):
        images = set()
        for label, content in families.items():
            image = frozenset(outer_act(g, k) for k in content)
            expect(image in by_content, f"{g} does not map {label} onto a representation")
            images.add(by_content[image])
        expect_equal(f"image of {g}", set(families), images)
    return "Spin(4,4)"


@suite.claim("pair-counts", topic="small representations against (central character, real form)")
def pair_counts_claim():
    for (cartan, n), expected in sorted(PAIR_COUNTS.items()):
        expect_equal(f"pairs for {cartan} n={n}", expected, pair_counts(cartan, n))
    mismatches = Mismatches()
    for (cartan, n), printed in sorted(PRINTED_PAIR_COUNTS.items()):
        computed = pair_counts(cartan, n)
        if computed != printed:
            mismatches.add(f"{cartan} n={n}", printed, computed, key="A-pair-count-example")
    checked = sorted(PAIR_COUNTS) + sorted(PRINTED_PAIR_COUNTS)
    return mismatches.settle(f"{c} n={n}" for c, n in checked)
