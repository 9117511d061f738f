"""
Claims about Weyl group representations: the closed-form inductions against the character table
oracle, and sanity of the oracle tables themselves.
"""

from collections import Counter
from typing import Dict, Iterable, Tuple

from ...fixtures import EXCEPTIONAL_ROWS, listed_row
from ...rootsys import build, canonical_infinitesimal_character, integral_subsystem
from ...weylrep.induction import (
    SubgroupSpec,
    induce_sign_decompose,
    induce_sign_oracle,
    j_induce_sign,
)
from ...weylrep.labels import DBipartitionLabel, IrrepLabel
from ...weylrep.oracle import oracle_group
from ..checks import expect, expect_equal
from ..suite import ClaimSuite

suite = ClaimSuite("weylrep")

# (type, n) with n as in listed_row; every ambient group has order at most 10^5
CLOSED_FORM_SHAPES = (
    [("A", n) for n in range(3, 7)]
    + [("B", n) for n in range(2, 5)]
    + [("C", n) for n in range(2, 5)]
    + [("D", 4), ("D", 5)]
)

DEEP_CLOSED_FORM_SHAPES = [("A", 7), ("A", 8), ("B", 5), ("C", 5), ("D", 6)]

ORACLE_GROUPS = (
    [("A", r) for r in range(1, 6)]
    + [("B", r) for r in range(2, 5)]
    + [("C", 3), ("D", 4), ("D", 5), ("F", 4), ("G", 2)]
)


def _merge_split(decomposition: Dict[IrrepLabel, int]) -> Counter:
    # the two halves of a degenerate symbol are named by convention only
    merged: Counter = Counter()
    for label, m in decomposition.items():
        if isinstance(label, DBipartitionLabel) and label.split:
            label = DBipartitionLabel.of(label.alpha, label.beta)
        merged[label] += m
    return merged


def _compare_closed_forms(shapes: Iterable[Tuple[str, int]]) -> str:
    names = []
    for cartan, n in shapes:
        row = listed_row(cartan, n)
        rs = build(cartan, row.rank)
        sub = integral_subsystem(rs, canonical_infinitesimal_character(rs))
        spec = SubgroupSpec(row.ambient, row.subgroup, sub.simple_roots)
        expect_equal(
            f"induced sign for {cartan}{n}",
            _merge_split(induce_sign_oracle(spec)),
            _merge_split(induce_sign_decompose(spec)),
        )
        names.append(rs.label)
    return "checked " + ", ".join(names)


@suite.claim("closed-forms", topic="closed-form induction of the sign against the oracle")
def closed_forms():
    return _compare_closed_forms(CLOSED_FORM_SHAPES)


@suite.claim(
    "closed-forms-large", topic="closed-form induction against the oracle, larger groups", deep=True
)
def closed_forms_large():
    return _compare_closed_forms(DEEP_CLOSED_FORM_SHAPES)


def _check_table(cartan: str, rank: int) -> None:
    group = oracle_group(cartan, rank)
    rs = build(cartan, rank)
    expect_equal(
        f"sum of squared degrees for {rs.label}",
        group.order,
        sum(ch.degree ** 2 for ch in group.characters),
    )
    sign = tuple(cls.sign for cls in group.classes)
    signs = [ch for ch in group.characters if tuple(ch.values) == sign]
    expect(len(signs) == 1, f"no sign character found for {rs.label}")
    expect_equal(f"b-invariant of the sign of {rs.label}", rs.positive_count, signs[0].b)


@suite.claim("oracle-tables", topic="degrees and fake degrees of the oracle character tables")
def oracle_tables():
    for cartan, rank in ORACLE_GROUPS:
        _check_table(cartan, rank)
    return f"{len(ORACLE_GROUPS)} groups"


def _exceptional_j(cartan: str, rank: int) -> str:
    row = next(r for r in EXCEPTIONAL_ROWS if (r.cartan, r.rank) == (cartan, rank))
    rs = build(cartan, rank)
    sub = integral_subsystem(rs, row.character())
    label = j_induce_sign(SubgroupSpec.from_integral(rs, sub))
    # marks on ambiguous (degree, b) pairs follow the enumeration order
    expect_equal(
        f"truncated induction for {rs.label}",
        (row.j.degree, row.j.b, row.j.ambiguous),
        (label.degree, label.b, label.ambiguous),
    )
    return f"{rs.label}: {label}"


@suite.claim("exceptional-j", topic="truncated induction of the sign for G2 and F4")
def exceptional_j():
    return "; ".join(_exceptional_j(c, r) for c, r in (("G", 2), ("F", 4)))


@suite.claim("exceptional-j-e6", topic="truncated induction of the sign for E6", deep=True)
def exceptional_j_e6():
    _check_table("E", 6)
    return _exceptional_j("E", 6)
