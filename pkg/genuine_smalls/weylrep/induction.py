"""
Induction of the sign character from reflection subgroups, and truncated induction.

Closed forms cover the subgroups that occur as integral Weyl groups in the classical types:

* products of symmetric groups in a symmetric group, by the Pieri rule for columns;
* ``W(B_a) x W(B_b)`` in ``W(B_n)``, where the sign is ``(-; [1^a]) x (-; [1^b])``;
* ``W(D_a) x W(D_b)`` in ``W(D_n)``, through the induction to ``W(B_a) x W(B_b)``;
* ``W(D_n)`` in ``W(C_n)``.

Everything else goes to the character table oracle, provided the subgroup comes with its
simple roots and the ambient group is small enough.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from ..exceptions import InductionError, OracleBoundExceeded, UnsupportedShape
from ..rootsys import IntegralSubsystem, RootSystem, Weight, positive_root_count
from .labels import (
    BipartitionLabel,
    DBipartitionLabel,
    IrrepLabel,
    Partition,
    PartitionLabel,
    b_invariant,
    column,
    sort_key,
)
from .oracle import oracle_group

__all__ = [
    "SubgroupSpec",
    "vertical_strips",
    "column_product",
    "induce_sign_decompose",
    "j_induce_sign",
]

Factor = Tuple[str, int]


@dataclass(frozen=True)
class SubgroupSpec:
    """
    A reflection subgroup of a Weyl group, described by the ambient type and the types of its
    factors, and optionally by its simple roots inside the ambient root system.

    :param ambient: The ambient type, e.g. ``("D", 4)``.
    :type ambient: Factor
    :param factors: The factor types, e.g. ``(("D", 2), ("D", 2))``.
    :type factors: Tuple[Factor, ...]
    :param simple_roots: Simple roots of the subgroup, needed by the oracle.
    :type simple_roots: Tuple[Weight, ...]
    """

    ambient: Factor
    factors: Tuple[Factor, ...]
    simple_roots: Tuple[Weight, ...] = field(default=(), compare=False)

    @classmethod
    def from_integral(cls, rs: RootSystem, sub: IntegralSubsystem) -> "SubgroupSpec":
        factors = tuple((c[0], int(c[1:])) for c in sub.components)
        return cls((rs.cartan, rs.rank), factors, sub.simple_roots)

    @property
    def positive_count(self) -> int:
        return sum(positive_root_count(c, r) for c, r in self.factors)


def vertical_strips(p: Partition, k: int) -> List[Partition]:
    """
    All partitions obtained by adding `k` boxes to `p`, no two in the same row.

    :param p: A partition.
    :type p: Partition
    :param k: Number of boxes.
    :type k: int
    :rtype: List[Partition]
    """
    rows = list(p) + [0] * k
    out = []

    def place(i: int, left: int, current: List[int]) -> None:
        if left == 0:
            out.append(tuple(x for x in current + rows[i:] if x > 0))
            return
        if i == len(rows):
            return
        # add a box to row i
        new = rows[i] + 1
        if i == 0 or new <= current[i - 1]:
            place(i + 1, left - 1, current + [new])
        if len(rows) - i - 1 >= left:
            place(i + 1, left, current + [rows[i]])

    place(0, k, [])
    return out


def column_product(sizes: Iterable[int]) -> Counter:
    """
    Expand the product of the Schur functions of the columns ``[1^k]`` for `sizes` as a
    multiset of partitions.
    """
    result: Counter = Counter({(): 1})
    for k in sizes:
        nxt: Counter = Counter()
        for p, m in result.items():
            for q in vertical_strips(p, k):
                nxt[q] += m
        result = nxt
    return result


def _type_a(spec: SubgroupSpec) -> Dict[IrrepLabel, int]:
    n = spec.ambient[1] + 1
    sizes = []
    for cartan, rank in spec.factors:
        if cartan != "A":
            raise UnsupportedShape(f"{cartan}{rank} factor in type A")
        sizes.append(rank + 1)
    if sum(sizes) > n:
        raise UnsupportedShape("factors do not fit in the symmetric group")
    sizes += [1] * (n - sum(sizes))
    return {PartitionLabel(p): m for p, m in column_product(sizes).items()}


def _type_b_sign_columns(sizes: List[int]) -> Counter:
    """``Ind (-; [1^a]) x (-; [1^b]) x ...`` as a multiset of bipartitions."""
    return Counter({((), p): m for p, m in column_product(sizes).items()})


def _hyperoctahedral_product(
    left: Counter, right: Counter
) -> Counter:
    out: Counter = Counter()
    for (a1, b1), m1 in left.items():
        for (a2, b2), m2 in right.items():
            for alpha, ma in _lr_columns(a1, a2).items():
                for beta, mb in _lr_columns(b1, b2).items():
                    out[(alpha, beta)] += m1 * m2 * ma * mb
    return out


def _lr_columns(p: Partition, q: Partition) -> Counter:
    """Product of `p` with `q`, where `q` is empty or a single column."""
    if not q:
        return Counter({p: 1})
    if any(x != 1 for x in q):
        raise UnsupportedShape("only column shapes are supported")
    return Counter(vertical_strips(p, len(q)))


def _sign_extensions(k: int) -> Counter:
    """The two extensions ``(-; [1^k]) + ([1^k]; -)`` of the sign of ``W(D_k)`` to ``W(B_k)``."""
    return Counter({((), column(k)): 1, (column(k), ()): 1})


def _type_b(spec: SubgroupSpec) -> Dict[IrrepLabel, int]:
    n = spec.ambient[1]
    sizes = [rank for cartan, rank in spec.factors if cartan == "B"]
    if len(sizes) != len(spec.factors) or sum(sizes) != n:
        raise UnsupportedShape("expected a product of B factors of total rank n")
    return {BipartitionLabel(a, b): m for (a, b), m in _type_b_sign_columns(sizes).items()}


def _type_d(spec: SubgroupSpec) -> Dict[IrrepLabel, int]:
    n = spec.ambient[1]
    if len(spec.factors) != 2 or any(c != "D" for c, _ in spec.factors):
        raise UnsupportedShape("expected D_a x D_b in D_n")
    (_, a), (_, b) = spec.factors
    if a + b != n:
        raise UnsupportedShape("factors do not have total rank n")
    induced = _hyperoctahedral_product(_sign_extensions(a), _sign_extensions(b))
    out: Dict[IrrepLabel, int] = {}
    for (alpha, beta), m in induced.items():
        if alpha == beta:
            if m % 2:
                raise InductionError("odd multiplicity on a split pair")
            for split in ("I", "II"):
                out[DBipartitionLabel.of(alpha, beta, split)] = m // 2
        else:
            out[DBipartitionLabel.of(alpha, beta)] = m
    return out


def _d_in_c(spec: SubgroupSpec) -> Dict[IrrepLabel, int]:
    n = spec.ambient[1]
    if spec.factors != (("D", n),):
        raise UnsupportedShape("expected D_n in C_n")
    return {BipartitionLabel((), column(n)): 1, BipartitionLabel(column(n), ()): 1}


def _closed_form(spec: SubgroupSpec) -> Optional[Dict[IrrepLabel, int]]:
    cartan = spec.ambient[0]
    try:
        if cartan == "A":
            return _type_a(spec)
        if cartan == "B":
            return _type_b(spec)
        if cartan == "D":
            return _type_d(spec)
        if cartan == "C":
            return _d_in_c(spec)
    except UnsupportedShape:
        return None
    return None


def _ordered(decomposition: Dict[IrrepLabel, int]) -> Dict[IrrepLabel, int]:
    return {
        label: decomposition[label]
        for label in sorted(decomposition, key=sort_key)
        if decomposition[label]
    }


def induce_sign_oracle(spec: SubgroupSpec) -> Dict[IrrepLabel, int]:
    """
    Decompose the induced sign character with the character table oracle.

    :raises UnsupportedShape: If the subgroup has no simple roots.
    :raises OracleBoundExceeded: If the ambient group is too large.
    """
    if not spec.simple_roots:
        raise UnsupportedShape(f"no embedding given for {spec.factors} in {spec.ambient}")
    group = oracle_group(*spec.ambient)
    values = group.induce_sign(spec.simple_roots)
    return _ordered(group.decompose(values))


def induce_sign_decompose(spec: SubgroupSpec) -> Dict[IrrepLabel, int]:
    """
    Decompose the character induced from the sign character of a reflection subgroup.

    :param spec: The subgroup.
    :type spec: SubgroupSpec
    :raises UnsupportedShape: If no closed form applies and the oracle cannot be used.
    :return: Multiplicities keyed by irreducible label.
    :rtype: Dict[IrrepLabel, int]
    """
    closed = _closed_form(spec)
    if closed is not None:
        return _ordered(closed)
    try:
        return induce_sign_oracle(spec)
    except OracleBoundExceeded as exc:
        raise UnsupportedShape(str(exc)) from exc


def j_induce_sign(spec: SubgroupSpec) -> IrrepLabel:
    """
    Truncated induction of the sign character: the unique constituent whose b-invariant equals
    the number of positive roots of the subgroup.

    :param spec: The subgroup.
    :type spec: SubgroupSpec
    :raises InductionError: If that constituent is missing, repeated or of multiplicity above one.
    :return: The label.
    :rtype: IrrepLabel
    """
    target = spec.positive_count
    decomposition = induce_sign_decompose(spec)
    hits = [(label, m) for label, m in decomposition.items() if b_invariant(label) == target]
    if len(hits) != 1 or hits[0][1] != 1:
        raise InductionError(
            f"truncated induction from {spec.factors} in {spec.ambient} found {hits}"
        )
    return hits[0][0]
