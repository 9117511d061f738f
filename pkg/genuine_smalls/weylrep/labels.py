"""
Labels of irreducible Weyl group representations and their b-invariants.

* type ``A``: a partition, ``[n]`` being the trivial representation;
* types ``B`` and ``C``: an ordered pair of partitions ``(alpha; beta)``, ``([n]; -)`` trivial
  and ``(-; [1^n])`` the sign;
* type ``D``: an unordered pair ``{alpha; beta}``, split into ``I`` and ``II`` when the two
  partitions agree;
* exceptional types: the pair ``(degree, b)`` with a mark when that pair is not unique.

The b-invariant is the lowest degree in which the representation occurs in the coinvariant
algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple, Union

__all__ = [
    "Partition",
    "PartitionLabel",
    "BipartitionLabel",
    "DBipartitionLabel",
    "ExceptionalLabel",
    "IrrepLabel",
    "partitions",
    "bipartitions",
    "transpose",
    "n_invariant",
    "column",
    "b_invariant",
    "format_partition",
    "sort_key",
    "labels_sorted",
]

Partition = Tuple[int, ...]


def partitions(n: int, largest: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of `n` in decreasing lexicographic order."""
    if n == 0:
        yield ()
        return
    largest = n if largest is None else largest
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def bipartitions(n: int) -> Iterator[Tuple[Partition, Partition]]:
    for k in range(n, -1, -1):
        for alpha in partitions(k):
            for beta in partitions(n - k):
                yield alpha, beta


def transpose(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > i) for i in range(p[0]))


def n_invariant(p: Partition) -> int:
    """``sum (i - 1) p_i``."""
    return sum(i * part for i, part in enumerate(p))


def column(k: int) -> Partition:
    return (1,) * k


def format_partition(p: Partition) -> str:
    if not p:
        return "φ"
    return "[" + ",".join(str(x) for x in p) + "]"


def _size_key(p: Partition) -> Tuple[int, Partition]:
    return sum(p), p


@dataclass(frozen=True)
class PartitionLabel:
    parts: Partition

    def __str__(self) -> str:
        return format_partition(self.parts)


@dataclass(frozen=True)
class BipartitionLabel:
    alpha: Partition
    beta: Partition

    def __str__(self) -> str:
        return f"({format_partition(self.alpha)};{format_partition(self.beta)})"


@dataclass(frozen=True)
class DBipartitionLabel:
    """
    An unordered pair of partitions. Construct through `DBipartitionLabel.of` to get the
    normalized order (smaller size first).
    """

    alpha: Partition
    beta: Partition
    split: Optional[str] = None

    @classmethod
    def of(
        cls, alpha: Partition, beta: Partition, split: Optional[str] = None
    ) -> "DBipartitionLabel":
        first, second = sorted((tuple(alpha), tuple(beta)), key=_size_key)
        return cls(first, second, split)

    @property
    def degenerate(self) -> bool:
        return self.alpha == self.beta

    def __str__(self) -> str:
        text = f"{{{format_partition(self.alpha)};{format_partition(self.beta)}}}"
        return text + (self.split or "")


@dataclass(frozen=True)
class ExceptionalLabel:
    degree: int
    b: int
    mark: str = ""
    ambiguous: bool = False

    def __str__(self) -> str:
        return f"phi_{{{self.degree},{self.b}}}{self.mark}"


IrrepLabel = Union[PartitionLabel, BipartitionLabel, DBipartitionLabel, ExceptionalLabel]


def b_invariant(label: IrrepLabel) -> int:
    """
    The b-invariant of an irreducible representation.

    * ``[l]``: ``n(l)``;
    * ``(alpha; beta)``: ``2 n(alpha) + 2 n(beta) + |beta|``;
    * ``{alpha; beta}``: ``2 n(alpha) + 2 n(beta) + min(|alpha|, |beta|)``;
    * exceptional: the stored value.

    :param label: The label.
    :type label: IrrepLabel
    :raises TypeError: For an unknown label type.
    :rtype: int
    """
    if isinstance(label, PartitionLabel):
        return n_invariant(label.parts)
    if isinstance(label, BipartitionLabel):
        return 2 * n_invariant(label.alpha) + 2 * n_invariant(label.beta) + sum(label.beta)
    if isinstance(label, DBipartitionLabel):
        return (
            2 * n_invariant(label.alpha)
            + 2 * n_invariant(label.beta)
            + min(sum(label.alpha), sum(label.beta))
        )
    if isinstance(label, ExceptionalLabel):
        return label.b
    raise TypeError(f"not a representation label: {label!r}")


def sort_key(label: IrrepLabel) -> Tuple:
    """A total order on labels of one kind, used for deterministic output."""
    if isinstance(label, PartitionLabel):
        return (sum(label.parts), tuple(-x for x in label.parts))
    if isinstance(label, BipartitionLabel):
        return (sum(label.beta), tuple(-x for x in label.alpha), tuple(-x for x in label.beta))
    if isinstance(label, DBipartitionLabel):
        return (
            sum(label.alpha),
            tuple(-x for x in label.alpha),
            tuple(-x for x in label.beta),
            label.split or "",
        )
    return (label.degree, label.b, label.mark)


def labels_sorted(labels: List[IrrepLabel]) -> List[IrrepLabel]:
    return sorted(labels, key=sort_key)
