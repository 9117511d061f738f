"""
Subsets of the simple roots of a simply laced Dynkin diagram that are pairwise strongly
orthogonal and meet every other node in an even number of neighbours.

These subsets form a group under symmetric difference that maps bijectively onto
``P/(2P+R)``, the subset ``S`` going to the coset of ``w_S(rho/2) - rho/2`` where ``w_S`` is the
product of the reflections in ``S``. The sets also index the central characters of the
genuine representations of the split double cover.
"""

from __future__ import annotations

import logging
from collections import deque
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .exceptions import DiagramError, RootSystemError
from .rootsys import (
    LatticeQuotient,
    RootSystem,
    Weight,
    add,
    build,
    quotient,
    scale,
    sub,
)
from .weyl import WeylElement, preserves_weight_coset, product_of_set

__all__ = [
    "DynkinDiagram",
    "enumerate_sets",
    "set_class",
    "strongly_orthogonal",
    "render_diagram",
    "diagram_of",
]

logger = logging.getLogger(__name__)

MAX_RANK = 16

FILLED = "●"
EMPTY = "○"


class DynkinDiagram:
    """
    The Dynkin diagram of a simply laced root system.

    :param label: The type, e.g. ``"D4"``.
    :type label: str
    :param adjacency: Neighbours of every node, nodes numbered from 0 in Bourbaki order.
    :type adjacency: Dict[int, FrozenSet[int]]
    :raises DiagramError: If the relation is not symmetric or has loops.
    """

    def __init__(self, label: str, adjacency: Dict[int, FrozenSet[int]]):
        for i, neighbours in adjacency.items():
            if i in neighbours or any(i not in adjacency[j] for j in neighbours):
                raise DiagramError(f"{label}: adjacency is not a simple graph")
        self.label: str = label
        self.adjacency: Dict[int, FrozenSet[int]] = adjacency

    @classmethod
    def from_root_system(cls, rs: RootSystem) -> "DynkinDiagram":
        """
        :raises DiagramError: If `rs` has a multiple bond.
        """
        cm = rs.cartan_matrix
        r = rs.rank
        if any(cm[i][j] not in (0, -1) for i in range(r) for j in range(r) if i != j):
            raise DiagramError(f"{rs.label} is not simply laced")
        adjacency = {
            i: frozenset(j for j in range(r) if j != i and cm[i][j] == -1) for i in range(r)
        }
        return cls(rs.label, adjacency)

    @property
    def rank(self) -> int:
        return len(self.adjacency)

    def even_neighbours(self, subset: Sequence[int]) -> bool:
        """Every node outside `subset` has an even number of neighbours in it."""
        chosen = set(subset)
        return all(
            len(self.adjacency[i] & chosen) % 2 == 0
            for i in range(self.rank)
            if i not in chosen
        )

    def independent(self, subset: Sequence[int]) -> bool:
        return all(b not in self.adjacency[a] for a, b in combinations(subset, 2))

    def __repr__(self) -> str:
        return f"DynkinDiagram({self.label})"


def diagram_of(cartan: str, rank: int) -> DynkinDiagram:
    return DynkinDiagram.from_root_system(build(cartan, rank))


def strongly_orthogonal(rs: RootSystem, a: Weight, b: Weight) -> bool:
    """
    Whether neither ``a + b`` nor ``a - b`` is a root. A root is not strongly orthogonal to
    itself nor to its negative.

    :param rs: The root system.
    :type rs: RootSystem
    :param a: A root.
    :type a: Weight
    :param b: A root.
    :type b: Weight
    :raises RootSystemError: If `a` or `b` is not a root.
    :rtype: bool
    """
    a = tuple(Fraction(x) for x in a)
    b = tuple(Fraction(x) for x in b)
    for v in (a, b):
        if not rs.is_root(v):
            raise RootSystemError(f"{v} is not a root of {rs.label}")
    if a == b or a == scale(-1, b):
        return False
    return not rs.is_root(add(a, b)) and not rs.is_root(sub(a, b))


def enumerate_sets(diagram: DynkinDiagram) -> List[Tuple[int, ...]]:
    """
    All subsets of nodes, pairwise non-adjacent, such that each node outside the subset is
    adjacent to an even number of its elements. In a simply laced diagram non-adjacent simple
    roots are exactly the strongly orthogonal ones.

    :param diagram: A simply laced diagram.
    :type diagram: DynkinDiagram
    :raises DiagramError: If the diagram has more than 16 nodes.
    :return: The subsets as increasing index tuples in lexicographic order, so the empty set
             comes first.
    :rtype: List[Tuple[int, ...]]
    """
    if diagram.rank > MAX_RANK:
        raise DiagramError(f"{diagram.label}: rank {diagram.rank} is too large to scan")
    out = sorted(
        subset
        for size in range(diagram.rank + 1)
        for subset in combinations(range(diagram.rank), size)
        if diagram.independent(subset) and diagram.even_neighbours(subset)
    )
    logger.debug("%s: %d even independent sets", diagram.label, len(out))
    return out


def _check_subset(diagram: DynkinDiagram, subset: Sequence[int]) -> None:
    if not diagram.independent(subset):
        raise DiagramError(f"{list(subset)} contains adjacent nodes of {diagram.label}")
    if not diagram.even_neighbours(subset):
        raise DiagramError(
            f"{list(subset)} has a node of {diagram.label} with an odd number of neighbours in it"
        )


def reflection_product(rs: RootSystem, subset: Sequence[int]) -> WeylElement:
    """The element ``w_S``."""
    return product_of_set(rs, [rs.simple_roots[i] for i in subset])


def set_class(
    rs: RootSystem, subset: Sequence[int], lattice: Optional[LatticeQuotient] = None
) -> Tuple[int, ...]:
    """
    The coset of ``w_S(rho/2) - rho/2`` in ``P/(2P+R)``.

    :param rs: A simply laced root system.
    :type rs: RootSystem
    :param subset: Node indices of a set returned by `enumerate_sets`.
    :type subset: Sequence[int]
    :param lattice: The quotient ``P/(2P+R)`` if already built.
    :type lattice: Optional[LatticeQuotient]
    :raises DiagramError: If the subset violates the defining conditions.
    :return: The coset label, all zeros for the identity coset.
    :rtype: Tuple[int, ...]
    """
    diagram = DynkinDiagram.from_root_system(rs)
    _check_subset(diagram, subset)
    lattice = lattice or quotient(rs, "P", "2P+R")
    half_rho = scale(Fraction(1, 2), rs.rho)
    w = reflection_product(rs, subset)
    if not preserves_weight_coset(rs, w, half_rho):
        raise DiagramError(f"w_S does not fix rho/2 modulo P for {list(subset)}")
    return lattice.label(sub(w(half_rho), half_rho))


def _longest_path(diagram: DynkinDiagram) -> List[int]:
    def farthest(start: int) -> Tuple[int, Dict[int, int]]:
        parent = {start: -1}
        depth = {start: 0}
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in sorted(diagram.adjacency[i]):
                if j not in depth:
                    depth[j] = depth[i] + 1
                    parent[j] = i
                    queue.append(j)
        best = max(depth.values())
        end = min(i for i, d in depth.items() if d == best)
        return end, parent

    one_end, _ = farthest(0)
    other_end, parent = farthest(one_end)
    path = [other_end]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path if path[0] < path[-1] else list(reversed(path))


def render_diagram(diagram: DynkinDiagram, subset: Sequence[int] = ()) -> str:
    """
    Draw the diagram as text, filled nodes for the subset and empty nodes elsewhere. Nodes off
    the main chain hang below their neighbour.

    :param diagram: A simply laced diagram.
    :type diagram: DynkinDiagram
    :param subset: The filled nodes.
    :type subset: Sequence[int]
    :rtype: str
    """
    chosen = set(subset)

    def node(i: int) -> str:
        return FILLED if i in chosen else EMPTY

    path = _longest_path(diagram)
    top = "─".join(node(i) for i in path)
    lines = [top]
    hanging = [i for i in range(diagram.rank) if i not in path]
    if hanging:
        column = {i: 2 * k for k, i in enumerate(path)}
        bar = [" "] * len(top)
        below = [" "] * len(top)
        for i in hanging:
            (anchor,) = [j for j in diagram.adjacency[i] if j in column]
            bar[column[anchor]] = "│"
            below[column[anchor]] = node(i)
        lines += ["".join(bar).rstrip(), "".join(below).rstrip()]
    return "\n".join(lines)
