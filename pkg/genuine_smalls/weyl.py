"""
Weyl group elements as exact matrices acting on the ambient space of a root system, together
with the signed permutation view used for the classical types.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .exceptions import RootSystemError, WeylGroupError
from .rootsys import RootSystem, Weight, dot, pairing

__all__ = [
    "WeylElement",
    "identity",
    "reflection",
    "preserves_weight_coset",
    "product_of_set",
    "signed_permutation",
    "signed_cycle_type",
    "signed_class_key",
]

Matrix = Tuple[Tuple[Fraction, ...], ...]
SignedPermutation = Tuple[Tuple[int, int], ...]


class WeylElement:
    """
    An element of a Weyl group, stored as its matrix on column vectors.

    :param matrix: The square matrix of the element.
    :type matrix: Matrix
    :param word: The roots whose reflections multiply to this element, if known.
    :type word: Optional[Tuple[Weight, ...]]
    """

    __slots__ = ("matrix", "word")

    def __init__(self, matrix: Matrix, word: Optional[Tuple[Weight, ...]] = None):
        self.matrix: Matrix = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        self.word: Optional[Tuple[Weight, ...]] = word

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def __call__(self, v: Weight) -> Weight:
        return tuple(
            sum((m * x for m, x in zip(row, v)), Fraction(0)) for row in self.matrix
        )

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        cols = list(zip(*other.matrix))
        product = tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
            for row in self.matrix
        )
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(product, word)

    def inverse(self) -> "WeylElement":
        # Weyl group elements are orthogonal
        word = tuple(reversed(self.word)) if self.word is not None else None
        return WeylElement(tuple(zip(*self.matrix)), word)

    def is_identity(self) -> bool:
        return all(
            x == (1 if i == j else 0)
            for i, row in enumerate(self.matrix)
            for j, x in enumerate(row)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"WeylElement({[[str(x) for x in row] for row in self.matrix]})"


def identity(dim: int) -> WeylElement:
    return WeylElement(
        tuple(tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)), ()
    )


def reflection(rs: RootSystem, alpha: Weight) -> WeylElement:
    """
    The reflection ``v -> v - <v, alpha coroot> alpha``.

    :param rs: The root system.
    :type rs: RootSystem
    :param alpha: A root of `rs`.
    :type alpha: Weight
    :raises RootSystemError: If `alpha` is not a root.
    :return: The reflection.
    :rtype: WeylElement
    """
    alpha = tuple(Fraction(x) for x in alpha)
    if not rs.is_root(alpha):
        raise RootSystemError(f"{alpha} is not a root of {rs.label}")
    norm = dot(alpha, alpha)
    matrix = tuple(
        tuple(
            Fraction(int(i == j)) - 2 * alpha[i] * alpha[j] / norm for j in range(rs.dim)
        )
        for i in range(rs.dim)
    )
    return WeylElement(matrix, (alpha,))


def preserves_weight_coset(rs: RootSystem, w: WeylElement, lam: Weight) -> bool:
    """
    Whether ``w(lam) - lam`` lies in the weight lattice, i.e. pairs integrally with every
    simple coroot.

    :param rs: The root system.
    :type rs: RootSystem
    :param w: A Weyl group element.
    :type w: WeylElement
    :param lam: A weight.
    :type lam: Weight
    :rtype: bool
    """
    moved = w(lam)
    diff = tuple(a - b for a, b in zip(moved, lam))
    return all(pairing(diff, alpha).denominator == 1 for alpha in rs.simple_roots)


def product_of_set(rs: RootSystem, roots: Iterable[Weight]) -> WeylElement:
    """
    The product of the reflections in a set of mutually orthogonal roots.

    :param rs: The root system.
    :type rs: RootSystem
    :param roots: Mutually orthogonal roots.
    :type roots: Iterable[Weight]
    :raises WeylGroupError: If two of the roots are not orthogonal.
    :return: The product, which does not depend on the order.
    :rtype: WeylElement
    """
    roots = [tuple(Fraction(x) for x in r) for r in roots]
    for i, a in enumerate(roots):
        for b in roots[i + 1:]:
            if dot(a, b) != 0:
                raise WeylGroupError(f"{a} and {b} are not orthogonal")
    result = identity(rs.dim)
    for r in roots:
        result = result * reflection(rs, r)
    return result


def signed_permutation(w: WeylElement) -> SignedPermutation:
    """
    Read `w` as a signed permutation: entry ``i`` is ``(j, s)`` when ``w(e_i) = s e_j``.

    :raises WeylGroupError: If the matrix is not a signed permutation matrix.
    """
    cols = list(zip(*w.matrix))
    out: List[Tuple[int, int]] = []
    for col in cols:
        nonzero = [(j, x) for j, x in enumerate(col) if x != 0]
        if len(nonzero) != 1 or abs(nonzero[0][1]) != 1:
            raise WeylGroupError("element is not a signed permutation")
        j, x = nonzero[0]
        out.append((j, int(x)))
    return tuple(out)


def _cycles(sp: SignedPermutation) -> List[Tuple[List[int], int]]:
    seen = [False] * len(sp)
    cycles = []
    for start in range(len(sp)):
        if seen[start]:
            continue
        cycle, sign, i = [], 1, start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            j, s = sp[i]
            sign *= s
            i = j
        cycles.append((cycle, sign))
    return cycles


def signed_cycle_type(w: WeylElement) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    The signed cycle type of a signed permutation: the lengths of its positive and of its
    negative cycles, each as a partition.

    :rtype: Tuple[Tuple[int, ...], Tuple[int, ...]]
    """
    pos, neg = [], []
    for cycle, sign in _cycles(signed_permutation(w)):
        (pos if sign > 0 else neg).append(len(cycle))
    return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))


def _conjugator_parity(sp: SignedPermutation, pos: Sequence[int]) -> int:
    """
    Parity of the number of sign changes of some ``g`` with ``g c g^-1 = w``, where ``c`` is the
    standard product of positive cycles of lengths `pos` on consecutive coordinates.
    """
    target_cycles = sorted(_cycles(sp), key=lambda item: (-len(item[0]), item[0][0]))
    negatives = 0
    for cycle, _ in target_cycles:
        # g(e_{p_0}) = e_{q_0}; g(e_{p_{t+1}}) = w(g(e_{p_t}))
        index, sign = cycle[0], 1
        for _ in range(len(cycle) - 1):
            j, s = sp[index]
            index, sign = j, sign * s
            if sign < 0:
                negatives += 1
    return negatives % 2


def signed_class_key(w: WeylElement) -> Tuple[Tuple[int, ...], Tuple[int, ...], Optional[int]]:
    """
    A key separating the conjugacy classes of the even signed permutation group: the signed
    cycle type, plus a parity marker for the classes (only positive cycles, all of even length)
    that split in two.

    :param w: A signed permutation with an even number of sign changes.
    :type w: WeylElement
    :rtype: Tuple[Tuple[int, ...], Tuple[int, ...], Optional[int]]
    """
    pos, neg = signed_cycle_type(w)
    if neg or any(k % 2 for k in pos):
        return pos, neg, None
    return pos, neg, _conjugator_parity(signed_permutation(w), pos)
