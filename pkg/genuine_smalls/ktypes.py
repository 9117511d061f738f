"""
K-types of the small genuine representations of the split groups of type ``A`` and ``D``.

A K-type is a highest weight of the maximal compact subgroup: one vector for type ``A``
(``Spin(n)``) and a pair of vectors for ``Spin(n, n)`` (``Spin(n) x Spin(n)``), each of length
the rank of the factor. In type ``D`` the representations arise by restricting K'-types
of a larger group; restriction from ``Spin(2m+1)`` to ``Spin(2m)`` is interlacing, and each
representation collects the restricted K-types of one parity of ``sum(lambda_i + gamma_i)``.

Families are compared through their asymptotic direction: the sign pattern of the K'-type
parameter that grows without bound, and the factor it sits in. A family is placed on the
real form of the Shimura family with the same direction.

.. code-block:: python

    from genuine_smalls.ktypes import pair_counts

    pair_counts("D", 4)  # PairCounts(representations=16, pairs=16, bijective=True)
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .ctx import current_settings
from .diagram_sets import diagram_of, enumerate_sets
from .exceptions import KTypeError
from .orbits import RealForm, listed_orbit, real_form_count
from .params import classify_schemes, SURVIVOR
from .weylrep.labels import partitions

__all__ = [
    "KType",
    "Row",
    "Family",
    "GridEntry",
    "PairCounts",
    "interlace",
    "dominant_vectors",
    "interlacing",
    "outer_act",
    "type_a_family",
    "type_a_families",
    "spin_rows",
    "spin_families",
    "restrict_split",
    "family_ktypes",
    "lowest_ktype",
    "stable_lowest",
    "pair_grid",
    "pair_counts",
]

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]

HALF = Fraction(1, 2)
SIGMA = "sigma"
GAMMA = "gamma"


def _vector(entries: Iterable) -> Vector:
    return tuple(Fraction(x) for x in entries)


def _sigma(v: Vector) -> Vector:
    return v[:-1] + (-v[-1],) if v else v


def _shift(v: Sequence[int], by: Fraction) -> Vector:
    return tuple(Fraction(x) + by for x in v)


def _format(v: Vector) -> str:
    return ",".join(str(x) for x in v)


@dataclass(frozen=True)
class KType:
    """
    A highest weight of the maximal compact subgroup, one vector per simple factor.

    Entries of a factor are all integers or all half-integers, and weakly decrease except that
    the last entry may carry either sign: ``v_1 >= ... >= v_(m-1) >= |v_m|``.

    :param factors: The vectors.
    :type factors: Tuple[Vector, ...]
    :raises KTypeError: If a factor is not such a highest weight.
    """

    factors: Tuple[Vector, ...]

    def __post_init__(self) -> None:
        factors = tuple(_vector(f) for f in self.factors)
        for f in factors:
            if not f:
                continue
            doubled = [2 * x for x in f]
            if any(d.denominator != 1 for d in doubled) or len({int(d) % 2 for d in doubled}) > 1:
                raise KTypeError(f"({_format(f)}) mixes integral and half-integral entries")
            if any(f[i] < f[i + 1] for i in range(len(f) - 2)) or (
                len(f) > 1 and f[-2] < abs(f[-1])
            ):
                raise KTypeError(f"({_format(f)}) is not dominant")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def of(cls, *vectors: Iterable) -> "KType":
        return cls(tuple(_vector(v) for v in vectors))

    @property
    def norm2(self) -> Fraction:
        return sum((x * x for f in self.factors for x in f), Fraction(0))

    def sort_key(self) -> Tuple[Fraction, Tuple[Vector, ...]]:
        return self.norm2, self.factors

    def __str__(self) -> str:
        return "(" + ";".join(_format(f) for f in self.factors) + ")"


def interlace(gamma: Sequence[int], lam: Sequence[int], odd: bool = False) -> bool:
    """
    Whether ``lambda_1 >= gamma_1 >= lambda_2 >= ... >= lambda_m >= gamma_m >= -lambda_m``.
    With `odd`, `lam` stands for ``(lambda, 0)`` and the last bound is ``gamma_m >= 0``.

    :param gamma: The restricted highest weight.
    :type gamma: Sequence[int]
    :param lam: The highest weight being restricted.
    :type lam: Sequence[int]
    :param odd: Use the bound of the odd case.
    :type odd: bool
    :raises KTypeError: If the lengths differ.
    :rtype: bool
    """
    if len(gamma) != len(lam):
        raise KTypeError(f"cannot interlace length {len(gamma)} with length {len(lam)}")
    chain: List = []
    for g, l in zip(gamma, lam):
        chain += [l, g]
    if lam:
        chain.append(0 if odd else -lam[-1])
    return all(a >= b for a, b in zip(chain, chain[1:]))


def dominant_vectors(length: int, bound: int) -> List[Tuple[int, ...]]:
    """Decreasing vectors of nonnegative integers of the given length with sum at most `bound`."""
    out = []
    for total in range(bound + 1):
        for p in partitions(total):
            if len(p) <= length:
                out.append(p + (0,) * (length - len(p)))
    return out


def interlacing(lam: Sequence[int], odd: bool = False) -> List[Tuple[int, ...]]:
    """All integer vectors `gamma` with ``interlace(gamma, lam, odd)``."""
    m = len(lam)
    ranges = []
    for i in range(m):
        low = lam[i + 1] if i + 1 < m else (0 if odd else -lam[-1])
        ranges.append(range(low, lam[i] + 1))
    return [g for g in product(*ranges)]


def outer_act(g: str, k: KType) -> KType:
    """
    Apply an outer automorphism: ``sigma`` negates the last entry of every factor, ``gamma``
    exchanges the two factors.

    :param g: ``"sigma"`` or ``"gamma"``.
    :type g: str
    :param k: The K-type.
    :type k: KType
    :raises KTypeError: For another name, or ``gamma`` on a K-type without two factors.
    :rtype: KType
    """
    if g == SIGMA:
        return KType(tuple(_sigma(f) for f in k.factors))
    if g == GAMMA:
        if len(k.factors) != 2:
            raise KTypeError(f"gamma needs two factors, got {k}")
        return KType((k.factors[1], k.factors[0]))
    raise KTypeError(f"unknown outer automorphism {g!r}")


_LABEL_RE = re.compile(r"^(Sh|pi|delta|tau)(\d)$")


def character_index(label: str) -> int:
    """The central character a label belongs to, read off its subscript."""
    match = _LABEL_RE.match(label)
    if not match:
        raise KTypeError(f"unknown representation label {label!r}")
    return int(match.group(2))


# type A


def _type_a_shape(rep: str, n: int) -> Tuple[int, Fraction, bool]:
    if n < 2:
        raise KTypeError(f"no families for n = {n}")
    if n % 2:
        if rep != "Sh1":
            raise KTypeError(f"only Sh1 exists for odd n, not {rep}")
        return (n - 1) // 2, HALF, False
    m = n // 2
    # which pi has a negated last entry swaps with the parity of m
    shapes = {
        "Sh1": (HALF, False),
        "Sh2": (HALF, True),
        "pi1": (Fraction(3, 2), m % 2 == 1),
        "pi2": (Fraction(3, 2), m % 2 == 0),
    }
    if rep not in shapes:
        raise KTypeError(f"unknown representation {rep!r}")
    start, negated = shapes[rep]
    return m, start, negated


def type_a_family(rep: str, n: int, bound: Optional[int] = None) -> List[KType]:
    """
    The K-types ``(c + 2a_1, ..., c + 2a_m)`` of a small representation of the double cover of
    ``SL(n, R)``, with ``c = 1/2`` for ``Sh1``/``Sh2`` and ``c = 3/2`` for ``pi1``/``pi2``, and
    the last entry negated for ``Sh2`` and for one of the ``pi``.

    :param rep: ``"Sh1"``, ``"Sh2"``, ``"pi1"`` or ``"pi2"``.
    :type rep: str
    :param n: The size of the matrices; ``m = n // 2``.
    :type n: int
    :param bound: Bound on ``sum a_i``, by default the configured K-type bound.
    :type bound: Optional[int]
    :raises KTypeError: For odd `n` with a representation other than ``Sh1``.
    :return: The K-types ordered by norm.
    :rtype: List[KType]
    """
    if bound is None:
        bound = current_settings().ktype_bound
    m, start, negated = _type_a_shape(rep, n)
    out = []
    for a in dominant_vectors(m, bound):
        v = tuple(start + 2 * x for x in a)
        out.append(KType((_sigma(v) if negated else v,)))
    return sorted(out, key=KType.sort_key)


def type_a_families(n: int) -> List[str]:
    return ["Sh1"] if n % 2 else ["Sh1", "Sh2", "pi1", "pi2"]


# type D


@dataclass(frozen=True)
class Row:
    """
    One K'-type of a small representation of the larger group, as it restricts to K.

    The factor on `lam_side` carries ``lambda + lam_shift`` (twisted by ``sigma`` when
    `lam_twisted`), the other factor carries ``gamma + gamma_shift`` with ``gamma`` interlacing
    ``lambda``. For a half-integral `gamma_shift` gamma is nonnegative and both
    ``gamma + 1/2`` and ``sigma(gamma + 1/2)`` occur.

    :param n: The rank of ``Spin(n, n)``.
    :type n: int
    :param name: The representation of the larger group, e.g. ``"Gamma1"``.
    :type name: str
    :param lam_side: ``"left"`` or ``"right"``.
    :type lam_side: str
    """

    n: int
    name: str
    lam_side: str
    lam_shift: Fraction
    lam_twisted: bool = False
    gamma_shift: Fraction = Fraction(0)

    @property
    def rank(self) -> int:
        return self.n // 2

    @property
    def odd(self) -> bool:
        return self.n % 2 == 1

    @property
    def pieces(self) -> Tuple[bool, ...]:
        """The twists of gamma that occur."""
        return (False, True) if self.gamma_shift else (False,)

    def ktype(self, lam: Sequence[int], gamma: Sequence[int], twisted: bool) -> KType:
        lam_part = _shift(lam, self.lam_shift)
        if self.lam_twisted:
            lam_part = _sigma(lam_part)
        gamma_part = _shift(gamma, self.gamma_shift)
        if twisted:
            gamma_part = _sigma(gamma_part)
        if self.lam_side == "left":
            return KType((lam_part, gamma_part))
        return KType((gamma_part, lam_part))

    def terms(self, bound: int) -> Iterable[Tuple[Tuple[int, ...], Tuple[int, ...], bool]]:
        nonnegative = self.odd or bool(self.gamma_shift)
        for lam in dominant_vectors(self.rank, bound):
            for gamma in interlacing(lam, odd=nonnegative):
                for twisted in self.pieces:
                    yield lam, gamma, twisted

    @property
    def direction(self) -> Tuple[Tuple[int, ...], ...]:
        """Sign pattern of the unbounded parameter, in its factor."""
        m = self.rank
        grow = (1,) * (m - 1) + (-1 if self.lam_twisted else 1,)
        still = (0,) * m
        return (grow, still) if self.lam_side == "left" else (still, grow)

    def __str__(self) -> str:
        lam = f"lambda+{self.lam_shift}"
        lam = f"sigma({lam})" if self.lam_twisted else lam
        gamma = "gamma" if not self.gamma_shift else f"gamma+{self.gamma_shift}"
        pair = (lam, gamma) if self.lam_side == "left" else (gamma, lam)
        return f"{self.name}: ({pair[0]}; {pair[1]})"


@dataclass(frozen=True)
class Family:
    """
    A small representation of ``Spin(n, n)``: the pieces of a row it collects.

    :param row: The row it comes from.
    :type row: Row
    :param labels: The label for even and for odd ``m = n // 2``.
    :type labels: Tuple[str, str]
    :param pieces: Pairs ``(gamma twisted, parity of sum(lambda_i + gamma_i))``.
    :type pieces: Tuple[Tuple[bool, int], ...]
    """

    row: Row
    labels: Tuple[str, str]
    pieces: Tuple[Tuple[bool, int], ...]

    @property
    def label(self) -> str:
        return self.labels[self.row.rank % 2]

    @property
    def character(self) -> int:
        return character_index(self.label)

    @property
    def shimura(self) -> bool:
        return self.label.startswith("Sh")


def spin_rows(n: int) -> List[Row]:
    """
    The restricted K'-types for ``Spin(n, n)``: eight rows for even `n`, two for odd `n`.

    :param n: The rank, at least 4.
    :type n: int
    :raises KTypeError: If `n` is below 4.
    :rtype: List[Row]
    """
    if n < 4:
        raise KTypeError(f"Spin({n},{n}) is out of range, need n >= 4")
    if n % 2:
        return [
            Row(n, "Gamma", "right", HALF),
            Row(n, "Gamma", "left", HALF),
        ]
    one = Fraction(1)
    return [
        Row(n, "Gamma1", "right", HALF),
        Row(n, "Gamma1", "left", HALF),
        Row(n, "Gamma2", "right", HALF, lam_twisted=True),
        Row(n, "Gamma2", "left", HALF, lam_twisted=True),
        Row(n, "Gamma3", "right", one, gamma_shift=HALF),
        Row(n, "Gamma3", "left", one, gamma_shift=HALF),
        Row(n, "Gamma4", "right", one, lam_twisted=True, gamma_shift=HALF),
        Row(n, "Gamma4", "left", one, lam_twisted=True, gamma_shift=HALF),
    ]


_EVEN = ((False, 0),)
_ODD = ((False, 1),)
_MIXED_EVEN = ((False, 0), (True, 1))
_MIXED_ODD = ((False, 1), (True, 0))

# (even part, odd part) labels per row of spin_rows, as (m even, m odd)
_EVEN_RANK_LABELS = [
    ((("Sh3", "Sh3"), _EVEN), (("pi4", "pi4"), _ODD)),
    ((("Sh1", "Sh1"), _EVEN), (("pi2", "pi2"), _ODD)),
    ((("Sh4", "Sh4"), _EVEN), (("pi3", "pi3"), _ODD)),
    ((("Sh2", "Sh2"), _EVEN), (("pi1", "pi1"), _ODD)),
    ((("delta1", "delta2"), _MIXED_EVEN), (("tau2", "tau1"), _MIXED_ODD)),
    ((("delta3", "delta4"), _MIXED_EVEN), (("tau4", "tau3"), _MIXED_ODD)),
    ((("tau1", "tau2"), _MIXED_EVEN), (("delta2", "delta1"), _MIXED_ODD)),
    ((("tau3", "tau4"), _MIXED_EVEN), (("delta4", "delta3"), _MIXED_ODD)),
]

_ODD_RANK_LABELS = [
    ((("Sh2", "Sh2"), _EVEN), (("pi1", "pi1"), _ODD)),
    ((("Sh1", "Sh1"), _EVEN), (("pi2", "pi2"), _ODD)),
]


def spin_families(n: int) -> List[Family]:
    """The sixteen (even `n`) or four (odd `n`) small representations of ``Spin(n, n)``."""
    labels = _ODD_RANK_LABELS if n % 2 else _EVEN_RANK_LABELS
    return [
        Family(row, names, pieces)
        for row, parts in zip(spin_rows(n), labels)
        for names, pieces in parts
    ]


def restrict_split(row: Row, bound: Optional[int] = None) -> Tuple[List[KType], List[KType]]:
    """
    Restrict a K'-type to K and split the result by the parity of ``sum(lambda_i + gamma_i)``.

    :param row: The row.
    :type row: Row
    :param bound: Bound on ``sum lambda_i``, by default the configured K-type bound.
    :type bound: Optional[int]
    :return: The even and the odd K-types, each ordered by norm.
    :rtype: Tuple[List[KType], List[KType]]
    """
    if bound is None:
        bound = current_settings().ktype_bound
    even: List[KType] = []
    odd: List[KType] = []
    for lam, gamma, twisted in row.terms(bound):
        target = odd if (sum(lam) + sum(gamma)) % 2 else even
        target.append(row.ktype(lam, gamma, twisted))
    return sorted(even, key=KType.sort_key), sorted(odd, key=KType.sort_key)


def family_ktypes(family: Family, bound: Optional[int] = None) -> List[KType]:
    """The K-types of a representation up to the bound, ordered by norm."""
    if bound is None:
        bound = current_settings().ktype_bound
    wanted = set(family.pieces)
    out = [
        family.row.ktype(lam, gamma, twisted)
        for lam, gamma, twisted in family.row.terms(bound)
        if (twisted, (sum(lam) + sum(gamma)) % 2) in wanted
    ]
    return sorted(out, key=KType.sort_key)


def lowest_ktype(ktypes: Iterable[KType]) -> KType:
    """
    The K-type of least norm, ties broken lexicographically.

    :raises KTypeError: If there are no K-types.
    """
    try:
        return min(ktypes, key=KType.sort_key)
    except ValueError as exc:
        raise KTypeError("no K-types below the bound") from exc


def stable_lowest(enumerate_up_to: Callable[[int], List[KType]], bound: int) -> KType:
    """
    The lowest K-type, checked to be the same at `bound` and ``bound + 2``.

    :raises KTypeError: If the two bounds disagree.
    """
    first = lowest_ktype(enumerate_up_to(bound))
    second = lowest_ktype(enumerate_up_to(bound + 2))
    if first != second:
        raise KTypeError(f"lowest K-type moves from {first} to {second} past bound {bound}")
    return first


# pairs (central character, real form)


@dataclass(frozen=True)
class GridEntry:
    """
    A small representation placed at ``(central character, real form)``.

    :param label: e.g. ``"Sh1"`` or ``"delta3"``.
    :type label: str
    :param character: Index of the central character.
    :type character: int
    :param real_form: Index of the real form of the orbit.
    :type real_form: int
    :param lowest: The lowest K-type.
    :type lowest: KType
    """

    label: str
    character: int
    real_form: int
    lowest: KType

    @property
    def cell(self) -> Tuple[int, int]:
        return self.character, self.real_form


class PairCounts(NamedTuple):
    representations: int
    pairs: int
    bijective: bool


def _type_a_grid(n: int, bound: int) -> List[GridEntry]:
    directions: Dict[int, int] = {}
    entries = []
    for rep in type_a_families(n):
        _, _, negated = _type_a_shape(rep, n)
        sign = -1 if negated else 1
        if rep.startswith("Sh"):
            directions[sign] = character_index(rep)
        lowest = stable_lowest(lambda b, rep=rep: type_a_family(rep, n, b), bound)
        entries.append((rep, sign, lowest))
    return [
        GridEntry(rep, character_index(rep), directions[sign], lowest)
        for rep, sign, lowest in entries
    ]


def _spin_grid(n: int, bound: int) -> List[GridEntry]:
    families = spin_families(n)
    directions = {f.row.direction: f.character for f in families if f.shimura}
    out = []
    for f in families:
        lowest = stable_lowest(lambda b, f=f: family_ktypes(f, b), bound)
        out.append(GridEntry(f.label, f.character, directions[f.row.direction], lowest))
    return out


def pair_grid(cartan: str, n: int, bound: Optional[int] = None) -> List[GridEntry]:
    """
    Place every small representation at its central character and at the real form of the
    Shimura representation with the same asymptotic direction.

    :param cartan: ``"A"`` (`n` the size of the matrices, at least 2) or ``"D"`` (`n` >= 4).
    :type cartan: str
    :param n: See `cartan`.
    :type n: int
    :param bound: K-type bound, by default the configured one.
    :type bound: Optional[int]
    :raises KTypeError: For another type or an out of range `n`.
    :rtype: List[GridEntry]
    """
    if bound is None:
        bound = current_settings().ktype_bound
    cartan = cartan.upper()
    if cartan == "A":
        grid = _type_a_grid(n, bound)
    elif cartan == "D":
        grid = _spin_grid(n, bound)
    else:
        raise KTypeError(f"no K-type tables for type {cartan}")
    return sorted(grid, key=lambda e: (e.cell, e.label))


def _split_form(cartan: str, n: int) -> RealForm:
    return RealForm("sl", n) if cartan == "A" else RealForm("so", n, n)


def pair_counts(cartan: str, n: int, bound: Optional[int] = None) -> PairCounts:
    """
    Compare the small representations with the pairs (central character, real form).

    The number of representations is the number of surviving parameter schemes times the
    number of central characters; the number of pairs is the number of central characters
    times the number of real forms of the orbit in the split real form. The map is bijective
    when the grid hits every pair exactly once.

    :param cartan: ``"A"`` (`n` >= 2) or ``"D"`` (`n` >= 4).
    :type cartan: str
    :param n: The size of the matrices for ``A``, the rank for ``D``.
    :type n: int
    :rtype: PairCounts
    """
    cartan = cartan.upper()
    if cartan not in ("A", "D"):
        raise KTypeError(f"no K-type tables for type {cartan}")
    rank = n - 1 if cartan == "A" else n
    characters = len(enumerate_sets(diagram_of(cartan, rank)))
    survivors = sum(1 for t in classify_schemes(cartan, n) if t.reason == SURVIVOR)
    forms = real_form_count(listed_orbit(cartan, n), _split_form(cartan, n))
    grid = pair_grid(cartan, n, bound)
    cells = [e.cell for e in grid]
    representations = survivors * characters
    pairs = characters * forms
    bijective = (
        len(grid) == representations and len(set(cells)) == len(cells) == pairs
    )
    logger.info(
        "%s n=%d: %d representations, %d pairs, bijective=%s",
        cartan, n, representations, pairs, bijective,
    )
    return PairCounts(representations, pairs, bijective)
