"""
This module computes Weyl group character tables from scratch. It serves as the independent
check on the closed-form induction formulas and supplies the exceptional groups.

The group is enumerated as permutations of the roots. Conjugacy classes come from closing
each element under conjugation by the simple reflections. Characters are the common
eigenvectors of the class multiplication matrices (Dixon-Schneider), normalized by the first
orthogonality relation. Fake degrees come from Molien's formula on the reflection
representation.

Tables can be cached on disk as JSON, see `genuine_smalls.config`.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from collections import deque
from fractions import Fraction
from functools import lru_cache
from math import factorial, isqrt
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import Matrix, Poly, Rational, Symbol, eye

from ..ctx import current_settings
from ..exceptions import OracleBoundExceeded, WeylGroupError
from ..rootsys import RootSystem, Weight, build, pairing, scale, sub
from ..weyl import WeylElement, signed_cycle_type
from .characters import hyperoctahedral_character, symmetric_character
from .labels import (
    BipartitionLabel,
    DBipartitionLabel,
    ExceptionalLabel,
    IrrepLabel,
    PartitionLabel,
    bipartitions,
    partitions,
)

__all__ = ["ConjugacyClass", "Character", "WeylGroupOracle", "weyl_order", "oracle_group"]

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]

_EXCEPTIONAL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


def weyl_order(cartan: str, rank: int) -> int:
    """The order of the Weyl group of the given type."""
    if cartan == "A":
        return factorial(rank + 1)
    if cartan in ("B", "C"):
        return 2**rank * factorial(rank)
    if cartan == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return _EXCEPTIONAL_ORDERS[(cartan, rank)]


def _compose(p: Permutation, q: Permutation) -> Permutation:
    return tuple(p[i] for i in q)


class ConjugacyClass:
    """
    :param index: Position in the class list.
    :type index: int
    :param size: Number of elements.
    :type size: int
    :param representative: The first element of the class in enumeration order.
    :type representative: Permutation
    :param sign: The determinant on the reflection representation.
    :type sign: int
    """

    def __init__(self, index: int, size: int, representative: Permutation, sign: int):
        self.index = index
        self.size = size
        self.representative = representative
        self.sign = sign
        self.simple_matrix: Tuple[Tuple[int, ...], ...] = ()
        self.signed_type: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None


class Character:
    """
    An irreducible character with its label and fake degree.

    :param values: Values on the classes, in class order.
    :type values: Tuple[int, ...]
    :param fake_degree: Coefficients of the fake degree, lowest power first.
    :type fake_degree: Tuple[int, ...]
    """

    def __init__(self, values: Tuple[int, ...], fake_degree: Tuple[int, ...]):
        self.values = values
        self.fake_degree = fake_degree
        self.label: Optional[IrrepLabel] = None

    @property
    def degree(self) -> int:
        return self.values[0]

    @property
    def b(self) -> int:
        return next(i for i, c in enumerate(self.fake_degree) if c != 0)

    def __repr__(self) -> str:
        return f"Character({self.label}, degree={self.degree}, b={self.b})"


class WeylGroupOracle:
    """
    The Weyl group of a root system enumerated as permutations of its roots, with its
    character table.

    :param rs: The root system.
    :type rs: RootSystem
    :param bound: Largest group order that will be enumerated.
    :type bound: int
    :param cache_dir: Directory for cached tables, or None.
    :type cache_dir: Optional[str]
    :raises OracleBoundExceeded: If the group is larger than `bound`.
    """

    def __init__(self, rs: RootSystem, bound: int, cache_dir: Optional[str] = None):
        self.rs = rs
        self.order: int = weyl_order(rs.cartan, rs.rank)
        if self.order > bound:
            raise OracleBoundExceeded(self.order, bound)
        self.cache_dir = cache_dir
        self._root_index: Dict[Weight, int] = {r: i for i, r in enumerate(rs.roots)}
        self._root_coords: List[Tuple[int, ...]] = [
            tuple(int(c) for c in rs.simple_coordinates(r)) for r in rs.roots
        ]
        self._simple_index = [self._root_index[a] for a in rs.simple_roots]
        self.generators: List[Permutation] = [
            self.reflection_permutation(a) for a in rs.simple_roots
        ]

        self._enumerate()
        self._find_classes()
        self._attach_class_data()
        values = self._load_cached_values()
        if values is None:
            values = self._compute_values()
            self._store_cached_values(values)
        fake = self._fake_degrees(values)
        self.characters: List[Character] = sorted(
            (Character(v, f) for v, f in zip(values, fake)),
            key=lambda ch: (ch.degree, ch.b, ch.values),
        )
        self._assign_labels()
        logger.info(
            "built character table for %s: %d classes", rs.label, len(self.classes)
        )

    # enumeration

    def reflection_permutation(self, root: Weight) -> Permutation:
        """The permutation of the roots induced by the reflection in `root`."""
        return tuple(
            self._root_index[sub(r, scale(pairing(r, root), root))] for r in self.rs.roots
        )

    def _enumerate(self) -> None:
        start = tuple(range(len(self.rs.roots)))
        self.elements: List[Permutation] = [start]
        parity: List[int] = [0]
        index: Dict[bytes, int] = {bytes(start): 0}
        queue = deque([0])
        while queue:
            i = queue.popleft()
            x = self.elements[i]
            for s in self.generators:
                y = _compose(s, x)
                key = bytes(y)
                if key not in index:
                    index[key] = len(self.elements)
                    self.elements.append(y)
                    parity.append(parity[i] ^ 1)
                    queue.append(index[key])
                    if len(self.elements) % 10000 == 0:
                        logger.debug("%s: %d elements", self.rs.label, len(self.elements))
        if len(self.elements) != self.order:
            raise WeylGroupError(
                f"enumerated {len(self.elements)} elements, expected {self.order}"
            )
        self._index = index
        self._parity = parity

    def _find_classes(self) -> None:
        element_class = [-1] * len(self.elements)
        self.classes: List[ConjugacyClass] = []
        for i, x in enumerate(self.elements):
            if element_class[i] >= 0:
                continue
            k = len(self.classes)
            element_class[i] = k
            members, stack = 1, [x]
            while stack:
                y = stack.pop()
                for s in self.generators:
                    z = _compose(_compose(s, y), s)
                    j = self._index[bytes(z)]
                    if element_class[j] < 0:
                        element_class[j] = k
                        members += 1
                        stack.append(z)
            self.classes.append(
                ConjugacyClass(k, members, x, -1 if self._parity[i] else 1)
            )
        self._element_class = element_class

    def class_of(self, perm: Permutation) -> int:
        return self._element_class[self._index[bytes(perm)]]

    def simple_matrix(self, perm: Permutation) -> Tuple[Tuple[int, ...], ...]:
        """The matrix of an element in the basis of simple roots."""
        cols = [self._root_coords[perm[i]] for i in self._simple_index]
        return tuple(zip(*cols))

    @property
    def _complement(self) -> Matrix:
        simple = Matrix(
            [[Rational(x.numerator, x.denominator) for x in a] for a in self.rs.simple_roots]
        )
        return simple.nullspace()

    def ambient_element(self, perm: Permutation) -> WeylElement:
        """The element as an ambient matrix, fixing the orthogonal complement of the roots."""
        def column(v: Weight) -> Matrix:
            return Matrix([Rational(x.numerator, x.denominator) for x in v])

        extra = self._complement
        basis = Matrix.hstack(*[column(a) for a in self.rs.simple_roots], *extra)
        images = Matrix.hstack(
            *[column(self.rs.roots[perm[i]]) for i in self._simple_index], *extra
        )
        m = images * basis.inv()
        return WeylElement(
            tuple(tuple(Fraction(int(x.p), int(x.q)) for x in row) for row in m.tolist())
        )

    def _attach_class_data(self) -> None:
        classical = self.rs.cartan in ("A", "B", "C", "D")
        for cls in self.classes:
            cls.simple_matrix = self.simple_matrix(cls.representative)
            if classical:
                cls.signed_type = signed_cycle_type(self.ambient_element(cls.representative))

    # character table

    def _class_matrices(self) -> List[List[List[int]]]:
        c = len(self.classes)
        counts = [[[0] * c for _ in range(c)] for _ in range(c)]
        for k, cls in enumerate(self.classes):
            z = cls.representative
            # classes are closed under inversion, so x runs over C_i as x^-1 does
            for x, i in zip(self.elements, self._element_class):
                j = self._element_class[self._index[bytes(_compose(x, z))]]
                counts[i][j][k] += 1
        return counts

    def _compute_values(self) -> List[Tuple[int, ...]]:
        c = len(self.classes)
        counts = self._class_matrices()
        spaces = [eye(c)]
        for i in range(1, c):
            if all(space.shape[1] == 1 for space in spaces):
                break
            m = Matrix(counts[i])
            refined = []
            for space in spaces:
                if space.shape[1] == 1:
                    refined.append(space)
                    continue
                restricted = (space.T * space).inv() * space.T * m * space
                for _, _, vectors in restricted.eigenvects():
                    refined.append(space * Matrix.hstack(*vectors))
            spaces = refined
        if len(spaces) != c or any(space.shape[1] != 1 for space in spaces):
            raise WeylGroupError(f"class algebra of {self.rs.label} did not split")

        values = []
        for space in spaces:
            omega = [x / space[0, 0] for x in space[:, 0]]
            norm = sum(w * w / cls.size for w, cls in zip(omega, self.classes))
            square = Rational(self.order) / norm
            degree = isqrt(int(square))
            if degree * degree != square:
                raise WeylGroupError(f"non-integral degree in {self.rs.label}")
            row = [w * degree / cls.size for w, cls in zip(omega, self.classes)]
            if any(not Rational(x).is_integer for x in row):
                raise WeylGroupError(f"non-integral character value in {self.rs.label}")
            values.append(tuple(int(x) for x in row))
        return values

    def _fake_degrees(self, values: Sequence[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
        q = Symbol("q")
        r = self.rs.rank
        dets = [
            Poly((eye(r) - q * Matrix(cls.simple_matrix)).det(), q) for cls in self.classes
        ]
        common = dets[0]
        for d in dets[1:]:
            common = common.lcm(d)
        parts = [common.exquo(d) for d in dets]
        denominator = sum(
            (p * cls.size for p, cls in zip(parts, self.classes)), Poly(0, q)
        )
        out = []
        for row in values:
            numerator = sum(
                (p * (cls.size * v) for p, cls, v in zip(parts, self.classes, row)),
                Poly(0, q),
            )
            quotient, remainder = numerator.div(denominator)
            if not remainder.is_zero:
                raise WeylGroupError(f"fake degree of {self.rs.label} is not a polynomial")
            coeffs = [int(x) for x in reversed(quotient.all_coeffs())]
            out.append(tuple(coeffs))
        return out

    def inner_product(self, f: Sequence, g: Sequence) -> Fraction:
        total = sum(
            (Fraction(a) * Fraction(b) * cls.size for a, b, cls in zip(f, g, self.classes)),
            Fraction(0),
        )
        return total / self.order

    # labels

    def _assign_labels(self) -> None:
        cartan, rank = self.rs.cartan, self.rs.rank
        if cartan in ("E", "F", "G"):
            self._label_exceptional()
            return
        if cartan == "A":
            candidates = [
                (
                    PartitionLabel(p),
                    [symmetric_character(p, cls.signed_type[0]) for cls in self.classes],
                )
                for p in partitions(rank + 1)
            ]
        elif cartan in ("B", "C"):
            candidates = [
                (
                    BipartitionLabel(a, b),
                    [hyperoctahedral_character(a, b, *cls.signed_type) for cls in self.classes],
                )
                for a, b in bipartitions(rank)
            ]
        else:
            seen = set()
            candidates = []
            for a, b in bipartitions(rank):
                label = DBipartitionLabel.of(a, b)
                if label in seen:
                    continue
                seen.add(label)
                candidates.append(
                    (
                        label,
                        [hyperoctahedral_character(a, b, *cls.signed_type) for cls in self.classes],
                    )
                )
        splits: Dict[DBipartitionLabel, int] = {}
        for ch in self.characters:
            matches = [
                label for label, values in candidates if self.inner_product(ch.values, values) == 1
            ]
            if len(matches) != 1:
                raise WeylGroupError(f"could not label a character of {self.rs.label}")
            label = matches[0]
            if isinstance(label, DBipartitionLabel) and label.degenerate:
                seen_before = splits.get(label, 0)
                splits[label] = seen_before + 1
                split = "I" if seen_before == 0 else "II"
                label = DBipartitionLabel.of(label.alpha, label.beta, split)
            ch.label = label

    def _label_exceptional(self) -> None:
        groups: Dict[Tuple[int, int], List[Character]] = {}
        for ch in self.characters:
            groups.setdefault((ch.degree, ch.b), []).append(ch)
        for (degree, b), chars in groups.items():
            ambiguous = len(chars) > 1
            for i, ch in enumerate(chars):
                mark = "'" * (i + 1) if ambiguous else ""
                ch.label = ExceptionalLabel(degree, b, mark, ambiguous)

    def character(self, label: IrrepLabel) -> Character:
        for ch in self.characters:
            if ch.label == label:
                return ch
        raise KeyError(label)

    # induction

    def subgroup(self, roots: Iterable[Weight]) -> List[Permutation]:
        """All elements of the subgroup generated by the reflections in `roots`."""
        gens = [self.reflection_permutation(tuple(r)) for r in roots]
        start = tuple(range(len(self.rs.roots)))
        seen = {bytes(start)}
        out = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for s in gens:
                y = _compose(s, x)
                key = bytes(y)
                if key not in seen:
                    seen.add(key)
                    out.append(y)
                    queue.append(y)
        return out

    def induce_sign(self, roots: Iterable[Weight]) -> Tuple[int, ...]:
        """
        Values of the character induced from the sign character of the reflection subgroup
        generated by `roots`.
        """
        sums = [0] * len(self.classes)
        subgroup = self.subgroup(roots)
        for h in subgroup:
            cls = self.classes[self.class_of(h)]
            sums[cls.index] += cls.sign
        values = []
        for total, cls in zip(sums, self.classes):
            value = Fraction(self.order * total, cls.size * len(subgroup))
            if value.denominator != 1:
                raise WeylGroupError("induced character is not integral")
            values.append(int(value))
        return tuple(values)

    def decompose(self, values: Sequence[int]) -> Dict[IrrepLabel, int]:
        out: Dict[IrrepLabel, int] = {}
        for ch in self.characters:
            m = self.inner_product(values, ch.values)
            if m.denominator != 1:
                raise WeylGroupError("not a character")
            if m:
                out[ch.label] = int(m)
        return out

    # cache

    def _cache_path(self) -> Optional[str]:
        if not self.cache_dir:
            return None
        return os.path.join(self.cache_dir, f"{self.rs.label}.json")

    def _load_cached_values(self) -> Optional[List[Tuple[int, ...]]]:
        path = self._cache_path()
        if path is None or not os.path.exists(path):
            return None
        reps = [list(cls.representative) for cls in self.classes]
        try:
            with open(path, "r", encoding="utf-8") as fp:
                data = json.load(fp)
            stale = data.get("representatives") != reps
            values = [tuple(int(x) for x in row) for row in data["values"]]
        except (OSError, ValueError, KeyError, TypeError, AttributeError):
            logger.warning("ignoring unreadable character table cache %s", path)
            return None
        if stale or len(values) != len(reps) or any(len(row) != len(reps) for row in values):
            logger.warning("ignoring stale character table cache %s", path)
            return None
        return values

    def _store_cached_values(self, values: List[Tuple[int, ...]]) -> None:
        path = self._cache_path()
        if path is None:
            return
        data = {
            "type": self.rs.label,
            "representatives": [list(cls.representative) for cls in self.classes],
            "values": [list(row) for row in values],
        }
        tmp = None
        try:
            os.makedirs(self.cache_dir, exist_ok=True)
            # readers never see a partial file
            fd, tmp = tempfile.mkstemp(prefix=f".{self.rs.label}.", dir=self.cache_dir)
            with os.fdopen(fd, "w", encoding="utf-8") as fp:
                json.dump(data, fp)
            os.replace(tmp, path)
        except OSError:
            logger.warning("could not write character table cache %s", path, exc_info=True)
            if tmp is not None and os.path.exists(tmp):
                os.unlink(tmp)


@lru_cache(maxsize=None)
def _oracle(cartan: str, rank: int, bound: int, cache_dir: Optional[str]) -> WeylGroupOracle:
    return WeylGroupOracle(build(cartan, rank), bound, cache_dir)


def oracle_group(cartan: str, rank: int) -> WeylGroupOracle:
    """
    The Weyl group of the given type with its labelled character table.

    :param cartan: The Cartan letter.
    :type cartan: str
    :param rank: The rank.
    :type rank: int
    :raises OracleBoundExceeded: If the group order exceeds the configured bound.
    :return: The enumerated group.
    :rtype: WeylGroupOracle
    """
    settings = current_settings()
    order = weyl_order(cartan, rank)
    if order > settings.oracle_bound:
        raise OracleBoundExceeded(order, settings.oracle_bound)
    return _oracle(cartan, rank, settings.oracle_bound, settings.cache_dir)
