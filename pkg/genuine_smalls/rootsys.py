"""
This module builds the root systems of the simple complex Lie algebras in the usual
coordinates and provides the exact arithmetic the rest of the package relies on: pairings with
coroots, fundamental weights, integral root subsystems of a weight and finite quotients of
weight and root lattices.

Coordinates follow the standard conventions:

* ``A`` of rank ``r`` lives in the sum-zero hyperplane of ``R^(r+1)``;
* ``B``, ``C`` and ``D`` of rank ``n`` live in ``R^n``;
* ``E6``, ``E7`` and ``E8`` are cut out of the ``E8`` lattice in ``R^8``;
* ``F4`` lives in ``R^4`` and ``G2`` in the sum-zero plane of ``R^3``.

All arithmetic is exact; weights are tuples of `fractions.Fraction`.
"""

from __future__ import annotations

import logging
from collections import deque
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Iterable, List, Sequence, Tuple, Union

from sympy import Matrix, Rational, ZZ
from sympy.matrices.normalforms import hermite_normal_form, smith_normal_form

from .exceptions import LatticeError, RootSystemError

__all__ = [
    "Weight",
    "RootSystem",
    "IntegralSubsystem",
    "LatticeQuotient",
    "weight",
    "dot",
    "add",
    "sub",
    "scale",
    "pairing",
    "build",
    "canonical_infinitesimal_character",
    "half_coroot_rho",
    "integral_subsystem",
    "identify_type",
    "quotient",
    "gk_dimension",
    "positive_root_count",
    "normalize_type",
]

logger = logging.getLogger(__name__)

Weight = Tuple[Fraction, ...]
LatticeSpec = Union[str, Sequence[Weight]]

_HALF = Fraction(1, 2)


def weight(*entries: Union[int, Fraction, str]) -> Weight:
    """
    Build a weight from integers, fractions or strings such as ``"3/2"``.

    :return: The weight as a tuple of fractions.
    :rtype: Weight
    """
    return tuple(Fraction(x) for x in entries)


def dot(a: Weight, b: Weight) -> Fraction:
    """Standard inner product."""
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def scale(c: Union[int, Fraction], a: Weight) -> Weight:
    return tuple(c * x for x in a)


def pairing(v: Weight, alpha: Weight) -> Fraction:
    """
    The pairing of `v` with the coroot of `alpha`, that is ``2<v, alpha>/<alpha, alpha>``.

    :param v: Any weight.
    :type v: Weight
    :param alpha: A nonzero vector, normally a root.
    :type alpha: Weight
    :return: The pairing.
    :rtype: Fraction
    """
    return 2 * dot(v, alpha) / dot(alpha, alpha)


def _e(dim: int, *signed: Tuple[int, int]) -> Weight:
    """Sum of ``sign * e_index`` with 1-based indices."""
    v = [Fraction(0)] * dim
    for sign, index in signed:
        v[index - 1] += sign
    return tuple(v)


def _to_fraction(x) -> Fraction:
    x = Rational(x)
    return Fraction(int(x.p), int(x.q))


def _sympy_matrix(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    return Matrix([[Rational(x.numerator, x.denominator) for x in row] for row in rows])


def _e8_simple_roots() -> List[Weight]:
    h = _HALF
    roots = [weight(h, -h, -h, -h, -h, -h, -h, h), _e(8, (1, 1), (1, 2))]
    roots.append(_e(8, (1, 2), (-1, 1)))
    for i in range(3, 8):
        roots.append(_e(8, (1, i), (-1, i - 1)))
    return roots


def _simple_roots(cartan: str, rank: int) -> Tuple[int, List[Weight]]:
    """Return the ambient dimension and the simple roots in Bourbaki order."""
    if cartan == "A":
        if rank < 1:
            raise RootSystemError(f"A{rank} is not a root system")
        n = rank + 1
        return n, [_e(n, (1, i), (-1, i + 1)) for i in range(1, n)]
    if cartan in ("B", "C", "D"):
        minimum = 3 if cartan == "D" else 2
        if rank < minimum:
            raise RootSystemError(f"{cartan}{rank} is not a simple root system of this family")
        n = rank
        roots = [_e(n, (1, i), (-1, i + 1)) for i in range(1, n)]
        if cartan == "B":
            roots.append(_e(n, (1, n)))
        elif cartan == "C":
            roots.append(_e(n, (2, n)))
        else:
            roots.append(_e(n, (1, n - 1), (1, n)))
        return n, roots
    if cartan == "E":
        if rank not in (6, 7, 8):
            raise RootSystemError(f"E{rank} is not a root system")
        return 8, _e8_simple_roots()[:rank]
    if cartan == "F":
        if rank != 4:
            raise RootSystemError(f"F{rank} is not a root system")
        return 4, [
            _e(4, (1, 2), (-1, 3)),
            _e(4, (1, 3), (-1, 4)),
            _e(4, (1, 4)),
            weight(_HALF, -_HALF, -_HALF, -_HALF),
        ]
    if cartan == "G":
        if rank != 2:
            raise RootSystemError(f"G{rank} is not a root system")
        return 3, [_e(3, (1, 1), (-1, 2)), _e(3, (-2, 1), (1, 2), (1, 3))]
    raise RootSystemError(f"unknown Cartan type {cartan!r}")


def _reflect(v: Weight, alpha: Weight) -> Weight:
    return sub(v, scale(pairing(v, alpha), alpha))


def _close_under_reflections(simple: Sequence[Weight]) -> List[Weight]:
    seen = set(simple)
    queue = deque(simple)
    while queue:
        v = queue.popleft()
        for alpha in simple:
            w = _reflect(v, alpha)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return list(seen)


class RootSystem:
    """
    A root system of a simple complex Lie algebra in standard coordinates.

    :param cartan: The Cartan letter, one of ``A`` to ``G``.
    :type cartan: str
    :param rank: The rank.
    :type rank: int
    :param dim: The dimension of the ambient space.
    :type dim: int
    :param simple_roots: The simple roots in Bourbaki order.
    :type simple_roots: Sequence[Weight]
    """

    def __init__(self, cartan: str, rank: int, dim: int, simple_roots: Sequence[Weight]):
        self.cartan: str = cartan
        self.rank: int = rank
        self.dim: int = dim
        self.simple_roots: Tuple[Weight, ...] = tuple(simple_roots)

        gram = [[dot(a, b) for b in self.simple_roots] for a in self.simple_roots]
        self._gram_inverse: List[List[Fraction]] = [
            [_to_fraction(x) for x in row]
            for row in _sympy_matrix(gram).inv().tolist()
        ]

        roots = _close_under_reflections(self.simple_roots)
        positive = [r for r in roots if self._is_positive(r)]
        positive.sort(key=lambda r: (self.height(r), r))
        self.positive_roots: Tuple[Weight, ...] = tuple(positive)
        self.roots: Tuple[Weight, ...] = self.positive_roots + tuple(
            scale(-1, r) for r in self.positive_roots
        )
        self._root_set = frozenset(self.roots)

    def __repr__(self) -> str:
        return f"RootSystem({self.label})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootSystem):
            return NotImplemented
        return (self.cartan, self.rank) == (other.cartan, other.rank)

    def __hash__(self) -> int:
        return hash((self.cartan, self.rank))

    @property
    def label(self) -> str:
        return f"{self.cartan}{self.rank}"

    def simple_coordinates(self, v: Weight) -> Tuple[Fraction, ...]:
        """
        Coordinates of `v` in the basis of simple roots. `v` is assumed to lie in the span of
        the roots.

        :param v: A weight in the root span.
        :type v: Weight
        :return: The coefficients.
        :rtype: Tuple[Fraction, ...]
        """
        products = [dot(v, a) for a in self.simple_roots]
        return tuple(
            sum((g * p for g, p in zip(row, products)), Fraction(0))
            for row in self._gram_inverse
        )

    def height(self, root: Weight) -> Fraction:
        return sum(self.simple_coordinates(root), Fraction(0))

    def _is_positive(self, root: Weight) -> bool:
        coords = self.simple_coordinates(root)
        return all(c >= 0 for c in coords)

    def is_root(self, v: Weight) -> bool:
        return tuple(v) in self._root_set

    def is_positive(self, root: Weight) -> bool:
        """
        :raises RootSystemError: If `root` is not a root.
        """
        if not self.is_root(root):
            raise RootSystemError(f"{root} is not a root of {self.label}")
        return self._is_positive(root)

    @cached_property
    def cartan_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        """The matrix with entries ``<alpha_i, alpha_j coroot>``."""
        return tuple(
            tuple(int(pairing(a, b)) for b in self.simple_roots) for a in self.simple_roots
        )

    @cached_property
    def rho(self) -> Weight:
        total = tuple(Fraction(0) for _ in range(self.dim))
        for r in self.positive_roots:
            total = add(total, r)
        return scale(_HALF, total)

    @cached_property
    def fundamental_weights(self) -> Tuple[Weight, ...]:
        """
        The fundamental weights, expressed as ``sum_k (C^-1)_ik alpha_k`` where ``C`` is the
        Cartan matrix, so that they lie in the span of the roots.
        """
        inverse = Matrix(self.cartan_matrix).inv().tolist()
        weights = []
        for row in inverse:
            w = tuple(Fraction(0) for _ in range(self.dim))
            for c, alpha in zip(row, self.simple_roots):
                w = add(w, scale(_to_fraction(c), alpha))
            weights.append(w)
        return tuple(weights)

    def omega_coordinates(self, v: Weight) -> Tuple[Fraction, ...]:
        """Coordinates of `v` in the basis of fundamental weights."""
        return tuple(pairing(v, a) for a in self.simple_roots)

    @property
    def positive_count(self) -> int:
        return len(self.positive_roots)


@lru_cache(maxsize=None)
def build(cartan: str, rank: int) -> RootSystem:
    """
    Build the root system of the given Cartan type.

    :param cartan: One of ``A``, ``B``, ``C``, ``D``, ``E``, ``F``, ``G``.
    :type cartan: str
    :param rank: The rank.
    :type rank: int
    :raises RootSystemError: If the type and rank do not name a simple root system.
    :return: The root system.
    :rtype: RootSystem
    """
    dim, simple = _simple_roots(cartan.upper(), rank)
    rs = RootSystem(cartan.upper(), rank, dim, simple)
    logger.debug("built %s with %d positive roots", rs.label, rs.positive_count)
    return rs


def positive_root_count(cartan: str, rank: int) -> int:
    """
    Number of positive roots of a type given by letter and rank, allowing the degenerate
    labels that occur as factors (``A0``, ``B1``, ``C1``, ``D1``, ``D2``, ``D3``).
    """
    if rank <= 0:
        return 0
    if cartan == "A":
        return rank * (rank + 1) // 2
    if cartan in ("B", "C"):
        return rank * rank
    if cartan == "D":
        return rank * (rank - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[
        (cartan, rank)
    ]


def canonical_infinitesimal_character(rs: RootSystem) -> Weight:
    """
    The infinitesimal character at which the small representations are studied: half of rho
    for the simply laced types, ``F4`` and ``G2``; half of the rho of ``C_n`` for ``B_n``; the
    rho of ``B_n`` for ``C_n``.

    :param rs: The root system.
    :type rs: RootSystem
    :return: The weight.
    :rtype: Weight
    """
    if rs.cartan == "B":
        return scale(_HALF, build("C", rs.rank).rho)
    if rs.cartan == "C":
        return build("B", rs.rank).rho
    return scale(_HALF, rs.rho)


def half_coroot_rho(rs: RootSystem) -> Weight:
    """
    Half of the half sum of the positive coroots. It equals the canonical character for the
    simply laced types; for ``F4`` it is the weight whose integral roots form ``C4``.

    :param rs: The root system.
    :type rs: RootSystem
    :return: The weight.
    :rtype: Weight
    """
    total = tuple(Fraction(0) for _ in range(rs.dim))
    for r in rs.positive_roots:
        total = add(total, scale(2 / dot(r, r), r))
    return scale(Fraction(1, 4), total)


class IntegralSubsystem:
    """
    The integral root system of a regular weight together with its positive and simple roots
    and its Cartan type.

    :param roots: All roots integral for the weight.
    :type roots: Tuple[Weight, ...]
    :param positive_roots: Those with positive pairing.
    :type positive_roots: Tuple[Weight, ...]
    :param simple_roots: The simple roots of that positive system.
    :type simple_roots: Tuple[Weight, ...]
    :param components: The Cartan types of the irreducible components.
    :type components: Tuple[str, ...]
    """

    def __init__(
        self,
        roots: Tuple[Weight, ...],
        positive_roots: Tuple[Weight, ...],
        simple_roots: Tuple[Weight, ...],
        components: Tuple[str, ...],
    ):
        self.roots = roots
        self.positive_roots = positive_roots
        self.simple_roots = simple_roots
        self.components = components

    @property
    def label(self) -> str:
        return "x".join(self.components) if self.components else "0"

    @property
    def positive_count(self) -> int:
        return len(self.positive_roots)

    def __repr__(self) -> str:
        return f"IntegralSubsystem({self.label})"


def _components(simple: Sequence[Weight]) -> List[List[int]]:
    seen: set = set()
    comps = []
    for start in range(len(simple)):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(len(simple)):
                if j not in seen and dot(simple[i], simple[j]) != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _component_type(simple: Sequence[Weight]) -> str:
    r = len(simple)
    if r == 1:
        return "A1"
    cm = [[int(pairing(a, b)) for b in simple] for a in simple]
    bonds = {}
    for i in range(r):
        for j in range(i + 1, r):
            if cm[i][j] != 0:
                bonds[(i, j)] = cm[i][j] * cm[j][i]
    degree = [sum(1 for (i, j) in bonds if k in (i, j)) for k in range(r)]
    multiple = [(i, j) for (i, j), m in bonds.items() if m > 1]
    if multiple:
        (i, j), = multiple
        if bonds[(i, j)] == 3:
            return "G2"
        if r == 2:
            return "B2"
        if degree[i] == 2 and degree[j] == 2:
            return "F4"
        end, other = (i, j) if degree[i] == 1 else (j, i)
        # |<short, long coroot>| = 1, |<long, short coroot>| = 2
        short_end = abs(cm[end][other]) == 1
        return f"B{r}" if short_end else f"C{r}"
    branch = [k for k in range(r) if degree[k] == 3]
    if not branch:
        return f"A{r}"
    center = branch[0]
    arms = []
    for start in (j for j in range(r) if (min(center, j), max(center, j)) in bonds):
        length, prev, cur = 1, center, start
        while True:
            nxt = [
                k
                for k in range(r)
                if k != prev and (min(cur, k), max(cur, k)) in bonds
            ]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{r}"
    return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}[tuple(arms)]


def _type_key(label: str) -> Tuple[int, str]:
    return (-int(label[1:]), label[0])


def identify_type(simple_roots: Sequence[Weight]) -> Tuple[str, ...]:
    """
    Identify the Cartan types of the components of a set of simple roots from its Dynkin graph.

    :param simple_roots: A base of some root system.
    :type simple_roots: Sequence[Weight]
    :return: Component labels ordered by decreasing rank, e.g. ``("D4", "A1")``.
    :rtype: Tuple[str, ...]
    """
    labels = [
        _component_type([simple_roots[i] for i in comp]) for comp in _components(simple_roots)
    ]
    return tuple(sorted(labels, key=_type_key))


def normalize_type(factors: Iterable[str]) -> Tuple[str, ...]:
    """
    Rewrite factor labels the way `identify_type` reports them: rank one factors become
    ``A1``, ``C2`` becomes ``B2``, ``D2`` is ``A1xA1``, ``D3`` is ``A3`` and empty factors vanish.

    :param factors: Labels such as ``"B1"`` or ``"D3"``.
    :type factors: Iterable[str]
    :return: Normalized labels ordered by decreasing rank.
    :rtype: Tuple[str, ...]
    """
    out: List[str] = []
    for f in factors:
        letter, rank = f[0], int(f[1:])
        if rank <= 0 or (letter == "D" and rank == 1):
            continue
        if rank == 1:
            out.append("A1")
        elif letter == "C" and rank == 2:
            out.append("B2")
        elif letter == "D" and rank == 2:
            out.extend(["A1", "A1"])
        elif letter == "D" and rank == 3:
            out.append("A3")
        else:
            out.append(f"{letter}{rank}")
    return tuple(sorted(out, key=_type_key))


def integral_subsystem(rs: RootSystem, lam: Weight) -> IntegralSubsystem:
    """
    The integral root system of `lam`: the roots whose coroot pairs integrally with `lam`.

    :param rs: The root system.
    :type rs: RootSystem
    :param lam: A weight with no integral root orthogonal to it.
    :type lam: Weight
    :raises RootSystemError: If `lam` has the wrong length or is singular for an integral root.
    :return: The integral subsystem with positive system determined by `lam`.
    :rtype: IntegralSubsystem
    """
    if len(lam) != rs.dim:
        raise RootSystemError(f"weight of length {len(lam)} for {rs.label}")
    integral = [r for r in rs.roots if pairing(lam, r).denominator == 1]
    if any(pairing(lam, r) == 0 for r in integral):
        raise RootSystemError(f"{lam} is singular for {rs.label}")
    positive = [r for r in integral if pairing(lam, r) > 0]
    positive.sort(key=lambda r: (rs.height(r), r))
    sums = {add(a, b) for a in positive for b in positive}
    simple = tuple(r for r in positive if r not in sums)
    return IntegralSubsystem(
        roots=tuple(integral),
        positive_roots=tuple(positive),
        simple_roots=simple,
        components=identify_type(simple) if simple else (),
    )


def gk_dimension(rs: RootSystem, lam: Weight) -> int:
    """
    Twice the number of positive roots that are not integral for `lam`.

    :return: ``2 (|positive roots| - |positive integral roots|)``.
    :rtype: int
    """
    return 2 * (rs.positive_count - integral_subsystem(rs, lam).positive_count)


class LatticeQuotient:
    """
    A finite quotient ``num / den`` of full rank lattices in the weight space.

    Lattices are handled in coordinates with respect to the fundamental weights, scaled by a
    common denominator. The numerator gets a Hermite basis, the denominator is rewritten in
    that basis and its Smith form gives the invariant factors. Coset labels are the numerator
    coordinates reduced against the Hermite basis of the denominator.

    :param rs: The root system.
    :type rs: RootSystem
    :param num: Generators of the numerator lattice, in fundamental weight coordinates.
    :type num: Sequence[Sequence[Fraction]]
    :param den: Generators of the denominator lattice, in the same coordinates.
    :type den: Sequence[Sequence[Fraction]]
    """

    def __init__(
        self,
        rs: RootSystem,
        num: Sequence[Sequence[Fraction]],
        den: Sequence[Sequence[Fraction]],
    ):
        self.rs = rs
        r = rs.rank
        entries = [x for g in list(num) + list(den) for x in g]
        self.scale: int = lcm(*(Fraction(x).denominator for x in entries)) if entries else 1

        basis = hermite_normal_form(self._columns(num))
        if basis.shape != (r, r):
            raise LatticeError("numerator lattice is not of full rank")
        self._basis: Matrix = basis
        self._basis_inverse: Matrix = basis.inv()

        coords = self._columns(den)
        in_basis = self._basis_inverse * coords
        if any(not x.is_integer for x in in_basis):
            raise LatticeError("denominator lattice is not contained in the numerator")
        relations = hermite_normal_form(in_basis)
        if relations.shape != (r, r):
            raise LatticeError("denominator lattice is not of full rank")
        self._relations: Matrix = relations

        diagonal = smith_normal_form(in_basis, domain=ZZ)
        factors = [abs(int(diagonal[i, i])) for i in range(min(diagonal.shape))]
        self.invariant_factors: Tuple[int, ...] = tuple(sorted(f for f in factors if f != 1))

    def _columns(self, gens: Sequence[Sequence[Fraction]]) -> Matrix:
        cols = [[int(Fraction(x) * self.scale) for x in g] for g in gens]
        return Matrix(cols).T

    @property
    def order(self) -> int:
        total = 1
        for f in self.invariant_factors:
            total *= f
        return total

    def label(self, v: Weight) -> Tuple[int, ...]:
        """
        The canonical label of the coset of `v`.

        :param v: A weight of the numerator lattice, in ambient coordinates.
        :type v: Weight
        :raises LatticeError: If `v` is not in the numerator lattice.
        :return: The reduced coordinates.
        :rtype: Tuple[int, ...]
        """
        scaled = [x * self.scale for x in self.rs.omega_coordinates(v)]
        if any(x.denominator != 1 for x in scaled):
            raise LatticeError(f"{v} is not in the numerator lattice")
        col = Matrix([int(x) for x in scaled])
        x = self._basis_inverse * col
        if any(not c.is_integer for c in x):
            raise LatticeError(f"{v} is not in the numerator lattice")
        coords = [int(c) for c in x]
        h = self._relations
        for i in reversed(range(self.rs.rank)):
            q = coords[i] // int(h[i, i])
            if q:
                coords = [c - q * int(h[k, i]) for k, c in enumerate(coords)]
        return tuple(coords)

    def __repr__(self) -> str:
        return f"LatticeQuotient({self.rs.label}, {list(self.invariant_factors)})"


def _lattice_generators(rs: RootSystem, spec: LatticeSpec) -> List[Tuple[Fraction, ...]]:
    r = rs.rank
    identity = [tuple(Fraction(int(i == j)) for j in range(r)) for i in range(r)]
    roots = [tuple(Fraction(x) for x in row) for row in rs.cartan_matrix]
    if isinstance(spec, str):
        key = spec.replace(" ", "").upper()
        if key == "P":
            return identity
        if key == "R":
            return roots
        if key == "2P":
            return [scale(2, g) for g in identity]
        if key in ("2P+R", "R+2P"):
            return [scale(2, g) for g in identity] + roots
        raise LatticeError(f"unknown lattice {spec!r}")
    return [rs.omega_coordinates(tuple(Fraction(x) for x in g)) for g in spec]


def quotient(rs: RootSystem, num: LatticeSpec, den: LatticeSpec) -> LatticeQuotient:
    """
    The quotient of two lattices given by name (``"P"``, ``"R"``, ``"2P"``, ``"2P+R"``) or by
    generators in ambient coordinates.

    :param rs: The root system.
    :type rs: RootSystem
    :param num: The numerator lattice.
    :type num: LatticeSpec
    :param den: The denominator lattice.
    :type den: LatticeSpec
    :raises LatticeError: If the quotient is not a finite group.
    :return: The quotient.
    :rtype: LatticeQuotient
    """
    return LatticeQuotient(rs, _lattice_generators(rs, num), _lattice_generators(rs, den))
