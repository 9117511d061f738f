"""
Parameter schemes for the split groups of type ``A`` and ``D`` at the infinitesimal character
``rho/2``, reduced to what the counting argument for small genuine representations needs: a
fixed set of orthogonal nonintegral roots, the subset of it that has been Cayley transformed,
and the involution this induces on the roots.

Type ``A_(n-1)`` uses the roots ``alpha_k = e_(2k-1) - e_(2k)``; type ``D_n`` also uses
``beta_k = e_(2k-1) + e_(2k)``, ordered ``alpha_1, beta_1, alpha_2, beta_2, ...``. A scheme with
transformed set ``C`` has involution ``theta = s_C o (-1)`` where ``s_C`` is the product of the
reflections in ``C``: roots of ``C`` are imaginary, the rest of the base set is real.

A scheme is eliminated when some member of its class has a real integral root, or (type ``D``)
when a member has an orthogonal quadruple ``e_p +- e_q, e_r +- e_s`` of nonintegral roots with
the first pair of one type and the second pair split between real and imaginary. The schemes
left over are counted per central character.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .exceptions import SchemeError
from .rootsys import (
    RootSystem,
    Weight,
    build,
    canonical_infinitesimal_character,
    integral_subsystem,
    scale,
)
from .weyl import WeylElement, product_of_set, reflection, signed_class_key

__all__ = [
    "ParamScheme",
    "SchemeTrace",
    "REAL",
    "IMAGINARY",
    "COMPLEX",
    "base_set",
    "scheme",
    "root_type",
    "has_real_integral_root",
    "has_mixed_quadruple",
    "reflection_word",
    "word_target",
    "imaginary_count",
    "reflection_sign",
    "cayley",
    "classify_schemes",
    "count_survivors",
]

logger = logging.getLogger(__name__)

REAL = "real"
IMAGINARY = "imaginary"
COMPLEX = "complex"

ELIMINATED_REAL = "R"
ELIMINATED_QUADRUPLE = "C"
SURVIVOR = "survivor"


def _e(n: int, *signed: Tuple[int, int]) -> Weight:
    v = [Fraction(0)] * n
    for sign, index in signed:
        v[index - 1] += sign
    return tuple(v)


def _root_system(cartan: str, n: int) -> RootSystem:
    if cartan == "A":
        if n < 2:
            raise SchemeError(f"A{n - 1} has no schemes")
        return build("A", n - 1)
    if cartan == "D":
        if n < 4:
            raise SchemeError(f"D{n} is out of range, need n >= 4")
        return build("D", n)
    raise SchemeError(f"schemes are defined for types A and D, not {cartan}")


def base_set(cartan: str, n: int) -> Tuple[Tuple[str, Weight], ...]:
    """
    The orthogonal nonintegral roots, with their names.

    :param cartan: ``"A"`` or ``"D"``.
    :type cartan: str
    :param n: The number of coordinates.
    :type n: int
    :return: Pairs ``(name, root)``, e.g. ``("a1", e1 - e2)``.
    :rtype: Tuple[Tuple[str, Weight], ...]
    """
    _root_system(cartan, n)
    out = []
    for k in range(1, n // 2 + 1):
        out.append((f"a{k}", _e(n, (1, 2 * k - 1), (-1, 2 * k))))
        if cartan == "D":
            out.append((f"b{k}", _e(n, (1, 2 * k - 1), (1, 2 * k))))
    return tuple(out)


@dataclass(frozen=True)
class ParamScheme:
    """
    A parameter scheme.

    :param cartan: ``"A"`` or ``"D"``.
    :type cartan: str
    :param n: The number of coordinates.
    :type n: int
    :param transformed: Indices into the base set of the Cayley transformed roots.
    :type transformed: FrozenSet[int]
    """

    cartan: str
    n: int
    transformed: FrozenSet[int] = frozenset()
    rs: RootSystem = field(init=False, compare=False, repr=False)
    base: Tuple[Tuple[str, Weight], ...] = field(init=False, compare=False, repr=False)
    lam: Weight = field(init=False, compare=False, repr=False)
    theta: WeylElement = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        rs = _root_system(self.cartan, self.n)
        base = base_set(self.cartan, self.n)
        transformed = frozenset(self.transformed)
        if any(not 0 <= i < len(base) for i in transformed):
            raise SchemeError(f"transformed set {sorted(transformed)} is not in the base set")
        s_c = product_of_set(rs, [base[i][1] for i in sorted(transformed)])
        theta = WeylElement(tuple(tuple(-x for x in row) for row in s_c.matrix))
        object.__setattr__(self, "transformed", transformed)
        object.__setattr__(self, "rs", rs)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "lam", canonical_infinitesimal_character(rs))
        object.__setattr__(self, "theta", theta)

    @property
    def reflection_part(self) -> WeylElement:
        """``s_C``, that is ``-theta``."""
        return WeylElement(tuple(tuple(-x for x in row) for row in self.theta.matrix))

    @property
    def real_base(self) -> Tuple[str, ...]:
        """Names of the base roots that are still real."""
        return tuple(name for i, (name, _) in enumerate(self.base) if i not in self.transformed)

    @property
    def real_rank(self) -> int:
        return self.n - len(self.transformed) - (1 if self.cartan == "A" else 0)

    @property
    def label(self) -> str:
        names = [self.base[i][0] for i in sorted(self.transformed)]
        return "{" + ",".join(names) + "}"

    def __str__(self) -> str:
        return f"{self.cartan}:{self.n}:{self.label}"


def scheme(cartan: str, n: int, transformed: Sequence[str] = ()) -> ParamScheme:
    """
    Build a scheme from base root names.

    :param cartan: ``"A"`` or ``"D"``.
    :type cartan: str
    :param n: The number of coordinates.
    :type n: int
    :param transformed: Names such as ``"a1"`` or ``"b2"``.
    :type transformed: Sequence[str]
    :raises SchemeError: For an unknown name.
    :rtype: ParamScheme
    """
    names = [name for name, _ in base_set(cartan, n)]
    try:
        indices = frozenset(names.index(t) for t in transformed)
    except ValueError as exc:
        raise SchemeError(f"unknown base root in {list(transformed)}") from exc
    return ParamScheme(cartan, n, indices)


def root_type(p: ParamScheme, alpha: Weight) -> str:
    """
    ``real`` if ``theta(alpha) = -alpha``, ``imaginary`` if ``theta(alpha) = alpha``, ``complex``
    otherwise.

    :param p: The scheme.
    :type p: ParamScheme
    :param alpha: A root.
    :type alpha: Weight
    :rtype: str
    """
    alpha = tuple(Fraction(x) for x in alpha)
    image = p.theta(alpha)
    if image == alpha:
        return IMAGINARY
    if image == scale(-1, alpha):
        return REAL
    return COMPLEX


def _integral_roots(p: ParamScheme) -> Tuple[Weight, ...]:
    return integral_subsystem(p.rs, p.lam).roots


def has_real_integral_root(p: ParamScheme, roots: Optional[Sequence[Weight]] = None) -> bool:
    """
    Whether one of `roots`, by default the integral roots at ``rho/2``, is real.

    :param p: The scheme.
    :type p: ParamScheme
    :param roots: The roots to test.
    :type roots: Optional[Sequence[Weight]]
    :rtype: bool
    """
    if roots is None:
        roots = _integral_roots(p)
    return any(root_type(p, r) == REAL for r in roots)


def _pair_types(p: ParamScheme, i: int, j: int) -> Tuple[str, str]:
    plus = _e(p.n, (1, i), (1, j))
    minus = _e(p.n, (1, i), (-1, j))
    return root_type(p, plus), root_type(p, minus)


def _uniform(types: Tuple[str, str]) -> bool:
    return types in ((REAL, REAL), (IMAGINARY, IMAGINARY))


def _mixed(types: Tuple[str, str]) -> bool:
    return set(types) == {REAL, IMAGINARY}


def _require_d(p: ParamScheme) -> None:
    if p.cartan != "D":
        raise SchemeError("the quadruple condition and the s_alpha word exist for type D only")


def quadruple_at(p: ParamScheme, first: Tuple[int, int], second: Tuple[int, int]) -> bool:
    """Whether ``e_p +- e_q`` (from `first`) and ``e_r +- e_s`` (from `second`) form a witness."""
    a, b = _pair_types(p, *first), _pair_types(p, *second)
    return _uniform(a) and _mixed(b)


def has_mixed_quadruple(p: ParamScheme) -> bool:
    """
    Whether there are distinct indices ``p, q, r, s`` with ``e_p +- e_q`` and ``e_r +- e_s``
    nonintegral, ``e_p +- e_q`` both real or both imaginary, and one of ``e_r +- e_s`` real and
    the other imaginary.

    :param p: A type ``D`` scheme.
    :type p: ParamScheme
    :raises SchemeError: For a type ``A`` scheme.
    :rtype: bool
    """
    _require_d(p)
    integral = set(_integral_roots(p))
    n = p.n
    pairs = [
        (i, j)
        for i, j in combinations(range(1, n + 1), 2)
        if _e(n, (1, i), (1, j)) not in integral and _e(n, (1, i), (-1, j)) not in integral
    ]
    mixed = [pair for pair in pairs if _mixed(_pair_types(p, *pair))]
    if not mixed:
        return False
    uniform = [pair for pair in pairs if _uniform(_pair_types(p, *pair))]
    return any(not set(u) & set(m) for u in uniform for m in mixed)


def word_target(n: int) -> Weight:
    """``e_(n-3) + e_(n-1)`` for even `n`, ``e_(n-2) + e_n`` for odd `n`."""
    if n < 4:
        raise SchemeError(f"D{n} is out of range, need n >= 4")
    if n % 2 == 0:
        return _e(n, (1, n - 3), (1, n - 1))
    return _e(n, (1, n - 2), (1, n))


@lru_cache(maxsize=None)
def reflection_word(n: int) -> Tuple[Weight, ...]:
    """
    The roots ``phi_j(alpha_j)`` met when the integral reflection ``s_alpha`` of ``D_n`` is
    written through simple reflections: nine roots for even `n`, eleven for odd `n`. The product
    of their reflections, in order, is checked against ``s_alpha``.

    :param n: The rank, at least 4.
    :type n: int
    :raises SchemeError: If `n` is below 4, or if the product check fails.
    :rtype: Tuple[Weight, ...]
    """
    target = word_target(n)
    if n % 2 == 0:
        signed = [
            ((1, n - 3), (1, n - 2)),
            ((1, n - 3), (1, n)),
            ((1, n - 3), (-1, n)),
            ((1, n - 2), (1, n - 1)),
            ((1, n - 3), (1, n - 1)),
            ((1, n - 3), (-1, n - 2)),
            ((1, n - 1), (1, n)),
            ((1, n - 1), (-1, n)),
            ((1, n - 1), (-1, n - 2)),
        ]
    else:
        signed = [
            ((1, n), (-1, n - 2)),
            ((1, n - 3), (1, n)),
            ((1, n - 3), (1, n - 2)),
            ((1, n - 1), (1, n)),
            ((1, n), (-1, n - 1)),
            ((1, n - 2), (1, n)),
            ((1, n - 2), (1, n - 1)),
            ((1, n - 2), (-1, n - 1)),
            ((1, n), (-1, n - 3)),
            ((1, n - 2), (-1, n - 3)),
            ((1, n - 2), (-1, n)),
        ]
    word = tuple(_e(n, *pair) for pair in signed)
    rs = build("D", n)
    total = reflection(rs, word[0])
    for root in word[1:]:
        total = total * reflection(rs, root)
    if total != reflection(rs, target):
        raise SchemeError(f"reflection word for D{n} does not multiply to s_alpha")
    return word


def imaginary_count(p: ParamScheme) -> int:
    """
    The number of imaginary roots among `reflection_word`.

    :param p: A type ``D`` scheme.
    :type p: ParamScheme
    :raises SchemeError: For a type ``A`` scheme.
    :rtype: int
    """
    _require_d(p)
    return sum(1 for root in reflection_word(p.n) if root_type(p, root) == IMAGINARY)


def reflection_sign(p: ParamScheme) -> int:
    """The sign ``(-1)^t`` by which ``s_alpha`` acts on the scheme, modulo more split terms."""
    return -1 if imaginary_count(p) % 2 else 1


def cayley(p: ParamScheme, index: int) -> ParamScheme:
    """
    The Cayley transform through the real base root number `index`; the new involution is
    ``s_beta o theta``.

    :param p: The scheme.
    :type p: ParamScheme
    :param index: Position of the root in the base set.
    :type index: int
    :raises SchemeError: If the root is already imaginary.
    :rtype: ParamScheme
    """
    if index in p.transformed:
        raise SchemeError(f"{p.base[index][0]} is not real for {p.label}")
    return ParamScheme(p.cartan, p.n, p.transformed | {index})


@dataclass
class SchemeTrace:
    """
    The outcome for one class of schemes.

    :param name: A short name for the class.
    :type name: str
    :param representative: The scheme the decision was made on.
    :type representative: ParamScheme
    :param members: Number of schemes of the base set in the class.
    :type members: int
    :param reason: ``"R"``, ``"C"`` or ``"survivor"``.
    :type reason: str
    :param imaginary_count: Imaginary roots in the reflection word (type ``D``).
    :type imaginary_count: Optional[int]
    """

    name: str
    representative: ParamScheme
    members: int
    reason: str
    imaginary_count: Optional[int] = None

    @property
    def sign(self) -> Optional[int]:
        if self.imaginary_count is None:
            return None
        return -1 if self.imaginary_count % 2 else 1

    def as_dict(self) -> Dict[str, object]:
        rep = self.representative
        return {
            "type": rep.cartan,
            "n": rep.n,
            "class": self.name,
            "transformed": rep.label,
            "real_base": list(rep.real_base),
            "real_rank": rep.real_rank,
            "members": self.members,
            "reason": self.reason,
            "imaginary_count": self.imaginary_count,
            "sign": self.sign,
        }


def _type_a(n: int) -> List[SchemeTrace]:
    # the chain c_(alpha_k) ... c_(alpha_1) of the principal series
    out = []
    for k in range(n // 2 + 1):
        p = ParamScheme("A", n, frozenset(range(k)))
        reason = ELIMINATED_REAL if has_real_integral_root(p) else SURVIVOR
        out.append(SchemeTrace(f"chain-{k}", p, 1, reason))
    return out


def _d_classes(n: int) -> List[List[ParamScheme]]:
    size = 2 * (n // 2)
    classes: Dict[Tuple, List[ParamScheme]] = {}
    for mask in product((False, True), repeat=size):
        chosen = frozenset(i for i, bit in enumerate(mask) if bit)
        p = ParamScheme("D", n, chosen)
        classes.setdefault(signed_class_key(p.reflection_part), []).append(p)
    ordered = [
        sorted(members, key=lambda s: tuple(sorted(s.transformed)))
        for members in classes.values()
    ]
    ordered.sort(
        key=lambda members: (len(members[0].transformed), tuple(sorted(members[0].transformed)))
    )
    return ordered


def _d_survivor_name(p: ParamScheme) -> str:
    blocks = p.n // 2
    full = [k for k in range(blocks) if {2 * k, 2 * k + 1} <= p.transformed]
    single = [k for k in range(blocks) if len({2 * k, 2 * k + 1} & p.transformed) == 1]
    if len(full) == blocks:
        return "compact"
    if len(single) == blocks:
        if p.n % 2:
            return "all-single"
        return "last-alpha" if 2 * (blocks - 1) + 1 in p.transformed else "all-beta"
    if len(full) == blocks - 1:
        return "rank-two"
    return p.label


def _type_d(n: int) -> List[SchemeTrace]:
    alpha = word_target(n)
    # designated quadruple e_(n-3) +- e_(n-2), e_(n-1) +- e_n
    first, second = (n - 3, n - 2), (n - 1, n)
    out = []
    for members in _d_classes(n):
        real = [p for p in members if has_real_integral_root(p)]
        if real:
            preferred = [p for p in real if root_type(p, alpha) == REAL]
            rep = (preferred or real)[0]
            reason = ELIMINATED_REAL
        else:
            quad = [p for p in members if has_mixed_quadruple(p)]
            if quad:
                preferred = [
                    p
                    for p in quad
                    if quadruple_at(p, first, second) or quadruple_at(p, second, first)
                ]
                rep = (preferred or quad)[0]
                reason = ELIMINATED_QUADRUPLE
            else:
                rep = members[0]
                reason = SURVIVOR
        name = _d_survivor_name(rep) if reason == SURVIVOR else rep.label
        out.append(SchemeTrace(name, rep, len(members), reason, imaginary_count(rep)))
    return out


def classify_schemes(cartan: str, n: int) -> List[SchemeTrace]:
    """
    Decide every class of schemes: eliminated by a real integral root (``R``), by a mixed
    quadruple (``C``, type ``D`` only), or surviving.

    Type ``A`` walks the chain of Cayley transforms through ``alpha_1, alpha_2, ...``; type ``D``
    enumerates all subsets of the base set and groups them by the conjugacy class of ``s_C`` in
    the Weyl group. Representatives follow the elimination: one where ``alpha`` is real for
    ``R``, one where ``e_(n-3) +- e_(n-2), e_(n-1) +- e_n`` is the quadruple for ``C``, otherwise
    the lexicographically first subset.

    :param cartan: ``"A"`` (``n >= 2``) or ``"D"`` (``n >= 4``).
    :type cartan: str
    :param n: The number of coordinates.
    :type n: int
    :raises SchemeError: For other types or ranks.
    :rtype: List[SchemeTrace]
    """
    cartan = cartan.upper()
    _root_system(cartan, n)
    traces = _type_a(n) if cartan == "A" else _type_d(n)
    for t in traces:
        logger.debug("%s%d %s: %s", cartan, n, t.name, t.reason)
    return traces


def count_survivors(cartan: str, n: int, trace: Optional[List[SchemeTrace]] = None) -> int:
    """
    The number of scheme classes that survive the eliminations, per central character.

    :param cartan: ``"A"`` (``n >= 3``) or ``"D"`` (``n >= 4``).
    :type cartan: str
    :param n: The number of coordinates.
    :type n: int
    :param trace: If given, receives the decision for every class.
    :type trace: Optional[List[SchemeTrace]]
    :raises SchemeError: If the type or rank is out of range.
    :rtype: int
    """
    cartan = cartan.upper()
    if cartan == "A" and n < 3:
        raise SchemeError(f"A{n - 1} is out of range, need n >= 3")
    traces = classify_schemes(cartan, n)
    if trace is not None:
        trace.extend(traces)
    return sum(1 for t in traces if t.reason == SURVIVOR)
