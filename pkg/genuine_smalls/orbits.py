"""
Nilpotent orbits of the classical Lie algebras as partitions, their dimensions, their
Springer representations, and their real forms as signed Young diagrams.

Exceptional orbits are carried by their Bala-Carter name; only the orbits that occur at the
canonical infinitesimal character have a known dimension here.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Tuple

from .exceptions import OrbitError, RealFormError
from .weylrep.labels import (
    BipartitionLabel,
    DBipartitionLabel,
    IrrepLabel,
    Partition,
    PartitionLabel,
    transpose,
)

__all__ = [
    "OrbitPartition",
    "RealForm",
    "SignedPartition",
    "EXCEPTIONAL_ORBIT_DIMENSIONS",
    "dim_complex_orbit",
    "springer_label",
    "listed_orbit",
    "real_forms",
    "real_form_count",
    "uniform_real_forms",
]

EXCEPTIONAL_ORBIT_DIMENSIONS: Dict[Tuple[str, int, str], int] = {
    ("E", 6, "3A1"): 40,
    ("E", 7, "4A1"): 70,
    ("E", 8, "4A1"): 128,
    ("F", 4, "A1"): 16,
    ("G", 2, "A1~"): 8,
}

_LISTED_EXCEPTIONAL = {
    ("E", 6): "3A1",
    ("E", 7): "4A1",
    ("E", 8): "4A1",
    ("F", 4): "A1",
    ("G", 2): "A1~",
}


def _total(cartan: str, rank: int) -> int:
    if cartan == "A":
        return rank + 1
    if cartan == "B":
        return 2 * rank + 1
    return 2 * rank


@dataclass(frozen=True)
class OrbitPartition:
    """
    A nilpotent orbit: a partition for the classical types, a Bala-Carter name otherwise.

    :param cartan: The Cartan letter.
    :type cartan: str
    :param rank: The rank of the Lie algebra.
    :type rank: int
    :param parts: The partition, in decreasing order.
    :type parts: Partition
    :param marker: ``"I"`` or ``"II"`` for very even orbits of type D.
    :type marker: Optional[str]
    :param name: The Bala-Carter name of an exceptional orbit.
    :type name: Optional[str]
    :raises OrbitError: If the partition is not valid for the type.
    """

    cartan: str
    rank: int
    parts: Partition = ()
    marker: Optional[str] = None
    name: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))
        if self.cartan in ("E", "F", "G"):
            if (self.cartan, self.rank, self.name) not in EXCEPTIONAL_ORBIT_DIMENSIONS:
                raise OrbitError(f"unknown orbit {self.name} in {self.cartan}{self.rank}")
            return
        if self.cartan not in ("A", "B", "C", "D"):
            raise OrbitError(f"unknown Cartan type {self.cartan!r}")
        if any(x <= 0 for x in self.parts) or sum(self.parts) != _total(self.cartan, self.rank):
            raise OrbitError(
                f"{list(self.parts)} is not a partition of {_total(self.cartan, self.rank)}"
            )
        mult = Counter(self.parts)
        if self.cartan in ("B", "D"):
            bad = [x for x, m in mult.items() if x % 2 == 0 and m % 2]
        elif self.cartan == "C":
            bad = [x for x, m in mult.items() if x % 2 == 1 and m % 2]
        else:
            bad = []
        if bad:
            raise OrbitError(f"{list(self.parts)} is not an orbit of type {self.cartan}")
        if self.very_even:
            if self.marker not in ("I", "II"):
                raise OrbitError("very even partitions need the marker I or II")
        elif self.marker is not None:
            raise OrbitError("only very even partitions carry a marker")

    @property
    def very_even(self) -> bool:
        return self.cartan == "D" and all(
            x % 2 == 0 and m % 2 == 0 for x, m in Counter(self.parts).items()
        )

    def __str__(self) -> str:
        if self.name:
            return self.name
        text = "[" + ",".join(str(x) for x in self.parts) + "]"
        return text + (self.marker or "")


def dim_complex_orbit(o: OrbitPartition) -> int:
    """
    The complex dimension of the orbit.

    With ``s`` the transposed partition and ``odd`` the number of odd parts:

    * ``A``: ``n^2 - sum s_i^2``;
    * ``B``: ``2n^2 + n - sum s_i^2 / 2 + odd / 2``;
    * ``C``: ``2n^2 + n - sum s_i^2 / 2 - odd / 2``;
    * ``D``: ``2n^2 - n - sum s_i^2 / 2 + odd / 2``.

    :param o: The orbit.
    :type o: OrbitPartition
    :rtype: int
    """
    if o.name:
        return EXCEPTIONAL_ORBIT_DIMENSIONS[(o.cartan, o.rank, o.name)]
    squares = sum(s * s for s in transpose(o.parts))
    odd = sum(1 for x in o.parts if x % 2)
    n = o.rank
    if o.cartan == "A":
        m = n + 1
        return m * m - squares
    if o.cartan == "B":
        return 2 * n * n + n - (squares - odd) // 2
    if o.cartan == "C":
        return 2 * n * n + n - (squares + odd) // 2
    return 2 * n * n - n - (squares - odd) // 2


def _shifted(parts: Partition, even_length: bool) -> List[int]:
    values = sorted(parts)
    if (len(values) % 2 == 0) != even_length:
        values.insert(0, 0)
    return [x + i for i, x in enumerate(values)]


def _unshift(values: List[int]) -> Partition:
    return tuple(sorted((x - i for i, x in enumerate(sorted(values)) if x - i > 0), reverse=True))


def springer_label(o: OrbitPartition) -> IrrepLabel:
    """
    The Springer representation of the orbit, read off the symbol of its partition: pad the
    increasing sequence of parts to the right length, add ``i - 1`` to the ``i``-th part and split
    the entries by parity.

    The zero orbit goes to the sign representation, the regular orbit to the trivial one.

    :param o: A classical orbit.
    :type o: OrbitPartition
    :raises OrbitError: For an exceptional orbit.
    :rtype: IrrepLabel
    """
    if o.cartan == "A":
        return PartitionLabel(o.parts)
    if o.cartan in ("B", "C"):
        values = _shifted(o.parts, even_length=o.cartan == "C")
        alpha = [(v - 1) // 2 for v in values if v % 2]
        beta = [v // 2 for v in values if v % 2 == 0]
        return BipartitionLabel(_unshift(alpha), _unshift(beta))
    if o.cartan == "D":
        values = _shifted(o.parts, even_length=True)
        alpha = _unshift([v // 2 for v in values if v % 2 == 0])
        beta = _unshift([(v - 1) // 2 for v in values if v % 2])
        return DBipartitionLabel.of(alpha, beta, o.marker if alpha == beta else None)
    raise OrbitError(f"no Springer symbol for type {o.cartan}")


def listed_orbit(cartan: str, n: int) -> OrbitPartition:
    """
    The orbit attached to the canonical infinitesimal character.

    For type A, `n` is the size of the matrices (the root system is ``A_(n-1)``); for the other
    classical types it is the rank. It is ignored for the exceptional types.

    * ``A``: ``[2^m]`` for ``n = 2m``, ``[2^m 1]`` for ``n = 2m + 1``;
    * ``B``: ``[2^n 1]`` for even ``n``, ``[2^(n-1) 1^3]`` for odd ``n``;
    * ``C``: ``[2 1^(2n-2)]``;
    * ``D``: ``[3 2^(n-2) 1]`` for even ``n``, ``[3 2^(n-3) 1^3]`` for odd ``n``;
    * ``E6``: ``3A1``; ``E7``, ``E8``: ``4A1``; ``F4``: ``A1``; ``G2``: ``A1~``.

    :raises OrbitError: For an unsupported type.
    :rtype: OrbitPartition
    """
    cartan = cartan.upper()
    if cartan == "A":
        m = n // 2
        return OrbitPartition("A", n - 1, (2,) * m + (1,) * (n % 2))
    if cartan == "B":
        parts = (2,) * n + (1,) if n % 2 == 0 else (2,) * (n - 1) + (1, 1, 1)
        return OrbitPartition("B", n, parts)
    if cartan == "C":
        return OrbitPartition("C", n, (2,) + (1,) * (2 * n - 2))
    if cartan == "D":
        if n % 2 == 0:
            parts = (3,) + (2,) * (n - 2) + (1,)
        else:
            parts = (3,) + (2,) * (n - 3) + (1, 1, 1)
        return OrbitPartition("D", n, parts)
    rank = {"E": n if n in (6, 7, 8) else 0, "F": 4, "G": 2}.get(cartan, 0)
    if (cartan, rank) not in _LISTED_EXCEPTIONAL:
        raise OrbitError(f"no listed orbit for {cartan}{n}")
    return OrbitPartition(cartan, rank, name=_LISTED_EXCEPTIONAL[(cartan, rank)])


_FORM_RE = re.compile(r"^\s*(sl|su|so|sp)\s*\(\s*(\d+)\s*,\s*(\d+|r)\s*\)\s*$", re.IGNORECASE)


@dataclass(frozen=True)
class RealForm:
    """
    A classical real form: ``sl(n,R)``, ``su(p,q)``, ``so(p,q)``, ``sp(2n,R)`` or ``sp(p,q)``.

    :param family: One of ``"sl"``, ``"su"``, ``"so"``, ``"sp_real"``, ``"sp_quaternionic"``.
    :type family: str
    :param p: First index (``n`` for ``sl(n,R)``, ``2n`` for ``sp(2n,R)``).
    :type p: int
    :param q: Second index, 0 for the split forms written with ``R``.
    :type q: int
    """

    family: str
    p: int
    q: int = 0

    @classmethod
    def parse(cls, text: str) -> "RealForm":
        """
        :raises RealFormError: If `text` is not one of the supported notations.
        """
        match = _FORM_RE.match(text)
        if not match:
            raise RealFormError(f"unknown real form {text!r}")
        kind, first, second = match.group(1).lower(), int(match.group(2)), match.group(3).lower()
        if kind == "sl":
            if second != "r":
                raise RealFormError(f"unknown real form {text!r}")
            return cls("sl", first)
        if kind == "sp" and second == "r":
            if first % 2:
                raise RealFormError(f"sp({first},R) needs an even index")
            return cls("sp_real", first)
        if second == "r":
            raise RealFormError(f"unknown real form {text!r}")
        if kind == "sp":
            return cls("sp_quaternionic", first, int(second))
        return cls(kind, first, int(second))

    def __str__(self) -> str:
        if self.family == "sl":
            return f"sl({self.p},R)"
        if self.family == "sp_real":
            return f"sp({self.p},R)"
        if self.family == "sp_quaternionic":
            return f"sp({self.p},{self.q})"
        return f"{self.family}({self.p},{self.q})"


@dataclass(frozen=True)
class SignedPartition:
    """
    A real nilpotent orbit: a signed Young diagram given by its rows ``(length, leading sign)``,
    plus a marker when one diagram stands for several orbits.

    :param realform: The real form.
    :type realform: RealForm
    :param rows: The rows, longest first; the sign is empty for ``sl(n,R)``.
    :type rows: Tuple[Tuple[int, str], ...]
    :param marker: Distinguishes orbits sharing a diagram.
    :type marker: Optional[str]
    :param dim: The real dimension, equal to the complex dimension of the complex orbit.
    :type dim: int
    """

    realform: RealForm
    rows: Tuple[Tuple[int, str], ...]
    marker: Optional[str] = None
    dim: int = field(default=0, compare=False)

    def row_text(self, length: int, sign: str) -> str:
        if not sign:
            return "." * length
        other = "-" if sign == "+" else "+"
        return "".join(sign if i % 2 == 0 else other for i in range(length))

    @property
    def signature(self) -> Tuple[int, int]:
        plus = sum(self.row_text(length, s).count("+") for length, s in self.rows)
        minus = sum(self.row_text(length, s).count("-") for length, s in self.rows)
        return plus, minus

    def __str__(self) -> str:
        body = " ".join(self.row_text(length, s) for length, s in self.rows)
        return body + (f" ({self.marker})" if self.marker else "")


_MARKERS = ("I", "II", "III", "IV")


def _plus(length: int, sign: str) -> int:
    return (length + 1) // 2 if sign == "+" else length // 2


def _diagrams(
    parts: Partition,
    plus: int,
    paired_parity: Optional[int] = None,
    plus_parity: Optional[int] = None,
) -> List[Tuple[Tuple[int, str], ...]]:
    """
    Signed diagrams of shape `parts` with `plus` boxes labelled ``+``. Rows whose length has
    parity `paired_parity` come in pairs with opposite leading signs; rows whose length has
    parity `plus_parity` begin with ``+``.
    """
    mult = Counter(parts)
    lengths = sorted(mult, reverse=True)
    options = []
    for length in lengths:
        k = mult[length]
        if paired_parity is not None and length % 2 == paired_parity:
            choices = [k // 2] if k % 2 == 0 else []
        elif plus_parity is not None and length % 2 == plus_parity:
            choices = [k]
        else:
            choices = list(range(k, -1, -1))
        options.append(choices)
    out = []
    for choice in product(*options):
        total = sum(
            a * _plus(length, "+") + (mult[length] - a) * _plus(length, "-")
            for length, a in zip(lengths, choice)
        )
        if total != plus:
            continue
        rows = []
        for length, a in zip(lengths, choice):
            rows += [(length, "+")] * a + [(length, "-")] * (mult[length] - a)
        out.append(tuple(rows))
    return out


def _so_multiplicity(rows: Tuple[Tuple[int, str], ...]) -> int:
    odd = [(length, s) for length, s in rows if length % 2]
    if not odd:
        return 4
    even_plus = all(_plus(length, s) % 2 == 0 for length, s in odd)
    even_minus = all((length - _plus(length, s)) % 2 == 0 for length, s in odd)
    if even_plus or even_minus:
        return 2
    return 1


def _check_form(o: OrbitPartition, rf: RealForm) -> None:
    size = sum(o.parts)
    expected = {
        "sl": ("A", rf.p),
        "su": ("A", rf.p + rf.q),
        "so": ("B" if (rf.p + rf.q) % 2 else "D", rf.p + rf.q),
        "sp_real": ("C", rf.p),
        "sp_quaternionic": ("C", 2 * (rf.p + rf.q)),
    }.get(rf.family)
    if expected is None or expected != (o.cartan, size):
        raise RealFormError(f"{rf} is not a real form of the algebra of {o.cartan}{o.rank}")


def real_forms(o: OrbitPartition, realform: RealForm) -> List[SignedPartition]:
    """
    The real nilpotent orbits of `realform` whose complexification is `o`.

    * ``sl(n,R)``: one orbit, two when every part is even;
    * ``su(p,q)``: every signed diagram of signature ``(p,q)``;
    * ``so(p,q)``: signed diagrams where even rows pair up with opposite leading signs; a
      diagram gives four orbits when all rows are even, two when every odd row has an even
      number of ``+`` (or every odd row an even number of ``-``), one otherwise;
    * ``sp(2n,R)``: signed diagrams of signature ``(n,n)`` where odd rows pair up;
    * ``sp(p,q)``: the parts must come in equal pairs; the halved diagram has signature
      ``(p,q)`` and its even rows begin with ``+``.

    :param o: A classical orbit.
    :type o: OrbitPartition
    :param realform: The real form, or its text.
    :type realform: RealForm
    :raises RealFormError: If the real form does not belong to the type of `o`.
    :rtype: List[SignedPartition]
    """
    if isinstance(realform, str):
        realform = RealForm.parse(realform)
    if o.name:
        raise RealFormError("exceptional real forms are not supported")
    _check_form(o, realform)
    dim = dim_complex_orbit(o)
    family = realform.family
    out: List[SignedPartition] = []
    if family == "sl":
        rows = tuple((length, "") for length in o.parts)
        if all(length % 2 == 0 for length in o.parts):
            out = [SignedPartition(realform, rows, m, dim) for m in _MARKERS[:2]]
        else:
            out = [SignedPartition(realform, rows, None, dim)]
    elif family == "su":
        out = [
            SignedPartition(realform, rows, None, dim) for rows in _diagrams(o.parts, realform.p)
        ]
    elif family == "so":
        for rows in _diagrams(o.parts, realform.p, paired_parity=0):
            count = _so_multiplicity(rows)
            if o.very_even and count == 4:
                count = 2
            if count == 1:
                out.append(SignedPartition(realform, rows, None, dim))
            else:
                out += [SignedPartition(realform, rows, m, dim) for m in _MARKERS[:count]]
    elif family == "sp_real":
        half = realform.p // 2
        out = [
            SignedPartition(realform, rows, None, dim)
            for rows in _diagrams(o.parts, half, paired_parity=1)
        ]
    else:
        mult = Counter(o.parts)
        if any(m % 2 for m in mult.values()):
            return []
        halved = tuple(
            sorted((length for length, m in mult.items() for _ in range(m // 2)), reverse=True)
        )
        out = [
            SignedPartition(realform, rows, None, dim)
            for rows in _diagrams(halved, realform.p, plus_parity=0)
        ]
    return out


def real_form_count(o: OrbitPartition, realform: RealForm) -> int:
    return len(real_forms(o, realform))


def _flipped(rows: Tuple[Tuple[int, str], ...]) -> Tuple[Tuple[int, str], ...]:
    flipped = ((length, "-" if s == "+" else "+") for length, s in rows)
    return tuple(sorted(flipped, key=lambda row: (-row[0], row[1])))


def uniform_real_forms(o: OrbitPartition, realform: RealForm) -> List[SignedPartition]:
    """
    The real orbits of ``su(p,q)`` in `o` whose rows of equal length all begin with the same
    sign, with a diagram and its sign flip counted once when ``p == q``.

    This is the coarser count the printed real orbit table uses for the unitary groups; the
    full count is `real_forms`.

    :param o: An orbit of type ``A``.
    :type o: OrbitPartition
    :param realform: A real form ``su(p,q)``, or its text.
    :type realform: RealForm
    :raises RealFormError: If `realform` is not unitary or not a form of the type of `o`.
    :rtype: List[SignedPartition]
    """
    if isinstance(realform, str):
        realform = RealForm.parse(realform)
    if realform.family != "su":
        raise RealFormError(f"{realform} is not a unitary real form")
    out: List[SignedPartition] = []
    seen = set()
    for orbit in real_forms(o, realform):
        signs: Dict[int, set] = {}
        for length, s in orbit.rows:
            signs.setdefault(length, set()).add(s)
        if any(len(s) > 1 for s in signs.values()):
            continue
        if realform.p == realform.q and _flipped(orbit.rows) in seen:
            continue
        seen.add(orbit.rows)
        out.append(orbit)
    return out
