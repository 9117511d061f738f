"""
This module turns the library's objects into plain JSON data and renders documents.

Rationals become ``["num", "den"]`` string pairs so that no precision is lost and output is
byte-reproducible; labels, orbits and real forms become their printed names. Documents are
rendered with sorted keys, so identical invocations give identical bytes.
"""

import json
from dataclasses import fields, is_dataclass
from fractions import Fraction
from typing import Any, Iterable, List, Sequence

from .ktypes import GridEntry, KType, PairCounts
from .orbits import OrbitPartition, RealForm, SignedPartition
from .params import ParamScheme, SchemeTrace
from .weylrep.labels import (
    BipartitionLabel,
    DBipartitionLabel,
    ExceptionalLabel,
    PartitionLabel,
)

__all__ = ["to_data", "dumps", "dumps_lines", "render_table"]

_LABELS = (PartitionLabel, BipartitionLabel, DBipartitionLabel, ExceptionalLabel)
_BY_NAME = (OrbitPartition, RealForm, ParamScheme)


def to_data(obj: Any) -> Any:
    """
    Convert `obj` to JSON-compatible data.

    :param obj: A number, container or library object.
    :type obj: Any
    :raises TypeError: If `obj` has no JSON form.
    :return: Plain data.
    :rtype: Any
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return [str(obj.numerator), str(obj.denominator)]
    if isinstance(obj, _LABELS + _BY_NAME):
        return str(obj)
    if isinstance(obj, KType):
        return [[to_data(x) for x in f] for f in obj.factors]
    if isinstance(obj, SignedPartition):
        return {"diagram": str(obj), "dim": obj.dim, "signature": list(obj.signature)}
    if isinstance(obj, SchemeTrace):
        return to_data(obj.as_dict())
    if isinstance(obj, GridEntry):
        return {
            "label": obj.label,
            "character": obj.character,
            "real_form": obj.real_form,
            "lowest": to_data(obj.lowest),
        }
    if isinstance(obj, PairCounts):
        return dict(obj._asdict())
    if hasattr(obj, "as_dict"):
        return to_data(obj.as_dict())
    if isinstance(obj, dict):
        return {_key(k): to_data(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [to_data(x) for x in obj]
        if isinstance(obj, (set, frozenset)):
            items.sort(key=lambda x: json.dumps(x, sort_keys=True))
        return items
    if is_dataclass(obj):
        return {f.name: to_data(getattr(obj, f.name)) for f in fields(obj) if f.init}
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def _key(k: Any) -> str:
    if isinstance(k, str):
        return k
    if isinstance(k, Fraction):
        return str(k)
    if isinstance(k, tuple):
        return ",".join(_key(x) for x in k)
    return str(k)


def dumps(obj: Any) -> str:
    """Render `obj` as a stable JSON document."""
    return json.dumps(to_data(obj), sort_keys=True, ensure_ascii=False, indent=2)


def dumps_lines(items: Iterable[Any]) -> str:
    """Render each item as one compact JSON object per line."""
    return "\n".join(
        json.dumps(to_data(item), sort_keys=True, ensure_ascii=False, separators=(",", ":"))
        for item in items
    )


def render_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """
    Render rows as aligned text columns.

    :param headers: Column titles.
    :type headers: Sequence[str]
    :param rows: Cells, converted with `str`.
    :type rows: Sequence[Sequence[Any]]
    :rtype: str
    """
    cells: List[List[str]] = [list(headers)] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = []
    for k, row in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)
