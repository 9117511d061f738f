"""
The ``genuine-smalls`` command line.

Every command prints aligned text by default and a JSON document with ``--format json``;
``dump`` always prints JSON. Exit codes: 0 on success, 1 when a verification run has failing
claims, 2 for usage errors and inputs the library rejects.
"""

import argparse
import logging
import re
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .config import Settings
from .ctx import use_settings
from .diagram_sets import diagram_of, enumerate_sets, render_diagram, set_class
from .exceptions import GenuineSmallsException
from .fixtures import (
    EXCEPTIONAL_REAL_FORM_COUNTS,
    EXCEPTIONAL_ROWS,
    REAL_FORM_ROWS,
    ExceptionalRow,
    listed_row,
)
from .ktypes import (
    family_ktypes,
    pair_counts,
    pair_grid,
    spin_families,
    type_a_families,
    type_a_family,
)
from .orbits import (
    dim_complex_orbit,
    listed_orbit,
    real_forms,
    springer_label,
    uniform_real_forms,
)
from .params import count_survivors
from .rootsys import (
    build,
    canonical_infinitesimal_character,
    gk_dimension,
    integral_subsystem,
    quotient,
)
from .serialize import dumps, dumps_lines, render_table
from .verify import default_verifier
from .weylrep.induction import SubgroupSpec, j_induce_sign
from .weylrep.oracle import oracle_group

__all__ = ["main", "build_parser"]

logger = logging.getLogger(__name__)

EXIT_USAGE = 2

CLASSICAL_START = {"A": 2, "B": 2, "C": 2, "D": 4}
SIMPLY_LACED_RANGE = {"A": range(2, 9), "D": range(4, 9), "E": range(6, 9)}
DUMP_ENTITIES = ("rootsys", "orbits", "rd", "diagram-sets", "chartable", "ktypes", "pairs")
ALIASES = {
    "table1": "integral-data",
    "table2": "real-orbits",
    "table3": "diagram-sets",
    "count-star": "survivors",
}

_TYPE_RE = re.compile(r"^([A-Ga-g])(\d*)$")
_GROUP_RE = re.compile(r"^(spin|sl)\(?(\d+)(?:,(\d+))?\)?$", re.IGNORECASE)


# ─────────────────────────────────────────────────────────────
#  argument helpers
# ─────────────────────────────────────────────────────────────

def _type_and_rank(text: str, rank: Optional[int]) -> Tuple[str, int]:
    """Accept ``D --rank 4`` as well as ``D4``."""
    match = _TYPE_RE.match(text or "")
    if not match:
        raise GenuineSmallsException(f"not a Cartan type: {text!r}")
    cartan, digits = match.group(1).upper(), match.group(2)
    if digits:
        return cartan, int(digits)
    if rank is None:
        raise GenuineSmallsException(f"type {cartan} needs a rank")
    return cartan, rank


def _parse_group(text: str) -> Tuple[str, int]:
    """``spin44``, ``spin(4,4)``, ``sl4`` or ``sl(4)`` to ``(type, n)``."""
    match = _GROUP_RE.match(text.replace(" ", ""))
    if not match:
        raise GenuineSmallsException(f"unknown group {text!r}")
    kind, first, second = match.group(1).lower(), match.group(2), match.group(3)
    if kind == "sl":
        if second is not None:
            raise GenuineSmallsException(f"unknown group {text!r}")
        return "A", int(first)
    if second is None:
        half = len(first) // 2
        if len(first) % 2 or first[:half] != first[half:]:
            raise GenuineSmallsException(f"only split groups Spin(n,n) are supported: {text!r}")
        return "D", int(first[:half])
    if first != second:
        raise GenuineSmallsException(f"only split groups Spin(n,n) are supported: {text!r}")
    return "D", int(first)


def _group_of(args: argparse.Namespace) -> Tuple[str, int]:
    if getattr(args, "group", None):
        return _parse_group(args.group)
    if args.type is None or args.n is None:
        raise GenuineSmallsException("give --group, or --type and --n")
    return args.type.upper(), args.n


def _emit(args: argparse.Namespace, data: Any, text: str) -> None:
    print(dumps(data) if args.format == "json" else text)


# ─────────────────────────────────────────────────────────────
#  document builders, shared by the commands and dump
# ─────────────────────────────────────────────────────────────

def _exceptional_j(row: ExceptionalRow, deep: bool) -> Tuple[Any, str]:
    if row.oracle and (deep or row.cartan != "E"):
        rs = build(row.cartan, row.rank)
        sub = integral_subsystem(rs, row.character())
        return j_induce_sign(SubgroupSpec.from_integral(rs, sub)), "computed"
    return row.j, "listed"


def integral_rows(types: Sequence[str], max_n: int, deep: bool = False) -> List[Dict[str, Any]]:
    """The integral data at the canonical infinitesimal character, one entry per row."""
    rows = []
    for cartan in types:
        if cartan in CLASSICAL_START:
            for n in range(CLASSICAL_START[cartan], max_n + 1):
                row = listed_row(cartan, n)
                rs = build(cartan, row.rank)
                lam = canonical_infinitesimal_character(rs)
                orbit = listed_orbit(cartan, n)
                rows.append({
                    "type": rs.label,
                    "n": n,
                    "integral": integral_subsystem(rs, lam).label,
                    "dim": gk_dimension(rs, lam),
                    "orbit": orbit,
                    "orbit_dim": dim_complex_orbit(orbit),
                    "j": j_induce_sign(SubgroupSpec(row.ambient, row.subgroup)),
                    "springer": springer_label(orbit),
                    "j_source": "computed",
                })
            continue
        for row in EXCEPTIONAL_ROWS:
            if row.cartan != cartan:
                continue
            rs = build(row.cartan, row.rank)
            lam = canonical_infinitesimal_character(rs)
            j, source = _exceptional_j(row, deep)
            rows.append({
                "type": rs.label,
                "n": row.rank,
                "integral": integral_subsystem(rs, lam).label,
                "dim": gk_dimension(rs, lam),
                "orbit": row.orbit,
                "orbit_dim": row.dim,
                "j": j,
                "springer": None,
                "j_source": source,
            })
    return rows


def real_orbit_rows(types: Sequence[str], max_n: int) -> List[Dict[str, Any]]:
    rows = []
    for form_row in REAL_FORM_ROWS:
        if form_row.cartan not in types:
            continue
        for n in range(CLASSICAL_START[form_row.cartan], max_n + 1):
            if not form_row.applies(n):
                continue
            orbit = listed_orbit(form_row.cartan, n)
            found = real_forms(orbit, form_row.form(n))
            same_sign = (
                len(uniform_real_forms(orbit, form_row.form(n))) if form_row.same_sign else None
            )
            rows.append({
                "row": form_row.key,
                "n": n,
                "real_form": form_row.form(n),
                "orbit": orbit,
                "count": len(found),
                "same_sign": same_sign,
                "printed": form_row.printed,
                "orbits": found,
            })
    for (cartan, rank, compact), count in sorted(EXCEPTIONAL_REAL_FORM_COUNTS.items()):
        if cartan in types:
            rows.append({
                "row": f"{cartan}{rank}-{compact}",
                "n": rank,
                "real_form": f"{cartan}{rank} with K of type {compact}",
                "orbit": str(listed_orbit(cartan, rank)),
                "count": None,
                "same_sign": None,
                "printed": count,
                "orbits": [],
            })
    return rows


def diagram_set_rows(cartan: str, rank: int) -> List[Dict[str, Any]]:
    rs = build(cartan, rank)
    diagram = diagram_of(cartan, rank)
    lattice = quotient(rs, "P", "2P+R")
    return [
        {
            "nodes": [i + 1 for i in subset],
            "class": list(set_class(rs, subset, lattice)),
            "picture": render_diagram(diagram, subset),
        }
        for subset in enumerate_sets(diagram)
    ]


def ktype_families(cartan: str, n: int, bound: Optional[int]) -> Dict[str, Any]:
    if cartan == "A":
        return {rep: type_a_family(rep, n, bound) for rep in type_a_families(n)}
    return {f.label: family_ktypes(f, bound) for f in spin_families(n)}


def pairs_document(cartan: str, n: int, bound: Optional[int]) -> Dict[str, Any]:
    grid = pair_grid(cartan, n, bound)
    cells: Dict[Tuple[int, int], List[Any]] = {}
    for entry in grid:
        cells.setdefault(entry.cell, []).append(entry)
    return {"type": cartan, "n": n, "cells": cells, "counts": pair_counts(cartan, n, bound)}


def chartable_document(cartan: str, rank: int) -> Dict[str, Any]:
    group = oracle_group(cartan, rank)
    return {
        "type": f"{cartan}{rank}",
        "order": group.order,
        "class_sizes": [c.size for c in group.classes],
        "characters": [
            {
                "label": ch.label,
                "degree": ch.degree,
                "b": ch.b,
                "values": list(ch.values),
                "fake_degree": list(ch.fake_degree),
            }
            for ch in group.characters
        ],
    }


def rootsys_document(cartan: str, rank: int) -> Dict[str, Any]:
    rs = build(cartan, rank)
    lam = canonical_infinitesimal_character(rs)
    sub = integral_subsystem(rs, lam)
    return {
        "type": cartan,
        "rank": rank,
        "ambient_dim": rs.dim,
        "simple_roots": rs.simple_roots,
        "positive_roots": rs.positive_roots,
        "fundamental_weights": rs.fundamental_weights,
        "rho": rs.rho,
        "canonical": lam,
        "integral": {"type": sub.label, "simple_roots": sub.simple_roots},
        "P/R": list(quotient(rs, "P", "R").invariant_factors),
        "P/(2P+R)": list(quotient(rs, "P", "2P+R").invariant_factors),
    }


def orbits_document(cartan: str, n: int) -> Dict[str, Any]:
    orbit = listed_orbit(cartan, n)
    if cartan not in CLASSICAL_START:
        return {"orbit": orbit, "real_forms": {}}
    forms = {
        str(r.form(n)): real_forms(orbit, r.form(n))
        for r in REAL_FORM_ROWS
        if r.cartan == cartan and r.applies(n)
    }
    return {
        "orbit": orbit,
        "dim": dim_complex_orbit(orbit),
        "springer": springer_label(orbit),
        "real_forms": forms,
    }


# ─────────────────────────────────────────────────────────────
#  commands
# ─────────────────────────────────────────────────────────────

def cmd_integral_data(args: argparse.Namespace) -> int:
    types = [args.type.upper()] if args.type else list("ABCDEFG")
    rows = integral_rows(types, args.max_n, args.deep)
    table = render_table(
        ["type", "n", "integral", "dim", "orbit", "j(sgn)", ""],
        [
            [r["type"], r["n"], r["integral"], r["dim"], r["orbit"], r["j"], r["j_source"]]
            for r in rows
        ],
    )
    _emit(args, rows, table)
    return 0


def cmd_real_orbits(args: argparse.Namespace) -> int:
    types = [args.type.upper()] if args.type else list("ABCDEFG")
    rows = real_orbit_rows(types, args.max_n)
    table = render_table(
        ["row", "n", "real form", "orbit", "count", "same sign", "printed"],
        [
            [
                r["row"], r["n"], r["real_form"], r["orbit"],
                "-" if r["count"] is None else r["count"],
                "-" if r["same_sign"] is None else r["same_sign"], r["printed"],
            ]
            for r in rows
        ],
    )
    _emit(args, rows, table)
    return 0


def cmd_diagram_sets(args: argparse.Namespace) -> int:
    if args.type:
        shapes = [_type_and_rank(args.type, args.rank)]
    else:
        shapes = [(c, r) for c, ranks in SIMPLY_LACED_RANGE.items() for r in ranks]
    data = {f"{c}{r}": diagram_set_rows(c, r) for c, r in shapes}
    blocks = []
    for name, entries in data.items():
        lines = [f"{name}: {len(entries)} sets"]
        for e in entries:
            lines.append(f"  {e['nodes']} -> {tuple(e['class'])}")
            lines.extend("    " + line for line in e["picture"].splitlines())
        blocks.append("\n".join(lines))
    _emit(args, data, "\n\n".join(blocks))
    return 0


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    verifier = default_verifier()
    try:
        report = verifier.run(args.scope, deep=args.deep, settings=settings)
    except ValueError as exc:
        print(f"error: {exc}; known scopes: {', '.join(verifier.registry.scopes)}",
              file=sys.stderr)
        return EXIT_USAGE
    table = render_table(
        ["claim", "status", "detail"],
        [[r.claim_id, r.status, r.detail] for r in report.results],
    )
    summary = ", ".join(f"{k} {v}" for k, v in report.as_dict()["summary"].items())
    _emit(args, report, f"{table}\n\n{summary}")
    return report.exit_code


def cmd_survivors(args: argparse.Namespace) -> int:
    trace: list = []
    count = count_survivors(args.type, args.n, trace=trace)
    data: Dict[str, Any] = {"type": args.type.upper(), "n": args.n, "survivors": count}
    if args.trace:
        # one line per class, the count last
        print(dumps_lines([*trace, data]))
        return 0
    _emit(args, data, f"{args.type.upper()} n={args.n}: {count} surviving schemes")
    return 0


def cmd_ktypes(args: argparse.Namespace) -> int:
    cartan, n = _group_of(args)
    families = ktype_families(cartan, n, args.bound)
    lines = [
        f"{label}: " + ", ".join(str(k) for k in ktypes)
        for label, ktypes in families.items()
    ]
    _emit(args, families, "\n".join(lines))
    return 0


def cmd_pairs(args: argparse.Namespace) -> int:
    cartan, n = _group_of(args)
    doc = pairs_document(cartan, n, args.bound)
    rows = [
        [e.label, e.character, e.real_form, e.lowest]
        for entries in doc["cells"].values()
        for e in entries
    ]
    counts = doc["counts"]
    text = render_table(["representation", "character", "real form", "lowest K-type"], rows)
    text += (
        f"\n\n{counts.representations} representations, {counts.pairs} pairs, "
        f"{'bijective' if counts.bijective else 'not bijective'}"
    )
    _emit(args, doc, text)
    return 0


def cmd_dump(args: argparse.Namespace) -> int:
    entity = args.entity
    if entity == "rootsys":
        doc = rootsys_document(*_type_and_rank(args.type, args.rank))
    elif entity == "orbits":
        cartan, n = _type_and_rank(args.type, args.n)
        doc = orbits_document(cartan, n)
    elif entity in ("rd", "diagram-sets"):
        doc = diagram_set_rows(*_type_and_rank(args.type, args.rank))
    elif entity == "chartable":
        doc = chartable_document(*_type_and_rank(args.type, args.rank))
    elif entity == "ktypes":
        cartan, n = _group_of(args)
        doc = ktype_families(cartan, n, args.bound)
    else:
        cartan, n = _group_of(args)
        doc = pairs_document(cartan, n, args.bound)
    print(dumps(doc))
    return 0


# ─────────────────────────────────────────────────────────────
#  CLI
# ─────────────────────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="log to stderr (-vv for debug)"
    )
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=("text", "json"), default="text")

    group = argparse.ArgumentParser(add_help=False)
    group.add_argument("--group", help="e.g. spin44, spin(5,5) or sl6")
    group.add_argument("--type", choices=("A", "D", "a", "d"))
    group.add_argument("--n", type=int, help="matrix size for A, rank for D")
    group.add_argument("--bound", type=int, help="bound on the K-type parameter")

    parser = argparse.ArgumentParser(
        prog="genuine-smalls",
        description="Combinatorics of small genuine representations of split covering groups",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser(
        "integral-data", aliases=["table1"], parents=[common, output],
        help="integral system, orbit and truncated induction at the canonical character",
    )
    p.add_argument("--type", help="one Cartan letter, all types by default")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--deep", action="store_true", help="run the E6 character table too")

    p = subparsers.add_parser(
        "real-orbits", aliases=["table2"], parents=[common, output],
        help="real forms of the listed orbits",
    )
    p.add_argument("--type", help="one Cartan letter, all types by default")
    p.add_argument("--max-n", type=int, default=8)

    p = subparsers.add_parser(
        "diagram-sets", aliases=["table3"], parents=[common, output],
        help="node sets of the Dynkin diagram indexing central characters",
    )
    p.add_argument("--type", help="e.g. D or D6, all simply laced types by default")
    p.add_argument("--rank", type=int)

    p = subparsers.add_parser(
        "verify", parents=[common, output], help="check the claims and report"
    )
    p.add_argument("--scope", default="all", help="all, a suite name or a claim id")
    p.add_argument("--deep", action="store_true", help="include long-running checks")

    p = subparsers.add_parser(
        "survivors", aliases=["count-star"], parents=[common, output],
        help="count surviving parameter schemes",
    )
    p.add_argument("--type", required=True, choices=("A", "D", "a", "d"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--trace", action="store_true", help="print the decision for every class as JSON lines"
    )

    subparsers.add_parser(
        "ktypes", parents=[common, output, group], help="K-types of the small representations"
    )
    subparsers.add_parser(
        "pairs", parents=[common, output, group],
        help="small representations against (central character, real form)",
    )

    p = subparsers.add_parser("dump", parents=[common], help="write one entity as JSON")
    p.add_argument("entity", choices=DUMP_ENTITIES)
    p.add_argument("--type", help="Cartan type, e.g. D or G2")
    p.add_argument("--rank", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--group")
    p.add_argument("--bound", type=int)
    return parser


def _configure_logging(verbosity: int) -> None:
    if verbosity:
        level = logging.DEBUG if verbosity > 1 else logging.INFO
        logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    try:
        settings = Settings.from_env()
    except ValueError as exc:
        print(f"error: bad environment setting: {exc}", file=sys.stderr)
        return EXIT_USAGE

    commands = {
        "integral-data": cmd_integral_data,
        "real-orbits": cmd_real_orbits,
        "diagram-sets": cmd_diagram_sets,
        "survivors": cmd_survivors,
        "ktypes": cmd_ktypes,
        "pairs": cmd_pairs,
        "dump": cmd_dump,
    }
    command = ALIASES.get(args.command, args.command)
    try:
        with use_settings(settings):
            if command == "verify":
                return cmd_verify(args, settings)
            return commands[command](args)
    except GenuineSmallsException as exc:
        logger.debug("command failed", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

