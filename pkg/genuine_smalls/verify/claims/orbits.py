"""
Claims about the orbit attached to the canonical infinitesimal character: its integral data,
dimension and Springer representation, and its real forms.
"""

from typing import Callable, Iterable

from ...diagram_sets import diagram_of, enumerate_sets
from ...fixtures import (
    EXCEPTIONAL_REAL_FORM_COUNTS,
    EXCEPTIONAL_ROWS,
    EXCEPTIONAL_SPLIT_FORMS,
    REAL_FORM_ROWS,
    RealFormRow,
    central_character_count,
    listed_row,
)
from ...orbits import (
    EXCEPTIONAL_ORBIT_DIMENSIONS,
    RealForm,
    dim_complex_orbit,
    listed_orbit,
    real_form_count,
    springer_label,
    uniform_real_forms,
)
from ...rootsys import (
    build,
    canonical_infinitesimal_character,
    gk_dimension,
    integral_subsystem,
    normalize_type,
)
from ...weylrep.induction import SubgroupSpec, j_induce_sign
from ..checks import Mismatches, expect_equal
from ..suite import ClaimSuite

suite = ClaimSuite("orbits")

# n as in listed_row: matrix size for A, rank otherwise
INTEGRAL_DATA_RANGES = {
    "A": range(2, 14),
    "B": range(2, 13),
    "C": range(2, 13),
    "D": range(4, 13),
}

_DUAL = {"B": "C", "C": "B"}

REAL_FORM_RANGES = {
    "A": range(2, 10),
    "B": range(2, 9),
    "C": range(2, 9),
    "D": range(4, 10),
}


def _integral_data(cartan: str, ns: Iterable[int]) -> str:
    mismatches = Mismatches()
    names = []
    for n in ns:
        row = listed_row(cartan, n)
        where = f"{cartan} n={n}"
        rs = build(cartan, row.rank)
        lam = canonical_infinitesimal_character(rs)
        sub = integral_subsystem(rs, lam)
        expect_equal(
            f"{where}: integral type",
            normalize_type(f"{c}{r}" for c, r in row.subgroup),
            sub.components,
        )
        printed = normalize_type(row.printed_integral)
        if printed != sub.components:
            key = "A-odd-integral" if cartan == "A" and n % 2 else None
            mismatches.add(where, "x".join(printed) or "0", sub.label, key=key)

        orbit = listed_orbit(cartan, n)
        expect_equal(f"{where}: orbit", row.parts, orbit.parts)
        expect_equal(f"{where}: orbit dimension", row.dim, dim_complex_orbit(orbit))
        expect_equal(f"{where}: Gelfand-Kirillov dimension", row.dim, gk_dimension(rs, lam))
        expect_equal(
            f"{where}: truncated induction",
            row.j,
            j_induce_sign(SubgroupSpec(row.ambient, row.subgroup)),
        )
        expect_equal(f"{where}: Springer representation", row.j, springer_label(orbit))
        names.append(rs.label)
    return mismatches.settle(names)


def _integral_data_check(cartan: str) -> Callable[[], str]:
    def check() -> str:
        return _integral_data(cartan, INTEGRAL_DATA_RANGES[cartan])

    check.__name__ = f"integral_data_{cartan.lower()}"
    return check


for _cartan in INTEGRAL_DATA_RANGES:
    suite.claim(
        f"integral-data.{_cartan}",
        topic=f"integral type, orbit, dimension and truncated induction in type {_cartan}",
    )(_integral_data_check(_cartan))


@suite.claim(
    "integral-data.exceptional",
    topic="integral type, orbit dimension and b-invariant for the exceptional types",
)
def integral_data_exceptional():
    mismatches = Mismatches()
    names = []
    for row in EXCEPTIONAL_ROWS:
        rs = build(row.cartan, row.rank)
        expect_equal(
            f"{rs.label}: orbit dimension",
            EXCEPTIONAL_ORBIT_DIMENSIONS[(row.cartan, row.rank, row.orbit)],
            row.dim,
        )
        expect_equal(f"{rs.label}: orbit", row.orbit, str(listed_orbit(row.cartan, row.rank)))

        lam = canonical_infinitesimal_character(rs)
        sub = integral_subsystem(rs, lam)
        printed = (normalize_type(row.printed_integral), row.dim, row.j.b)
        computed = (sub.components, gk_dimension(rs, lam), sub.positive_count)
        if printed != computed:
            key = "F4-coroot-character" if row.coroot_character else None
            mismatches.add(rs.label, printed, computed, key=key)

        if row.coroot_character:
            lam = row.character()
            sub = integral_subsystem(rs, lam)
            dual = tuple(_DUAL.get(c[0], c[0]) + c[1:] for c in sub.components)
            expect_equal(
                f"{rs.label}: dual integral type", normalize_type(row.printed_integral), dual
            )
            expect_equal(
                f"{rs.label}: Gelfand-Kirillov dimension", row.dim, gk_dimension(rs, lam)
            )
            expect_equal(f"{rs.label}: b-invariant", row.j.b, sub.positive_count)
        names.append(rs.label)
    return mismatches.settle(names)


def _real_form_check(row: RealFormRow) -> Callable[[], str]:
    def check() -> str:
        mismatches = Mismatches()
        names = []
        full = []
        for n in REAL_FORM_RANGES[row.cartan]:
            if not row.applies(n):
                continue
            form = row.form(n)
            orbit = listed_orbit(row.cartan, n)
            if row.same_sign:
                count = len(uniform_real_forms(orbit, form))
                full.append(f"{form}: {real_form_count(orbit, form)}")
            else:
                count = real_form_count(orbit, form)
            if count != row.printed:
                mismatches.add(str(form), row.printed, count, key=row.key)
            names.append(str(form))
        detail = mismatches.settle(names)
        if full:
            detail += f"; counting same-sign diagrams (all diagrams: {', '.join(full)})"
        return detail

    check.__name__ = f"real_forms_{row.key.replace('-', '_')}"
    return check


for _row in REAL_FORM_ROWS:
    suite.claim(
        f"real-forms.{_row.key}",
        topic=f"real orbits of the listed orbit in {_row.group}",
    )(_real_form_check(_row))


@suite.claim("real-forms.split-d", topic="real orbits in Spin(n,n) against central characters")
def split_d():
    for n in REAL_FORM_RANGES["D"]:
        expect_equal(
            f"real orbits in so({n},{n})",
            len(enumerate_sets(diagram_of("D", n))),
            real_form_count(listed_orbit("D", n), RealForm("so", n, n)),
        )
        expect_equal(
            f"central characters of D{n}",
            central_character_count("D", n),
            len(enumerate_sets(diagram_of("D", n))),
        )
    return "D4 to D9"


@suite.claim(
    "real-forms.exceptional-split",
    topic="real orbits in the split exceptional groups against central characters",
)
def exceptional_split():
    for (cartan, rank), compact in EXCEPTIONAL_SPLIT_FORMS.items():
        expect_equal(
            f"real orbits in split {cartan}{rank}",
            central_character_count(cartan, rank),
            EXCEPTIONAL_REAL_FORM_COUNTS[(cartan, rank, compact)],
        )
    return "E6, E7, E8"
