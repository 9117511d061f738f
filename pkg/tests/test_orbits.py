from collections import Counter

import pytest

from genuine_smalls.exceptions import OrbitError, RealFormError
from genuine_smalls.fixtures import DISCREPANCIES, REAL_FORM_ROWS, listed_row
from genuine_smalls.orbits import (
    OrbitPartition,
    RealForm,
    dim_complex_orbit,
    listed_orbit,
    real_form_count,
    real_forms,
    springer_label,
    uniform_real_forms,
)
from genuine_smalls.weylrep.labels import (
    BipartitionLabel,
    DBipartitionLabel,
    PartitionLabel,
    b_invariant,
)

LISTED = (
    [("A", n) for n in range(2, 11)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(2, 9)]
    + [("D", n) for n in range(4, 10)]
)

PRINTED_RANGES = {"A": range(2, 8), "B": range(2, 7), "C": range(2, 7), "D": range(4, 8)}

TOTALS = {"B": lambda r: 2 * r + 1, "C": lambda r: 2 * r, "D": lambda r: 2 * r}


def random_partition(rng, total):
    parts = []
    left = total
    while left:
        part = rng.randint(1, left)
        parts.append(part)
        left -= part
    return tuple(sorted(parts, reverse=True))


def is_orbit(cartan, parts):
    mult = Counter(parts)
    if cartan in ("B", "D"):
        return all(m % 2 == 0 for x, m in mult.items() if x % 2 == 0)
    return all(m % 2 == 0 for x, m in mult.items() if x % 2 == 1)


@pytest.mark.parametrize("cartan, n", LISTED)
def test_listed_orbit_dimension(cartan, n):
    assert dim_complex_orbit(listed_orbit(cartan, n)) == listed_row(cartan, n).dim


@pytest.mark.parametrize("cartan, n", LISTED)
def test_listed_orbit_springer_representation(cartan, n):
    assert springer_label(listed_orbit(cartan, n)) == listed_row(cartan, n).j


def test_listed_orbits_by_hand():
    assert str(listed_orbit("A", 4)) == "[2,2]"
    assert str(listed_orbit("C", 2)) == "[2,1,1]"
    assert str(listed_orbit("D", 4)) == "[3,2,2,1]"
    assert str(listed_orbit("E", 6)) == "3A1"
    assert dim_complex_orbit(listed_orbit("D", 4)) == 16


def test_listed_orbit_rejects_unknown_types():
    with pytest.raises(OrbitError):
        listed_orbit("E", 5)


@pytest.mark.parametrize("cartan, rank", [("B", 3), ("C", 3), ("D", 4)])
def test_zero_orbit_is_the_sign(cartan, rank):
    zero = OrbitPartition(cartan, rank, (1,) * TOTALS[cartan](rank))
    assert dim_complex_orbit(zero) == 0
    label = springer_label(zero)
    assert b_invariant(label) == {"B": 9, "C": 9, "D": 12}[cartan]
    if cartan == "D":
        assert label == DBipartitionLabel.of((), (1, 1, 1, 1))
    else:
        assert label == BipartitionLabel((), (1, 1, 1))


def test_regular_orbits():
    assert springer_label(OrbitPartition("B", 3, (7,))) == BipartitionLabel((3,), ())
    assert springer_label(OrbitPartition("A", 3, (4,))) == PartitionLabel((4,))
    assert dim_complex_orbit(OrbitPartition("A", 3, (4,))) == 12


@pytest.mark.parametrize(
    "cartan, rank, parts, marker",
    [
        ("B", 2, (2, 1, 1, 1), None),
        ("C", 2, (3, 1), None),
        ("D", 4, (4, 4), None),
        ("D", 4, (3, 3, 1, 1), "I"),
        ("A", 3, (2, 1), None),
        ("A", 3, (3, 0, 1), None),
        ("H", 3, (1, 1, 1), None),
    ],
)
def test_invalid_orbits(cartan, rank, parts, marker):
    with pytest.raises(OrbitError):
        OrbitPartition(cartan, rank, parts, marker)


def test_unknown_exceptional_orbit():
    with pytest.raises(OrbitError):
        OrbitPartition("E", 6, name="2A2")


def test_very_even_orbits_carry_a_marker():
    orbit = OrbitPartition("D", 4, (4, 4), "II")
    assert orbit.very_even
    assert str(orbit) == "[4,4]II"


def test_partition_validity_matches_the_parity_rule(rng):
    checked = 0
    while checked < 1200:
        cartan = rng.choice("BCD")
        rank = rng.randint(2, 7)
        parts = random_partition(rng, TOTALS[cartan](rank))
        valid = is_orbit(cartan, parts)
        very_even = cartan == "D" and all(x % 2 == 0 for x in parts) and valid
        marker = "I" if very_even else None
        if valid:
            orbit = OrbitPartition(cartan, rank, parts, marker)
            dim = dim_complex_orbit(orbit)
            assert dim >= 0 and dim % 2 == 0
        else:
            with pytest.raises(OrbitError):
                OrbitPartition(cartan, rank, parts, marker)
        checked += 1


@pytest.mark.parametrize(
    "text, expected",
    [
        ("sl(4,R)", RealForm("sl", 4)),
        ("sp(6,R)", RealForm("sp_real", 6)),
        ("sp(2,1)", RealForm("sp_quaternionic", 2, 1)),
        ("so(5, 4)", RealForm("so", 5, 4)),
        ("SU(2,2)", RealForm("su", 2, 2)),
    ],
)
def test_parse_real_form(text, expected):
    assert RealForm.parse(text) == expected


@pytest.mark.parametrize("text", ["sl(4,3)", "sp(5,R)", "so(4,R)", "gl(3,R)", "sl4"])
def test_parse_rejects_unknown_real_forms(text):
    with pytest.raises(RealFormError):
        RealForm.parse(text)


def test_real_form_must_match_the_orbit():
    with pytest.raises(RealFormError):
        real_forms(listed_orbit("A", 4), RealForm("so", 2, 2))


def test_exceptional_real_forms_are_not_supported():
    with pytest.raises(RealFormError):
        real_forms(listed_orbit("G", 2), "so(4,3)")


def test_su_orbits_of_two_by_two():
    found = real_forms(listed_orbit("A", 4), "su(2,2)")
    assert len(found) == 3
    assert all(orbit.signature == (2, 2) for orbit in found)


def test_same_sign_su_orbits():
    found = uniform_real_forms(listed_orbit("A", 4), "su(2,2)")
    assert [str(orbit) for orbit in found] == ["+- +-"]
    assert len(uniform_real_forms(listed_orbit("A", 5), "su(3,2)")) == 2
    assert len(real_forms(listed_orbit("A", 5), "su(3,2)")) == 3


def test_same_sign_needs_a_unitary_form():
    with pytest.raises(RealFormError):
        uniform_real_forms(listed_orbit("A", 4), "sl(4,R)")


def test_sl_orbits_of_even_partitions_split():
    found = real_forms(listed_orbit("A", 4), "sl(4,R)")
    assert [orbit.marker for orbit in found] == ["I", "II"]


@pytest.mark.parametrize(
    "row, n",
    [
        (row, n)
        for row in REAL_FORM_ROWS
        if row.key not in DISCREPANCIES
        for n in PRINTED_RANGES[row.cartan]
        if row.applies(n)
    ],
    ids=lambda value: getattr(value, "key", str(value)),
)
def test_printed_real_orbit_counts(row, n):
    orbit = listed_orbit(row.cartan, n)
    if row.same_sign:
        assert len(uniform_real_forms(orbit, row.form(n))) == row.printed
    else:
        assert real_form_count(orbit, row.form(n)) == row.printed


def test_split_spin_group_of_even_rank():
    assert real_form_count(listed_orbit("D", 4), RealForm("so", 4, 4)) == 4
    assert real_form_count(listed_orbit("D", 5), RealForm("so", 5, 5)) == 2


def test_spin_of_corank_two_for_odd_rank():
    found = real_forms(listed_orbit("D", 5), RealForm("so", 6, 4))
    assert len(found) == 3
    assert sorted(orbit.marker or "" for orbit in found) == ["", "I", "II"]
