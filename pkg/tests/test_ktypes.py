from fractions import Fraction

import pytest

from genuine_smalls.exceptions import KTypeError
from genuine_smalls.ktypes import (
    GAMMA,
    SIGMA,
    KType,
    PairCounts,
    character_index,
    family_ktypes,
    interlace,
    interlacing,
    lowest_ktype,
    outer_act,
    pair_counts,
    pair_grid,
    restrict_split,
    spin_families,
    spin_rows,
    stable_lowest,
    type_a_families,
    type_a_family,
)

H = Fraction(1, 2)


def random_dominant(rng, length, top):
    v = sorted((rng.randint(0, top) for _ in range(length)), reverse=True)
    if rng.random() < 0.3:
        v[-1] = -v[-1]
    return tuple(v)


@pytest.mark.parametrize(
    "gamma, lam, odd, expected",
    [
        ((1, 0), (2, 1), False, True),
        ((3, 0), (2, 1), False, False),
        ((1, -1), (1, 1), False, True),
        ((1, -1), (1, 1), True, False),
        ((), (), False, True),
    ],
)
def test_interlace(gamma, lam, odd, expected):
    assert interlace(gamma, lam, odd) is expected


def test_interlace_rejects_length_mismatch():
    with pytest.raises(KTypeError):
        interlace((1,), (1, 0))


def test_interlacing_matches_interlace(rng):
    for _ in range(1500):
        length = rng.randint(1, 4)
        lam = random_dominant(rng, length, 4)
        lam = lam[:-1] + (abs(lam[-1]),)
        odd = rng.random() < 0.5
        allowed = set(interlacing(lam, odd))
        gamma = tuple(rng.randint(-5, 5) for _ in range(length))
        assert (gamma in allowed) == interlace(gamma, lam, odd)
        for g in allowed:
            assert interlace(g, lam, odd)


def test_interlacing_is_antisymmetric(rng):
    for _ in range(1000):
        length = rng.randint(1, 4)
        a = random_dominant(rng, length, 3)
        b = random_dominant(rng, length, 3)
        if interlace(a, b) and interlace(b, a):
            assert a == b


def test_ktype_validation():
    with pytest.raises(KTypeError):
        KType.of((1, 2))
    with pytest.raises(KTypeError):
        KType.of((1, H))
    with pytest.raises(KTypeError):
        KType.of((1, 0, -1))
    assert KType.of((H, -H)).factors == ((H, -H),)


def test_ktype_text_and_norm():
    k = KType.of((1, 0), (0, 0))
    assert str(k) == "(1,0;0,0)"
    assert KType.of((H, H), (0, 0)).norm2 == H


def test_outer_automorphisms():
    k = KType.of((H, H), (1, 0))
    assert outer_act(SIGMA, k) == KType.of((H, -H), (1, 0))
    assert outer_act(GAMMA, k) == KType.of((1, 0), (H, H))
    with pytest.raises(KTypeError):
        outer_act(GAMMA, KType.of((H, H)))
    with pytest.raises(KTypeError):
        outer_act("delta", k)


def test_character_index():
    assert character_index("delta3") == 3
    assert character_index("Sh1") == 1
    with pytest.raises(KTypeError):
        character_index("Gamma1")


def test_type_a_families():
    assert type_a_families(5) == ["Sh1"]
    assert type_a_families(4) == ["Sh1", "Sh2", "pi1", "pi2"]


def test_type_a_lowest_ktypes():
    assert lowest_ktype(type_a_family("Sh1", 4, 4)) == KType.of((H, H))
    assert lowest_ktype(type_a_family("pi2", 4, 4)) == KType.of((Fraction(3, 2), Fraction(-3, 2)))
    assert lowest_ktype(type_a_family("Sh1", 7, 4)) == KType.of((H, H, H))


def test_type_a_family_rejects_unknown_shapes():
    with pytest.raises(KTypeError):
        type_a_family("pi1", 5, 2)
    with pytest.raises(KTypeError):
        type_a_family("delta1", 4, 2)
    with pytest.raises(KTypeError):
        type_a_family("Sh1", 1, 2)


def test_spin_rows_and_families():
    assert len(spin_rows(4)) == 8
    assert len(spin_rows(5)) == 2
    assert len(spin_families(4)) == 16
    assert len(spin_families(5)) == 4
    assert len({f.label for f in spin_families(4)}) == 16
    with pytest.raises(KTypeError):
        spin_rows(3)


def test_shimura_lowest_ktype_of_spin44():
    (sh1,) = [f for f in spin_families(4) if f.label == "Sh1"]
    assert lowest_ktype(family_ktypes(sh1, 4)) == KType.of((H, H), (0, 0))


def test_restriction_splits_by_parity():
    for row in spin_rows(4):
        even, odd = restrict_split(row, 4)
        assert not set(even) & set(odd)
        assert len(even) + len(odd) == sum(1 for _ in row.terms(4))


def test_lowest_ktype_needs_ktypes():
    with pytest.raises(KTypeError):
        lowest_ktype([])


def test_stable_lowest_detects_movement():
    moving = {4: [KType.of((1,))], 6: [KType.of((0,))]}
    with pytest.raises(KTypeError):
        stable_lowest(moving.__getitem__, 4)


def test_pair_grid_of_spin44(settings):
    grid = pair_grid("D", 4)
    assert len(grid) == 16
    assert len({e.cell for e in grid}) == 16
    (sh1,) = [e for e in grid if e.label == "Sh1"]
    assert sh1.cell == (1, 1)


def test_pair_grid_rejects_other_types():
    with pytest.raises(KTypeError):
        pair_grid("B", 3)
    with pytest.raises(KTypeError):
        pair_counts("E", 6)


@pytest.mark.parametrize(
    "cartan, n, expected",
    [
        ("D", 4, PairCounts(16, 16, True)),
        ("D", 5, PairCounts(4, 4, True)),
        ("A", 4, PairCounts(4, 4, False)),
        ("A", 6, PairCounts(4, 4, True)),
    ],
)
def test_pair_counts(cartan, n, expected, settings):
    assert pair_counts(cartan, n) == expected
