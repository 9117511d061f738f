import pytest

from genuine_smalls.exceptions import LatticeError, RootSystemError
from genuine_smalls.rootsys import (
    build,
    canonical_infinitesimal_character,
    gk_dimension,
    half_coroot_rho,
    identify_type,
    integral_subsystem,
    normalize_type,
    pairing,
    quotient,
    scale,
    weight,
)


@pytest.mark.parametrize(
    "cartan, rank, positive",
    [
        ("A", 3, 6),
        ("B", 3, 9),
        ("C", 4, 16),
        ("D", 4, 12),
        ("E", 6, 36),
        ("E", 7, 63),
        ("E", 8, 120),
        ("F", 4, 24),
        ("G", 2, 6),
    ],
)
def test_positive_roots(cartan, rank, positive):
    rs = build(cartan, rank)
    assert rs.positive_count == positive
    assert len(rs.roots) == 2 * positive


@pytest.mark.parametrize(
    "cartan, rank", [("D", 2), ("E", 5), ("F", 3), ("G", 3), ("A", 0), ("H", 3)]
)
def test_build_rejects_invalid_types(cartan, rank):
    with pytest.raises(RootSystemError):
        build(cartan, rank)


@pytest.mark.parametrize("cartan, rank", [("A", 4), ("B", 3), ("D", 5), ("E", 6), ("G", 2)])
def test_roots_closed_under_negation(cartan, rank):
    rs = build(cartan, rank)
    for r in rs.roots:
        assert rs.is_root(scale(-1, r))


@pytest.mark.parametrize("cartan, rank", [("B", 3), ("D", 4), ("G", 2)])
def test_is_positive_splits_roots(cartan, rank):
    rs = build(cartan, rank)
    for r in rs.positive_roots:
        assert rs.is_positive(r)
        assert not rs.is_positive(scale(-1, r))
    for a in rs.simple_roots:
        assert rs.is_positive(a)


def test_is_positive_rejects_non_roots():
    rs = build("A", 2)
    with pytest.raises(RootSystemError):
        rs.is_positive(weight(1, 1, 1))


@pytest.mark.parametrize("cartan, rank", [("A", 3), ("C", 3), ("D", 4), ("E", 7), ("F", 4)])
def test_fundamental_weights_are_dual_to_simple_coroots(cartan, rank):
    rs = build(cartan, rank)
    for i, w in enumerate(rs.fundamental_weights):
        assert [pairing(w, a) for a in rs.simple_roots] == [int(i == j) for j in range(rank)]


@pytest.mark.parametrize(
    "cartan, rank, expected",
    [
        ("D", 4, weight("3/2", 1, "1/2", 0)),
        ("A", 1, weight("1/4", "-1/4")),
        ("B", 2, weight(1, "1/2")),
        ("C", 2, weight("3/2", "1/2")),
    ],
)
def test_canonical_infinitesimal_character(cartan, rank, expected):
    assert canonical_infinitesimal_character(build(cartan, rank)) == expected


def test_integral_subsystem_of_d4():
    rs = build("D", 4)
    sub = integral_subsystem(rs, canonical_infinitesimal_character(rs))
    assert sub.components == ("A1", "A1", "A1", "A1")
    assert set(sub.simple_roots) == {
        weight(1, 0, 1, 0),
        weight(1, 0, -1, 0),
        weight(0, 1, 0, 1),
        weight(0, 1, 0, -1),
    }


@pytest.mark.parametrize(
    "cartan, rank, components",
    [
        ("E", 8, ("D8",)),
        ("A", 3, ("A1", "A1")),
        ("G", 2, ("A1", "A1")),
    ],
)
def test_integral_type(cartan, rank, components):
    rs = build(cartan, rank)
    assert integral_subsystem(rs, canonical_infinitesimal_character(rs)).components == components


@pytest.mark.parametrize("cartan, rank", [("A", 4), ("B", 3), ("C", 3), ("D", 5), ("G", 2)])
def test_everything_is_integral_at_rho(cartan, rank):
    rs = build(cartan, rank)
    assert set(integral_subsystem(rs, rs.rho).roots) == set(rs.roots)


def test_integral_roots_closed_under_their_reflections():
    rs = build("D", 6)
    sub = integral_subsystem(rs, canonical_infinitesimal_character(rs))
    roots = set(sub.roots)
    for a in sub.roots:
        assert scale(-1, a) in roots
        for b in sub.roots:
            reflected = tuple(x - pairing(b, a) * y for x, y in zip(b, a))
            assert reflected in roots


def test_type_identification_ignores_order(rng):
    for cartan, rank in (("E", 8), ("D", 4), ("B", 5)):
        rs = build(cartan, rank)
        sub = integral_subsystem(rs, canonical_infinitesimal_character(rs))
        for _ in range(20):
            shuffled = list(sub.simple_roots)
            rng.shuffle(shuffled)
            assert identify_type(shuffled) == sub.components


def test_integral_subsystem_rejects_wrong_length():
    with pytest.raises(RootSystemError):
        integral_subsystem(build("D", 4), weight(1, 2, 3))


def test_integral_subsystem_rejects_singular_weight():
    with pytest.raises(RootSystemError):
        integral_subsystem(build("A", 2), weight(1, 1, -2))


@pytest.mark.parametrize(
    "factors, expected",
    [
        (["B1", "B2"], ("B2", "A1")),
        (["C2"], ("B2",)),
        (["D2"], ("A1", "A1")),
        (["D3", "A0"], ("A3",)),
        (["D1", "D4"], ("D4",)),
    ],
)
def test_normalize_type(factors, expected):
    assert normalize_type(factors) == expected


@pytest.mark.parametrize(
    "cartan, rank, factors",
    [
        ("A", 3, (4,)),
        ("A", 4, (5,)),
        ("D", 4, (2, 2)),
        ("D", 5, (4,)),
        ("E", 6, (3,)),
        ("E", 7, (2,)),
        ("E", 8, ()),
    ],
)
def test_fundamental_group(cartan, rank, factors):
    assert quotient(build(cartan, rank), "P", "R").invariant_factors == factors


@pytest.mark.parametrize(
    "cartan, rank, order",
    [("A", 2, 1), ("A", 3, 2), ("D", 4, 4), ("D", 5, 2), ("E", 6, 1), ("E", 7, 2), ("E", 8, 1)],
)
def test_weights_modulo_twice_weights_and_roots(cartan, rank, order):
    rs = build(cartan, rank)
    lattice = quotient(rs, "P", "2P+R")
    assert lattice.order == order
    assert lattice.label(tuple(0 for _ in range(rs.dim))) == (0,) * rank


def test_root_lattice_labels_are_trivial_modulo_roots():
    rs = build("D", 5)
    lattice = quotient(rs, "P", "R")
    for r in rs.roots:
        assert lattice.label(r) == (0,) * 5


def test_quotient_requires_containment():
    with pytest.raises(LatticeError):
        quotient(build("A", 2), "R", "P")


def test_quotient_rejects_unknown_lattice():
    with pytest.raises(LatticeError):
        quotient(build("A", 2), "P", "Q")


@pytest.mark.parametrize("cartan, rank, dim", [("E", 8, 128), ("G", 2, 8), ("E", 6, 40)])
def test_gk_dimension(cartan, rank, dim):
    rs = build(cartan, rank)
    assert gk_dimension(rs, canonical_infinitesimal_character(rs)) == dim


def test_half_coroot_rho_is_canonical_when_simply_laced():
    for cartan, rank in (("A", 4), ("D", 5), ("E", 6)):
        rs = build(cartan, rank)
        assert half_coroot_rho(rs) == canonical_infinitesimal_character(rs)


def test_f4_at_both_characters():
    rs = build("F", 4)
    lam = canonical_infinitesimal_character(rs)
    assert integral_subsystem(rs, lam).positive_count == 10
    assert gk_dimension(rs, lam) == 28

    dual = half_coroot_rho(rs)
    assert dual == weight(4, "3/2", 1, "1/2")
    assert integral_subsystem(rs, dual).components == ("C4",)
    assert gk_dimension(rs, dual) == 16
