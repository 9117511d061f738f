import pytest

from genuine_smalls.exceptions import InductionError, UnsupportedShape
from genuine_smalls.rootsys import (
    build,
    canonical_infinitesimal_character,
    integral_subsystem,
    weight,
)
from genuine_smalls.weylrep import induction
from genuine_smalls.weylrep.characters import hyperoctahedral_character, symmetric_character
from genuine_smalls.weylrep.induction import (
    SubgroupSpec,
    column_product,
    induce_sign_decompose,
    induce_sign_oracle,
    j_induce_sign,
    vertical_strips,
)
from genuine_smalls.weylrep.labels import (
    BipartitionLabel,
    DBipartitionLabel,
    ExceptionalLabel,
    PartitionLabel,
    b_invariant,
    partitions,
    transpose,
)
from genuine_smalls.weylrep.oracle import oracle_group, weyl_order


@pytest.mark.parametrize(
    "label, b",
    [
        (PartitionLabel((3,)), 0),
        (PartitionLabel((1, 1, 1)), 3),
        (PartitionLabel((2, 2)), 2),
        (BipartitionLabel((2,), ()), 0),
        (BipartitionLabel((), (1, 1)), 4),
        (BipartitionLabel((), (2, 1)), 5),
        (DBipartitionLabel.of((), (1, 1, 1, 1)), 12),
        (DBipartitionLabel.of((2, 2), ()), 4),
        (ExceptionalLabel(15, 16), 16),
    ],
)
def test_b_invariant(label, b):
    assert b_invariant(label) == b


def test_b_invariant_rejects_other_objects():
    with pytest.raises(TypeError):
        b_invariant((2, 1))


def test_d_labels_are_unordered():
    assert DBipartitionLabel.of((1,), (2, 1)) == DBipartitionLabel.of((2, 1), (1,))
    assert str(DBipartitionLabel.of((1, 1), (1, 1), "I")) == "{[1,1];[1,1]}I"


def test_partitions_and_transpose():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    for p in partitions(7):
        assert transpose(transpose(p)) == p


@pytest.mark.parametrize(
    "lam, cycle_type, value",
    [
        ((2, 1), (1, 1, 1), 2),
        ((2, 1), (3,), -1),
        ((1, 1, 1), (2, 1), -1),
        ((3,), (2, 1), 1),
        ((2, 2), (2, 2), 2),
    ],
)
def test_symmetric_character(lam, cycle_type, value):
    assert symmetric_character(lam, cycle_type) == value


def test_symmetric_degrees_square_to_group_order():
    assert sum(symmetric_character(p, (1,) * 6) ** 2 for p in partitions(6)) == 720


def test_hyperoctahedral_character_signs():
    assert hyperoctahedral_character((2,), (), (), (1, 1)) == 1
    assert hyperoctahedral_character((), (1,), (1,), ()) == 1
    assert hyperoctahedral_character((), (1,), (), (1,)) == -1


def test_vertical_strips():
    assert sorted(vertical_strips((1, 1), 2)) == [(1, 1, 1, 1), (2, 1, 1), (2, 2)]
    assert vertical_strips((), 0) == [()]


def test_column_product_degree():
    # Ind from S2 x S2 of the sign has degree 6
    product = column_product([2, 2])
    assert sum(m * symmetric_character(p, (1, 1, 1, 1)) for p, m in product.items()) == 6


@pytest.mark.parametrize(
    "spec, expected",
    [
        (SubgroupSpec(("A", 3), (("A", 1), ("A", 1))), PartitionLabel((2, 2))),
        (SubgroupSpec(("B", 3), (("B", 1), ("B", 2))), BipartitionLabel((), (2, 1))),
        (SubgroupSpec(("C", 3), (("D", 3),)), BipartitionLabel((1, 1, 1), ())),
        (SubgroupSpec(("D", 4), (("D", 2), ("D", 2))), DBipartitionLabel.of((), (2, 2))),
    ],
)
def test_truncated_induction_closed_forms(spec, expected):
    assert j_induce_sign(spec) == expected


def test_truncated_induction_of_the_trivial_subgroup_is_trivial():
    assert j_induce_sign(SubgroupSpec(("A", 3), ())) == PartitionLabel((4,))


def test_d_induction_splits_degenerate_symbols():
    decomposition = induce_sign_decompose(SubgroupSpec(("D", 4), (("D", 2), ("D", 2))))
    assert decomposition[DBipartitionLabel.of((1, 1), (1, 1), "I")] == 1
    assert decomposition[DBipartitionLabel.of((1, 1), (1, 1), "II")] == 1


def test_oracle_requires_an_embedding():
    with pytest.raises(UnsupportedShape):
        induce_sign_decompose(SubgroupSpec(("E", 6), (("A", 1),)))


def test_truncated_induction_needs_a_unique_constituent(monkeypatch):
    monkeypatch.setattr(
        induction, "induce_sign_decompose", lambda spec: {PartitionLabel((2, 2)): 2}
    )
    with pytest.raises(InductionError):
        j_induce_sign(SubgroupSpec(("A", 3), (("A", 1), ("A", 1))))


@pytest.mark.parametrize(
    "cartan, rank, order",
    [("A", 3, 24), ("B", 3, 48), ("D", 4, 192), ("G", 2, 12), ("F", 4, 1152), ("E", 6, 51840)],
)
def test_weyl_order(cartan, rank, order):
    assert weyl_order(cartan, rank) == order


def test_g2_character_table(settings):
    group = oracle_group("G", 2)
    assert group.order == 12
    assert len(group.characters) == 6
    assert sum(ch.degree ** 2 for ch in group.characters) == 12
    assert sorted((ch.degree, ch.b) for ch in group.characters)[0] == (1, 0)


def test_oracle_agrees_with_closed_form_in_a3(settings):
    rs = build("A", 3)
    spec = SubgroupSpec(("A", 3), (("A", 1), ("A", 1)), (rs.simple_roots[0], rs.simple_roots[2]))
    assert induce_sign_oracle(spec) == induce_sign_decompose(spec)


def test_oracle_agrees_with_closed_form_in_b3(settings):
    roots = (weight(1, 0, 0), weight(0, 1, -1), weight(0, 0, 1))
    spec = SubgroupSpec(("B", 3), (("B", 1), ("B", 2)), roots)
    assert induce_sign_oracle(spec) == {
        BipartitionLabel((), (2, 1)): 1,
        BipartitionLabel((), (1, 1, 1)): 1,
    }


def test_g2_truncated_induction(settings):
    rs = build("G", 2)
    sub = integral_subsystem(rs, canonical_infinitesimal_character(rs))
    label = j_induce_sign(SubgroupSpec.from_integral(rs, sub))
    assert (label.degree, label.b) == (2, 2)


@pytest.mark.slow
def test_e6_truncated_induction(settings):
    rs = build("E", 6)
    sub = integral_subsystem(rs, canonical_infinitesimal_character(rs))
    label = j_induce_sign(SubgroupSpec.from_integral(rs, sub))
    assert (label.degree, label.b) == (15, 16)
