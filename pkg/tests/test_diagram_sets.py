import pytest

from genuine_smalls.diagram_sets import (
    DynkinDiagram,
    diagram_of,
    enumerate_sets,
    render_diagram,
    set_class,
    strongly_orthogonal,
)
from genuine_smalls.exceptions import DiagramError, RootSystemError
from genuine_smalls.rootsys import build, quotient, weight


@pytest.mark.parametrize(
    "cartan, rank, count",
    [
        ("A", 2, 1),
        ("A", 3, 2),
        ("A", 5, 2),
        ("D", 4, 4),
        ("D", 5, 2),
        ("E", 6, 1),
        ("E", 7, 2),
        ("E", 8, 1),
    ],
)
def test_set_counts_match_the_lattice_quotient(cartan, rank, count):
    sets = enumerate_sets(diagram_of(cartan, rank))
    assert len(sets) == count == quotient(build(cartan, rank), "P", "2P+R").order
    assert sets[0] == ()


def test_sets_of_a3_and_d4():
    assert enumerate_sets(diagram_of("A", 3)) == [(), (0, 2)]
    assert enumerate_sets(diagram_of("D", 4)) == [(), (0, 2), (0, 3), (2, 3)]


@pytest.mark.parametrize("cartan, rank", [("A", 5), ("D", 4), ("D", 6), ("E", 7)])
def test_classes_are_distinct(cartan, rank):
    rs = build(cartan, rank)
    lattice = quotient(rs, "P", "2P+R")
    labels = [set_class(rs, s, lattice) for s in enumerate_sets(diagram_of(cartan, rank))]
    assert len(set(labels)) == len(labels)
    assert labels[0] == (0,) * rank


def test_set_class_rejects_invalid_subsets():
    rs = build("A", 3)
    with pytest.raises(DiagramError):
        set_class(rs, (0,))
    with pytest.raises(DiagramError):
        set_class(rs, (0, 1))


def test_non_simply_laced_diagrams_are_rejected():
    with pytest.raises(DiagramError):
        diagram_of("B", 3)


def test_adjacency_must_be_symmetric():
    with pytest.raises(DiagramError):
        DynkinDiagram("X2", {0: frozenset({1}), 1: frozenset()})


def test_strong_orthogonality():
    d4 = build("D", 4)
    assert strongly_orthogonal(d4, weight(1, -1, 0, 0), weight(1, 1, 0, 0))
    assert not strongly_orthogonal(d4, weight(1, -1, 0, 0), weight(0, 1, -1, 0))
    assert not strongly_orthogonal(d4, weight(1, -1, 0, 0), weight(1, -1, 0, 0))
    b2 = build("B", 2)
    assert not strongly_orthogonal(b2, weight(1, 0), weight(0, 1))
    with pytest.raises(RootSystemError):
        strongly_orthogonal(b2, weight(2, 0), weight(0, 1))


def test_render_chain():
    assert render_diagram(diagram_of("A", 3), (0, 2)) == "●─○─●"
    assert render_diagram(diagram_of("A", 2)) == "○─○"


def test_render_branch():
    assert render_diagram(diagram_of("D", 4)) == "○─○─○\n  │\n  ○"
    assert render_diagram(diagram_of("D", 4), (0, 3)) == "●─○─○\n  │\n  ●"
