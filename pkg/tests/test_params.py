import pytest

from genuine_smalls.exceptions import SchemeError
from genuine_smalls.params import (
    COMPLEX,
    IMAGINARY,
    REAL,
    SURVIVOR,
    ParamScheme,
    base_set,
    cayley,
    classify_schemes,
    count_survivors,
    has_mixed_quadruple,
    has_real_integral_root,
    imaginary_count,
    reflection_sign,
    reflection_word,
    root_type,
    scheme,
    word_target,
)
from genuine_smalls.rootsys import weight


def test_base_set_names():
    assert [name for name, _ in base_set("A", 5)] == ["a1", "a2"]
    assert [name for name, _ in base_set("D", 4)] == ["a1", "b1", "a2", "b2"]
    assert dict(base_set("D", 4))["b2"] == weight(0, 0, 1, 1)


def test_root_types_of_a_single_transform():
    p = scheme("D", 4, ["a1"])
    assert root_type(p, weight(1, -1, 0, 0)) == IMAGINARY
    assert root_type(p, weight(1, 1, 0, 0)) == REAL
    assert root_type(p, weight(0, 0, 1, -1)) == REAL
    assert root_type(p, weight(1, 0, -1, 0)) == COMPLEX


def test_scheme_labels():
    p = scheme("D", 4, ["a1"])
    assert p.label == "{a1}"
    assert str(p) == "D:4:{a1}"
    assert p.real_base == ("b1", "a2", "b2")
    assert p.real_rank == 3
    assert scheme("A", 4).real_rank == 3


def test_unknown_names_and_indices():
    with pytest.raises(SchemeError):
        scheme("D", 4, ["c1"])
    with pytest.raises(SchemeError):
        ParamScheme("D", 4, frozenset({4}))
    with pytest.raises(SchemeError):
        scheme("B", 4)
    with pytest.raises(SchemeError):
        scheme("D", 3)


def test_principal_series_has_a_real_integral_root():
    assert has_real_integral_root(scheme("A", 4))


def test_complex_integral_roots_do_not_eliminate():
    assert not has_real_integral_root(scheme("A", 4, ["a1", "a2"]))


def test_reflection_word_imaginary_count():
    p = scheme("D", 4, ["a1"])
    assert imaginary_count(p) == 1
    assert reflection_sign(p) == -1


@pytest.mark.parametrize("n, length", [(4, 9), (5, 11), (6, 9), (7, 11)])
def test_reflection_word_length(n, length):
    assert len(reflection_word(n)) == length


def test_word_target():
    assert word_target(4) == weight(1, 0, 1, 0)
    assert word_target(5) == weight(0, 0, 1, 0, 1)
    with pytest.raises(SchemeError):
        word_target(3)


def test_type_a_has_no_quadruples():
    with pytest.raises(SchemeError):
        has_mixed_quadruple(scheme("A", 4))
    with pytest.raises(SchemeError):
        imaginary_count(scheme("A", 4))


def test_cayley_rejects_imaginary_roots():
    p = scheme("D", 4, ["a1"])
    with pytest.raises(SchemeError):
        cayley(p, 0)
    assert cayley(p, 1) == scheme("D", 4, ["a1", "b1"])


@pytest.mark.parametrize("cartan", ["A", "D"])
def test_theta_types_and_cayley(cartan, rng):
    for _ in range(1000):
        n = rng.randint(4, 7)
        base = base_set(cartan, n)
        chosen = frozenset(i for i in range(len(base)) if rng.random() < 0.5)
        p = ParamScheme(cartan, n, chosen)
        assert (p.theta * p.theta).is_identity()
        for i, (_, root) in enumerate(base):
            assert root_type(p, root) == (IMAGINARY if i in chosen else REAL)
        real = [i for i in range(len(base)) if i not in chosen]
        if not real:
            continue
        i = rng.choice(real)
        q = cayley(p, i)
        assert root_type(q, base[i][1]) == IMAGINARY
        assert q.real_rank == p.real_rank - 1
        for j in real:
            if j != i:
                assert root_type(q, base[j][1]) == REAL


@pytest.mark.parametrize(
    "cartan, n, survivors",
    [("A", 3, 1), ("A", 4, 2), ("A", 5, 1), ("A", 6, 2), ("D", 4, 4), ("D", 5, 2), ("D", 6, 4)],
)
def test_survivor_counts(cartan, n, survivors):
    assert count_survivors(cartan, n) == survivors


def test_survivor_trace():
    trace = []
    total = count_survivors("D", 4, trace)
    assert sum(1 for t in trace if t.reason == SURVIVOR) == total
    assert sum(t.members for t in trace) == 2 ** 4
    assert {t.reason for t in trace} <= {"R", "C", SURVIVOR}
    row = trace[0].as_dict()
    assert row["type"] == "D" and row["n"] == 4
    assert row["sign"] in (-1, 1)


def test_survivors_out_of_range():
    with pytest.raises(SchemeError):
        count_survivors("A", 2)
    with pytest.raises(SchemeError):
        classify_schemes("E", 6)
