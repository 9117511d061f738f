import json
from fractions import Fraction

import pytest

from genuine_smalls.ktypes import KType, PairCounts
from genuine_smalls.orbits import RealForm
from genuine_smalls.serialize import dumps, render_table, to_data
from genuine_smalls.weylrep.labels import PartitionLabel


def test_rationals_become_string_pairs():
    assert to_data(Fraction(-3, 2)) == ["-3", "2"]
    assert to_data([Fraction(2), 1]) == [["2", "1"], 1]


def test_dumps_sorts_keys():
    text = dumps({"b": 1, "a": Fraction(1, 2)})
    assert json.loads(text) == {"a": ["1", "2"], "b": 1}
    assert text.index('"a"') < text.index('"b"')
    assert dumps({"a": 1, "b": 2}) == dumps({"b": 2, "a": 1})


def test_keys_and_sets():
    assert to_data({(1, 2): 3}) == {"1,2": 3}
    assert to_data({Fraction(1, 2): 0}) == {"1/2": 0}
    assert to_data({3, 1, 2}) == [1, 2, 3]


def test_library_objects():
    assert to_data(PartitionLabel((2, 1))) == str(PartitionLabel((2, 1)))
    assert to_data(RealForm("so", 4, 4)) == str(RealForm("so", 4, 4))
    assert to_data(KType.of((Fraction(1, 2),))) == [[["1", "2"]]]
    assert to_data(PairCounts(4, 4, True)) == {"representations": 4, "pairs": 4, "bijective": True}


def test_unknown_objects_are_rejected():
    with pytest.raises(TypeError):
        to_data(object())


def test_render_table():
    text = render_table(["a", "bb"], [[1, "x"], [22, "yy"]])
    assert text.splitlines() == ["a   bb", "--  --", "1   x", "22  yy"]
