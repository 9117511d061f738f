import pytest

from genuine_smalls.exceptions import RootSystemError, WeylGroupError
from genuine_smalls.rootsys import build, canonical_infinitesimal_character, dot, weight
from genuine_smalls.weyl import (
    identity,
    preserves_weight_coset,
    product_of_set,
    reflection,
    signed_class_key,
    signed_cycle_type,
)


def random_word(rs, rng, length):
    element = identity(rs.dim)
    for _ in range(length):
        element = element * reflection(rs, rng.choice(rs.simple_roots))
    return element


def test_reflection_on_canonical_character():
    rs = build("D", 4)
    lam = canonical_infinitesimal_character(rs)
    assert reflection(rs, weight(1, -1, 0, 0))(lam) == weight(1, "3/2", "1/2", 0)


def test_reflection_in_noncanonical_root():
    rs = build("D", 4)
    s = reflection(rs, weight(1, 0, 1, 0))
    assert s(weight("5/2", 1, "3/2", 0)) == weight("-3/2", 1, "-5/2", 0)


def test_reflection_rejects_non_roots():
    with pytest.raises(RootSystemError):
        reflection(build("A", 2), weight(1, 1, -2))


@pytest.mark.parametrize("cartan, rank", [("A", 3), ("B", 3), ("D", 4), ("G", 2), ("F", 4)])
def test_reflections_are_involutions(cartan, rank):
    rs = build(cartan, rank)
    for alpha in rs.positive_roots:
        s = reflection(rs, alpha)
        assert (s * s).is_identity()
        assert s(alpha) == tuple(-x for x in alpha)


@pytest.mark.parametrize("cartan, rank", [("A", 4), ("C", 3), ("D", 5), ("E", 6)])
def test_random_words_permute_roots(cartan, rank, rng):
    rs = build(cartan, rank)
    roots = set(rs.roots)
    for _ in range(75):
        w = random_word(rs, rng, rng.randint(0, 12))
        assert {w(r) for r in rs.roots} == roots
        assert (w * w.inverse()).is_identity()
        for a in rs.simple_roots:
            assert dot(w(a), w(a)) == dot(a, a)


def test_coset_preservation_in_a3():
    rs = build("A", 3)
    lam = canonical_infinitesimal_character(rs)
    s1 = reflection(rs, rs.simple_roots[0])
    s3 = reflection(rs, rs.simple_roots[2])
    assert preserves_weight_coset(rs, s1 * s3, lam)
    assert not preserves_weight_coset(rs, s1, lam)


def test_product_of_orthogonal_set_is_order_independent():
    rs = build("D", 4)
    roots = [weight(1, 0, 1, 0), weight(1, 0, -1, 0), weight(0, 1, 0, 1)]
    forward = product_of_set(rs, roots)
    backward = product_of_set(rs, list(reversed(roots)))
    assert forward == backward
    assert signed_cycle_type(forward) == ((2,), (1, 1))


def test_product_of_set_rejects_non_orthogonal_roots():
    rs = build("D", 4)
    with pytest.raises(WeylGroupError):
        product_of_set(rs, [weight(1, -1, 0, 0), weight(0, 1, -1, 0)])


def test_empty_product_is_identity():
    assert product_of_set(build("A", 2), []).is_identity()


def test_signed_class_key_splits_very_even_classes():
    rs = build("D", 4)
    a = product_of_set(rs, [weight(1, -1, 0, 0), weight(0, 0, 1, -1)])
    b = product_of_set(rs, [weight(1, -1, 0, 0), weight(0, 0, 1, 1)])
    assert signed_class_key(a)[:2] == signed_class_key(b)[:2] == ((2, 2), ())
    assert signed_class_key(a)[2] != signed_class_key(b)[2]


def test_signed_class_key_ignores_parity_when_not_split():
    rs = build("D", 4)
    w = reflection(rs, weight(1, 1, 0, 0))
    assert signed_class_key(w) == ((2, 1, 1), (), None)
