"""
Claims about parameter schemes: the reflection word, the worked example in D4 and the number
of surviving schemes.
"""

from ...params import (
    ELIMINATED_QUADRUPLE,
    SURVIVOR,
    classify_schemes,
    count_survivors,
    imaginary_count,
    reflection_sign,
    reflection_word,
    scheme,
)
from ..checks import expect, expect_equal
from ..suite import ClaimSuite

suite = ClaimSuite("params")

D_EVEN_SURVIVORS = {"compact", "rank-two", "all-beta", "last-alpha"}


@suite.claim("reflection-word", topic="the integral reflection written through simple reflections")
def reflection_words():
    for n in range(4, 13):
        # reflection_word checks the product itself
        word = reflection_word(n)
        expect_equal(f"length of the word for D{n}", 9 if n % 2 == 0 else 11, len(word))
    return "D4 to D12"


@suite.claim("example-d4", topic="the scheme {a1} of D4")
def example_d4():
    p = scheme("D", 4, ["a1"])
    expect_equal("imaginary roots in the word", 1, imaginary_count(p))
    expect_equal("sign of s_alpha", -1, reflection_sign(p))
    return f"{p.label}: t = 1, sign = -1"


@suite.claim("survivors-a", topic="surviving schemes of type A")
def survivors_a():
    for n in range(3, 11):
        expect_equal(f"survivors for n = {n}", 2 if n % 2 == 0 else 1, count_survivors("A", n))
    return "n = 3 to 10"


@suite.claim("survivors-d", topic="surviving schemes of type D")
def survivors_d():
    for n in range(4, 10):
        expect_equal(f"survivors for D{n}", 4 if n % 2 == 0 else 2, count_survivors("D", n))
    return "D4 to D9"


@suite.claim("survivors-d-even", topic="the four surviving schemes of D2m")
def survivors_d_even():
    for n in (4, 6, 8):
        names = {t.name for t in classify_schemes("D", n) if t.reason == SURVIVOR}
        expect_equal(f"surviving schemes of D{n}", D_EVEN_SURVIVORS, names)
    return ", ".join(sorted(D_EVEN_SURVIVORS))


@suite.claim("quadruple-sign", topic="schemes removed by a mixed quadruple carry the sign -1")
def quadruple_sign():
    for n in range(4, 9):
        for t in classify_schemes("D", n):
            if t.reason == ELIMINATED_QUADRUPLE:
                expect(t.sign == -1, f"D{n} {t.name}: s_alpha acts by {t.sign}")
    return "D4 to D8"
