from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from lcsq.free_algebra import (FreeAlgebraElement as F, GeneratorMismatch, bracket, coordinates,
                               from_coordinates, left_normed, multidegree, multidegrees_of_total,
                               multiply, sub_multidegrees, word_index, words_of_degree,
                               words_of_multidegree)

N = 3


@st.composite
def elements(draw, n=N):
    terms = draw(st.dictionaries(
        st.lists(st.integers(1, n), max_size=3).map(tuple),
        st.integers(-3, 3), max_size=4))
    return F(terms, n)


@settings(max_examples=80, deadline=None)
@given(elements(), elements(), elements())
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=80, deadline=None)
@given(elements(), elements(), elements())
def test_jacobi_identity(a, b, c):
    total = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
    assert total.is_zero()


@settings(max_examples=80, deadline=None)
@given(elements(), elements(), elements())
def test_bracket_is_a_derivation(a, b, c):
    assert bracket(a, b * c) == bracket(a, b) * c + b * bracket(a, c)


@settings(max_examples=80, deadline=None)
@given(elements(), elements())
def test_antisymmetry_and_distributivity(a, b):
    assert (bracket(a, b) + bracket(b, a)).is_zero()
    assert multiply(a, b + b) == (a * b).scale(2)


def test_unit_is_central():
    one = F.one(2)
    x1 = F.generator(1, 2)
    assert one * x1 == x1 * one == x1
    assert bracket(one, x1).is_zero()


def test_small_bracket_expansion():
    x1, x2 = F.generator(1, 2), F.generator(2, 2)
    assert bracket(x1, x2) == F({(1, 2): 1, (2, 1): -1}, 2)
    # [[x1,x2],x1] = x1x2x1 - x2x1x1 - x1x1x2 + x1x2x1
    expected = F({(1, 2, 1): 2, (2, 1, 1): -1, (1, 1, 2): -1}, 2)
    assert left_normed([x1, x2, x1]) == expected


@pytest.mark.parametrize("delta", [(2, 1), (1, 1, 1), (3, 0, 2), (0, 0)])
def test_word_count_is_multinomial(delta):
    expected = factorial(sum(delta))
    for d in delta:
        expected //= factorial(d)
    words = words_of_multidegree(delta)
    assert len(words) == expected
    assert list(words) == sorted(words)
    assert all(multidegree(w, len(delta)) == delta for w in words)
    assert word_index(delta) == {w: i for i, w in enumerate(words)}


def test_graded_enumerations():
    assert len(words_of_degree(3, 4)) == 81
    assert len(multidegrees_of_total(3, 4)) == 15
    assert len(list(sub_multidegrees((2, 1)))) == 6


def test_coordinate_round_trip():
    x1, x2 = F.generator(1, 2), F.generator(2, 2)
    a = left_normed([x1, x2, x2]) + (x1 * x2 * x2).scale(3)
    v = coordinates(a, (1, 2))
    assert from_coordinates(v, (1, 2)) == a


def test_generator_mismatch():
    with pytest.raises(GeneratorMismatch):
        F.generator(1, 2) + F.generator(1, 3)
    with pytest.raises(ValueError):
        F.generator(3, 2)


def test_homogeneous_components():
    x1, x2 = F.generator(1, 2), F.generator(2, 2)
    a = x1 * x2 + x1
    assert not a.is_homogeneous()
    assert a.component((1, 1)) == x1 * x2
