from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from grassblow.errors import ParameterError
from grassblow.exact import ExactMatrix, RationalSampler, as_fraction, det, integer_det, inverse, matmul, rank

small = st.fractions(min_value=-9, max_value=9, max_denominator=9)


def square(size):
    return st.lists(st.lists(small, min_size=size, max_size=size), min_size=size, max_size=size)


def test_as_fraction_accepts_exact_inputs():
    assert as_fraction(3) == 3
    assert as_fraction("2/6") == Fraction(1, 3)
    assert as_fraction(Fraction(5, 2)) == Fraction(5, 2)


@pytest.mark.parametrize("bad", [0.5, True, None, [1]])
def test_as_fraction_rejects_inexact(bad):
    with pytest.raises(ParameterError):
        as_fraction(bad)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(square))
def test_det_matches_sympy(rows):
    assert det(rows) == sympy.Matrix(rows).det()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(lambda k: st.lists(st.lists(st.integers(-20, 20), min_size=k, max_size=k), min_size=k, max_size=k)))
def test_integer_det_matches_fraction_det(rows):
    assert integer_det(rows) == det([[Fraction(x) for x in r] for r in rows])


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda k: st.tuples(square(k), square(k))))
def test_det_is_multiplicative(pair):
    a, b = pair
    assert det(matmul(a, b)) == det(a) * det(b)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 6), st.data())
def test_rank_matches_sympy(nr, nc, data):
    rows = data.draw(st.lists(st.lists(st.sampled_from([Fraction(0), Fraction(1), Fraction(-2, 3)]), min_size=nc, max_size=nc), min_size=nr, max_size=nr))
    assert rank(rows) == sympy.Matrix(rows).rank()


def test_inverse_round_trip_and_singular():
    a = [[Fraction(2), Fraction(1)], [Fraction(7), Fraction(4)]]
    assert matmul(a, inverse(a)) == [[1, 0], [0, 1]]
    with pytest.raises(ZeroDivisionError):
        inverse([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])


def test_exact_matrix_is_immutable_and_one_based():
    m = ExactMatrix([[1, 2, 3], [4, 5, 6]])
    assert m.shape == (2, 3)
    assert m.column(2) == (2, 5)
    assert m.submatrix([3, 1]) == [[3, 1], [6, 4]]
    with pytest.raises(AttributeError):
        m.rows = ()
    with pytest.raises(ParameterError):
        ExactMatrix([[1, 2], [3]])


def test_sampler_is_seeded_and_in_range():
    s1, s2 = RationalSampler(5), RationalSampler(5)
    assert [s1.rational() for _ in range(50)] == [s2.rational() for _ in range(50)]
    sampler = RationalSampler(9)
    for _ in range(500):
        x = sampler.rational(nonzero=True)
        assert x != 0 and abs(x.numerator) <= 9 and x.denominator <= 9
