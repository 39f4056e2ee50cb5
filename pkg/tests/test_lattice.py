from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grassblow.errors import NormalizationRequired, ParameterError
from grassblow.grassmann import Parameters
from grassblow.lattice import (
    DUAL,
    USD,
    AmbientClass,
    Regime,
    anticanonical_class,
    anticanonical_terms,
    boundary,
    boundary_coincidence,
    boundary_relations,
    canonical_class,
    class_of_B,
    enumerate_orbit_pairs,
    hyperplane,
    level_and_regime,
    normalize_parameters,
)
from helpers import brute_orbit_pairs, normalized_triples


def cls(r, h=0, minus=(), plus=()):
    vec = [Fraction(0)] * (1 + 2 * r)
    vec[0] = Fraction(h)
    for i, c in minus:
        vec[i] = Fraction(c)
    for i, c in plus:
        vec[r + i] = Fraction(c)
    return AmbientClass.from_vector(r, vec)


@pytest.mark.parametrize(
    "triple,expected",
    [((2, 3, 8), (6, 3, 8, (USD,))), ((5, 4, 7), (5, 3, 7, (DUAL,))), ((5, 3, 9), (5, 3, 9, ())), ((1, 4, 6), (5, 2, 6, (DUAL, USD)))],
)
def test_normalize_examples(triple, expected):
    assert normalize_parameters(*triple) == expected


def test_normalize_idempotent_and_keeps_level():
    for n in range(2, 11):
        for p in range(1, n):
            for s in range(1, n):
                s2, p2, n2, _ = normalize_parameters(s, p, n)
                assert normalize_parameters(s2, p2, n2)[3] == ()
                assert Parameters(s2, p2, n2).r == Parameters(s, p, n).r
                assert 2 * p2 <= n2 <= 2 * s2


@pytest.mark.parametrize(
    "triple,r,regime",
    [((5, 3, 9), 3, Regime.R1), ((5, 3, 8), 3, Regime.R2), ((5, 4, 8), 3, Regime.R3), ((3, 3, 6), 3, Regime.R4)],
)
def test_level_and_regime(triple, r, regime):
    assert level_and_regime(Parameters(*triple)) == (r, regime)


def test_level_requires_normalized():
    with pytest.raises(NormalizationRequired):
        level_and_regime(Parameters(2, 3, 8))


def test_class_of_B_examples():
    P = Parameters(5, 3, 9)
    assert class_of_B(P, 1) == cls(3, 1, minus=[(1, -1)], plus=[(1, -2), (2, -1)])
    assert class_of_B(P, 0) == cls(3, 1, plus=[(1, -3), (2, -2), (3, -1)])
    assert class_of_B(Parameters(5, 3, 8), 3) == cls(3, 1, minus=[(1, -3), (2, -2)])
    assert boundary_coincidence(Parameters(5, 3, 8), 3) == "D-r"
    assert boundary_coincidence(Parameters(3, 3, 6), 0) == "D+r"
    assert boundary_coincidence(P, 0) is None
    with pytest.raises(ParameterError):
        class_of_B(P, 4)


def test_class_of_B_supports():
    for params in normalized_triples(12):
        r = params.r
        for j in range(r + 1):
            c = class_of_B(params, j)
            assert c.h == 1
            edge = boundary_coincidence(params, j)
            plus_support = {i for i, x in enumerate(c.dplus, 1) if x}
            minus_support = {i for i, x in enumerate(c.dminus, 1) if x}
            if edge == "D+r":
                assert plus_support == set(range(1, r)) and not minus_support
            elif edge == "D-r":
                assert minus_support == set(range(1, r)) and not plus_support
            else:
                assert plus_support == set(range(1, r - j + 1))
                assert minus_support == set(range(1, j + 1))


def test_anticanonical_examples():
    P = Parameters(5, 3, 9)
    terms = anticanonical_terms(P)
    assert [(c, t) for c, t in terms if t.startswith("B")] == [(3, "B0"), (2, "B1"), (2, "B2"), (2, "B3")]
    assert anticanonical_class(P).h == 9
    # -K = 9H - 11 D-1 - 5 D-2 - D-3 - 14 D+1 - 7 D+2 - 2 D+3, expanded by hand
    assert anticanonical_class(P) == cls(3, 9, minus=[(1, -11), (2, -5), (3, -1)], plus=[(1, -14), (2, -7), (3, -2)])
    r4 = [(c, t) for c, t in anticanonical_terms(Parameters(3, 3, 6)) if t.startswith("B")]
    assert r4 == [(2, "B1"), (2, "B2")]
    r2 = [(c, t) for c, t in anticanonical_terms(Parameters(5, 3, 8)) if t.startswith("B")]
    assert r2 == [(3, "B0"), (2, "B1"), (2, "B2")]
    assert canonical_class(P) == -anticanonical_class(P)


def test_anticanonical_degree_sweep():
    for params in normalized_triples(12):
        assert anticanonical_class(params).h == params.n


def test_boundary_relations_vanish_on_their_pivot():
    for triple in [(5, 3, 8), (3, 3, 6), (4, 4, 8)]:
        params = Parameters(*triple)
        for label, rel in boundary_relations(params):
            assert rel.h == -1  # D - B_j
            k = rel.labels().index(label)
            assert rel.vector()[k] == 1
    assert boundary_relations(Parameters(5, 3, 9)) == []


@pytest.mark.parametrize("r,count", [(1, 3), (2, 8), (3, 20)])
def test_orbit_pair_counts(r, count):
    assert len(enumerate_orbit_pairs(r)) == count


def test_orbit_pairs_brute_force():
    for r in range(1, 7):
        pairs = enumerate_orbit_pairs(r)
        assert len(pairs) == len(set(pairs))
        assert set(pairs) == brute_orbit_pairs(r)
        assert (frozenset(), frozenset()) in pairs


coef = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@settings(max_examples=50, deadline=None)
@given(st.lists(coef, min_size=7, max_size=7), st.lists(coef, min_size=7, max_size=7), coef)
def test_ambient_arithmetic(a, b, c):
    x, y = AmbientClass.from_vector(3, a), AmbientClass.from_vector(3, b)
    assert (x + y).vector() == tuple(u + v for u, v in zip(a, b))
    assert (x - x).is_zero()
    assert x.scale(c).vector() == tuple(c * u for u in a)


def test_basic_classes_and_printing():
    assert str(hyperplane(2) - boundary(2, "+", 1).scale(3)) == "H - 3*D+1"
    assert str(AmbientClass.zero(2)) == "0"
    with pytest.raises(ParameterError):
        boundary(2, "-", 3)
