from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grassblow.errors import ParameterError, UnsupportedCase
from grassblow.grassmann import Parameters
from grassblow.lattice import AmbientClass, anticanonical_class, boundary, class_of_B, hyperplane
from grassblow.restriction import (
    CORRECTED,
    DISCREPANCY,
    HOLDS,
    LITERAL,
    MINUS,
    NOT_STATED,
    PLUS,
    SIDES,
    RestrictedClass,
    anticanonical_stated_terms,
    check_B,
    equal_mod_relations,
    evaluate,
    identity_suite,
    meets,
    restrict,
    restricted_anticanonical,
    restricted_labels,
    symbol,
)
from grassblow.fixtures import expected_discrepancy
from grassblow.lattice import level_and_regime
from helpers import normalized_triples

R1 = Parameters(5, 3, 9)


def rc(side, j, r, **coefs):
    """Restricted class from label=coefficient pairs (labels with '-'/'+' spelled m/p)."""
    labels = restricted_labels(side, j, r)
    vec = [Fraction(0)] * len(labels)
    for key, c in coefs.items():
        label = key.replace("m", "-").replace("p", "+")
        vec[labels.index(label)] = Fraction(c)
    return RestrictedClass.from_vector(side, j, r, vec)


def test_restrict_examples():
    assert restrict(boundary(3, "+", 1), MINUS, 2).is_zero()
    assert restrict(hyperplane(3), MINUS, 2) == rc(MINUS, 2, 3, H=1)
    assert restrict(boundary(3, "-", 2), MINUS, 2) == rc(MINUS, 2, 3, Dm2=1)
    assert restrict(boundary(3, "+", 3), MINUS, 2) == rc(MINUS, 2, 3, Dp3=1)
    with pytest.raises(ParameterError):
        restrict(hyperplane(3), MINUS, 4)


def test_empty_intersection_rule():
    for r in range(1, 7):
        for j in range(1, r + 1):
            for i in range(1, r + 1):
                for side, opp in ((MINUS, "+"), (PLUS, "-")):
                    zero = restrict(boundary(r, opp, i), side, j).is_zero()
                    assert zero == (i + j <= r + 1) == (not meets(side, j, i, r))


coef = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@settings(max_examples=60, deadline=None)
@given(st.lists(coef, min_size=9, max_size=9), st.lists(coef, min_size=9, max_size=9), coef, coef, st.sampled_from(SIDES), st.integers(1, 4))
def test_restrict_is_linear(u, v, a, b, side, j):
    x, y = AmbientClass.from_vector(4, u), AmbientClass.from_vector(4, v)
    lhs = restrict(x.scale(a) + y.scale(b), side, j)
    assert lhs == restrict(x, side, j).scale(a) + restrict(y, side, j).scale(b)


def test_check_B_examples():
    assert check_B(R1, MINUS, 2, 0) == rc(MINUS, 2, 3, H=1, Dp3=-1)
    assert check_B(R1, MINUS, 2, 2) == rc(MINUS, 2, 3, H=1, Dm1=-2, Dm2=-1)
    for side in SIDES:
        for j in range(1, 4):
            for m in range(4):
                assert check_B(R1, side, j, m) == restrict(class_of_B(R1, m), side, j)
    with pytest.raises(ParameterError):
        check_B(R1, MINUS, 2, 5)


def test_coinciding_B_restricts_like_the_boundary_symbol():
    P = Parameters(5, 3, 8)  # B_r coincides with D-r
    for side in SIDES:
        for j in range(1, 4):
            assert equal_mod_relations(P, check_B(P, side, j, 3), symbol(side, j, 3, "D-3"))


def test_restricted_anticanonical_example():
    direct, stated = restricted_anticanonical(R1, MINUS, 2)
    by_hand = evaluate(R1, MINUS, 2, [(3, "B0"), (2, "B1"), (2, "B2"), (2, "B3"), (1, "B2"), (-1, "B3"), (1, "D+3")])
    assert stated == by_hand
    assert direct == stated
    assert direct.h == 9


def test_r4_last_line_matches():
    P = Parameters(3, 3, 6)
    direct, stated = restricted_anticanonical(P, MINUS, 3)
    assert equal_mod_relations(P, direct, stated)
    # the j = r line ends in a single B_{r-1} rather than a difference
    terms = anticanonical_stated_terms(P, MINUS, 3)
    assert (1, "B2") in terms and (-1, "B3") not in terms


def test_restricted_h_coefficient_is_n():
    for params in normalized_triples(12, 3):
        for side in SIDES:
            for j in range(1, params.r + 1):
                direct, _ = restricted_anticanonical(params, side, j)
                assert direct.h == params.n


def test_small_level_is_unsupported():
    with pytest.raises(UnsupportedCase):
        restricted_anticanonical(Parameters(2, 1, 3), MINUS, 1)


def test_identity_suite_r1_minus_j2_holds():
    results = {res.family: res for res in identity_suite(R1, MINUS, 2)}
    for family in ("anticanonical", "expanded", "sum", "step", "telescope", "delta1", "delta2"):
        assert results[family].status == HOLDS, family
    assert all(results[f"display:{m}"].status == HOLDS for m in range(4))


def test_identity_suite_r2_sum_and_step():
    # the plus-side j = 2 sum line holds as written in this regime
    for side in SIDES:
        results = {res.family: res for res in identity_suite(Parameters(5, 3, 8), side, 2)}
        assert results["sum"].status == HOLDS and results["step"].status == HOLDS


def test_identity_suite_r4_plus_j2_sum_residual():
    results = {res.family: res for res in identity_suite(Parameters(3, 3, 6), PLUS, 2)}
    res = results["sum"]
    assert res.status == DISCREPANCY
    assert res.residual == rc(PLUS, 2, 3, Dp1=3, Dp2=2)  # frozen value
    assert res.corrected_residual.is_zero()


def test_identity_ids_and_statuses():
    results = identity_suite(R1, PLUS, 3)
    assert all(res.id == f"R1:plus:{res.family}:j=3" for res in results)
    stated = {res.family: res.status for res in results}
    assert stated["telescope"] == NOT_STATED
    assert stated["anticanonical"] == DISCREPANCY


def test_telescope_elimination_r1():
    # sum_{i<=j+1} D-_i = B_j - B_{j+1} on D-_j, exactly as vectors, j <= r-1
    for side in SIDES:
        for j in range(1, 3):
            same = "-" if side == MINUS else "+"
            lhs = evaluate(R1, side, j, [(1, f"D{same}{i}") for i in range(1, j + 2)])
            rhs = evaluate(R1, side, j, [(1, f"B{j}"), (-1, f"B{j + 1}")] if side == MINUS else [(1, f"B{3 - j}"), (-1, f"B{2 - j}")])
            assert lhs == rhs


def test_discrepancies_are_exactly_the_fixture_list():
    for params in normalized_triples(10, 3):
        r, regime = level_and_regime(params)
        for side in SIDES:
            for j in range(1, r + 1):
                for res in identity_suite(params, side, j):
                    listed = expected_discrepancy(regime, side, res.family, j, r) is not None
                    assert (res.status == DISCREPANCY) == listed, res.id
                    if listed:
                        assert res.corrected_residual is not None and res.corrected_residual.is_zero()


def test_corrected_reading_only_changes_flagged_cases():
    for side in SIDES:
        for j in range(1, 3):
            assert anticanonical_stated_terms(R1, side, j, LITERAL) == anticanonical_stated_terms(R1, side, j, CORRECTED)
    assert anticanonical_stated_terms(R1, MINUS, 3, LITERAL) != anticanonical_stated_terms(R1, MINUS, 3, CORRECTED)


def test_direct_equals_restrict_of_minus_k():
    for side in SIDES:
        direct, _ = restricted_anticanonical(R1, side, 1)
        assert direct == restrict(anticanonical_class(R1), side, 1)
