import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from dncohomology import cohomology, theta
from dncohomology.cohomology import (
    NOT_COVERED, BracketSpec, corollary_cases, corollary_dim, normalize_bracket, poisson_dim,
)
from dncohomology.suites import PUBLISHED_TABLES


def test_small_values():
    assert poisson_dim(2, 0, 0) == 2
    assert poisson_dim(3, 1, 1) == 2
    assert poisson_dim(1, 0, 0) == 2
    with pytest.raises(ValueError):
        poisson_dim(0, 0, 0)
    with pytest.raises(ValueError):
        poisson_dim(2, -1, 0)


@pytest.mark.parametrize("D,p", [(2, 2), (2, 3), (3, 2)])
def test_fast_table_rows(D, p):
    row = PUBLISHED_TABLES[(D, p)]
    assert [poisson_dim(D, p, d) for d in range(len(row))] == row


def test_h0_and_h1():
    for D in range(1, 5):
        assert poisson_dim(D, 0, 0) == 2
        assert poisson_dim(D, 1, 0) == 1
        assert all(poisson_dim(D, 0, d) == 0 for d in range(1, 5))
        assert poisson_dim(D, 1, 1) == D - 1
        assert poisson_dim(D, 1, 2) == 0


def test_one_variable_is_trivial_beyond_degree_zero():
    assert [poisson_dim(1, p, d) for p in range(3) for d in range(1, 4)] == [0] * 9


def test_corollary_covered_cases():
    for D in range(2, 6):
        assert corollary_dim(D, 0, 0) == 2
        assert corollary_dim(D, 1, 0) == 1
        assert corollary_dim(D, 1, 1) == D - 1
        assert corollary_dim(D, 2, 2) == (D - 1) * (D - 2) // 2 == poisson_dim(D, 2, 2)
        assert corollary_dim(D, 3, 2) == comb(D - 1, 2) == poisson_dim(D, 3, 2)
        assert corollary_dim(D, 2, 3) == NOT_COVERED
    with pytest.raises(ValueError):
        corollary_dim(1, 0, 0)


def test_corollary_contradiction_at_2_1():
    # The printed list gives 0 at (2,1) while its own p = d+1 row gives D-1.
    for D in range(2, 6):
        cases = dict(corollary_cases(D, 2, 1))
        assert cases == {"d=1,p=2": 0, "p=d+1": D - 1}
        assert corollary_dim(D, 2, 1) == 0
        assert poisson_dim(D, 2, 1) == D - 1
    assert PUBLISHED_TABLES[(2, 2)][1] == 1 and PUBLISHED_TABLES[(3, 2)][1] == 2


def test_lemma_rows():
    for D in range(2, 6):
        for d in range(5):
            assert theta.h_theta_dim(D, d + 1, d) == comb(D - 1, d)
            for p in range(d + 2, d + 4):
                assert theta.h_theta_dim(D, p, d) == 0
        assert theta.h_theta_dim(D, 2, 2) == 0


def test_closed_forms_examples():
    assert cohomology.h_theta_closed_forms_d2(2, 5) == 1
    assert cohomology.h_theta_closed_forms_d2(3, 9) == 2
    assert cohomology.h_theta_closed_forms_d2(3, 10) == 1
    assert cohomology.h2_closed_form_d2(3) == 2
    assert cohomology.h2_closed_form_d2(4) == 0
    with pytest.raises(ValueError):
        cohomology.h2_closed_form_d2(2)
    with pytest.raises(ValueError):
        cohomology.h_theta_closed_forms_d2(4, 1)


def test_generating_series_d2():
    assert cohomology.h_generating_series_d2(2, 6) == [0, 1, 0, 1, 0, 1, 0]
    with pytest.raises(ValueError):
        cohomology.h_generating_series_d2(0, 3)
    for p in range(1, 6):
        assert cohomology.h_generating_series_d2(p, 14) == [theta.h_theta_dim(2, p, d) for d in range(15)]


def test_vanishing_range_shape():
    assert cohomology.vanishing_range(2, 0) == [(2, 0)]
    r = cohomology.vanishing_range(3, 1)
    assert (4, 0) in r and (6, 7) in r and (6, 8) not in r and (7, 0) not in r
    with pytest.raises(ValueError):
        cohomology.vanishing_range(1, 0)


def test_dim_table_window():
    t = cohomology.dim_table(2, 3, 5, p_min=2, d_min=1)
    assert t.p_values() == [2, 3] and t.d_values() == [1, 2, 3, 4, 5]
    assert t.dim(2, 3) == 2


def test_bracket_spec_validation():
    with pytest.raises(ValueError):
        BracketSpec(2, (0, 0))
    with pytest.raises(ValueError):
        BracketSpec(2, (1,))
    assert BracketSpec(2, (0, 1)).normalized


def test_normalize_examples():
    J = normalize_bracket(BracketSpec(2, (1, 1)))
    assert J.J == ((1, -1), (0, 1))
    assert normalize_bracket(BracketSpec(1, (1,))).J == ((1,),)
    with pytest.raises(ValueError):
        normalize_bracket(BracketSpec(1, (2,)))


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)


@given(st.integers(2, 4).flatmap(lambda D: st.lists(rationals, min_size=D, max_size=D)))
def test_normalize_property(c):
    if not any(c):
        c[0] = Fraction(1)
    spec = BracketSpec(len(c), tuple(c))
    J = normalize_bracket(spec)
    assert J.det == 1
    assert J.apply(spec.c) == [Fraction(int(i == len(c) - 1)) for i in range(len(c))]


def test_normalize_seeded_sweep():
    rng = random.Random(12)
    for D in (2, 3, 4):
        for _ in range(50):
            c = [Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(D)]
            if any(c):
                assert normalize_bracket(BracketSpec(D, tuple(c))).check(BracketSpec(D, tuple(c)))
