from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from dncohomology import theta
from dncohomology.theta import ThetaPolynomial, enumerate_basis, h_theta_dim, partial_theta


def random_theta(D, max_deg):
    gens = st.tuples(*[st.integers(0, max_deg)] * (D - 1))
    mono = st.lists(gens, min_size=0, max_size=3, unique=True).map(tuple)
    return st.dictionaries(mono, st.integers(-3, 3), max_size=4).map(lambda t: ThetaPolynomial(D, t))


def test_canonical_sign():
    assert theta.canonical([(1,), (0,)]) == (-1, ((0,), (1,)))
    assert theta.canonical([(0,), (2,), (1,)]) == (-1, ((0,), (1,), (2,)))
    assert theta.canonical([(1,), (1,)]) == (0, None)


def test_anticommutation():
    a, b = ThetaPolynomial.generator(2, (0,)), ThetaPolynomial.generator(2, (3,))
    assert a * b == -(b * a)
    assert a * a == ThetaPolynomial(2)


def test_basis_examples():
    assert enumerate_basis(2, 2, 3) == (((0,), (3,)), ((1,), (2,)))
    assert enumerate_basis(3, 0, 0) == ((),)
    assert enumerate_basis(2, 2, 0) == ()
    with pytest.raises(ValueError):
        enumerate_basis(0, 1, 1)


def test_partial_example():
    f = ThetaPolynomial(2, {((0,), (1,)): 1})
    assert partial_theta(1, f) == ThetaPolynomial(2, {((0,), (2,)): 1})
    with pytest.raises(ValueError):
        partial_theta(2, f)


@given(random_theta(3, 2), random_theta(3, 2), st.integers(1, 2))
def test_partial_is_even_derivation(f, g, i):
    assert partial_theta(i, f * g) == partial_theta(i, f) * g + f * partial_theta(i, g)


@given(random_theta(3, 2), st.integers(1, 2), st.integers(1, 2))
def test_partials_commute(f, i, j):
    assert partial_theta(i, partial_theta(j, f)) == partial_theta(j, partial_theta(i, f))


@given(st.integers(1, 4), st.integers(0, 4), st.integers(0, 6))
def test_h_theta_bounds(D, p, d):
    n = len(enumerate_basis(D, p, d))
    assert 0 <= h_theta_dim(D, p, d) <= n


def test_h_theta_small():
    assert h_theta_dim(1, 0, 0) == 1
    assert h_theta_dim(2, 0, 1) == 0
    assert h_theta_dim(2, 1, 0) == 1
    assert h_theta_dim(3, 1, 0) == 1
    assert h_theta_dim(2, 1, 3) == 0
    for D in range(2, 5):
        for d in range(5):
            assert h_theta_dim(D, d + 1, d) == comb(D - 1, d)


def test_image_matrix_shape():
    M = theta.image_matrix(3, 2, 3)
    assert M.rows == len(enumerate_basis(3, 2, 3))
    assert M.cols == 2 * len(enumerate_basis(3, 2, 2))


def test_scalar_multiplication():
    f = ThetaPolynomial(2, {((0,),): 2})
    assert (Fraction(1, 2) * f) == ThetaPolynomial.generator(2, (0,))
