import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from matroid_chow.chow import monomial
from matroid_chow.corpus import example_b2, two_parallel_pairs
from matroid_chow.degree import (SlidingProblem, class_degree, composition_to_subset,
                                 deg_delta_oracle, delta_degree, g, h_poly, h_poly_direct,
                                 phi_degree, phi_degrees, sample_generic_vector, sliding_count,
                                 subset_to_composition, tutte_coeff_via_activity_chains,
                                 valid_compositions)
from matroid_chow.errors import DomainError
from matroid_chow.matroid import GraphicMatroid, LinearMatroid, UniformMatroid
from matroid_chow.poly import MultiPoly
from matroid_chow.tutte import tutte_one_y

from conftest import loopless_matroids


def z(*exps_and_coeffs, nvars):
    return MultiPoly(dict(exps_and_coeffs), nvars)


GOLDEN_G = [
    (example_b2, (2, 2, 1), 8),
    (lambda: UniformMatroid(3, 4), (2, 2), 3),
    (two_parallel_pairs, (1, 2, 1), 2),
    (two_parallel_pairs, (2, 1, 1), 1),
    (lambda: UniformMatroid(2, 3), (2, 1), 2),
    (lambda: UniformMatroid(2, 3), (1, 2), 1),
    (lambda: UniformMatroid(1, 1).direct_sum(UniformMatroid(1, 1)), (2,), 1),
]


@pytest.mark.parametrize("make,X,expected", GOLDEN_G)
def test_recursion_golden_values(make, X, expected):
    assert g(make(), X) == expected


def test_h_of_u34():
    expected = z(((2, 0), 3), ((1, 1), 3), ((0, 2), 1), nvars=2)
    assert h_poly(UniformMatroid(3, 4)) == expected


def test_h_of_example_matroid():
    expected = z(((2, 0, 0), 4), ((0, 2, 0), 3), ((0, 0, 2), 1), ((1, 1, 0), 8),
                 ((1, 0, 1), 4), ((0, 1, 1), 3), nvars=3)
    assert h_poly(example_b2()) == expected


def test_h_of_parallel_pairs():
    expected = z(((1, 0, 0), 1), ((0, 1, 0), 2), ((0, 0, 1), 1), nvars=3)
    assert h_poly(two_parallel_pairs()) == expected


@given(loopless_matroids())
def test_h_recursion_matches_direct(M):
    assert h_poly(M) == h_poly_direct(M)


def test_composition_subset_round_trip():
    assert composition_to_subset((2, 2, 1)) == frozenset({2, 4})
    assert subset_to_composition({2, 4}, 5) == (2, 2, 1)
    assert delta_degree(example_b2(), {2, 4}) == 8


def test_g_rejects_bad_input():
    with pytest.raises(DomainError):
        g(UniformMatroid(2, 3), (3,))
    with pytest.raises(DomainError):
        g(UniformMatroid(2, 3), (2, 2))
    with pytest.raises(DomainError):
        g(LinearMatroid([[0, 1]]), (1, 1))


def test_sliding_example_returns_three():
    v = tuple(Fraction(x) for x in (1, 0, 3, 5, 10, 11, Fraction(25, 2)))
    chain = (frozenset({1}), frozenset({0, 1, 2, 4}))
    assert sliding_count(SlidingProblem(v, chain, frozenset({2, 3, 4, 6}))) == 3


def test_sliding_sum_on_u23():
    U = UniformMatroid(2, 3)
    v = sample_generic_vector(3, random.Random(1))
    total = sum(sliding_count(SlidingProblem(v, c, frozenset({1}))) for c in U.maximal_chains())
    assert total == g(U, (1, 2)) == 1


def test_generic_vector_is_strictly_decreasing():
    v = sample_generic_vector(6, random.Random(3))
    assert all(a > b for a, b in zip(v, v[1:]))


def test_oracle_matches_example():
    assert deg_delta_oracle(example_b2(), {2, 4}) == 8


def test_oracle_size_guard():
    with pytest.raises(DomainError):
        deg_delta_oracle(GraphicMatroid.complete(5), {1, 2, 3, 4, 5, 6})


@settings(max_examples=15)
@given(loopless_matroids(max_size=5))
def test_oracle_triangle(M):
    n = len(M) - 1
    for X in valid_compositions(M):
        assert g(M, X) == deg_delta_oracle(M, composition_to_subset(X), seed=len(X))
    for k in range(M.corank + 1):
        assert phi_degree(M, k) == tutte_coeff_via_activity_chains(M, k) == tutte_one_y(M)[k]
    assert n == len(M) - 1


@given(loopless_matroids())
def test_one_window_degrees_are_tutte_coefficients(M):
    assert phi_degrees(M) == tutte_one_y(M)


def test_k5_phi_degrees():
    K5 = GraphicMatroid.complete(5)
    assert list(phi_degrees(K5)) == [24, 36, 30, 20, 10, 4, 1]
    assert [tutte_coeff_via_activity_chains(K5, k) for k in range(7)] == [24, 36, 30, 20, 10, 4, 1]


def test_class_degree_of_alpha_monomials():
    M = UniformMatroid(3, 4)
    # alpha_1^r has degree one; alpha_n ... alpha_{n-r+1} is r! times [y^0] T(1, y)
    assert class_degree(M, monomial(3, {1: 2}, basis="alpha")) == 1
    assert class_degree(M, monomial(3, {3: 1, 2: 1}, basis="alpha")) == 2 * tutte_one_y(M)[0]


def test_class_degree_codimension_guard():
    with pytest.raises(DomainError):
        class_degree(UniformMatroid(3, 4), monomial(3, {1: 1}))
