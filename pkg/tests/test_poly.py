from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from matroid_chow.errors import ConsistencyError, DomainError
from matroid_chow.poly import BiPoly, MultiPoly, PowerSeries, UniPoly, geometric_expand

coeffs = st.lists(st.integers(-20, 20), max_size=6)
unipolys = coeffs.map(UniPoly)
bipolys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                          st.integers(-9, 9), max_size=6).map(BiPoly)
multipolys = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
                             st.integers(-9, 9), max_size=5).map(lambda t: MultiPoly(t, 3))


def test_zero_has_degree_minus_one():
    assert UniPoly().degree == -1
    assert UniPoly([0, 0]).is_zero()


def test_trailing_zeros_trimmed_and_equal():
    assert UniPoly([1, 2, 0, 0]) == UniPoly([1, 2])
    assert UniPoly([3]) == 3


def test_str():
    assert str(UniPoly([1, -3, 1])) == "y^2 - 3*y + 1"
    assert str(UniPoly()) == "0"


def test_divide_exact_and_remainder():
    p = UniPoly([2, -3, 1])
    assert p.divide_exact(UniPoly([-1, 1])) == UniPoly([-2, 1])
    with pytest.raises(ConsistencyError):
        UniPoly([1, 0, 1]).divide_exact(UniPoly([-1, 1]))
    with pytest.raises(DomainError):
        p.divide_exact(UniPoly())


def test_shift_and_reverse():
    p = UniPoly([1, 2])
    assert p.shift(2) == UniPoly([0, 0, 1, 2])
    assert p.shift(2).shift(-2) == p
    with pytest.raises(DomainError):
        p.shift(-1)
    assert p.reversed(3) == UniPoly([0, 0, 2, 1])


def test_negative_power_rejected():
    with pytest.raises(DomainError):
        UniPoly([1, 1]) ** -1


@given(unipolys, unipolys, unipolys)
def test_unipoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == UniPoly()
    assert a * 1 == a


@given(unipolys, unipolys, st.integers(-5, 5))
def test_unipoly_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(unipolys, st.integers(0, 4))
def test_power_matches_repeated_product(a, e):
    out = UniPoly([1])
    for _ in range(e):
        out = out * a
    assert a ** e == out


@given(unipolys, unipolys.filter(lambda p: not p.is_zero()))
def test_divide_exact_inverts_multiplication(a, b):
    assert (a * b).divide_exact(b) == a


@given(bipolys, bipolys, st.integers(-3, 3), st.integers(-3, 3))
def test_bipoly_ring_and_evaluation(a, b, x, y):
    assert (a * b)(x, y) == a(x, y) * b(x, y)
    assert (a + b)(x, y) == a(x, y) + b(x, y)
    assert a.swap()(y, x) == a(x, y)
    assert a.at_x(x)(y) == a(x, y)
    assert a.at_y(y)(x) == a(x, y)


@given(bipolys, st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_bipoly_shift_x(a, s, x, y):
    assert a.shift_x(s)(x, y) == a(x + s, y)


def test_bipoly_matrix_round_trip():
    p = BiPoly({(2, 0): 1, (0, 1): 3, (1, 1): -2})
    assert BiPoly.from_matrix(p.to_matrix()) == p


@given(multipolys, multipolys, multipolys)
def test_multipoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(multipolys, multipolys, st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_multipoly_evaluate_homomorphism(a, b, vals):
    assert (a * b).evaluate(vals, 1) == a.evaluate(vals, 1) * b.evaluate(vals, 1)


@given(multipolys, st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_multipoly_swap_and_substitute(a, vals):
    swapped = a.swap_variables(1, 3).evaluate(vals, 1)
    assert swapped == a.evaluate([vals[2], vals[1], vals[0]], 1)
    assert a.substitute(2, vals[1]).evaluate(vals, 1) == a.evaluate(vals, 1)


def test_multipoly_extend_and_shift():
    z1 = MultiPoly.variable(1, 2)
    assert z1.extend(3) == MultiPoly.variable(1, 3)
    assert z1.shift_variables(1) == MultiPoly.variable(2, 3)
    with pytest.raises(DomainError):
        MultiPoly.variable(2, 2).extend(1)
    with pytest.raises(DomainError):
        MultiPoly.variable(3, 2)


def test_multipoly_total_degree():
    p = MultiPoly({(2, 1): 1, (0, 1): 5}, 2)
    assert p.total_degree == 3


def test_power_series_truncation_guard():
    s = PowerSeries([1, 2, 3], 2)
    assert s[2] == 3
    with pytest.raises(DomainError):
        s[3]
    with pytest.raises(DomainError):
        s.truncate(5)


@given(unipolys, st.integers(0, 5), st.integers(0, 8))
def test_geometric_expand_round_trip(num, m, order):
    series = geometric_expand(num, m, order)
    back = series * PowerSeries.from_poly(UniPoly([1, -1]) ** m, order)
    assert back == PowerSeries.from_poly(num, order)


def test_geometric_expand_binomials():
    s = geometric_expand(UniPoly([1]), 3, 4)
    assert [s[k] for k in range(5)] == [1, 3, 6, 10, 15]


def test_fraction_coefficients_print_and_serialize():
    p = UniPoly([Fraction(1, 2), 1])
    assert p.to_list() == ["1/2", 1]
