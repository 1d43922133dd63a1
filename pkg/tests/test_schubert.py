import itertools
from math import factorial

import pytest
from hypothesis import given, strategies as st

from matroid_chow.chow import SymmetricClass
from matroid_chow.corpus import named
from matroid_chow.errors import DomainError
from matroid_chow.matroid import GraphicMatroid
from matroid_chow.poly import MultiPoly, UniPoly
from matroid_chow.schubert import (Partition, Permutation, delta_as_alpha_product,
                                   divided_difference, forward_cycle_permutation,
                                   grassmann_pullback_degrees, grassmann_series_side, hook_lengths,
                                   klyachko_class, klyachko_polynomial_form, klyachko_word_form,
                                   m_coeffs, pullback_class, pullback_class_by_hooks,
                                   pullback_degrees_by_windows, reduced_words, schubert_poly,
                                   schur_ones, schur_ones_by_tableaux)

perms4 = st.permutations([1, 2, 3, 4]).map(Permutation)
partitions = st.lists(st.integers(1, 3), min_size=1, max_size=3).map(
    lambda xs: Partition(sorted(xs, reverse=True)))


def x(*exps, N):
    return MultiPoly({tuple(exps): 1}, N, "x")


def test_permutation_basics():
    w = Permutation((2, 3, 1))
    assert w.length() == 2
    assert w.descents() == [2]
    assert w.swap(2) == Permutation((2, 1, 3))
    with pytest.raises(DomainError):
        Permutation((1, 1, 2))


def test_reduced_words_small():
    assert reduced_words((2, 1, 3)) == [(1,)]
    assert reduced_words((3, 2, 1)) == [(1, 2, 1), (2, 1, 2)]


@given(perms4)
def test_reduced_words_multiply_back(w):
    for word in reduced_words(w):
        assert len(word) == w.length()
        p = Permutation.identity(4)
        for i in word:
            p = p.swap(i)
        assert p == w


def test_schubert_of_simple_transposition():
    # S_{s_i} = x_1 + ... + x_i
    for i in (1, 2, 3):
        expected = sum((x(*[1 if k == j else 0 for k in range(4)], N=4) for j in range(i)),
                       MultiPoly({}, 4, "x"))
        assert schubert_poly(Permutation.transposition(i, 4)) == expected


def test_schubert_longest_is_staircase():
    assert schubert_poly((3, 2, 1)) == x(2, 1, 0, N=3)


@given(perms4)
def test_divided_difference_squares_to_zero(w):
    f = schubert_poly(w)
    for i in range(1, 4):
        assert divided_difference(divided_difference(f, i), i).is_zero()


@given(perms4)
def test_schubert_stable_under_embedding(w):
    assert schubert_poly(tuple(w) + (5,)) == schubert_poly(w).extend(5)


def test_seven_element_example():
    w = forward_cycle_permutation({3, 5, 6}, 6)
    assert w == Permutation((2, 3, 1, 5, 4, 6, 7))
    expected = (x(2, 1, 0, 0, 0, 0, 0, N=7) + x(1, 2, 0, 0, 0, 0, 0, N=7)
                + x(1, 1, 1, 0, 0, 0, 0, N=7) + x(1, 1, 0, 1, 0, 0, 0, N=7))
    assert schubert_poly(w) == expected


@pytest.mark.parametrize("n", range(1, 5))
def test_klyachko_forms_agree(n):
    for w in itertools.permutations(range(1, n + 2)):
        assert klyachko_word_form(w, n) == klyachko_polynomial_form(w, n)


@pytest.mark.parametrize("n", range(1, 5))
def test_forward_cycles_give_mirrored_deltas(n):
    for k in range(n + 1):
        for S in itertools.combinations(range(1, n + 1), k):
            mirrored = {n + 1 - s for s in S}
            cls = klyachko_class(forward_cycle_permutation(mirrored, n), n)
            assert cls == SymmetricClass.delta(n, S) == delta_as_alpha_product(S, n)


def test_identity_permutation_is_unit():
    assert klyachko_class((1, 2, 3), 2) == SymmetricClass.unit(2)


def test_hook_lengths():
    assert hook_lengths((2, 1)) == {(1, 1): 3, (1, 2): 1, (2, 1): 1}


@given(partitions, st.integers(0, 4))
def test_hook_content_matches_tableaux(lam, i):
    assert schur_ones(lam, i) == schur_ones_by_tableaux(lam, i)


def test_m_coeffs():
    assert m_coeffs((2, 1)) == UniPoly([0, 0, 2])
    assert m_coeffs((2,)) == UniPoly([0, 1])
    assert m_coeffs((1, 1)) == UniPoly([0, 0, 1])
    for lam in ((2, 1), (3,), (2, 2), (1, 1, 1)):
        assert sum(m_coeffs(lam)) == factorial(sum(lam)) // _hook_product(lam)


def _hook_product(lam):
    out = 1
    for h in hook_lengths(lam).values():
        out *= h
    return out


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1)])
def test_pullback_forms_agree_inside_the_box(lam):
    n = 6
    for p in range(1, n + 1):
        a = pullback_class(lam, p, n)
        b = pullback_class_by_hooks(lam, p, n)
        inside = all(1 <= p - i + j <= n for i, j in Partition(lam).cells())
        if inside:
            assert a == b
        assert a.is_one_window()


def test_k5_pullback_degrees():
    K5 = GraphicMatroid.complete(5)
    degrees = grassmann_pullback_degrees(K5, (2, 1))
    assert [degrees[p] for p in range(1, 10)] == [0, 2, 8, 20, 40, 60, 72, 48, 0]
    assert grassmann_series_side(K5, (2, 1)) == UniPoly([0, 0, 2, 8, 20, 40, 60, 72, 48])


@pytest.mark.parametrize("name,lam", [("K4", (1, 1)), ("K4", (2,)), ("U3,5", (1, 1)),
                                      ("fano", (2,)), ("U4,6", (1, 1, 1))])
def test_pullback_identity_on_corpus(name, lam):
    M = named(name)
    assert pullback_degrees_by_windows(M, lam) == grassmann_series_side(M, lam)


def test_pullback_rank_guard():
    with pytest.raises(DomainError):
        pullback_degrees_by_windows(GraphicMatroid.complete(4), (1,))
