import itertools

import pytest
from hypothesis import given

from matroid_chow.corpus import corpus, fano, named
from matroid_chow.errors import DomainError
from matroid_chow.matroid import (BasisMatroid, ColoopExtension, GraphicMatroid, LinearMatroid,
                                  UniformMatroid, rank_axiom_violations, same_rank_function)

from conftest import small_matroids


@given(small_matroids())
def test_rank_axioms_hold(M):
    assert rank_axiom_violations(M) == []


@given(small_matroids())
def test_double_dual_is_identity(M):
    assert same_rank_function(M.dual().dual(), M)


@given(small_matroids())
def test_dual_rank_formula(M):
    E = M.ground
    D = M.dual()
    for A in itertools.islice(itertools.chain.from_iterable(
            itertools.combinations(sorted(E), k) for k in range(len(E) + 1)), 40):
        A = frozenset(A)
        assert D.rank(A) == len(A) + M.rank(E - A) - M.full_rank


@given(small_matroids())
def test_flats_closed_under_intersection(M):
    flats = set(M.flats())
    for F, G in itertools.combinations(flats, 2):
        assert F & G in flats


@given(small_matroids())
def test_closure_is_a_flat(M):
    for e in M.ground:
        assert M.is_flat(M.closure({e}))


@given(small_matroids())
def test_bases_have_full_rank(M):
    bases = M.bases()
    assert bases
    assert all(len(B) == M.full_rank and M.is_independent(B) for B in bases)


@given(small_matroids())
def test_deletion_contraction_ranks(M):
    for e in M.ground:
        D, C = M.delete({e}), M.contract({e})
        assert len(D) == len(C) == len(M) - 1
        assert C.full_rank == M.full_rank - M.rank({e})
        assert D.ground == C.ground == M.ground - {e}


def test_uniform_counts():
    U = UniformMatroid(2, 4)
    assert len(U.bases()) == 6
    assert U.corank == 2
    assert [len(U.flats_of_rank(k)) for k in range(3)] == [1, 4, 1]


def test_complete_graph_k4():
    K4 = GraphicMatroid.complete(4)
    assert len(K4) == 6 and K4.full_rank == 3
    assert len(K4.bases()) == 16
    assert len(K4.flats_of_rank(1)) == 6
    assert len(K4.flats_of_rank(2)) == 7


def test_fano_lines_are_rank_two_flats():
    F = fano()
    assert len(F.flats_of_rank(2)) == 7
    assert all(len(L) == 3 for L in F.flats_of_rank(2))


def test_linear_matroid_rationals():
    M = LinearMatroid([[1, 2], [2, 4]])
    assert M.full_rank == 1 and not M.is_loop(0)
    assert LinearMatroid([[0, 1]]).loops() == frozenset({0})


def test_basis_exchange_validated():
    with pytest.raises(DomainError):
        BasisMatroid([[0, 1], [2, 3]], ground=range(4))


def test_direct_sum_shifts_labels():
    S = UniformMatroid(1, 2).direct_sum(UniformMatroid(1, 2))
    assert S.ground == frozenset(range(4))
    assert S.full_rank == 2
    assert S.rank({0, 1}) == 1 and S.rank({1, 2}) == 2


def test_coloop_extension():
    U = UniformMatroid(2, 3)
    C = ColoopExtension(U, 7)
    assert C.is_coloop(7) and C.full_rank == 3
    assert same_rank_function(C.contract({7}), U)
    assert same_rank_function(C.delete({7}), U)


def test_truncation():
    T = UniformMatroid(3, 5).truncate(1)
    assert same_rank_function(T, UniformMatroid(2, 5))


def test_chains_reject_loops():
    with pytest.raises(DomainError):
        list(LinearMatroid([[0, 1]]).chains(1))


def test_maximal_chains_of_uniform():
    # a maximal chain of proper flats of U_{2,3} is a single point
    assert len(list(UniformMatroid(2, 3).maximal_chains())) == 3
    assert len(list(UniformMatroid(3, 4).maximal_chains())) == 12


def test_minor_preserves_labels():
    K4 = GraphicMatroid.complete(4)
    m = K4.delete({0}).contract({5})
    assert m.ground == frozenset({1, 2, 3, 4})


def test_corpus_is_well_formed():
    entries = corpus()
    names = [n for n, _ in entries]
    assert len(names) == len(set(names)) == 80
    for name, M in entries:
        if len(M) <= 7:
            assert rank_axiom_violations(M) == [], name


def test_unknown_corpus_name():
    with pytest.raises(DomainError):
        named("K9")


def test_equality_and_hash_are_structural():
    assert UniformMatroid(2, 4) == UniformMatroid(2, 4)
    assert hash(UniformMatroid(2, 4)) == hash(UniformMatroid(2, 4))
