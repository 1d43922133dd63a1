import json

import pytest
from hypothesis import given

from matroid_chow.corpus import corpus
from matroid_chow.documents import ParseError, dump_matroid, load_matroid, parse_matroid
from matroid_chow.matroid import same_rank_function
from matroid_chow.tutte import tutte

from conftest import small_matroids


@pytest.mark.parametrize("name,M", corpus(), ids=lambda v: v if isinstance(v, str) else "")
def test_corpus_round_trip(name, M):
    back = parse_matroid(dump_matroid(M))
    if len(M) <= 8:
        assert same_rank_function(back, M)
    else:
        assert tutte(back) == tutte(M)


@given(small_matroids())
def test_random_round_trip(M):
    assert same_rank_function(parse_matroid(dump_matroid(M)), M)


def test_dump_is_deterministic():
    name, M = corpus()[40]
    assert dump_matroid(M) == dump_matroid(parse_matroid(dump_matroid(M)))


def test_all_document_types_parse():
    docs = [
        {"type": "uniform", "rank": 2, "size": 4},
        {"type": "graphic", "edges": [[0, 1], [1, 2], [0, 2]]},
        {"type": "bases", "n": 3, "bases": [[0, 1], [0, 2], [1, 2]]},
        {"type": "linear", "matrix": [["1", "0", "1/2"], ["0", "1", "-3"]]},
        {"type": "dual", "inner": {"type": "uniform", "rank": 1, "size": 3}},
        {"type": "minor", "inner": {"type": "uniform", "rank": 2, "size": 4},
         "delete": [0], "contract": [3]},
        {"type": "truncation", "inner": {"type": "uniform", "rank": 3, "size": 4}, "steps": 1},
        {"type": "direct_sum", "left": {"type": "uniform", "rank": 1, "size": 2},
         "right": {"type": "uniform", "rank": 1, "size": 2}},
        {"type": "coloop_extension", "inner": {"type": "uniform", "rank": 1, "size": 2},
         "label": 5},
        {"type": "named", "id": "K4"},
    ]
    ranks = [parse_matroid(d).full_rank for d in docs]
    assert ranks == [2, 2, 2, 2, 2, 1, 2, 2, 2, 3]


@pytest.mark.parametrize("doc,location", [
    ({"type": "uniform", "rank": "2", "size": 4}, "$.rank"),
    ({"type": "uniform", "size": 4}, "$"),
    ({"type": "linear", "matrix": [[1, 0.5]]}, "$.matrix[0][1]"),
    ({"type": "dual", "inner": {"type": "wat"}}, "$.inner.type"),
    ({"type": "graphic", "edges": [[0, 1, 2]]}, "$.edges[0]"),
    ({"type": "bases", "n": 2, "bases": [[0, 5]]}, "$.bases[0]"),
    ({"type": "named", "id": "nope"}, "$"),
    ([1, 2], "$"),
])
def test_parse_errors_carry_location(doc, location):
    with pytest.raises(ParseError) as err:
        parse_matroid(doc)
    assert err.value.location == location


def test_invalid_bases_rejected():
    with pytest.raises(ParseError):
        parse_matroid({"type": "bases", "n": 4, "bases": [[0, 1], [2, 3]]})


def test_bad_json_reports_line():
    with pytest.raises(ParseError) as err:
        parse_matroid('{"type": ')
    assert err.value.location.startswith("line 1")


def test_load_from_file(tmp_matroid):
    path = tmp_matroid(json.dumps({"type": "uniform", "rank": 2, "size": 3}))
    assert load_matroid(path).full_rank == 2
