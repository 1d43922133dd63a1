"""The fixed set of matroids every theorem check runs over."""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Dict, List, Tuple

from .errors import DomainError
from .matroid import BasisMatroid, GraphicMatroid, LinearMatroid, Matroid, UniformMatroid

__all__ = ["fano", "example_b2", "two_parallel_pairs", "corpus", "corpus_names", "named"]

FANO_LINES = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]


def fano() -> Matroid:
    """Fano plane: bases are the non-collinear triples."""
    from itertools import combinations

    lines = {frozenset(l) for l in FANO_LINES}
    bases = [B for B in combinations(range(7), 3) if frozenset(B) not in lines]
    return BasisMatroid(bases, ground=range(7))


def example_b2() -> Matroid:
    """Columns e1, e2, e3, e1+e2+e3, e1+e2."""
    return LinearMatroid([[1, 0, 0, 1, 1],
                          [0, 1, 0, 1, 1],
                          [0, 0, 1, 1, 0]])


def two_parallel_pairs() -> Matroid:
    """``U_{1,2} (+) U_{1,2}`` on labels 0..3."""
    return UniformMatroid(1, 2).direct_sum(UniformMatroid(1, 2))


def _base_entries() -> List[Tuple[str, Callable[[], Matroid]]]:
    out: List[Tuple[str, Callable[[], Matroid]]] = []
    for m in range(1, 8):
        for k in range(m + 1):
            out.append((f"U{k},{m}", lambda k=k, m=m: UniformMatroid(k, m)))
    out += [
        ("K4", lambda: GraphicMatroid.complete(4)),
        ("K5", lambda: GraphicMatroid.complete(5)),
        ("fano", fano),
        ("exampleB2", example_b2),
        ("U1,2+U1,2", two_parallel_pairs),
    ]
    return out


@lru_cache(maxsize=None)
def _table() -> Dict[str, Callable[[], Matroid]]:
    table: Dict[str, Callable[[], Matroid]] = {}
    for name, make in _base_entries():
        table[name] = make
        table[f"dual({name})"] = lambda make=make: make().dual()
    return table


def corpus_names() -> List[str]:
    return list(_table())


@lru_cache(maxsize=None)
def named(name: str) -> Matroid:
    try:
        return _table()[name]()
    except KeyError:
        raise DomainError(f"unknown corpus matroid {name!r}") from None


def corpus() -> List[Tuple[str, Matroid]]:
    """``(name, matroid)`` pairs in a fixed order."""
    return [(name, named(name)) for name in corpus_names()]
