"""Degrees of symmetrized Minkowski weights in the Chow ring of a matroid.

For a loopless matroid ``M`` on ``n + 1`` elements with rank ``r + 1`` and a
composition ``X = (m_1, ..., m_{crk+1})`` of ``n + 1``, ``g(M, X)`` is the
degree of ``delta_S`` where ``S`` is the set of partial sums
``m_1, m_1 + m_2, ...`` (the last, ``n + 1``, excluded).

``g`` is computed by a memoized recursion that splits on the largest label.
Two independent brute-force routes exist for testing:

* :func:`deg_delta_oracle` sums sliding-set counts over maximal chains of flats
  for a random generic vector;
* :func:`tutte_coeff_via_activity_chains` counts decreasing transversals of
  maximal chains, which gives the one-window degrees.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .chow import SymmetricClass, compositions, monomial
from .errors import ConsistencyError, DegenerateSampleError, DomainError
from .matroid import FlagChain, Matroid
from .poly import MultiPoly, UniPoly

__all__ = [
    "composition_to_subset",
    "subset_to_composition",
    "valid_compositions",
    "g",
    "h_poly",
    "h_poly_direct",
    "class_degree",
    "delta_degree",
    "gamma_monomial_degree",
    "phi_degree",
    "phi_degrees",
    "SlidingProblem",
    "sliding_count",
    "sample_generic_vector",
    "deg_delta_oracle",
    "tutte_coeff_via_activity_chains",
    "ORACLE_MAX_N",
]

ORACLE_MAX_N = 8
"""Largest ``n`` (ground set size minus one) the sliding oracle accepts."""


# -- compositions and subsets -------------------------------------------------

def composition_to_subset(X: Sequence[int]) -> FrozenSet[int]:
    """Partial sums of ``X`` excluding the total."""
    out = []
    s = 0
    for m in X[:-1]:
        s += m
        out.append(s)
    return frozenset(out)


def subset_to_composition(S: Iterable[int], size: int) -> Tuple[int, ...]:
    """Inverse of :func:`composition_to_subset` for a ground set of ``size`` elements."""
    S = sorted(S)
    if any(not 1 <= s < size for s in S):
        raise DomainError(f"subset {S} must lie in 1..{size - 1}")
    bounds = [0] + S + [size]
    return tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


def _check_composition(M: Matroid, X: Sequence[int]) -> Tuple[int, ...]:
    X = tuple(X)
    if any((not isinstance(m, int)) or m <= 0 for m in X):
        raise DomainError(f"composition parts must be positive integers, got {X}")
    if len(X) != M.corank + 1:
        raise DomainError(
            f"composition needs crk(M)+1 = {M.corank + 1} parts, got {len(X)}")
    if sum(X) != len(M):
        raise DomainError(f"composition must sum to |E| = {len(M)}, got {sum(X)}")
    return X


def _require_loopless(M: Matroid):
    if not M.ground:
        raise DomainError("the matroid has an empty ground set")
    if not M.is_loopless():
        raise DomainError(f"matroid has loops {sorted(M.loops())}; degrees need a loopless matroid")


def valid_compositions(M: Matroid) -> List[Tuple[int, ...]]:
    return list(compositions(len(M), M.corank + 1))


# -- the recursion --------------------------------------------------------------

@dataclass(frozen=True)
class _Split:
    """Everything the recursion needs about the largest label of one matroid."""

    top: int
    coloop: bool
    contraction: Matroid | None          # M / n (coloop case)
    deletion: Matroid | None             # M \ n
    point_quotient: Matroid | None       # (M / {n}) + coloop n, when {n} is a flat
    flat_terms: Tuple[Tuple[int, int, Matroid, Matroid], ...]
    # (crk(M|F), |F|, M|F \ n, (M/F) + coloop n)


@lru_cache(maxsize=None)
def _split(M: Matroid) -> _Split:
    n = M.max_label
    if M.is_coloop(n):
        return _Split(n, True, M.contract(n), None, None, ())
    deletion = M.delete(n)
    point_quotient = None
    if M.is_flat({n}):
        point_quotient = M.contract(n).add_coloop(n)
    terms = []
    for F in M.proper_flats():
        if n not in F or len(F) < 2:
            continue
        R = M.restrict(F)
        if R.is_coloop(n):
            continue
        terms.append((R.corank, len(F), R.delete(n), M.contract(F).add_coloop(n)))
    return _Split(n, False, None, deletion, point_quotient, tuple(terms))


@lru_cache(maxsize=None)
def _g(M: Matroid, X: Tuple[int, ...]) -> int:
    if len(M) == 1:
        return 1 if X == (1,) else 0
    sp = _split(M)
    if sp.coloop:
        total = 0
        for j, m in enumerate(X):
            if m >= 2:
                total += _g(sp.contraction, X[:j] + (m - 1,) + X[j + 1:])
        return total
    total = 0
    if X[-1] == 1:
        total += _g(sp.deletion, X[:-1])
    if sp.point_quotient is not None:
        total += _g(sp.point_quotient, X)
    for i, size, inner, outer in sp.flat_terms:
        if i < len(X) and sum(X[:i]) + 1 == size:
            left = _g(inner, X[:i])
            if left:
                total += left * _g(outer, X[i:])
    return total


def g(M: Matroid, X: Sequence[int]) -> int:
    """Degree of ``delta_S`` in ``A(M)`` for the partial-sum set ``S`` of ``X``."""
    _require_loopless(M)
    X = _check_composition(M, X)
    return _g(M, X)


def delta_degree(M: Matroid, S: Iterable[int]) -> int:
    """``deg delta_S`` for ``S`` a subset of ``1..n`` of size ``crk(M)``."""
    _require_loopless(M)
    S = frozenset(S)
    if len(S) != M.corank:
        raise DomainError(f"|S| must equal crk(M) = {M.corank}, got {len(S)}")
    return g(M, subset_to_composition(S, len(M)))


# -- the h polynomial -----------------------------------------------------------

@lru_cache(maxsize=None)
def _h(M: Matroid) -> MultiPoly:
    nv = M.corank + 1
    if len(M) == 1:
        return MultiPoly.constant(1, 1)
    sp = _split(M)
    if sp.coloop:
        zsum = sum((MultiPoly.variable(i, nv) for i in range(1, nv + 1)), MultiPoly({}, nv))
        return zsum * _h(sp.contraction)
    total = _h(sp.deletion).extend(nv)
    if sp.point_quotient is not None:
        total = total + _h(sp.point_quotient)
    for i, _size, inner, outer in sp.flat_terms:
        total = total + _h(inner).extend(nv) * _h(outer).shift_variables(i)
    return total


def h_poly(M: Matroid) -> MultiPoly:
    """``h_M = sum_X g(M, X) prod z_j^{m_j - 1}`` by its own recursion."""
    _require_loopless(M)
    return _h(M)


def h_poly_direct(M: Matroid) -> MultiPoly:
    """The same polynomial assembled term by term from :func:`g`."""
    _require_loopless(M)
    nv = M.corank + 1
    terms = {}
    for X in valid_compositions(M):
        value = _g(M, X)
        if value:
            terms[tuple(m - 1 for m in X)] = value
    return MultiPoly(terms, nv)


# -- degrees of classes ---------------------------------------------------------

def class_degree(M: Matroid, c: SymmetricClass) -> int:
    """Degree in ``A(M)`` of a class written in the ``delta'`` basis.

    ``c`` must live on ``n = |E| - 1`` and have codimension ``rk(M) - 1``.
    """
    _require_loopless(M)
    n = len(M) - 1
    if c.n != n:
        raise DomainError(f"class lives on n={c.n}, matroid needs n={n}")
    if c.is_zero():
        return 0
    r = M.full_rank - 1
    if c.codim != r:
        raise DomainError(f"class has codimension {c.codim}, need rk(M)-1 = {r}")
    full = frozenset(range(1, n + 1))
    total = Fraction(0)
    for T, coef in c.terms.items():
        X = subset_to_composition(full - T, n + 1)
        total += coef * _g(M, X)
    if total.denominator != 1:
        raise ConsistencyError(f"degree {total} is not an integer")
    return total.numerator


def gamma_monomial_degree(M: Matroid, exponents, basis: str = "gamma") -> int:
    """Degree in ``A(M)`` of a product of gamma (or alpha) classes."""
    return class_degree(M, monomial(len(M) - 1, exponents, basis))


def phi_degree(M: Matroid, k: int) -> int:
    """Degree of the one-window class ``Phi_{r,k} = delta'_{[k+1, k+r]}``."""
    _require_loopless(M)
    crk = M.corank
    if not 0 <= k <= crk:
        return 0
    X = (1,) * k + (M.full_rank,) + (1,) * (crk - k)
    return _g(M, X)


def phi_degrees(M: Matroid) -> UniPoly:
    """``sum_k deg Phi_{r,k} y^k``."""
    return UniPoly([phi_degree(M, k) for k in range(M.corank + 1)])


# -- sliding sets oracle ------------------------------------------------------------

@dataclass(frozen=True)
class SlidingProblem:
    """One sliding-sets instance.

    ``v[j]`` is the starting point of element ``j`` (elements are ``0..n``),
    ``chain`` the flats ``F_1 < ... < F_r`` and ``S`` the subset of ``1..n``
    whose consecutive gaps give the group multiplicities.
    """

    v: Tuple[Fraction, ...]
    chain: FlagChain
    S: FrozenSet[int]

    @property
    def n(self) -> int:
        return len(self.v) - 1

    def parts(self) -> List[FrozenSet[int]]:
        full = frozenset(range(self.n + 1))
        flats = list(self.chain) + [full]
        out = []
        prev = frozenset()
        for F in flats:
            out.append(F - prev)
            prev = F
        return out

    def multiplicities(self) -> List[int]:
        s = [0] + sorted(self.S) + [self.n + 1]
        return [s[i + 1] - s[i] for i in range(len(s) - 1)]


class _Potentials:
    """Union-find over unknowns with offsets: value(a) = value(root(a)) + off[a]."""

    def __init__(self):
        self.parent: Dict[tuple, tuple] = {}
        self.off: Dict[tuple, Fraction] = {}

    def copy(self):
        other = _Potentials()
        other.parent = dict(self.parent)
        other.off = dict(self.off)
        return other

    def find(self, a):
        if a not in self.parent:
            self.parent[a] = a
            self.off[a] = Fraction(0)
            return a, Fraction(0)
        total = Fraction(0)
        node = a
        while self.parent[node] != node:
            total += self.off[node]
            node = self.parent[node]
        return node, total

    def relate(self, a, b, d) -> bool | None:
        """Impose value(a) - value(b) = d.

        Returns True on a new link, False if the constraint contradicts earlier
        ones, and None when it closes a consistent cycle (a coincidence).
        """
        ra, oa = self.find(a)
        rb, ob = self.find(b)
        if ra == rb:
            return None if oa - ob == d else False
        # value(a) = value(ra) + oa, value(b) = value(rb) + ob
        # value(ra) - value(rb) = d - oa + ob
        self.parent[ra] = rb
        self.off[ra] = d - oa + ob
        return True


def sliding_count(p: SlidingProblem) -> int:
    """Number of slides ``t_1 > ... > t_{r+1} = 0`` realizing the multiplicities of ``S``.

    Raises :class:`DegenerateSampleError` if ``v`` produces a coincidence that a
    generic vector would not.
    """
    v = [Fraction(x) for x in p.v]
    if len(set(v)) != len(v):
        raise DomainError("entries of v must be pairwise distinct")
    n = p.n
    if any(not 1 <= s <= n for s in p.S):
        raise DomainError(f"S must lie in 1..{n}")
    r = len(p.chain)
    if len(p.S) != n - r:
        raise DomainError(f"|S| must be n - r = {n - r} for a chain of length {r}")
    parts = p.parts()
    if any(not part for part in parts):
        raise DomainError("chain flats must be strictly increasing")
    mult = p.multiplicities()
    m = len(mult)
    # biggest parts first: they are the most constrained
    order = sorted(range(r + 1), key=lambda i: -len(parts[i]))
    sorted_parts = {i: sorted(parts[i], key=lambda j: -v[j]) for i in order}
    count = 0

    def assign(idx: int, load: List[int], pot: _Potentials):
        nonlocal count
        if idx == len(order):
            count += _accept(pot, r, m)
            return
        i = order[idx]
        elems = sorted_parts[i]
        for groups in combinations(range(m), len(elems)):
            if any(load[g_] >= mult[g_] for g_ in groups):
                continue
            trial = pot.copy()
            ok = True
            for j, g_ in zip(elems, groups):
                res = trial.relate(("x", g_), ("t", i), v[j])
                if res is False:
                    ok = False
                    break
                if res is None:
                    raise DegenerateSampleError("a cycle of slides closed up exactly")
            if not ok:
                continue
            new_load = list(load)
            for g_ in groups:
                new_load[g_] += 1
            assign(idx + 1, new_load, trial)

    assign(0, [0] * m, _Potentials())
    return count


def _accept(pot: _Potentials, r: int, m: int) -> int:
    base_root, base_off = pot.find(("t", r))
    values = {}
    for key in [("t", i) for i in range(r + 1)] + [("x", g_) for g_ in range(m)]:
        root, off = pot.find(key)
        if root != base_root:
            raise ConsistencyError("slide system did not connect every unknown")
        values[key] = off - base_off   # so that t_{r+1} = 0
    ts = [values[("t", i)] for i in range(r + 1)]
    xs = [values[("x", g_)] for g_ in range(m)]
    for seq in (ts, xs):
        for a, b in zip(seq, seq[1:]):
            if a == b:
                raise DegenerateSampleError("two unknowns coincide")
    if all(a > b for a, b in zip(ts, ts[1:])) and all(a > b for a, b in zip(xs, xs[1:])):
        return 1
    return 0


def sample_generic_vector(size: int, rng: random.Random) -> Tuple[Fraction, ...]:
    """Strictly decreasing rationals with large independent random numerators."""
    denom = rng.randrange(10 ** 6, 10 ** 7)
    nums = set()
    while len(nums) < size:
        nums.add(rng.randrange(10 ** 15))
    return tuple(Fraction(a, denom) for a in sorted(nums, reverse=True))


def _relabel(M: Matroid):
    labels = sorted(M.ground)
    index = {e: i for i, e in enumerate(labels)}
    return index


def _oracle_once(M: Matroid, S: FrozenSet[int], v) -> int:
    index = _relabel(M)
    total = 0
    for chain in M.maximal_chains():
        mapped = tuple(frozenset(index[e] for e in F) for F in chain)
        total += sliding_count(SlidingProblem(v, mapped, S))
    return total


def deg_delta_oracle(M: Matroid, S: Iterable[int], seed: int | None = 0,
                     attempts: int = 5) -> int:
    """``deg delta_S`` as a sum of sliding-set counts over maximal chains.

    Two independent generic vectors are drawn; their answers must agree.
    Elements are identified with ``0..n`` in increasing label order.
    """
    _require_loopless(M)
    n = len(M) - 1
    if n > ORACLE_MAX_N:
        raise DomainError(f"sliding oracle is limited to n <= {ORACLE_MAX_N}, got n = {n}")
    S = frozenset(S)
    if len(S) != M.corank or any(not 1 <= s <= n for s in S):
        raise DomainError(f"S must be a subset of 1..{n} of size crk(M) = {M.corank}")
    rng = random.Random(seed)
    results = []
    failures = 0
    while len(results) < 2:
        v = sample_generic_vector(n + 1, rng)
        try:
            results.append(_oracle_once(M, S, v))
        except DegenerateSampleError:
            failures += 1
            if failures >= attempts:
                raise
    if results[0] != results[1]:
        raise ConsistencyError(f"sliding counts depend on v: {results}")
    return results[0]


# -- decreasing transversals of chains ---------------------------------------------

def tutte_coeff_via_activity_chains(M: Matroid, k: int) -> int:
    """Count tuples ``x_1 > ... > x_{r+1}`` with ``x_i`` in ``F_i - F_{i-1}``.

    Summed over maximal chains, counting only tuples for which the number of
    smaller elements sharing a part with their ``x_i`` totals ``k``.
    """
    _require_loopless(M)
    if k < 0:
        return 0
    ground = M.ground
    total = 0
    for chain in M.maximal_chains():
        parts = []
        prev = frozenset()
        for F in list(chain) + [ground]:
            parts.append(sorted(F - prev))
            prev = F
        total += _decreasing_transversals(parts, k)
    return total


def _decreasing_transversals(parts: List[List[int]], k: int) -> int:
    def walk(i: int, bound, remaining: int) -> int:
        if i == len(parts):
            return 1 if remaining == 0 else 0
        out = 0
        for rank_in_part, x in enumerate(parts[i]):
            if bound is not None and x >= bound:
                break
            if rank_in_part > remaining:
                break
            out += walk(i + 1, x, remaining - rank_in_part)
        return out

    return walk(0, None, k)
