"""Permutations, Schubert and Schur polynomials, and their classes.

Permutations are in one-line notation on ``1..N``.  ``s_i`` acts on the right
by swapping positions ``i`` and ``i + 1``, so the divided difference
``d_i`` sends the Schubert polynomial of ``w`` to that of ``w s_i`` whenever
``w(i) > w(i + 1)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .chow import SymmetricClass, monomial
from .errors import ConsistencyError, DomainError
from .matroid import Matroid
from .poly import MultiPoly, PowerSeries, UniPoly
from .tutte import reliability

__all__ = [
    "Permutation",
    "Partition",
    "reduced_words",
    "schubert_poly",
    "divided_difference",
    "forward_cycle_permutation",
    "klyachko_class",
    "klyachko_word_form",
    "klyachko_polynomial_form",
    "delta_as_alpha_product",
    "schur_ones",
    "schur_ones_by_tableaux",
    "hook_lengths",
    "m_coeffs",
    "pullback_class",
    "pullback_class_by_hooks",
    "grassmann_pullback_degrees",
    "pullback_degrees_by_windows",
    "grassmann_series_side",
]


class Permutation(tuple):
    """Permutation of ``1..N`` in one-line notation."""

    def __new__(cls, values: Iterable[int]):
        values = tuple(values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise DomainError(f"{values} is not a permutation of 1..{len(values)}")
        return super().__new__(cls, values)

    @classmethod
    def identity(cls, N: int) -> "Permutation":
        return cls(range(1, N + 1))

    @classmethod
    def longest(cls, N: int) -> "Permutation":
        return cls(range(N, 0, -1))

    @classmethod
    def transposition(cls, i: int, N: int) -> "Permutation":
        return cls.identity(N).swap(i)

    @property
    def size(self) -> int:
        return len(self)

    def swap(self, i: int) -> "Permutation":
        """``self * s_i``: exchange positions i and i+1 (1-based)."""
        if not 1 <= i < len(self):
            raise DomainError(f"adjacent swap index {i} outside 1..{len(self) - 1}")
        w = list(self)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    def length(self) -> int:
        return sum(1 for a in range(len(self)) for b in range(a + 1, len(self))
                   if self[a] > self[b])

    def descents(self) -> List[int]:
        return [i for i in range(1, len(self)) if self[i - 1] > self[i]]

    def compose(self, other: "Permutation") -> "Permutation":
        """``(self o other)(k) = self(other(k))``."""
        return Permutation(self[other[k] - 1] for k in range(len(self)))


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"{parts} is not a partition")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def cells(self) -> List[Tuple[int, int]]:
        """1-based (row, column) pairs."""
        return [(i + 1, j + 1) for i, row in enumerate(self) for j in range(row)]

    def conjugate(self) -> "Partition":
        if not self:
            return Partition(())
        return Partition(sum(1 for row in self if row > j) for j in range(self[0]))


# -- reduced words and Schubert polynomials -------------------------------------

@lru_cache(maxsize=None)
def _reduced_words(w: Tuple[int, ...]) -> FrozenSet[Tuple[int, ...]]:
    perm = Permutation(w)
    desc = perm.descents()
    if not desc:
        return frozenset({()})
    out = set()
    for i in desc:
        for word in _reduced_words(tuple(perm.swap(i))):
            out.add(word + (i,))
    return frozenset(out)


def reduced_words(w: Sequence[int]) -> List[Tuple[int, ...]]:
    """Words ``(i_1..i_l)`` of minimal length with ``w = s_{i_1} ... s_{i_l}``."""
    return sorted(_reduced_words(tuple(Permutation(w))))


def divided_difference(f: MultiPoly, i: int) -> MultiPoly:
    """``(f - s_i f) / (x_i - x_{i+1})``, checked by multiplying back."""
    N = f.nvars
    if not 1 <= i < N:
        raise DomainError(f"divided difference index {i} outside 1..{N - 1}")
    out: Dict[Tuple[int, ...], object] = {}
    for e, c in f.terms.items():
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        sign = 1
        if a < b:
            a, b, sign = b, a, -1
        # (x^a y^b - x^b y^a) / (x - y) = x^b y^b sum_{k} x^{a-b-1-k} y^k
        for k in range(a - b):
            key = list(e)
            key[i - 1] = b + (a - b - 1 - k)
            key[i] = b + k
            key = tuple(key)
            out[key] = out.get(key, 0) + sign * c
    q = MultiPoly(out, N, f.prefix)
    swapped = f.swap_variables(i, i + 1)
    diff = MultiPoly.variable(i, N, f.prefix) - MultiPoly.variable(i + 1, N, f.prefix)
    if q * diff != f - swapped:
        raise ConsistencyError(f"divided difference at {i} left a remainder")
    return q


@lru_cache(maxsize=None)
def _schubert(w: Tuple[int, ...]) -> MultiPoly:
    N = len(w)
    perm = Permutation(w)
    if perm == Permutation.longest(N):
        return MultiPoly({tuple(N - 1 - k for k in range(N)): 1}, N, "x")
    # pick an ascent; w s_i is longer and d_i brings it back down to w
    i = next(k for k in range(1, N) if w[k - 1] < w[k])
    return divided_difference(_schubert(tuple(perm.swap(i))), i)


def schubert_poly(w: Sequence[int]) -> MultiPoly:
    """Schubert polynomial in ``x_1..x_N`` by divided differences from the longest word."""
    return _schubert(tuple(Permutation(w)))


def forward_cycle_permutation(S: Iterable[int], n: int) -> Permutation:
    """Product of the cycles ``(s_{i-1}+1 -> ... -> s_i -> s_{i-1}+1)`` on ``1..n+1``."""
    S = sorted(S)
    if any(not 1 <= s <= n for s in S):
        raise DomainError(f"S must lie in 1..{n}")
    bounds = [0] + S + [n + 1]
    w = []
    for a, b in zip(bounds, bounds[1:]):
        block = list(range(a + 1, b + 1))
        w.extend(block[1:] + block[:1])
    return Permutation(w)


# -- classes in the symmetric Chow ring ------------------------------------------

def _alpha_class(n: int, k: int) -> SymmetricClass:
    return SymmetricClass.delta_prime(n, {n + 1 - k})


def klyachko_word_form(w: Sequence[int], n: int) -> SymmetricClass:
    """``(1/l!) sum over reduced words of alpha_{i_1} ... alpha_{i_l}``."""
    w = Permutation(w)
    if len(w) != n + 1:
        raise DomainError(f"permutation must lie in S_{n + 1}")
    ell = w.length()
    total = SymmetricClass(n)
    for word in reduced_words(w):
        counts: Dict[int, int] = {}
        for i in word:
            counts[i] = counts.get(i, 0) + 1
        total = total + monomial(n, counts, basis="alpha")
    return total.scale(Fraction(1, factorial(ell)))


def klyachko_polynomial_form(w: Sequence[int], n: int) -> SymmetricClass:
    """Schubert polynomial at ``x_1 = alpha_1, x_i = alpha_i - alpha_{i-1}, x_{n+1} = -alpha_n``."""
    w = Permutation(w)
    if len(w) != n + 1:
        raise DomainError(f"permutation must lie in S_{n + 1}")
    f = schubert_poly(w)
    if f.total_degree > n:
        return SymmetricClass(n)
    values = []
    for i in range(1, n + 2):
        x = SymmetricClass(n)
        if i <= n:
            x = x + _alpha_class(n, i)
        if i >= 2:
            x = x - _alpha_class(n, i - 1)
        values.append(x)
    # each monomial is a product of degree-one classes
    total = SymmetricClass(n)
    for e, c in f.terms.items():
        term = SymmetricClass.unit(n).scale(c)
        for i, p in enumerate(e):
            for _ in range(p):
                term = term.multiply(values[i])
                if term.is_zero():
                    break
        total = total + term
    return total


def klyachko_class(w: Sequence[int], n: int) -> SymmetricClass:
    """Class of the Schubert variety of ``w``; both formulas must agree."""
    a = klyachko_word_form(w, n)
    b = klyachko_polynomial_form(w, n)
    if a != b:
        raise ConsistencyError(f"the two Schubert class formulas disagree for {tuple(w)}")
    return a


def delta_as_alpha_product(S: Iterable[int], n: int) -> SymmetricClass:
    """``prod_{i not in S} alpha_{n+1-i}`` divided by the factorials of the gaps of S."""
    S = sorted(S)
    bounds = [0] + S + [n + 1]
    scale = 1
    for a, b in zip(bounds, bounds[1:]):
        scale *= factorial(b - a - 1)
    counts: Dict[int, int] = {}
    for i in range(1, n + 1):
        if i not in S:
            counts[n + 1 - i] = counts.get(n + 1 - i, 0) + 1
    return monomial(n, counts, basis="alpha").scale(Fraction(1, scale))


# -- Schur polynomials at ones ----------------------------------------------------

def hook_lengths(lam: Sequence[int]) -> Dict[Tuple[int, int], int]:
    lam = Partition(lam)
    conj = lam.conjugate()
    return {(i, j): lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in lam.cells()}


def schur_ones(lam: Sequence[int], i: int) -> int:
    """Semistandard tableaux of shape ``lam`` with entries in ``1..i`` (hook-content formula)."""
    lam = Partition(lam)
    if i < 0:
        raise DomainError("i must be nonnegative")
    hooks = hook_lengths(lam)
    value = Fraction(1)
    for (r, c), h in hooks.items():
        value *= Fraction(i + c - r, h)
    if value.denominator != 1:
        raise ConsistencyError("hook-content product is not integral")
    return value.numerator


def schur_ones_by_tableaux(lam: Sequence[int], i: int) -> int:
    """Direct enumeration of semistandard tableaux; slow, for testing."""
    lam = Partition(lam)
    cells = lam.cells()
    filling: Dict[Tuple[int, int], int] = {}

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        low = 1
        if c > 1:
            low = max(low, filling[(r, c - 1)])
        if r > 1:
            low = max(low, filling[(r - 1, c)] + 1)
        total = 0
        for val in range(low, i + 1):
            filling[(r, c)] = val
            total += place(k + 1)
        filling.pop((r, c), None)
        return total

    return place(0)


def m_coeffs(lam: Sequence[int], max_widen: int = 4) -> UniPoly:
    """``sum_k m_k y^k = (1-y)^{r+1} sum_i f_lam(1^i) y^i``, a polynomial of degree <= r."""
    lam = Partition(lam)
    r = lam.size
    order = r + 2
    for _ in range(max_widen):
        series = PowerSeries([schur_ones(lam, i) for i in range(order + 1)], order)
        product = series * PowerSeries.from_poly(UniPoly([1, -1]) ** (r + 1), order)
        if all(product[k] == 0 for k in range(r + 1, order + 1)):
            return UniPoly(product.to_poly().coeffs[: r + 1])
        order *= 2
    raise ConsistencyError(f"m_k({tuple(lam)}) did not vanish beyond k = {r}")


# -- pullbacks from Grassmannians ---------------------------------------------------

def pullback_class(lam: Sequence[int], p: int, n: int) -> SymmetricClass:
    """``(1/r!) sum_k m_k prod_{i=p-k+1}^{p-k+r} alpha_i`` (alphas outside 1..n vanish)."""
    lam = Partition(lam)
    r = lam.size
    m = m_coeffs(lam)
    total = SymmetricClass(n)
    for k in range(r + 1):
        if not m[k]:
            continue
        lo, hi = p - k + 1, p - k + r
        if lo < 1 or hi > n:
            continue
        counts = {i: 1 for i in range(lo, hi + 1)}
        total = total + monomial(n, counts, basis="alpha").scale(m[k])
    return total.scale(Fraction(1, factorial(r)))


def pullback_class_by_hooks(lam: Sequence[int], p: int, n: int) -> SymmetricClass:
    """``prod_{(i,j) in lam} alpha_{p-i+j} / h_{ij}``."""
    lam = Partition(lam)
    hooks = hook_lengths(lam)
    counts: Dict[int, int] = {}
    scale = Fraction(1)
    for (i, j), h in hooks.items():
        k = p - i + j
        if not 1 <= k <= n:
            return SymmetricClass(n)
        counts[k] = counts.get(k, 0) + 1
        scale /= h
    return monomial(n, counts, basis="alpha").scale(scale)


def grassmann_series_side(M: Matroid, lam: Sequence[int]) -> UniPoly:
    """``R_M(y) * sum_{i>=1} f_lam(1^i) y^i`` truncated at degree ``n + 1``."""
    lam = Partition(lam)
    order = len(M)
    series = PowerSeries([schur_ones(lam, i) for i in range(order + 1)], order)
    return (series * PowerSeries.from_poly(reliability(M), order)).to_poly()


def pullback_degrees_by_windows(M: Matroid, lam: Sequence[int]) -> UniPoly:
    """``sum_p deg(pi_p^* P_lam) y^p`` for ``p = 0..n+1`` from one-window degrees.

    Each degree is ``sum_k m_k deg Phi_{r, n-p+k-r}``.
    """
    from .degree import phi_degree

    lam = Partition(lam)
    r = lam.size
    if not M.ground or not M.is_loopless():
        raise DomainError("pullback degrees need a loopless matroid")
    if M.full_rank != r + 1:
        raise DomainError(f"partition size {r} needs a matroid of rank {r + 1}, got {M.full_rank}")
    n = len(M) - 1
    m = m_coeffs(lam)
    degrees = []
    for p in range(n + 2):
        total = 0
        for k in range(r + 1):
            if m[k]:
                total += m[k] * phi_degree(M, n - p + k - r)
        degrees.append(total)
    return UniPoly(degrees)


def grassmann_pullback_degrees(M: Matroid, lam: Sequence[int]) -> UniPoly:
    """Pullback degrees, checked against ``R_M(y) sum_i f_lam(1^i) y^i``."""
    left = pullback_degrees_by_windows(M, lam)
    right = grassmann_series_side(M, lam)
    if left != right:
        raise ConsistencyError(f"pullback degrees {left} differ from series side {right}")
    return left
