"""The symmetric part of the Chow ring of the permutohedral variety.

A :class:`SymmetricClass` is a rational combination of the classes
``delta'_S`` for ``S`` a subset of ``{1, ..., n}``; ``delta'_S`` has degree
``|S|`` and ``delta'_{1..n}`` is the point class.  Multiplication by the
generators ``gamma_i = delta'_{i}`` follows two closed-form rules depending on
whether ``i`` already lies in ``S``.  The other indexing in use is
``delta_S = delta'_{[n] - S}`` and ``alpha_k = gamma_{n+1-k}``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

from .errors import ConsistencyError, DomainError
from .poly import UniPoly, normalize

__all__ = [
    "SymmetricClass",
    "maximal_intervals",
    "interval_around",
    "monomial",
    "mixed_eulerian",
    "mixed_eulerian_poly",
    "mixed_eulerian_generating",
    "compositions",
    "weak_compositions",
]

Subset = FrozenSet[int]


def interval_around(S: Subset, i: int) -> Tuple[int, int]:
    """Maximal run ``[a, b]`` of consecutive integers in ``S`` containing ``i``."""
    a = i
    while a - 1 in S:
        a -= 1
    b = i
    while b + 1 in S:
        b += 1
    return a, b


def maximal_intervals(S: Iterable[int]) -> List[Tuple[int, int]]:
    out = []
    for s in sorted(S):
        if out and out[-1][1] == s - 1:
            out[-1] = (out[-1][0], s)
        else:
            out.append((s, s))
    return out


class SymmetricClass:
    """Immutable rational combination of ``delta'_S`` classes of one degree."""

    __slots__ = ("n", "terms", "_codim")

    def __init__(self, n: int, terms: Mapping[Iterable[int], object] | None = None):
        if n < 0:
            raise DomainError("ambient parameter n must be nonnegative")
        self.n = n
        clean: Dict[Subset, object] = {}
        codim = None
        for S, c in (terms or {}).items():
            S = frozenset(S)
            if not c:
                continue
            if any(not 1 <= s <= n for s in S):
                raise DomainError(f"subset {sorted(S)} is not inside 1..{n}")
            if codim is None:
                codim = len(S)
            elif len(S) != codim:
                raise DomainError("a SymmetricClass must be homogeneous")
            c = clean.get(S, 0) + c
            if c:
                clean[S] = normalize(c)
            else:
                clean.pop(S, None)
        self.terms = clean
        self._codim = codim if clean else None

    @classmethod
    def unit(cls, n: int) -> "SymmetricClass":
        return cls(n, {frozenset(): 1})

    @classmethod
    def delta_prime(cls, n: int, S: Iterable[int], coeff=1) -> "SymmetricClass":
        return cls(n, {frozenset(S): coeff})

    @classmethod
    def delta(cls, n: int, S: Iterable[int], coeff=1) -> "SymmetricClass":
        """``delta_S``, i.e. ``delta'`` of the complement of S."""
        S = frozenset(S)
        return cls(n, {frozenset(range(1, n + 1)) - S: coeff})

    @property
    def codim(self) -> int | None:
        """Common ``|S|`` of the terms, or None for the zero class."""
        return self._codim

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, S: Iterable[int]):
        return self.terms.get(frozenset(S), 0)

    def delta_terms(self) -> Dict[Subset, object]:
        """Terms re-indexed by ``delta_S`` (complements)."""
        full = frozenset(range(1, self.n + 1))
        return {full - S: c for S, c in self.terms.items()}

    # -- linear structure ----------------------------------------------------

    def _check(self, other: "SymmetricClass"):
        if other.n != self.n:
            raise DomainError(f"ambient mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other: "SymmetricClass") -> "SymmetricClass":
        self._check(other)
        out = dict(self.terms)
        for S, c in other.terms.items():
            out[S] = out.get(S, 0) + c
        return SymmetricClass(self.n, out)

    def __neg__(self):
        return SymmetricClass(self.n, {S: -c for S, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymmetricClass":
        return SymmetricClass(self.n, {S: c * v for S, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, SymmetricClass):
            return self.multiply(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SymmetricClass):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- multiplication ------------------------------------------------------

    def gamma_multiply(self, i: int) -> "SymmetricClass":
        """Multiply by ``gamma_i``."""
        if not 1 <= i <= self.n:
            raise DomainError(f"gamma index {i} outside 1..{self.n}")
        out: Dict[Subset, object] = {}
        for S, c in self.terms.items():
            for T, k in _gamma_on_basis(self.n, S, i):
                out[T] = out.get(T, 0) + c * k
        return SymmetricClass(self.n, out)

    def alpha_multiply(self, k: int) -> "SymmetricClass":
        if not 1 <= k <= self.n:
            raise DomainError(f"alpha index {k} outside 1..{self.n}")
        return self.gamma_multiply(self.n + 1 - k)

    def multiply(self, other: "SymmetricClass") -> "SymmetricClass":
        """Product of two classes, writing each ``delta'_T`` as a gamma monomial.

        ``delta'_T = prod_{i in T} gamma_i / prod_I |I|!`` over the maximal
        intervals ``I`` of ``T``.
        """
        self._check(other)
        total = SymmetricClass(self.n)
        for T, c in other.terms.items():
            piece = self
            for i in sorted(T):
                piece = piece.gamma_multiply(i)
            scale = 1
            for a, b in maximal_intervals(T):
                scale *= factorial(b - a + 1)
            total = total + piece.scale(Fraction(c) / scale)
        return total

    def degree(self):
        """Coefficient of the point class ``delta'_{1..n}``."""
        if self.is_zero():
            return 0
        if self._codim != self.n:
            raise DomainError(
                f"degree needs a top-degree class (|S| = {self.n}), got |S| = {self._codim}")
        return self.terms.get(frozenset(range(1, self.n + 1)), 0)

    def is_one_window(self) -> bool:
        """True when every term is ``delta'`` of an interval."""
        return all(len(maximal_intervals(S)) <= 1 for S in self.terms)

    def __repr__(self):
        body = ", ".join(f"{sorted(S)}: {c}" for S, c in
                         sorted(self.terms.items(), key=lambda kv: sorted(kv[0])))
        return f"SymmetricClass(n={self.n}, {{{body}}})"


def _gamma_on_basis(n: int, S: Subset, i: int) -> List[Tuple[Subset, object]]:
    if i < 1 or i > n:
        return []
    if i not in S:
        T = S | {i}
        a, b = interval_around(T, i)
        coef = factorial(b - a + 1) // (factorial(i - a) * factorial(b - i))
        return [(T, coef)]
    a, b = interval_around(S, i)
    out = []
    # a-1 and b+1 are outside S, so each inner call takes the first rule
    if a - 1 >= 1:
        for T, k in _gamma_on_basis(n, S, a - 1):
            out.append((T, Fraction(b + 1 - i, b - a + 2) * k))
    if b + 1 <= n:
        for T, k in _gamma_on_basis(n, S, b + 1):
            out.append((T, Fraction(i - a + 1, b - a + 2) * k))
    return out


def monomial(n: int, exponents: Mapping[int, int] | Sequence[int], basis: str = "gamma",
             order: Sequence[int] | None = None) -> SymmetricClass:
    """``prod gamma_i^{e_i}`` (or alphas) expanded in the ``delta'`` basis.

    ``exponents`` is a mapping index -> multiplicity or a sequence whose entry
    ``j`` is the exponent of index ``j + 1``.  Factors are applied smallest
    gamma index first unless an explicit ``order`` of gamma indices is given.
    """
    if basis not in ("gamma", "alpha"):
        raise DomainError("basis must be 'gamma' or 'alpha'")
    if not isinstance(exponents, Mapping):
        exponents = {j + 1: e for j, e in enumerate(exponents)}
    factors = []
    for k, e in exponents.items():
        if e < 0:
            raise DomainError("exponents must be nonnegative")
        if e and not 1 <= k <= n:
            raise DomainError(f"index {k} outside 1..{n}")
        g = k if basis == "gamma" else n + 1 - k
        factors.extend([g] * e)
    if order is None:
        factors.sort()
    else:
        if sorted(order) != sorted(factors):
            raise DomainError("order must be a permutation of the factors")
        factors = list(order)
    c = SymmetricClass.unit(n)
    for g in factors:
        c = c.gamma_multiply(g)
        if c.is_zero():
            break
    return c


def _as_int(value, what: str) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise ConsistencyError(f"{what} is not integral: {value}")
    return value.numerator


def mixed_eulerian(c: Sequence[int]) -> int:
    """``A_{c_1..c_n}`` as the degree of ``prod alpha_i^{c_i}`` with n = len(c)."""
    c = tuple(c)
    n = len(c)
    if n == 0 or any(x < 0 for x in c) or sum(c) != n:
        raise DomainError(f"need nonnegative entries summing to their count, got {c}")
    value = _as_int(monomial(n, c, basis="alpha").degree(), f"A_{c}")
    if value <= 0:
        raise ConsistencyError(f"A_{c} = {value} is not positive")
    return value


def mixed_eulerian_poly(a: Sequence[int]) -> UniPoly:
    """``A_{a}(y) = sum_{i=0}^{r-k} A_{0^i, a, 0^{r-k-i}} y^i`` with r = sum(a)."""
    a = tuple(a)
    if not a or any(x <= 0 for x in a):
        raise DomainError(f"entries must be strictly positive, got {a}")
    r, k = sum(a), len(a)
    return UniPoly([mixed_eulerian((0,) * i + a + (0,) * (r - k - i))
                    for i in range(r - k + 1)])


def mixed_eulerian_generating(a: Sequence[int]) -> UniPoly:
    """``(1-y)^{r+1} sum_{i>=0} (i+1)^{a_1}...(i+k)^{a_k} y^i`` truncated at degree r-k.

    Independent of the ring arithmetic; used to cross-check the recursion.
    """
    a = tuple(a)
    r, k = sum(a), len(a)
    order = r - k
    terms = []
    for i in range(order + 1):
        v = 1
        for j, e in enumerate(a, start=1):
            v *= (i + j) ** e
        terms.append(v)
    product = UniPoly(terms) * UniPoly([1, -1]) ** (r + 1)
    return UniPoly(product.coeffs[: order + 1])


def compositions(total: int, parts: int | None = None):
    """Compositions of ``total`` into positive parts (all lengths if parts is None)."""
    if parts is None:
        for p in range(1, total + 1):
            yield from compositions(total, p)
        return
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[j + 1] - bounds[j] for j in range(parts))


def weak_compositions(total: int, parts: int):
    """Sequences of ``parts`` nonnegative integers summing to ``total``."""
    for c in compositions(total + parts, parts):
        yield tuple(x - 1 for x in c)
