"""Matroids given by a rank oracle.

Every algorithm in the package talks to a matroid only through
:meth:`Matroid.rank`; the concrete classes below differ only in how they
answer that question.  Element labels are integers and are never renumbered
by minors, so order-sensitive constructions (activities, splitting on the
largest element) see the labels of the matroid they started from.

Matroids are immutable and compare/hash by a structural ``key``.  Two
matroids with equal keys have the same rank function; the converse does not
hold (no isomorphism testing is attempted).
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from .errors import DomainError

__all__ = [
    "Matroid",
    "BasisMatroid",
    "UniformMatroid",
    "GraphicMatroid",
    "LinearMatroid",
    "MinorMatroid",
    "DualMatroid",
    "TruncatedMatroid",
    "DirectSumMatroid",
    "ColoopExtension",
    "FlagChain",
    "rank_axiom_violations",
    "same_rank_function",
    "powerset",
]

ElementSet = FrozenSet[int]
FlagChain = Tuple[ElementSet, ...]
"""A strictly increasing tuple of proper nonempty flats ``(F_1, ..., F_c)``.

``F_0 = {}`` and ``F_{c+1} = E`` are implied and never stored.
"""


def powerset(items: Iterable[int]) -> Iterator[ElementSet]:
    items = sorted(items)
    for k in range(len(items) + 1):
        for c in combinations(items, k):
            yield frozenset(c)


class Matroid:
    """Abstract rank-oracle matroid on a finite set of integer labels."""

    def __init__(self, ground: Iterable[int]):
        self._ground: ElementSet = frozenset(ground)
        self._rank_cache: Dict[ElementSet, int] = {}

    # -- the oracle --------------------------------------------------------

    @property
    def ground(self) -> ElementSet:
        return self._ground

    def _rank(self, A: ElementSet) -> int:
        raise NotImplementedError

    def _r(self, A: ElementSet) -> int:
        """Cached rank without validation; ``A`` must be a frozenset of ground elements."""
        try:
            return self._rank_cache[A]
        except KeyError:
            value = self._rank_cache[A] = self._rank(A)
            return value

    def rank(self, A: Iterable[int] | None = None) -> int:
        """Rank of ``A`` (the whole ground set when omitted)."""
        if A is None:
            return self._r(self._ground)
        A = frozenset(A)
        if not A <= self._ground:
            raise DomainError(f"elements {sorted(A - self._ground)} are not in the ground set")
        return self._r(A)

    @property
    def full_rank(self) -> int:
        return self._r(self._ground)

    @property
    def corank(self) -> int:
        return len(self._ground) - self.full_rank

    def __len__(self):
        return len(self._ground)

    @property
    def max_label(self) -> int:
        return max(self._ground)

    # -- identity ----------------------------------------------------------

    def _key(self) -> tuple:
        raise NotImplementedError

    @cached_property
    def key(self) -> tuple:
        return self._key()

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"{type(self).__name__}(ground={sorted(self._ground)}, rank={self.full_rank})"

    # -- elementary predicates --------------------------------------------

    def _check_element(self, e: int):
        if e not in self._ground:
            raise DomainError(f"element {e} is not in the ground set {sorted(self._ground)}")

    def is_loop(self, e: int) -> bool:
        self._check_element(e)
        return self._r(frozenset((e,))) == 0

    def is_coloop(self, e: int) -> bool:
        self._check_element(e)
        return self._r(self._ground - {e}) < self.full_rank

    def loops(self) -> ElementSet:
        return frozenset(e for e in self._ground if self._r(frozenset((e,))) == 0)

    def coloops(self) -> ElementSet:
        full = self.full_rank
        return frozenset(e for e in self._ground if self._r(self._ground - {e}) < full)

    def is_loopless(self) -> bool:
        return not self.loops()

    def is_independent(self, A: Iterable[int]) -> bool:
        A = frozenset(A)
        return self.rank(A) == len(A)

    def is_basis(self, A: Iterable[int]) -> bool:
        A = frozenset(A)
        return len(A) == self.full_rank and self.rank(A) == len(A)

    def bases(self) -> List[ElementSet]:
        r = self.full_rank
        return [frozenset(B) for B in combinations(sorted(self._ground), r)
                if self._r(frozenset(B)) == r]

    def independent_sets(self) -> List[ElementSet]:
        return [A for A in powerset(self._ground) if self._r(A) == len(A)]

    # -- closure and flats ---------------------------------------------------

    def closure(self, A: Iterable[int]) -> ElementSet:
        A = frozenset(A)
        r = self.rank(A)
        return A | frozenset(e for e in self._ground - A if self._r(A | {e}) == r)

    def is_flat(self, A: Iterable[int]) -> bool:
        A = frozenset(A)
        return self.closure(A) == A

    @cached_property
    def _flats_by_rank(self) -> Tuple[Tuple[ElementSet, ...], ...]:
        bottom = self.closure(frozenset())
        levels = [[bottom]]
        while True:
            seen = set()
            nxt = []
            for F in levels[-1]:
                for e in sorted(self._ground - F):
                    G = self.closure(F | {e})
                    if G not in seen:
                        seen.add(G)
                        nxt.append(G)
            if not nxt:
                break
            levels.append(sorted(nxt, key=sorted))
        return tuple(tuple(level) for level in levels)

    def flats(self) -> List[ElementSet]:
        """Every flat exactly once, ordered by rank and then lexicographically."""
        return [F for level in self._flats_by_rank for F in level]

    def flats_of_rank(self, k: int) -> List[ElementSet]:
        levels = self._flats_by_rank
        return list(levels[k]) if 0 <= k < len(levels) else []

    def proper_flats(self) -> List[ElementSet]:
        """Flats other than the empty set and the ground set."""
        return [F for F in self.flats() if F and F != self._ground]

    def chains(self, c: int) -> Iterator[FlagChain]:
        """Stream every chain ``F_1 < ... < F_c`` of proper nonempty flats."""
        if not self.is_loopless():
            raise DomainError("chains of flats are only defined for loopless matroids")
        if c < 0:
            raise DomainError("chain length must be nonnegative")
        proper = self.proper_flats()
        above = {F: [G for G in proper if F < G] for F in proper}

        def extend(prefix: tuple, options: list):
            if len(prefix) == c:
                yield prefix
                return
            for F in options:
                yield from extend(prefix + (F,), above[F])

        yield from extend((), proper)

    def maximal_chains(self) -> Iterator[FlagChain]:
        """Chains of length ``rk - 1``, i.e. the maximal cones of the Bergman fan."""
        return self.chains(self.full_rank - 1)

    # -- constructions -------------------------------------------------------

    def delete(self, X) -> "Matroid":
        X = _as_set(X)
        for e in X:
            self._check_element(e)
        return MinorMatroid(self, deleted=X)

    def contract(self, X) -> "Matroid":
        X = _as_set(X)
        for e in X:
            self._check_element(e)
        return MinorMatroid(self, contracted=X)

    def restrict(self, A) -> "Matroid":
        A = _as_set(A)
        for e in A:
            self._check_element(e)
        return MinorMatroid(self, deleted=self._ground - A)

    def quotient(self, F) -> "Matroid":
        """``M / F``, usually with F a flat."""
        return self.contract(F)

    def dual(self) -> "Matroid":
        return DualMatroid(self)

    def truncate(self, steps: int = 1) -> "Matroid":
        return TruncatedMatroid(self, steps)

    def direct_sum(self, other: "Matroid") -> "Matroid":
        return DirectSumMatroid(self, other)

    def add_coloop(self, label: int) -> "Matroid":
        return ColoopExtension(self, label)

    # -- serialization -------------------------------------------------------

    def to_document(self) -> dict:
        raise NotImplementedError(f"{type(self).__name__} has no document form")


def _as_set(X) -> ElementSet:
    if isinstance(X, int):
        return frozenset((X,))
    return frozenset(X)


class BasisMatroid(Matroid):
    """Matroid given by its list of bases."""

    def __init__(self, bases: Iterable[Iterable[int]], ground: Iterable[int] | None = None,
                 validate: bool = True):
        bases = frozenset(frozenset(B) for B in bases)
        if not bases:
            raise DomainError("a matroid needs at least one basis")
        union = frozenset().union(*bases)
        super().__init__(union if ground is None else ground)
        if not union <= self._ground:
            raise DomainError("bases mention elements outside the ground set")
        sizes = {len(B) for B in bases}
        if len(sizes) != 1:
            raise DomainError(f"bases have different sizes {sorted(sizes)}")
        self._bases = bases
        self._size = sizes.pop()
        if validate:
            self._check_exchange()

    def _check_exchange(self):
        for B1 in self._bases:
            for B2 in self._bases:
                for x in B1 - B2:
                    if not any((B1 - {x}) | {y} in self._bases for y in B2 - B1):
                        raise DomainError(
                            f"basis exchange fails for {sorted(B1)}, {sorted(B2)} at {x}")

    def _rank(self, A):
        best = 0
        for B in self._bases:
            k = len(A & B)
            if k > best:
                best = k
                if best == self._size:
                    break
        return best

    def bases(self):
        return sorted(self._bases, key=sorted)

    def _key(self):
        return ("bases", tuple(sorted(self._ground)),
                tuple(sorted(tuple(sorted(B)) for B in self._bases)))

    def to_document(self):
        return {"type": "bases", "n": len(self._ground),
                "ground": sorted(self._ground),
                "bases": [sorted(B) for B in self.bases()]}


class UniformMatroid(Matroid):
    """``U_{rank,size}`` on ``{0, ..., size-1}``."""

    def __init__(self, rank: int, size: int):
        if not 0 <= rank <= size:
            raise DomainError(f"uniform matroid needs 0 <= rank <= size, got {rank}, {size}")
        super().__init__(range(size))
        self.r = rank
        self.size = size

    def _rank(self, A):
        return min(len(A), self.r)

    def _key(self):
        return ("uniform", self.r, self.size)

    def to_document(self):
        return {"type": "uniform", "rank": self.r, "size": self.size}

    def __repr__(self):
        return f"UniformMatroid({self.r}, {self.size})"


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; element ``i`` is ``edges[i]``."""

    def __init__(self, edges: Sequence[Tuple[object, object]]):
        self.edges = tuple((u, v) for u, v in edges)
        super().__init__(range(len(self.edges)))

    def _rank(self, A):
        parent: Dict[object, object] = {}

        def find(a):
            parent.setdefault(a, a)
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        r = 0
        for i in A:
            u, v = self.edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                r += 1
        return r

    @classmethod
    def complete(cls, k: int) -> "GraphicMatroid":
        return cls(list(combinations(range(k), 2)))

    def _key(self):
        return ("graphic", tuple((repr(u), repr(v)) for u, v in self.edges))

    def to_document(self):
        return {"type": "graphic", "edges": [list(e) for e in self.edges]}


class LinearMatroid(Matroid):
    """Column matroid of a matrix over the rationals; element ``j`` is column ``j``."""

    def __init__(self, matrix: Sequence[Sequence]):
        rows = tuple(tuple(Fraction(c) for c in row) for row in matrix)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise DomainError("matrix rows have different lengths")
        self.matrix = rows
        ncols = widths.pop() if widths else 0
        super().__init__(range(ncols))

    def _rank(self, A):
        cols = sorted(A)
        if not cols:
            return 0
        m = [[row[j] for j in cols] for row in self.matrix]
        rank = 0
        ncols = len(cols)
        for c in range(ncols):
            pivot = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
            if pivot is None:
                continue
            m[rank], m[pivot] = m[pivot], m[rank]
            p = m[rank][c]
            for i in range(rank + 1, len(m)):
                if m[i][c]:
                    f = m[i][c] / p
                    m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
            rank += 1
            if rank == len(m):
                break
        return rank

    def _key(self):
        return ("linear", self.matrix)

    def to_document(self):
        return {"type": "linear",
                "matrix": [[str(c) for c in row] for row in self.matrix]}


class MinorMatroid(Matroid):
    """``base \\ deleted / contracted``, stored lazily.

    Nested minors are flattened onto the innermost non-minor base, so the key
    ``(base, surviving labels, contracted labels)`` is canonical.
    """

    def __init__(self, base: Matroid, deleted=frozenset(), contracted=frozenset()):
        deleted = frozenset(deleted)
        contracted = frozenset(contracted)
        if deleted & contracted:
            raise DomainError("an element cannot be both deleted and contracted")
        if isinstance(base, MinorMatroid):
            deleted = deleted | base.deleted
            contracted = contracted | base.contracted
            base = base.base
        missing = (deleted | contracted) - base.ground
        if missing:
            raise DomainError(f"elements {sorted(missing)} are not in the ground set")
        self.base = base
        self.deleted = deleted
        self.contracted = contracted
        super().__init__(base.ground - deleted - contracted)
        self._offset = base._r(contracted)

    def _rank(self, A):
        if not self.contracted:
            return self.base._r(A)
        return self.base._r(A | self.contracted) - self._offset

    def _key(self):
        return ("minor", self.base.key, tuple(sorted(self._ground)),
                tuple(sorted(self.contracted)))

    def to_document(self):
        return {"type": "minor", "inner": self.base.to_document(),
                "delete": sorted(self.deleted), "contract": sorted(self.contracted)}

    def __repr__(self):
        return (f"MinorMatroid({self.base!r}, deleted={sorted(self.deleted)}, "
                f"contracted={sorted(self.contracted)})")


class DualMatroid(Matroid):
    """``M*`` with ``rk*(A) = |A| + rk(E - A) - rk(E)``."""

    def __init__(self, base: Matroid):
        self.base = base
        super().__init__(base.ground)
        self._base_rank = base.full_rank

    def _rank(self, A):
        return len(A) + self.base._r(self._ground - A) - self._base_rank

    def dual(self):
        return self.base

    def _key(self):
        return ("dual", self.base.key)

    def to_document(self):
        return {"type": "dual", "inner": self.base.to_document()}

    def __repr__(self):
        return f"DualMatroid({self.base!r})"


class TruncatedMatroid(Matroid):
    """``tau^steps M``: rank capped at ``rk(M) - steps``."""

    def __init__(self, base: Matroid, steps: int):
        if isinstance(base, TruncatedMatroid):
            steps += base.steps
            base = base.base
        if steps < 0 or steps > base.full_rank:
            raise DomainError(
                f"cannot truncate a rank {base.full_rank} matroid by {steps} steps")
        self.base = base
        self.steps = steps
        super().__init__(base.ground)
        self._cap = base.full_rank - steps

    def _rank(self, A):
        return min(self.base._r(A), self._cap)

    def _key(self):
        return ("truncation", self.base.key, self.steps)

    def to_document(self):
        return {"type": "truncation", "inner": self.base.to_document(), "steps": self.steps}

    def __repr__(self):
        return f"TruncatedMatroid({self.base!r}, {self.steps})"


class DirectSumMatroid(Matroid):
    """``left (+) right``; right's labels are shifted past left's largest label."""

    def __init__(self, left: Matroid, right: Matroid):
        self.left = left
        self.right = right
        self.offset = (max(left.ground) + 1) if left.ground else 0
        shifted = frozenset(e + self.offset for e in right.ground)
        super().__init__(left.ground | shifted)
        self._left_ground = left.ground

    def _rank(self, A):
        a = A & self._left_ground
        b = frozenset(e - self.offset for e in A - self._left_ground)
        return self.left._r(a) + self.right._r(b)

    def _key(self):
        return ("direct_sum", self.left.key, self.right.key)

    def to_document(self):
        return {"type": "direct_sum", "left": self.left.to_document(),
                "right": self.right.to_document()}

    def __repr__(self):
        return f"DirectSumMatroid({self.left!r}, {self.right!r})"


class ColoopExtension(Matroid):
    """``M`` with a fresh label added as a coloop: ``rk(A + l) = rk(A) + 1``."""

    def __init__(self, base: Matroid, label: int):
        if label in base.ground:
            raise DomainError(f"label {label} already belongs to the ground set")
        self.base = base
        self.label = label
        super().__init__(base.ground | {label})

    def _rank(self, A):
        if self.label in A:
            return self.base._r(A - {self.label}) + 1
        return self.base._r(A)

    def contract(self, X):
        X = _as_set(X)
        if X == {self.label}:
            return self.base
        return super().contract(X)

    def _key(self):
        return ("coloop", self.base.key, self.label)

    def to_document(self):
        return {"type": "coloop_extension", "inner": self.base.to_document(),
                "label": self.label}

    def __repr__(self):
        return f"ColoopExtension({self.base!r}, {self.label})"


def rank_axiom_violations(M: Matroid, limit: int = 8) -> List[str]:
    """Exhaustively test normalization, unit increase, monotonicity and submodularity.

    Returns a list of human-readable violations (empty when all axioms hold).
    Matroids with more than ``limit`` elements are not checked.
    """
    if len(M) > limit:
        return []
    problems = []
    subsets = list(powerset(M.ground))
    r = {A: M._r(A) for A in subsets}
    if r[frozenset()] != 0:
        problems.append("rank of the empty set is not 0")
    for A in subsets:
        for e in M.ground - A:
            d = r[A | {e}] - r[A]
            if d not in (0, 1):
                problems.append(f"adding {e} to {sorted(A)} changes rank by {d}")
    for A in subsets:
        for B in subsets:
            if r[A | B] + r[A & B] > r[A] + r[B]:
                problems.append(f"submodularity fails for {sorted(A)}, {sorted(B)}")
                if len(problems) > 20:
                    return problems
    return problems


def same_rank_function(M: Matroid, N: Matroid) -> bool:
    if M.ground != N.ground:
        return False
    return all(M._r(A) == N._r(A) for A in powerset(M.ground))
