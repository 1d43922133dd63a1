"""Tutte polynomial and its one-variable specializations.

The production route is memoized deletion-contraction.  Two slow routes are
kept alongside for cross-checking: the corank-nullity subset expansion and
the internal/external activity sum over bases.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import FrozenSet, List

from .errors import ConsistencyError, DomainError
from .matroid import Matroid, powerset
from .poly import BiPoly, UniPoly

__all__ = [
    "ActivityRecord",
    "tutte",
    "tutte_corank_nullity",
    "tutte_by_activities",
    "activities",
    "tutte_one_y",
    "h_vector",
    "h_vector_from_independent_sets",
    "char_poly",
    "reduced_char_poly",
    "reliability",
    "truncation_identity",
    "truncation_identity_direct",
]


@dataclass(frozen=True)
class ActivityRecord:
    basis: FrozenSet[int]
    internally_active: FrozenSet[int]
    externally_active: FrozenSet[int]


def tutte(M: Matroid) -> BiPoly:
    """``T_M(x, y)`` by deletion-contraction on the largest splittable label."""
    if not M.ground:
        raise DomainError("the Tutte polynomial needs a non-empty ground set")
    return _tutte(M)


@lru_cache(maxsize=None)
def _tutte(M: Matroid) -> BiPoly:
    loops = M.loops()
    coloops = M.coloops()
    factor = BiPoly({(len(coloops), len(loops)): 1})
    rest = M.ground - loops - coloops
    if not rest:
        return factor
    if loops or coloops:
        core = M.delete(loops).contract(coloops)
        return factor * _tutte(core)
    e = max(rest)
    return _tutte(M.delete(e)) + _tutte(M.contract(e))


def tutte_corank_nullity(M: Matroid) -> BiPoly:
    """``sum_S (x-1)^{rk E - rk S} (y-1)^{|S| - rk S}``, summed over all subsets."""
    if not M.ground:
        raise DomainError("the Tutte polynomial needs a non-empty ground set")
    counts = {}
    full = M.full_rank
    for S in powerset(M.ground):
        r = M.rank(S)
        key = (full - r, len(S) - r)
        counts[key] = counts.get(key, 0) + 1
    x1 = BiPoly.x() - 1
    y1 = BiPoly.y() - 1
    total = BiPoly()
    for (a, b), c in counts.items():
        total = total + (x1 ** a) * (y1 ** b) * c
    return total


def activities(M: Matroid, B) -> ActivityRecord:
    """Internal and external activity of basis ``B`` with respect to label order.

    ``j`` outside ``B`` is externally active when no smaller ``i`` in ``B`` has
    ``B - i + j`` a basis; ``i`` in ``B`` is internally active when no smaller
    ``j`` outside ``B`` has ``B - i + j`` a basis.
    """
    B = frozenset(B)
    if not M.is_basis(B):
        raise DomainError(f"{sorted(B)} is not a basis")
    outside = M.ground - B

    def swap_ok(i, j):
        return M.is_basis((B - {i}) | {j})

    ex = frozenset(j for j in outside if not any(swap_ok(i, j) for i in B if i < j))
    inn = frozenset(i for i in B if not any(swap_ok(i, j) for j in outside if j < i))
    return ActivityRecord(B, inn, ex)


def tutte_by_activities(M: Matroid) -> BiPoly:
    if not M.ground:
        raise DomainError("the Tutte polynomial needs a non-empty ground set")
    total = BiPoly()
    for B in M.bases():
        rec = activities(M, B)
        total = total + BiPoly({(len(rec.internally_active), len(rec.externally_active)): 1})
    return total


def tutte_one_y(M: Matroid) -> UniPoly:
    """``T_M(1, y)``."""
    return tutte(M).at_x(1)


def h_vector(M: Matroid) -> List[int]:
    """``(h_0, ..., h_rk)`` with ``sum h_i x^{rk - i} = T_M(x, 1)``.

    Raises :class:`ConsistencyError` if the independence-complex route disagrees.
    """
    r = M.full_rank
    t = tutte(M).at_y(1)
    h = [t[r - i] for i in range(r + 1)]
    other = h_vector_from_independent_sets(M)
    if h != other:
        raise ConsistencyError(f"h-vector mismatch: {h} from T(x,1), {other} from f-vector")
    return h


def h_vector_from_independent_sets(M: Matroid) -> List[int]:
    """h-vector via ``sum f_i (x-1)^{rk-i} = sum h_i x^{rk-i}``."""
    r = M.full_rank
    f = [0] * (r + 1)
    for A in M.independent_sets():
        f[len(A)] += 1
    # coefficient of x^{r-i} in sum_j f_j (x-1)^{r-j}
    h = []
    for i in range(r + 1):
        d = r - i
        h.append(sum(f[j] * comb(r - j, d) * (-1) ** (r - j - d) for j in range(i + 1)))
    return h


def char_poly(M: Matroid) -> UniPoly:
    """``chi_M(z) = (-1)^{rk M} T_M(1 - z, 0)``."""
    T = tutte(M)
    one_minus_z = UniPoly([1, -1], "z")
    chi = T(one_minus_z, UniPoly([0], "z"))
    if not isinstance(chi, UniPoly):
        chi = UniPoly([chi], "z")
    return UniPoly(chi.coeffs, "z") * (-1) ** M.full_rank


def reduced_char_poly(M: Matroid) -> UniPoly:
    """``chi_M(z) / (z - 1)``; requires M loopless."""
    if not M.is_loopless():
        raise DomainError("the reduced characteristic polynomial needs a loopless matroid")
    return char_poly(M).divide_exact(UniPoly([-1, 1], "z"))


def reliability(M: Matroid) -> UniPoly:
    """``R_M(y) = (1 - y)^{rk} y^{crk} T_M(1, 1/y)``."""
    t = tutte_one_y(M)
    crk = M.corank
    if t.degree > crk:
        raise ConsistencyError("T(1,y) has y-degree above the corank")
    flipped = UniPoly([t[crk - j] for j in range(crk + 1)])
    return flipped * UniPoly([1, -1]) ** M.full_rank


def truncation_identity(M: Matroid, i: int) -> UniPoly:
    """``[x^i] T_M(1 + x, y)`` computed from truncations.

    Uses ``T_{tau^i M}(1,y) - (y-1) T_{tau^{i-1} M}(1,y)``; the second term is
    dropped at ``i = 0``.  The result is checked against direct expansion.
    """
    if not 0 <= i <= M.full_rank:
        raise DomainError(f"need 0 <= i <= {M.full_rank}, got {i}")
    value = tutte_one_y(M.truncate(i)) if i else tutte_one_y(M)
    if i:
        value = value - UniPoly([-1, 1]) * tutte_one_y(M.truncate(i - 1) if i > 1 else M)
    direct = truncation_identity_direct(M, i)
    if value != direct:
        raise ConsistencyError(f"truncation identity fails at i={i}: {value} vs {direct}")
    return value


def truncation_identity_direct(M: Matroid, i: int) -> UniPoly:
    """``[x^i] T_M(1 + x, y)`` by expanding the bivariate polynomial."""
    return tutte(M).shift_x(1).x_coefficient(i)
