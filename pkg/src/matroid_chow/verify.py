"""Theorem checkers producing exact, serializable reports."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from .chow import compositions, mixed_eulerian_poly, monomial, weak_compositions
from .degree import class_degree, phi_degrees
from .errors import DomainError
from .matroid import Matroid
from .poly import UniPoly
from .tutte import tutte_one_y

__all__ = [
    "CheckReport",
    "check_main_identity",
    "check_phi_tutte",
    "check_strong_logconcavity",
    "check_truncation_lc",
    "check_trunccor",
    "main_identity_sides",
    "verify_matroid",
    "verify_corpus",
    "THEOREMS",
    "sort_reports",
]


def _plain(value):
    if isinstance(value, UniPoly):
        return value.to_list()
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in sorted(value.items())}
    return value


@dataclass(frozen=True)
class CheckReport:
    theorem: str
    matroid: str
    params: Tuple[Tuple[str, Any], ...]
    left: Any
    right: Any
    passed: bool
    slack: int | None = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem,
            "matroid": self.matroid,
            "params": {k: _plain(v) for k, v in self.params},
            "left": _plain(self.left),
            "right": _plain(self.right),
            "passed": self.passed,
            "slack": self.slack,
        }

    def sort_key(self):
        return (self.theorem, self.matroid, repr(_plain(dict(self.params))))

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = ", ".join(f"{k}={_plain(v)}" for k, v in self.params)
        extra = "" if self.slack is None else f" slack={self.slack}"
        return f"{status} {self.theorem} [{self.matroid}] ({params}){extra}"


def sort_reports(reports: Iterable[CheckReport]) -> List[CheckReport]:
    return sorted(reports, key=CheckReport.sort_key)


def _identity(theorem, name, params, left, right) -> CheckReport:
    return CheckReport(theorem, name, tuple(params), left, right, left == right)


def _inequality(theorem, name, params, left, right, slack) -> CheckReport:
    return CheckReport(theorem, name, tuple(params), left, right, slack >= 0, slack)


def _loopless(M: Matroid, what: str):
    if not M.ground or not M.is_loopless():
        raise DomainError(f"{what} needs a loopless matroid with a non-empty ground set")


# -- identities ------------------------------------------------------------------

def main_identity_sides(M: Matroid, comp: Sequence[int]) -> Tuple[UniPoly, UniPoly]:
    """Both sides of ``sum_i deg(gamma_{1+i}^{r_1}...gamma_{k+i}^{r_k}) y^i = T_M(1,y) A_r(y)``."""
    _loopless(M, "the mixed degree identity")
    comp = tuple(comp)
    r = M.full_rank - 1
    if not comp or any(c <= 0 for c in comp) or sum(comp) != r:
        raise DomainError(f"need a composition of rk(M)-1 = {r} into positive parts, got {comp}")
    n = len(M) - 1
    k = len(comp)
    left = []
    for i in range(n - k + 1):
        exps = {i + 1 + j: c for j, c in enumerate(comp)}
        left.append(class_degree(M, monomial(n, exps)))
    right = tutte_one_y(M) * mixed_eulerian_poly(comp)
    return UniPoly(left), right


def check_main_identity(M: Matroid, comp: Sequence[int], name: str = "M") -> CheckReport:
    left, right = main_identity_sides(M, comp)
    return _identity("main-identity", name, [("composition", tuple(comp))], left, right)


def check_phi_tutte(M: Matroid, name: str = "M") -> CheckReport:
    """One-window degrees against ``T_M(1, y)``."""
    _loopless(M, "the one-window identity")
    return _identity("phi-tutte", name, [], phi_degrees(M), tutte_one_y(M))


def check_trunccor(M: Matroid, c: int, exponents: Sequence[int], name: str = "M") -> CheckReport:
    """``deg_M(alpha_1^c prod alpha_i^{a_i}) = deg_{tau^c M}(prod alpha_i^{a_i})``.

    ``exponents`` lists ``a_1, ..., a_n`` and must sum to ``rk(M) - 1 - c``.
    """
    _loopless(M, "the truncation identity for alpha_1 powers")
    n = len(M) - 1
    a = tuple(exponents)
    r = M.full_rank - 1
    if len(a) != n or any(x < 0 for x in a) or sum(a) != r - c:
        raise DomainError(f"need {n} nonnegative exponents summing to {r - c}")
    if not 0 <= c <= r:
        raise DomainError(f"need 0 <= c <= {r}")
    with_power = list(a)
    if n >= 1:
        with_power[0] += c
    left = class_degree(M, monomial(n, with_power, basis="alpha"))
    right = class_degree(M.truncate(c), monomial(n, a, basis="alpha")) if c else left
    return _identity("trunccor", name, [("c", c), ("exponents", a)], left, right)


# -- inequalities ---------------------------------------------------------------------

def _triples(coeffs: Sequence[int]) -> List[Tuple[int, int, int, int]]:
    """``(k, a, b, c)`` for every coefficient ``b = coeffs[k]`` with zero padding."""
    padded = [0] + list(coeffs) + [0]
    return [(k, padded[k], padded[k + 1], padded[k + 2]) for k in range(len(coeffs))]


def check_strong_logconcavity(M: Matroid, name: str = "M") -> List[CheckReport]:
    """Slack ``r(b^2 - ac) + (b - a)(b - c)`` for consecutive coefficients of ``T_M(1, y)``.

    Also reports ``b^2 - ac`` and, for rank two, ``2b - a - c``.
    """
    if M.full_rank < 1:
        raise DomainError("log-concavity checks need rank at least one")
    coeffs = list(tutte_one_y(M))
    r = M.full_rank - 1
    reports = []
    for k, a, b, c in _triples(coeffs):
        params = [("index", k), ("r", r)]
        slack = r * (b * b - a * c) + (b - a) * (b - c)
        reports.append(_inequality("strong-logconcavity", name, params, (a, b, c), 0, slack))
        reports.append(_inequality("logconcavity", name, params, a * c, b * b, b * b - a * c))
        if r == 1:
            reports.append(_inequality("rank-two-midpoint", name, params, a + c, 2 * b,
                                       2 * b - a - c))
    return reports


def check_truncation_lc(M: Matroid, ell: int, name: str = "M") -> CheckReport:
    """``i -> [y^ell] T_{tau^i M}(1, y)`` is log-concave for ``i = 1..rk-2``; slack is the minimum."""
    if ell < 0:
        raise DomainError("ell must be nonnegative")
    rk = M.full_rank
    seq = []
    for i in range(rk):
        N = M.truncate(i) if i else M
        seq.append(tutte_one_y(N)[ell])
    slacks = [seq[i] ** 2 - seq[i - 1] * seq[i + 1] for i in range(1, rk - 1)]
    slack = min(slacks) if slacks else 0
    return _inequality("truncation-lc", name, [("ell", ell)], seq, slacks, slack)


# -- drivers -----------------------------------------------------------------------------

THEOREMS = ("main-identity", "phi-tutte", "strong-logconcavity", "truncation-lc", "trunccor")


def _trunccor_exponents(n: int, total: int, limit: int) -> List[Tuple[int, ...]]:
    out = []
    for a in weak_compositions(total, n):
        out.append(a)
        if len(out) >= limit:
            break
    return out


def verify_matroid(M: Matroid, name: str = "M", theorems: Iterable[str] | None = None,
                   trunccor_limit: int = 30) -> List[CheckReport]:
    """Every applicable check on one matroid; inapplicable ones are skipped."""
    wanted = set(THEOREMS if theorems is None else theorems)
    unknown = wanted - set(THEOREMS)
    if unknown:
        raise DomainError(f"unknown theorem ids {sorted(unknown)}; choose from {list(THEOREMS)}")
    loopless = bool(M.ground) and M.is_loopless()
    r = M.full_rank - 1
    reports: List[CheckReport] = []
    if "main-identity" in wanted and loopless and r >= 1:
        for comp in compositions(r):
            reports.append(check_main_identity(M, comp, name))
    if "phi-tutte" in wanted and loopless:
        reports.append(check_phi_tutte(M, name))
    if "strong-logconcavity" in wanted and M.full_rank >= 1:
        reports.extend(check_strong_logconcavity(M, name))
    if "truncation-lc" in wanted:
        for ell in (0, 1, 2):
            reports.append(check_truncation_lc(M, ell, name))
    if "trunccor" in wanted and loopless:
        n = len(M) - 1
        for c in (1, 2):
            if c <= r:
                for a in _trunccor_exponents(n, r - c, trunccor_limit):
                    reports.append(check_trunccor(M, c, a, name))
    return sort_reports(reports)


def verify_corpus(theorems: Iterable[str] | None = None) -> List[CheckReport]:
    from .corpus import corpus

    reports: List[CheckReport] = []
    for name, M in corpus():
        reports.extend(verify_matroid(M, name, theorems))
    return sort_reports(reports)
