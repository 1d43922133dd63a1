"""Exact polynomial containers over Python ints and Fractions.

Four small immutable types cover everything the library needs:

* :class:`UniPoly`   dense univariate polynomial, ascending coefficients
* :class:`BiPoly`    sparse bivariate polynomial in (x, y)
* :class:`MultiPoly` sparse multivariate polynomial with a fixed variable count
* :class:`PowerSeries` a univariate series known up to a truncation order

Coefficients are whatever exact numbers the caller supplies (int or
Fraction); nothing here ever produces a float.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .errors import ConsistencyError, DomainError

__all__ = [
    "UniPoly",
    "BiPoly",
    "MultiPoly",
    "PowerSeries",
    "geometric_expand",
    "normalize",
]


def normalize(c):
    """Demote an integral Fraction to int so equality and printing stay tidy."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _trim(coeffs: Iterable) -> tuple:
    out = [normalize(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _fmt_coeff(c, mono: str) -> str:
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    if isinstance(c, Fraction):
        return f"({c})*{mono}"
    return f"{c}*{mono}"


def _join_terms(terms: list) -> str:
    if not terms:
        return "0"
    s = terms[0]
    for t in terms[1:]:
        s += " - " + t[1:] if t.startswith("-") else " + " + t
    return s


class UniPoly:
    """Dense univariate polynomial; ``coeffs[k]`` is the coefficient of ``var**k``.

    The zero polynomial has degree -1.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "y"):
        self.coeffs = _trim(coeffs)
        self.var = var

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "y") -> "UniPoly":
        return cls([0] * k + [c], var)

    @classmethod
    def constant(cls, c, var: str = "y") -> "UniPoly":
        return cls([c], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        if k < 0 or k >= len(self.coeffs):
            return 0
        return self.coeffs[k]

    coefficient = __getitem__

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, Rational):
            return UniPoly([other], self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly((self[k] + other[k] for k in range(n)), self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly((-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return UniPoly((), self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative power of a polynomial")
        result = UniPoly([1], self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, value):
        """Horner evaluation; ``value`` may be a number or another polynomial."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift(self, k: int) -> "UniPoly":
        """Multiply by ``var**k`` (negative k drops low terms, which must vanish)."""
        if k >= 0:
            return UniPoly([0] * k + list(self.coeffs), self.var)
        if any(self.coeffs[: -k]):
            raise DomainError("shift would drop nonzero coefficients")
        return UniPoly(self.coeffs[-k:], self.var)

    def reversed(self, degree: int) -> "UniPoly":
        """Return ``var**degree * p(1/var)``."""
        if self.degree > degree:
            raise DomainError("reversal degree below polynomial degree")
        padded = list(self.coeffs) + [0] * (degree + 1 - len(self.coeffs))
        return UniPoly(reversed(padded), self.var)

    def divide_exact(self, divisor: "UniPoly") -> "UniPoly":
        """Polynomial long division that must leave no remainder."""
        if divisor.is_zero():
            raise DomainError("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        lead = Fraction(divisor.coeffs[-1])
        dd = divisor.degree
        q = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] / lead
            q[k - dd] = c
            if c:
                for j, d in enumerate(divisor.coeffs):
                    rem[k - dd + j] -= c * d
        if any(rem):
            raise ConsistencyError(f"{self} is not divisible by {divisor}")
        return UniPoly(q, self.var)

    def map(self, f) -> "UniPoly":
        return UniPoly((f(c) for c in self.coeffs), self.var)

    def to_list(self) -> list:
        return [str(c) if isinstance(c, Fraction) else c for c in self.coeffs]

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            terms.append(_fmt_coeff(c, mono))
        return _join_terms(terms)


class BiPoly:
    """Sparse polynomial in two variables; ``terms[(i, j)]`` multiplies ``x**i * y**j``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tuple[int, int], object] | None = None):
        clean = {}
        for key, c in (terms or {}).items():
            c = normalize(c)
            if c:
                clean[tuple(key)] = c
        self.terms: Dict[Tuple[int, int], object] = clean

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence]) -> "BiPoly":
        return cls({(i, j): c for i, row in enumerate(rows) for j, c in enumerate(row)})

    def is_zero(self):
        return not self.terms

    def __getitem__(self, key: Tuple[int, int]):
        return self.terms.get(tuple(key), 0)

    coefficient = __getitem__

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, Rational):
            return BiPoly({(0, 0): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Tuple[int, int], object] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = BiPoly.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def x_degree(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def y_degree(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def __call__(self, x, y):
        """Evaluate at numbers or polynomials (anything supporting + and *)."""
        total = 0
        for (i, j), c in self.terms.items():
            total = total + c * (x ** i) * (y ** j)
        return total

    def at_x(self, value, var: str = "y") -> UniPoly:
        """Substitute a number for x, leaving a polynomial in y."""
        out = [0] * (self.y_degree + 1)
        for (i, j), c in self.terms.items():
            out[j] += c * value ** i
        return UniPoly(out, var)

    def at_y(self, value, var: str = "x") -> UniPoly:
        """Substitute a number for y, leaving a polynomial in x."""
        out = [0] * (self.x_degree + 1)
        for (i, j), c in self.terms.items():
            out[i] += c * value ** j
        return UniPoly(out, var)

    def swap(self) -> "BiPoly":
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def shift_x(self, a) -> "BiPoly":
        """Return p(x + a, y)."""
        out: Dict[Tuple[int, int], object] = {}
        for (i, j), c in self.terms.items():
            for k in range(i + 1):
                key = (k, j)
                out[key] = out.get(key, 0) + c * comb(i, k) * a ** (i - k)
        return BiPoly(out)

    def x_coefficient(self, i: int, var: str = "y") -> UniPoly:
        """``[x^i] p`` as a polynomial in y."""
        out = [0] * (self.y_degree + 1)
        for (a, j), c in self.terms.items():
            if a == i:
                out[j] += c
        return UniPoly(out, var)

    def to_matrix(self) -> list:
        rows = [[0] * (self.y_degree + 1) for _ in range(self.x_degree + 1)]
        for (i, j), c in self.terms.items():
            rows[i][j] = c
        return rows

    def __repr__(self):
        return f"BiPoly({self.to_matrix()!r})"

    def __str__(self):
        terms = []
        for (i, j) in sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0])):
            c = self.terms[(i, j)]
            parts = []
            if i:
                parts.append("x" if i == 1 else f"x^{i}")
            if j:
                parts.append("y" if j == 1 else f"y^{j}")
            terms.append(_fmt_coeff(c, "*".join(parts)))
        return _join_terms(terms)


class MultiPoly:
    """Sparse polynomial in ``nvars`` variables named ``prefix1 .. prefixN``."""

    __slots__ = ("terms", "nvars", "prefix")

    def __init__(self, terms: Mapping[Tuple[int, ...], object] | None = None,
                 nvars: int = 0, prefix: str = "z"):
        clean = {}
        for key, c in (terms or {}).items():
            key = tuple(key)
            if len(key) != nvars:
                raise DomainError(f"exponent vector {key} does not have {nvars} entries")
            c = normalize(c)
            if c:
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        self.terms: Dict[Tuple[int, ...], object] = clean
        self.nvars = nvars
        self.prefix = prefix

    @classmethod
    def constant(cls, c, nvars: int, prefix: str = "z") -> "MultiPoly":
        return cls({(0,) * nvars: c}, nvars, prefix)

    @classmethod
    def variable(cls, i: int, nvars: int, prefix: str = "z") -> "MultiPoly":
        """The variable with 1-based index ``i``."""
        if not 1 <= i <= nvars:
            raise DomainError(f"variable index {i} outside 1..{nvars}")
        e = [0] * nvars
        e[i - 1] = 1
        return cls({tuple(e): 1}, nvars, prefix)

    def is_zero(self):
        return not self.terms

    def coefficient(self, exponents: Sequence[int]):
        return self.terms.get(tuple(exponents), 0)

    __getitem__ = coefficient

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise DomainError(
                    f"incompatible variable sets: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, Rational):
            return MultiPoly.constant(other, self.nvars, self.prefix)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return MultiPoly(out, self.nvars, self.prefix)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({k: -c for k, c in self.terms.items()}, self.nvars, self.prefix)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Tuple[int, ...], object] = {}
        for e1, a in self.terms.items():
            for e2, b in other.terms.items():
                k = tuple(p + q for p, q in zip(e1, e2))
                out[k] = out.get(k, 0) + a * b
        return MultiPoly(out, self.nvars, self.prefix)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = MultiPoly.constant(other, self.nvars, self.prefix)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def extend(self, nvars: int) -> "MultiPoly":
        """View the polynomial in more variables (new ones appended, unused)."""
        if nvars < self.nvars:
            if any(any(e[nvars:]) for e in self.terms):
                raise DomainError("cannot drop variables that occur")
            return MultiPoly({e[:nvars]: c for e, c in self.terms.items()}, nvars, self.prefix)
        pad = (0,) * (nvars - self.nvars)
        return MultiPoly({e + pad: c for e, c in self.terms.items()}, nvars, self.prefix)

    def shift_variables(self, k: int = 1) -> "MultiPoly":
        """Replace every ``z_i`` by ``z_{i+k}``; the variable count grows by k."""
        pad = (0,) * k
        return MultiPoly({pad + e: c for e, c in self.terms.items()},
                         self.nvars + k, self.prefix)

    def swap_variables(self, i: int, j: int) -> "MultiPoly":
        """Exchange the 1-based variables i and j."""
        def sw(e):
            e = list(e)
            e[i - 1], e[j - 1] = e[j - 1], e[i - 1]
            return tuple(e)
        return MultiPoly({sw(e): c for e, c in self.terms.items()}, self.nvars, self.prefix)

    def substitute(self, i: int, value) -> "MultiPoly":
        """Set the 1-based variable i to a number (the variable stays, unused)."""
        out: Dict[Tuple[int, ...], object] = {}
        for e, c in self.terms.items():
            k = list(e)
            p = k[i - 1]
            k[i - 1] = 0
            k = tuple(k)
            out[k] = out.get(k, 0) + c * value ** p
        return MultiPoly(out, self.nvars, self.prefix)

    def evaluate(self, values: Sequence, one):
        """Evaluate in any commutative ring: ``values[i]`` replaces variable i+1.

        ``one`` is the multiplicative unit of that ring.  Powers are cached so
        each distinct ``values[i]**p`` is formed once.
        """
        cache: Dict[Tuple[int, int], object] = {}

        def power(i, p):
            if p == 0:
                return one
            key = (i, p)
            if key not in cache:
                cache[key] = power(i, p - 1) * values[i]
            return cache[key]

        total = None
        for e, c in sorted(self.terms.items()):
            term = one * c
            for i, p in enumerate(e):
                if p:
                    term = term * power(i, p)
            total = term if total is None else total + term
        return one * 0 if total is None else total

    def to_pairs(self) -> list:
        return [[list(e), str(c) if isinstance(c, Fraction) else c]
                for e, c in sorted(self.terms.items(), reverse=True)]

    def __repr__(self):
        return f"MultiPoly({dict(self.terms)!r}, nvars={self.nvars})"

    def __str__(self):
        terms = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), [-p for p in e])):
            parts = []
            for i, p in enumerate(e):
                if p:
                    v = f"{self.prefix}{i + 1}"
                    parts.append(v if p == 1 else f"{v}^{p}")
            terms.append(_fmt_coeff(self.terms[e], "*".join(parts)))
        return _join_terms(terms)


class PowerSeries:
    """A univariate power series known exactly through ``var**order``."""

    __slots__ = ("poly", "order")

    def __init__(self, coeffs: Iterable, order: int, var: str = "y"):
        if order < 0:
            raise DomainError("truncation order must be nonnegative")
        coeffs = list(coeffs)[: order + 1]
        self.poly = UniPoly(coeffs, var)
        self.order = order

    @classmethod
    def from_poly(cls, p: UniPoly, order: int) -> "PowerSeries":
        return cls(p.coeffs, order, p.var)

    def __getitem__(self, k: int):
        if k > self.order:
            raise DomainError(f"coefficient {k} lies beyond truncation order {self.order}")
        return self.poly[k]

    coefficient = __getitem__

    def _coerce(self, other):
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, UniPoly):
            return PowerSeries.from_poly(other, self.order)
        if isinstance(other, Rational):
            return PowerSeries([other], self.order, self.poly.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        return PowerSeries((self.poly + other.poly).coeffs, order, self.poly.var)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries((-self.poly).coeffs, self.order, self.poly.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        a = self.poly.coeffs[: order + 1]
        b = other.poly.coeffs[: order + 1]
        out = [0] * (order + 1)
        for i, p in enumerate(a):
            if p:
                for j, q in enumerate(b[: order + 1 - i]):
                    out[i + j] += p * q
        return PowerSeries(out, order, self.poly.var)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return all(self[k] == other[k] for k in range(order + 1))

    def __hash__(self):
        return hash((self.poly, self.order))

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise DomainError("cannot raise the truncation order")
        return PowerSeries(self.poly.coeffs, order, self.poly.var)

    def to_poly(self) -> UniPoly:
        return self.poly

    def __repr__(self):
        return f"PowerSeries({list(self.poly.coeffs)!r}, order={self.order})"

    def __str__(self):
        return f"{self.poly} + O({self.poly.var}^{self.order + 1})"


def geometric_expand(numerator: UniPoly, multiplicity: int, order: int) -> PowerSeries:
    """Expand ``numerator / (1 - y)**multiplicity`` through ``y**order``.

    Uses ``1/(1-y)^m = sum_i C(i+m-1, m-1) y^i``; m = 0 returns the numerator.
    """
    if order < 0 or multiplicity < 0:
        raise DomainError("order and multiplicity must be nonnegative")
    if multiplicity == 0:
        kernel = [1] + [0] * order
    else:
        kernel = [comb(i + multiplicity - 1, multiplicity - 1) for i in range(order + 1)]
    out = [0] * (order + 1)
    for i, a in enumerate(numerator.coeffs[: order + 1]):
        if a:
            for j in range(order + 1 - i):
                out[i + j] += a * kernel[j]
    return PowerSeries(out, order, numerator.var)
