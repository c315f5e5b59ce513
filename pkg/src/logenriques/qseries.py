"""Exact Laurent series in q with exponents on the grid (1/24)Z.

A :class:`QSeries` stores finitely many integer coefficients together with a
truncation order.  Coefficients at or beyond the truncation order are
*unknown*, never zero, and every operation shrinks the valid range
accordingly.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Mapping, Union

DENOM = 24

Exponent = Union[int, Fraction, str, "QExponent"]


class QSeriesError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class QExponent:
    """An exponent ``numerator_24 / 24``."""

    numerator_24: int

    @classmethod
    def of(cls, value: Exponent) -> "QExponent":
        if isinstance(value, QExponent):
            return value
        frac = Fraction(value)
        scaled = frac * DENOM
        if scaled.denominator != 1:
            raise QSeriesError(f"exponent {frac} is not on the 1/24 grid")
        return cls(int(scaled))

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator_24, DENOM)

    def __str__(self) -> str:
        return str(self.value)


def _n24(value: Exponent) -> int:
    return QExponent.of(value).numerator_24


@dataclass(frozen=True)
class QSeries:
    """Truncated Laurent series ``sum c_e q^(e/24)`` with ``e < order24``."""

    terms: Mapping[int, int] = field(default_factory=dict)
    order24: int = 0

    def __post_init__(self):
        clean = {e: c for e, c in self.terms.items() if c != 0 and e < self.order24}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def from_exponents(cls, terms: Mapping[Exponent, int], order: Exponent) -> "QSeries":
        return cls({_n24(e): int(c) for e, c in terms.items()}, _n24(order))

    @classmethod
    def one(cls, order: Exponent) -> "QSeries":
        return cls({0: 1}, _n24(order))

    @property
    def truncation_order(self) -> QExponent:
        return QExponent(self.order24)

    @property
    def valuation24(self) -> int:
        # an all-unknown-or-zero series is conservatively "zero up to order"
        return min(self.terms) if self.terms else self.order24

    def coeff(self, exponent: Exponent) -> int:
        e = _n24(exponent)
        if e >= self.order24:
            raise QSeriesError(f"beyond truncation: {Fraction(e, DENOM)} >= {self.truncation_order}")
        return self.terms.get(e, 0)

    def items(self) -> list[tuple[Fraction, int]]:
        return [(Fraction(e, DENOM), self.terms[e]) for e in sorted(self.terms)]

    def __mul__(self, other: "QSeries") -> "QSeries":
        return mul(self, other)

    def __neg__(self) -> "QSeries":
        return QSeries({e: -c for e, c in self.terms.items()}, self.order24)

    def scale(self, factor: int) -> "QSeries":
        return QSeries({e: factor * c for e, c in self.terms.items()}, self.order24)

    def __str__(self) -> str:
        parts = []
        for exp, c in self.items():
            parts.append(f"{c}*q^({exp})" if exp else str(c))
        parts.append(f"O(q^({self.truncation_order}))")
        return " + ".join(parts)


def truncate(a: QSeries, order: Exponent) -> QSeries:
    t = _n24(order)
    if t > a.order24:
        raise QSeriesError("cannot truncate beyond the known range")
    return QSeries(a.terms, t)


def mul(a: QSeries, b: QSeries) -> QSeries:
    order = min(a.order24 + b.valuation24, b.order24 + a.valuation24)
    out: dict[int, int] = {}
    bt = sorted(b.terms.items())
    for ea, ca in a.terms.items():
        for eb, cb in bt:
            e = ea + eb
            if e >= order:
                break
            out[e] = out.get(e, 0) + ca * cb
    return QSeries(out, order)


def inverse(a: QSeries) -> QSeries:
    """Laurent inverse by long division against the unit leading term."""
    if not a.terms:
        raise QSeriesError("cannot invert a series with no known terms")
    v = a.valuation24
    lead = a.terms[v]
    if lead not in (1, -1):
        raise QSeriesError("non-unit leading coefficient")
    # a = lead q^v (1 + r) with the unit part known on [0, T - v)
    span = a.order24 - v
    unit = sorted((e - v, c * lead) for e, c in a.terms.items())
    g = 0
    for e, _ in unit:
        g = gcd(g, e)
    inv = {0: 1}
    for n in range(g or span, span, g or span):
        acc = 0
        for e, c in unit[1:]:
            if e > n:
                break
            acc += c * inv.get(n - e, 0)
        if acc:
            inv[n] = -acc
    return QSeries({e - v: c * lead for e, c in inv.items()}, span - v)


def power(a: QSeries, n: int) -> QSeries:
    if n == 0:
        return QSeries.one(a.order24 - a.valuation24 if a.terms else a.order24)
    if n < 0:
        return power(inverse(a), -n)
    result = None
    base = a
    while n:
        if n & 1:
            result = base if result is None else mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def eta_series(scale: int, power_: int, order: Exponent) -> QSeries:
    """``eta(scale*tau)^power_`` truncated at ``order``.

    Uses the logarithmic-derivative recurrence
    ``g_n = -(p/n) sum_{j=1}^n sigma(j) g_{n-j}`` for ``prod (1-x^n)^p``,
    whose divisions are exact over the integers.
    """
    if scale <= 0:
        raise QSeriesError("scale must be positive")
    return _eta24(scale, power_, _n24(order))


def _eta24(scale: int, power_: int, t: int) -> QSeries:
    lead = scale * power_
    if power_ == 0:
        return QSeries({0: 1}, t)
    step = DENOM * scale
    nmax = max(0, -(-(t - lead) // step))  # number of x-powers below the order
    sig = _sigma_table(nmax)
    g = [0] * nmax
    if nmax:
        g[0] = 1
    for n in range(1, nmax):
        acc = 0
        for j in range(1, n + 1):
            acc += sig[j] * g[n - j]
        num = -power_ * acc
        q, r = divmod(num, n)
        assert r == 0
        g[n] = q
    return QSeries({lead + step * n: c for n, c in enumerate(g)}, t)


@lru_cache(maxsize=None)
def _sigma_table(n: int) -> tuple[int, ...]:
    sig = [0] * (n + 1)
    for d in range(1, n + 1):
        for m in range(d, n + 1, d):
            sig[m] += d
    return tuple(sig)


def theta_series(shift: int, order: Exponent) -> QSeries:
    """Theta series of A1 (shift 0) or its shifted coset A1 + 1/2 (shift 1)."""
    if shift not in (0, 1):
        raise QSeriesError("shift must be 0 or 1")
    return _theta24(shift, _n24(order))


def _theta24(shift: int, t: int) -> QSeries:
    terms: dict[int, int] = {}
    # exponent (n + shift/2)^2 = (2n + shift)^2 / 4
    m = shift
    while DENOM * m * m // 4 < t:
        e = DENOM * m * m // 4
        terms[e] = terms.get(e, 0) + (1 if m == 0 else 2)
        m += 2
    return QSeries(terms, t)


def _check_k(k: int) -> None:
    if not 0 <= k <= 9:
        raise QSeriesError("k must lie in 0..9")


def c0_series(k: int, order: Exponent) -> QSeries:
    """Generating function of the first exponent family, starting at q^-1."""
    _check_k(k)
    t = _n24(order)
    if t < -DENOM:
        raise QSeriesError("order must be at least -1")
    work = t + 2 * DENOM
    s = mul(_eta24(2, 8, work), power(_theta24(0, work), k))
    s = mul(s, _eta24(1, -8, work))
    s = mul(s, _eta24(4, -8, work))
    assert s.order24 >= t
    return QSeries(s.terms, t)


def c1_series(k: int, order: Exponent) -> QSeries:
    """Generating function of the second exponent family, supported on k/4 + Z."""
    _check_k(k)
    t = _n24(order)
    if t < 6 * k:
        raise QSeriesError(f"order must be at least {Fraction(k, 4)}")
    work = t + 2 * DENOM
    s = mul(_eta24(4, 8, work), power(_theta24(1, work), k))
    s = mul(s, _eta24(2, -16, work)).scale(-8)
    assert s.order24 >= t
    return QSeries(s.terms, t)


class CoefficientTable:
    """Memoized coefficient lookup that grows its series on demand."""

    def __init__(self, initial_order: int = 16):
        self._order = max(initial_order, 3)
        self._c0: dict[int, QSeries] = {}
        self._c1: dict[int, QSeries] = {}

    def _ensure(self, store: dict[int, QSeries], builder, k: int, e: int) -> QSeries:
        s = store.get(k)
        if s is None or e >= s.order24:
            order = self._order
            while DENOM * order <= e:
                order *= 2
            self._order = order
            s = builder(k, order)
            store[k] = s
        return s

    def c0(self, k: int, l: Exponent, extend: bool = True) -> int:
        _check_k(k)
        e = _n24(l)
        if e < -DENOM or e % DENOM:
            return 0
        if not extend and (k not in self._c0 or e >= self._c0[k].order24):
            raise QSeriesError("beyond truncation")
        return self._ensure(self._c0, c0_series, k, e).terms.get(e, 0)

    def c1(self, k: int, l: Exponent, extend: bool = True) -> int:
        _check_k(k)
        e = _n24(l)
        if e < 6 * k or (e - 6 * k) % DENOM:
            return 0
        if not extend and (k not in self._c1 or e >= self._c1[k].order24):
            raise QSeriesError("beyond truncation")
        return self._ensure(self._c1, c1_series, k, e).terms.get(e, 0)


_TABLE = CoefficientTable()


def coeff_c0(k: int, l: Exponent) -> int:
    return _TABLE.c0(k, l)


def coeff_c1(k: int, l: Exponent) -> int:
    return _TABLE.c1(k, l)


def coefficient_csv(k: int, order: Exponent) -> str:
    """CSV table with columns ``l_times_4, c0, c1`` for exponents below ``order``."""
    c0 = c0_series(k, order)
    c1 = c1_series(k, order)
    rows: dict[int, list[int]] = {}
    for e, c in c0.terms.items():
        rows.setdefault(e // 6, [0, 0])[0] = c
    for e, c in c1.terms.items():
        rows.setdefault(e // 6, [0, 0])[1] = c
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["l_times_4", "c0", "c1"])
    for l4 in sorted(rows):
        w.writerow([l4, *rows[l4]])
    return buf.getvalue()
