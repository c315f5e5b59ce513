"""Independent reference computations used to cross-check the main modules.

Nothing here shares code with :mod:`qseries` or the Lorentzian enumerators:
the eta quotients are expanded as plain integer power series, with negative
powers of (1 - x) taken from the binomial series instead of by division.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence


def _mul(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                if y:
                    out[i + j] += x * y
    return out


def _one_minus_power(step: int, p: int, n: int) -> list[int]:
    """(1 - q^step)^p through q^(n-1), for any integer p, from the binomial series."""
    out = [0] * n
    if p >= 0:
        for j in range(p + 1):
            if j * step < n:
                out[j * step] = (-1) ** j * math.comb(p, j)
    else:
        m = -p
        for j in range((n - 1) // step + 1):
            out[j * step] = math.comb(j + m - 1, m - 1)
    return out


def _eta_product(scale: int, p: int, n: int) -> list[int]:
    """prod_{m >= 1} (1 - q^{scale m})^p, without the q^{scale p / 24} prefactor."""
    out = [1] + [0] * (n - 1)
    for m in range(1, n):
        if scale * m >= n:
            break
        out = _mul(out, _one_minus_power(scale * m, p, n), n)
    return out


def _theta_plain(n: int) -> list[int]:
    out = [0] * n
    for j in range(-math.isqrt(n) - 1, math.isqrt(n) + 2):
        if j * j < n:
            out[j * j] += 1
    return out


def _theta_half(n: int) -> list[int]:
    """sum_j q^{j(j+1)}, i.e. q^{-1/4} theta_{A1+1/2}."""
    out = [0] * n
    for j in range(-math.isqrt(n) - 2, math.isqrt(n) + 2):
        e = j * (j + 1)
        if 0 <= e < n:
            out[e] += 1
    return out


def c0_naive(k: int, order: int, guard: int = 50) -> dict[Fraction, int]:
    """Coefficients of eta(2t)^8 theta^k / (eta(t)^8 eta(4t)^8) at integer exponents below order."""
    n = order + 1 + guard
    s = [1] + [0] * (n - 1)
    th = _theta_plain(n)
    for _ in range(k):
        s = _mul(s, th, n)
    for scale, p in ((4, -8), (1, -8), (2, 8)):
        s = _mul(s, _eta_product(scale, p, n), n)
    # leading exponent (16 - 8 - 32)/24 = -1
    return {Fraction(e - 1): c for e, c in enumerate(s) if c and e - 1 < order}


def c1_naive(k: int, order: int, guard: int = 50) -> dict[Fraction, int]:
    """Coefficients of -8 eta(4t)^8 theta_{A1+1/2}^k / eta(2t)^16 at exponents below order."""
    n = order + 1 + guard
    s = [1] + [0] * (n - 1)
    for scale, p in ((2, -16), (4, 8)):
        s = _mul(s, _eta_product(scale, p, n), n)
    th = _theta_half(n)
    for _ in range(k):
        s = _mul(th, s, n)
    shift = Fraction(k, 4)
    return {e + shift: -8 * c for e, c in enumerate(s) if c and e + shift < order}


def box_enumerate(gram: Sequence[Sequence[int]], norm: int, functional: Sequence[int], cap: int,
                  box: int) -> list[tuple[int, ...]]:
    """All v in [-box, box]^n with v^2 = norm and 0 < <v, functional> <= cap."""
    n = len(gram)
    gf = [sum(gram[i][j] * functional[j] for j in range(n)) for i in range(n)]
    out = []
    for v in itertools.product(range(-box, box + 1), repeat=n):
        h = sum(a * b for a, b in zip(v, gf))
        if 0 < h <= cap and sum(v[i] * gram[i][j] * v[j] for i in range(n) for j in range(n)) == norm:
            out.append(v)
    return sorted(out)
