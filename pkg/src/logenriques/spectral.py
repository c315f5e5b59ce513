"""Zeta-regularized quantities with closed forms.

* Td' Taylor data and the Bost scaling coefficient.
* The zeta function of the spectrum c k(k+1), multiplicity 2k+1 (k >= 1), continued
  to s = 0 through Hurwitz zeta.
* The partial zeta of the flat cone C^n / {+-1} over a ball of radius 3 delta.
* The BCOV identity -sum (-1)^{p+q} p q zeta'_{pq} = 2 sum (-1)^q q zeta'_{0q} on surfaces.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np
from scipy import integrate, special


class SpectralError(ValueError):
    pass


# ------------------------------------------------------------------- Td'

def _series_inverse(a: list[Fraction], n: int) -> list[Fraction]:
    if a[0] == 0:
        raise SpectralError("series not invertible")
    out = [Fraction(1) / a[0]]
    for m in range(1, n):
        acc = sum((a[j] * out[m - j] for j in range(1, min(m, len(a) - 1) + 1)), Fraction(0))
        out.append(-acc / a[0])
    return out


def todd_series(order: int) -> list[Fraction]:
    """Coefficients of Td(x) = x / (1 - e^{-x}) through x^order."""
    # (1 - e^{-x}) / x = sum_n (-1)^n x^n / (n+1)!
    base = [Fraction((-1) ** n, math.factorial(n + 1)) for n in range(order + 1)]
    return _series_inverse(base, order + 1)


def td_prime_series(order: int) -> list[Fraction]:
    """Exact Taylor coefficients of Td'(x) = d/dx Td(x) through x^order."""
    if not 0 <= order <= 8:
        raise SpectralError("order must lie in 0..8")
    td = todd_series(order + 1)
    return [(n + 1) * td[n + 1] for n in range(order + 1)]


def td_prime_integral_curve(degree_c1: int) -> Fraction:
    """Integral of Td'(TC) over a curve: the linear coefficient times deg c1."""
    return td_prime_series(1)[1] * degree_c1


def bost_scaling_exponent(d: int, hodge: Sequence[int], td_prime_integral) -> Fraction:
    """Coefficient of log(lambda) in log tau(Z, lambda g) / tau(Z, g)."""
    if len(hodge) != d + 1:
        raise SpectralError("need h^{0,i} for i = 0..d")
    s = sum((-1) ** i * (d - i) * h for i, h in enumerate(hodge))
    return -Fraction(s) + Fraction(td_prime_integral)


# ------------------------------------------------------------- P^1 zeta

@dataclass(frozen=True)
class P1Zeta:
    c: float
    zeta0: float
    zeta_prime0: float
    tau: float
    j_max: int
    tail: float


def p1_zeta(s, c: float = 1.0, j_max: int = 60) -> mpmath.mpc:
    """zeta(s) = c^{-s} sum_j binom(-s, j) (-1/4)^j 2 zeta_H(2s + 2j - 1, 3/2) away from s = 0."""
    s = mpmath.mpmathify(s)
    total = mpmath.mpf(0)
    for j in range(j_max + 1):
        total += mpmath.binomial(-s, j) * mpmath.mpf(-0.25) ** j * 2 * mpmath.zeta(2 * s + 2 * j - 1, 1.5)
    return mpmath.power(c, -s) * total


def p1_zeta_direct(s: float, c: float = 1.0) -> float:
    """sum_{k>=1} (2k+1) (c k(k+1))^{-s} for Re s > 1, by Euler-Maclaurin summation.

    The default nsum extrapolation loses digits on the slowly decaying tail near s = 1.
    """
    return float(mpmath.nsum(lambda k: (2 * k + 1) * (c * k * (k + 1)) ** (-s), [1, mpmath.inf],
                             method="euler-maclaurin"))


def p1_torsion_zeta(c: float = 1.0, j_max: int = 30, tol: float = 1e-14) -> P1Zeta:
    """zeta(0), zeta'(0) and tau = exp(zeta'(0)) for the spectrum c k(k+1), mult. 2k+1.

    At s = 0 only j = 0, 1 contribute to zeta(0): 2 zeta_H(-1, 3/2) and, from the
    pole of zeta_H(2s + 1, 3/2) against binom(-s, 1), the value 1/4.  For zeta'(0)
    the j >= 2 terms enter through d/ds binom(-s, j)|_0 = (-1)^j / j.
    """
    if not c > 0:
        raise SpectralError("normalization must be positive")
    a = mpmath.mpf(1.5)
    zh = mpmath.zeta(-1, a)
    dzh = mpmath.zeta(-1, a, 1)
    zeta0 = 2 * zh + mpmath.mpf(1) / 4
    logc = mpmath.log(c)
    dz = -logc * zeta0 + 4 * dzh - mpmath.digamma(a) / 2
    term = mpmath.mpf(0)
    for j in range(2, j_max + 1):
        term = 2 * mpmath.zeta(2 * j - 1, a) / (j * mpmath.mpf(4) ** j)
        dz += term
    # ratio of consecutive terms tends to (1/4)(2/3)^2 = 1/9
    tail = float(term) / 8
    if tail > tol:
        raise SpectralError(f"j_max too small: tail estimate {tail:.3g}")
    return P1Zeta(float(c), float(zeta0), float(dz), float(mpmath.exp(dz)), j_max, tail)


def p1_torsion_ratio(lam: float, c: float = 1.0) -> float:
    """tau(lam g) / tau(g): eigenvalues scale by 1/lam, so c -> c / lam."""
    return p1_torsion_zeta(c / lam).tau / p1_torsion_zeta(c).tau


def torus_zeta0() -> float:
    """zeta(0) of the square-torus spectrum m^2 + n^2: Epstein zeta 4 zeta(s) L(s, chi_{-4}) at 0."""
    return float(4 * mpmath.zeta(0) * mpmath.dirichlet(0, [0, 1, 0, -1]))


# -------------------------------------------------------------- cone zeta

@dataclass(frozen=True)
class QuadSpec:
    epsabs: float = 1e-14
    epsrel: float = 1e-12
    limit: int = 400


@dataclass(frozen=True)
class ConeZetaParams:
    n: int = 2
    delta: float = 0.1
    quad: QuadSpec = QuadSpec()

    def __post_init__(self):
        if self.n < 2:
            raise SpectralError("n must be at least 2")
        if not 0 < self.delta <= 1:
            raise SpectralError("delta must lie in (0, 1]")


def sphere_volume(n: int) -> float:
    """vol(S^{n-1})."""
    return 2 * math.pi ** (n / 2) / math.gamma(n / 2)


def cone_constants(n: int) -> dict[str, float]:
    w = sphere_volume(n)
    d = w / (4 * math.pi) ** (n / 2)
    return {
        "omega": w,
        "c": 3**n * w / (n * (4 * math.pi) ** (n / 2)),
        "d": d,
        "d_prime": d * math.gamma(n / 2) / 2,
    }


def alternating_factor(n: int) -> int:
    """sum_q (-1)^q q binom(n, q); zero for n >= 2."""
    return sum((-1) ** q * q * math.comb(n, q) for q in range(n + 1))


def _quad(f, a, b, spec: QuadSpec, points=None) -> float:
    val, err = integrate.quad(f, a, b, epsabs=spec.epsabs, epsrel=spec.epsrel, limit=spec.limit,
                              points=points)
    if not math.isfinite(val) or err > 1e3 * max(spec.epsabs, spec.epsrel * abs(val)):
        raise SpectralError(f"quadrature did not converge (error estimate {err:.3g})")
    return val


def cone_zeta_prime(params: ConeZetaParams) -> float:
    """zeta'_delta(0) = -d' Gamma'(1) - d int_{3d}^inf 2 ln(3d/x) x^{n-1} e^{-x^2} + d int_0^{3d} (same)."""
    n, R = params.n, 3 * params.delta
    k = cone_constants(n)

    def f(x):
        return 2 * math.log(R / x) * x ** (n - 1) * math.exp(-x * x) if x > 0 else 0.0

    outer = _quad(f, R, np.inf, params.quad)
    inner = _quad(f, 0.0, R, params.quad)
    gamma1 = float(special.digamma(1.0))  # Gamma'(1) = psi(1) = -EulerGamma
    return -k["d_prime"] * gamma1 - k["d"] * outer + k["d"] * inner


@dataclass
class ConeZetaResult:
    zeta_prime_delta_0: float
    divergence_coefficient: float
    ln3delta_coefficient: float
    partial_torsion: float
    alternating_factor: int
    slopes: list[float]
    deltas: list[float]


def cone_zeta_derivative(params: ConeZetaParams,
                         fit_deltas: Sequence[float] = (1e-1, 1e-2, 1e-3, 1e-4)) -> ConeZetaResult:
    """zeta'_delta(0) at params.delta plus the log-divergence fitted over fit_deltas.

    zeta'_delta(0) ~ -2 d' ln(3 delta) as delta -> 0; ln3delta_coefficient is that
    signed slope and divergence_coefficient the coefficient of ln(1/(3 delta)),
    both taken from the two smallest deltas.  The partial torsion carries the
    factor sum_q (-1)^q q binom(n, q), which vanishes identically for n >= 2.
    """
    zp = cone_zeta_prime(params)
    ds = sorted(fit_deltas, reverse=True)
    vals = [cone_zeta_prime(ConeZetaParams(params.n, d, params.quad)) for d in ds]
    logs = [math.log(3 * d) for d in ds]
    slopes = [(vals[i + 1] - vals[i]) / (logs[i + 1] - logs[i]) for i in range(len(ds) - 1)]
    fac = alternating_factor(params.n)
    torsion = 0.0 if fac == 0 else -zp * fac
    return ConeZetaResult(zp, -slopes[-1], slopes[-1], torsion, fac, slopes, list(ds))


# ---------------------------------------------------------------- BCOV

PQ = [(p, q) for p in range(3) for q in range(3)]


@dataclass(frozen=True)
class HodgeSpectrum:
    """zeta_{p,q}(0) and zeta'_{p,q}(0) for 0 <= p, q <= 2."""

    zeta0: dict
    zeta_prime0: dict

    def violations(self) -> list[str]:
        bad = []
        for name, table in (("zeta0", self.zeta0), ("zeta_prime0", self.zeta_prime0)):
            for p, q in PQ:
                v = table[p, q]
                if v != table[q, p] or v != table[2 - q, 2 - p]:
                    bad.append(f"{name}[{p},{q}] symmetry")
            for p in range(3):
                if table[p, 0] - table[p, 1] + table[p, 2] != 0:
                    bad.append(f"{name} row {p} not exact")
        return bad


def complete_spectrum(a, b) -> dict:
    """Fill all (p,q) from zeta_{0,0} = a and zeta_{0,1} = b using the symmetries and exactness."""
    t = {}
    t[0, 0] = t[2, 2] = a
    for pq in ((0, 1), (1, 0), (1, 2), (2, 1)):
        t[pq] = b
    t[0, 2] = t[2, 0] = b - a
    t[1, 1] = 2 * b
    return t


def random_spectrum(rng: random.Random, size: int = 1000) -> HodgeSpectrum:
    def r():
        return Fraction(rng.randint(-size, size), rng.randint(1, size))

    return HodgeSpectrum(complete_spectrum(r(), r()), complete_spectrum(r(), r()))


@dataclass(frozen=True)
class BCOVCheck:
    lhs: Fraction
    rhs: Fraction
    equal: bool


def bcov_surface_identity(spec: HodgeSpectrum) -> BCOVCheck:
    bad = spec.violations()
    if bad:
        raise SpectralError("constraints violated: " + ", ".join(bad))
    z = spec.zeta_prime0
    lhs = -sum((-1) ** (p + q) * p * q * z[p, q] for p, q in PQ)
    rhs = 2 * sum((-1) ** q * q * z[0, q] for q in range(3))
    return BCOVCheck(lhs, rhs, lhs == rhs)
