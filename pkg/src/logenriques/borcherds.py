"""Evaluation of the Del Pezzo Borcherds product on the tube domain.

log Phi(z) = pi i <c1, z>
           + sum_{a in Eff}            c0(a^2)     log(1 - e^{2 pi i <a, z>})
           + sum_{b in Eff, b = c1 mod 2} c1(b^2/4) log(1 - e^{pi i <b, z>})

Only classes with a^2 >= -1 and b^2 >= deg carry nonzero exponents, so every
sum runs over a finite Lorentzian shell {0 < <a, y> <= cap}.  The truncation
bound sums ``2|c||w|`` over one further shell and extrapolates geometrically.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import qseries
from .delpezzo import (
    BlowupPair,
    DelPezzoModel,
    apply,
    check_isometry,
    in_effective_cone,
    is_effective_class,
    kaehler_cone_contains,
    model as dp_model,
)
from .lattice import lorentzian_array

TWO_PI = 2.0 * math.pi
EPS = 2.0**-52


class PhiError(ValueError):
    pass


def _fracs(v: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(t) for t in v)


@dataclass(frozen=True)
class TubePoint:
    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]

    @classmethod
    def of(cls, x: Sequence, y: Sequence) -> "TubePoint":
        return cls(_fracs(x), _fracs(y))

    def shifted(self, lam: Sequence[int]) -> "TubePoint":
        return TubePoint(tuple(a + b for a, b in zip(self.x, lam)), self.y)

    def mapped(self, mat: Sequence[Sequence[int]]) -> "TubePoint":
        return TubePoint(_fracs(apply(mat, self.x)), _fracs(apply(mat, self.y)))


@dataclass
class EvalResult:
    log_value: complex
    value: complex
    truncation_bound: float
    cap_used: Fraction
    terms_used: int
    log_norm: Optional[float] = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "log_re": self.log_value.real,
            "log_im": self.log_value.imag,
            "value_re": self.value.real,
            "value_im": self.value.imag,
            "bound": self.truncation_bound,
            "cap": str(self.cap_used),
            "terms": self.terms_used,
            "log_norm": self.log_norm,
            "notes": self.notes,
        }


# ---------------------------------------------------------------- enumeration


@dataclass(frozen=True)
class _Terms:
    """Classes with exponents, sorted by (height, family, coordinates).

    Heights ``<v, y>`` are stored exactly as integer numerators over ``hden``.
    """

    vecs: np.ndarray  # int64 rows
    exact: np.ndarray  # object array of integer exponents
    half: np.ndarray  # True for beta-type terms (e^{pi i <b,z>})
    hnum: np.ndarray  # int64
    hden: int

    @property
    def coeff(self) -> np.ndarray:
        return self.exact.astype(float)

    @property
    def height(self) -> np.ndarray:
        return self.hnum / self.hden

    def within(self, cap: Fraction) -> np.ndarray:
        return self.hnum <= math.floor(cap * self.hden)


def _model_key(m: DelPezzoModel) -> tuple[int, str]:
    return (m.degree, m.variant)


def _height_data(gram, y: Sequence[Fraction]) -> tuple[np.ndarray, int]:
    den = 1
    for t in y:
        den = den * t.denominator // math.gcd(den, t.denominator)
    ynum = np.array([int(t * den) for t in y], dtype=np.int64)
    return np.array(gram, dtype=np.int64) @ ynum, den


def _pack(vecs: np.ndarray, exact: np.ndarray, half: np.ndarray, gy: np.ndarray, den: int) -> _Terms:
    hnum = vecs @ gy
    keys = tuple(vecs[:, j] for j in range(vecs.shape[1] - 1, -1, -1)) + (half, hnum)
    order = np.lexsort(keys)
    return _Terms(vecs[order], exact[order], half[order], hnum[order], den)


def _restrict(t: _Terms, cap_alpha: Fraction, cap_beta: Fraction) -> _Terms:
    lim = np.where(t.half, math.floor(cap_beta * t.hden), math.floor(cap_alpha * t.hden))
    keep = t.hnum <= lim
    return _Terms(t.vecs[keep], t.exact[keep], t.half[keep], t.hnum[keep], t.hden)


_ENUM_CACHE: dict = {}


def _cached(key, cap_alpha: Fraction, cap_beta: Fraction, build) -> _Terms:
    """Enumerations only grow; smaller requests are served by restriction."""
    hit = _ENUM_CACHE.get(key)
    if hit is None or hit[0] < cap_alpha or hit[1] < cap_beta:
        ca, cb = cap_alpha, cap_beta
        if hit is not None:
            # grow geometrically so a sequence of rising caps stays cheap
            ca, cb = max(ca, hit[0] * Fraction(5, 4)), max(cb, hit[1] * Fraction(5, 4))
        if len(_ENUM_CACHE) > 64:
            _ENUM_CACHE.clear()
        hit = (ca, cb, build(ca, cb))
        _ENUM_CACHE[key] = hit
    return _restrict(hit[2], cap_alpha, cap_beta)


def _norms(vecs: np.ndarray, gram) -> np.ndarray:
    g = np.array(gram, dtype=np.int64)
    return np.einsum("ij,jk,ik->i", vecs, g, vecs)


def _lookup(norms: np.ndarray, fn) -> np.ndarray:
    table = {int(n): fn(int(n)) for n in np.unique(norms)}
    return np.array([table[int(n)] for n in norms], dtype=object)


def _alpha_beta(m: DelPezzoModel, y, cap_a: Fraction, cap_b: Fraction):
    """Raw exponent-carrying classes of one model: (vecs, exponents, half flags)."""
    k = m.degree
    gc1 = np.array(m.picard.gram, dtype=np.int64) @ np.array(m.c1, dtype=np.int64)
    a = lorentzian_array(m.picard, y, cap_a, -1, axis=m.c1)
    # Riemann-Roch: a^2 >= -1 and <a, c1> > 0 is effective
    a = a[a @ gc1 > 0]
    ca = _lookup(_norms(a, m.picard.gram), lambda n: qseries.coeff_c0(k, n))
    # b^2 >= deg > 0 and <b, y> > 0 place b in the positive cone, hence in Eff
    b = lorentzian_array(m.picard, y, cap_b, k, coset=(m.c1, 2), axis=m.c1)
    cb = _lookup(_norms(b, m.picard.gram), lambda n: qseries.coeff_c1(k, Fraction(n, 4)))
    vecs = np.concatenate([a, b])
    exact = np.concatenate([ca, cb])
    half = np.concatenate([np.zeros(len(a), dtype=bool), np.ones(len(b), dtype=bool)])
    return vecs, exact, half


def _phi_terms(key: tuple[int, str], y: tuple[Fraction, ...], cap: Fraction, width: Fraction) -> _Terms:
    def build(cap_a, cap_b):
        m = dp_model(*key)
        vecs, exact, half = _alpha_beta(m, y, cap_a, cap_b)
        keep = exact != 0
        gy, den = _height_data(m.picard.gram, y)
        return _pack(vecs[keep], exact[keep], half[keep], gy, den)

    return _cached(("phi", key, y), *_family_limits(dp_model(*key), y, cap, width), build)


def _log1m(w: np.ndarray) -> np.ndarray:
    """Principal log(1 - w) for |w| < 1, accurate for tiny |w|."""
    out = np.empty_like(w)
    small = np.abs(w) < 1e-4
    ws = w[small]
    out[small] = -(ws + ws**2 / 2 + ws**3 / 3 + ws**4 / 4)
    out[~small] = np.log(1.0 - w[~small])
    return out


def _phases(vecs: np.ndarray, gram, x: tuple[Fraction, ...], half: np.ndarray) -> np.ndarray:
    """Fractional part of <v, x> (or <v, x>/2) computed exactly."""
    gx, den = _height_data(gram, x)
    pair = vecs @ gx
    d = np.where(half, 2 * den, den)
    return np.mod(pair, d) / d


def _moduli(t: _Terms) -> np.ndarray:
    return np.exp(-np.where(t.half, math.pi, TWO_PI) * t.height)


def _shell_width(m: DelPezzoModel, y: tuple[Fraction, ...]) -> Fraction:
    return min(m.inner(g, y) for g in m.eff_generators)


def _family_limits(m: DelPezzoModel, y, cap: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Explicit enumeration limits for a- and b-classes.

    a-classes already occur below the cap (the generators do); the first
    b-class may sit far above it, since b^2 >= deg forces <b, c1> >= deg, but
    b = c1 itself always occurs, so the b-limit reaches past <c1, y>.
    """
    c1y = Fraction(m.inner(m.c1, y))
    return cap + width, max(cap, c1y) + 2 * width


def _tail_bound(t: _Terms, cap: Fraction, width: Fraction, limits, mod: np.ndarray, y2: float, rank: int) -> float:
    """Explicit terms between the cap and the enumeration limit, plus a geometric remainder.

    Lattice points in a height shell grow polynomially (degree <= rank + 2
    once the coefficient growth prefactor is included) and exponents grow like
    exp(2 pi sqrt(l)) with a^2 <= <a,y>^2/y^2, so consecutive shells of width
    w shrink by at least
    ``rho = exp(-lam (1 - 1/|y|) w) * ((H + w)/H)^(rank+2)``
    with lam = 2 pi for a-terms and pi for b-terms (whose shells are 2w wide).
    The remainder beyond the limit H is ``rho/(1-rho)`` times the last two
    explicit shells, which always straddle at least one occupied level.
    """
    if y2 <= 1.0:
        raise PhiError("Im z too shallow: <y,y> <= 1")
    h = t.height
    capf = float(cap)
    per = np.where(mod <= 0.5, 2.0 * mod, -np.log1p(-np.minimum(mod, 0.999999)))
    mag = np.abs(t.coeff) * per
    total = 0.0
    for fam, w_fam, lam, lim in ((False, width, TWO_PI, limits[0]), (True, 2 * width, math.pi, limits[1])):
        wf, hf = float(w_fam), float(lim)
        sel = t.half == fam
        explicit = float(mag[sel & (h > capf) & (h <= hf)].sum())
        last = float(mag[sel & (h > hf - 2 * wf) & (h <= hf)].sum())
        rho = math.exp(-lam * (1.0 - 1.0 / math.sqrt(y2)) * wf) * ((hf + wf) / hf) ** (rank + 2)
        if rho >= 1.0:
            raise PhiError("Im z too shallow: tail does not contract")
        total += explicit + last * rho / (1.0 - rho)
    return total


def _require_cap(m: DelPezzoModel, y, cap: Fraction) -> None:
    if cap < max(m.inner(g, y) for g in m.eff_generators):
        raise PhiError("cap too small")


def phi_eval(m: DelPezzoModel, z: TubePoint, cap, series_order: Optional[int] = None) -> EvalResult:
    """Truncated Borcherds product at z with a tail bound."""
    cap = Fraction(cap)
    y = z.y
    if not kaehler_cone_contains(m, y):
        raise PhiError("Im z is not in the Kaehler cone")
    _require_cap(m, y, cap)
    width = _shell_width(m, y)
    terms = _phi_terms(_model_key(m), y, cap, width)
    if series_order is not None:
        need = int(_norms(terms.vecs, m.picard.gram).max(initial=0))
        if need >= series_order:
            raise PhiError("series truncation insufficient")
    res = _assemble(m, z, terms, cap, width, extra=0j, c1_vec=m.c1)
    if all(c % 2 == 0 for c in m.c1):
        res.notes.append("c1 is divisible by 2: the b-product runs over the coset 2L itself")
    return res


def _assemble(m, z, terms: _Terms, cap: Fraction, width: Fraction, extra: complex, c1_vec) -> EvalResult:
    mod = _moduli(terms)
    if np.any(mod >= 1.0):
        raise PhiError("Im z too shallow")
    inside = terms.within(cap)
    ph = _phases(terms.vecs[inside], m.picard.gram, z.x, terms.half[inside])
    w = mod[inside] * np.exp(1j * TWO_PI * ph)
    if np.any(w == 1.0):
        raise PhiError("factor vanishes")
    logs = terms.coeff[inside] * _log1m(w)
    # prefactor pi i <c1, z>, phase of <c1, x> reduced mod 2
    c1x = sum(Fraction(a) * b for a, b in zip(_gram_apply(m, c1_vec), z.x))
    c1y = float(sum(Fraction(a) * b for a, b in zip(_gram_apply(m, c1_vec), z.y)))
    pre = complex(-math.pi * c1y, math.pi * float(c1x % 2))
    re = math.fsum([pre.real, extra.real, *logs.real.tolist()])
    im = math.fsum([pre.imag, extra.imag, *logs.imag.tolist()])
    log_value = complex(re, im)
    y2 = float(sum(Fraction(a) * b for a, b in zip(_gram_apply(m, z.y), z.y)))
    tail = _tail_bound(terms, cap, width, _family_limits(m, z.y, cap, width), mod, y2, m.rank)
    rounding = 8 * EPS * (float(np.abs(logs).sum()) + abs(pre) + abs(extra)) + 4 * EPS * abs(log_value)
    res = EvalResult(
        log_value=log_value,
        value=cmath.exp(log_value),
        truncation_bound=tail + rounding,
        cap_used=cap,
        terms_used=int(inside.sum()),
    )
    res.log_norm = (4 + m.degree) * math.log(y2) + 2.0 * log_value.real
    return res


def _gram_apply(m: DelPezzoModel, v: Sequence) -> list:
    g = m.picard.gram
    return [sum(g[i][j] * v[j] for j in range(m.rank)) for i in range(m.rank)]


def petersson_norm(m: DelPezzoModel, z: TubePoint, cap) -> tuple[float, float, float]:
    """(norm^2, log norm^2, relative error bound) with norm^2 = <y,y>^{4+deg} |Phi|^2."""
    r = phi_eval(m, z, cap)
    return math.exp(r.log_norm), r.log_norm, 2.0 * r.truncation_bound


def auto_cap(m: DelPezzoModel, z: TubePoint, target: float = 1e-10, max_steps: int = 40) -> Fraction:
    """Smallest cap on the generator-width grid whose bound is below target."""
    width = _shell_width(m, z.y)
    cap = max(Fraction(m.inner(g, z.y)) for g in m.eff_generators)
    for _ in range(max_steps):
        if phi_eval(m, z, cap).truncation_bound <= target:
            return cap
        cap += width
    raise PhiError("could not reach the requested truncation bound")


def _wrap(d: complex) -> complex:
    # reduce the imaginary part into (-pi, pi]
    im = math.remainder(d.imag, TWO_PI)
    return complex(d.real, im)


@dataclass
class CheckReport:
    name: str
    discrepancy: float
    bound: float
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "discrepancy": self.discrepancy,
            "bound": self.bound,
            "passed": self.passed,
            **self.detail,
        }


def translation_check(m: DelPezzoModel, z: TubePoint, lam: Sequence[int], cap) -> CheckReport:
    """Phi(z + lam) = e^{pi i <c1, lam>} Phi(z) within the combined bounds.

    The shift z -> z + lam comes from the transvection
    (a, b, c) -> (a, b + a lam, c + <b, lam> + a lam^2/2) of the Mukai lattice,
    which is integral only for lam^2 even, i.e. <c1, lam> even (c1 is
    characteristic).  For odd lam the b-factors change sign and the identity
    is not expected; the report flags this and still measures the gap.
    """
    a = phi_eval(m, z, cap)
    b = phi_eval(m, z.shifted(lam), cap)
    c1lam = m.inner(m.c1, lam)
    d = _wrap(b.log_value - a.log_value - complex(0, math.pi * (c1lam % 2)))
    bound = a.truncation_bound + b.truncation_bound
    return CheckReport(
        "translation",
        abs(d),
        bound,
        abs(d) <= 10 * bound,
        {
            "norm_gap": abs(b.log_norm - a.log_norm),
            "lambda": list(lam),
            "in_modular_group": c1lam % 2 == 0,
        },
    )


def modular_translation(m: DelPezzoModel, rng: np.random.Generator, size: int = 3) -> list[int]:
    """Random lam with lam^2 even, so that z -> z + lam lies in O+(H(V,Z))."""
    while True:
        lam = [int(t) for t in rng.integers(-size, size + 1, size=m.rank)]
        if m.inner(m.c1, lam) % 2 == 0:
            return lam


def weyl_symmetry_check(m: DelPezzoModel, z: TubePoint, sigma: Sequence[Sequence[int]], cap) -> CheckReport:
    """||Phi(sigma z)|| = ||Phi(z)|| for an isometry fixing c1 and Eff."""
    iso, fixes, perm = check_isometry(m, sigma)
    if not iso:
        raise PhiError("sigma not an isometry")
    if not (fixes and perm):
        raise PhiError("sigma does not preserve Eff")
    a = phi_eval(m, z, cap)
    b = phi_eval(m, z.mapped(sigma), cap)
    gap = abs(b.log_norm - a.log_norm)
    # log||Phi||^2 carries 2 Re log Phi
    bound = 2.0 * (a.truncation_bound + b.truncation_bound)
    return CheckReport("weyl", gap, bound, gap <= 10 * bound)


# ---------------------------------------------------------------- Heegner walls


@dataclass
class WallExponent:
    ell: tuple[int, ...]
    height: int
    exponent: int
    contributions: list[tuple[str, int, int]]  # (family, multiple, exponent)


def heegner_exponent_scan(m: DelPezzoModel, height_cap: int = 6, max_multiple: int = 12) -> list[WallExponent]:
    """Total product exponent on each wall <ell, z> in Z with ell^2 = -1.

    Heights are measured against c1 (ample on every model).  Only the
    multiples j*ell vanish identically on the wall; their exponents are
    c0(-j^2) for effective j*ell and c1(-j^2/4) for j*ell = c1 mod 2.
    Effectivity is only decided where the exponent is nonzero.
    """
    k = m.degree
    walls = lorentzian_array(m.picard, m.c1, height_cap, -1, -1, axis=m.c1)
    c1v = np.array(m.c1, dtype=np.int64)
    levels = walls @ (np.array(m.picard.gram, dtype=np.int64) @ c1v)
    total = np.zeros(len(walls), dtype=np.int64)
    contrib: list[list[tuple[str, int, int]]] = [[] for _ in range(len(walls))]
    for j in range(1, max_multiple + 1):
        fams = [("alpha", qseries.coeff_c0(k, -j * j), None), ("beta", qseries.coeff_c1(k, Fraction(-j * j, 4)), 2)]
        for fam, c, congruence in fams:
            if not c:
                continue
            idx = np.arange(len(walls))
            if congruence is not None:
                idx = idx[np.all((j * walls[idx] - c1v) % 2 == 0, axis=1)]
            if j == 1:
                # norm -1: Riemann-Roch decides, and every scanned wall has <ell, c1> > 0
                eff = idx[levels[idx] > 0]
            else:
                eff = [i for i in idx if in_effective_cone(m, tuple(int(t) * j for t in walls[i]))]
            for i in eff:
                total[i] += c
                contrib[i].append((fam, j, c))
    return [
        WallExponent(tuple(int(t) for t in walls[i]), int(levels[i]), int(total[i]), contrib[i])
        for i in range(len(walls))
    ]


# ---------------------------------------------------------------- quasi-pullback


def _qp_terms(pair_key, y_big: tuple[Fraction, ...], cap: Fraction, width: Fraction) -> _Terms:
    pair = _PAIRS[pair_key]

    def build(cap_a, cap_b):
        return _group_big_terms(pair, y_big, cap_a, cap_b)

    ys = y_small_from_big(pair, y_big)
    return _cached(("qp", pair_key, y_big), *_family_limits(pair.small, ys, cap, width), build)


def _projector(pair: BlowupPair) -> np.ndarray:
    """Integer matrix P with a' = P (a - tE), the pullback being unimodular onto E-perp."""
    small, big = pair.small, pair.big
    gs = [[Fraction(x) for x in r] for r in small.picard.gram]
    inv = [_solve(gs, [int(i == j) for i in range(small.rank)]) for j in range(small.rank)]
    inv_mat = np.array([[int(inv[j][i]) for j in range(small.rank)] for i in range(small.rank)], dtype=np.int64)
    pb = np.array(pair.pullback, dtype=np.int64)  # rows: pullbacks of the small basis
    return inv_mat @ pb @ np.array(big.picard.gram, dtype=np.int64)


def _group_big_terms(pair: BlowupPair, y_big, cap_a: Fraction, cap_b: Fraction) -> _Terms:
    big, small = pair.big, pair.small
    kb = big.degree
    vecs, exact, half = _alpha_beta(big, y_big, cap_a, cap_b)
    e = np.array(pair.exceptional, dtype=np.int64)
    ge = np.array(big.picard.gram, dtype=np.int64) @ e
    t = -(vecs @ ge)  # E^2 = -1
    rest = vecs - t[:, None] * e
    proj = rest @ _projector(pair).T
    if not np.array_equal(proj @ np.array(pair.pullback, dtype=np.int64), rest):
        raise PhiError("class does not decompose over the pulled-back lattice")
    # c1(V~) = pi^* c1(V) - E forces an odd E-coefficient on beta-classes
    if np.any(half & (t % 2 == 0)):
        raise PhiError("t-range and effectivity disagree")
    groups: dict[tuple[tuple[int, ...], bool], int] = {}
    for row, fam, c in zip(map(tuple, proj.tolist()), half.tolist(), exact.tolist()):
        groups[(row, fam)] = groups.get((row, fam), 0) + c
    zero = tuple([0] * small.rank)
    # the a' = 0 family is the linear factor along E: only t = 1 may occur
    if (zero, True) in groups or groups.get((zero, False), 0) not in (0, qseries.coeff_c0(kb, -1)):
        raise PhiError("t-range and effectivity disagree")
    groups.pop((zero, False), None)
    # projections of effective classes are effective, and every admissible t
    # over an effective a' must give an effective class upstairs
    for ap, is_half in groups:
        nm = small.norm(ap)
        if nm >= -1 and not is_effective_class(small, ap):
            raise PhiError("t-range and effectivity disagree")
        lo = kb if is_half else -1
        tmax = math.isqrt(max(nm - lo, 0))
        lift = pair.lift(ap)
        for tt in range(-tmax, tmax + 1):
            if is_half and tt % 2 == 0:
                continue
            full = tuple(x + tt * ex for x, ex in zip(lift, pair.exceptional))
            if big.norm(full) >= -1 and not is_effective_class(big, full):
                raise PhiError("t-range and effectivity disagree")
    items = [(ap, fam, c) for (ap, fam), c in groups.items() if c]
    rows = np.array([it[0] for it in items], dtype=np.int64).reshape(len(items), small.rank)
    ex = np.array([it[2] for it in items], dtype=object)
    hf = np.array([it[1] for it in items], dtype=bool)
    gy, den = _height_data(small.picard.gram, _fracs(y_small_from_big(pair, y_big)))
    return _pack(rows, ex, hf, gy, den)


_PAIRS: dict = {}


def _pair_key(pair: BlowupPair):
    key = (pair.small.degree, pair.small.variant, pair.big.degree)
    _PAIRS[key] = pair
    return key


def y_small_from_big(pair: BlowupPair, v: Sequence) -> tuple:
    sol, t = _project_rational(pair, v)
    if t != 0:
        raise PhiError("z not on the wall")
    return sol


def _project_rational(pair: BlowupPair, v: Sequence):
    big = pair.big
    t = -big.inner(v, pair.exceptional)
    rest = [Fraction(v[i]) - t * pair.exceptional[i] for i in range(big.rank)]
    # pullback columns are orthonormal up to the small Gram matrix: solve via pairings
    small = pair.small
    rhs = [big.inner(pair.pullback[j], rest) for j in range(small.rank)]
    g = [[Fraction(x) for x in r] for r in small.picard.gram]
    sol = _solve(g, rhs)
    return tuple(sol), t


def _solve(a: list[list[Fraction]], b: list) -> list[Fraction]:
    n = len(a)
    m = [row[:] + [Fraction(b[i])] for i, row in enumerate(a)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[p] = m[p], m[c]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]


def quasi_pullback(pair: BlowupPair, z_small: TubePoint, cap) -> EvalResult:
    """Quasi-pullback of the big product to E-perp, evaluated at pi^* z.

    Each class a = a' + tE of Eff(V~) is grouped by its E-orthogonal part a';
    the a' = 0 family contributes only t = 1, whose linear factor is replaced
    by the constant lim (1 - e^{2 pi i s})/s = -2 pi i.
    """
    cap = Fraction(cap)
    small, big = pair.small, pair.big
    if not kaehler_cone_contains(small, z_small.y):
        raise PhiError("Im z is not in the induced Kaehler cone")
    _require_cap(small, z_small.y, cap)
    y_big = _fracs(pair.lift(z_small.y))
    if big.inner(y_big, pair.exceptional) != 0:
        raise PhiError("z not on the wall")
    width = _shell_width(small, z_small.y)
    terms = _qp_terms(_pair_key(pair), y_big, cap, width)
    # only t = 1 survives in the a' = 0 family
    for t in range(2, 6):
        if qseries.coeff_c0(big.degree, -t * t):
            raise PhiError("t-range and effectivity disagree")
    extra = cmath.log(-2j * math.pi)
    # <c1(V~), pi^* z> = <c1(V), z> because z is orthogonal to E
    res = _assemble(small, z_small, terms, cap, width, extra=extra, c1_vec=small.c1)
    res.notes.append("constant -2*pi*i from the removed linear factor")
    return res


@dataclass
class QuasiPullbackComparison:
    ratios: list[complex]
    spread: float
    bounds: list[float]
    caps: list[Fraction]

    def to_json(self) -> dict:
        return {
            "ratios": [[r.real, r.imag] for r in self.ratios],
            "spread": self.spread,
            "max_bound": max(self.bounds) if self.bounds else 0.0,
            "caps": [str(c) for c in self.caps],
        }


def compare_quasi_pullback(pair: BlowupPair, points: Sequence[TubePoint], cap=None, target: float = 1e-10):
    """Ratios Phi_V(z) / QP(Phi_V~)(z) and their relative spread."""
    ratios, bounds, caps = [], [], []
    for z in points:
        c = Fraction(cap) if cap is not None else auto_cap(pair.small, z, target)
        a = phi_eval(pair.small, z, c)
        b = quasi_pullback(pair, z, c)
        steps = 0
        while cap is None and max(a.truncation_bound, b.truncation_bound) > target:
            steps += 1
            if steps > 40:
                raise PhiError("could not reach the requested truncation bound")
            c += _shell_width(pair.small, z.y)
            a = phi_eval(pair.small, z, c)
            b = quasi_pullback(pair, z, c)
        ratios.append(cmath.exp(a.log_value - b.log_value))
        bounds.append(max(a.truncation_bound, b.truncation_bound))
        caps.append(c)
    mean = sum(ratios) / len(ratios)
    spread = max(abs(r / mean - 1.0) for r in ratios)
    return QuasiPullbackComparison(ratios, spread, bounds, caps)


# ---------------------------------------------------------------- sampling


def sample_points(m: DelPezzoModel, count: int, rng: np.random.Generator, depth=None, den: int = 7) -> list[TubePoint]:
    """Tube points with y = depth * c1 + small rational perturbation, x random."""
    depth = Fraction(depth) if depth is not None else default_depth(m)
    pts = []
    while len(pts) < count:
        pert = [Fraction(int(rng.integers(-2, 3)), 8 * den) for _ in range(m.rank)]
        y = tuple(depth * c + p for c, p in zip(m.c1, pert))
        if not kaehler_cone_contains(m, y):
            continue
        x = tuple(Fraction(int(rng.integers(-den, den + 1)), den) for _ in range(m.rank))
        pts.append(TubePoint(x, y))
    return pts


def default_depth(m: DelPezzoModel) -> Fraction:
    """Depth s for y ~ s*c1.

    Exponents grow like exp(2 pi sqrt(l)) and a^2 <= <a,c1>^2/deg, so the
    product converges once s > 1/sqrt(deg); low degrees go deeper still to
    keep the Lorentzian shells small.
    """
    table = {1: 4, 2: 3, 3: Fraction(5, 2), 4: 2, 5: Fraction(3, 2), 6: Fraction(3, 2),
             7: Fraction(5, 4), 8: Fraction(5, 4), 9: 1}
    return Fraction(table[m.degree])
