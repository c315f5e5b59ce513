"""Picard and Mukai lattices of Del Pezzo surfaces, their (-1)-classes and
effective/Kaehler cones.

Blow-up models use the basis ``H, E_1, ..., E_{9-d}`` with Gram
``diag(1, -1, ..., -1)``; the quadric ``P1 x P1`` uses the hyperbolic basis
``e, f`` of U.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .lattice import (
    Lattice,
    U,
    U_minus,
    diag,
    direct_sum,
    enumerate_lorentzian,
    enumerate_norm_vectors,
)

VARIANTS = ("generic", "Sigma0", "Sigma1", "P2")

Vec = tuple[int, ...]


class DelPezzoError(ValueError):
    pass


def default_variant(degree: int) -> str:
    return {8: "Sigma1", 9: "P2"}.get(degree, "generic")


@dataclass(frozen=True)
class DelPezzoModel:
    degree: int
    variant: str
    picard: Lattice
    c1: Vec
    basis_names: tuple[str, ...] = field(default=())

    @property
    def rank(self) -> int:
        return self.picard.rank

    @property
    def blowups(self) -> int:
        return 9 - self.degree if self.variant != "Sigma0" else 0

    def inner(self, a: Sequence, b: Sequence):
        g = self.picard.gram
        n = self.rank
        return sum(a[i] * g[i][j] * b[j] for i in range(n) if a[i] for j in range(n) if b[j])

    def norm(self, a: Sequence):
        return self.inner(a, a)

    @cached_property
    def minus_one_classes(self) -> tuple[Vec, ...]:
        return tuple(minus_one_classes(self))

    @cached_property
    def eff_generators(self) -> tuple[Vec, ...]:
        return tuple(effective_generators(self))

    def describe(self) -> dict:
        return {
            "degree": self.degree,
            "variant": self.variant,
            "basis": list(self.basis_names),
            "gram": [list(r) for r in self.picard.gram],
            "c1": list(self.c1),
            "minus_one_count": len(self.minus_one_classes),
            "eff_generators": [list(g) for g in self.eff_generators],
            # the beta-product congruence is degenerate when c1 is divisible by 2
            "c1_even": all(c % 2 == 0 for c in self.c1),
        }


def model(degree: int, variant: Optional[str] = None) -> DelPezzoModel:
    variant = variant or default_variant(degree)
    if variant not in VARIANTS:
        raise DelPezzoError(f"unknown variant {variant!r}")
    ok = (
        (variant == "generic" and 1 <= degree <= 7)
        or (variant in ("Sigma0", "Sigma1") and degree == 8)
        or (variant == "P2" and degree == 9)
    )
    if not ok:
        raise DelPezzoError("inconsistent variant")
    if variant == "Sigma0":
        lat = Lattice(U().gram, "L_8(even)")
        return DelPezzoModel(8, variant, lat, (2, 2), ("e", "f"))
    n = 9 - degree
    lat = Lattice(diag(1, n).gram, f"L_{degree}", diag(1, n).blocks)
    names = ("H",) + tuple(f"E{i}" for i in range(1, n + 1))
    return DelPezzoModel(degree, variant, lat, (3,) + (-1,) * n, names)


# ---------------------------------------------------------------- (-1)-classes


def minus_one_classes(m: DelPezzoModel) -> list[Vec]:
    """Classes with a^2 = -1 and <a, c1> = 1, via Lorentzian enumeration."""
    return sorted(v.coords for v in enumerate_norm_vectors(m.picard, -1, m.c1, 1))


def minus_one_classes_box(m: DelPezzoModel) -> list[Vec]:
    """Independent enumerator working directly in the blow-up coordinates.

    With a = H-coefficient and b_i = -(E_i-coefficient), the conditions read
    sum b_i = 3a - 1 and sum b_i^2 = a^2 + 1, so (3a-1)^2 <= n(a^2+1).
    """
    if m.variant == "Sigma0":
        # 2xy = -1 has no integer solutions
        return []
    n = m.blowups
    # (9 - n) a^2 - 6a + (1 - n) <= 0
    lead, disc = 9 - n, 36 - 4 * (9 - n) * (1 - n)
    if disc < 0:
        return []
    root = math.sqrt(disc)
    lo = math.floor((6 - root) / (2 * lead)) - 1
    hi = math.ceil((6 + root) / (2 * lead)) + 1
    out = []
    for a in range(lo, hi + 1):
        if (3 * a - 1) ** 2 > n * (a * a + 1):
            continue
        for bs in _sum_of_squares(n, a * a + 1, 3 * a - 1):
            out.append((a,) + tuple(-b for b in bs))
    return sorted(set(out))


def _sum_of_squares(n: int, sq: int, lin: int) -> list[tuple[int, ...]]:
    res: list[tuple[int, ...]] = []

    def rec(prefix: list[int], left_sq: int, left_lin: int, slots: int):
        if slots == 0:
            if left_sq == 0 and left_lin == 0:
                res.append(tuple(prefix))
            return
        # Cauchy-Schwarz on the remaining slots
        if left_lin * left_lin > slots * left_sq:
            return
        r = math.isqrt(left_sq)
        for b in range(-r, r + 1):
            prefix.append(b)
            rec(prefix, left_sq - b * b, left_lin - b, slots - 1)
            prefix.pop()

    rec([], sq, lin, n)
    return res


# ---------------------------------------------------------------- cones


def effective_generators(m: DelPezzoModel) -> list[Vec]:
    if m.variant == "P2":
        return [(1,)]
    if m.variant == "Sigma0":
        return [(1, 0), (0, 1)]
    if m.variant == "Sigma1":
        return [(0, 1), (1, -1)]
    gens = list(m.minus_one_classes)
    if not gens:
        raise DelPezzoError("empty generator list")
    return gens


def kaehler_cone_contains(m: DelPezzoModel, y: Sequence) -> bool:
    yq = [Fraction(t) for t in y]
    if m.norm(yq) <= 0:
        return False
    return all(m.inner(yq, g) > 0 for g in m.eff_generators)


def in_effective_cone(m: DelPezzoModel, a: Sequence) -> bool:
    """Exact rational cone membership over the listed generators."""
    return cone_coefficients(m.eff_generators, a) is not None


def is_effective_class(m: DelPezzoModel, a: Sequence[int]) -> bool:
    """Fast test for lattice classes with a^2 >= -1.

    Riemann-Roch on a Del Pezzo surface: chi(a) = 1 + (a^2 + a.c1)/2 and
    h^2(a) = h^0(K - a) = 0 once a.c1 > -deg.  Classes with a^2 >= 0 in the
    closed positive cone, and classes with a^2 = -1 and a.c1 > 0, are
    therefore effective.  Agreement with the LP is checked in the tests.
    """
    if not any(a):
        return False
    nm = m.norm(a)
    if nm < -1:
        raise DelPezzoError("fast effectivity test needs a^2 >= -1")
    return m.inner(a, m.c1) > 0


def cone_coefficients(gens: Sequence[Sequence[int]], target: Sequence) -> Optional[list[Fraction]]:
    """Nonnegative rational lambda with sum lambda_g g = target, or None.

    Phase-one simplex over Fractions with Bland's rule.
    """
    rows = len(target)
    cols = len(gens)
    a = [[Fraction(gens[j][i]) for j in range(cols)] for i in range(rows)]
    b = [Fraction(t) for t in target]
    for i in range(rows):
        if b[i] < 0:
            a[i] = [-x for x in a[i]]
            b[i] = -b[i]
    # tableau with artificial variables cols..cols+rows-1
    tab = [a[i] + [Fraction(int(i == r)) for r in range(rows)] + [b[i]] for i in range(rows)]
    basis = [cols + i for i in range(rows)]
    nvar = cols + rows
    while True:
        # reduced costs of the phase-one objective sum(artificials)
        cost = [Fraction(0)] * nvar
        for i in range(rows):
            if basis[i] >= cols:
                for j in range(nvar):
                    cost[j] -= tab[i][j]
        for i in range(rows):
            cost[basis[i]] = Fraction(0)
        for j in range(cols, nvar):
            if j not in basis:
                cost[j] += 1
        enter = next((j for j in range(nvar) if cost[j] < 0), None)
        if enter is None:
            break
        ratios = [(tab[i][-1] / tab[i][enter], basis[i], i) for i in range(rows) if tab[i][enter] > 0]
        if not ratios:
            break
        _, _, leave = min(ratios)
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(rows):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        basis[leave] = enter
    if any(basis[i] >= cols and tab[i][-1] != 0 for i in range(rows)):
        return None
    lam = [Fraction(0)] * cols
    for i in range(rows):
        if basis[i] < cols:
            lam[basis[i]] = tab[i][-1]
    return lam


def _min_norm_on_slice(m: DelPezzoModel, y: Sequence, cap) -> int:
    # a = sum l_g g with l_g >= 0: |a_perp| <= (max_g |g_perp|/<g,y>) * <a,y>
    y2 = float(m.norm([Fraction(t) for t in y]))
    worst = 0.0
    for g in m.eff_generators:
        gy = float(m.inner(g, [Fraction(t) for t in y]))
        perp = max(gy * gy / y2 - m.norm(g), 0.0)
        worst = max(worst, math.sqrt(perp) / gy)
    return -math.ceil((worst * float(cap)) ** 2 * (1 + 1e-9)) - 1


def enumerate_effective(m: DelPezzoModel, y: Sequence, cap) -> list[Vec]:
    """Nonzero lattice points of Eff with <a, y> <= cap, by exact LP filtering."""
    if not kaehler_cone_contains(m, y):
        raise DelPezzoError("y not in Kaehler cone")
    lo = _min_norm_on_slice(m, y, cap)
    pts = enumerate_lorentzian(m.picard, y, cap, lo, axis=m.c1)
    return [p for p in pts if in_effective_cone(m, p)]


# ---------------------------------------------------------------- Mukai side


@dataclass(frozen=True)
class MukaiLattice:
    base: DelPezzoModel

    @property
    def full(self) -> Lattice:
        lat = direct_sum(U_minus(), self.base.picard)
        return Lattice(lat.gram, f"Lambda_{self.base.degree}", lat.blocks)


def mukai_pairing(w1: Sequence, w2: Sequence, m: DelPezzoModel):
    """<(a,b,c),(a',b',c')> = b.b' - a c' - a' c with w = (a, b..., c)."""
    a1, b1, c1 = w1[0], w1[1:-1], w1[-1]
    a2, b2, c2 = w2[0], w2[1:-1], w2[-1]
    return m.inner(b1, b2) - a1 * c2 - a2 * c1


def mukai_point(m: DelPezzoModel, b: Sequence) -> tuple:
    """Isotropic vector (1, b, b^2/2) representing the tube point b."""
    nb = m.inner(b, b)
    return (1,) + tuple(b) + (nb / 2 if not isinstance(nb, int) else Fraction(nb, 2),)


def diagonal_isometry(m: DelPezzoModel) -> list[list[int]]:
    """Integral isometry from U(-1) + L_d (Mukai order a, c, H, E_i) onto I_2 + (-I_{10-d}).

    H -> e1+e2+e3, a -> e1+e3, c -> e2+e3, E_i -> e_{3+i}; columns are images.
    """
    if m.variant == "Sigma0":
        raise DelPezzoError("the even Mukai lattice has no diagonal model")
    n = m.rank + 2
    cols = [[0] * n for _ in range(n)]
    cols[0][0] = cols[0][2] = 1  # a
    cols[1][1] = cols[1][2] = 1  # c
    cols[2][0] = cols[2][1] = cols[2][2] = 1  # H
    for i in range(3, n):
        cols[i][i] = 1
    return [[cols[j][i] for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------- symmetries and blow-downs


def permutation_isometry(m: DelPezzoModel, perm: Sequence[int]) -> list[list[int]]:
    """Matrix permuting E_i -> E_perm[i] (0-based indices into the E's)."""
    if m.variant in ("Sigma0", "P2"):
        raise DelPezzoError("no exceptional classes to permute")
    n = m.rank
    mat = [[0] * n for _ in range(n)]
    mat[0][0] = 1
    for i, p in enumerate(perm):
        mat[1 + p][1 + i] = 1
    return mat


def cremona_isometry(m: DelPezzoModel, i: int = 0, j: int = 1, k: int = 2) -> list[list[int]]:
    """Quadratic transformation centred at E_i, E_j, E_k (0-based)."""
    if m.variant != "generic" or m.blowups < 3:
        raise DelPezzoError("Cremona needs at least three blow-ups")
    n = m.rank
    cols = [[int(r == c) for r in range(n)] for c in range(n)]
    ei, ej, ek = 1 + i, 1 + j, 1 + k
    h = [0] * n
    h[0], h[ei], h[ej], h[ek] = 2, -1, -1, -1
    cols[0] = h
    for a, (p, q) in ((ei, (ej, ek)), (ej, (ei, ek)), (ek, (ei, ej))):
        v = [0] * n
        v[0], v[p], v[q] = 1, -1, -1
        cols[a] = v
    return [[cols[c][r] for c in range(n)] for r in range(n)]


def symmetry_generators(m: DelPezzoModel) -> dict[str, list[list[int]]]:
    """Named isometries fixing c1 and Eff: identity, E-transpositions, Cremona, ruling swap."""
    n = m.rank
    out = {"identity": [[int(r == c) for c in range(n)] for r in range(n)]}
    if m.variant == "Sigma0":
        out["swap_rulings"] = [[0, 1], [1, 0]]
    elif m.variant == "generic" and m.blowups >= 2:
        for i in range(m.blowups - 1):
            perm = list(range(m.blowups))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            out[f"swap_E{i + 1}_E{i + 2}"] = permutation_isometry(m, perm)
        if m.blowups >= 3:
            out["cremona_E1_E2_E3"] = cremona_isometry(m)
    return out


def apply(mat: Sequence[Sequence[int]], v: Sequence) -> tuple:
    return tuple(sum(mat[r][c] * v[c] for c in range(len(v))) for r in range(len(mat)))


def check_isometry(m: DelPezzoModel, mat: Sequence[Sequence[int]]) -> tuple[bool, bool, bool]:
    """(is isometry, fixes c1, permutes the effective generators)."""
    n = m.rank
    cols = [[mat[r][c] for r in range(n)] for c in range(n)]
    g = m.picard.gram
    iso = all(m.inner(cols[a], cols[b]) == g[a][b] for a in range(n) for b in range(n))
    fixes = apply(mat, m.c1) == tuple(m.c1)
    gens = set(m.eff_generators)
    perm = {apply(mat, v) for v in gens} == gens
    return iso, fixes, perm


@dataclass(frozen=True)
class BlowupPair:
    """V = small, V~ = big = Bl_p(V); E in big and pi^* : Pic(V) -> Pic(V~)."""

    small: DelPezzoModel
    big: DelPezzoModel
    exceptional: Vec
    pullback: tuple[tuple[int, ...], ...]  # columns are images of the small basis

    def lift(self, v: Sequence) -> tuple:
        n = self.big.rank
        return tuple(sum(self.pullback[j][i] * v[j] for j in range(len(v))) for i in range(n))

    def project(self, a: Sequence) -> tuple:
        """Coordinates of the E-orthogonal part a' (with a = a' + tE) in the small basis, and t."""
        t = -self.big.inner(a, self.exceptional)  # E^2 = -1
        rest = [a[i] - t * self.exceptional[i] for i in range(self.big.rank)]
        # solve pullback * v = rest exactly
        mat = np.array(self.pullback, dtype=float).T
        sol, *_ = np.linalg.lstsq(mat, np.array(rest, dtype=float), rcond=None)
        v = tuple(int(round(x)) for x in sol)
        if self.lift(v) != tuple(rest):
            raise DelPezzoError("class does not decompose over the pulled-back lattice")
        return v, t


def blowup_pair(small_degree: int, small_variant: Optional[str], big_degree: int) -> BlowupPair:
    small = model(small_degree, small_variant)
    big = model(big_degree)
    if big_degree != small_degree - 1:
        raise DelPezzoError("models must be adjacent in degree")
    n = big.rank
    if small.variant == "Sigma0":
        # E = H - E1 - E2, e -> H - E1, f -> H - E2
        exc = (1, -1, -1)
        pull = ((1, -1, 0), (1, 0, -1))
    else:
        # E = last exceptional class, identity on the shared basis
        exc = tuple(int(i == n - 1) for i in range(n))
        pull = tuple(tuple(int(i == j) for i in range(n)) for j in range(small.rank))
    pair = BlowupPair(small, big, exc, pull)
    _verify_pair(pair)
    return pair


def _verify_pair(p: BlowupPair) -> None:
    big, small = p.big, p.small
    if big.norm(p.exceptional) != -1:
        raise DelPezzoError("exceptional class must have norm -1")
    cols = p.pullback
    for a in range(small.rank):
        if big.inner(cols[a], p.exceptional) != 0:
            raise DelPezzoError("pullback must land in E-perp")
        for b in range(small.rank):
            if big.inner(cols[a], cols[b]) != small.picard.gram[a][b]:
                raise DelPezzoError("pullback is not an isometry")
    # c1(V~) = pi^* c1(V) - E
    lifted = p.lift(small.c1)
    if tuple(x - e for x, e in zip(lifted, p.exceptional)) != tuple(big.c1):
        raise DelPezzoError("c1 does not transform as pi^* c1 - E")


CHAIN = (
    (9, "P2", 8),
    (8, "Sigma1", 7),
    (8, "Sigma0", 7),
    (7, None, 6),
    (6, None, 5),
    (5, None, 4),
    (4, None, 3),
    (3, None, 2),
    (2, None, 1),
)
