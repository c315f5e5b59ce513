"""Integral lattices: constructors, exact invariants, complements, enumeration
and a bounded embedding search.

Everything here is exact integer (or Fraction) arithmetic except the
Fincke-Pohst search, which uses floats only to prune and then filters every
candidate exactly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

IntMatrix = list[list[int]]


class LatticeError(ValueError):
    pass


E8_CARTAN = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, -1),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, -1, 0, 0, 0, 0, 2),
)


@dataclass(frozen=True)
class Lattice:
    gram: tuple[tuple[int, ...], ...]
    name: str = ""
    # sizes of an orthogonal block decomposition (used by the embedding search)
    blocks: tuple[int, ...] = ()

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        n = len(g)
        if any(len(r) != n for r in g):
            raise LatticeError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise LatticeError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)
        if not self.blocks:
            object.__setattr__(self, "blocks", (n,))
        if n and determinant(g) == 0:
            raise LatticeError("degenerate Gram matrix")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def array(self) -> np.ndarray:
        return np.array(self.gram, dtype=np.int64)

    def inner(self, v: Sequence[int], w: Sequence[int]) -> int:
        if len(v) != self.rank or len(w) != self.rank:
            raise LatticeError("dimension mismatch")
        g = self.gram
        return sum(v[i] * g[i][j] * w[j] for i in range(self.rank) if v[i] for j in range(self.rank) if w[j])

    def norm(self, v: Sequence[int]) -> int:
        return self.inner(v, v)

    def signature(self) -> tuple[int, int]:
        return signature(self.gram)

    def discriminant(self) -> int:
        return determinant(self.gram)

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def to_json(self) -> dict:
        return {"name": self.name, "gram": [list(r) for r in self.gram]}


@dataclass(frozen=True)
class LatticeVector:
    lattice: Lattice
    coords: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coords)
        if len(c) != self.lattice.rank:
            raise LatticeError("dimension mismatch")
        object.__setattr__(self, "coords", c)

    def inner(self, other: "LatticeVector") -> int:
        if other.lattice.gram != self.lattice.gram:
            raise LatticeError("dimension mismatch")
        return self.lattice.inner(self.coords, other.coords)

    def norm(self) -> int:
        return self.lattice.norm(self.coords)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.lattice, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(self.lattice, tuple(-a for a in self.coords))

    def __rmul__(self, n: int) -> "LatticeVector":
        return LatticeVector(self.lattice, tuple(n * a for a in self.coords))


@dataclass(frozen=True)
class LatticeEmbedding:
    source: Lattice
    target: Lattice
    # matrix[i][j]: coordinate i of the image of source basis vector j
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in r) for r in self.matrix)
        object.__setattr__(self, "matrix", m)
        if len(m) != self.target.rank or any(len(r) != self.source.rank for r in m):
            raise LatticeError("embedding matrix has the wrong shape")
        if induced_gram(self.target.gram, m) != [list(r) for r in self.source.gram]:
            raise LatticeError("matrix^T G matrix differs from the source Gram matrix")

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(self.matrix[i][j] for i in range(self.target.rank)) for j in range(self.source.rank)]

    def is_primitive(self) -> bool:
        return all(d == 1 for d in smith_invariants(self.columns()))

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "matrix": [list(r) for r in self.matrix],
        }


# ---------------------------------------------------------------- exact algebra


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    a = [list(map(int, r)) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def signature(g: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Sylvester counts (positive, negative) by symmetric Gaussian reduction."""
    a = [[Fraction(x) for x in r] for r in g]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            # all remaining diagonal entries vanish: mix in an off-diagonal partner
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            continue
        d = a[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = a[i][piv] / d
            if f:
                for t in range(n):
                    a[i][t] -= f * a[piv][t]
        for i in active:
            a[piv][i] = a[i][piv] = Fraction(0)
    return pos, neg


def induced_gram(g: Sequence[Sequence[int]], m: Sequence[Sequence[int]]) -> IntMatrix:
    """``m^T g m`` for an integer matrix given by rows."""
    gm = np.array(g, dtype=object).dot(np.array(m, dtype=object))
    return [[int(x) for x in row] for row in np.array(m, dtype=object).T.dot(gm)]


def integer_kernel(a: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Basis (as columns) of ``{x in Z^n : a x = 0}`` via column Hermite reduction.

    The unimodular transform is tracked; the columns of the transform that
    end up multiplying zero columns of the reduced matrix span the kernel.
    """
    rows = [list(map(int, r)) for r in a]
    n = ncols
    cols = [[rows[i][j] for i in range(len(rows))] for j in range(n)]
    u = [[int(i == j) for i in range(n)] for j in range(n)]  # u[j] = column j of U
    piv = 0
    for i in range(len(rows)):
        if piv >= n:
            break
        while True:
            nz = [j for j in range(piv, n) if cols[j][i] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: abs(cols[j][i]))
            cols[piv], cols[jmin] = cols[jmin], cols[piv]
            u[piv], u[jmin] = u[jmin], u[piv]
            done = True
            for j in range(piv + 1, n):
                if cols[j][i]:
                    q = cols[j][i] // cols[piv][i]
                    cols[j] = [x - q * y for x, y in zip(cols[j], cols[piv])]
                    u[j] = [x - q * y for x, y in zip(u[j], u[piv])]
                    if cols[j][i]:
                        done = False
            if done:
                piv += 1
                break
    kernel = [u[j] for j in range(piv, n)]
    assert all(not any(c) for c in cols[piv:])
    return _size_reduce(kernel)


def _size_reduce(basis: list[list[int]]) -> list[list[int]]:
    # LLL on the Euclidean norm keeps complement Gram entries small
    if len(basis) < 2:
        return basis
    return lll_reduce(basis)


def lll_reduce(basis: list[list[int]], delta: Fraction = Fraction(3, 4)) -> list[list[int]]:
    """Textbook exact LLL with respect to the standard dot product."""
    b = [list(v) for v in basis]
    n = len(b)

    def dot(x, y):
        return sum(p * q for p, q in zip(x, y))

    def gso():
        bs: list[list[Fraction]] = []
        mu = [[Fraction(0)] * n for _ in range(n)]
        nrm = []
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = dot(b[i], bs[j]) / nrm[j] if nrm[j] else Fraction(0)
                v = [x - mu[i][j] * y for x, y in zip(v, bs[j])]
            bs.append(v)
            nrm.append(dot(v, v))
        return mu, nrm

    k = 1
    mu, nrm = gso()
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                mu, nrm = gso()
        if nrm[k] >= (delta - mu[k][k - 1] ** 2) * nrm[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, nrm = gso()
            k = max(k - 1, 1)
    return b


def smith_invariants(vectors: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors of the matrix whose columns are ``vectors``.

    The span of the columns is a primitive sublattice exactly when every
    invariant factor equals 1.
    """
    a = [list(map(int, v)) for v in vectors]  # rows = given vectors (transpose is harmless)
    m = len(a)
    n = len(a[0]) if m else 0
    out = []
    t = 0
    while t < min(m, n):
        entries = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not entries:
            break
        _, i0, j0 = min(entries)
        a[t], a[i0] = a[i0], a[t]
        for r in a:
            r[t], r[j0] = r[j0], r[t]
        changed = True
        while changed:
            changed = False
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        changed = True
                        break
            if changed:
                continue
            p = a[t][t]
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    for r in a:
                        r[j] -= q * r[t]
                    if a[t][j]:
                        for r in a:
                            r[t], r[j] = r[j], r[t]
                        changed = True
                        break
            if changed:
                continue
            # divisibility condition for the remaining block
            p = a[t][t]
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p), None)
            if bad is not None:
                i, j = bad
                a[t] = [x + y for x, y in zip(a[t], a[i])]
                changed = True
        out.append(abs(a[t][t]))
        t += 1
    return out


# ---------------------------------------------------------------- constructors


def U() -> Lattice:
    return Lattice(((0, 1), (1, 0)), "U")


def U_minus() -> Lattice:
    return Lattice(((0, -1), (-1, 0)), "U(-1)")


def E8_minus() -> Lattice:
    return Lattice(tuple(tuple(-x for x in r) for r in E8_CARTAN), "E8(-1)")


def diag(p: int, q: int) -> Lattice:
    n = p + q
    return Lattice(
        tuple(tuple((1 if i < p else -1) if i == j else 0 for j in range(n)) for i in range(n)),
        f"I_{p},{q}",
        (1,) * n,
    )


def rescale(lat: Lattice, n: int) -> Lattice:
    if n == 0:
        raise LatticeError("rescaling factor must be nonzero")
    return Lattice(tuple(tuple(n * x for x in r) for r in lat.gram), f"{lat.name}({n})", lat.blocks)


def direct_sum(*parts: Lattice) -> Lattice:
    n = sum(p.rank for p in parts)
    g = [[0] * n for _ in range(n)]
    off = 0
    blocks: list[int] = []
    for p in parts:
        for i in range(p.rank):
            for j in range(p.rank):
                g[off + i][off + j] = p.gram[i][j]
        off += p.rank
        blocks.extend(p.blocks)
    return Lattice(tuple(map(tuple, g)), "+".join(p.name for p in parts), tuple(blocks))


def k3_lattice() -> Lattice:
    lat = direct_sum(U(), U(), U(), E8_minus(), E8_minus())
    return Lattice(lat.gram, "L_K3", lat.blocks)


def lambda_k(k: int, even: bool = False) -> Lattice:
    """Unimodular lattice of signature (2, 10-k).

    Odd form ``I_2 + (-I_{10-k})``.  The even form ``U(-1) + U`` only exists at
    signature (2, 2).
    """
    if not 1 <= k <= 9:
        raise LatticeError("k must lie in 1..9")
    if even:
        if k != 8:
            raise LatticeError("an even unimodular lattice of this signature exists only for k = 8")
        lat = direct_sum(U_minus(), U())
        return Lattice(lat.gram, "Lambda_8(even)", lat.blocks)
    lat = diag(2, 10 - k)
    return Lattice(lat.gram, f"Lambda_{k}", lat.blocks)


# ---------------------------------------------------------------- complements


def orthogonal_complement(emb: LatticeEmbedding) -> tuple[Lattice, LatticeEmbedding]:
    """Complement of the image of ``emb`` inside its target."""
    g = emb.target.gram
    cols = emb.columns()
    # constraints: <c, x> = 0 for every image column c
    rows = [[sum(c[i] * g[i][j] for i in range(len(c))) for j in range(emb.target.rank)] for c in cols]
    kernel = integer_kernel(rows, emb.target.rank)
    m = [[kernel[j][i] for j in range(len(kernel))] for i in range(emb.target.rank)]
    gram = induced_gram(g, m)
    if determinant(gram) == 0:
        raise LatticeError("degenerate complement")
    comp = Lattice(tuple(map(tuple, gram)), f"({emb.source.name})^perp")
    return comp, LatticeEmbedding(comp, emb.target, tuple(map(tuple, m)))


def saturate(vectors: Sequence[Sequence[int]], rank: int) -> list[list[int]]:
    """Basis of the primitive closure (Q-span intersected with Z^n)."""
    # the double kernel of the span is its saturation
    first = integer_kernel([list(v) for v in vectors], rank)
    return integer_kernel(first, rank) if first else [[int(i == j) for i in range(rank)] for j in range(rank)]


# ---------------------------------------------------------------- enumeration


def fincke_pohst(q: np.ndarray, bound: float, center: Optional[np.ndarray] = None) -> list[tuple[int, ...]]:
    """All integer x with (x - center)^T q (x - center) <= bound, q positive definite.

    The float search is padded by a relative slack; callers filter exactly.
    """
    n = q.shape[0]
    c = [0.0] * n if center is None else [float(t) for t in center]
    r = np.linalg.cholesky(q).T
    dsq = (np.diag(r) ** 2).tolist()
    mu = (r / np.diag(r)[:, None]).tolist()
    slack = 1e-9 * (1.0 + abs(bound))
    x = [0] * n
    # shift[i] = sum_{j>i} mu_ij (x_j - c_j), maintained incrementally
    shift = [[0.0] * n for _ in range(n + 1)]
    out: list[tuple[int, ...]] = []

    def rec(i: int, remaining: float) -> None:
        centre = c[i] - shift[i + 1][i]
        rad = math.sqrt(max(remaining + slack, 0.0) / dsq[i])
        lo, hi = math.ceil(centre - rad - 1e-12), math.floor(centre + rad + 1e-12)
        if i == 0:
            for v in range(lo, hi + 1):
                x[0] = v
                out.append(tuple(x))
            return
        row_prev = shift[i + 1]
        row = shift[i]
        mu_i = [mu[j][i] for j in range(i)]
        for v in range(lo, hi + 1):
            left = remaining - dsq[i] * (v - centre) ** 2
            if left < -slack:
                continue
            x[i] = v
            dv = v - c[i]
            for j in range(i):
                row[j] = row_prev[j] + mu_i[j] * dv
            rec(i - 1, left)

    rec(n - 1, float(bound))
    return out


def lorentz_majorant(lat: Lattice, y: Sequence) -> tuple[np.ndarray, float]:
    """Positive-definite form ``Q_y(a) = 2<a,y>^2/y^2 - a^2`` and ``y^2``."""
    g = np.array(lat.gram, dtype=float)
    yv = np.array([float(t) for t in y])
    gy = g @ yv
    y2 = float(yv @ gy)
    if y2 <= 0:
        raise LatticeError("functional not positive")
    return 2.0 * np.outer(gy, gy) / y2 - g, y2


class _Slicer:
    """Level decomposition ``L -> {<a, axis> = n}`` with ``axis^2 > 0``.

    Each level is a translate of the negative-definite lattice
    ``K = axis^perp``; a level search is Fincke-Pohst on ``-K`` with a shifted
    center, which only visits vectors whose norm is at least the floor.
    """

    def __init__(self, lat: Lattice, axis: Sequence[int]):
        g = [list(r) for r in lat.gram]
        n = lat.rank
        self.axis = list(axis)
        self.ga = [sum(g[i][j] * self.axis[j] for j in range(n)) for i in range(n)]
        self.a2 = sum(a * b for a, b in zip(self.axis, self.ga))
        if self.a2 <= 0:
            raise LatticeError("slicing axis must have positive norm")
        cols = integer_kernel([self.ga], n)
        self.basis = np.array(cols, dtype=np.int64).reshape(len(cols), n).T  # n x (n-1), columns span K
        gk = self.basis.T @ np.array(g, dtype=np.int64) @ self.basis
        self.q = -gk.astype(float)
        self.gram = np.array(g, dtype=float)
        # a vector u with <u, axis> = gcd of the entries of G axis
        self.step, self.u = _bezout(self.ga)

    def level(self, n: int, floor_norm: int, shift: Sequence[int], mod: int) -> Optional[np.ndarray]:
        """Vectors ``a = shift + mod*b`` with ``<a,axis> = n`` and ``a^2 >= floor_norm`` (padded)."""
        bound = (Fraction(n * n, self.a2) - floor_norm) / (mod * mod)
        if bound < 0:
            return None
        c = sum(x * y for x, y in zip(shift, self.ga))
        r, rem = divmod(n - c, mod)
        if rem or r % self.step:
            return None
        base = np.array(shift, dtype=np.int64) + mod * (r // self.step) * np.array(self.u, dtype=np.int64)
        if self.basis.shape[1] == 0:
            return base[None, :]
        # coordinates of the K-component of base
        perp = base - (float(base @ self.ga) / self.a2) * np.array(self.axis, dtype=float)
        t0 = np.linalg.solve(self.q, -(self.basis.T @ self.gram @ perp))
        pts = fincke_pohst(self.q, float(bound), center=-t0 / mod)
        if not pts:
            return None
        w = np.array(pts, dtype=np.int64)
        return base + mod * (w @ self.basis.T)


def _bezout(v: Sequence[int]) -> tuple[int, list[int]]:
    g, coef = 0, [0] * len(v)
    for i, x in enumerate(v):
        if x == 0:
            continue
        if g == 0:
            g, coef = abs(x), [0] * len(v)
            coef[i] = 1 if x > 0 else -1
            continue
        d, s, t = _ext_gcd(g, x)
        coef = [s * c for c in coef]
        coef[i] += t
        g = d
    if g == 0:
        raise LatticeError("zero functional")
    return g, coef


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


_SLICERS: dict = {}


def _slicer(lat: Lattice, axis: Sequence[int]) -> _Slicer:
    key = (lat.gram, tuple(axis))
    sl = _SLICERS.get(key)
    if sl is None:
        sl = _SLICERS[key] = _Slicer(lat, axis)
    return sl


def _primitive_along(y: Sequence[Fraction]) -> list[int]:
    den = 1
    for t in y:
        den = den * t.denominator // math.gcd(den, t.denominator)
    v = [int(t * den) for t in y]
    g = 0
    for t in v:
        g = math.gcd(g, t)
    return [t // g for t in v]


def enumerate_lorentzian(
    lat: Lattice,
    y: Sequence,
    cap,
    min_norm: int,
    max_norm: Optional[int] = None,
    coset: Optional[tuple[Sequence[int], int]] = None,
    axis: Optional[Sequence[int]] = None,
) -> list[tuple[int, ...]]:
    """Vectors a with ``min_norm <= a^2 (<= max_norm)`` and ``0 < <a,y> <= cap``.

    See :func:`lorentzian_array`; this wrapper returns tuples.
    """
    arr = lorentzian_array(lat, y, cap, min_norm, max_norm, coset, axis)
    return [tuple(int(t) for t in row) for row in arr]


def lorentzian_array(
    lat: Lattice,
    y: Sequence,
    cap,
    min_norm: int,
    max_norm: Optional[int] = None,
    coset: Optional[tuple[Sequence[int], int]] = None,
    axis: Optional[Sequence[int]] = None,
) -> np.ndarray:
    """Vectors a with ``min_norm <= a^2 (<= max_norm)`` and ``0 < <a,y> <= cap``.

    The search runs level by level along an integral ``axis`` of positive norm
    (default: the primitive vector on the ray of y).  Writing ``a`` against y,
    ``a^2 >= -M`` and ``<a,y> <= cap`` bound the level ``<a,axis>`` on both
    sides.  ``coset=(c, m)`` restricts to c + mZ^n.  Output is sorted by height;
    all comparisons after the float search are exact.
    """
    if lat.signature()[0] != 1:
        raise LatticeError("lattice must have signature (1, r-1)")
    yq = [Fraction(t) for t in y]
    capq = Fraction(cap)
    y2 = _norm_q(lat, yq)
    if y2 <= 0:
        raise LatticeError("functional not positive")
    empty = np.zeros((0, lat.rank), dtype=np.int64)
    if capq <= 0:
        return empty
    ax = list(axis) if axis is not None else _primitive_along(yq)
    sl = _slicer(lat, ax)
    ya = sum(a * b for a, b in zip(yq, sl.ga))
    if ya <= 0:
        raise LatticeError("axis not in the cone of y")
    m_neg = max(-min_norm, 0)
    # |a_perp|^2 <= h^2/y^2 + M and <a,axis> = h<y,axis>/y^2 + <a_perp, axis_perp>
    d = math.sqrt(max(float(ya * ya / y2 - sl.a2), 0.0))
    spread = math.sqrt(float(capq * capq / y2) + m_neg) * d
    n_hi = math.floor(float(capq * ya / y2) + spread + 1e-9)
    n_lo = math.ceil(-spread - 1e-9)
    shift, mod = (list(coset[0]), coset[1]) if coset is not None else ([0] * lat.rank, 1)
    blocks = [sl.level(n, min_norm, shift, mod) for n in range(n_lo, n_hi + 1)]
    blocks = [b for b in blocks if b is not None]
    if not blocks:
        return empty
    a = np.concatenate(blocks)
    g = np.array(lat.gram, dtype=np.int64)
    den = 1
    for t in yq:
        den = den * t.denominator // math.gcd(den, t.denominator)
    ynum = np.array([int(t * den) for t in yq], dtype=np.int64)
    h = a @ (g @ ynum)  # den * <a, y>, exact in int64 for the sizes used here
    keep = (h > 0) & (h <= math.floor(capq * den))
    nrm = np.einsum("ij,jk,ik->i", a, g, a)
    keep &= nrm >= min_norm
    if max_norm is not None:
        keep &= nrm <= max_norm
    a, h = a[keep], h[keep]
    order = np.lexsort(tuple(a[:, j] for j in range(a.shape[1] - 1, -1, -1)) + (h,))
    return a[order]


def _norm_q(lat: Lattice, v: Sequence[Fraction]) -> Fraction:
    g = lat.gram
    return sum(v[i] * g[i][j] * v[j] for i in range(lat.rank) for j in range(lat.rank))


def enumerate_norm_vectors(lat: Lattice, target_norm: int, functional: Sequence, height_cap) -> list[LatticeVector]:
    """Every v with v^2 = target_norm and 0 < <v, functional> <= height_cap."""
    pts = enumerate_lorentzian(lat, functional, height_cap, target_norm, target_norm)
    return [LatticeVector(lat, p) for p in pts]


def enumerate_definite(lat: Lattice, norm: int) -> list[tuple[int, ...]]:
    """All vectors of a given norm in a definite lattice (negative allowed)."""
    g = np.array(lat.gram, dtype=float)
    sign = 1 if norm >= 0 else -1
    pts = fincke_pohst(sign * g, abs(norm))
    return sorted(p for p in pts if lat.norm(p) == norm)


# ---------------------------------------------------------------- embedding search


def _block_offsets(lat: Lattice) -> list[tuple[int, int]]:
    out, off = [], 0
    for b in lat.blocks:
        out.append((off, b))
        off += b
    return out


def _block_vectors(lat: Lattice, off: int, size: int, bound: int, norms: set[int]) -> dict[int, list[tuple[int, ...]]]:
    sub = [row[off : off + size] for row in lat.gram[off : off + size]]
    sig = signature(sub)
    found: dict[int, list[tuple[int, ...]]] = {}
    if sig[0] == 0 or sig[1] == 0:
        sublat = Lattice(tuple(map(tuple, sub)))
        for nm in norms:
            if nm == 0 or (nm > 0) != (sig[0] > 0):
                continue
            vs = enumerate_definite(sublat, nm)
            vs = [v for v in vs if max(map(abs, v)) <= max(bound, 2)]
            if vs:
                found[nm] = vs
    else:
        for v in itertools.product(range(-bound, bound + 1), repeat=size):
            if not any(v):
                continue
            nm = sum(v[i] * sub[i][j] * v[j] for i in range(size) for j in range(size))
            if nm in norms:
                found.setdefault(nm, []).append(v)
    for nm in found:
        found[nm].sort(key=lambda v: (sum(map(abs, v)), [-x for x in v]))
    return found


def embedding_search(
    source: Lattice,
    target: Lattice,
    coefficient_bound: int = 3,
    primitive: bool = True,
    max_nodes: int = 200000,
) -> Optional[LatticeEmbedding]:
    """Backtracking search for a Gram-exact (and by default primitive) embedding.

    Candidate images are supported on one block of the target, or on two
    blocks when a single block cannot realize the required norm.  Returns
    ``None`` if nothing is found within the bounds; that is inconclusive.
    """
    if source.rank > target.rank:
        raise LatticeError("source rank exceeds target rank")
    s = source.gram
    n = target.rank
    needed = {s[i][i] for i in range(source.rank)}
    offsets = _block_offsets(target)
    # norms a single block might contribute to a two-block candidate
    parts_norms = set()
    for nm in needed:
        for d in range(-4, 5):
            parts_norms.update({d, nm - d})
    per_block = [
        _block_vectors(target, off, size, coefficient_bound, needed | parts_norms) for off, size in offsets
    ]

    def embed(bi: int, v: tuple[int, ...]) -> tuple[int, ...]:
        off, size = offsets[bi]
        out = [0] * n
        out[off : off + size] = v
        return tuple(out)

    pools: dict[int, list[tuple[int, ...]]] = {}
    for nm in needed:
        single = [embed(bi, v) for bi, vs in enumerate(per_block) for v in vs.get(nm, [])]
        double = []
        for b1, b2 in itertools.combinations(range(len(offsets)), 2):
            for n1, vs1 in per_block[b1].items():
                vs2 = per_block[b2].get(nm - n1)
                if not vs2:
                    continue
                for v1 in vs1[:60]:
                    for v2 in vs2[:60]:
                        w = list(embed(b1, v1))
                        off2, size2 = offsets[b2]
                        w[off2 : off2 + size2] = v2
                        double.append(tuple(w))
        pools[nm] = single + double

    tg = target.gram
    chosen: list[tuple[int, ...]] = []
    gvec: list[list[int]] = []  # G * chosen[i]
    nodes = 0

    def rec(i: int) -> bool:
        nonlocal nodes
        if i == source.rank:
            return True
        for v in pools[s[i][i]]:
            nodes += 1
            if nodes > max_nodes:
                return False
            if any(sum(a * b for a, b in zip(v, gvec[j])) != s[i][j] for j in range(i)):
                continue
            if v in chosen:
                continue
            if primitive and any(d != 1 for d in smith_invariants(chosen + [v])):
                continue
            chosen.append(v)
            gvec.append([sum(tg[r][c] * v[c] for c in range(n)) for r in range(n)])
            if rec(i + 1):
                return True
            chosen.pop()
            gvec.pop()
        return False

    if not rec(0):
        return None
    m = tuple(tuple(chosen[j][i] for j in range(source.rank)) for i in range(n))
    return LatticeEmbedding(source, target, m)
