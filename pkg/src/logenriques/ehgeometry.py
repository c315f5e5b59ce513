"""Eguchi-Hanson potential, metric and curvature on C^2 / {+-1}.

With u = |z|^2 and s = sqrt(u^2 + eps^2) the potential is

    F_eps(z) = s + eps log(u / (s + eps)),      F' = s / u,   F'' = -eps^2 / (s u^2),

so the Kaehler metric g_{i jbar} = F' delta_ij + F'' zbar_i z_j has det g = 1.
Everything U(2)-invariant is written in terms of u; the curvature routine
only ever looks at the points (r, 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np



class EHError(ValueError):
    pass


@dataclass(frozen=True)
class ConePoint:
    """Representative z of the orbit {z, -z}."""

    z: tuple[complex, complex]

    def __post_init__(self):
        if self.norm == 0.0:
            raise EHError("singular point: z = 0")

    @classmethod
    def of(cls, z1: complex, z2: complex = 0.0) -> "ConePoint":
        return cls((complex(z1), complex(z2)))

    @property
    def u(self) -> float:
        return abs(self.z[0]) ** 2 + abs(self.z[1]) ** 2

    @property
    def norm(self) -> float:
        return math.hypot(abs(self.z[0]), abs(self.z[1]))

    def scaled(self, t: float) -> "ConePoint":
        return ConePoint((self.z[0] * t, self.z[1] * t))


@dataclass(frozen=True)
class HermitianForm2:
    matrix: np.ndarray

    def __post_init__(self):
        m = self.matrix
        if m.shape != (2, 2):
            raise EHError("expected a 2x2 matrix")
        scale = max(1.0, float(np.abs(m).max()))
        if float(np.abs(m - m.conj().T).max()) > 1e-12 * scale:
            raise EHError("matrix is not Hermitian")

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.matrix).real)

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)

    @property
    def min_eigenvalue(self) -> float:
        return float(self.eigenvalues()[0])


def _zarr(z) -> np.ndarray:
    if isinstance(z, ConePoint):
        return np.array(z.z, dtype=complex)
    return np.asarray(z, dtype=complex)


def _u(z: np.ndarray) -> np.ndarray:
    return np.sum(z.real**2 + z.imag**2, axis=-1)


# ---------------------------------------------------------------- potential

def _F_of_u(u, eps):
    if eps == 0:
        return u
    s = np.hypot(u, eps)
    return s + eps * np.log(u / (s + eps))


def _E_of_u(u, eps):
    """F_eps - u written without cancellation at large u."""
    if eps == 0:
        return np.zeros_like(u) if isinstance(u, np.ndarray) else 0.0
    s = np.hypot(u, eps)
    first = eps * eps / (s + u)
    return first - eps * np.log1p((first + eps) / u)


def _E_derivs(u, eps):
    """(E, dE/du, d2E/du2) as functions of u."""
    if eps == 0:
        z = np.zeros_like(u)
        return z, z, z
    s = np.hypot(u, eps)
    return _E_of_u(u, eps), eps * eps / ((s + u) * u), -eps * eps / (s * u * u)


def eh_potential(z, eps: float) -> float:
    """F_eps(z); reduces to |z|^2 at eps = 0."""
    if eps < 0:
        raise EHError("eps must be nonnegative")
    u = _u(_zarr(z))
    if np.any(u == 0):
        raise EHError("singular point: z = 0")
    return _F_of_u(u, eps)


@dataclass(frozen=True)
class ErrorTerm:
    total: float
    e1: float
    e2: float


def error_term(z, eps: float) -> ErrorTerm:
    """E(z, eps) = F_eps(z) - |z|^2 with the split eps*E1(w) + eps*E2(w), w = z/sqrt(eps).

    E1(w) = sqrt(|w|^4 + 1) - |w|^2 and E2(w) = log(|w|^2 / (sqrt(|w|^4 + 1) + 1)).
    """
    u = float(_u(_zarr(z)))
    if u == 0:
        raise EHError("singular point: z = 0")
    if eps == 0:
        return ErrorTerm(0.0, 0.0, 0.0)
    w = u / eps
    e1 = 1.0 / (math.hypot(w, 1.0) + w)
    e2 = -math.log1p((e1 + 1.0) / w)
    return ErrorTerm(float(_E_of_u(u, eps)), eps * e1, eps * e2)


def error_decay_constant(radii: Sequence[float], power: float = 2.0, directions: int = 8,
                         seed: int = 0) -> float:
    """sup of |E(z,1)| (1 + |z|)^power over sampled shells."""
    rng = np.random.default_rng(seed)
    best = 0.0
    for r in radii:
        for _ in range(directions):
            v = rng.normal(size=4)
            v *= r / np.linalg.norm(v)
            z = (complex(v[0], v[1]), complex(v[2], v[3]))
            best = max(best, abs(error_term(z, 1.0).total) * (1.0 + r) ** power)
    return best


# ------------------------------------------------------------------- metrics

def _radial_metric(z: np.ndarray, d1, d2) -> np.ndarray:
    """psi'(u) I + psi''(u) zbar z^T for a potential psi(|z|^2); broadcasts over z[..., 2]."""
    d1 = np.asarray(d1)[..., None, None]
    d2 = np.asarray(d2)[..., None, None]
    outer = z.conj()[..., :, None] * z[..., None, :]
    return d1 * np.eye(2) + d2 * outer


def eh_metric_array(z: np.ndarray, eps: float) -> np.ndarray:
    """Vectorized analytic metric, z of shape (..., 2)."""
    z = np.asarray(z, dtype=complex)
    u = _u(z)
    if np.any(u == 0):
        raise EHError("singular point: z = 0")
    if eps == 0:
        return np.broadcast_to(np.eye(2, dtype=complex), z.shape[:-1] + (2, 2)).copy()
    s = np.hypot(u, eps)
    return _radial_metric(z, s / u, -eps * eps / (s * u * u))


def eh_metric(z, eps: float) -> HermitianForm2:
    return HermitianForm2(eh_metric_array(_zarr(z), eps))


def complex_hessian(f: Callable[[np.ndarray], float], z, h: float) -> np.ndarray:
    """d^2 f / dz_i dzbar_j by central differences in the four real coordinates."""
    z = _zarr(z)
    x = np.concatenate([z.real, z.imag])

    def call(v):
        return float(f(v[:2] + 1j * v[2:]))

    H = np.empty((4, 4))
    f0 = call(x)
    for a in range(4):
        ea = np.zeros(4)
        ea[a] = h
        H[a, a] = (call(x + ea) - 2 * f0 + call(x - ea)) / h**2
        for b in range(a + 1, 4):
            eb = np.zeros(4)
            eb[b] = h
            H[a, b] = H[b, a] = (
                call(x + ea + eb) - call(x + ea - eb) - call(x - ea + eb) + call(x - ea - eb)
            ) / (4 * h * h)
    xx, yy, xy = H[:2, :2], H[2:, 2:], H[:2, 2:]
    # d_i dbar_j = (1/4)(dx_i - i dy_i)(dx_j + i dy_j)
    return 0.25 * (xx + yy + 1j * (xy - xy.T))


def eh_metric_fd(z, eps: float, h: float = 1e-4) -> np.ndarray:
    return complex_hessian(lambda w: eh_potential(w, eps), z, h)


# -------------------------------------------------------------------- cutoffs

def _smoothstep7(x):
    x = np.clip(x, 0.0, 1.0)
    return x**4 * (35 - 84 * x + 70 * x**2 - 20 * x**3)


def _smoothstep7_d(x):
    x = np.clip(x, 0.0, 1.0)
    return 140 * x**3 * (1 - x) ** 3


def _smoothstep7_dd(x):
    x = np.clip(x, 0.0, 1.0)
    return 420 * x**2 * (1 - x) ** 2 * (1 - 2 * x)


def _bump_parts(x):
    """exp(-1/x) and its first two derivatives, zero for x <= 0.01 (below 1e-40 anyway)."""
    x = np.asarray(x, dtype=float)
    ok = x > 0.01
    xs = np.where(ok, x, 1.0)
    f = np.where(ok, np.exp(-1.0 / xs), 0.0)
    return f, f / xs**2, f * (1.0 / xs**4 - 2.0 / xs**3)


@dataclass(frozen=True)
class CutoffSpec:
    """rho(t) = 1 for t <= 1, 0 for t >= 2; rho_delta(t) = rho(t / delta).

    kind "smoothstep7": 1 - S(t - 1) with the degree-7 smoothstep S (C^3 junctions).
    kind "exp_bump": f(2 - t) / (f(2 - t) + f(t - 1)), f(x) = exp(-1/x) (C^infinity).
    """

    kind: str = "smoothstep7"
    delta: float = 1.0

    def __post_init__(self):
        if self.kind not in ("smoothstep7", "exp_bump"):
            raise EHError(f"unknown cutoff {self.kind!r}")
        if not self.delta > 0:
            raise EHError("delta must be positive")

    def with_delta(self, delta: float) -> "CutoffSpec":
        return CutoffSpec(self.kind, delta)

    def profile(self, t):
        """(rho, rho', rho'') of the unscaled profile."""
        t = np.asarray(t, dtype=float)
        if self.kind == "smoothstep7":
            x = t - 1.0
            return 1.0 - _smoothstep7(x), -_smoothstep7_d(x), -_smoothstep7_dd(x)
        A, dA, ddA = _bump_parts(2.0 - t)
        B, dB, ddB = _bump_parts(t - 1.0)
        dA = -dA  # d/dt f(2 - t)
        D = A + B
        N = dA * B - A * dB
        rho = np.where(t <= 1, 1.0, np.where(t >= 2, 0.0, A / np.where(D > 0, D, 1.0)))
        Dsafe = np.where(D > 0, D, 1.0)
        d1 = np.where(D > 0, N / Dsafe**2, 0.0)
        dN = ddA * B - A * ddB
        dD = dA + dB
        d2 = np.where(D > 0, (dN * Dsafe - 2 * N * dD) / Dsafe**3, 0.0)
        return rho, d1, d2

    def __call__(self, r):
        return self.profile(np.asarray(r, dtype=float) / self.delta)[0]


def _glued_radial(u, eps, cutoff: CutoffSpec):
    """(psi, psi', psi'') in u for psi = u + rho_delta(sqrt u) E(u, eps)."""
    d = cutoff.delta
    r = np.sqrt(u)
    rho, rho1, rho2 = cutoff.profile(r / d)
    R1 = rho1 / (2 * d * r)
    R2 = rho2 / (4 * d * d * u) - rho1 / (4 * d * u * r)
    E, E1, E2 = _E_derivs(u, eps)
    return u + rho * E, 1.0 + R1 * E + rho * E1, R2 * E + 2 * R1 * E1 + rho * E2


def glued_potential(z, eps: float, delta: float, cutoff: Optional[CutoffSpec] = None) -> float:
    """phi_{eps,delta}(z) = |z|^2 + rho_delta(|z|) E(z, eps)."""
    cut = (cutoff or CutoffSpec()).with_delta(delta)
    u = _u(_zarr(z))
    if np.any(u == 0):
        raise EHError("singular point: z = 0")
    return _glued_radial(u, eps, cut)[0]


def glued_metric_array(z: np.ndarray, eps: float, delta: float,
                       cutoff: Optional[CutoffSpec] = None) -> np.ndarray:
    cut = (cutoff or CutoffSpec()).with_delta(delta)
    z = np.asarray(z, dtype=complex)
    _, d1, d2 = _glued_radial(_u(z), eps, cut)
    return _radial_metric(z, d1, d2)


def glued_metric(z, eps: float, delta: float, cutoff: Optional[CutoffSpec] = None,
                 method: str = "fd", h: Optional[float] = None) -> HermitianForm2:
    """i d dbar phi_{eps,delta}; "fd" differentiates the potential, "radial" uses psi', psi''."""
    if method == "radial":
        return HermitianForm2(glued_metric_array(_zarr(z), eps, delta, cutoff))
    if method != "fd":
        raise EHError(f"unknown method {method!r}")
    zz = _zarr(z)
    step = h if h is not None else 1e-4 * max(float(np.sqrt(_u(zz))), delta)
    m = complex_hessian(lambda w: glued_potential(w, eps, delta, cutoff), zz, step)
    return HermitianForm2(0.5 * (m + m.conj().T))


# --------------------------------------------------------------- positivity

@dataclass
class ProbeResult:
    eps_threshold: float
    margins: list[tuple[float, float]]
    monotone: bool
    radii: tuple[float, float, int]
    note: str = "threshold is the largest positive grid value; it depends on the grid"


def min_glued_eigenvalue(eps: float, delta: float, cutoff: CutoffSpec,
                         radii: np.ndarray) -> float:
    """Smallest eigenvalue over the radial grid; the eigenvalues are psi' and psi' + u psi''."""
    u = np.asarray(radii, dtype=float) ** 2
    _, d1, d2 = _glued_radial(u, eps, cutoff.with_delta(delta))
    return float(min(d1.min(), (d1 + u * d2).min()))


def positivity_probe(cutoff: CutoffSpec, delta: float, eps_grid: Optional[Sequence[float]] = None,
                     n_radii: int = 400) -> ProbeResult:
    """Largest eps in the grid (scanning upward) whose glued metric stays positive on [delta/2, 4 delta].

    The default grid is eps / delta^2 in geomspace(1e-3, 10, 81).
    """
    radii = np.linspace(delta / 2, 4 * delta, n_radii)
    if eps_grid is None:
        eps_grid = delta**2 * np.geomspace(1e-3, 10.0, 81)
    grid = sorted(float(e) for e in eps_grid)
    margins = [(e, min_glued_eigenvalue(e, delta, cutoff, radii)) for e in grid]
    best = None
    for e, m in margins:
        if m <= 0:
            break
        best = e
    if best is None:
        raise EHError("no positive eps found on grid")
    monotone = all(b[1] <= a[1] + 1e-15 for a, b in zip(margins, margins[1:]))
    return ProbeResult(best, margins, monotone, (delta / 2, 4 * delta, n_radii))


def quasi_isometry_constants(eps: float, delta: float, cutoff: Optional[CutoffSpec] = None,
                             radii: Optional[Sequence[float]] = None) -> tuple[float, float]:
    """Extreme generalized eigenvalues of glued_metric against eh_metric over sampled radii."""
    rr = np.asarray(radii if radii is not None else np.linspace(delta / 2, 4 * delta, 200))
    z = np.stack([rr.astype(complex), np.zeros_like(rr, dtype=complex)], axis=-1)
    g = glued_metric_array(z, eps, delta, cutoff)
    e = eh_metric_array(z, eps)
    # both are diagonal at (r, 0)
    ratios = np.concatenate([g[:, 0, 0].real / e[:, 0, 0].real, g[:, 1, 1].real / e[:, 1, 1].real])
    return float(ratios.min()), float(ratios.max())


# ------------------------------------------------------------ Chern-Weil c2

def eh_metric_chart(w: np.ndarray, t: np.ndarray, eps: float) -> np.ndarray:
    """EH metric in the resolution chart (w, t) -> z = sqrt(w) (1, t) of T*P^1.

    With q = 1 + |t|^2, u = |w| q and S = sqrt(u^2 + eps^2):
    g_wwbar = q^2 / (4S), g_wtbar = wbar t q / (2S), g_ttbar = (u^2 q + eps^2) / (S q^2).
    Smooth through the exceptional curve w = 0 and of determinant 1/4.
    """
    w = np.asarray(w, dtype=complex)
    t = np.asarray(t, dtype=complex)
    q = 1.0 + (t * t.conj()).real
    u2 = (w * w.conj()).real * q * q
    S = np.sqrt(u2 + eps * eps)
    out = np.empty(w.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = q * q / (4 * S)
    out[..., 0, 1] = w.conj() * t * q / (2 * S)
    out[..., 1, 0] = w * t.conj() * q / (2 * S)
    out[..., 1, 1] = (u2 * q + eps * eps) / (S * q * q)
    return out


def _connection(metric, p: np.ndarray, h: np.ndarray) -> np.ndarray:
    """A_k = (d_k G) G^{-1} by central differences; result (..., k, 2, 2)."""
    Ginv = np.linalg.inv(metric(p))
    out = []
    for k in range(2):
        e = np.zeros(2, dtype=complex)
        e[k] = 1.0
        hk = h[..., k, None] * e
        den = 2 * h[..., k, None, None]
        dx = (metric(p + hk) - metric(p - hk)) / den
        dy = (metric(p + 1j * hk) - metric(p - 1j * hk)) / den
        out.append(0.5 * (dx - 1j * dy) @ Ginv)
    return np.stack(out, axis=-3)


def _perm_sign(seq) -> int:
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


# (k, l, k2, l2, sign) for dzbar^l dz^k dzbar^l2 dz^k2 against dz1 dzbar1 dz2 dzbar2
_PAIRS = [
    (k, l, k2, l2, _perm_sign((2 * l + 1, 2 * k, 2 * l2 + 1, 2 * k2)))
    for k in range(2) for l in range(2) for k2 in range(2) for l2 in range(2)
    if len({2 * l + 1, 2 * k, 2 * l2 + 1, 2 * k2}) == 4
]


def _chern2_coefficient(metric, p: np.ndarray, h: np.ndarray) -> np.ndarray:
    """Coefficient of dx1 dxbar1 dx2 dxbar2 in (tr Th^Th - trTh^trTh)/(8 pi^2), Theta = dbar(dG G^-1)."""
    T = {}
    for l in range(2):
        e = np.zeros(2, dtype=complex)
        e[l] = 1.0
        hl = h[:, l, None] * e
        den = 2 * h[:, l, None, None, None]
        ax = (_connection(metric, p + hl, h) - _connection(metric, p - hl, h)) / den
        ay = (_connection(metric, p + 1j * hl, h) - _connection(metric, p - 1j * hl, h)) / den
        dbar = 0.5 * (ax + 1j * ay)
        for k in range(2):
            T[k, l] = dbar[:, k]
    total = np.zeros(len(p), dtype=complex)
    for k, l, k2, l2, sgn in _PAIRS:
        M1, M2 = T[k, l], T[k2, l2]
        tr12 = np.einsum("nij,nji->n", M1, M2)
        total += sgn * (tr12 - np.trace(M1, axis1=1, axis2=2) * np.trace(M2, axis1=1, axis2=2))
    return total / (8 * math.pi**2)


def c2_density(r, eps: float, rel_step: float = 1e-3) -> np.ndarray:
    """c2(EH) as a multiple of the Euclidean volume form of C^2, at the points (r, 0).

    For r < sqrt(eps) the differences are taken in the chart (w, t) at w = r^2,
    t = 0, where the metric is smooth across the exceptional curve; z = sqrt(w)(1, t)
    has Jacobian determinant 1/2, so that coefficient is multiplied by 4.  Further
    out the metric is nearly flat in z and the z-coordinates are used directly.
    In both cases dz ^ dzbar = -2i dx ^ dy contributes the factor -4.
    """
    r = np.atleast_1d(np.asarray(r, dtype=float))
    out = np.empty(len(r))
    inner = r < math.sqrt(eps)
    if inner.any():
        ri = r[inner]
        p = np.stack([(ri * ri).astype(complex), np.zeros_like(ri, dtype=complex)], axis=-1)
        h = np.empty((len(ri), 2))
        h[:, 0] = rel_step * np.maximum(ri * ri, eps)
        h[:, 1] = rel_step

        def chart(pts):
            return eh_metric_chart(pts[..., 0], pts[..., 1], eps)

        out[inner] = (-16.0 * _chern2_coefficient(chart, p, h)).real
    if (~inner).any():
        ro = r[~inner]
        p = np.stack([ro.astype(complex), np.zeros_like(ro, dtype=complex)], axis=-1)
        h = np.repeat((rel_step * ro)[:, None], 2, axis=1)
        out[~inner] = (-4.0 * _chern2_coefficient(lambda pts: eh_metric_array(pts, eps), p, h)).real
    return out


@dataclass
class Chern2Result:
    value: float
    full_space: float
    quadrature: float
    tail: float
    tail_exponent: float
    r_max: float
    richardson_gap: float


def _gauss_panels(r_max: float, scale: float, nodes: int, panels: int):
    """Gauss-Legendre nodes/weights on panels geometric in r beyond `scale`."""
    edges = [0.0, scale / 4]
    while edges[-1] < r_max:
        edges.append(min(edges[-1] * (1.0 + 4.0 / panels) + scale / panels, r_max))
    x, w = np.polynomial.legendre.leggauss(nodes)
    rs, ws = [], []
    for a, b in zip(edges, edges[1:]):
        rs.append(0.5 * (b - a) * x + 0.5 * (a + b))
        ws.append(0.5 * (b - a) * w)
    return np.concatenate(rs), np.concatenate(ws)


def chern2_radial_integral(eps: float = 1.0, r_max: Optional[float] = None, grid: int = 16,
                           tol: float = 1e-4) -> Chern2Result:
    """(1/2) * integral over C^2 of the c2 density, using U(2)-invariance.

    The radial weight is vol(S^3) r^3 = 2 pi^2 r^3.  The tail beyond r_max is a
    power law a r^p fitted on [r_max/3, r_max]; p <= -6 is required.
    """
    if not eps > 0:
        raise EHError("eps must be positive")
    scale = math.sqrt(eps)
    r_max = r_max if r_max is not None else 12.0 * scale

    def integrate(nodes: int, rel_step: float) -> float:
        rs, ws = _gauss_panels(r_max, scale, nodes, grid)
        dens = c2_density(rs, eps, rel_step)
        return float(np.sum(ws * 2 * math.pi**2 * rs**3 * dens))

    coarse = integrate(8, 2e-3)
    fine = integrate(12, 1e-3)
    gap = abs(fine - coarse)
    if gap > tol * max(1.0, abs(fine)):
        raise EHError(f"grid too coarse: refinement changed the integral by {gap:.3g}")

    tail_r = np.geomspace(r_max / 3, r_max, 8)
    tail_d = c2_density(tail_r, eps)
    if np.any(tail_d <= 0):
        raise EHError("density not positive in the tail window")
    p, loga = np.polyfit(np.log(tail_r), np.log(tail_d), 1)
    if p > -6:
        raise EHError(f"tail exponent {p:.3f} > -6")
    tail = 2 * math.pi**2 * math.exp(loga) * r_max ** (p + 4) / abs(p + 4)
    full = float(fine + tail)
    return Chern2Result(0.5 * full, full, fine, float(tail), float(p), r_max, gap)


# ------------------------------------------------------- exceptional curve

@dataclass
class ExceptionalReport:
    t_values: list[complex]
    s_values: list[float]
    deviations: list[list[float]]
    orders: list[float]
    limits: list[float]
    symmetry_gap: float


def _tt_component(s: float, t: complex, eps: float) -> float:
    """g_{t tbar} in the chart (s, t) -> (s, s t); the Jacobian column is (0, s)."""
    G = eh_metric_array(np.array([s, s * t], dtype=complex), eps)
    return float((abs(s) ** 2 * G[1, 1]).real)


def fubini_study_component(t: complex, eps: float) -> float:
    """Coefficient of i dt ^ dtbar in 2 pi eps omega_FS, omega_FS = (i/2pi) d dbar log(1 + |t|^2)."""
    return eps / (1.0 + abs(t) ** 2) ** 2


def _limit_ratio(s_values: Sequence[float], t: complex, eps: float) -> float:
    """s -> 0 value of g_tt / FS, removing the leading s^4 term with the two smallest s."""
    s1, s2 = sorted(s_values)[:2]
    r1 = _tt_component(s1, t, eps) / fubini_study_component(t, eps)
    r2 = _tt_component(s2, t, eps) / fubini_study_component(t, eps)
    return (r1 * s2**4 - r2 * s1**4) / (s2**4 - s1**4)


def exceptional_restriction_check(eps: float, t_values: Sequence[complex],
                                  s_values: Sequence[float] = (0.2, 0.1, 0.05, 0.025)) -> ExceptionalReport:
    """Compare the chart metric along the exceptional curve with eps times Fubini-Study.

    Reports the relative deviation for each s, its fitted order in s, the
    extrapolated s -> 0 ratio, and max |limit(t) - limit(1/t)| over nonzero t.
    """
    devs, orders, limits = [], [], []
    sym = 0.0
    for t in t_values:
        row = [abs(_tt_component(s, t, eps) / fubini_study_component(t, eps) - 1.0) for s in s_values]
        devs.append(row)
        good = [(s, d) for s, d in zip(s_values, row) if d > 1e-13]
        if len(good) >= 2:
            ss, dd = zip(*good)
            orders.append(float(np.polyfit(np.log(ss), np.log(dd), 1)[0]))
        else:
            orders.append(float("inf"))
        lim = _limit_ratio(s_values, t, eps)
        limits.append(lim)
        if t != 0:
            sym = max(sym, abs(lim - _limit_ratio(s_values, 1.0 / t, eps)))
    return ExceptionalReport(list(t_values), list(s_values), devs, orders, limits, sym)


# ------------------------------------------------------------------ scaling

def potential_scaling_gap(z, eps: float, delta: float) -> float:
    """|F_eps(delta z) - delta^2 F_{eps/delta^2}(z)| relative to the value."""
    z = _zarr(z)
    a = eh_potential(delta * z, eps)
    b = delta**2 * eh_potential(z, eps / delta**2)
    return float(abs(a - b) / max(1.0, abs(a)))


def glued_scaling_gap(z, eps: float, delta: float, cutoff: Optional[CutoffSpec] = None) -> float:
    """|phi_{eps,delta}(z) - delta^2 phi_{eps/delta^2,1}(z/delta)| relative to the value."""
    z = _zarr(z)
    a = glued_potential(z, eps, delta, cutoff)
    b = delta**2 * glued_potential(z / delta, eps / delta**2, 1.0, cutoff)
    return float(abs(a - b) / max(1.0, abs(a)))
