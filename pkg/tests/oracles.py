"""Independent oracles used only by the tests.

Nothing here imports the package's numerical code: the Eguchi-Hanson curvature
is derived symbolically, zeta(0) comes from a heat-trace fit, and lattice counts
come from brute force over a box.
"""

from __future__ import annotations

import itertools
import math

import numpy as np
import sympy as sp


def _perm_sign(seq) -> int:
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def eh_c2_density_at(r, eps, point=None):
    """Exact c2 density (coefficient of the Euclidean volume) of the Eguchi-Hanson metric.

    The metric G_{i jbar} = (S/u) delta_ij - eps^2/(S u^2) zbar_i z_j, S = sqrt(u^2 + eps^2),
    has Chern connection theta_k = (d_k G) G^{-1}, so the curvature is
    Omega_{k lbar} = (d_lbar d_k G) G^{-1} - (d_k G) G^{-1} (d_lbar G) G^{-1}.
    Only derivatives of the entries of G are needed, each evaluated at
    z = (r, 0) (or at ``point`` = (x1, y1, x2, y2)) right away.
    """
    x1, y1, x2, y2 = sp.symbols("x1 y1 x2 y2", real=True)
    e = sp.nsimplify(eps)
    z = [x1 + sp.I * y1, x2 + sp.I * y2]
    zb = [x1 - sp.I * y1, x2 - sp.I * y2]
    u = x1**2 + y1**2 + x2**2 + y2**2
    S = sp.sqrt(u**2 + e**2)
    G = sp.Matrix(2, 2, lambda i, j: (S / u) * int(i == j) - e**2 / (S * u**2) * zb[i] * z[j])
    X = [(x1, y1), (x2, y2)]
    coords = point if point is not None else (r, 0, 0, 0)
    at = dict(zip((x1, y1, x2, y2), (sp.nsimplify(c) for c in coords)))

    def d(f, k):
        return (sp.diff(f, X[k][0]) - sp.I * sp.diff(f, X[k][1])) / 2

    def db(f, k):
        return (sp.diff(f, X[k][0]) + sp.I * sp.diff(f, X[k][1])) / 2

    def ev(m):
        return m.applyfunc(lambda f: sp.simplify(f.subs(at)))

    G0 = ev(G)
    Gi = G0.inv()
    dG = [ev(G.applyfunc(lambda f: d(f, k))) for k in range(2)]
    dbG = [ev(G.applyfunc(lambda f: db(f, k))) for k in range(2)]
    T = {}
    for k in range(2):
        for l in range(2):
            ddG = ev(G.applyfunc(lambda f: db(d(f, k), l)))
            T[k, l] = ddG * Gi - dG[k] * Gi * dbG[l] * Gi
    total = 0
    for (k, l), M1 in T.items():
        for (k2, l2), M2 in T.items():
            seq = [2 * l + 1, 2 * k, 2 * l2 + 1, 2 * k2]
            if len(set(seq)) == 4:
                total += _perm_sign(seq) * ((M1 * M2).trace() - M1.trace() * M2.trace())
    return sp.nsimplify(sp.simplify(total * (-4) / 8)) / sp.pi**2


def eh_c2_closed_form(r: float, eps: float) -> float:
    return 12 * eps**4 / (math.pi**2 * (eps**2 + r**4) ** 3)


def eh_c2_total_symbolic() -> sp.Expr:
    """Integral over C^2 of the closed form, using vol(S^3) = 2 pi^2."""
    r, eps = sp.symbols("r epsilon", positive=True)
    dens = 12 * eps**4 / (sp.pi**2 * (eps**2 + r**4) ** 3)
    return sp.simplify(sp.integrate(2 * sp.pi**2 * r**3 * dens, (r, 0, sp.oo)))


def heat_trace_zeta0(c: float = 1.0) -> float:
    """zeta(0) for eigenvalues c k(k+1), multiplicity 2k+1, k >= 1, from small-t heat asymptotics.

    Theta(t) = sum_{k>=0} (2k+1) e^{-t c k(k+1)} ~ 1/(ct) + a_0 + O(t); zeta(0) = a_0 - dim ker = a_0 - 1.
    """
    ts = np.array([2e-3, 1e-3, 5e-4, 2.5e-4])
    vals = []
    for t in ts:
        kmax = int(math.sqrt(60.0 / (c * t))) + 2
        k = np.arange(kmax, dtype=float)
        theta = math.fsum((2 * k + 1) * np.exp(-t * c * k * (k + 1)))
        vals.append(theta - 1.0 / (c * t))
    # remove the O(t) and O(t^2) terms by a quadratic fit
    a0 = np.polyfit(ts, vals, 2)[-1]
    return float(a0 - 1.0)


def brute_force_vectors(gram, norm: int, functional, cap: int, box: int):
    """Brute-force norm vectors with 0 < <v, f> <= cap inside a coordinate box."""
    g = np.array(gram, dtype=np.int64)
    gf = g @ np.array(functional, dtype=np.int64)
    out = []
    for v in itertools.product(range(-box, box + 1), repeat=len(gram)):
        a = np.array(v, dtype=np.int64)
        h = int(a @ gf)
        if 0 < h <= cap and int(a @ g @ a) == norm:
            out.append(v)
    return sorted(out)
