"""Scalar assemblers for the log-Enriques torsion invariants.

The geometric inputs (torsion, volumes, Bott-Chern integrals) cannot be computed
here; they are typed fields so the assemblers are total functions on synthetic
data.  Universal constants such as C(k) and C_k stay symbolic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence

from . import lattice

# exponent of each (gamma^2/2!)/|Xi| ratio at a singular point
RATIO_EXPONENT = Fraction(-5, 32)


class InvariantError(ValueError):
    pass


def _check_k(k: int, lo: int = 1, hi: int = 10) -> None:
    if not (isinstance(k, int) and lo <= k <= hi):
        raise InvariantError(f"k must be an integer in {lo}..{hi}")


def c2_integrals(k: int, allow_zero: bool = False) -> dict[str, Fraction]:
    """(1/24) int_Y c2 = (16 - k)/32, int_Y c2 = 3(16 - k)/4, int_X c2 = 24 - 3k/2."""
    _check_k(k, 0 if allow_zero else 1)
    y24 = Fraction(16 - k, 32)
    return {"one_24th_int_c2_Y": y24, "int_c2_Y": 24 * y24, "int_c2_X": 24 - Fraction(3 * k, 2)}


@dataclass(frozen=True)
class InvariantInputs:
    """Inputs for tau_k.

    singular_ratios are the values (gamma^2/2!)/|Xi| at the k singular points and
    bott_chern_integral is int_Y log(|Xi|/(gamma^2/2!)) c2(Y, gamma).
    """

    k: int
    tau_Y_gamma: float
    vol_Y_gamma: float
    xi_l1_norm: float
    singular_ratios: tuple[float, ...]
    bott_chern_integral: float

    def __post_init__(self):
        _check_k(self.k)
        for name in ("tau_Y_gamma", "vol_Y_gamma", "xi_l1_norm"):
            if not getattr(self, name) > 0:
                raise InvariantError(f"{name} must be positive")
        if len(self.singular_ratios) != self.k:
            raise InvariantError("need one ratio per singular point")
        if any(not r > 0 for r in self.singular_ratios):
            raise InvariantError("singular ratios must be positive")


def xi_rescaling_exponent(k: int) -> Fraction:
    """Net power of c picked up by tau_k under Xi -> c Xi; identically zero."""
    return Fraction(-(4 + k), 8) - k * RATIO_EXPONENT + c2_integrals(k)["one_24th_int_c2_Y"]


def log_tau_k(inp: InvariantInputs) -> float:
    return (
        math.log(inp.tau_Y_gamma)
        + math.log(inp.vol_Y_gamma)
        - (4 + inp.k) / 8 * math.log(inp.xi_l1_norm)
        + float(RATIO_EXPONENT) * sum(math.log(r) for r in inp.singular_ratios)
        + inp.bott_chern_integral / 24
    )


def tau_k_assemble(inp: InvariantInputs) -> float:
    """tau(Y,g) Vol(Y,g) ||Xi||^{-(4+k)/8} prod ratio^{-5/32} exp[(1/24) BC]."""
    return math.exp(log_tau_k(inp))


def rescale_xi(inp: InvariantInputs, c: float) -> InvariantInputs:
    """Inputs after Xi -> c Xi: the L^1 norm scales, each ratio divides, BC shifts by log(c) int_Y c2."""
    if not c > 0:
        raise InvariantError("scale must be positive")
    shift = math.log(c) * float(c2_integrals(inp.k)["int_c2_Y"])
    return replace(
        inp,
        xi_l1_norm=inp.xi_l1_norm * c,
        singular_ratios=tuple(r / c for r in inp.singular_ratios),
        bott_chern_integral=inp.bott_chern_integral + shift,
    )


def anomaly_partner(inp: InvariantInputs, vol: float, ratios: Sequence[float],
                    bott_chern_integral: float) -> InvariantInputs:
    """Inputs for a second Kaehler form with the given volume, ratios and BC integral.

    Both metrics are compared with the Ricci-flat form w with w^2/2! = |Xi|:
    tau Vol(g) = tau Vol(w) prod ratio_g^{5/32} exp(-BC_g / 24).
    """
    log_flat = (
        math.log(inp.tau_Y_gamma * inp.vol_Y_gamma)
        + float(RATIO_EXPONENT) * sum(math.log(r) for r in inp.singular_ratios)
        + inp.bott_chern_integral / 24
    )
    log_new = log_flat - float(RATIO_EXPONENT) * sum(math.log(r) for r in ratios) - bott_chern_integral / 24
    return InvariantInputs(inp.k, math.exp(log_new) / vol, vol, inp.xi_l1_norm, tuple(ratios),
                           bott_chern_integral)


def tau_bcov_from_tau_k(tau_k: float) -> float:
    if not tau_k > 0:
        raise InvariantError("tau_k must be positive")
    return tau_k**-2


def bcov_petersson_offset(tau_bcov: float, phi_norm: float) -> float:
    """log tau_BCOV - (1/2) log ||Phi||; constant over moduli (it equals -2 log C_k)."""
    return math.log(tau_bcov) - 0.5 * math.log(phi_norm)


def tau_M_assemble(volume: float, equivariant_torsion: float, fixed_curve_volume_torsion: float,
                   A_M_term: float, r_M: int, torsion: float = 1.0) -> float:
    """Vol^{(14 - r)/4} tau_{Z2}(iota) A_M Vol(Z^iota) tau(Z^iota).

    fixed_curve_volume_torsion is the product Vol(Z^iota) tau(Z^iota).  The optional
    torsion factor multiplies in as well; it defaults to 1, the value of tau(Z, g)
    times its Bott-Chern correction on a K3 surface.
    """
    for name, v in (("volume", volume), ("equivariant_torsion", equivariant_torsion),
                    ("fixed_curve_volume_torsion", fixed_curve_volume_torsion),
                    ("A_M_term", A_M_term), ("torsion", torsion)):
        if not v > 0:
            raise InvariantError(f"{name} must be positive")
    return volume ** ((14 - r_M) / 4) * equivariant_torsion * A_M_term * fixed_curve_volume_torsion * torsion


@dataclass(frozen=True)
class OpaqueMultiple:
    """value * symbol, with the symbol left unevaluated."""

    value: float
    symbol: str

    def to_json(self) -> dict:
        return {"value": self.value, "symbol": self.symbol}


def tau_k_from_tau_M(tau_M: float) -> OpaqueMultiple:
    """tau_k = C(k)^{-1} tau_M^{1/2}."""
    return OpaqueMultiple(math.sqrt(tau_M), "C(k)^-1")


_DISC_CACHE: dict[int, int] = {}


def disc_M_k(k: int, coefficient_bound: int = 3) -> int:
    """|disc(Lambda_k(2)^perp)| with the complement computed inside L_K3."""
    _check_k(k, 1, 9)
    if k not in _DISC_CACHE:
        emb = lattice.embedding_search(lattice.rescale(lattice.lambda_k(k), 2), lattice.k3_lattice(),
                                       coefficient_bound)
        if emb is None:
            raise InvariantError("embedding not found within bound")
        comp, _ = lattice.orthogonal_complement(emb)
        _DISC_CACHE[k] = abs(comp.discriminant())
    return _DISC_CACHE[k]


@dataclass(frozen=True)
class ComparisonRatio:
    k: int
    numeric: Fraction
    symbol: str
    r: int
    r_tilde: int
    disc_plus_Xtilde: int

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "numeric": str(self.numeric),
            "symbol": self.symbol,
            "r": self.r,
            "r_tilde": self.r_tilde,
            "disc_plus_Xtilde": str(self.disc_plus_Xtilde),
        }


def bcov_comparison_ratio(k: int, disc_plus_X: int, coker_q: int, coker_qtilde: int,
                          disc_plus_Xtilde: Optional[int] = None) -> ComparisonRatio:
    """2^{-k-4} C(k)^8 (|Coker q*| / |Coker q~*|)^{-2} (|disc X| / |disc X~|)^{-1}."""
    _check_k(k)
    if disc_plus_Xtilde is None:
        disc_plus_Xtilde = disc_M_k(k)
    for name, v in (("disc_plus_X", disc_plus_X), ("disc_plus_Xtilde", disc_plus_Xtilde),
                    ("coker_q", coker_q), ("coker_qtilde", coker_qtilde)):
        if v == 0:
            raise InvariantError(f"{name} must be nonzero")
    coker = Fraction(abs(coker_q), abs(coker_qtilde))
    disc = Fraction(abs(disc_plus_X), abs(disc_plus_Xtilde))
    numeric = Fraction(1, 2 ** (k + 4)) / (coker**2 * disc)
    return ComparisonRatio(k, numeric, "C(k)^8", 10, 10 + k, abs(disc_plus_Xtilde))


def covolume(r: int, coker_q: int, disc: int, vol_X: float) -> float:
    """Vol_{L^2}(H^2(V, Z), g) = 2^{-(r+1)} |Coker q*|^2 |disc| Vol(X, g_X)."""
    return float(Fraction(coker_q**2 * abs(disc), 2 ** (r + 1))) * vol_X


def chi_orb(k: int) -> int:
    _check_k(k)
    return 12 * k


def chi_orb_crosscheck(k: int) -> Fraction:
    """(1/2) chi(X~ x T) + (3/2) chi(X~^theta x T[2]), with chi(T) = 0 and X~^theta a union of k rational curves (chi = 2k)."""
    _check_k(k)
    return Fraction(1, 2) * 0 + Fraction(3, 2) * (2 * k) * 4
