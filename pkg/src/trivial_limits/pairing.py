"""Serre duality through residues.

Classes in H^1 are never stored; they are seen only through their pairing
with H^0(K (x) M^-1).  For the Koszul extension

    0 -> L^-1 --(-t, s)--> O^2 --(s, t)--> L -> 0

the local splittings v -> (v/s, 0) on {s != 0} and v -> (0, v/t) on {t != 0}
differ by the cocycle -1/(st) in L^-2, so for w in H^0(K (x) L^2)

    <e, w> = sum over zeros P of s of Res_P(-w / (s t)).

Sections of O(D_L) are functions h with div(h) + D_L >= 0; differentials are
h * dx/y, and div(dx/y) = (2g-2) * Infinity.  Only vanishing of the pairing is
meaningful; the overall sign follows from the splitting choice above.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import INFINITY, Curve, Divisor, Place, canonical_divisor, local_expansion
from .errors import DomainError, IrrationalSupportError
from .ff import FieldElement, LaurentSeries, Matrix, series_invert, rational_roots, splits_completely
from .riemann_roch import (
    FunctionElement,
    expand,
    fe_div,
    fe_mul,
    function_divisor,
    h0,
    in_rr_space,
    rr_space,
    valuation,
)


@dataclass(frozen=True)
class Differential:
    """h * dx/y."""

    h: FunctionElement

    def scale(self, k: int) -> Differential:
        return Differential(self.h.scale(k))

    def __add__(self, other: Differential) -> Differential:
        return Differential(self.h + other.h)


@dataclass(frozen=True)
class PairingReport:
    values: tuple[FieldElement, ...]
    splits: bool

    def to_json(self) -> dict:
        return {"values": [int(v) for v in self.values], "splits": self.splits}


def h1(curve: Curve, D: Divisor) -> int:
    return h0(curve, canonical_divisor(curve) - D)


def _dx_over_y(curve: Curve, P: Place, n: int) -> LaurentSeries:
    X, Y = local_expansion(curve, P, n)
    return X.derivative() * series_invert(Y)


def residue_at(curve: Curve, omega: Differential, P: Place) -> FieldElement:
    """Coefficient of dt/t in the expansion of omega at P."""
    curve.check_place(P)
    p = curve.p
    if omega.h.is_zero():
        return FieldElement(0, p)
    v_form = 2 * curve.g - 2 if P.is_infinity else 0
    v_h = valuation(curve, omega.h, P)
    if v_h + v_form >= 0:
        return FieldElement(0, p)
    hs = expand(curve, omega.h, P, -v_form)
    n = max(1, -v_h - v_form + 1) + 2
    while True:
        s = hs * _dx_over_y(curve, P, n)
        if s.prec > -1:
            return FieldElement(s[-1], p)
        n *= 2


def polar_places(curve: Curve, omega: Differential) -> list[Place]:
    """Places where omega may have a pole; all must be rational."""
    h = omega.h
    if not splits_completely(h.c):
        raise IrrationalSupportError("poles lie over non-rational x-values")
    places = [INFINITY]
    for x0 in rational_roots(h.c) if h.c.degree > 0 else {}:
        places.extend(curve.places_over(x0))
    return sorted(set(places), key=Place.sort_key)


def residue_sum(curve: Curve, omega: Differential) -> FieldElement:
    total = FieldElement(0, curve.p)
    for P in polar_places(curve, omega):
        total = total + residue_at(curve, omega, P)
    return total


def _check_sections(curve: Curve, D_L: Divisor, s: FunctionElement, t: FunctionElement) -> Divisor:
    if s.is_zero() or t.is_zero():
        raise DomainError("sections must be nonzero")
    for name, h in (("s", s), ("t", t)):
        if not in_rr_space(curve, h, D_L):
            raise DomainError(f"{name} is not a section of O(D_L)")
    zs = function_divisor(curve, s) + D_L
    for P in zs.support():
        if valuation(curve, t, P) + D_L[P] > 0:
            raise DomainError(f"s and t have a common zero at {P!r}")
    return zs


def _cocycle_differential(curve, s, t, w: Differential) -> Differential:
    return Differential(-fe_div(curve, w.h, fe_mul(curve, s, t)))


def koszul_pair(
    curve: Curve,
    D_L: Divisor,
    s: FunctionElement,
    t: FunctionElement,
    w: Differential,
    *,
    check: bool = True,
) -> FieldElement:
    """<e, w> for the Koszul class e in H^1(L^-2) and w in H^0(K (x) L^2)."""
    zs = _check_sections(curve, D_L, s, t) if check else function_divisor(curve, s) + D_L
    if check and not in_rr_space(curve, w.h, canonical_divisor(curve) + 2 * D_L):
        raise DomainError("w is not in H^0(K (x) L^2)")
    if w.h.is_zero():
        return FieldElement(0, curve.p)
    omega = _cocycle_differential(curve, s, t, w)
    total = FieldElement(0, curve.p)
    for P in zs.support():
        total = total + residue_at(curve, omega, P)
    return total


def koszul_pair_t_side(
    curve: Curve, D_L: Divisor, s: FunctionElement, t: FunctionElement, w: Differential
) -> FieldElement:
    """The same residues summed over the zeros of t; equals -koszul_pair."""
    zt = function_divisor(curve, t) + D_L
    if w.h.is_zero():
        return FieldElement(0, curve.p)
    omega = _cocycle_differential(curve, s, t, w)
    total = FieldElement(0, curve.p)
    for P in zt.support():
        total = total + residue_at(curve, omega, P)
    return total


def u2e_functional(
    curve: Curve, D_L: Divisor, s: FunctionElement, t: FunctionElement, u: FunctionElement
) -> PairingReport:
    """Pairings of u^2 e in H^1(L^2) against a basis of H^0(K (x) L^-2)."""
    if u.is_zero():
        raise DomainError("u must be nonzero")
    if not in_rr_space(curve, u, 2 * D_L):
        raise DomainError("u is not a section of L^2")
    _check_sections(curve, D_L, s, t)
    u2 = fe_mul(curve, u, u)
    dual = rr_space(curve, canonical_divisor(curve) - 2 * D_L)
    values = tuple(
        koszul_pair(curve, D_L, s, t, Differential(fe_mul(curve, u2, w)), check=False)
        for w in dual.elements
    )
    return PairingReport(values, all(v == 0 for v in values))


def canonical_multiplication_rank(curve: Curve) -> tuple[int, int]:
    """(rank of Sym^2 H^0(K) -> H^0(K^2), h^0(K^2)); the map is not onto for g >= 3."""
    K = canonical_divisor(curve)
    basis = rr_space(curve, K).elements
    target = rr_space(curve, 2 * K)
    width = 4 * curve.g
    rows = []
    for i, a in enumerate(basis):
        for b in basis[i:]:
            prod = fe_mul(curve, a, b)
            if prod.c.degree:
                raise AssertionError("holomorphic products should be polynomial")
            row = [prod.a[k] for k in range(width)] + [prod.b[k] for k in range(width)]
            rows.append(row)
    return Matrix(rows, curve.p).rank(), target.dimension
