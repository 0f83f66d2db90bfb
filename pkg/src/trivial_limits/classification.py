"""Decision procedures for limits of the trivial rank-2 bundle.

On a hyperelliptic curve with hyperelliptic class H (= 2*Infinity here), a
bundle L + L^-1 with deg L >= 0 is a limit of O^2 exactly when deg L >= g+1
or L is a power of H.  The helpers below decompose line bundles of degree at
most g as H^k(D) with D simple, test global generation, and evaluate the
cohomological splitting test h^1(L^2) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import Curve, Divisor, canonical_divisor, hyperelliptic_divisor
from .errors import DomainError
from .picard import DivisorClass, class_of, is_power_of_H, representative
from .riemann_roch import _base_locus, function_divisor, h0, rr_space

DEGREE_AT_LEAST_G_PLUS_1 = "DegreeAtLeastGPlus1"
POWER_OF_H = "PowerOfH"
NOT_CLASSIFIED = "NotClassified"


@dataclass(frozen=True)
class Decomposition:
    k: int
    D: Divisor
    line_class: DivisorClass

    def to_json(self) -> dict:
        return {"k": self.k, "D": self.D.to_json(), "class": self.line_class.to_json()}


@dataclass(frozen=True)
class LimitVerdict:
    is_limit: bool
    reason: str
    k: int | None = None

    def to_json(self) -> dict:
        out = {"is_limit": self.is_limit, "reason": self.reason}
        if self.reason == POWER_OF_H:
            out["k"] = self.k
        return out


def is_simple(curve: Curve, D: Divisor) -> bool:
    """No full fibre P + i(P), and no Weierstrass place (Infinity included) twice."""
    if not (D.is_effective() or D.is_zero()):
        raise DomainError("simplicity is defined for effective divisors")
    for P in D.support():
        curve.check_place(P)
        if curve.is_weierstrass(P):
            if D[P] > 1:
                return False
        elif D[curve.involution(P)] > 0:
            return False
    return True


def lemma1_h0_formula(curve: Curve, k: int, D: Divisor) -> int:
    """h^0(H^k(D)) = k + 1 for D simple with deg D + k <= g."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    if not is_simple(curve, D):
        raise DomainError("D is not simple")
    if D.degree + k > curve.g:
        raise DomainError("requires deg D + k <= g")
    return k + 1


def simple_decomposition(curve: Curve, L: Divisor) -> Decomposition:
    """Write L = H^k(D) with D simple and k maximal.

    Accepted when deg L <= g, and more generally whenever the result has
    deg D + k <= g, which is where D is the unique member of |L - kH|.
    """
    if h0(curve, L) == 0:
        raise DomainError("L has no nonzero sections")
    k = 0
    while h0(curve, L - hyperelliptic_divisor(k + 1)) > 0:
        k += 1
    rest = L - hyperelliptic_divisor(k)
    if L.degree > curve.g and rest.degree + k > curve.g:
        raise DomainError("decomposition requires deg L <= g")
    basis = rr_space(curve, rest)
    if basis.dimension != 1:
        raise RuntimeError(f"internal error: |L - kH| has dimension {basis.dimension - 1}")
    D = function_divisor(curve, basis.elements[0]) + rest
    if not is_simple(curve, D):
        raise RuntimeError(f"internal error: residual divisor {D!r} is not simple")
    line_class = class_of(curve, L)
    if class_of(curve, D + hyperelliptic_divisor(k)) != line_class:
        raise RuntimeError("internal error: decomposition does not recompose to L")
    return Decomposition(k, D, line_class)


def is_globally_generated(curve: Curve, L: Divisor) -> bool:
    if h0(curve, L) == 0:
        return False
    F, irrational = _base_locus(curve, L)
    return F.is_zero() and not irrational


def is_limit_of_trivial(curve: Curve, L: DivisorClass) -> LimitVerdict:
    """Whether L + L^-1 is a limit of O^2, with L the summand of nonnegative degree."""
    k = is_power_of_H(L)
    if k is not None:
        return LimitVerdict(True, POWER_OF_H, k)
    if L.degree >= curve.g + 1:
        return LimitVerdict(True, DEGREE_AT_LEAST_G_PLUS_1)
    return LimitVerdict(False, NOT_CLASSIFIED)


def split_criterion(curve: Curve, L: DivisorClass, seed=0) -> bool:
    """h^1(L^2) = 0, i.e. h^0(K - 2L) = 0; then every extension of L^-1 by L splits."""
    L_div = representative(L, seed)
    return h0(curve, canonical_divisor(curve) - 2 * L_div) == 0


def brill_noether_rho(g: int, r: int, d: int) -> int:
    if g < 0 or r < 0:
        raise DomainError("g and r must be nonnegative")
    return g - (r + 1) * (r + g - d)


def generic_limit_rule(g: int, degL: int, h0L: int) -> bool:
    return h0L >= 2 or (degL, h0L) == (0, 1)


def limit_h0_count(curve: Curve, k: int) -> tuple[int, int]:
    """(h^0(H^2k) + h^0(O), 2 h^0(H^k)) for E = H^k + H^-k twisted by H^k."""
    if k < 0 or 2 * k > curve.g:
        raise DomainError("requires 0 <= 2k <= g")
    lhs = h0(curve, hyperelliptic_divisor(2 * k)) + h0(curve, Divisor())
    return lhs, 2 * h0(curve, hyperelliptic_divisor(k))

