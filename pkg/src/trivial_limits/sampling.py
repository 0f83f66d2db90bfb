"""Seeded random objects with F_p-rational support, for sweeps and tests."""

from __future__ import annotations

from .curve import INFINITY, Curve, Divisor, Place
from .errors import IrrationalSupportError
from .ff import Polynomial, is_square
from .riemann_roch import FunctionElement, function_divisor, rr_space


def _choice(rng, seq):
    return seq[int(rng.integers(0, len(seq)))]


def random_place(curve: Curve, rng, include_infinity: bool = True) -> Place:
    pts = curve.rational_points()
    if include_infinity and rng.integers(0, len(pts) + 1) == len(pts):
        return INFINITY
    return _choice(rng, pts)


def random_divisor(curve: Curve, rng, degree: int, terms: int | None = None) -> Divisor:
    """Random divisor of the given degree with mixed-sign multiplicities."""
    if terms is None:
        terms = int(rng.integers(0, curve.g + 3))
    D = Divisor()
    for _ in range(terms):
        D = D + Divisor.point(random_place(curve, rng), int(rng.integers(-2, 3)))
    return D + Divisor.point(INFINITY, degree - D.degree)


def random_effective(curve: Curve, rng, degree: int) -> Divisor:
    D = Divisor()
    for _ in range(degree):
        D = D + Divisor.point(random_place(curve, rng))
    return D


def random_simple_divisor(curve: Curve, rng, degree: int, attempts: int = 200) -> Divisor:
    """Effective simple divisor of exactly the given degree (rejection sampling)."""
    D = Divisor()
    tries = 0
    while D.degree < degree:
        tries += 1
        if tries > attempts:
            raise IrrationalSupportError("not enough rational places for a simple divisor")
        P = random_place(curve, rng)
        if curve.is_weierstrass(P):
            if D[P]:
                continue
        elif D[curve.involution(P)]:
            continue
        D = D + Divisor.point(P)
    return D


def random_fibre(curve: Curve, rng) -> Divisor:
    """A divisor pi^*(point): P + i(P), 2W or 2*Infinity."""
    P = random_place(curve, rng)
    return Divisor.point(P) + Divisor.point(curve.involution(P))


def random_element(curve: Curve, basis, rng) -> FunctionElement:
    p = curve.p
    while True:
        out = None
        for h in basis:
            k = int(rng.integers(0, p))
            if k:
                term = h.scale(k)
                out = term if out is None else out + term
        if out is not None and not out.is_zero():
            return out


def random_rational_function(curve: Curve, rng, D: Divisor, attempts: int = 400) -> FunctionElement:
    """Random element of L(D) whose divisor has rational support."""
    basis = rr_space(curve, D).elements
    if not basis:
        raise ValueError("L(D) = 0")
    for _ in range(attempts):
        h = random_element(curve, basis, rng)
        try:
            function_divisor(curve, h)
        except IrrationalSupportError:
            continue
        return h
    raise IrrationalSupportError("no function with rational divisor found")


def rational_fibre_xs(curve: Curve) -> list[int]:
    return [x0 for x0 in range(curve.p) if is_square(curve.f(x0), curve.p)]


def random_split_x_poly(curve: Curve, rng, degree: int) -> Polynomial:
    """c * prod (x - x_i) over x-values with rational fibres."""
    xs = rational_fibre_xs(curve)
    p = curve.p
    out = Polynomial([int(rng.integers(1, p))], p)
    for _ in range(degree):
        out = out * Polynomial([-_choice(rng, xs), 1], p)
    return out


def random_x_poly(p: int, rng, degree: int) -> Polynomial:
    coeffs = [int(v) for v in rng.integers(0, p, size=degree + 1)]
    coeffs[-1] = int(rng.integers(1, p))
    return Polynomial(coeffs, p)

