"""Graded divisor classes via Mumford pairs and Cantor's algorithm.

A class of degree d is stored as the reduced Mumford pair (u, v) of
L - d*Infinity together with d.  On the odd-degree model reduced pairs are
unique, so classes compare by value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curve import INFINITY, Curve, Divisor, Place
from .errors import DomainError, IrrationalSupportError
from .ff import Polynomial, poly_xgcd, rational_roots, splits_completely


@dataclass(frozen=True)
class DivisorClass:
    curve: Curve
    u: Polynomial
    v: Polynomial
    degree: int

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return add(self, other)

    def __neg__(self) -> DivisorClass:
        return neg(self)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return add(self, neg(other))

    def __mul__(self, n: int) -> DivisorClass:
        return multiply(self, n)

    __rmul__ = __mul__

    def is_identity(self) -> bool:
        return self.degree == 0 and self.u.degree == 0

    def to_json(self) -> dict:
        return {"u": self.u.to_list(), "v": self.v.to_list(), "degree": self.degree}

    def __repr__(self):
        return f"DivisorClass(u={self.u.to_list()}, v={self.v.to_list()}, degree={self.degree})"


def identity(curve: Curve, degree: int = 0) -> DivisorClass:
    p = curve.p
    return DivisorClass(curve, Polynomial([1], p), Polynomial([], p), degree)


def hyperelliptic_class(curve: Curve, k: int = 1) -> DivisorClass:
    """H^k, of degree 2k."""
    return identity(curve, 2 * k)


def canonical_class(curve: Curve) -> DivisorClass:
    return identity(curve, 2 * curve.g - 2)


def parse_class(curve: Curve, spec) -> DivisorClass:
    from .curve import _load

    if isinstance(spec, str):
        s = spec.strip()
        if s == "K":
            return canonical_class(curve)
        if s == "H":
            return hyperelliptic_class(curve, 1)
        if s.startswith("H^"):
            try:
                return hyperelliptic_class(curve, int(s[2:]))
            except ValueError as exc:
                raise DomainError(f"malformed class: {spec!r}") from exc
    obj = _load(spec)
    try:
        u = Polynomial(obj["u"], curve.p)
        v = Polynomial(obj["v"], curve.p)
        degree = int(obj["degree"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed class: {spec!r}") from exc
    if u.lc != 1 or u.degree > curve.g or (v and v.degree >= u.degree):
        raise DomainError("class is not a reduced Mumford pair")
    if (v * v - curve.f) % u:
        raise DomainError("v^2 != f mod u")
    return DivisorClass(curve, u, v, degree)


# ------------------------------------------------------------------ Cantor


def _reduce(curve: Curve, u: Polynomial, v: Polynomial) -> tuple[Polynomial, Polynomial]:
    f, g = curve.f, curve.g
    v = v % u
    while u.degree > g:
        u = (f - v * v).exact_div(u).monic()
        v = (-v) % u
    return u.monic(), v % u


def _compose(curve: Curve, u1, v1, u2, v2) -> tuple[Polynomial, Polynomial]:
    f = curve.f
    d0, e1, e2 = poly_xgcd(u1, u2)
    d, c1, c2 = poly_xgcd(d0, v1 + v2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    u = (u1 * u2).exact_div(d * d)
    v = (s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)).exact_div(d) % u
    return _reduce(curve, u, v)


def _same_curve(a: DivisorClass, b: DivisorClass):
    if a.curve != b.curve:
        raise DomainError("classes live on different curves")


def add(a: DivisorClass, b: DivisorClass) -> DivisorClass:
    _same_curve(a, b)
    u, v = _compose(a.curve, a.u, a.v, b.u, b.v)
    return DivisorClass(a.curve, u, v, a.degree + b.degree)


def neg(a: DivisorClass) -> DivisorClass:
    return DivisorClass(a.curve, a.u, (-a.v) % a.u, -a.degree)


def multiply(a: DivisorClass, n: int) -> DivisorClass:
    if n < 0:
        return multiply(neg(a), -n)
    out = identity(a.curve)
    base = a
    while n:
        if n & 1:
            out = add(out, base)
        n >>= 1
        if n:
            base = add(base, base)
    return out


def _point_class(curve: Curve, P: Place) -> DivisorClass:
    p = curve.p
    return DivisorClass(curve, Polynomial([-P.x, 1], p), Polynomial([P.y], p), 1)


def class_of(curve: Curve, D: Divisor) -> DivisorClass:
    out = identity(curve)
    for P in D.support():
        curve.check_place(P)
        n = D[P]
        if P.is_infinity:
            out = DivisorClass(curve, out.u, out.v, out.degree + n)
        else:
            out = add(out, multiply(_point_class(curve, P), n))
    return out


def is_power_of_H(a: DivisorClass) -> int | None:
    if a.degree < 0 or a.degree % 2 or a.u.degree != 0:
        return None
    return a.degree // 2


# --------------------------------------------------------- representatives


def mumford_divisor(a: DivisorClass) -> Divisor:
    """The divisor (affine part of (u, v)) + (degree - deg u)*Infinity, when u splits."""
    curve = a.curve
    if not splits_completely(a.u):
        raise IrrationalSupportError("Mumford polynomial u does not split over F_p")
    terms = {INFINITY: a.degree - a.u.degree}
    for x0, m in (rational_roots(a.u) if a.u.degree > 0 else {}).items():
        terms[Place(x0, a.v(x0))] = m
    return Divisor(terms)


def make_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.Philox(seed))
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


def random_affine_points(curve: Curve, n: int, rng) -> list[Place]:
    pts = curve.rational_points()
    if not pts:
        raise DomainError("the curve has no affine rational points")
    return [pts[int(i)] for i in rng.integers(0, len(pts), size=n)]


def random_class(curve: Curve, degree: int, seed) -> DivisorClass:
    """Class of P_1 + ... + P_g + (degree - g)*Infinity for random rational P_i."""
    rng = make_rng(seed)
    D = Divisor([(P, 1) for P in random_affine_points(curve, curve.g, rng)])
    return class_of(curve, D + Divisor({INFINITY: degree - D.degree}))


def representative(a: DivisorClass, seed=0, attempts: int = 400) -> Divisor:
    """A divisor with rational support in the class a."""
    try:
        return mumford_divisor(a)
    except IrrationalSupportError:
        pass
    rng = make_rng(seed)
    curve = a.curve
    for _ in range(attempts):
        A = Divisor([(P, 1) for P in random_affine_points(curve, curve.g, rng)])
        rest = add(a, neg(class_of(curve, A)))
        try:
            return A + mumford_divisor(rest)
        except IrrationalSupportError:
            continue
    raise IrrationalSupportError("could not find a representative with rational support")


def random_representative(a: DivisorClass, seed, attempts: int = 400) -> Divisor:
    """A randomly shifted rational representative: A + rep(a - A) for random effective A."""
    rng = make_rng(seed)
    curve = a.curve
    for _ in range(attempts):
        n = int(rng.integers(1, curve.g + 2))
        A = Divisor([(P, 1) for P in random_affine_points(curve, n, rng)])
        rest = add(a, neg(class_of(curve, A)))
        try:
            return A + mumford_divisor(rest)
        except IrrationalSupportError:
            continue
    raise IrrationalSupportError("could not find a representative with rational support")
