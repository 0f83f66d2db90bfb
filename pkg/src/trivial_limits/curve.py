"""Hyperelliptic curves y^2 = f(x) with odd-degree monic f over F_p.

Places are restricted to F_p-rational ones: affine points ``Place(x, y)``
and the single point at infinity ``INFINITY``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, IrrationalSupportError
from .ff import (
    LaurentSeries,
    Polynomial,
    check_modulus,
    inv_mod,
    is_square,
    is_squarefree,
    series_sqrt,
    sqrt_fp,
)


@dataclass(frozen=True)
class Place:
    x: int | None = None
    y: int | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def sort_key(self):
        return (self.x is None, self.x or 0, self.y or 0)

    def to_json(self):
        return "inf" if self.is_infinity else [self.x, self.y]

    def __repr__(self):
        return "Infinity" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = Place()


@dataclass(frozen=True)
class Curve:
    p: int
    f: Polynomial

    @property
    def g(self) -> int:
        return (self.f.degree - 1) // 2

    def contains(self, P: Place) -> bool:
        if P.is_infinity:
            return True
        if not (0 <= P.x < self.p and 0 <= P.y < self.p):
            return False
        return (P.y * P.y - self.f(P.x)) % self.p == 0

    def check_place(self, P: Place) -> Place:
        if not isinstance(P, Place) or not self.contains(P):
            raise DomainError(f"{P!r} is not a rational place of the curve")
        return P

    def is_weierstrass(self, P: Place) -> bool:
        return P.is_infinity or P.y == 0

    def involution(self, P: Place) -> Place:
        self.check_place(P)
        if P.is_infinity:
            return P
        return Place(P.x, (-P.y) % self.p)

    def places_over(self, x0: int) -> list[Place]:
        """Rational places above x = x0; raises if the fibre is a degree-2 place."""
        v = self.f(x0)
        if v == 0:
            return [Place(x0 % self.p, 0)]
        if not is_square(v, self.p):
            raise IrrationalSupportError(f"the place over x = {x0} is not rational")
        y0 = sqrt_fp(v, self.p)
        return [Place(x0 % self.p, y0), Place(x0 % self.p, self.p - y0)]

    def rational_points(self) -> tuple[Place, ...]:
        return _rational_points(self)

    def to_json(self) -> dict:
        return {"p": self.p, "f": self.f.to_list()}

    def __repr__(self):
        return f"Curve(y^2 = {self.f} over F_{self.p}, g={self.g})"


@lru_cache(maxsize=64)
def _rational_points(c: Curve) -> tuple[Place, ...]:
    pts = []
    for x0 in range(c.p):
        try:
            pts.extend(c.places_over(x0))
        except IrrationalSupportError:
            pass
    return tuple(pts)


def new_curve(p: int, f) -> Curve:
    if not isinstance(p, int) or p % 2 == 0:
        raise DomainError("characteristic must be an odd prime")
    check_modulus(p)
    if not isinstance(f, Polynomial):
        f = Polynomial(f, p)
    elif f.p != p:
        f = Polynomial(f.coeffs, p)
    if f.lc != 1:
        raise DomainError("f must be monic")
    if f.degree % 2 == 0:
        raise DomainError("only odd-degree models are supported")
    if f.degree < 5:
        raise DomainError("genus must be at least 2 (deg f >= 5)")
    if not is_squarefree(f):
        raise DomainError("f is not squarefree")
    return Curve(p, f)


def involution(c: Curve, P: Place) -> Place:
    return c.involution(P)


def weierstrass_places(c: Curve) -> list[Place]:
    from .ff import rational_roots

    return [Place(r, 0) for r in rational_roots(c.f)] + [INFINITY]


# ------------------------------------------------------------------ divisors


class Divisor:
    """Finite formal sum of rational places with nonzero integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc: dict[Place, int] = {}
        items = terms.items() if isinstance(terms, dict) else (terms or [])
        for P, n in items:
            acc[P] = acc.get(P, 0) + int(n)
        self.terms = {P: n for P, n in acc.items() if n}

    @classmethod
    def point(cls, P: Place, n: int = 1) -> Divisor:
        return cls({P: n})

    @property
    def degree(self) -> int:
        return sum(self.terms.values())

    def __getitem__(self, P: Place) -> int:
        return self.terms.get(P, 0)

    def support(self) -> list[Place]:
        return sorted(self.terms, key=Place.sort_key)

    def affine_support(self) -> list[Place]:
        return [P for P in self.support() if not P.is_infinity]

    def is_effective(self) -> bool:
        return all(n > 0 for n in self.terms.values())

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: Divisor) -> Divisor:
        out = dict(self.terms)
        for P, n in other.terms.items():
            out[P] = out.get(P, 0) + n
        return Divisor(out)

    def __neg__(self) -> Divisor:
        return Divisor({P: -n for P, n in self.terms.items()})

    def __sub__(self, other: Divisor) -> Divisor:
        return self + (-other)

    def __mul__(self, k: int) -> Divisor:
        return Divisor({P: k * n for P, n in self.terms.items()})

    __rmul__ = __mul__

    def __ge__(self, other: Divisor) -> bool:
        return (self - other).is_effective() or (self - other).is_zero()

    def __le__(self, other: Divisor) -> bool:
        return other >= self

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def to_json(self) -> list:
        return [[P.to_json(), self.terms[P]] for P in self.support()]

    def __repr__(self):
        if not self.terms:
            return "Divisor(0)"
        parts = [f"{n}*{P!r}" for P, n in ((P, self.terms[P]) for P in self.support())]
        return "Divisor(" + " + ".join(parts) + ")"


def inf_divisor(n: int) -> Divisor:
    return Divisor({INFINITY: n})


def canonical_divisor(c: Curve) -> Divisor:
    """(2g-2)*Infinity, the divisor of dx/y."""
    return inf_divisor(2 * c.g - 2)


def hyperelliptic_divisor(k: int = 1) -> Divisor:
    """k*H represented as 2k*Infinity."""
    return inf_divisor(2 * k)


# ----------------------------------------------------------------- parsing


def _load(text_or_obj):
    if isinstance(text_or_obj, str):
        try:
            return json.loads(text_or_obj)
        except json.JSONDecodeError as exc:
            raise DomainError(f"malformed JSON: {exc}") from exc
    return text_or_obj


def parse_curve(spec) -> Curve:
    obj = _load(spec)
    try:
        p = int(obj["p"])
        coeffs = [int(a) for a in obj["f"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed curve specification: {spec!r}") from exc
    return new_curve(p, Polynomial(coeffs, p))


def parse_place(c: Curve, obj) -> Place:
    obj = _load(obj) if isinstance(obj, str) and obj != "inf" else obj
    if obj == "inf":
        return INFINITY
    try:
        x, y = (int(v) % c.p for v in obj)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"malformed place: {obj!r}") from exc
    return c.check_place(Place(x, y))


def parse_divisor(c: Curve, spec) -> Divisor:
    obj = _load(spec)
    if not isinstance(obj, list):
        raise DomainError(f"malformed divisor: {spec!r}")
    terms = []
    for item in obj:
        if not isinstance(item, list) or len(item) != 2:
            raise DomainError(f"malformed divisor term: {item!r}")
        terms.append((parse_place(c, item[0]), int(item[1])))
    return Divisor(terms)


# ---------------------------------------------------------- local expansions


def local_expansion(c: Curve, P: Place, precision: int) -> tuple[LaurentSeries, LaurentSeries]:
    """Series (x(t), y(t)) in a uniformizer t at P, each to relative precision ``precision``.

    Non-Weierstrass affine: t = x - x0.  Weierstrass affine: t = y.
    Infinity: x = t^-2, y = t^-(2g+1) * (unit with leading coefficient 1).
    """
    if precision < 1:
        raise DomainError("precision must be at least 1")
    c.check_place(P)
    return _expansion(c, P, precision)


@lru_cache(maxsize=4096)
def _expansion(c: Curve, P: Place, n: int) -> tuple[LaurentSeries, LaurentSeries]:
    p, f = c.p, c.f
    if P.is_infinity:
        d = f.degree
        # t^(2d) f(t^-2) = sum f_i t^(2d - 2i), a unit with constant term 1
        s = [0] * (2 * d + 1)
        for i, a in enumerate(f.coeffs):
            s[2 * d - 2 * i] = a
        unit = series_sqrt(LaurentSeries(0, s[:n], n, p), branch=1)
        x = LaurentSeries(-2, [1], -2 + n, p)
        y = unit.shift(-d)
        return x, y
    if P.y != 0:
        x = LaurentSeries(0, [P.x, 1], n, p)
        fs = f.shift(P.x)
        y = series_sqrt(LaurentSeries(0, fs.coeffs[:n], n, p), branch=P.y)
        return x, y
    # Weierstrass: solve f(x0 + z) = T for z as a power series in T = t^2
    F = f.shift(P.x).coeffs
    m = n // 2 + 2
    inv1 = inv_mod(F[1], p)
    z = [0] * m
    for _ in range(m):
        # fixed point of z = (T - sum_{i>=2} F_i z^i) / F_1; one new term per pass
        acc = [0] * m
        acc[1] = 1
        zp = z
        for i in range(2, len(F)):
            zp = _trunc_mul(zp, z, m, p)
            if F[i]:
                for k in range(m):
                    acc[k] -= F[i] * zp[k]
        z_new = [a * inv1 % p for a in acc]
        if z_new == z:
            break
        z = z_new
    xs = [0] * (2 * m)
    for k, a in enumerate(z):
        xs[2 * k] = a
    xs[0] = (xs[0] + P.x) % p
    x = LaurentSeries(0, xs, 2 * m, p)
    x = x.truncate(x.lead + n)
    y = LaurentSeries(1, [1], 1 + n, p)
    return x, y


def _trunc_mul(a: list[int], b: list[int], m: int, p: int) -> list[int]:
    out = [0] * m
    for i, ai in enumerate(a[:m]):
        if ai:
            for j in range(m - i):
                out[i + j] += ai * b[j]
    return [v % p for v in out]
