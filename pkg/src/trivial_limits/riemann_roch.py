"""Riemann-Roch spaces L(D) on y^2 = f(x) by linear algebra on local expansions.

An element of L(D) is written (a(x) + y*b(x)) / c(x).  The denominator c is
forced by the positive part of D at affine places; the degrees of a and b are
forced by the pole budget at infinity, where v(x) = -2 and v(y) = -(2g+1) have
different parities and so never cancel.  The remaining conditions are
valuation inequalities at finitely many affine places, which become linear
equations on the coefficients of a and b.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import INFINITY, Curve, Divisor, Place, local_expansion
from .errors import DomainError, IrrationalSupportError
from .ff import (
    LaurentSeries,
    Matrix,
    Polynomial,
    inv_mod,
    mat_kernel,
    poly_gcd,
    poly_xgcd,
    rational_roots,
    series_invert,
    splits_completely,
)


@dataclass(frozen=True)
class FunctionElement:
    """(a(x) + y*b(x)) / c(x)."""

    a: Polynomial
    b: Polynomial
    c: Polynomial

    @classmethod
    def make(cls, a, b, c=None, *, p: int | None = None) -> FunctionElement:
        if p is None:
            p = next(q.p for q in (a, b, c) if isinstance(q, Polynomial))
        a, b = (q if isinstance(q, Polynomial) else Polynomial(q, p) for q in (a, b))
        c = Polynomial([1], p) if c is None else (c if isinstance(c, Polynomial) else Polynomial(c, p))
        if c.is_zero():
            raise DomainError("zero denominator")
        g = poly_gcd(poly_gcd(a, b), c)
        if g.degree > 0:
            a, b, c = a // g, b // g, c // g
        k = inv_mod(c.lc, c.p)
        return cls(a.scale(k), b.scale(k), c.scale(k))

    @classmethod
    def constant(cls, value: int, p: int) -> FunctionElement:
        return cls.make(Polynomial([value], p), Polynomial([], p), p=p)

    @classmethod
    def from_x_poly(cls, a: Polynomial) -> FunctionElement:
        return cls.make(a, Polynomial([], a.p))

    @property
    def p(self) -> int:
        return self.c.p

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __add__(self, other: FunctionElement) -> FunctionElement:
        return FunctionElement.make(
            self.a * other.c + other.a * self.c, self.b * other.c + other.b * self.c, self.c * other.c
        )

    def __neg__(self) -> FunctionElement:
        return FunctionElement(-self.a, -self.b, self.c)

    def __sub__(self, other: FunctionElement) -> FunctionElement:
        return self + (-other)

    def scale(self, k: int) -> FunctionElement:
        return FunctionElement.make(self.a.scale(k), self.b.scale(k), self.c)

    def to_json(self) -> dict:
        return {"a": self.a.to_list(), "b": self.b.to_list(), "c": self.c.to_list()}

    def __str__(self):
        return f"({self.a.to_list()}) + y*({self.b.to_list()}) / ({self.c.to_list()})"


def fe_mul(curve: Curve, h1: FunctionElement, h2: FunctionElement) -> FunctionElement:
    f = curve.f
    return FunctionElement.make(
        h1.a * h2.a + f * h1.b * h2.b, h1.a * h2.b + h1.b * h2.a, h1.c * h2.c
    )


def fe_inverse(curve: Curve, h: FunctionElement) -> FunctionElement:
    if h.is_zero():
        raise DomainError("inverse of the zero function")
    n = numerator_norm(curve, h)
    return FunctionElement.make(h.c * h.a, -(h.c * h.b), n)


def fe_div(curve: Curve, h1: FunctionElement, h2: FunctionElement) -> FunctionElement:
    return fe_mul(curve, h1, fe_inverse(curve, h2))


def parse_function(curve: Curve, spec) -> FunctionElement:
    from .curve import _load

    obj = _load(spec)
    try:
        a = obj.get("a", [])
        b = obj.get("b", [])
        c = obj.get("c", [1])
        return FunctionElement.make(Polynomial(a, curve.p), Polynomial(b, curve.p), Polynomial(c, curve.p))
    except (AttributeError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed function: {spec!r}") from exc


def numerator_norm(curve: Curve, h: FunctionElement) -> Polynomial:
    """a^2 - f b^2, the norm of a + y b down to F_p(x)."""
    return h.a * h.a - curve.f * h.b * h.b


@dataclass(frozen=True)
class RRBasis:
    divisor: Divisor
    elements: tuple[FunctionElement, ...]

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        return {
            "divisor": self.divisor.to_json(),
            "dimension": self.dimension,
            "basis": [h.to_json() for h in self.elements],
        }


# ------------------------------------------------------------- local values


def _ramification(curve: Curve, P: Place) -> int:
    return 2 if curve.is_weierstrass(P) else 1


def _series_coeffs(s: LaurentSeries, m: int) -> list[int]:
    return [s[k] for k in range(m)]


def _poly_at(poly: Polynomial, xs: list[int], m: int, p: int) -> list[int]:
    """poly(X) mod t^m for a power series X given by its first m coefficients."""
    acc = [0] * m
    for coef in reversed(poly.coeffs):
        nxt = [0] * m
        for i, ai in enumerate(acc):
            if ai:
                for j in range(m - i):
                    nxt[i + j] += ai * xs[j]
        nxt[0] += coef
        acc = [v % p for v in nxt]
    return acc


def _numerator_coeffs(curve: Curve, a: Polynomial, b: Polynomial, P: Place, m: int) -> list[int]:
    """First m coefficients of a(x) + y b(x) at an affine place."""
    p = curve.p
    X, Y = local_expansion(curve, P, m + 2)
    xs, ys = _series_coeffs(X, m), _series_coeffs(Y, m)
    av = _poly_at(a, xs, m, p)
    if b.is_zero():
        return av
    bv = _poly_at(b, xs, m, p)
    out = av[:]
    for i, yi in enumerate(ys):
        if yi:
            for j in range(m - i):
                out[i + j] += yi * bv[j]
    return [v % p for v in out]


def _inf_numerator_valuation(curve: Curve, a: Polynomial, b: Polynomial) -> int:
    vals = []
    if a:
        vals.append(-2 * a.degree)
    if b:
        vals.append(-(2 * curve.g + 1) - 2 * b.degree)
    if not vals:
        raise DomainError("valuation of the zero function")
    return min(vals)


def _affine_numerator_valuation(curve: Curve, a: Polynomial, b: Polynomial, P: Place) -> int:
    if a.is_zero() and b.is_zero():
        raise DomainError("valuation of the zero function")
    norm = a * a - curve.f * b * b
    bound = _ramification(curve, P) * norm.multiplicity(P.x)
    coeffs = _numerator_coeffs(curve, a, b, P, bound + 1)
    for k, v in enumerate(coeffs):
        if v:
            return k
    raise AssertionError("valuation exceeded the norm bound")


def _poly_valuation(curve: Curve, c: Polynomial, P: Place) -> int:
    if P.is_infinity:
        return -2 * c.degree
    return _ramification(curve, P) * c.multiplicity(P.x)


def valuation(curve: Curve, h: FunctionElement, P: Place) -> int:
    curve.check_place(P)
    if h.is_zero():
        raise DomainError("valuation of the zero function")
    vc = _poly_valuation(curve, h.c, P)
    if P.is_infinity:
        return _inf_numerator_valuation(curve, h.a, h.b) - vc
    return _affine_numerator_valuation(curve, h.a, h.b, P) - vc


def _horner(poly: Polynomial, X: LaurentSeries) -> LaurentSeries:
    p = poly.p
    acc = LaurentSeries(0, [poly.lc], X.relative_precision + 1, p)
    for coef in reversed(poly.coeffs[:-1]):
        acc = acc * X
        if coef:
            if acc.prec <= 0:
                continue
            acc = acc + LaurentSeries(0, [coef], acc.prec, p)
    return acc


def expand(curve: Curve, h: FunctionElement, P: Place, prec: int) -> LaurentSeries:
    """Local expansion of h at P, exact below t^prec.  Precision grows until it suffices."""
    curve.check_place(P)
    p = curve.p
    if h.is_zero():
        return LaurentSeries(prec, [], prec, p)
    n = max(prec, 1) + 4
    if P.is_infinity:
        n += 2 * (curve.g + 1) * (max(h.a.degree, h.b.degree + curve.g + 1, h.c.degree) + 1)
    while True:
        X, Y = local_expansion(curve, P, n)
        num = _horner(h.a, X) if h.a else None
        if h.b:
            yb = Y * _horner(h.b, X)
            num = yb if num is None else num + yb
        den = _horner(h.c, X)
        if not num.is_zero() and not den.is_zero():
            r = num * series_invert(den)
            if r.prec >= prec:
                return r.truncate(prec) if r.prec > prec else r
        n *= 2
        if n > 1 << 14:
            raise AssertionError("local expansion failed to reach the requested precision")


# ----------------------------------------------------------- the RR solver


def _denominator(curve: Curve, D: Divisor) -> Polynomial:
    p = curve.p
    need: dict[int, int] = {}
    for P in D.affine_support():
        n = D[P]
        if n <= 0:
            continue
        e = (n + 1) // 2 if curve.is_weierstrass(P) else n
        need[P.x] = max(need.get(P.x, 0), e)
    c = Polynomial([1], p)
    for x0 in sorted(need):
        c = c * Polynomial([-x0, 1], p) ** need[x0]
    return c


def _constrained_places(curve: Curve, D: Divisor, c: Polynomial) -> list[Place]:
    places = set(D.affine_support())
    for x0 in rational_roots(c) if c.degree > 0 else {}:
        places.update(curve.places_over(x0))
    return sorted(places, key=Place.sort_key)


def _monomials(curve: Curve, A: int, B: int) -> list[tuple[str, int]]:
    """Unknowns ordered by pole order at infinity, highest first."""
    g = curve.g
    monos = [("a", i) for i in range(A + 1)] + [("b", j) for j in range(B + 1)]
    pole = lambda m: 2 * m[1] if m[0] == "a" else 2 * g + 1 + 2 * m[1]
    return sorted(monos, key=pole, reverse=True)


def _rr_numerators(curve: Curve, D: Divisor) -> tuple[Polynomial, list[tuple[Polynomial, Polynomial]]]:
    """Common denominator c and numerators (a_i, b_i) of an echelon basis of L(D)."""
    for P in D.support():
        curve.check_place(P)
    p, g = curve.p, curve.g
    c = _denominator(curve, D)
    budget = D[INFINITY] + 2 * c.degree
    A = budget // 2 if budget >= 0 else -1
    B = (budget - 2 * g - 1) // 2 if budget >= 2 * g + 1 else -1
    monos = _monomials(curve, A, B)
    if not monos:
        return c, []
    rows: list[list[int]] = []
    for P in _constrained_places(curve, D, c):
        m = _poly_valuation(curve, c, P) - D[P]
        if m <= 0:
            continue
        X, Y = local_expansion(curve, P, m + 2)
        xs, ys = _series_coeffs(X, m), _series_coeffs(Y, m)
        cols = {}
        xp = [1] + [0] * (m - 1)
        for i in range(max(A, B) + 1):
            if i <= A:
                cols[("a", i)] = xp
            if i <= B:
                yx = [0] * m
                for k, yk in enumerate(ys):
                    if yk:
                        for j in range(m - k):
                            yx[k + j] += yk * xp[j]
                cols[("b", i)] = [v % p for v in yx]
            nxt = [0] * m
            for k, xk in enumerate(xp):
                if xk:
                    for j in range(m - k):
                        nxt[k + j] += xk * xs[j]
            xp = [v % p for v in nxt]
        for k in range(m):
            rows.append([cols[mono][k] for mono in monos])
    kernel = mat_kernel(Matrix(rows, p, cols=len(monos)))
    if not kernel:
        return c, []
    echelon, _ = Matrix(kernel, p, cols=len(monos)).rref()
    out = []
    for vec in reversed(echelon):
        a = [0] * (A + 1)
        b = [0] * (B + 1)
        for (kind, i), v in zip(monos, vec):
            (a if kind == "a" else b)[i] = v
        out.append((Polynomial(a, p), Polynomial(b, p)))
    return c, out


def rr_space(curve: Curve, D: Divisor, *, verify: bool = True) -> RRBasis:
    c, nums = _rr_numerators(curve, D)
    elements = tuple(FunctionElement.make(a, b, c) for a, b in nums)
    if verify:
        places = set(_constrained_places(curve, D, c)) | {INFINITY}
        for h in elements:
            for P in places:
                if valuation(curve, h, P) < -D[P]:
                    raise RuntimeError(f"internal error: basis element {h} violates L(D) at {P!r}")
    return RRBasis(D, elements)


def h0(curve: Curve, D: Divisor) -> int:
    if D.degree < 0:
        for P in D.support():
            curve.check_place(P)
        return 0
    return len(_rr_numerators(curve, D)[1])


def in_rr_space(curve: Curve, h: FunctionElement, D: Divisor) -> bool:
    """Whether div(h) + D >= 0, for h whose denominator splits over F_p."""
    if h.is_zero():
        return True
    if not splits_completely(h.c):
        raise IrrationalSupportError("denominator has non-rational roots")
    places = set(D.support()) | {INFINITY}
    for x0 in rational_roots(h.c) if h.c.degree > 0 else {}:
        places.update(curve.places_over(x0))
    return all(valuation(curve, h, P) >= -D[P] for P in places)


# -------------------------------------------------------- function divisors


def function_divisor(curve: Curve, h: FunctionElement) -> Divisor:
    if h.is_zero():
        raise DomainError("divisor of the zero function")
    h = FunctionElement.make(h.a, h.b, h.c)
    norm = numerator_norm(curve, h)
    for poly, what in ((norm, "zeros"), (h.c, "poles")):
        if not splits_completely(poly):
            raise IrrationalSupportError(f"{what} of the function lie over non-rational x-values")
    xs = set(rational_roots(norm)) | (set(rational_roots(h.c)) if h.c.degree > 0 else set())
    terms = {}
    for x0 in sorted(xs):
        for P in curve.places_over(x0):
            v = valuation(curve, h, P)
            if v:
                terms[P] = v
    v_inf = valuation(curve, h, INFINITY)
    if v_inf:
        terms[INFINITY] = v_inf
    D = Divisor(terms)
    if D.degree != 0:
        raise AssertionError(f"principal divisor of nonzero degree: {D!r}")
    return D


# -------------------------------------------------------------- fixed part


def _ideal_colength(curve: Curve, gens: list[tuple[Polynomial, Polynomial]]) -> tuple[int, Polynomial]:
    """dim R/I and a polynomial whose roots are the x-values of the zeros of I.

    I is the ideal of R = F_p[x, y]/(y^2 - f) generated by a_i + y b_i; as an
    F_p[x]-lattice it is spanned by (a_i, b_i) and y*(a_i + y b_i) = (f b_i, a_i).
    """
    f = curve.f
    vecs = [(a, b) for a, b in gens] + [(f * b, a) for a, b in gens]
    pivot = None
    flat: list[Polynomial] = []
    for a, b in vecs:
        if b.is_zero():
            flat.append(a)
            continue
        if pivot is None:
            pivot = (a, b)
            continue
        pa, pb = pivot
        g, s, t = poly_xgcd(pb, b)
        pivot = (s * pa + t * a, g)
        flat.append((b // g) * pa - (pb // g) * a)
    A = Polynomial([], curve.p)
    for a in flat:
        A = poly_gcd(A, a)
    if pivot is None or A.is_zero():
        raise AssertionError("ideal of a nonzero function has finite colength")
    C = pivot[1].monic()
    return A.degree + C.degree, A * C


def _base_locus(curve: Curve, D: Divisor) -> tuple[Divisor, bool]:
    """(rational fixed part, whether non-rational base points exist)."""
    c, nums = _rr_numerators(curve, D)
    if not nums:
        raise DomainError("empty linear system")
    colength, zero_poly = _ideal_colength(curve, nums)
    candidates = set(_constrained_places(curve, D, c))
    irrational = False
    rational_total = 0
    for x0 in rational_roots(zero_poly) if zero_poly.degree > 0 else {}:
        try:
            over = curve.places_over(x0)
        except IrrationalSupportError:
            irrational = True
            continue
        for P in over:
            v = min(_affine_numerator_valuation(curve, a, b, P) for a, b in nums if a or b)
            rational_total += v
            candidates.add(P)
    if rational_total < colength:
        irrational = True
    terms = {}
    for P in candidates:
        v = min(_affine_numerator_valuation(curve, a, b, P) for a, b in nums if a or b)
        m = v - _poly_valuation(curve, c, P) + D[P]
        if m:
            terms[P] = m
    v_inf = min(_inf_numerator_valuation(curve, a, b) for a, b in nums) + 2 * c.degree + D[INFINITY]
    if v_inf:
        terms[INFINITY] = v_inf
    F = Divisor(terms)
    if not F.is_effective():
        raise AssertionError("negative fixed-part multiplicity")
    return F, irrational


def fixed_part(curve: Curve, D: Divisor) -> Divisor:
    F, irrational = _base_locus(curve, D)
    if irrational:
        raise IrrationalSupportError("the fixed part of |D| contains non-rational places")
    return F
