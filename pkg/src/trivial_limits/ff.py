"""Exact arithmetic over a prime field F_p.

Scalars, dense univariate polynomials, truncated Laurent series and dense
matrices.  Everything here stores plain Python ints reduced modulo ``p``;
the :class:`FieldElement` wrapper exists for the public surfaces that hand
single scalars back to callers.
"""

from __future__ import annotations

from sympy.ntheory import isprime, sqrt_mod

from .errors import DomainError, PrecisionError


def check_modulus(p: int) -> int:
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise DomainError(f"modulus must be an odd prime, got {p!r}")
    return p


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of zero in F_p")
    return pow(a, p - 2, p)


def is_square(a: int, p: int) -> bool:
    a %= p
    return a == 0 or pow(a, (p - 1) // 2, p) == 1


def sqrt_fp(a: int, p: int) -> int:
    """Smaller of the two square roots of ``a`` mod ``p``."""
    a %= p
    if a == 0:
        return 0
    r = sqrt_mod(a, p)
    if r is None:
        raise DomainError(f"{a} is not a square modulo {p}")
    return min(r, p - r)


class FieldElement:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = int(value) % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise DomainError("modulus mismatch")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def inverse(self) -> FieldElement:
        return FieldElement(inv_mod(self.value, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.value * inv_mod(o, self.p), self.p)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FieldElement(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElement({self.value}, {self.p})"


# ---------------------------------------------------------------- polynomials


def _trim(c: list[int]) -> tuple[int, ...]:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


class Polynomial:
    """Dense polynomial over F_p, coefficients low degree first."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p: int):
        self.p = p
        self.coeffs = _trim([int(a) % p for a in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...], p: int) -> Polynomial:
        obj = object.__new__(cls)
        obj.p = p
        obj.coeffs = coeffs
        return obj

    @classmethod
    def x(cls, p: int) -> Polynomial:
        return cls._raw((0, 1), p)

    @classmethod
    def constant(cls, a: int, p: int) -> Polynomial:
        return cls([a], p)

    @classmethod
    def from_roots(cls, roots, p: int) -> Polynomial:
        out = cls._raw((1,), p)
        for r in roots:
            out = out * cls([-r, 1], p)
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _other(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.p != self.p:
                raise DomainError("modulus mismatch")
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial([int(other)], self.p)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        o = self._other(other)
        a, b, p = self.coeffs, o.coeffs, self.p
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, v in enumerate(b):
            c[i] = (c[i] + v) % p
        return Polynomial._raw(_trim(c), p)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return Polynomial._raw(tuple((-a) % p for a in self.coeffs), p)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        o = self._other(other)
        a, b, p = self.coeffs, o.coeffs, self.p
        if not a or not b:
            return Polynomial._raw((), p)
        c = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    c[i + j] += ai * bj
        return Polynomial._raw(_trim([v % p for v in c]), p)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative polynomial power")
        out = Polynomial._raw((1,), self.p)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, a: int) -> Polynomial:
        p = self.p
        return Polynomial._raw(_trim([c * a % p for c in self.coeffs]), p)

    def monic(self) -> Polynomial:
        if not self.coeffs:
            return self
        return self.scale(inv_mod(self.lc, self.p))

    def divmod(self, other) -> tuple[Polynomial, Polynomial]:
        b = self._other(other)
        if b.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        r = list(self.coeffs)
        db = b.degree
        inv_lc = inv_mod(b.lc, p)
        if len(r) - 1 < db:
            return Polynomial._raw((), p), self
        q = [0] * (len(r) - db)
        bc = b.coeffs
        for k in range(len(r) - 1 - db, -1, -1):
            coef = r[k + db] * inv_lc % p
            q[k] = coef
            if coef:
                for j in range(db + 1):
                    r[k + j] = (r[k + j] - coef * bc[j]) % p
        return Polynomial._raw(_trim(q), p), Polynomial._raw(_trim(r[:db]), p)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other) -> Polynomial:
        q, r = self.divmod(other)
        if r:
            raise DomainError("polynomial division is not exact")
        return q

    def __call__(self, x: int) -> int:
        acc = 0
        p = self.p
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def derivative(self) -> Polynomial:
        p = self.p
        return Polynomial._raw(_trim([i * c % p for i, c in enumerate(self.coeffs)][1:]), p)

    def shift(self, x0: int) -> Polynomial:
        """Coefficients of self(x0 + t) as a polynomial in t."""
        p = self.p
        out: list[int] = []
        for c in reversed(self.coeffs):
            # out = out * (x0 + t) + c
            nxt = [0] * (len(out) + 1)
            for i, v in enumerate(out):
                nxt[i] = (nxt[i] + v * x0) % p
                nxt[i + 1] = (nxt[i + 1] + v) % p
            nxt[0] = (nxt[0] + c) % p
            out = nxt
        return Polynomial._raw(_trim(out), p)

    def multiplicity(self, x0: int) -> int:
        """Order of vanishing at x = x0."""
        if self.is_zero():
            raise DomainError("multiplicity of the zero polynomial")
        for i, c in enumerate(self.shift(x0).coeffs):
            if c:
                return i
        raise AssertionError("unreachable")

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Polynomial([other], self.p).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.p))

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)}, {self.p})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(reversed(terms))

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def poly_xgcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Return (g, s, t) with g = s*a + t*b monic (or zero when a = b = 0)."""
    if a.p != b.p:
        raise DomainError("modulus mismatch")
    p = a.p
    zero, one = Polynomial._raw((), p), Polynomial._raw((1,), p)
    r0, r1, s0, s1, t0, t1 = a, b, one, zero, zero, one
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    k = inv_mod(r0.lc, p)
    return r0.scale(k), s0.scale(k), t0.scale(k)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, 0) = 0."""
    if a.p != b.p:
        raise DomainError("modulus mismatch")
    while b:
        a, b = b, a % b
    return a.monic()


def powmod(base: Polynomial, n: int, mod: Polynomial) -> Polynomial:
    out = Polynomial._raw((1,), base.p) % mod
    base = base % mod
    while n:
        if n & 1:
            out = out * base % mod
        base = base * base % mod
        n >>= 1
    return out


def is_squarefree(f: Polynomial) -> bool:
    df = f.derivative()
    if df.is_zero():
        return f.degree <= 0
    return poly_gcd(f, df).degree == 0


def _split_linear(g: Polynomial) -> list[int]:
    """Roots of a monic squarefree product of distinct linear factors."""
    p = g.p
    if g.degree <= 0:
        return []
    if g.degree == 1:
        return [(-g.coeffs[0]) % p]
    delta = 0
    while True:
        # deterministic Cantor-Zassenhaus splitting with shifts x + delta
        h = powmod(Polynomial([delta, 1], p), (p - 1) // 2, g) - 1
        d = poly_gcd(g, h)
        if 0 < d.degree < g.degree:
            return _split_linear(d) + _split_linear(g.exact_div(d))
        delta += 1
        if delta >= p:
            # g vanishes only at roots not separated by any shift; fall back to search
            return [r for r in range(p) if g(r) == 0]


def rational_roots(f: Polynomial) -> dict[int, int]:
    """Map each root of f in F_p to its multiplicity."""
    if f.is_zero():
        raise DomainError("roots of the zero polynomial")
    p = f.p
    if f.degree <= 0:
        return {}
    x = Polynomial.x(p)
    g = poly_gcd(f, powmod(x, p, f) - x)
    out = {}
    for r in sorted(_split_linear(g)):
        out[r] = f.multiplicity(r)
    return out


def splits_completely(f: Polynomial) -> bool:
    if f.degree <= 0:
        return True
    return sum(rational_roots(f).values()) == f.degree


# ------------------------------------------------------------ Laurent series


class LaurentSeries:
    """sum coeffs[i] t^(lead+i) + O(t^prec) over F_p.

    ``coeffs`` spans exponents lead .. prec-1; the first one is nonzero unless
    the series is O(t^prec), in which case ``lead == prec`` and there are no
    coefficients.
    """

    __slots__ = ("lead", "coeffs", "prec", "p")

    def __init__(self, lead: int, coeffs, prec: int, p: int):
        c = [int(a) % p for a in coeffs]
        if prec < lead:
            raise DomainError("precision below leading exponent")
        c = c[: prec - lead] + [0] * (prec - lead - len(c))
        k = 0
        while k < len(c) and c[k] == 0:
            k += 1
        if k == len(c):
            lead, c = prec, []
        else:
            lead, c = lead + k, c[k:]
        self.lead, self.coeffs, self.prec, self.p = lead, tuple(c), prec, p

    @classmethod
    def from_poly(cls, f: Polynomial, prec: int) -> LaurentSeries:
        return cls(0, f.coeffs[: max(prec, 0)], max(prec, 0), f.p)

    @classmethod
    def monomial(cls, a: int, n: int, prec: int, p: int) -> LaurentSeries:
        return cls(n, [a], prec, p)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self) -> int:
        if not self.coeffs:
            raise PrecisionError("valuation of a series known to be zero only up to precision")
        return self.lead

    @property
    def relative_precision(self) -> int:
        return self.prec - self.lead

    def __getitem__(self, n: int) -> int:
        if n >= self.prec:
            raise PrecisionError(f"coefficient t^{n} beyond precision {self.prec}")
        if n < self.lead:
            return 0
        return self.coeffs[n - self.lead]

    def truncate(self, prec: int) -> LaurentSeries:
        return LaurentSeries(self.lead, self.coeffs, min(prec, self.prec), self.p)

    def _check(self, other: LaurentSeries):
        if other.p != self.p:
            raise DomainError("modulus mismatch")

    def __add__(self, other: LaurentSeries) -> LaurentSeries:
        self._check(other)
        prec = min(self.prec, other.prec)
        lead = min(self.lead, other.lead, prec)
        c = [0] * (prec - lead)
        for s in (self, other):
            for i, a in enumerate(s.coeffs):
                e = s.lead + i - lead
                if e >= len(c):
                    break
                c[e] += a
        return LaurentSeries(lead, c, prec, self.p)

    def __neg__(self):
        return LaurentSeries(self.lead, [-a for a in self.coeffs], self.prec, self.p)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a: int) -> LaurentSeries:
        return LaurentSeries(self.lead, [a * c for c in self.coeffs], self.prec, self.p)

    def __mul__(self, other) -> LaurentSeries:
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        lead = self.lead + other.lead
        prec = min(self.lead + other.prec, other.lead + self.prec)
        n = prec - lead
        a, b, p = self.coeffs, other.coeffs, self.p
        c = [0] * max(n, 0)
        for i in range(min(len(a), n)):
            ai = a[i]
            if ai:
                for j in range(min(len(b), n - i)):
                    c[i + j] += ai * b[j]
        return LaurentSeries(lead, [v % p for v in c], prec, p)

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentSeries:
        """Multiply by t^k."""
        return LaurentSeries(self.lead + k, self.coeffs, self.prec + k, self.p)

    def __pow__(self, n: int) -> LaurentSeries:
        if n < 0:
            return series_invert(self) ** (-n)
        if n == 0:
            return LaurentSeries(0, [1], self.prec - self.lead, self.p)
        out = None
        base = self
        while n:
            if n & 1:
                out = base if out is None else out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def derivative(self) -> LaurentSeries:
        p = self.p
        c = [(self.lead + i) * a for i, a in enumerate(self.coeffs)]
        return LaurentSeries(self.lead - 1, c, self.prec - 1, p)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.lead, self.coeffs, self.prec, self.p) == (other.lead, other.coeffs, other.prec, other.p)

    def __hash__(self):
        return hash((self.lead, self.coeffs, self.prec, self.p))

    def __repr__(self):
        return f"LaurentSeries(lead={self.lead}, coeffs={list(self.coeffs)}, prec={self.prec}, p={self.p})"


def series_invert(s: LaurentSeries) -> LaurentSeries:
    if s.is_zero():
        raise DomainError("cannot invert a series that is zero to its precision")
    p = s.p
    a = s.coeffs
    n = len(a)
    inv0 = inv_mod(a[0], p)
    b = [0] * n
    b[0] = inv0
    for k in range(1, n):
        acc = 0
        for i in range(1, k + 1):
            acc += a[i] * b[k - i]
        b[k] = (-acc * inv0) % p
    return LaurentSeries(-s.lead, b, -s.lead + n, p)


def series_sqrt(s: LaurentSeries, branch: int | None = None) -> LaurentSeries:
    """Square root with leading coefficient ``branch`` (or the smaller root)."""
    p = s.p
    if p == 2:
        raise DomainError("square roots need odd characteristic")
    if s.is_zero():
        raise DomainError("square root of a series that is zero to its precision")
    if s.lead % 2:
        raise DomainError("square root of a series with odd valuation")
    a = s.coeffs
    if not is_square(a[0], p):
        raise DomainError("leading coefficient is not a quadratic residue")
    r0 = sqrt_fp(a[0], p)
    if branch is not None:
        if branch * branch % p != a[0]:
            raise DomainError("requested branch does not square to the leading coefficient")
        r0 = branch % p
    n = len(a)
    r = [0] * n
    r[0] = r0
    inv2r0 = inv_mod(2 * r0, p)
    for k in range(1, n):
        acc = a[k]
        for i in range(1, k):
            acc -= r[i] * r[k - i]
        r[k] = acc * inv2r0 % p
    half = s.lead // 2
    return LaurentSeries(half, r, half + n, p)


# ------------------------------------------------------------------ matrices


class Matrix:
    __slots__ = ("rows", "cols", "entries", "p")

    def __init__(self, entries, p: int, cols: int | None = None):
        self.entries = [[int(a) % p for a in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = cols if cols is not None else (len(self.entries[0]) if self.entries else 0)
        if any(len(r) != self.cols for r in self.entries):
            raise DomainError("ragged matrix")
        self.p = p

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> Matrix:
        return cls([[0] * cols for _ in range(rows)], p, cols)

    @classmethod
    def identity(cls, n: int, p: int) -> Matrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], p, n)

    def rref(self) -> tuple[list[list[int]], list[int]]:
        p = self.p
        m = [row[:] for row in self.entries]
        pivots: list[int] = []
        r = 0
        for col in range(self.cols):
            piv = next((i for i in range(r, self.rows) if m[i][col]), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            k = inv_mod(m[r][col], p)
            m[r] = [v * k % p for v in m[r]]
            pr = m[r]
            for i in range(self.rows):
                if i != r and m[i][col]:
                    fct = m[i][col]
                    m[i] = [(v - fct * w) % p for v, w in zip(m[i], pr)]
            pivots.append(col)
            r += 1
            if r == self.rows:
                break
        return m[:r], pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def __matmul__(self, vec):
        p = self.p
        return [sum(a * b for a, b in zip(row, vec)) % p for row in self.entries]


def mat_kernel(m: Matrix) -> list[list[int]]:
    """Basis of the right null space, one vector per free column."""
    red, pivots = m.rref()
    p = m.p
    pivset = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [0] * m.cols
        v[free] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[free]) % p
        basis.append(v)
    return basis
