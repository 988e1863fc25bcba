"""Univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq, mpz, lcm

from ..errors import ZeroPolynomial
from . import zpoly

_MPQ = type(mpq(0))
_MPZ = type(mpz(0))


def Q(v) -> mpq:
    """Coerce an int, string, Fraction or gmpy2 value to an exact rational."""
    if type(v) is _MPQ:
        return v
    if isinstance(v, (int, _MPZ)):
        return mpq(v)
    if isinstance(v, Fraction):
        return mpq(v.numerator, v.denominator)
    if isinstance(v, str):
        return mpq(v.strip().replace(" ", ""))
    if isinstance(v, Rational):
        return mpq(int(v.numerator), int(v.denominator))
    raise TypeError(f"not an exact rational: {v!r}")


def _is_scalar(v) -> bool:
    return isinstance(v, (int, _MPZ, _MPQ, Fraction))


class RatPoly:
    """Immutable polynomial over Q, coefficients stored constant term first."""

    __slots__ = ("c", "_ir")

    def __init__(self, coeffs=()):
        c = [Q(a) for a in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = tuple(c)
        self._ir = None

    @classmethod
    def _raw(cls, c) -> "RatPoly":
        p = object.__new__(cls)
        c = list(c)
        while c and not c[-1]:
            c.pop()
        p.c = tuple(c)
        p._ir = None
        return p

    @classmethod
    def from_ints(cls, ints, den=1) -> "RatPoly":
        den = mpz(den)
        if den == 1:
            return cls._raw(mpq(x) for x in ints)
        return cls._raw(mpq(x, den) for x in ints)

    @classmethod
    def x(cls) -> "RatPoly":
        return cls._raw((mpq(0), mpq(1)))

    @classmethod
    def const(cls, v) -> "RatPoly":
        return cls._raw((Q(v),))

    @classmethod
    def monomial(cls, n: int, v=1) -> "RatPoly":
        return cls._raw([mpq(0)] * n + [Q(v)])

    # basic data

    @property
    def coeffs(self) -> tuple:
        return self.c

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def lc(self) -> mpq:
        return self.c[-1] if self.c else mpq(0)

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __len__(self):
        return len(self.c)

    def __getitem__(self, i):
        return self.c[i] if 0 <= i < len(self.c) else mpq(0)

    def int_rep(self):
        """(ints, den) with self == ints / den and den > 0 minimal."""
        if self._ir is None:
            den = mpz(1)
            for a in self.c:
                d = a.denominator
                if d != 1:
                    den = lcm(den, d)
            if den == 1:
                ints = [a.numerator for a in self.c]
            else:
                ints = [a.numerator * (den // a.denominator) for a in self.c]
            self._ir = (ints, den)
        return self._ir

    def primitive_int(self) -> list:
        """Primitive integer model (content removed, positive leading coefficient)."""
        return zpoly.primitive(list(self.int_rep()[0]))

    def is_integral(self) -> bool:
        return self.int_rep()[1] == 1

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, RatPoly):
            return other
        if _is_scalar(other):
            return RatPoly._raw((Q(other),))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return RatPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly._raw(-a for a in self.c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            v = Q(other)
            if not v:
                return RatPoly._raw(())
            return RatPoly._raw(a * v for a in self.c)
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self.c, other.c
        if not a or not b:
            return RatPoly._raw(())
        if min(len(a), len(b)) < 8:
            out = [mpq(0)] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return RatPoly._raw(out)
        ia, da = self.int_rep()
        ib, db = other.int_rep()
        return RatPoly.from_ints(zpoly.mul(ia, ib), da * db)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = RatPoly._raw((mpq(1),))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        if not isinstance(other, RatPoly):
            other = RatPoly.const(other)
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        db = other.degree
        r = list(self.c)
        if len(r) - 1 < db:
            return RatPoly._raw(()), self
        inv = 1 / other.c[-1]
        b = other.c
        q = [mpq(0)] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            coef = r[k + db] * inv
            if coef:
                q[k] = coef
                for j in range(db):
                    if b[j]:
                        r[k + j] -= coef * b[j]
            r[k + db] = mpq(0)
        return RatPoly._raw(q), RatPoly._raw(r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "RatPoly") -> "RatPoly":
        """Quotient when other is known to divide self; raises otherwise."""
        ia, da = self.int_rep()
        ib, db = other.int_rep()
        q = zpoly.divexact(ia, ib)
        if q is None:
            q_, r = divmod(self, other)
            if r:
                raise ArithmeticError("inexact polynomial division")
            return q_
        return RatPoly.from_ints(q, 1) * (mpq(db) / da)

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (1 / Q(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.c == other.c
        if _is_scalar(other):
            return self.c == ((Q(other),) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __call__(self, v):
        """Horner evaluation at a rational or at any ring element supporting + and *."""
        c = self.c
        if not c:
            return mpq(0) if _is_scalar(v) else v * 0
        if _is_scalar(v):
            v = Q(v)
        acc = c[-1] + 0 * v if not _is_scalar(v) else c[-1]
        for a in reversed(c[:-1]):
            acc = acc * v + a
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly._raw(i * self.c[i] for i in range(1, len(self.c)))

    def monic(self) -> "RatPoly":
        if not self.c:
            return self
        inv = 1 / self.c[-1]
        return RatPoly._raw(a * inv for a in self.c)

    def compose(self, g: "RatPoly") -> "RatPoly":
        acc = RatPoly._raw(())
        for a in reversed(self.c):
            acc = acc * g + a
        return acc

    def scale_var(self, s) -> "RatPoly":
        """p(s*x)."""
        s = Q(s)
        out = []
        pw = mpq(1)
        for a in self.c:
            out.append(a * pw)
            pw *= s
        return RatPoly._raw(out)

    def reverse(self) -> "RatPoly":
        return RatPoly._raw(reversed(self.c))

    def is_monic(self) -> bool:
        return bool(self.c) and self.c[-1] == 1

    # presentation

    def to_list(self) -> list:
        return [str(a) for a in self.c]

    def __repr__(self):
        return f"RatPoly([{', '.join(str(a) for a in self.c)}])"

    def __str__(self):
        return format_poly(self)


def format_poly(p: RatPoly, var: str = "x") -> str:
    if not p.c:
        return "0"
    parts = []
    for i in range(len(p.c) - 1, -1, -1):
        a = p.c[i]
        if not a:
            continue
        sign = "-" if a < 0 else "+"
        mag = -a if a < 0 else a
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd; gcd(0, 0) is 0."""
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    g = zpoly.gcd(list(a.int_rep()[0]), list(b.int_rep()[0]))
    return RatPoly.from_ints(g).monic()


def poly_xgcd(a: RatPoly, b: RatPoly):
    """(g, s, t) with s*a + t*b = g monic."""
    r0, r1 = a, b
    s0, s1 = RatPoly.const(1), RatPoly._raw(())
    t0, t1 = RatPoly._raw(()), RatPoly.const(1)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def resultant(a: RatPoly, b: RatPoly) -> mpq:
    """Res(a, b) = lc(a)^deg(b) * prod of b over the roots of a."""
    if not a or not b:
        raise ZeroPolynomial("resultant of the zero polynomial")
    da, db = a.degree, b.degree
    if da == 0:
        return a.lc ** db
    if db == 0:
        return b.lc ** da
    res = mpq(1)
    while True:
        if db == 0:
            return res * b.lc ** da
        r = a % b
        if not r:
            return mpq(0)
        dr = r.degree
        if (da * db) & 1:
            res = -res
        res *= b.lc ** (da - dr)
        a, b = b, r
        da, db = db, dr


def discriminant(f: RatPoly) -> mpq:
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs positive degree")
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) & 1 else 1
    return sign * r / f.lc


def squarefree_part(f: RatPoly) -> RatPoly:
    if f.degree < 1:
        return f.monic()
    g = poly_gcd(f, f.derivative())
    return f.monic().exact_div(g) if g.degree > 0 else f.monic()


def squarefree_decomposition(f: RatPoly):
    """Yun's algorithm: list of (monic squarefree factor, multiplicity)."""
    out = []
    if f.degree < 1:
        return out
    f = f.monic()
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f.exact_div(a)
    c = fp.exact_div(a) if a.degree > 0 else fp * (1 / a.lc)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def interpolate(xs, ys) -> RatPoly:
    """Newton interpolation through distinct rational nodes."""
    n = len(xs)
    coef = [Q(y) for y in ys]
    xs = [Q(x) for x in xs]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = RatPoly.const(coef[-1])
    for i in range(n - 2, -1, -1):
        p = p * RatPoly._raw((-xs[i], mpq(1))) + coef[i]
    return p


def parse_poly(text: str) -> RatPoly:
    """Parse comma-separated coefficients, constant term first."""
    text = text.strip().replace("−", "-")
    if not text:
        raise ValueError("empty polynomial")
    return RatPoly(Q(t) for t in text.split(","))
