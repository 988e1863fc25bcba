"""Rational elliptic curves: invariants, group law over number fields, division
polynomials, reduction mod p and a few explicit families."""

from __future__ import annotations

import threading
from dataclasses import dataclass

from gmpy2 import mpq, mpz, is_prime

from .algebra import modp
from .algebra.poly import RatPoly, Q
from .errors import (
    BadReduction, ExcludedParameter, FieldMismatch, SingularCurve, TooLarge,
)
from .numfield import NFElem, NumberField
from .structure import TorsionStructure

MAX_DIVISION_INDEX = 32
COUNT_CAP = 10 ** 6


class CurveQ:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q."""

    __slots__ = ("a1", "a2", "a3", "a4", "a6", "b2", "b4", "b6", "b8", "c4", "c6",
                 "disc", "j", "label", "_divpolys", "_lock", "_integral")

    def __init__(self, a1=0, a2=0, a3=0, a4=0, a6=0, label=None):
        self.a1, self.a2, self.a3, self.a4, self.a6 = (Q(v) for v in (a1, a2, a3, a4, a6))
        a1, a2, a3, a4, a6 = self.ainvs
        self.b2 = a1 * a1 + 4 * a2
        self.b4 = 2 * a4 + a1 * a3
        self.b6 = a3 * a3 + 4 * a6
        self.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        self.c4 = b2 * b2 - 24 * b4
        self.c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
        self.disc = -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        if self.disc == 0:
            raise SingularCurve("discriminant vanishes")
        assert self.c4 ** 3 - self.c6 ** 2 == 1728 * self.disc
        self.j = self.c4 ** 3 / self.disc
        self.label = label
        self._divpolys = {}
        self._lock = threading.Lock()
        self._integral = None

    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __eq__(self, other):
        return isinstance(other, CurveQ) and self.ainvs == other.ainvs

    def __hash__(self):
        return hash(self.ainvs)

    def __repr__(self):
        name = f" {self.label}" if self.label else ""
        return f"CurveQ{name}[{','.join(str(a) for a in self.ainvs)}]"

    def two_torsion_poly(self) -> RatPoly:
        """4x^3 + b2 x^2 + 2 b4 x + b6, whose roots are x-coordinates of 2-torsion points."""
        return RatPoly([self.b6, 2 * self.b4, self.b2, 4])

    def y_discriminant(self, x):
        """Discriminant of the quadratic in y at the given x (works over any ring)."""
        return ((4 * x + self.b2) * x + 2 * self.b4) * x + self.b6

    def is_on_curve(self, x, y) -> bool:
        a1, a2, a3, a4, a6 = self.ainvs
        return y * y + a1 * x * y + a3 * y - (((x + a2) * x + a4) * x + a6) == 0

    # points

    def point(self, x, y, K: NumberField = None) -> "PointK":
        if K is None:
            K = x.parent if isinstance(x, NFElem) else NumberField.rationals()
        return PointK(self, K, K(x), K(y))

    def zero(self, K: NumberField = None) -> "PointK":
        return PointK(self, K or NumberField.rationals(), None, None)

    # division polynomials

    def _f(self, n: int) -> RatPoly:
        """f_n: psi_n for odd n and psi_n / psi_2 for even n, as polynomials in x."""
        cache = self._divpolys
        if n in cache:
            return cache[n]
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        if n <= 0:
            val = RatPoly()
        elif n in (1, 2):
            val = RatPoly.const(1)
        elif n == 3:
            val = RatPoly([b8, 3 * b6, 3 * b4, b2, 3])
        elif n == 4:
            val = RatPoly([b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2])
        else:
            F2 = self._f2sq()
            m = n // 2
            f = self._f
            if n % 2 == 0:
                val = f(m) * (f(m + 2) * f(m - 1) ** 2 - f(m - 2) * f(m + 1) ** 2)
            elif m % 2 == 0:
                val = F2 * f(m + 2) * f(m) ** 3 - f(m - 1) * f(m + 1) ** 3
            else:
                val = f(m + 2) * f(m) ** 3 - F2 * f(m - 1) * f(m + 1) ** 3
        cache[n] = val
        return val

    def _f2sq(self) -> RatPoly:
        if "F2" not in self._divpolys:
            F = self.two_torsion_poly()
            self._divpolys["F2"] = F * F
        return self._divpolys["F2"]

    def division_polynomial(self, n: int) -> "DivisionData":
        if not 1 <= n <= MAX_DIVISION_INDEX:
            raise ValueError("division index must lie in 1..32")
        with self._lock:
            f = self._f(n)
        if n % 2 == 0:
            tors = f * self.two_torsion_poly()
        else:
            tors = f
        return DivisionData(self, n, f, tors)

    def torsion_poly(self, n: int) -> RatPoly:
        return self.division_polynomial(n).torsion_poly

    def primitive_torsion_poly(self, n: int) -> RatPoly:
        """Polynomial whose roots are x-coordinates of points of exact order n (n a prime power)."""
        q = _prime_of_power(n)
        if q is None:
            raise ValueError("n must be a prime power")
        t = self.torsion_poly(n)
        if n == q:
            return t
        return t.exact_div(self.torsion_poly(n // q))

    # models and reduction

    def integral_model(self):
        """(u, ainvs) with u minimal such that u^i a_i are integers."""
        if self._integral is None:
            dens = [a.denominator for a in self.ainvs]
            u = mpz(1)
            for p in _prime_factors(_lcm_all(dens)):
                need = 0
                for i, a in zip((1, 2, 3, 4, 6), self.ainvs):
                    v = _val(a.denominator, p)
                    need = max(need, -(-v // i))
                u *= p ** need
            ints = tuple(mpz(a * u ** i) for i, a in zip((1, 2, 3, 4, 6), self.ainvs))
            self._integral = (u, ints)
        return self._integral

    def integral_disc(self) -> mpz:
        u, _ = self.integral_model()
        return mpz(self.disc * u ** 12)

    def has_good_reduction(self, p: int) -> bool:
        return p > 2 and self.integral_disc() % p != 0

    def ap(self, p: int) -> int:
        """p + 1 - #E(F_p) for an odd prime of good reduction."""
        return p + 1 - reduce_and_count(self, p, 1)

    def count_points(self, p: int, f: int = 1) -> int:
        """#E(F_{p^f}) from a_p via the Frobenius recurrence."""
        a = self.ap(p)
        s_prev, s = 2, a
        for _ in range(f - 1):
            s_prev, s = s, a * s - p * s_prev
        return p ** f + 1 - s


@dataclass(frozen=True)
class DivisionData:
    curve: CurveQ
    n: int
    psi_n: RatPoly
    torsion_poly: RatPoly


class PointK:
    """A point on a rational curve with coordinates in a number field (x is None at infinity)."""

    __slots__ = ("curve", "field", "x", "y")

    def __init__(self, curve: CurveQ, field: NumberField, x, y):
        self.curve = curve
        self.field = field
        self.x = x
        self.y = y
        if x is not None and not curve.is_on_curve(x, y):
            raise ValueError("point is not on the curve")

    @classmethod
    def _unchecked(cls, curve, field, x, y):
        p = object.__new__(cls)
        p.curve, p.field, p.x, p.y = curve, field, x, y
        return p

    def is_zero(self) -> bool:
        return self.x is None

    def __neg__(self):
        if self.x is None:
            return self
        E = self.curve
        return PointK._unchecked(E, self.field, self.x, -self.y - E.a1 * self.x - E.a3)

    def __add__(self, other):
        return point_add(self, other)

    def __sub__(self, other):
        return point_add(self, -other)

    def __rmul__(self, m: int):
        return point_mul(m, self)

    def __eq__(self, other):
        if not isinstance(other, PointK):
            return NotImplemented
        if self.x is None or other.x is None:
            return self.x is None and other.x is None
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        if self.x is None:
            return "O"
        return f"({self.x}, {self.y})"


def point_add(P: PointK, R: PointK) -> PointK:
    if P.curve is not R.curve and P.curve != R.curve:
        raise FieldMismatch("points lie on different curves")
    if P.field != R.field:
        raise FieldMismatch("points are defined over different fields")
    if P.x is None:
        return R
    if R.x is None:
        return P
    E = P.curve
    a1, a2, a3, a4, a6 = E.ainvs
    x1, y1, x2, y2 = P.x, P.y, R.x, R.y
    if x1 == x2:
        if y1 + y2 + a1 * x2 + a3 == 0:
            return PointK._unchecked(E, P.field, None, None)
        den = 2 * y1 + a1 * x1 + a3
        inv = 1 / den
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) * inv
        nu = (-x1 * x1 * x1 + a4 * x1 + 2 * a6 - a3 * y1) * inv
    else:
        inv = 1 / (x2 - x1)
        lam = (y2 - y1) * inv
        nu = (y1 * x2 - y2 * x1) * inv
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return PointK._unchecked(E, P.field, x3, y3)


def point_mul(m: int, P: PointK) -> PointK:
    if m < 0:
        return point_mul(-m, -P)
    result = PointK._unchecked(P.curve, P.field, None, None)
    base = P
    while m:
        if m & 1:
            result = point_add(result, base)
        m >>= 1
        if m:
            base = point_add(base, base)
    return result


def curve_create(a1=0, a2=0, a3=0, a4=0, a6=0, label=None) -> CurveQ:
    return CurveQ(a1, a2, a3, a4, a6, label=label)


def division_polynomial(E: CurveQ, n: int) -> DivisionData:
    return E.division_polynomial(n)


# reduction

def reduce_and_count(E: CurveQ, p: int, f: int = 1) -> int:
    """#E(F_{p^f}) by enumerating x and counting y through the quadratic character."""
    if p == 2 or not is_prime(p):
        raise BadReduction("p must be an odd prime")
    if p ** f > COUNT_CAP:
        raise TooLarge("field size exceeds the enumeration cap")
    if E.integral_disc() % p == 0:
        raise BadReduction(f"bad reduction at {p}")
    _u, (a1, a2, a3, a4, a6) = E.integral_model()
    b2 = int(a1 * a1 + 4 * a2) % p
    b4 = int(2 * a4 + a1 * a3) % p
    b6 = int(a3 * a3 + 4 * a6) % p
    if f == 1:
        squares = [0] * p
        for y in range(1, p):
            squares[y * y % p] = 1
        total = 1
        for x in range(p):
            d = (((4 * x + b2) * x + 2 * b4) * x + b6) % p
            total += 1 if d == 0 else (2 if squares[d] else 0)
        return total
    F = modp.GF(p, f)
    total = 1
    four, cb2, cb4, cb6 = [4], modp.norm([b2], p), modp.norm([2 * b4], p), modp.norm([b6], p)
    for x in F.elements():
        d = F.add(F.mul(F.add(F.mul(F.add(F.mul(four, x), cb2), x), cb4), x), cb6)
        if not d:
            total += 1
        elif F.is_square(d):
            total += 2
    return total


# twists and families

def quadratic_twist(E: CurveQ, d: int) -> CurveQ:
    """The twist by Q(sqrt d), in short Weierstrass form."""
    d = int(d)
    if d == 0:
        raise ValueError("twist parameter must be nonzero")
    if d != 1 and _has_square_factor(abs(d)):
        raise ValueError("twist parameter must be squarefree")
    return CurveQ(0, 0, 0, -27 * E.c4 * d * d, -54 * E.c6 * d ** 3)


def kubert_tate_curve(G, t) -> CurveQ:
    """Tate normal form y^2 + (1-c)xy - by = x^3 - bx^2 for G = (9) or (12)."""
    G = TorsionStructure.parse(G)
    t = Q(t)
    if G == TorsionStructure(1, 9):
        if t in (0, 1):
            raise ExcludedParameter("t must avoid 0 and 1")
        c = t * t * (t - 1)
        b = c * (t * t - t + 1)
    elif G == TorsionStructure(1, 12):
        if t in (0, 1, mpq(1, 2)):
            raise ExcludedParameter("t must avoid 0, 1 and 1/2")
        c = (3 * t * t - 3 * t + 1) * (t - 2 * t * t) / (t - 1) ** 3
        b = c * (2 * t - 2 * t * t - 1) / (t - 1)
    else:
        raise ValueError("only (9) and (12) are supported")
    return CurveQ(1 - c, -b, -b, 0, 0)


def family_A_curve(t) -> CurveQ:
    """y^2 = x^3 - 3(a-1)^3(a-9)x - 2(a-1)^4(a^2+18a-27) with a = (t^3-1)^2."""
    t = Q(t)
    if t in (0, 1):
        raise ExcludedParameter("t must avoid 0 and 1")
    a = (t ** 3 - 1) ** 2
    return CurveQ(0, 0, 0, -3 * (a - 1) ** 3 * (a - 9), -2 * (a - 1) ** 4 * (a * a + 18 * a - 27))


# small integer helpers

def _lcm_all(vals):
    from gmpy2 import lcm
    out = mpz(1)
    for v in vals:
        out = lcm(out, v)
    return out


def _prime_factors(n):
    n = int(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _val(n, p):
    n = int(n)
    v = 0
    while n and n % p == 0:
        n //= p
        v += 1
    return v


def _has_square_factor(n):
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return True
        p += 1
    return False


def _prime_of_power(n):
    if n < 2:
        return None
    ps = _prime_factors(n)
    return ps[0] if len(ps) == 1 else None
