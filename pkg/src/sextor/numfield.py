"""Number fields Q[x]/(h), element arithmetic, root finding and field comparisons."""

from __future__ import annotations

from gmpy2 import mpq, mpz, is_square, next_prime

from .algebra import modp
from .algebra.factor import factor_over_Q, small_factors, is_irreducible
from .algebra.poly import (
    RatPoly, Q, _is_scalar, interpolate, parse_poly, poly_gcd, poly_xgcd, resultant,
    format_poly,
)
from .errors import DegenerateShift, DivisionByZero, FieldMismatch, NonMonic, ReduciblePolynomial

MAX_SHIFT = 20


class NumberField:
    """The field Q(alpha) with alpha a root of the monic irreducible defining polynomial."""

    __slots__ = ("defining_poly", "degree", "_primes", "_disc")

    def __init__(self, h: RatPoly, check: bool = True):
        if not isinstance(h, RatPoly):
            h = RatPoly(h)
        if h.degree < 1:
            raise ReduciblePolynomial("defining polynomial must have positive degree")
        if not h.is_monic():
            raise NonMonic("defining polynomial must be monic")
        if check and h.degree > 1 and not is_irreducible(h):
            raise ReduciblePolynomial(f"{format_poly(h)} is reducible over Q")
        self.defining_poly = h
        self.degree = h.degree
        self._primes = None
        self._disc = None

    @classmethod
    def rationals(cls) -> "NumberField":
        return cls(RatPoly.x(), check=False)

    def gen(self) -> "NFElem":
        if self.degree == 1:
            return NFElem(self, RatPoly.const(-self.defining_poly[0]))
        return NFElem(self, RatPoly.x())

    def __call__(self, v) -> "NFElem":
        if isinstance(v, NFElem):
            if v.parent is not self and v.parent != self:
                raise FieldMismatch("element belongs to another field")
            return v
        if isinstance(v, RatPoly):
            return NFElem(self, v % self.defining_poly if v.degree >= self.degree else v)
        if _is_scalar(v) or isinstance(v, str):
            return NFElem(self, RatPoly.const(Q(v)))
        return NFElem(self, RatPoly(v) % self.defining_poly)

    def zero(self) -> "NFElem":
        return NFElem(self, RatPoly())

    def one(self) -> "NFElem":
        return NFElem(self, RatPoly.const(1))

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.defining_poly == other.defining_poly

    def __hash__(self):
        return hash(("NF", self.defining_poly))

    def __repr__(self):
        return f"NumberField({format_poly(self.defining_poly)})"

    def coeff_key(self):
        return (self.degree, tuple(self.defining_poly.coeffs))

    def discriminant(self) -> mpq:
        if self._disc is None:
            from .algebra.poly import discriminant
            self._disc = discriminant(self.defining_poly) if self.degree > 1 else mpq(1)
        return self._disc

    def good_primes(self, count: int = 6):
        """Odd primes p with h integral at p and squarefree mod p, with residue degree lists."""
        if self._primes is None or len(self._primes) < count:
            ints, den = self.defining_poly.int_rep()
            out = []
            p = 3
            while len(out) < count:
                if den % p and ints[-1] % p:
                    hp = modp.norm([int(c) for c in ints], p)
                    if modp.is_squarefree(hp, p):
                        out.append((p, modp.degree_pattern(hp, p)))
                p = int(next_prime(p))
            self._primes = out
        return self._primes[:count]


class NFElem:
    """Element of a number field, stored as a reduced polynomial in the generator."""

    __slots__ = ("parent", "r")

    def __init__(self, parent: NumberField, r: RatPoly):
        self.parent = parent
        self.r = r

    @property
    def coeffs(self) -> tuple:
        c = list(self.r.coeffs)
        return tuple(c + [mpq(0)] * (self.parent.degree - len(c)))

    def _other(self, o):
        if isinstance(o, NFElem):
            if o.parent is not self.parent and o.parent != self.parent:
                raise FieldMismatch("elements of different fields")
            return o.r
        if _is_scalar(o):
            return RatPoly.const(Q(o))
        return None

    def __add__(self, o):
        r = self._other(o)
        if r is None:
            return NotImplemented
        return NFElem(self.parent, self.r + r)

    __radd__ = __add__

    def __sub__(self, o):
        r = self._other(o)
        if r is None:
            return NotImplemented
        return NFElem(self.parent, self.r - r)

    def __rsub__(self, o):
        r = self._other(o)
        if r is None:
            return NotImplemented
        return NFElem(self.parent, r - self.r)

    def __neg__(self):
        return NFElem(self.parent, -self.r)

    def __mul__(self, o):
        if _is_scalar(o):
            return NFElem(self.parent, self.r * Q(o))
        r = self._other(o)
        if r is None:
            return NotImplemented
        prod = self.r * r
        if prod.degree >= self.parent.degree:
            prod = prod % self.parent.defining_poly
        return NFElem(self.parent, prod)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return nf_invert(self) ** (-n)
        result = self.parent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, o):
        if _is_scalar(o):
            if not o:
                raise DivisionByZero("division by zero")
            return NFElem(self.parent, self.r / Q(o))
        return self * nf_invert(self.parent(o))

    def __rtruediv__(self, o):
        return nf_invert(self) * o

    def __eq__(self, o):
        if isinstance(o, NFElem):
            return self.parent == o.parent and self.r == o.r
        if _is_scalar(o):
            return self.r == Q(o)
        return NotImplemented

    def __hash__(self):
        if self.r.degree <= 0:
            return hash(self.r[0])
        return hash((self.parent.defining_poly, self.r))

    def __bool__(self):
        return not self.r.is_zero()

    def is_zero(self) -> bool:
        return self.r.is_zero()

    def is_rational(self) -> bool:
        return self.r.degree <= 0

    def to_rational(self) -> mpq:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.r[0]

    def norm(self) -> mpq:
        if self.parent.degree == 1:
            return self.r[0]
        if not self.r:
            return mpq(0)
        return resultant(self.parent.defining_poly, self.r)

    def charpoly(self) -> RatPoly:
        """Characteristic polynomial of multiplication by this element."""
        n = self.parent.degree
        if self.r.degree <= 0:
            return RatPoly([-self.r[0], 1]) ** n
        h = self.parent.defining_poly
        xs = list(range(n + 1))
        ys = [resultant(h, RatPoly.const(t) - self.r) for t in xs]
        return interpolate(xs, ys)

    def minpoly(self) -> RatPoly:
        if self.r.degree <= 0:
            return RatPoly([-self.r[0], 1])
        c = self.charpoly()
        return (c.exact_div(poly_gcd(c, c.derivative()))).monic()

    def sort_key(self):
        return tuple(self.coeffs)

    def __repr__(self):
        return f"NFElem({format_poly(self.r, 'a')})"

    def __str__(self):
        return format_poly(self.r, "a")


def nf_create(h) -> NumberField:
    if isinstance(h, str):
        h = parse_poly(h)
    return NumberField(h)


def nf_invert(a: NFElem) -> NFElem:
    if not a.r:
        raise DivisionByZero("zero has no inverse")
    if a.r.degree == 0:
        return NFElem(a.parent, RatPoly.const(1 / a.r[0]))
    g, s, _t = poly_xgcd(a.r, a.parent.defining_poly)
    if g.degree != 0:
        raise DivisionByZero("element is not invertible")
    return NFElem(a.parent, s % a.parent.defining_poly)


# polynomials with coefficients in K, as lists of NFElem (constant first)

def _ktrim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _kmonic(a):
    inv = nf_invert(a[-1])
    return [c * inv for c in a]


def _kdivmod(a, b):
    a = list(a)
    db = len(b) - 1
    inv = nf_invert(b[-1])
    q = [None] * max(len(a) - db, 0)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] * inv
        q[k] = c
        if c:
            for j in range(db + 1):
                a[k + j] = a[k + j] - c * b[j]
    return _ktrim(q), _ktrim(a[:db])


def _kgcd(a, b):
    a, b = _ktrim(list(a)), _ktrim(list(b))
    while b:
        a, b = b, _kdivmod(a, b)[1]
    return _kmonic(a) if a else a


def _kshift(q: RatPoly, K: NumberField, s) -> list:
    """Coefficients of q(x - s*alpha) in K[x]."""
    shift = K.gen() * (-s)
    acc = [K(q.lc)]
    for c in reversed(q.coeffs[:-1]):
        nxt = [K.zero()] + acc
        for i, v in enumerate(acc):
            nxt[i] = nxt[i] + v * shift
        nxt[0] = nxt[0] + c
        acc = nxt
    return acc


def kpoly_eval(coeffs, x):
    acc = x.parent.zero() if isinstance(x, NFElem) else 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def norm_poly(q: RatPoly, h: RatPoly, s) -> RatPoly:
    """Res_y(h(y), q(x - s*y)) as a polynomial in x (h monic)."""
    n = h.degree * q.degree
    s = Q(s)
    xs = list(range(n + 1))
    ys = []
    for t in xs:
        # q(t - s*y) as a polynomial in y
        qt = q.compose(RatPoly([t, -s]))
        ys.append(resultant(h, qt))
    return interpolate(xs, ys)


def _has_root_over(qi, p, f):
    """Whether the integer polynomial qi has a root in F_{p^f}."""
    qp = modp.monic(modp.norm(qi, p), p)
    if len(qp) <= 1:
        return True
    red = modp.Reducer(qp, p)
    xp = [0, 1]
    for _ in range(f):
        xp = red.powmod(xp, p)
    g = modp.gcd(modp.sub(xp, [0, 1], p), qp, p)
    return len(g) > 1


def may_have_root(q: RatPoly, K: NumberField, nprimes: int = 6) -> bool:
    """Residue-degree necessary condition for q to have a root in K."""
    qi = q.primitive_int()
    for p, degs in K.good_primes(nprimes):
        if qi[-1] % p == 0:
            continue
        for f in set(degs):
            if not _has_root_over(qi, p, f):
                return False
    return True


def _roots_irreducible(q: RatPoly, K: NumberField) -> list:
    n = K.degree
    d = q.degree
    if d == 1:
        return [K(-q[0] / q[1])]
    if n % d:
        return []
    if not may_have_root(q, K):
        return []
    h = K.defining_poly
    for s in range(1, MAX_SHIFT + 1):
        N = norm_poly(q, h, s)
        if poly_gcd(N, N.derivative()).degree == 0:
            break
    else:
        raise DegenerateShift("no squarefree norm for shifts up to 20")
    out = []
    qs = None
    for Ni in small_factors(N, n):
        if Ni.degree != n:
            continue
        if qs is None:
            qs = _kshift(q, K, s)
        g = _kgcd([K(c) for c in Ni.coeffs], qs)
        if len(g) != 2:
            continue
        gamma = -g[0]
        out.append(gamma - K.gen() * s)
    return out


def roots_in_extension(g: RatPoly, K: NumberField) -> list:
    """All distinct roots of g lying in K, sorted by coefficient vector."""
    if not g:
        raise ValueError("zero polynomial")
    out = []
    for q in small_factors(g, K.degree):
        if K.degree % q.degree == 0:
            out.extend(_roots_irreducible(q, K))
    out.sort(key=lambda e: e.sort_key())
    return out


def has_root_in(g: RatPoly, K: NumberField) -> bool:
    for q in small_factors(g, K.degree):
        if K.degree % q.degree == 0 and _roots_irreducible(q, K):
            return True
    return False


def _rational_sqrt(v: mpq):
    if v < 0:
        return None
    num, den = mpz(v.numerator), mpz(v.denominator)
    if is_square(num) and is_square(den):
        from gmpy2 import isqrt
        return mpq(isqrt(num), isqrt(den))
    return None


def is_square_in_field(a: NFElem) -> bool:
    return sqrt_in_field(a) is not None


def sqrt_in_field(a: NFElem):
    """Some b in K with b^2 = a, or None."""
    K = a.parent
    if not a.r:
        return K.zero()
    if a.is_rational():
        r = _rational_sqrt(a.r[0])
        if r is not None:
            return K(r)
    if K.degree == 1:
        return None
    if _rational_sqrt(a.norm()) is None:
        return None
    # local obstruction: a must be a square in every residue field we test
    if not _local_square_ok(a):
        return None
    m = a.minpoly()
    m2 = m.compose(RatPoly([0, 0, 1]))
    found = [b for b in roots_in_extension(m2, K) if b * b == a]
    if not found:
        return None
    # deterministic choice of sign: the root with the larger coefficient vector
    return max(found, key=lambda b: b.sort_key())


def quadratic_extension_poly(g: RatPoly, D: RatPoly) -> RatPoly:
    """Minimal polynomial of x0 + k*sqrt(D(x0)) for a root x0 of g, for the first k that works.

    The result is the resultant Res_t(g(t), (x - t)^2 - k^2 D(t)), which has degree 2 deg g.
    """
    e = g.degree
    for k in range(1, 21):
        xs = list(range(2 * e + 1))
        ys = []
        for x in xs:
            poly_t = RatPoly([x, -1]) ** 2 - D * (k * k)
            ys.append(resultant(g, poly_t))
        R = interpolate(xs, ys)
        R = R.monic()
        if poly_gcd(R, R.derivative()).degree == 0:
            fac = factor_over_Q(R)
            if len(fac.factors) == 1:
                return fac.factors[0][0]
    raise DegenerateShift("no primitive element found for the quadratic extension")


def _local_square_ok(a: NFElem, nprimes: int = 6) -> bool:
    K = a.parent
    ints, den = a.r.int_rep()
    for p, degs in K.good_primes(nprimes):
        if den % p == 0:
            continue
        hp = modp.norm([int(c) for c in K.defining_poly.int_rep()[0]], p)
        dinv = pow(int(den), -1, p)
        ap = modp.norm([int(c) * dinv for c in ints], p)
        lc, facs = modp.factor(hp, p)
        for g, _m in facs:
            r = modp.rem(ap, g, p)
            if not r:
                continue
            gf = modp.GF(p, len(g) - 1, g)
            if not gf.is_square(r):
                return False
    return True


# field comparisons

def _pattern_signature(K: NumberField, primes):
    ints, den = K.defining_poly.int_rep()
    out = []
    for p in primes:
        if den % p or ints[-1] % p == 0:
            out.append(None)
            continue
        hp = modp.norm([int(c) for c in ints], p)
        out.append(tuple(modp.degree_pattern(hp, p)) if modp.is_squarefree(hp, p) else None)
    return out


_CHECK_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def _patterns_compatible(K1: NumberField, K2: NumberField) -> bool:
    s1 = _pattern_signature(K1, _CHECK_PRIMES)
    s2 = _pattern_signature(K2, _CHECK_PRIMES)
    return all(a is None or b is None or a == b for a, b in zip(s1, s2))


def is_isomorphic(K1: NumberField, K2: NumberField) -> bool:
    if K1.degree != K2.degree:
        return False
    if K1.defining_poly == K2.defining_poly:
        return True
    if K1.degree == 1:
        return True
    d = K1.discriminant() / K2.discriminant()
    if _rational_sqrt(d) is None:
        return False
    if not _patterns_compatible(K1, K2):
        return False
    return has_root_in(K1.defining_poly, K2)


def is_subfield(Ks: NumberField, K: NumberField) -> bool:
    if K.degree % Ks.degree:
        return False
    if Ks.degree == 1:
        return True
    if Ks.degree == K.degree:
        return is_isomorphic(Ks, K)
    return has_root_in(Ks.defining_poly, K)


def embed(Ks: NumberField, K: NumberField):
    """Image of the generator of Ks inside K under some embedding, or None."""
    if Ks.degree == 1:
        return K(Ks.gen().to_rational())
    roots = roots_in_extension(Ks.defining_poly, K)
    return roots[0] if roots else None


def _squarefree_norm(h1: RatPoly, h2: RatPoly):
    for s in range(1, MAX_SHIFT + 1):
        N = norm_poly(h2, h1, s)
        if poly_gcd(N, N.derivative()).degree == 0:
            return N, s
    raise DegenerateShift("no squarefree norm for shifts up to 20")


def composita(K1: NumberField, K2: NumberField) -> list:
    """All fields generated by a copy of K1 and a copy of K2, one per tensor factor."""
    if K1.degree == 1:
        return [K2]
    if K2.degree == 1:
        return [K1]
    N, _s = _squarefree_norm(K1.defining_poly, K2.defining_poly)
    facs = [g for g, _ in factor_over_Q(N).factors]
    return [NumberField(g, check=False) for g in facs]


def compositum(K1: NumberField, K2: NumberField) -> NumberField:
    """The smallest field from composita(K1, K2)."""
    if K1.degree == 1:
        return K2
    if K2.degree == 1:
        return K1
    if K1.degree * K2.degree > 36:
        raise ValueError("compositum degree product exceeds 36")
    fields = composita(K1, K2)
    fields.sort(key=lambda F: (F.degree, [abs(c) for c in F.defining_poly.coeffs]))
    return fields[0]


def field_from_coeffs(text: str) -> NumberField:
    """Parse a comma list (constant first); a missing leading 1 is added when needed."""
    h = parse_poly(text)
    if not h.is_monic():
        n = len(text.split(","))
        h = RatPoly(list(h.coeffs) + [0] * (n - len(h.coeffs)) + [1])
    return NumberField(h)
