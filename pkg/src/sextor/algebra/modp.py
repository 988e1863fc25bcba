"""Polynomials over prime fields and small extension fields.

Low-level routines work on lists of ints in [0, p), constant term first.
FFPoly is the public immutable wrapper; GF models F_{p^f} for point counting.
"""

from __future__ import annotations

import random

from . import zpoly


def trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def norm(a, p):
    return trim([c % p for c in a])


def add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return trim(out)


def scale(a, c, p):
    c %= p
    if not c:
        return []
    return [x * c % p for x in a]


def mul(a, b, p):
    if not a or not b:
        return []
    return trim([int(c) % p for c in zpoly.mul_nonneg(a, b, p.bit_length())])


def inv(c, p):
    return pow(c, -1, p)


def monic(a, p):
    if not a or a[-1] == 1:
        return list(a)
    i = inv(a[-1], p)
    return [c * i % p for c in a]


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    db = len(b) - 1
    r = list(a)
    if len(r) - 1 < db:
        return [], r
    ib = inv(b[-1], p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * ib % p
        if c:
            q[k] = c
            for j in range(db):
                if b[j]:
                    r[k + j] = (r[k + j] - c * b[j]) % p
        r[k + db] = 0
    return trim(q), trim(r[:db])


def rem(a, b, p):
    return divmod_(a, b, p)[1]


def gcd(a, b, p):
    a = norm(a, p)
    b = norm(b, p)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def xgcd(a, b, p):
    """(g, s, t) with s*a + t*b = g monic."""
    r0, r1 = norm(a, p), norm(b, p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return r0, s0, t0
    i = inv(r0[-1], p)
    return scale(r0, i, p), scale(s0, i, p), scale(t0, i, p)


def deriv(a, p):
    return trim([i * a[i] % p for i in range(1, len(a))])


def evaluate(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


class Reducer:
    """Fast remainder modulo a fixed monic polynomial via a precomputed reversed inverse."""

    __slots__ = ("f", "p", "n", "inv")

    def __init__(self, f, p):
        f = monic(f, p)
        self.f = f
        self.p = p
        self.n = len(f) - 1
        self.inv = _series_inverse(f[::-1], max(self.n, 1), p)

    def reduce(self, a):
        n = self.n
        if len(a) <= n:
            return a
        p = self.p
        if len(a) - n < 16 or n < 16:
            return rem(a, self.f, p)
        m = len(a) - n
        ra = a[::-1][:m]
        qrev = mul(ra, self.inv[:m], p)[:m]
        qrev += [0] * (m - len(qrev))
        q = qrev[::-1]
        qf = mul(q, self.f, p)
        out = [(a[i] - (qf[i] if i < len(qf) else 0)) % p for i in range(n)]
        return trim(out)

    def mulmod(self, a, b):
        return self.reduce(mul(a, b, self.p))

    def powmod(self, base, e):
        p = self.p
        base = self.reduce(norm(base, p))
        result = [1]
        while e:
            if e & 1:
                result = self.mulmod(result, base)
            e >>= 1
            if e:
                base = self.mulmod(base, base)
        return result


def _series_inverse(g, k, p):
    """Power series inverse of g modulo x^k (g[0] invertible)."""
    out = [inv(g[0], p)]
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        gt = g[:prec]
        e = mul(gt, out, p)[:prec]
        e = [(-c) % p for c in e]
        if e:
            e[0] = (e[0] + 2) % p
        else:
            e = [2 % p]
        out = mul(out, e, p)[:prec]
    return out + [0] * (k - len(out))


def is_squarefree(f, p):
    f = norm(f, p)
    if len(f) <= 2:
        return bool(f)
    g = gcd(f, deriv(f, p), p)
    return len(g) == 1


def distinct_degree(f, p):
    """DDF of a monic squarefree f: list of (product of degree-d irreducibles, d)."""
    f = monic(norm(f, p), p)
    out = []
    d = 0
    red = Reducer(f, p)
    h = [0, 1]
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = red.powmod(h, p)
        g = gcd(sub(h, [0, 1], p), f, p)
        if len(g) > 1:
            out.append((g, d))
            f = divmod_(f, g, p)[0]
            red = Reducer(f, p)
            h = rem(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def equal_degree(g, d, p, rng):
    """Split a product of distinct degree-d irreducibles into its factors."""
    n = len(g) - 1
    if n == d:
        return [g]
    red = Reducer(g, p)
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = trim(a)
        if len(a) < 2:
            continue
        if p == 2:
            t = a
            acc = a
            for _ in range(d - 1):
                t = red.mulmod(t, t)
                acc = add(acc, t, p)
            b = acc
        else:
            b = red.powmod(a, (p ** d - 1) // 2)
            b = sub(b, [1], p)
        h = gcd(b, g, p)
        if 1 < len(h) < len(g):
            q = divmod_(g, h, p)[0]
            return equal_degree(h, d, p, rng) + equal_degree(monic(q, p), d, p, rng)


def _squarefree_mod(f, p):
    """Squarefree factorization over F_p: list of (monic squarefree, multiplicity)."""
    out = []
    f = monic(norm(f, p), p)
    if len(f) <= 1:
        return out

    def rec(f, mult):
        i = 1
        fp = deriv(f, p)
        if not fp:
            # f is a p-th power
            root = [f[k] for k in range(0, len(f), p)]
            rec(root, mult * p)
            return
        c = gcd(f, fp, p)
        w = divmod_(f, c, p)[0]
        while len(w) > 1:
            y = gcd(w, c, p)
            z = divmod_(w, y, p)[0]
            if len(z) > 1:
                out.append((monic(z, p), i * mult))
            i += 1
            w = y
            c = divmod_(c, y, p)[0]
        if len(c) > 1:
            root = [c[k] for k in range(0, len(c), p)]
            rec(root, mult * p)

    rec(f, 1)
    return out


def factor_squarefree(f, p, seed=0):
    """Monic irreducible factors of a squarefree polynomial mod p, sorted."""
    rng = random.Random(seed)
    out = []
    for g, d in distinct_degree(f, p):
        out.extend(equal_degree(g, d, p, rng))
    out.sort(key=lambda g: (len(g), g[::-1]))
    return out


def factor(f, p, seed=0):
    """(lc, [(monic irreducible, multiplicity), ...]) for f mod p."""
    f = norm(f, p)
    if not f:
        raise ValueError("zero polynomial mod p")
    lc = f[-1]
    pieces = []
    for g, m in _squarefree_mod(f, p):
        for h in factor_squarefree(g, p, seed):
            pieces.append((h, m))
    pieces.sort(key=lambda t: (len(t[0]), t[0][::-1], t[1]))
    return lc, pieces


def degree_pattern(f, p):
    """Multiset of irreducible factor degrees of a squarefree f mod p (no splitting needed)."""
    degs = []
    for g, d in distinct_degree(f, p):
        degs.extend([d] * ((len(g) - 1) // d))
    return sorted(degs)


def roots(f, p, seed=0):
    """Distinct roots of f in F_p."""
    f = monic(norm(f, p), p)
    if len(f) <= 1:
        return []
    red = Reducer(f, p)
    xp = red.powmod([0, 1], p)
    g = gcd(sub(xp, [0, 1], p), f, p)
    if len(g) <= 1:
        return []
    facs = equal_degree(g, 1, p, random.Random(seed))
    return sorted((-h[0]) % p for h in facs)


class FFPoly:
    """Immutable polynomial over F_p (constant term first)."""

    __slots__ = ("p", "c")

    def __init__(self, coeffs, p: int):
        if p < 2:
            raise ValueError("modulus must be prime")
        self.p = p
        self.c = tuple(norm([int(x) for x in coeffs], p))

    @classmethod
    def from_ratpoly(cls, f, p: int) -> "FFPoly":
        ints, den = f.int_rep()
        if den % p == 0:
            raise ValueError("p divides a coefficient denominator")
        di = pow(int(den), -1, p)
        return cls([int(c) * di for c in ints], p)

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def __eq__(self, other):
        return isinstance(other, FFPoly) and self.p == other.p and self.c == other.c

    def __hash__(self):
        return hash((self.p, self.c))

    def __mul__(self, other: "FFPoly") -> "FFPoly":
        return FFPoly(mul(list(self.c), list(other.c), self.p), self.p)

    def __repr__(self):
        return f"FFPoly({list(self.c)}, p={self.p})"


def factor_mod_p(f: FFPoly, seed: int = 0):
    """Irreducible factorization of f over F_p as a list of (monic FFPoly, multiplicity)."""
    lc, pieces = factor(list(f.c), f.p, seed)
    return [(FFPoly(g, f.p), m) for g, m in pieces]


class GF:
    """The field F_{p^f} = F_p[t]/(m); elements are coefficient tuples of length f."""

    def __init__(self, p: int, f: int, modulus=None):
        self.p = p
        self.f = f
        if modulus is None:
            modulus = find_irreducible(p, f)
        self.m = monic(norm(list(modulus), p), p)
        if len(self.m) - 1 != f:
            raise ValueError("modulus degree mismatch")
        self.size = p ** f

    def from_int(self, k: int):
        out = []
        for _ in range(self.f):
            k, r = divmod(k, self.p)
            out.append(r)
        return trim(out)

    def add(self, a, b):
        return add(a, b, self.p)

    def mul(self, a, b):
        return rem(mul(a, b, self.p), self.m, self.p)

    def is_square(self, a) -> bool:
        if not a:
            return True
        if self.p == 2:
            return True
        red = Reducer(self.m, self.p)
        e = red.powmod(a, (self.size - 1) // 2)
        return e == [1]

    def elements(self):
        for k in range(self.size):
            yield self.from_int(k)


def find_irreducible(p: int, f: int):
    """Lexicographically first monic irreducible polynomial of degree f over F_p."""
    if f == 1:
        return [0, 1]
    k = 0
    while True:
        cand = []
        v = k
        for _ in range(f):
            v, r = divmod(v, p)
            cand.append(r)
        cand.append(1)
        k += 1
        if cand[0] == 0:
            continue
        if degree_pattern(cand, p) == [f] and is_squarefree(cand, p):
            return cand
