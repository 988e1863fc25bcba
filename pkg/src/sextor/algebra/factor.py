"""Factorization over Q: modular factoring, Hensel lifting and Zassenhaus recombination."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from gmpy2 import mpq, mpz

from ..errors import FactorizationLimit, ZeroPolynomial
from . import modp, zpoly
from .poly import RatPoly, squarefree_decomposition

SUBSET_CAP = 1 << 20
PATTERN_PRIMES = 5
_SMALL_PRIMES = [p for p in range(3, 2000) if all(p % q for q in range(2, int(p ** 0.5) + 1))]


@dataclass(frozen=True)
class FactorizationQ:
    """unit * prod(g**m for g, m in factors); every g monic and irreducible over Q."""

    unit: mpq
    factors: tuple

    def expand(self) -> RatPoly:
        out = RatPoly.const(self.unit)
        for g, m in self.factors:
            out = out * g ** m
        return out

    def degrees(self) -> list:
        return sorted(g.degree for g, m in self.factors for _ in range(m))


# arithmetic in (Z/m)[x] on integer lists

def _mod(a, m):
    return zpoly.trim([c % m for c in a])


def _mulmod(a, b, m):
    return _mod(zpoly.mul(a, b), m)


def _divmod_monic(a, b, m):
    """Quotient and remainder of a by monic b over Z/m."""
    db = len(b) - 1
    r = list(a)
    if len(r) - 1 < db:
        return [], _mod(r, m)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] % m
        if c:
            q[k] = c
            for j in range(db):
                r[k + j] -= c * b[j]
        r[k + db] = 0
    return zpoly.trim(q), _mod(r[:db], m)


def _hensel_step(f, g, h, s, t, m):
    """Quadratic lift of f = g*h, s*g + t*h = 1 from modulus m to m^2 (f, g, h monic)."""
    m2 = m * m
    e = _mod(zpoly.sub(f, zpoly.mul(g, h)), m2)
    q, r = _divmod_monic(_mulmod(s, e, m2), h, m2)
    g2 = _mod(zpoly.add(zpoly.add(g, zpoly.mul(t, e)), zpoly.mul(q, g)), m2)
    h2 = _mod(zpoly.add(h, r), m2)
    b = _mod(zpoly.sub(zpoly.add(zpoly.mul(s, g2), zpoly.mul(t, h2)), [1]), m2)
    c, d = _divmod_monic(_mulmod(s, b, m2), h2, m2)
    s2 = _mod(zpoly.sub(s, d), m2)
    t2 = _mod(zpoly.sub(zpoly.sub(t, zpoly.mul(t, b)), zpoly.mul(c, g2)), m2)
    return g2, h2, s2, t2


def _lift_pair(f, g, h, p, k):
    """Lift a coprime monic splitting f = g*h mod p to modulus p^k."""
    _, s, t = modp.xgcd(g, h, p)
    m = p
    e = 1
    while e < k:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m *= m
        e *= 2
    pk = p ** k
    return _mod(g, pk), _mod(h, pk)


def hensel_lift(f, factors, p, k):
    """Lift monic factors of monic f mod p to monic factors mod p^k (binary factor tree)."""
    pk = p ** k
    f = _mod(f, pk)
    if len(factors) == 1:
        return [f]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    g = [1]
    for u in left:
        g = modp.mul(g, u, p)
    h = [1]
    for u in right:
        h = modp.mul(h, u, p)
    # the lifted f needs its modulus raised to the working precision first
    gl, hl = _lift_pair(f, g, h, p, _pow2_at_least(k))
    return hensel_lift(_mod(gl, pk), left, p, k) + hensel_lift(_mod(hl, pk), right, p, k)


def _pow2_at_least(k):
    e = 1
    while e < k:
        e *= 2
    return e


# prime selection and degree patterns

def _good_primes(F, count):
    lc = F[-1]
    out = []
    for p in _SMALL_PRIMES:
        if lc % p == 0:
            continue
        fp = modp.norm(F, p)
        if modp.is_squarefree(fp, p):
            out.append(p)
            if len(out) == count:
                break
    return out


def _subset_sums(degs):
    bits = 1
    for d in degs:
        bits |= bits << d
    return bits


def _mignotte(F, m):
    """Coefficient bound for lc(F) * g, g any integer factor of F with deg g <= m."""
    return (mpz(1) << m) * zpoly.norm2_ceil(F) * abs(F[-1])


def _partial_ddf(f, p, maxdeg):
    """Split a monic squarefree f mod p into (irreducible factors of degree <= maxdeg, rest)."""
    f = modp.monic(modp.norm(f, p), p)
    low = []
    d = 0
    red = modp.Reducer(f, p)
    h = [0, 1]
    while d < maxdeg and len(f) - 1 >= d + 1:
        d += 1
        if len(f) - 1 < 2 * d:
            # whatever remains is irreducible
            if len(f) - 1 <= maxdeg:
                low.append((f, len(f) - 1))
                f = [1]
            break
        h = red.powmod(h, p)
        g = modp.gcd(modp.sub(h, [0, 1], p), f, p)
        if len(g) > 1:
            low.append((g, d))
            f = modp.divmod_(f, g, p)[0]
            red = modp.Reducer(f, p)
            h = modp.rem(h, f, p)
    return low, f


def _split_modp(F, p, maxdeg, seed=0):
    """Irreducible factors of degree <= maxdeg plus the leftover product (or None)."""
    rng = random.Random(seed)
    low, rest = _partial_ddf(F, p, maxdeg)
    facs = []
    for g, d in low:
        facs.extend(modp.equal_degree(g, d, p, rng))
    facs.sort(key=lambda g: (len(g), g[::-1]))
    return facs, (rest if len(rest) > 1 else None)


# recombination

def _zassenhaus(F, maxdeg=None):
    """Factors of a primitive squarefree integer polynomial F (deg >= 2, F(0) != 0).

    With maxdeg set, returns (irreducible factors of degree <= maxdeg, cofactor);
    otherwise the cofactor is 1 and the list is the complete factorization.
    """
    n = len(F) - 1
    full = maxdeg is None or maxdeg >= n
    limit = n if full else maxdeg
    primes = _good_primes(F, PATTERN_PRIMES)
    allowed = None
    best = None
    for p in primes:
        facs, rest = _split_modp(F, p, limit)
        degs = [len(g) - 1 for g in facs]
        mask = _subset_sums(degs)
        if rest is not None:
            mask |= mask << (len(rest) - 1)
        allowed = mask if allowed is None else allowed & mask
        if best is None or len(facs) < len(best[1]):
            best = (p, facs, rest)
        if (allowed & ((1 << (limit + 1)) - 2)) == 0 or (full and allowed == (1 | (1 << n))):
            break
    # nonzero degrees possible for a true factor of degree <= limit
    small_ok = allowed & ((1 << (limit + 1)) - 2)
    if full and allowed == (1 | (1 << n)):
        return [F], [1]
    if small_ok == 0:
        return [], F
    p, facs, rest = best
    if not facs:
        return [], F
    bound = _mignotte(F, limit)
    k = 1
    pk = mpz(p)
    while pk <= 2 * bound:
        k += 1
        pk *= p
    lc = F[-1]
    leaves = list(facs) + ([rest] if rest is not None else [])
    fmon = _mod([c * pow(int(lc), -1, int(pk)) for c in F], pk)
    lifted = hensel_lift(fmon, leaves, p, k)
    rest_l = lifted[-1] if rest is not None else None
    pool = lifted[:len(facs)] if rest is not None else lifted
    return _recombine(F, pool, rest_l, pk, limit, allowed, full)


def _sym(c, m):
    c %= m
    return c - m if c > m // 2 else c


def _recombine(F, pool, rest, pk, limit, allowed, full):
    found = []
    G = list(F)
    pool = list(pool)
    trials = 0
    s = 1
    while True:
        if full and 2 * s > len(pool):
            break
        if s > len(pool):
            break
        degs = [len(u) - 1 for u in pool]
        hit = False
        for idx in combinations(range(len(pool)), s):
            d = sum(degs[i] for i in idx)
            if d > limit or not (allowed >> d) & 1:
                continue
            trials += 1
            if trials > SUBSET_CAP:
                raise FactorizationLimit("recombination exceeded the subset cap")
            lc = G[-1]
            c0 = lc
            for i in idx:
                c0 = c0 * pool[i][0] % pk
            c0 = _sym(c0, pk)
            if c0 == 0 or (lc * G[0]) % c0:
                continue
            prod = [lc]
            for i in idx:
                prod = _mulmod(prod, pool[i], pk)
            cand = zpoly.primitive([_sym(c, pk) for c in prod])
            q = zpoly.divexact(G, cand)
            if q is None:
                continue
            found.append(cand)
            G = q
            pool = [u for i, u in enumerate(pool) if i not in idx]
            hit = True
            break
        if not hit:
            s += 1
    if full:
        if len(G) > 1:
            found.append(zpoly.primitive(G))
        return found, [1]
    return found, G


def _int_factor_squarefree(F, maxdeg=None):
    """Irreducible primitive factors of squarefree primitive F (positive lc), plus cofactor."""
    F = zpoly.primitive(F)
    n = len(F) - 1
    out = []
    if n <= 0:
        return out, F
    if F[0] == 0:
        out.append([0, 1])
        F = F[1:]
        n -= 1
        if n == 0:
            return out, [1]
    if n == 1:
        return out + [F], [1]
    found, rest = _zassenhaus(F, maxdeg)
    out.extend(found)
    return out, rest


def _monic_rat(g):
    return RatPoly.from_ints(g).monic()


def _sort_key(g):
    return (g.degree, [(-1 if c < 0 else 1, abs(c)) for c in reversed(g.coeffs)])


def factor_over_Q(f: RatPoly) -> FactorizationQ:
    """Complete factorization into monic irreducibles over Q."""
    if not f:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    unit = f.lc
    pieces = []
    for g, m in squarefree_decomposition(f):
        facs, _ = _int_factor_squarefree(g.primitive_int())
        pieces.extend((_monic_rat(h), m) for h in facs)
    pieces.sort(key=lambda t: (_sort_key(t[0]), t[1]))
    return FactorizationQ(unit, tuple(pieces))


def small_factors(f: RatPoly, maxdeg: int) -> list:
    """Distinct monic irreducible factors of f over Q of degree <= maxdeg, sorted."""
    if not f:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    seen = set()
    out = []
    for g, _m in squarefree_decomposition(f):
        facs, _ = _int_factor_squarefree(g.primitive_int(), maxdeg)
        for h in facs:
            r = _monic_rat(h)
            if r.degree <= maxdeg and r not in seen:
                seen.add(r)
                out.append(r)
    out.sort(key=_sort_key)
    return out


def is_irreducible(f: RatPoly) -> bool:
    if f.degree < 1:
        return False
    fac = factor_over_Q(f)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1


def rational_roots(f: RatPoly) -> list:
    """Distinct rational roots of f in increasing order."""
    return sorted(-g[0] for g in small_factors(f, 1))


def rational_roots_with_multiplicity(f: RatPoly) -> dict:
    if not f:
        raise ZeroPolynomial("zero polynomial")
    out = {}
    for g, m in squarefree_decomposition(f):
        for r in rational_roots(g):
            out[r] = m
    return out
