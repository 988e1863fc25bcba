"""Torsion subgroups of rational elliptic curves over Q and over number fields of degree dividing 6."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from gmpy2 import next_prime

from .algebra import modp
from .curves import CurveQ, PointK, point_add, point_mul
from .errors import NotTorsionWithinBound
from .numfield import NumberField, roots_in_extension, sqrt_in_field
from .structure import TorsionStructure

# primes that can divide the order of a torsion point over a field of degree dividing 6
RELEVANT_PRIMES = (2, 3, 5, 7, 13)
# largest prime-power orders searched for each prime
PRIME_POWER_CAP = {2: 16, 3: 9, 5: 5, 7: 7, 13: 13}
BOUND_PRIMES = 8
MAX_POINT_ORDER = 48

_Q = None


def rationals() -> NumberField:
    global _Q
    if _Q is None:
        _Q = NumberField.rationals()
    return _Q


@dataclass(frozen=True)
class TorsionGroup:
    structure: TorsionStructure
    generators: tuple
    field: NumberField

    @property
    def order(self) -> int:
        return self.structure.order


def _residue_degrees(K: NumberField, p: int):
    """Residue degrees of p in K, or None if p is not usable (ramified or non-integral model)."""
    if K.degree == 1:
        return [1]
    ints, den = K.defining_poly.int_rep()
    if den % p == 0:
        return None
    hp = modp.norm([int(c) for c in ints], p)
    if len(hp) - 1 != K.degree or not modp.is_squarefree(hp, p):
        return None
    return modp.degree_pattern(hp, p)


def _relevant_part(n: int) -> int:
    out = 1
    for q in RELEVANT_PRIMES:
        while n % q == 0:
            n //= q
            out *= q
    return out


def torsion_bound(E: CurveQ, K: NumberField = None, nprimes: int = BOUND_PRIMES) -> int:
    """A multiple of #E(K)_tors, supported on {2,3,5,7,13}.

    For each odd prime p of good reduction, unramified in K, torsion injects into
    E(F_P) for every prime P above p, so #E(K)_tors divides the gcd of #E(F_{p^f})
    over the residue degrees f. The gcd is then taken across primes.
    """
    K = K or rationals()
    B = 0
    used = 0
    p = 3
    while used < nprimes:
        if E.has_good_reduction(p):
            degs = _residue_degrees(K, p)
            if degs is not None:
                local = 0
                for f in sorted(set(degs)):
                    local = gcd(local, E.count_points(p, f))
                B = gcd(B, local)
                used += 1
        p = int(next_prime(p))
    return _relevant_part(B)


def _points_with_x(E: CurveQ, K: NumberField, x0):
    """All points of E(K) with the given x-coordinate."""
    d = E.y_discriminant(x0)
    base = -(E.a1 * x0 + E.a3)
    if not d:
        return [PointK._unchecked(E, K, x0, base / 2)]
    r = sqrt_in_field(d)
    if r is None:
        return []
    y1 = (base + r) / 2
    y2 = (base - r) / 2
    pts = [PointK._unchecked(E, K, x0, y1), PointK._unchecked(E, K, x0, y2)]
    pts.sort(key=_point_key)
    return pts


def _point_key(P: PointK):
    if P.x is None:
        return ((), ())
    return (P.x.sort_key(), P.y.sort_key())


def exact_order_points(E: CurveQ, K: NumberField, n: int) -> list:
    """All points of exact order n in E(K), for n a prime power."""
    out = []
    for x0 in roots_in_extension(E.primitive_torsion_poly(n), K):
        out.extend(_points_with_x(E, K, x0))
    out.sort(key=_point_key)
    return out


def n_torsion_count(E: CurveQ, K: NumberField, n: int) -> int:
    """#E(K)[n]."""
    K = K or rationals()
    total = 1
    for x0 in roots_in_extension(E.torsion_poly(n), K):
        d = E.y_discriminant(x0)
        if not d:
            total += 1
        elif sqrt_in_field(d) is not None:
            total += 2
    return total


def _primary(E: CurveQ, K: NumberField, q: int, qcap: int):
    """(a, b, points_by_level): the q-primary part is Z/q^a x Z/q^b (a <= b)."""
    counts = [1]
    levels = {}
    qi = q
    while qi <= qcap:
        pts = exact_order_points(E, K, qi)
        levels[qi] = pts
        counts.append(counts[-1] + len(pts))
        if not pts:
            break
        qi *= q
    a = b = 0
    for i in range(1, len(counts)):
        r = counts[i] // counts[i - 1]
        if r == q * q:
            a += 1
            b += 1
        elif r == q:
            b += 1
    return a, b, levels


def _subgroup_order_q(P: PointK, order: int, q: int) -> list:
    """The q points of the order-q subgroup of <P>."""
    base = point_mul(order // q, P)
    out = [base]
    cur = base
    for _ in range(q - 2):
        cur = point_add(cur, base)
        out.append(cur)
    return out


def torsion_over_K(E: CurveQ, K: NumberField = None) -> TorsionGroup:
    """E(K)_tors with generators (a point of maximal order, plus one of order m if noncyclic)."""
    K = K or rationals()
    B = torsion_bound(E, K)
    m = 1
    n = 1
    P = PointK._unchecked(E, K, None, None)
    R = PointK._unchecked(E, K, None, None)
    for q in RELEVANT_PRIMES:
        if B % q:
            continue
        qcap = min(PRIME_POWER_CAP[q], _qpart(B, q))
        a, b, levels = _primary(E, K, q, qcap)
        if b == 0:
            continue
        m *= q ** a
        n *= q ** b
        Pq = levels[q ** b][0]
        P = point_add(P, Pq)
        if a:
            Rq = _independent(Pq, q ** b, levels[q ** a], q)
            R = point_add(R, Rq)
    structure = TorsionStructure(m, n // m)
    gens = (P,) if m == 1 else (P, R)
    if n == 1:
        gens = ()
    return TorsionGroup(structure, gens, K)


def _independent(P, order, candidates, q):
    sub = _subgroup_order_q(P, order, q)
    for Rq in candidates:
        # Rq has order q^a; its order-q multiple must avoid <P>
        t = Rq
        # multiply down to order q
        k = 1
        while True:
            nxt = point_mul(q, t)
            if nxt.is_zero():
                break
            t = nxt
            k += 1
        if t not in sub:
            return Rq
    raise AssertionError("no independent point found despite full q-rank")


def _qpart(n: int, q: int) -> int:
    out = 1
    while n % q == 0:
        n //= q
        out *= q
    return out


def torsion_over_Q(E: CurveQ) -> TorsionGroup:
    return torsion_over_K(E, rationals())


def point_order(P: PointK, bound: int = MAX_POINT_ORDER) -> int:
    if P.is_zero():
        return 1
    cur = P
    for k in range(2, bound + 1):
        cur = point_add(cur, P)
        if cur.is_zero():
            return k
    raise NotTorsionWithinBound(f"order exceeds {bound}")


def subgroup_elements(gens, limit: int = 48) -> list:
    """Enumerate the subgroup generated by the given points (for verification)."""
    if not gens:
        return []
    E = gens[0].curve
    K = gens[0].field
    elems = [PointK._unchecked(E, K, None, None)]
    seen = {("O",)}
    frontier = list(elems)
    while frontier:
        nxt = []
        for A in frontier:
            for g in gens:
                C = point_add(A, g)
                key = ("O",) if C.is_zero() else (C.x.sort_key(), C.y.sort_key())
                if key not in seen:
                    seen.add(key)
                    elems.append(C)
                    nxt.append(C)
                    if len(elems) > limit:
                        raise NotTorsionWithinBound("subgroup larger than the limit")
        frontier = nxt
    return elems
