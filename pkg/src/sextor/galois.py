"""Rational cyclic isogenies, CM detection and mod-p Galois image signatures."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from gmpy2 import mpq, next_prime

from .algebra import modp
from .algebra.factor import factor_over_Q, rational_roots, small_factors
from .algebra.poly import RatPoly, poly_gcd
from .catalog.images import GL2, table5_rows
from .catalog.isogeny_levels import ISOGENY_LEVELS
from .catalog.sporadic import J_15, J_21, J_27
from .curves import CurveQ, _prime_of_power
from .errors import UnsupportedLevel, UnsupportedPrime
from .numfield import (
    NumberField, quadratic_extension_poly, sqrt_in_field,
    _rational_sqrt,
)

# the thirteen rational j-invariants of curves with complex multiplication
CM_J_INVARIANTS = frozenset(mpq(j) for j in (
    0, 1728, -3375, 8000, -32768, 54000, 287496, -884736, -12288000, 16581375,
    -884736000, -147197952000, -262537412640768000,
))

# large prime levels: every curve with one of these j-invariants has the isogeny
_J_LARGE_LEVELS = {
    27: J_27,
    37: frozenset({mpq(-7 * 11 ** 3), mpq(-7 * 137 ** 3 * 2083 ** 3)}),
    43: frozenset({mpq(-2 ** 18 * 3 ** 3 * 5 ** 3)}),
    67: frozenset({mpq(-2 ** 15 * 3 ** 3 * 5 ** 3 * 11 ** 3)}),
    163: frozenset({mpq(-2 ** 18 * 3 ** 3 * 5 ** 3 * 23 ** 3 * 29 ** 3)}),
}

KERNEL_LEVEL_MAX = 25
# multiplier whose image generates (Z/N)^*/{+-1}, per prime-power level
_GENERATOR = {5: 2, 7: 2, 9: 2, 11: 2, 13: 2, 17: 3, 19: 2, 25: 2, 8: 3, 16: 3}
_FROBENIUS_PRIMES = 40
_WITNESS_PRIMES = 24


def is_cm(E: CurveQ) -> bool:
    return E.j in CM_J_INVARIANTS


def j_isogeny_lookup(j) -> set:
    """Levels among 15, 21, 27 certified by the j-invariant tables (empty means unknown)."""
    j = mpq(j)
    out = set()
    for n, table in ((15, J_15), (21, J_21), (27, J_27)):
        if j in table:
            out.add(n)
    return out


# kernel polynomials

def _multiplication_x_map(E: CurveQ, m: int):
    """(A, B) with x([m]P) = A(x)/B(x)."""
    f = E._f
    F = E.two_torsion_poly()
    X = RatPoly.x()
    if m % 2:
        num = F * f(m - 1) * f(m + 1)
        den = f(m) * f(m)
    else:
        num = f(m - 1) * f(m + 1)
        den = F * f(m) * f(m)
    return X * den - num, den


def _is_stable(g: RatPoly, A: RatPoly, B: RatPoly) -> bool:
    """Whether the roots of g are permuted by x -> A(x)/B(x): g divides B^deg g * g(A/B)."""
    k = g.degree
    a = A % g
    b = B % g
    if not b:
        return False
    acc = RatPoly()
    apow = RatPoly.const(1)
    bpows = [RatPoly.const(1)]
    for _ in range(k):
        bpows.append((bpows[-1] * b) % g)
    for i in range(k + 1):
        acc = acc + apow * bpows[k - i] * g[i]
        apow = (apow * a) % g
    return not (acc % g)


def _frobenius_excludes(E: CurveQ, ell: int) -> bool:
    """True if some Frobenius polynomial is irreducible mod ell, ruling out an ell-isogeny."""
    p = 3
    used = 0
    while used < _FROBENIUS_PRIMES:
        if p != ell and E.has_good_reduction(p):
            a = E.ap(p)
            disc = (a * a - 4 * p) % ell
            if disc and pow(disc, (ell - 1) // 2, ell) == ell - 1:
                return True
            used += 1
        p = int(next_prime(p))
    return False


def _kernel_candidates(factors, k):
    """Products of distinct factors with total degree k."""
    factors = [g for g in factors if g.degree <= k]
    for r in range(1, len(factors) + 1):
        for combo in combinations(factors, r):
            if sum(g.degree for g in combo) != k:
                continue
            out = RatPoly.const(1)
            for g in combo:
                out = out * g
            yield out


def _compose_numerator(h: RatPoly, A: RatPoly, B: RatPoly) -> RatPoly:
    """B^deg h * h(A/B)."""
    k = h.degree
    out = RatPoly()
    apow = RatPoly.const(1)
    bpows = [RatPoly.const(1)]
    for _ in range(k):
        bpows.append(bpows[-1] * B)
    for i in range(k + 1):
        out = out + apow * bpows[k - i] * h[i]
        apow = apow * A
    return out


def _linear_kernels(f: RatPoly) -> list:
    return [RatPoly([-r, 1]) for r in rational_roots(f)]


def _prime_kernels(E: CurveQ, q: int) -> list:
    """Kernel polynomials of rational cyclic q-isogenies, q prime."""
    if q == 2:
        return _linear_kernels(E.two_torsion_poly())
    if _frobenius_excludes(E, q):
        return []
    if q == 3:
        return _linear_kernels(E.torsion_poly(3))
    k = (q - 1) // 2
    A, B = _multiplication_x_map(E, _GENERATOR[q])
    return [g for g in _kernel_candidates(small_factors(E.torsion_poly(q), k), k)
            if _is_stable(g, A, B)]


def _lifted_kernels(E: CurveQ, N: int, q: int, below: list) -> list:
    """Kernels of cyclic N-isogenies whose q-multiple is one of the given (N/q)-kernels.

    For a kernel h of level N/q, the roots of h(x o [q]) are the x-coordinates of
    points of order N landing in that subgroup, which splits into cyclic subgroups.
    """
    k = (N - N // q) // 2
    Aq, Bq = _multiplication_x_map(E, q)
    lower = E.torsion_poly(N // q)
    out = []
    for h in below:
        num = _compose_numerator(h, Aq, Bq)
        pieces = [g for g in small_factors(num, k) if poly_gcd(g, lower).degree == 0]
        for g in _kernel_candidates(pieces, k):
            if N in _GENERATOR:
                A, B = _multiplication_x_map(E, _GENERATOR[N])
                if not _is_stable(g, A, B):
                    continue
            out.append(g)
    return out


def _factor_prime_powers(n: int):
    out = []
    q = 2
    while n > 1:
        if n % q == 0:
            t = 1
            while n % q == 0:
                n //= q
                t *= q
            out.append(t)
        q += 1
    return out


@dataclass
class IsogenyReport:
    levels: set = dc_field(default_factory=set)
    methods: dict = dc_field(default_factory=dict)


class _IsogenyCache:
    def __init__(self, E: CurveQ):
        self.E = E
        self.kernels = {}

    def prime_power_kernels(self, N: int) -> list:
        if N not in self.kernels:
            q = _prime_of_power(N)
            if N == q:
                self.kernels[N] = _prime_kernels(self.E, q)
            else:
                below = self.prime_power_kernels(N // q)
                self.kernels[N] = _lifted_kernels(self.E, N, q, below) if below else []
        return self.kernels[N]

    def prime_power(self, N: int) -> bool:
        return bool(self.prime_power_kernels(N))

    def level(self, n: int):
        """(has isogeny, method)."""
        if n in _J_LARGE_LEVELS:
            return self.E.j in _J_LARGE_LEVELS[n], "j-lookup"
        return all(self.prime_power(t) for t in _factor_prime_powers(n)), "kernel-polynomial"


def has_rational_isogeny(E: CurveQ, n: int) -> bool:
    """Whether E has a cyclic n-isogeny defined over Q."""
    if n not in ISOGENY_LEVELS:
        raise UnsupportedLevel(f"{n} is not a possible rational isogeny degree")
    return _IsogenyCache(E).level(n)[0]


def isogeny_report(E: CurveQ) -> IsogenyReport:
    cache = _IsogenyCache(E)
    rep = IsogenyReport()
    for n in sorted(ISOGENY_LEVELS):
        ok, method = cache.level(n)
        if ok:
            rep.levels.add(n)
            rep.methods[n] = method
    return rep


# mod-p images

@dataclass(frozen=True)
class ImageSignature:
    p: int
    has_rational_isogeny: bool
    dv_set: frozenset
    full_degree: object
    candidate_labels: tuple

    @property
    def label(self):
        """The image label when the signature pins it down, else None."""
        return self.candidate_labels[0] if len(self.candidate_labels) == 1 else None


def _match(p: int, iso: bool, dv: frozenset, full=None) -> tuple:
    out = []
    for r in table5_rows(p):
        if (r.d0 == 1) != iso or r.dv != dv:
            continue
        if full is not None and r.d != full:
            continue
        out.append(r.label)
    return tuple(out)


def mod2_image(E: CurveQ) -> ImageSignature:
    roots = rational_roots(E.two_torsion_poly())
    if len(roots) == 3:
        label, full = "2Cs", 1
    elif len(roots) == 1:
        label, full = "2B", 2
    elif _rational_sqrt(E.disc) is not None:
        label, full = "2Cn", 3
    else:
        label, full = GL2, 6
    row = next(r for r in table5_rows(2) if r.label == label)
    return ImageSignature(2, row.d0 == 1, row.dv, full, (label,))


def _int_reduction(f: RatPoly, p: int):
    ints, den = f.int_rep()
    if den % p == 0:
        return None
    dinv = pow(int(den), -1, p)
    return modp.norm([int(c) * dinv for c in ints], p)


def _has_nonsquare_witness(g: RatPoly, D: RatPoly) -> bool:
    """Whether D(x0) is a non-square in some residue field of Q(x0), for g(x0) = 0."""
    e = g.degree
    p = 3
    tested = 0
    while tested < _WITNESS_PRIMES:
        gp = _int_reduction(g, p)
        dp = _int_reduction(D, p)
        if gp is not None and dp is not None and len(gp) - 1 == e and modp.is_squarefree(gp, p):
            tested += 1
            for u, _ in modp.factor(gp, p)[1]:
                r = modp.rem(dp, u, p)
                if r and not modp.GF(p, len(u) - 1, u).is_square(r):
                    return True
        p = int(next_prime(p))
    return False


def _y_in_x_field(E: CurveQ, g: RatPoly) -> bool:
    """Whether a point with x-coordinate a root of g is defined over Q(x)."""
    g = g.monic()
    if g.degree == 1:
        d = E.y_discriminant(-g[0])
        return not d or _rational_sqrt(d) is not None
    D = E.two_torsion_poly()
    if _has_nonsquare_witness(g, D):
        return False
    K = NumberField(g, check=False)
    d = E.y_discriminant(K.gen())
    c = d.charpoly()
    if _squarefree(c):
        # D(x0) generates Q(x0): it is a square there iff c(Y^2) is reducible
        c2 = c.compose(RatPoly([0, 0, 1]))
        return any(h.degree == g.degree for h in small_factors(c2, g.degree))
    return sqrt_in_field(d) is not None


def _squarefree(f: RatPoly) -> bool:
    return poly_gcd(f, f.derivative()).degree == 0


def _point_field(E: CurveQ, g: RatPoly) -> NumberField:
    """Field generated by one point whose x-coordinate is a root of g."""
    g = g.monic()
    if g.degree == 1:
        d = E.y_discriminant(-g[0])
        if not d or _rational_sqrt(d) is not None:
            return NumberField.rationals()
        return NumberField(RatPoly([-d, 0, 1]), check=False)
    if _y_in_x_field(E, g):
        return NumberField(g, check=False)
    return NumberField(quadratic_extension_poly(g, E.two_torsion_poly()), check=False)


def _three_divides_x_field(f3: RatPoly, factors) -> bool:
    """Whether 3 divides the degree of the splitting field of the 3-division polynomial."""
    degs = sorted(g.degree for g in factors)
    if 3 in degs:
        return True
    if degs != [4]:
        return False
    # an irreducible quartic has a 3-cycle in its group iff its resolvent cubic is irreducible
    _, b, c, d, e = (f3.monic()[i] for i in (4, 3, 2, 1, 0))
    resolvent = RatPoly([-(b * b * e - 4 * c * e + d * d), b * d - 4 * e, -c, 1])
    return not rational_roots(resolvent)


def _degree_three_image(E: CurveQ, factors) -> int:
    """[Q(E[3]):Q].

    For a point P of order 3 with field K1, the subgroup of the image fixing P and
    zeta_3 is unipotent, so [Q(E[3]):K1(zeta_3)] is 1 or 3. Here [K1(zeta_3):Q] is a
    power of 2, so the factor 3 appears iff 3 divides the order of the image, which
    holds iff 3 divides the degree of the field generated by the x-coordinates.
    """
    # a Sylow 3-subgroup fixes a line, so the smallest point field has 2-power degree
    g = min(factors, key=lambda h: h.degree * (1 if _y_in_x_field(E, h) else 2))
    K1 = _point_field(E, g)
    if K1.degree > 1 and sqrt_in_field(K1(-3)) is not None:
        D = K1.degree
    else:
        D = 2 * K1.degree
    assert D & (D - 1) == 0
    return 3 * D if _three_divides_x_field(E.torsion_poly(3), factors) else D


def modp_signature(E: CurveQ, p: int) -> ImageSignature:
    """Degrees of point fields of order p, isogeny flag and matching image labels."""
    if p == 2:
        return mod2_image(E)
    if p not in (3, 5, 7, 13):
        raise UnsupportedPrime(f"no image table for p = {p}")
    fac = factor_over_Q(E.torsion_poly(p))
    factors = [g for g, _ in fac.factors]
    dv = set()
    for g in factors:
        dv.add(g.degree if _y_in_x_field(E, g) else 2 * g.degree)
    dv = frozenset(dv)
    iso = has_rational_isogeny(E, p)
    full = _degree_three_image(E, factors) if p == 3 else None
    cands = _match(p, iso, dv, full)
    if not cands:
        cands = ("CM",) if is_cm(E) else ()
    return ImageSignature(p, iso, dv, full, cands)
