"""Primitive torsion growth of rational curves over fields of degree dividing 6."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra.factor import small_factors
from .algebra.poly import RatPoly
from .catalog import PHI_STAR6, PHI_STAR6_BY_G, cm_phi, sporadic, two_primary_allowed
from .curves import CurveQ, PointK
from .errors import OutOfTable, RuleViolation
from .numfield import (
    NumberField, composita, is_isomorphic, is_subfield, quadratic_extension_poly,
    roots_in_extension, sqrt_in_field, _rational_sqrt,
)
from .structure import TorsionStructure
from .torsion import torsion_over_K, rationals

SCAN_LEVELS = ((2, 4, 8, 16), (3, 9), (5,), (7,), (13,))


@dataclass(frozen=True)
class PointField:
    order: int
    field: NumberField
    point: PointK


@dataclass(frozen=True)
class GrowthEntry:
    structure: TorsionStructure
    field: NumberField
    primitive: bool = True


@dataclass
class GrowthConfiguration:
    base: TorsionStructure
    degree: int
    entries: list = dc_field(default_factory=list)

    def structures(self) -> list:
        return [e.structure for e in self.entries]

    def labels(self) -> list:
        return [str(e.structure) for e in self.entries]

    def __len__(self):
        return len(self.entries)


def _field_key(K: NumberField):
    return (K.degree, tuple(K.defining_poly.coeffs))


def _point_field(E: CurveQ, n: int, g: RatPoly, maxdeg: int):
    """Field of definition (and a witness point) of a point whose x-coordinate is a root of g."""
    e = g.degree
    if e == 1:
        x0 = -g[0] / g[1]
        D = E.y_discriminant(x0)
        if not D or _rational_sqrt(D) is not None:
            K = rationals()
        else:
            if maxdeg % 2:
                return None
            K = NumberField(RatPoly([-D, 0, 1]), check=False)
        return _witness(E, n, K, g)
    if maxdeg % e:
        return None
    L = NumberField(g.monic(), check=False)
    x0 = L.gen()
    D = E.y_discriminant(x0)
    if not D or sqrt_in_field(D) is not None:
        return _witness(E, n, L, g)
    if maxdeg % (2 * e):
        return None
    Dpoly = RatPoly([E.b6, 2 * E.b4, E.b2, 4])
    h = quadratic_extension_poly(g.monic(), Dpoly)
    return _witness(E, n, NumberField(h, check=False), g)


def _witness(E, n, K, g):
    xs = roots_in_extension(g, K)
    for x0 in xs:
        D = E.y_discriminant(x0)
        r = sqrt_in_field(D)
        if r is None:
            continue
        y = (-(E.a1 * x0 + E.a3) + r) / 2
        return PointField(n, K, PointK._unchecked(E, K, x0, y))
    raise AssertionError("point field construction lost its point")


def torsion_point_fields(E: CurveQ, d: int = 6) -> list:
    """Fields of degree dividing d generated by a single point of prime-power order."""
    out = []
    for chain in SCAN_LEVELS:
        for n in chain:
            found = False
            for g in small_factors(E.primitive_torsion_poly(n), d):
                if d % g.degree:
                    continue
                pf = _point_field(E, n, g, d)
                if pf is None:
                    continue
                found = True
                out.append(pf)
            if not found:
                # a point of order q^(i+1) of small degree forces one of order q^i
                break
    return out


def _dedupe(fields):
    out = []
    for K in sorted(fields, key=_field_key):
        if K.degree == 1:
            continue
        if any(is_isomorphic(K, F) for F in out if F.degree == K.degree):
            continue
        out.append(K)
    return out


def candidate_fields(E: CurveQ, d: int = 6) -> list:
    """Nontrivial fields of degree dividing d that may carry primitive torsion growth."""
    singles = _dedupe(pf.field for pf in torsion_point_fields(E, d))
    pool = list(singles)
    if d % 6 == 0:
        small = [K for K in singles if K.degree in (2, 3)]
        for i, A in enumerate(small):
            for B in small[i:]:
                if sorted((A.degree, B.degree)) not in ([2, 3], [3, 3]):
                    continue
                for C in composita(A, B):
                    if d % C.degree == 0 and C.degree > max(A.degree, B.degree):
                        pool.append(C)
    return _dedupe(pool)


def _sort_entry_key(e: GrowthEntry):
    return (e.structure.order, e.structure.m, e.structure.n, e.field.degree,
            tuple(e.field.defining_poly.coeffs))


def torsion_configurations(E: CurveQ, d: int = 6) -> GrowthConfiguration:
    """The primitive configuration H_Q(d, E) as a sorted multiset of (structure, field)."""
    if 6 % d:
        raise ValueError("degree must divide 6")
    G = torsion_over_K(E, rationals()).structure
    cfg = GrowthConfiguration(G, d)
    if d == 1:
        return cfg
    fields = candidate_fields(E, d)
    tors = {}
    for K in fields:
        tors[K] = torsion_over_K(E, K).structure
    entries = []
    for K in fields:
        H = tors[K]
        if not H.properly_contains(G):
            continue
        primitive = True
        for Ks in fields:
            if Ks.degree < K.degree and K.degree % Ks.degree == 0 and tors[Ks] == H:
                if is_subfield(Ks, K):
                    primitive = False
                    break
        if primitive:
            entries.append(GrowthEntry(H, K))
    entries.sort(key=_sort_entry_key)
    cfg.entries = entries
    return cfg


def h_statistic(configs) -> int:
    return max((len(c) for c in configs), default=0)


# classification checks

@dataclass(frozen=True)
class RuleResult:
    rule_id: str
    passed: object  # True, False, or None when the rule cannot be evaluated
    detail: str = ""


def _sub(H: TorsionStructure, text) -> bool:
    return H.contains(TorsionStructure.parse(text))


def _noncm_rules(G: TorsionStructure, H: TorsionStructure):
    """Rules for growth of non-CM curves over sextic fields, as (id, ok) pairs."""
    S = TorsionStructure.parse
    g = str(G)
    yield "noncm-no-11-17-19", all(H.order % q for q in (11, 17, 19))
    G2, H2 = G.primary_part(2), H.primary_part(2)
    try:
        allowed = two_primary_allowed(G2, H2)
    except OutOfTable:
        allowed = None
    yield "noncm-two-primary", allowed is not None
    yield "noncm-4-no-20", not (_sub(G, 4) and _sub(H, 20))
    yield "noncm-8-no-24", not (_sub(G, 8) and _sub(H, 24))
    yield "noncm-2x2-no-2x10", not (_sub(G, "2,2") and _sub(H, "2,10"))
    yield "noncm-2x4-no-2x12", not (_sub(G, "2,4") and _sub(H, "2,12"))
    yield "noncm-12-not-24", not (g == "12" and H == S(24))
    yield "noncm-2x2-no-2x14", not (g == "2,2" and _sub(H, "2,14"))
    yield "noncm-3x6-forces-6x6", not (g == "1" and _sub(H, "3,6")) or _sub(H, "6,6")
    yield "noncm-3-not-3x12", not (g == "3" and H == S("3,12"))
    yield "noncm-not-20", H != S(20)
    yield "noncm-3-not-18", not (g == "3" and H == S(18))
    yield "noncm-2x2-no-2x18", not (_sub(G, "2,2") and _sub(H, "2,18"))
    yield "noncm-3-not-2x18", not (g == "3" and H == S("2,18"))
    yield "noncm-7-no-21", not (g == "7" and _sub(H, 21))
    yield "noncm-2-4-6-not-24", not (g in ("2", "4", "6") and H == S(24))
    yield "noncm-no-26", not _sub(H, 26)
    yield "noncm-not-27", H != S(27)
    yield "noncm-not-28", H != S(28)
    yield "noncm-30-needs-3-or-5", g in ("3", "5") or H != S(30)


def _cm_rules(G: TorsionStructure, H: TorsionStructure):
    S = TorsionStructure.parse
    g = str(G)
    yield "cm-phi-6", H in cm_phi(6)
    yield "cm-no-11-13-17-19", all(H.order % q for q in (11, 13, 17, 19))
    yield "cm-1-2-not-2x4", not (g in ("1", "2") and H == S("2,4"))
    yield "cm-2x2-no-2x14", not (g == "2,2" and _sub(H, "2,14"))
    yield "cm-1-not-3x6", not (g == "1" and H == S("3,6"))
    yield "cm-3-not-18", not (g == "3" and H == S(18))


def validate_configuration(E: CurveQ, cfg: GrowthConfiguration, raise_on_failure: bool = True) -> list:
    """Check every entry of a degree-6 configuration against the classification.

    Returns one RuleResult per (rule, entry); raises RuleViolation if any rule fails.
    """
    from .galois import is_cm

    S = TorsionStructure.parse
    G = cfg.base
    cm = is_cm(E)
    sporadic_H = S("4,12")
    results = []

    def record(rule_id, ok, H):
        results.append(RuleResult(rule_id, ok, f"{G} -> {H}"))

    for entry in cfg.entries:
        H = entry.structure
        record("contains-base", H.properly_contains(G), H)
        record("phi-star-6", H in PHI_STAR6 or H == sporadic_H, H)
        row_ok = H in PHI_STAR6_BY_G.get(G, frozenset())
        if H == sporadic_H and str(G) in ("1", "3"):
            row_ok = True
        record("phi-star-6-by-base", row_ok, H)
        if H == S(21):
            record("j-for-21", E.j in sporadic.J_21, H)
        for target, labels, rid in ((S(15), sporadic.LABELS_15, "labels-for-15"),
                                    (S(30), sporadic.LABELS_30, "labels-for-30"),
                                    (sporadic_H, sporadic.LABELS_4_12, "labels-for-4x12")):
            if H == target:
                ok = None if E.label is None else E.label in labels
                record(rid, ok, H)
        rules = _cm_rules(G, H) if cm else _noncm_rules(G, H)
        for rid, ok in rules:
            record(rid, bool(ok), H)
    failed = sorted({r.rule_id for r in results if r.passed is False})
    if failed and raise_on_failure:
        raise RuleViolation(failed, results)
    return results
