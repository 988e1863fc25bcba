"""Sets of torsion structures over fields of degree dividing 6."""

from __future__ import annotations

from ..errors import UnknownBaseGroup
from ..structure import TorsionStructure, S


def _cyclic(ns):
    return frozenset(TorsionStructure(1, n) for n in ns)


def _split(m, ks):
    # Z/m x Z/(m*k)
    return frozenset(TorsionStructure(m, k) for k in ks)


# torsion over Q: (n), n = 1..10, 12, and (2,2m), m = 1..4
PHI1 = _cyclic(list(range(1, 11)) + [12]) | _split(2, range(1, 5))

# growth over quadratic fields
PHI_Q2 = (_cyclic(list(range(1, 11)) + [12, 15, 16]) | _split(2, range(1, 7))
          | frozenset({S("3,3"), S("3,6"), S("4,4")}))

# growth over cubic fields
PHI_Q3 = _cyclic(list(range(1, 11)) + [12, 13, 14, 18, 21]) | _split(2, [1, 2, 3, 4, 7])

# groups occurring infinitely often over sextic fields (all curves, not only base changes)
PHI_INF6 = (_cyclic(list(range(1, 23)) + [24, 26, 27, 28, 30]) | _split(2, range(1, 11))
            | _split(3, range(1, 5)) | frozenset({S("4,4"), S("4,8"), S("6,6")}))

# torsion of rational curves over sextic fields, restricted to PHI_INF6
PHI_STAR6 = (_cyclic([n for n in range(1, 22) if n not in (11, 17, 19, 20)] + [30])
             | _split(2, [1, 2, 3, 4, 5, 6, 7, 9]) | _split(3, range(1, 5))
             | frozenset({S("4,4"), S("6,6")}))

# groups realised only for finitely many j-invariants
FINITE_ONLY6 = frozenset({S(15), S(21), S(30)})
PHI_INF6_Q = PHI_STAR6 - FINITE_ONLY6

# the same set, built as a union of the quadratic and cubic sets plus five new groups
NEW_IN_DEGREE6 = frozenset({S(30), S("2,18"), S("3,9"), S("3,12"), S("6,6")})


def _row(*items):
    return frozenset(S(t) for t in items)


PHI_STAR6_BY_G = {
    S(1): _row(1, 2, 3, 4, 5, 6, 7, 9, 10, 12, 13, 14, 15, 18, 21,
               "2,2", "2,6", "2,10", "2,14", "2,18", "3,3", "3,9", "4,4", "6,6"),
    S(2): _row(2, 4, 6, 8, 10, 12, 14, 16, 18,
               "2,2", "2,6", "2,10", "2,14", "2,18", "3,6", "3,12", "6,6"),
    S(3): _row(3, 6, 9, 12, 15, 21, 30, "2,6", "3,3", "3,6", "3,9", "6,6"),
    S(4): _row(4, 8, 12, "2,4", "2,8", "2,12", "3,12", "4,4"),
    S(5): _row(5, 10, 15, 30, "2,10"),
    S(6): _row(6, 12, 18, "2,6", "2,18", "3,6", "3,12", "6,6"),
    S(7): _row(7, 14, "2,14"),
    S(8): _row(8, 16, "2,8"),
    S(9): _row(9, 18, "2,18", "3,9"),
    S(10): _row(10, "2,10"),
    S(12): _row(12, "2,12", "3,12"),
    S("2,2"): _row("2,2", "2,4", "2,6", "2,8", "2,12", "6,6"),
    S("2,4"): _row("2,4", "2,8", "4,4"),
    S("2,6"): _row("2,6", "2,12", "6,6"),
    S("2,8"): _row("2,8"),
}


def in_phi_star6(H) -> bool:
    return S(H) in PHI_STAR6


def phi_star6_by_G(G) -> frozenset:
    G = S(G)
    if G not in PHI_STAR6_BY_G:
        raise UnknownBaseGroup(f"{G} is not a torsion structure over Q")
    return PHI_STAR6_BY_G[G]


def _check():
    assert len(PHI1) == 15
    assert PHI_STAR6 == PHI_Q2 | PHI_Q3 | NEW_IN_DEGREE6
    assert PHI_STAR6 <= PHI_INF6
    assert PHI_INF6_Q == PHI_STAR6 - FINITE_ONLY6
    assert set(PHI_STAR6_BY_G) == set(PHI1)
    for G, row in PHI_STAR6_BY_G.items():
        assert all(H.contains(G) for H in row), G
        assert G in row
    union = frozenset().union(*PHI_STAR6_BY_G.values())
    assert union == PHI_STAR6


_check()
