"""Torsion of CM elliptic curves over number fields of degree dividing 6."""

from __future__ import annotations

from ..errors import UnsupportedDegree
from ..structure import S


def _set(*items):
    return frozenset(S(t) for t in items)


CM_1 = _set(1, 2, 3, 4, 6, "2,2")
CM_2 = CM_1 | _set(7, 10, "2,4", "2,6", "3,3")
CM_3 = CM_1 | _set(9, 14)
CM_6 = CM_2 | CM_3 | _set(18, 19, 26, "2,14", "3,6", "3,9", "6,6")

CM_PHI = {1: CM_1, 2: CM_2, 3: CM_3, 6: CM_6}


def cm_phi(d: int) -> frozenset:
    if d not in CM_PHI:
        raise UnsupportedDegree(f"degree {d} does not divide 6")
    return CM_PHI[d]


def _check():
    assert CM_1 <= CM_2 and CM_1 <= CM_3 and CM_2 | CM_3 <= CM_6
    assert len(CM_1) == 6


_check()
