"""Possible growth of the 2-primary part of torsion over sextic fields, non-CM curves.

Each allowed cell lists the modular curves (Rouse / Zureick-Brown names) that
parameterize the growth; a missing cell means the growth cannot happen.
"""

from __future__ import annotations

from ..errors import OutOfTable
from ..structure import S

ROWS = tuple(S(t) for t in (1, 2, 4, 8, "2,2", "2,4", "2,8"))
COLUMNS = tuple(S(t) for t in (1, 2, 4, 8, 16, "2,2", "2,4", "2,8", "4,4"))

_DASH = None

# one line per G2 row, cells in COLUMNS order
_GRID = {
    S(1): ("X1", "X1", "X20", _DASH, _DASH, "X1", _DASH, _DASH, "X20b"),
    S(2): (_DASH, "X6", "X13", "X102,X36a", "X235m", "X6", _DASH, _DASH, _DASH),
    S(4): (_DASH, _DASH, "X13h", "X36n", _DASH, _DASH, "X13h", "X102k", "X60d"),
    S(8): (_DASH, _DASH, _DASH, "X102p", "X235l", _DASH, _DASH, "X102p", _DASH),
    S("2,2"): (_DASH, _DASH, _DASH, _DASH, _DASH, "X8", "X25,X8d", "X193,X96q,X98o", _DASH),
    S("2,4"): (_DASH, _DASH, _DASH, _DASH, _DASH, _DASH, "X25n", "X96t,X98e", "X58i"),
    S("2,8"): (_DASH, _DASH, _DASH, _DASH, _DASH, _DASH, _DASH, "X193n", _DASH),
}

TABLE = {}
for _g, _cells in _GRID.items():
    for _h, _cell in zip(COLUMNS, _cells):
        TABLE[(_g, _h)] = None if _cell is None else frozenset(_cell.split(","))


def two_primary_allowed(G2, H2):
    """Modular-curve labels for the growth G2 -> H2, or None if it cannot happen."""
    G2, H2 = S(G2), S(H2)
    if (G2, H2) not in TABLE:
        raise OutOfTable(f"no entry for {G2} -> {H2}")
    return TABLE[(G2, H2)]


def _check():
    assert len(TABLE) == len(ROWS) * len(COLUMNS)
    for (g, h), cell in TABLE.items():
        if cell is not None:
            # growth never shrinks the 2-primary part
            assert h.contains(g), (g, h)


_check()
