"""Mod-p Galois images of non-CM rational elliptic curves for p <= 13.

Each row is (Sutherland label, Zywina label, d0, dv, d), where d0 is the minimal
degree of a field over which E has a p-isogeny, dv the set of degrees of fields
generated by a single point of order p, and d the order of the image.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import UnsupportedPrime


@dataclass(frozen=True)
class ImageRow:
    label: str
    zywina: str
    d0: int
    dv: frozenset
    d: int


def _rows(*data):
    return tuple(ImageRow(lab, zy, d0, frozenset(dv), d) for lab, zy, d0, dv, d in data)


GL2 = "GL2"

TABLE5 = {
    2: _rows(
        ("2Cs", "G1", 1, (1,), 1),
        ("2B", "G2", 1, (1, 2), 2),
        ("2Cn", "G3", 3, (3,), 3),
        (GL2, "", 3, (3,), 6),
    ),
    3: _rows(
        ("3Cs.1.1", "H1,1", 1, (1, 2), 2),
        ("3Cs", "G1", 1, (2, 4), 4),
        ("3B.1.1", "H3,1", 1, (1, 6), 6),
        ("3B.1.2", "H3,2", 1, (2, 3), 6),
        ("3Ns", "G2", 2, (4,), 8),
        ("3B", "G3", 1, (2, 6), 12),
        ("3Nn", "G4", 4, (8,), 16),
        (GL2, "", 4, (8,), 48),
    ),
    5: _rows(
        ("5Cs.1.1", "H1,1", 1, (1, 4), 4),
        ("5Cs.1.3", "H1,2", 1, (2, 4), 4),
        ("5Cs.4.1", "G1", 1, (2, 4, 8), 8),
        ("5Ns.2.1", "G3", 2, (8, 16), 16),
        ("5Cs", "G2", 1, (4,), 16),
        ("5B.1.1", "H6,1", 1, (1, 20), 20),
        ("5B.1.2", "H5,1", 1, (4, 5), 20),
        ("5B.1.4", "H6,2", 1, (2, 20), 20),
        ("5B.1.3", "H5,2", 1, (4, 10), 20),
        ("5Ns", "G4", 2, (8, 16), 32),
        ("5B.4.1", "G6", 1, (2, 20), 40),
        ("5B.4.2", "G5", 1, (4, 10), 40),
        ("5Nn", "G7", 6, (24,), 48),
        ("5B", "G8", 1, (4, 20), 80),
        ("5S4", "G9", 6, (24,), 96),
        (GL2, "", 6, (24,), 480),
    ),
    7: _rows(
        ("7Ns.2.1", "H1,1", 2, (6, 9, 18), 18),
        ("7Ns.3.1", "G1", 2, (12, 18), 36),
        ("7B.1.1", "H3,1", 1, (1, 42), 42),
        ("7B.1.3", "H4,1", 1, (6, 7), 42),
        ("7B.1.2", "H5,2", 1, (3, 42), 42),
        ("7B.1.5", "H5,1", 1, (6, 21), 42),
        ("7B.1.6", "H3,2", 1, (2, 21), 42),
        ("7B.1.4", "H4,2", 1, (3, 14), 42),
        ("7Ns", "G2", 2, (12, 36), 72),
        ("7B.6.1", "G3", 1, (2, 42), 84),
        ("7B.6.3", "G4", 1, (6, 14), 84),
        ("7B.6.2", "G5", 1, (6, 42), 84),
        ("7Nn", "G6", 8, (48,), 96),
        ("7B.2.1", "H7,2", 1, (3, 42), 126),
        ("7B.2.3", "H7,1", 1, (6, 21), 126),
        ("7B", "G7", 1, (6, 42), 252),
        (GL2, "", 8, (48,), 2016),
    ),
    13: _rows(
        ("13S4", "G7", 6, (72, 96), 288),
        ("13B.3.1", "H5,1", 1, (3, 156), 468),
        ("13B.3.2", "H4,1", 1, (12, 39), 468),
        ("13B.3.4", "H5,2", 1, (6, 156), 468),
        ("13B.3.7", "H4,2", 1, (12, 78), 468),
        ("13B.5.1", "G2", 1, (4, 156), 624),
        ("13B.5.2", "G1", 1, (12, 52), 624),
        ("13B.5.4", "G3", 1, (12, 156), 624),
        ("13B.4.1", "G5", 1, (6, 156), 936),
        ("13B.4.2", "G4", 1, (12, 78), 936),
        ("13B", "G6", 1, (12, 156), 1872),
        (GL2, "", 14, (168,), 26208),
    ),
}


def table5_rows(p: int) -> tuple:
    if p not in TABLE5:
        raise UnsupportedPrime(f"no image table for p = {p}")
    return TABLE5[p]


def row(p: int, label: str) -> ImageRow:
    for r in table5_rows(p):
        if r.label == label:
            return r
    raise KeyError(label)


def _check():
    for p, rows in TABLE5.items():
        assert rows[-1].label == GL2
        for r in rows:
            assert r.d % r.d0 == 0, r
            assert all(r.d % v == 0 for v in r.dv), r
    assert len(TABLE5[2]) == 4


_check()
