"""Finitely-occurring growth: j-invariant lists and the curves that realise it."""

from gmpy2 import mpq

# primes dividing the order of a torsion point of a rational curve over a sextic field
R_Q6 = frozenset({2, 3, 5, 7, 13})

# rational curves with a rational 21-isogeny; the only ones with a point of order 21 over a sextic field
J_21 = frozenset({
    mpq(3 ** 3 * 5 ** 3, 2),
    mpq(-3 ** 2 * 5 ** 3 * 101 ** 3, 2 ** 21),
    mpq(-3 ** 3 * 5 ** 3 * 382 ** 3, 2 ** 7),
    mpq(-3 ** 2 * 5 ** 6, 2 ** 3),
})

# rational curves with a rational 15-isogeny
J_15 = frozenset({
    mpq(-5 ** 2, 2),
    mpq(-5 ** 2 * 241 ** 3, 2 ** 3),
    mpq(-5 * 29 ** 3, 2 ** 5),  # j(50a3); a single factor of 5
    mpq(5 * 211 ** 3, 2 ** 15),
})

# the rational 27-isogeny class
J_27 = frozenset({mpq(-2 ** 15 * 3 * 5 ** 3)})

# curves with torsion (15) or (30) over some sextic field
LABELS_15 = ("50a3", "50a4", "50b1", "50b2", "450b4", "450b3")
LABELS_30 = ("50a3", "50b1", "50b2", "450b4")

# the sporadic (4,12): two curves, one j-invariant, field Q(alpha, i) with alpha^3 - 3 alpha - 4 = 0
LABELS_4_12 = ("162d1", "1296h1")
J_4_12 = mpq(109503, 64)
FIELD_4_12_CUBIC = (-4, -3, 0, 1)

# known members of the sextic sporadic j-set for rational curves
J_Q6_KNOWN = frozenset({J_4_12})

# curves whose mod-7 image is the normalizer of a split Cartan of index 2 (no rational 7-isogeny)
LABELS_7NS21 = ("2450ba1", "2450bd1")
