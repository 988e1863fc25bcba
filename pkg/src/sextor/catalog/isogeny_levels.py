"""Degrees of rational cyclic isogenies of elliptic curves over Q."""

ISOGENY_LEVELS = frozenset(list(range(1, 20)) + [21, 25, 27, 37, 43, 67, 163])

# levels realised by infinitely many j-invariants
INFINITE_LEVELS = frozenset(list(range(1, 11)) + [12, 13, 16, 18, 25])

# levels forcing complex multiplication
CM_ONLY_LEVELS = frozenset({14, 19, 27, 43, 67, 163})

assert INFINITE_LEVELS <= ISOGENY_LEVELS and CM_ONLY_LEVELS <= ISOGENY_LEVELS
assert not INFINITE_LEVELS & CM_ONLY_LEVELS
