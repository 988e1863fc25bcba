"""Abstract finite abelian groups of rank at most two: Z/m x Z/mk."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True, order=False)
class TorsionStructure:
    """The group Z/m x Z/(m*k); printed as "n" when m == 1 and "m,n" otherwise."""

    m: int = 1
    k: int = 1

    def __post_init__(self):
        if self.m < 1 or self.k < 1:
            raise ValueError("structure parameters must be positive")

    @classmethod
    def of(cls, a: int, b: int = None) -> "TorsionStructure":
        """Normalize Z/a x Z/b (any a, b >= 1) to invariant-factor form."""
        if b is None:
            return cls(1, a)
        g = gcd(a, b)
        lcm = a * b // g
        return cls(g, lcm // g)

    @classmethod
    def parse(cls, text) -> "TorsionStructure":
        if isinstance(text, TorsionStructure):
            return text
        if isinstance(text, int):
            return cls(1, text)
        t = str(text).strip().strip("()").replace(" ", "")
        parts = [int(p) for p in t.split(",") if p]
        if len(parts) == 1:
            return cls(1, parts[0])
        if len(parts) == 2:
            m, n = parts
            if n % m:
                raise ValueError(f"invalid structure {text!r}: {m} does not divide {n}")
            return cls(m, n // m)
        raise ValueError(f"invalid structure {text!r}")

    @property
    def n(self) -> int:
        """Exponent of the group (the larger cyclic factor)."""
        return self.m * self.k

    @property
    def order(self) -> int:
        return self.m * self.n

    def invariants(self):
        return (self.m, self.n)

    def contains(self, other: "TorsionStructure") -> bool:
        """Whether other embeds as a subgroup."""
        return self.m % other.m == 0 and self.n % other.n == 0

    def properly_contains(self, other: "TorsionStructure") -> bool:
        return self.contains(other) and self != other

    def primary_part(self, q: int) -> "TorsionStructure":
        def qpart(v):
            out = 1
            while v % q == 0:
                v //= q
                out *= q
            return out
        return TorsionStructure.of(qpart(self.m), qpart(self.n)) if self.m > 1 else TorsionStructure(1, qpart(self.n))

    def sort_key(self):
        return (self.order, self.m, self.n)

    def __str__(self):
        return str(self.n) if self.m == 1 else f"{self.m},{self.n}"

    def __repr__(self):
        return f"({self})"


def S(text) -> TorsionStructure:
    """Shorthand constructor: S("2,6"), S(5)."""
    return TorsionStructure.parse(text)
