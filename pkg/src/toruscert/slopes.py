"""Slopes on the torus: elements of Q u {1/0} as canonical coprime pairs.

A slope is the isotopy class of an essential simple closed curve on a
torus.  After fixing a homology basis, slopes are the points of the
extended rationals.  We store the canonical representative (p, q) with
gcd(|p|, |q|) = 1 and q > 0, except for infinity which is stored as
(1, 0).  All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import InvalidInputError

__all__ = ["Slope", "slope_normalize", "intersection_number", "INFINITY"]


def _as_int(x):
    if isinstance(x, bool):
        raise InvalidInputError(f"slope entries must be integers, got {x!r}")
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    if not isinstance(x, int):
        raise InvalidInputError(f"slope entries must be integers, got {x!r}")
    return x


class Slope:
    """A canonical coprime pair (p, q): the slope p/q, with 1/0 = infinity."""

    __slots__ = ("p", "q")

    def __init__(self, p, q):
        p = _as_int(p)
        q = _as_int(q)
        if p == 0 and q == 0:
            raise InvalidInputError("slope (0, 0) is not defined")
        g = math.gcd(abs(p), abs(q))
        p //= g
        q //= g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("Slope is immutable")

    @property
    def is_infinity(self):
        return self.q == 0

    def as_fraction(self):
        """The slope as an exact Fraction.  Raises for infinity."""
        if self.q == 0:
            raise InvalidInputError("infinity has no finite fraction value")
        return Fraction(self.p, self.q)

    def vector(self):
        """Canonical primitive homology vector (p, q)."""
        return (self.p, self.q)

    @classmethod
    def from_fraction(cls, f):
        return cls(f.numerator, f.denominator)

    @classmethod
    def parse(cls, text):
        """Parse "p/q" or "p"; "1/0" is infinity.  Rejects anything else."""
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                return cls(int(num), int(den))
            return cls(int(text), 1)
        except ValueError as exc:
            raise InvalidInputError(f"malformed slope {text!r}") from exc

    def __str__(self):
        return f"{self.p}/{self.q}"

    def __repr__(self):
        return f"Slope({self.p}, {self.q})"

    def __eq__(self, other):
        if not isinstance(other, Slope):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __lt__(self, other):
        """Order by rational value, with infinity greatest.

        This is the tie-breaking order used for deterministic geodesics.
        """
        if not isinstance(other, Slope):
            return NotImplemented
        if self.q == 0:
            return False
        if other.q == 0:
            return True
        return self.p * other.q < other.p * self.q

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        return not (self <= other)

    def __ge__(self, other):
        return not (self < other)


INFINITY = Slope(1, 0)


def slope_normalize(p, q):
    """Canonical coprime representative of p/q (q > 0, or (1, 0) for infinity)."""
    return Slope(p, q)


def intersection_number(s, t):
    """Minimal geometric intersection number of two slopes: |p q' - q p'|."""
    return abs(s.p * t.q - s.q * t.p)
