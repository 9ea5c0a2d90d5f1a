"""Exact 2x2 determinant-one matrices over Q and their action on slopes.

These matrices act on slopes as linear fractional transformations.  All
entries are exact rationals (Fraction); nothing here ever touches a float,
because the downstream criteria (square discriminants, strict trace
inequalities) are exact dichotomies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError
from .slopes import Slope

__all__ = [
    "UnimodularQ",
    "UnimodularZ",
    "PrimitiveClass",
    "Eigenslopes",
    "compose",
    "lft_apply",
    "rational_eigenslopes",
    "denominator",
]


def _frac(x):
    if isinstance(x, bool):
        raise InvalidInputError("matrix entries must be rational, got bool")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise InvalidInputError(f"matrix entries must be exact rationals, got {x!r}")


class UnimodularQ:
    """A 2x2 matrix over Q with determinant exactly 1."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        a, b, c, d = _frac(a), _frac(b), _frac(c), _frac(d)
        if a * d - b * c != 1:
            raise InvalidInputError(
                f"matrix [[{a}, {b}], [{c}, {d}]] has determinant "
                f"{a * d - b * c}, expected 1"
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("matrix values are immutable")

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def trace(self):
        return self.a + self.d

    def invert(self):
        """Exact inverse [[d, -b], [-c, a]] (determinant is 1)."""
        return type(self)(self.d, -self.b, -self.c, self.a)

    def compose(self, other):
        return compose(self, other)

    def __mul__(self, other):
        if isinstance(other, UnimodularQ):
            return compose(self, other)
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            return self.invert() ** (-n)
        result = identity() if not isinstance(self, UnimodularZ) else identity_z()
        base = self
        while n:
            if n & 1:
                result = compose(result, base)
            base = compose(base, base)
            n >>= 1
        return result

    def apply(self, s):
        return lft_apply(self, s)

    def denominator(self):
        return denominator(self)

    def is_identity(self):
        return self.a == 1 and self.d == 1 and self.b == 0 and self.c == 0

    def is_plus_minus_identity(self):
        return self.b == 0 and self.c == 0 and self.a == self.d and abs(self.a) == 1

    def __eq__(self, other):
        if not isinstance(other, UnimodularQ):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __repr__(self):
        return f"{type(self).__name__}({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


class UnimodularZ(UnimodularQ):
    """A 2x2 integer matrix with determinant exactly 1 (a gluing map)."""

    __slots__ = ()

    def __init__(self, a, b, c, d):
        for x in (a, b, c, d):
            if isinstance(x, bool) or not (
                isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)
            ):
                raise InvalidInputError(f"integer matrix entry expected, got {x!r}")
        super().__init__(a, b, c, d)

    def entries_int(self):
        return tuple(int(x) for x in self.entries())


def identity():
    return UnimodularQ(1, 0, 0, 1)


def identity_z():
    return UnimodularZ(1, 0, 0, 1)


def compose(first, second):
    """Matrix product first * second; integral whenever both factors are."""
    a = first.a * second.a + first.b * second.c
    b = first.a * second.b + first.b * second.d
    c = first.c * second.a + first.d * second.c
    d = first.c * second.b + first.d * second.d
    if isinstance(first, UnimodularZ) and isinstance(second, UnimodularZ):
        return UnimodularZ(a, b, c, d)
    return UnimodularQ(a, b, c, d)


def lft_apply(m, s):
    """Image of a slope under the linear fractional action.

    Works through the column-vector form, so infinity needs no special
    case: (p, q) maps to (a p + b q, c p + d q), then renormalizes.
    """
    x = m.a * s.p + m.b * s.q
    y = m.c * s.p + m.d * s.q
    k = x.denominator * y.denominator // math.gcd(x.denominator, y.denominator)
    return Slope(int(x * k), int(y * k))


def denominator(m):
    """Least integer d >= 1 such that d*m has integer entries."""
    result = 1
    for x in m.entries():
        result = result * x.denominator // math.gcd(result, x.denominator)
    return result


@dataclass(frozen=True)
class Eigenslopes:
    """Result of the rational eigenslope computation.

    fixes_all is True exactly for plus or minus the identity, whose action
    fixes every slope; then slopes is empty.  Otherwise slopes holds the 0,
    1 or 2 rational eigenslopes in increasing slope order.
    """

    fixes_all: bool
    slopes: tuple

    def is_empty(self):
        return not self.fixes_all and not self.slopes

    def witness(self):
        """Some fixed slope, or None when there is none."""
        if self.fixes_all:
            return Slope(0, 1)
        return self.slopes[0] if self.slopes else None


def _rational_sqrt(f):
    """Exact square root of a nonnegative Fraction, or None if irrational."""
    if f < 0:
        return None
    n, d = f.numerator, f.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def rational_eigenslopes(m):
    """The exact set of slopes fixed by the linear fractional action of m.

    A finite slope r is fixed iff c r^2 + (d - a) r - b = 0; infinity is
    fixed iff c = 0.  Rationality of the quadratic roots is decided by
    testing whether the discriminant (d - a)^2 + 4 b c is the square of a
    rational, numerator and denominator separately via integer square
    roots.  For plus or minus the identity every slope is fixed and the
    distinguished fixes_all value is returned.
    """
    if m.is_plus_minus_identity():
        return Eigenslopes(fixes_all=True, slopes=())
    a, b, c, d = m.entries()
    found = []
    if c == 0:
        found.append(Slope(1, 0))
        if d != a:
            found.append(Slope.from_fraction(b / (d - a)))
        # d == a with b != 0 is a nontrivial parabolic: infinity only.
    else:
        disc = (d - a) ** 2 + 4 * b * c
        root = _rational_sqrt(disc)
        if root is not None:
            found.append(Slope.from_fraction((a - d + root) / (2 * c)))
            if root != 0:
                found.append(Slope.from_fraction((a - d - root) / (2 * c)))
    return Eigenslopes(fixes_all=False, slopes=tuple(sorted(found)))


class PrimitiveClass:
    """A primitive integer vector with a positive multiplicity.

    Models the homology class of a disjoint union of m parallel copies of
    the (p, q) curve: the actual class is m * (p, q).
    """

    __slots__ = ("p", "q", "multiplicity")

    def __init__(self, p, q, multiplicity=1):
        if isinstance(p, bool) or isinstance(q, bool):
            raise InvalidInputError("primitive class entries must be integers")
        if not (isinstance(p, int) and isinstance(q, int)):
            raise InvalidInputError("primitive class entries must be integers")
        if p == 0 and q == 0:
            raise InvalidInputError("primitive class cannot be the zero vector")
        if math.gcd(abs(p), abs(q)) != 1:
            raise InvalidInputError(f"({p}, {q}) is not primitive")
        if not isinstance(multiplicity, int) or multiplicity < 1:
            raise InvalidInputError("multiplicity must be a positive integer")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "multiplicity", multiplicity)

    def __setattr__(self, name, value):
        raise AttributeError("PrimitiveClass is immutable")

    @classmethod
    def from_vector(cls, x, y):
        """Split an integer vector into multiplicity * primitive part."""
        if x == 0 and y == 0:
            raise InvalidInputError("zero vector has no primitive part")
        g = math.gcd(abs(x), abs(y))
        return cls(x // g, y // g, g)

    def vector(self):
        return (self.p * self.multiplicity, self.q * self.multiplicity)

    def slope(self):
        return Slope(self.p, self.q)

    def __eq__(self, other):
        if not isinstance(other, PrimitiveClass):
            return NotImplemented
        return (self.p, self.q, self.multiplicity) == (
            other.p,
            other.q,
            other.multiplicity,
        )

    def __hash__(self):
        return hash((self.p, self.q, self.multiplicity))

    def __repr__(self):
        return f"PrimitiveClass({self.p}, {self.q}, multiplicity={self.multiplicity})"
