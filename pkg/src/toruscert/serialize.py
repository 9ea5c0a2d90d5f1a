"""Exact-rational JSON encoding shared by the library and the CLI.

Every number that can be a non-integer rational travels as a string "p" or
"p/q"; floats are rejected at parse time so no consumer ever sees an
approximation.  Slopes serialize as "p/q" with "1/0" for infinity.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidInputError
from .matrices import UnimodularQ, UnimodularZ
from .slopes import Slope

__all__ = [
    "format_fraction",
    "parse_fraction",
    "matrix_to_json",
    "matrix_from_json",
    "slope_to_json",
    "slope_from_json",
]


def format_fraction(f):
    f = Fraction(f)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_fraction(value):
    """Exact rational from an int or a "p"/"p/q" string; floats rejected."""
    if isinstance(value, bool):
        raise InvalidInputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"malformed rational {value!r}") from exc
    raise InvalidInputError(
        f"rationals must be integers or 'p/q' strings, got {value!r}"
    )


def matrix_to_json(m):
    return [
        [format_fraction(m.a), format_fraction(m.b)],
        [format_fraction(m.c), format_fraction(m.d)],
    ]


def matrix_from_json(data, integral=False):
    """2x2 matrix from [[a, b], [c, d]] with int or string-rational entries."""
    if (
        not isinstance(data, list)
        or len(data) != 2
        or any(not isinstance(row, list) or len(row) != 2 for row in data)
    ):
        raise InvalidInputError(f"matrix must be a 2x2 array, got {data!r}")
    a, b = (parse_fraction(v) for v in data[0])
    c, d = (parse_fraction(v) for v in data[1])
    if integral:
        for v in (a, b, c, d):
            if v.denominator != 1:
                raise InvalidInputError(
                    f"gluing matrices must be integral, got entry {format_fraction(v)}"
                )
        return UnimodularZ(int(a), int(b), int(c), int(d))
    return UnimodularQ(a, b, c, d)


def slope_to_json(s):
    return str(s)


def slope_from_json(value):
    if not isinstance(value, str):
        raise InvalidInputError(f"slope must be a 'p/q' string, got {value!r}")
    return Slope.parse(value)
