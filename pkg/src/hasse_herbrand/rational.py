"""Exact rational parsing and formatting.

Values travel as strings of the form ``"num/den"`` or ``"n"``.  Decimal
and float input is rejected so that nothing inexact enters the library.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class ParseError(ValueError):
    """Input could not be parsed (bad rational, bad JSON schema)."""


def parse_rational(value: RationalLike) -> Fraction:
    """Convert ``value`` to a :class:`Fraction`.

    Accepts ints, Fractions and strings ``"a/b"`` / ``"a"``.  Floats,
    bools and decimal strings raise :class:`ParseError`.

    >>> parse_rational("6/4")
    Fraction(3, 2)
    >>> parse_rational(5)
    Fraction(5, 1)
    """
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if m is None:
            raise ParseError(f"not a rational: {value!r}")
        num, den = m.group(1), m.group(2)
        if den is not None and int(den) == 0:
            raise ParseError(f"zero denominator: {value!r}")
        return Fraction(int(num), int(den) if den is not None else 1)
    raise ParseError(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    """``Fraction(7, 3) -> "7/3"``, ``Fraction(5) -> "5"``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
