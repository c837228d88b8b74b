"""Characteristic-zero scalar fields.

Two realizations share one contract: exact rationals (``Fraction``, the
default) and IEEE doubles (opt-in).  Values are plain Python numbers so the
usual operators work; a :class:`Field` only knows how to parse, coerce,
format and embed integers.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, float]

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")
_DECIMAL_RE = re.compile(r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?")


class CharacteristicError(ValueError):
    """Raised when asked for a field of nonzero characteristic."""


def factorial(k: int) -> int:
    if k < 0:
        raise ValueError(f"factorial of negative integer {k}")
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def binomial(q: int, p: int) -> int:
    """C(q, p) over the integers, with C(q, p) = 0 whenever p > q or p < 0."""
    if p < 0 or q < 0 or p > q:
        return 0
    p = min(p, q - p)
    out = 1
    for i in range(1, p + 1):
        out = out * (q - p + i) // i
    return out


class Field:
    name = "abstract"
    exact = False

    def coerce(self, value) -> Scalar:
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        raise NotImplementedError

    def format(self, value: Scalar) -> str:
        raise NotImplementedError

    @property
    def zero(self) -> Scalar:
        return self.coerce(0)

    @property
    def one(self) -> Scalar:
        return self.coerce(1)

    def from_int(self, k: int) -> Scalar:
        return self.coerce(k)

    def factorial(self, k: int) -> Scalar:
        return self.coerce(factorial(k))

    def binomial(self, q: int, p: int) -> Scalar:
        return self.coerce(binomial(q, p))

    def inverse(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.one / a

    def __repr__(self):
        return f"<{self.name} field>"


class RationalField(Field):
    """Exact rationals p/q with q > 0 and gcd(|p|, q) = 1."""

    name = "exact"
    exact = True

    def coerce(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, float):
            raise TypeError(f"refusing to coerce float {value!r} into the exact field")
        raise TypeError(f"cannot coerce {type(value).__name__} to a rational")

    def parse(self, text: str) -> Fraction:
        if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
            raise ValueError(f"malformed rational {text!r}")
        num, _, den = text.partition("/")
        if den and int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den) if den else 1)

    def format(self, value: Scalar) -> str:
        # str(Fraction) is already canonical: "p" or "p/q", sign on p
        return str(self.coerce(value))


class FloatField(Field):
    """Binary64 realization; a lossy stand-in for the rationals."""

    name = "float"
    exact = False

    def coerce(self, value) -> float:
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, (int, float, Fraction)):
            return float(value)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to a float")

    def parse(self, text: str) -> float:
        if not isinstance(text, str):
            raise ValueError(f"malformed decimal {text!r}")
        if _DECIMAL_RE.fullmatch(text):
            return float(text)
        if _RATIONAL_RE.fullmatch(text):
            return float(EXACT.parse(text))
        raise ValueError(f"malformed decimal {text!r}")

    def format(self, value: Scalar) -> str:
        value = float(value)
        return repr(value + 0.0)  # folds -0.0 into 0.0


EXACT = RationalField()
FLOAT = FloatField()

_FIELDS = {"exact": EXACT, "rational": EXACT, "float": FLOAT}
_FINITE_RE = re.compile(r"(?:gf|f|z)[_(]?(\d+)\)?", re.IGNORECASE)


def get_field(name: str) -> Field:
    """Look up a realization by name.

    Finite fields are rejected outright: every identity in this package
    needs characteristic zero (factorials must be invertible).
    """
    key = name.strip().lower()
    if key in _FIELDS:
        return _FIELDS[key]
    if _FINITE_RE.fullmatch(key):
        raise CharacteristicError(f"field {name!r} has nonzero characteristic")
    raise ValueError(f"unknown field {name!r}")


def field_of(value) -> Field:
    """The realization a concrete value belongs to (ints count as exact)."""
    if isinstance(value, float):
        return FLOAT
    return EXACT


def parse_scalar(text: str, field: Field = EXACT) -> Scalar:
    return field.parse(text)


def format_scalar(value: Scalar, field: Field | None = None) -> str:
    return (field or field_of(value)).format(value)
