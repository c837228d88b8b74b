"""Dense univariate polynomials with ascending coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalar import EXACT, Scalar

NEG_INF = float("-inf")


def _coerce(c) -> Scalar:
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return EXACT.parse(c)
    return c


class Polynomial:
    """Immutable polynomial ``c[0] + c[1] x + ... + c[d] x^d``.

    Trailing zeros are stripped on construction, so the zero polynomial is
    the empty tuple and ``==`` is plain coefficient comparison.  Integer
    coefficients are promoted to ``Fraction``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Polynomial":
        zero = _coerce(c) * 0
        return cls([zero] * degree + [c])

    @classmethod
    def linear_factor(cls, alpha) -> "Polynomial":
        """x - alpha"""
        alpha = _coerce(alpha)
        return cls([-alpha, alpha * 0 + 1])

    @classmethod
    def from_shifted(cls, coeffs: Sequence, alpha) -> "Polynomial":
        """Expand ``sum_i coeffs[i] (x - alpha)^i`` into the monomial basis (Horner)."""
        out = cls()
        shift = cls.linear_factor(alpha)
        for c in reversed(coeffs):
            out = out * shift + cls.constant(c)
        return out

    @property
    def degree(self):
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Scalar:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0) if not self.coeffs else self.coeffs[0] * 0

    def padded(self, length: int) -> list:
        """Coefficient list padded with zeros (of the same realization) to ``length``."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} coefficients")
        zero = self.coeffs[0] * 0 if self.coeffs else Fraction(0)
        return list(self.coeffs) + [zero] * (length - len(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, float, Fraction)):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"({c})*x")
            else:
                terms.append(f"({c})*x^{i}")
        return " + ".join(terms)

    def __add__(self, other):
        other = _promote(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _promote(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [a[0] * 0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        out = Polynomial.constant(self.coeffs[0] * 0 + 1 if self.coeffs else 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c) -> "Polynomial":
        c = _coerce(c)
        return Polynomial([c * x for x in self.coeffs])

    def __call__(self, x):
        return evaluate(self, x)


def _promote(other):
    if isinstance(other, Polynomial):
        return other
    if isinstance(other, (int, float, Fraction)) and not isinstance(other, bool):
        return Polynomial.constant(other)
    return NotImplemented


def evaluate(p: Polynomial, x) -> Scalar:
    """Horner evaluation."""
    x = _coerce(x)
    acc = x * 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def derivative(p: Polynomial, order: int = 1) -> Polynomial:
    if order < 0:
        raise ValueError("derivative order must be nonnegative")
    cs = list(p.coeffs)
    for _ in range(order):
        cs = [i * c for i, c in enumerate(cs)][1:]
    return Polynomial(cs)


def taylor_coefficients_at(p: Polynomial, alpha, order: int) -> list:
    """First ``order`` coefficients of ``p`` in the basis ``(x - alpha)^i``.

    Equivalently ``p^(i)(alpha) / i!`` for ``i < order``.  Computed by
    repeated synthetic division by ``x - alpha``; no derivatives are taken.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    alpha = _coerce(alpha)
    zero = alpha * 0
    rest = list(p.coeffs)
    out = []
    while len(out) < order:
        if not rest:
            out.append(zero)
            continue
        # one synthetic-division pass: remainder is the next shifted coefficient
        acc = zero
        quotient = []
        for c in reversed(rest):
            acc = acc * alpha + c
            quotient.append(acc)
        out.append(quotient.pop())
        rest = quotient[::-1]
    return out


def series_reciprocal_at(p: Polynomial, alpha, order: int) -> list:
    """Jet ``g^(i)(alpha) / i!`` for ``i < order`` where ``g = 1/p``.

    Long division of 1 by the power series of ``p`` about ``alpha``.
    """
    c = taylor_coefficients_at(p, alpha, order)
    if c[0] == 0:
        raise ZeroDivisionError(f"reciprocal undefined: polynomial vanishes at {alpha}")
    inv0 = 1 / c[0]
    out = [inv0]
    for i in range(1, order):
        acc = c[i] * out[0]
        for t in range(1, i):
            acc += c[i - t] * out[t]
        out.append(-acc * inv0)
    return out


def product(factors: Iterable[Polynomial]) -> Polynomial:
    out = Polynomial.constant(1)
    for f in factors:
        out = out * f
    return out
