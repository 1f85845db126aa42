"""Exact rational arithmetic helpers and truncated power series.

All perturbative recursions in this package run on :class:`fractions.Fraction`,
which is always kept in lowest terms with a positive denominator.  This module
adds the few things ``Fraction`` does not provide: exact square roots,
correctly rounded decimal rendering, strict parsing of user input, and a small
truncated-series type used by the verification layer.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

__all__ = [
    "Rational",
    "as_rational",
    "parse_rational",
    "parse_rational_list",
    "sqrt_exact",
    "render_decimal",
    "TruncatedSeries",
]

_EXACT_TOKEN = re.compile(
    r"""^\s*[+-]?(
        \d+/\d+ |                 # fraction
        \d+(\.\d*)?([eE][+-]?\d+)? |   # decimal
        \.\d+([eE][+-]?\d+)?
    )\s*$""",
    re.VERBOSE,
)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or exact string to a Fraction.

    Binary floats are refused: they would smuggle rounding into the exact core.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational parameters")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(
        f"expected int, Fraction or exact string, got {type(value).__name__}"
    )


def parse_rational(token: str) -> Fraction:
    """Parse ``"1/25"``, ``"0.04"``, ``"-3"`` or ``"2.5e-3"`` without rounding."""
    if not _EXACT_TOKEN.match(token):
        raise ValueError(f"not an exact rational: {token!r}")
    try:
        return Fraction(token.strip())
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {token!r}") from None


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse a comma separated list of exact rationals; empty text gives []."""
    text = text.strip()
    if not text:
        return []
    return [parse_rational(tok) for tok in text.split(",")]


def sqrt_exact(a: RationalLike) -> Fraction:
    """Nonnegative square root of a perfect-square rational.

    >>> sqrt_exact(Fraction(9, 4))
    Fraction(3, 2)
    """
    a = as_rational(a)
    if a < 0:
        raise ValueError(f"square root of negative rational {a}")
    num, den = a.numerator, a.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise ValueError(f"{a} is not the square of a rational")
    return Fraction(rn, rd)


def render_decimal(a: RationalLike, digits: int) -> str:
    """Fixed-point rendering with ``digits`` places, rounded half to even."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    a = as_rational(a)
    scaled = round(a * 10**digits)  # Fraction.__round__ is half-to-even
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``c_0..c_I`` of ``x**leading_power * sum_i c_i x**i``.

    Terms beyond index ``I`` are unknown, not zero: arithmetic between series
    truncates at the shorter operand.
    """

    coefficients: tuple[Fraction, ...]
    leading_power: int = 0

    def __init__(self, coefficients: Iterable[RationalLike], leading_power: int = 0):
        coeffs = tuple(as_rational(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "leading_power", int(leading_power))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i]

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coefficients[: order + 1], self.leading_power)

    def _aligned(self, other: "TruncatedSeries") -> tuple[Sequence, Sequence, int]:
        if self.leading_power != other.leading_power:
            raise ValueError("cannot add series with different leading powers")
        n = min(len(self), len(other))
        return self.coefficients[:n], other.coefficients[:n], self.leading_power

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        a, b, lp = self._aligned(other)
        return TruncatedSeries((x + y for x, y in zip(a, b)), lp)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        a, b, lp = self._aligned(other)
        return TruncatedSeries((x - y for x, y in zip(a, b)), lp)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries((-c for c in self.coefficients), self.leading_power)

    def scale(self, factor: RationalLike) -> "TruncatedSeries":
        factor = as_rational(factor)
        return TruncatedSeries((factor * c for c in self.coefficients), self.leading_power)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(len(self), len(other))
        a, b = self.coefficients, other.coefficients
        out = [sum((a[p] * b[i - p] for p in range(i + 1)), Fraction(0)) for i in range(n)]
        return TruncatedSeries(out, self.leading_power + other.leading_power)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.leading_power == other.leading_power
            and self.coefficients == other.coefficients
        )

    def __hash__(self) -> int:
        return hash((self.coefficients, self.leading_power))
