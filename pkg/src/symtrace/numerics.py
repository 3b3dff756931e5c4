"""Exact scalars: integer square roots and signed radicals.

Rationals are plain :class:`fractions.Fraction` values, which are always
reduced with a positive denominator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Rational = Fraction
Number = Union[int, Fraction]


def is_perfect_square(m: int) -> Optional[int]:
    """Return ``r`` with ``r*r == m`` if ``m`` is a perfect square, else ``None``."""
    if m < 0:
        raise ValueError(f"is_perfect_square requires m >= 0, got {m}")
    r = math.isqrt(m)
    return r if r * r == m else None


def rational_sqrt(q: Number) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or ``None`` if irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    num = is_perfect_square(q.numerator)
    den = is_perfect_square(q.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def sign(x: Number) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class RadicalScalar:
    """The real number ``sign * sqrt(radicand)``.

    Radicands are kept as given (not reduced to squarefree form); no code path
    adds radicals, so componentwise equality is sound.
    """

    sign: int
    radicand: int

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.radicand < 0:
            raise ValueError(f"radicand must be nonnegative, got {self.radicand}")
        if (self.sign == 0) != (self.radicand == 0):
            raise ValueError("sign is 0 exactly when radicand is 0")

    @classmethod
    def from_int(cls, a: int) -> "RadicalScalar":
        return cls(sign(a), a * a)

    @property
    def square(self) -> int:
        return self.radicand

    def rational_value(self) -> Optional[Fraction]:
        """Exact value when the radicand is a perfect square, else ``None``."""
        r = is_perfect_square(self.radicand)
        return None if r is None else Fraction(self.sign * r)

    def __mul__(self, other: "RadicalScalar") -> "RadicalScalar":
        return radical_product(self, other)

    def __float__(self) -> float:
        return self.sign * math.sqrt(self.radicand)

    def __str__(self) -> str:
        r = is_perfect_square(self.radicand)
        if r is not None:
            return str(self.sign * r)
        return f"{self.sign}*sqrt({self.radicand})"


ZERO = RadicalScalar(0, 0)


def radical_product(x: RadicalScalar, y: RadicalScalar) -> RadicalScalar:
    return RadicalScalar(x.sign * y.sign, x.radicand * y.radicand)


def fraction_str(q: Number) -> str:
    """``num/den`` form (plain ``num`` for integers)."""
    return str(Fraction(q))


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def to_int_if_integral(q: Number) -> Number:
    if isinstance(q, Fraction) and q.denominator == 1:
        return q.numerator
    return q
