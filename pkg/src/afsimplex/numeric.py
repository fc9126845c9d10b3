"""Numeric-mode contexts shared by every piece of the solver.

Two modes exist: exact rational arithmetic (the default everywhere) and
floating point with a tolerance that is applied to *sign classification
only*.  Ratio comparisons and all other ordering decisions use the raw
values; the tolerance never creeps into them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Value = Union[Fraction, float]

NEGATIVE = -1
ZERO = 0
POSITIVE = 1


class ClassifiedZeroDivision(ZeroDivisionError):
    """Raised when dividing by a value the active mode classifies as zero."""


class NumericMode:
    """Shared sign-classification helpers; concrete modes define sign(),
    coerce() and the zero constant."""

    zero: Value

    def sign(self, x: Value) -> int:
        raise NotImplementedError

    def coerce(self, value) -> Value:
        raise NotImplementedError

    def is_zero(self, x: Value) -> bool:
        return self.sign(x) == ZERO

    def is_negative(self, x: Value) -> bool:
        return self.sign(x) == NEGATIVE

    def is_positive(self, x: Value) -> bool:
        return self.sign(x) == POSITIVE

    def is_nonnegative(self, x: Value) -> bool:
        return self.sign(x) >= ZERO

    def div(self, a: Value, b: Value) -> Value:
        """Divide, refusing denominators classified as zero."""
        if self.is_zero(b):
            raise ClassifiedZeroDivision(f"denominator {b!r} classifies as zero")
        return a / b


@dataclass(frozen=True)
class ExactMode(NumericMode):
    """Exact rational arithmetic on fractions.Fraction."""

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    def coerce(self, value) -> Fraction:
        # Floats are refused here on purpose: silently converting one to the
        # exact binary fraction it denotes is never what a caller wants.
        if isinstance(value, float):
            raise TypeError(
                f"float {value!r} given in exact mode; pass int, str or Fraction"
            )
        return Fraction(value)

    def sign(self, x: Value) -> int:
        if x > 0:
            return POSITIVE
        if x < 0:
            return NEGATIVE
        return ZERO


@dataclass(frozen=True)
class FloatMode(NumericMode):
    """Floating point with |x| <= eps classified as zero."""

    eps: float = 1e-9

    def __post_init__(self):
        if not self.eps > 0:
            raise ValueError("eps must be positive")

    @property
    def zero(self) -> float:
        return 0.0

    def coerce(self, value) -> float:
        if isinstance(value, str):
            return float(Fraction(value))
        return float(value)

    def sign(self, x: Value) -> int:
        if x > self.eps:
            return POSITIVE
        if x < -self.eps:
            return NEGATIVE
        return ZERO


EXACT = ExactMode()


def scalar_sign(x: Value, mode: NumericMode = EXACT) -> int:
    """Classify x as -1, 0 or +1 under the given mode's zero test."""
    return mode.sign(x)
