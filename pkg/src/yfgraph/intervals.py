"""Closed rational intervals used as certified enclosures."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Union

Number = Union[int, Fraction]


@dataclass(frozen=True)
class IntervalValue:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: Number) -> "IntervalValue":
        return cls(value, value)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, value: Number) -> bool:
        return self.lo <= value <= self.hi

    def __add__(self, other):
        if isinstance(other, IntervalValue):
            return IntervalValue(self.lo + other.lo, self.hi + other.hi)
        return IntervalValue(self.lo + other, self.hi + other)

    __radd__ = __add__

    def __neg__(self):
        return IntervalValue(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-other if isinstance(other, IntervalValue) else -Fraction(other))

    def __mul__(self, other):
        if isinstance(other, IntervalValue):
            ends = (
                self.lo * other.lo,
                self.lo * other.hi,
                self.hi * other.lo,
                self.hi * other.hi,
            )
            return IntervalValue(min(ends), max(ends))
        other = Fraction(other)
        if other >= 0:
            return IntervalValue(self.lo * other, self.hi * other)
        return IntervalValue(self.hi * other, self.lo * other)

    __rmul__ = __mul__

    def reciprocal(self) -> "IntervalValue":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return IntervalValue(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        if isinstance(other, IntervalValue):
            return self * other.reciprocal()
        return self * (1 / Fraction(other))

    def intersect(self, other: "IntervalValue") -> "IntervalValue | None":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            return None
        return IntervalValue(lo, hi)

    def outward(self, bits: int) -> "IntervalValue":
        """Round endpoints outward onto the grid ``2**-bits``."""
        scale = 1 << bits
        return IntervalValue(
            Fraction(floor(self.lo * scale), scale),
            Fraction(ceil(self.hi * scale), scale),
        )

    def to_json(self) -> dict:
        return {"lo": fraction_str(self.lo), "hi": fraction_str(self.hi)}

    def __str__(self) -> str:
        if self.is_exact:
            return fraction_str(self.lo)
        return f"[{fraction_str(self.lo)}, {fraction_str(self.hi)}]"


def fraction_str(q: Number) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def interval_sum(items: Iterable[IntervalValue]) -> IntervalValue:
    lo = Fraction(0)
    hi = Fraction(0)
    for it in items:
        lo += it.lo
        hi += it.hi
    return IntervalValue(lo, hi)


ZERO = IntervalValue(0, 0)
ONE = IntervalValue(1, 1)
UNIT = IntervalValue(0, 1)
