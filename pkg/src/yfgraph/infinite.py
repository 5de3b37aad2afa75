"""Leftward-infinite words ``...a3 a2 a1`` (vertices at infinity).

Two shapes are supported: :class:`FiniteTwos`, the word ``1^inf . prefix``,
and :class:`RunWord`, where the run of 1s right of the k-th 2 (counting
from the right, starting at k = 0) is given by a rule.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Union

from .words import Word, WordError, clocks


class Positivity(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class Constant:
    c: int

    def __post_init__(self):
        if self.c < 0:
            raise SpecError("constant run length must be nonnegative")

    def beta(self, k: int) -> int:
        return self.c

    def spec(self) -> str:
        return f"const:{self.c}"


@dataclass(frozen=True)
class Geometric:
    b0: int

    def __post_init__(self):
        if self.b0 < 1:
            raise SpecError("geometric base run must be at least 1")

    def beta(self, k: int) -> int:
        return self.b0 << k

    def spec(self) -> str:
        return f"geometric:{self.b0}"


@dataclass(frozen=True)
class Explicit:
    """Listed runs followed by a tail rule re-indexed from 0."""

    values: tuple[int, ...]
    tail: Union[Constant, Geometric]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(v < 0 for v in self.values):
            raise SpecError("run lengths must be nonnegative")

    def beta(self, k: int) -> int:
        if k < len(self.values):
            return self.values[k]
        return self.tail.beta(k - len(self.values))

    def spec(self) -> str:
        listed = ",".join(str(v) for v in self.values)
        return f"explicit:{listed};tail={self.tail.spec()}"


@dataclass(frozen=True)
class Custom:
    """Arbitrary run rule; no tail information is available."""

    fn: Callable[[int], int] = field(compare=True)
    name: str = "custom"

    def beta(self, k: int) -> int:
        return self.fn(k)

    def spec(self) -> str:
        return self.name


RunRule = Union[Constant, Geometric, Explicit, Custom]

_CUMULATIVE: dict = {}


def _beta_sum(rule: RunRule, k: int) -> int:
    """``beta_0 + ... + beta_{k-1}``."""
    sums = _CUMULATIVE.setdefault(rule, [0])
    while len(sums) <= k:
        sums.append(sums[-1] + rule.beta(len(sums) - 1))
    return sums[k]


class InfiniteWord:
    twos_count: Optional[int]  # None for infinitely many 2s

    def clock(self, k: int) -> int:
        raise NotImplementedError

    def suffix(self, m: int) -> Word:
        raise NotImplementedError

    def positivity(self) -> Positivity:
        raise NotImplementedError

    def tail_sum_bound(self, J: int) -> Optional[Fraction]:
        """Upper bound for the sum of ``1/g(w, k)`` over ``k > J``, or None."""
        raise NotImplementedError

    @property
    def min_tail_index(self) -> int:
        return 0

    def spec(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.spec()


@dataclass(frozen=True)
class FiniteTwos(InfiniteWord):
    prefix: Word = Word()

    @property
    def twos_count(self) -> int:
        return self.prefix.twos

    def clock(self, k: int) -> int:
        cl = clocks(self.prefix)
        if not 1 <= k <= len(cl):
            raise IndexError(f"g({self.spec()}, {k}): index must lie in 1..{len(cl)}")
        return cl[k - 1]

    def suffix(self, m: int) -> Word:
        rev = self.prefix.rev[:m]
        return Word(rev + (1,) * (m - len(rev)))

    def positivity(self) -> Positivity:
        return Positivity.YES

    def tail_sum_bound(self, J: int) -> Optional[Fraction]:
        return Fraction(0) if J >= self.twos_count else None

    def spec(self) -> str:
        if not self.prefix.rev:
            return "ones"
        return f"finite:{self.prefix}"


@dataclass(frozen=True)
class RunWord(InfiniteWord):
    rule: RunRule

    twos_count = None

    def clock(self, k: int) -> int:
        if k < 1:
            raise IndexError("clock index starts at 1")
        return _beta_sum(self.rule, k) + 2 * k - 1

    def suffix(self, m: int) -> Word:
        rev: list[int] = []
        k = 0
        while len(rev) < m:
            run = self.rule.beta(k)
            rev.extend([1] * min(run, m - len(rev)))
            if len(rev) < m:
                rev.append(2)
            k += 1
        return Word(tuple(rev))

    def _tail(self) -> RunRule:
        return self.rule.tail if isinstance(self.rule, Explicit) else self.rule

    @property
    def min_tail_index(self) -> int:
        return len(self.rule.values) if isinstance(self.rule, Explicit) else 0

    def positivity(self) -> Positivity:
        tail = self._tail()
        if isinstance(tail, Geometric):
            return Positivity.YES
        if isinstance(tail, Constant):
            return Positivity.NO
        return Positivity.UNKNOWN

    def tail_sum_bound(self, J: int) -> Optional[Fraction]:
        # for k > L the clock is at least b * 2^(k-L-1), L = listed runs
        tail = self._tail()
        L = self.min_tail_index
        if not isinstance(tail, Geometric) or J < L:
            return None
        return Fraction(2 ** (L + 1), tail.b0 * 2**J)

    def spec(self) -> str:
        return self.rule.spec()


InfiniteWordSpec = Union[FiniteTwos, RunWord]

ONES = FiniteTwos(Word())


def _parse_tail(text: str) -> Union[Constant, Geometric]:
    kind, _, arg = text.partition(":")
    try:
        value = int(arg)
    except ValueError:
        raise SpecError(f"bad tail rule {text!r}") from None
    if kind == "const":
        return Constant(value)
    if kind == "geometric":
        return Geometric(value)
    raise SpecError(f"unknown tail rule {text!r}")


def parse_infinite(text: str) -> InfiniteWordSpec:
    """Parse ``ones``, ``finite:<word>``, ``const:<c>``, ``geometric:<b0>``
    or ``explicit:<b0,b1,...;tail=const:c|geometric:b>``."""
    text = text.strip()
    if text == "ones":
        return ONES
    kind, sep, arg = text.partition(":")
    if not sep:
        raise SpecError(f"unrecognised infinite word {text!r}")
    try:
        if kind == "finite":
            return FiniteTwos(Word.parse(arg))
        if kind in ("const", "geometric"):
            return RunWord(_parse_tail(text))
        if kind == "explicit":
            listed, sep, tail = arg.partition(";")
            if not sep or not tail.startswith("tail="):
                raise SpecError("explicit rule needs ';tail=...'")
            values = tuple(int(v) for v in listed.split(",") if v.strip())
            return RunWord(Explicit(values, _parse_tail(tail[len("tail="):])))
    except (WordError, ValueError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(f"bad infinite word {text!r}: {exc}") from None
    raise SpecError(f"unrecognised infinite word {text!r}")
