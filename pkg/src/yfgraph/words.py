"""Words over {1, 2}: the vertices of the Young-Fibonacci graph.

A word is stored right-to-left (``rev[0]`` is the rightmost digit), so every
suffix statistic is a prefix scan of the storage tuple.  Text form is the
ordinary left-to-right reading, e.g. ``Word.parse("21221")``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

EMPTY_LABEL = "e"


class WordError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Word:
    """Finite word over {1, 2}; ordering is lexicographic on ``rev`` (1 < 2)."""

    rev: tuple[int, ...] = ()

    def __post_init__(self):
        for digit in self.rev:
            if digit != 1 and digit != 2:
                raise WordError(f"invalid digit {digit!r}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse left-to-right text; ``""`` and ``"e"`` both denote the empty word."""
        text = text.strip()
        if text == EMPTY_LABEL:
            return EPSILON
        if any(ch not in "12" for ch in text):
            raise WordError(f"not a word over {{1,2}}: {text!r}")
        return cls(tuple(int(ch) for ch in reversed(text)))

    @classmethod
    def from_digits(cls, digits: Sequence[int]) -> "Word":
        """Build from digits given left-to-right."""
        return cls(tuple(reversed(tuple(digits))))

    def __str__(self) -> str:
        return "".join(str(d) for d in reversed(self.rev))

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    @property
    def label(self) -> str:
        """Text form with ``e`` standing in for the empty word."""
        return str(self) or EMPTY_LABEL

    @property
    def digits(self) -> tuple[int, ...]:
        """Digits left-to-right."""
        return tuple(reversed(self.rev))

    def __len__(self) -> int:
        return len(self.rev)

    def __add__(self, other: "Word") -> "Word":
        return concat(self, other)

    @property
    def rank(self) -> int:
        return sum(self.rev)

    @property
    def ones(self) -> int:
        return self.rev.count(1)

    @property
    def twos(self) -> int:
        return self.rev.count(2)

    def suffix(self, m: int) -> "Word":
        """The rightmost ``m`` digits."""
        return Word(self.rev[:m])


EPSILON = Word()


def word(text: str) -> Word:
    return Word.parse(text)


def twos(k: int) -> Word:
    return Word((2,) * k)


def ones(k: int) -> Word:
    return Word((1,) * k)


def rank(x: Word) -> int:
    return x.rank


def concat(x: Word, y: Word) -> Word:
    """The word ``xy`` (``x`` on the left)."""
    return Word(y.rev + x.rev)


class RunDecomposition(NamedTuple):
    """Runs of 1s around the 2s of a word.

    ``betas[k]`` is the number of 1s between the k-th and (k+1)-th 2 counted
    from the right (``betas[0]`` is the trailing run); ``leading_ones`` is
    the run left of the leftmost 2.
    """

    betas: tuple[int, ...]
    leading_ones: int

    def assemble(self) -> Word:
        rev: list[int] = []
        for beta in self.betas:
            rev.extend([1] * beta)
            rev.append(2)
        rev.extend([1] * self.leading_ones)
        return Word(tuple(rev))


def runs(x: Word) -> RunDecomposition:
    betas = []
    run = 0
    for digit in x.rev:
        if digit == 1:
            run += 1
        else:
            betas.append(run)
            run = 0
    return RunDecomposition(tuple(betas), run)


@lru_cache(maxsize=None)
def _clocks(rev: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    seen_ones = 0
    for digit in rev:
        if digit == 1:
            seen_ones += 1
        else:
            k = len(out) + 1
            out.append(seen_ones + 2 * k - 1)
    return tuple(out)


def clocks(x: Word) -> tuple[int, ...]:
    """``(g(x, 1), ..., g(x, d(x)))``."""
    return _clocks(x.rev)


def g(x, k: int) -> int:
    """Clock of the k-th 2 from the right: ones to its right plus ``2k - 1``.

    ``x`` may be a :class:`Word` or an infinite word (anything with a
    ``clock`` method).
    """
    if not isinstance(x, Word):
        return x.clock(k)
    cl = _clocks(x.rev)
    if not 1 <= k <= len(cl):
        raise IndexError(f"g({x.label}, {k}): index must lie in 1..{len(cl)}")
    return cl[k - 1]


def g_prime(x, k: int) -> int:
    return g(x, k) - 2 * k + 2


def common_suffix_len(x: Word, y: Word) -> int:
    """Number of digits in the longest common suffix (h)."""
    n = 0
    for a, b in zip(x.rev, y.rev):
        if a != b:
            break
        n += 1
    return n


def common_suffix_rank(x: Word, y: Word) -> int:
    """Digit sum of the longest common suffix (h')."""
    return sum(x.rev[: common_suffix_len(x, y)])


def _leftmost_one(rev: tuple[int, ...]) -> int:
    """Storage index of the leftmost 1, or -1."""
    for i in range(len(rev) - 1, -1, -1):
        if rev[i] == 1:
            return i
    return -1


def up_neighbors(x: Word) -> frozenset[Word]:
    """Covers of ``x``: raise the leftmost 1 to a 2, or insert a 1 anywhere
    left of the leftmost 1."""
    rev = x.rev
    p = _leftmost_one(rev)
    out = set()
    if p >= 0:
        out.add(Word(rev[:p] + (2,) + rev[p + 1 :]))
    # insertion slots are storage positions p+1 .. len (p = -1 when no 1)
    for pos in range(p + 1, len(rev) + 1):
        out.add(Word(rev[:pos] + (1,) + rev[pos:]))
    return frozenset(out)


def down_neighbors(y: Word) -> frozenset[Word]:
    """Vertices covered by ``y``: delete the leftmost 1, or lower any 2 lying
    left of it to a 1."""
    rev = y.rev
    p = _leftmost_one(rev)
    out = set()
    if p >= 0:
        out.add(Word(rev[:p] + rev[p + 1 :]))
    for pos in range(p + 1, len(rev)):
        out.add(Word(rev[:pos] + (1,) + rev[pos + 1 :]))
    return frozenset(out)


@lru_cache(maxsize=64)
def _level(n: int) -> tuple[Word, ...]:
    if n < 0:
        return ()
    if n == 0:
        return (EPSILON,)
    # rev begins with 1 before rev beginning with 2, so the result is sorted
    with_one = tuple(Word((1,) + w.rev) for w in _level(n - 1))
    with_two = tuple(Word((2,) + w.rev) for w in _level(n - 2))
    return with_one + with_two


def enumerate_level(n: int) -> list[Word]:
    """All words of rank ``n``, sorted by right-to-left digits (1 < 2)."""
    if n < 0:
        raise ValueError("level must be nonnegative")
    return list(_level(n))


def iter_levels(n_max: int) -> Iterator[Word]:
    for n in range(n_max + 1):
        yield from _level(n)


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def splits(x: Word) -> Iterator[tuple[Word, Word]]:
    """Every factorisation ``x = prefix + suffix``."""
    for t in range(len(x) + 1):
        yield Word(x.rev[t:]), Word(x.rev[:t])
