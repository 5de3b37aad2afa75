"""Counting down-paths ``d(x, y)`` in the Young-Fibonacci graph.

Two independent routes are provided: :func:`d_bruteforce` walks the graph
(memoised over vertices), :func:`d_closed` evaluates the closed form built
from the rational function :func:`f_eval` and the clocks ``g``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import prod
from typing import Iterable, Sequence

from .words import (
    EPSILON,
    Word,
    clocks,
    common_suffix_len,
    concat,
    down_neighbors,
    fibonacci,
    g_prime,
    ones,
)

# Default ceiling on memo states for the brute-force walk.
BRUTE_STATE_LIMIT = 2_000_000


class PreconditionError(ValueError):
    pass


class InfeasibleError(RuntimeError):
    """The requested computation is refused as beyond the state budget."""


class IntegralityError(AssertionError):
    """The closed form produced a non-integer count."""


def precedes(x: Word, y: Word) -> bool:
    """Order of the lattice: after stripping the common suffix, ``y`` keeps at
    least as many 2s as ``x`` keeps digits."""
    h = common_suffix_len(x, y)
    return y.rev[h:].count(2) >= len(x) - h


def _state_estimate(lo: int, hi: int) -> int:
    return sum(fibonacci(r + 1) for r in range(lo, hi + 1))


def d_bruteforce(
    x: Word, y: Word, state_limit: int = BRUTE_STATE_LIMIT, prune: bool = True
) -> int:
    """Number of down-paths from ``y`` to ``x`` by walking the graph.

    With ``prune`` the walk skips vertices not above ``x`` in the order.
    Raises :class:`InfeasibleError` when the levels between ``x`` and ``y``
    hold more than ``state_limit`` vertices.
    """
    if y.rank < x.rank:
        return 0
    if _state_estimate(x.rank, y.rank) > state_limit:
        raise InfeasibleError(
            f"brute force between ranks {x.rank} and {y.rank} exceeds "
            f"{state_limit} states; use d_closed"
        )
    target_rank = x.rank
    memo: dict[Word, int] = {}

    def walk(v: Word) -> int:
        if v.rank == target_rank:
            return 1 if v == x else 0
        if v in memo:
            return memo[v]
        if prune and not precedes(x, v):
            memo[v] = 0
            return 0
        total = sum(walk(u) for u in down_neighbors(v))
        memo[v] = total
        return total

    return walk(y)


@lru_cache(maxsize=None)
def _f(rev: tuple[int, ...], y: int, z: int) -> Fraction:
    if z == 0:
        return _f_base(rev, y)
    last = rev[0]
    if last == 1:
        if y == 0:
            return _f(rev, 0, 0)
        return _f(rev, y, 0) + _f(rev[1:], y - 1, z - 1)
    if y == 1:
        return Fraction(0)
    return _f((1, 1) + rev[1:], y, z + 1) / (1 - y)


def _f_base(rev: tuple[int, ...], y: int) -> Fraction:
    # split x = prefix . suffix with digit sum of suffix equal to y
    t = 0
    acc = 0
    while acc < y:
        acc += rev[t]
        t += 1
    if acc != y:
        return Fraction(0)
    denom = 1
    partial = 0
    for digit in reversed(rev[:t]):  # suffix read from its left end
        partial += digit
        denom *= -partial
    partial = 0
    for digit in rev[t:]:  # prefix read from its right end
        partial += digit
        denom *= partial
    return Fraction(1, denom)


def f_eval(x: Word, y: int, z: int) -> Fraction:
    """The rational coefficient ``f(x, y, z)``, defined for
    ``0 <= y <= rank(x)`` and ``0 <= z <= len(x)``."""
    if not (0 <= y <= x.rank and 0 <= z <= len(x)):
        raise PreconditionError(
            f"f({x.label}, {y}, {z}) outside domain y<={x.rank}, z<={len(x)}"
        )
    return _f(x.rev, y, z)


def f_table(x: Word) -> list[list[Fraction]]:
    """Grid ``table[z][y]`` of all f-values for ``x``."""
    return [[_f(x.rev, y, z) for y in range(x.rank + 1)] for z in range(len(x) + 1)]


def clear_caches() -> None:
    _f.cache_clear()


def d_closed(x: Word, y: Word) -> int:
    """Closed-form down-path count: sum over ``i`` of
    ``f(x, i, h(x, y)) * prod_j (g(y, j) - i)``."""
    if y.rank < x.rank:
        raise PreconditionError(f"rank({y.label}) < rank({x.label})")
    h = common_suffix_len(x, y)
    cl = clocks(y)
    total = Fraction(0)
    for i in range(x.rank + 1):
        coeff = _f(x.rev, i, h)
        if coeff:
            total += coeff * prod(c - i for c in cl)
    if total.denominator != 1 or total < 0:
        raise IntegralityError(f"d_closed({x.label}, {y.label}) = {total}")
    return total.numerator


def d_count(x: Word, y: Word) -> int:
    """``d(x, y)`` with the ``rank(y) < rank(x)`` case mapped to 0."""
    if y.rank < x.rank:
        return 0
    return d_closed(x, y)


def d_to_empty(y: Word) -> int:
    """``d(epsilon, y)``: the product of the clocks of ``y``."""
    return prod(clocks(y))


def _check_indices(a: Word, k: int, indices: Sequence[int]) -> None:
    if a.twos < k:
        raise PreconditionError(f"{a.label} has fewer than {k} twos")
    if len(indices) != a.twos - k:
        raise PreconditionError(
            f"expected {a.twos - k} removed-2 indices, got {len(indices)}"
        )
    if any(not 1 <= i <= a.twos for i in indices):
        raise PreconditionError(f"2-indices must lie in 1..{a.twos}")
    if any(p >= q for p, q in zip(indices, indices[1:])):
        raise PreconditionError("2-indices must be strictly increasing")


def d_from_twos_fixed(a: Word, k: int, indices: Sequence[int]) -> int:
    """Down-paths ``a -> 2^k`` that lower exactly the 2s at ``indices``.

    ``indices`` lists the ``d(a) - k`` removed 2s, counted from the right
    (index 1 is the rightmost 2).
    """
    indices = tuple(indices)
    _check_indices(a, k, indices)
    return prod(g_prime(a, i) + 2 * j - 2 for j, i in enumerate(indices, start=1))


def remove_twos(a: Word, indices: Iterable[int]) -> Word:
    """Delete the 2s at the given right-counted indices."""
    drop = set(indices)
    rev = []
    seen = 0
    for digit in a.rev:
        if digit == 2:
            seen += 1
            if seen in drop:
                continue
        rev.append(digit)
    return Word(tuple(rev))


def d_from_twos(a: Word, k: int) -> int:
    """``d(2^k, a)`` as a sum over which 2s of ``a`` get removed."""
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    n2 = a.twos
    if n2 < k:
        return 0
    return sum(
        d_from_twos_fixed(a, k, idx)
        for idx in combinations(range(1, n2 + 1), n2 - k)
    )


def factorize_check(xp: Word, xs: Word) -> tuple[int, int, int]:
    """``(d(e, xp xs), d(e, xs), d(e, xp 1^{rank xs}))``; the first is the
    product of the other two."""
    return (
        d_to_empty(concat(xp, xs)),
        d_to_empty(xs),
        d_to_empty(concat(xp, ones(xs.rank))),
    )


class CapExceeded(RuntimeError):
    pass


def enumerate_paths(x: Word, y: Word, cap: int = 10_000) -> list[list[Word]]:
    """Every down-path from ``y`` to ``x`` as a vertex list (``y`` first)."""
    if y.rank < x.rank:
        return []
    count = d_bruteforce(x, y)
    if count > cap:
        raise CapExceeded(f"{count} paths exceed cap {cap}")
    out: list[list[Word]] = []
    stack = [y]

    def dfs(v: Word) -> None:
        if v.rank == x.rank:
            if v == x:
                out.append(list(stack))
            return
        if not precedes(x, v):
            return
        for u in sorted(down_neighbors(v)):
            stack.append(u)
            dfs(u)
            stack.pop()

    dfs(y)
    return out


__all__ = [
    "BRUTE_STATE_LIMIT",
    "CapExceeded",
    "EPSILON",
    "InfeasibleError",
    "IntegralityError",
    "PreconditionError",
    "clear_caches",
    "d_bruteforce",
    "d_closed",
    "d_count",
    "d_from_twos",
    "d_from_twos_fixed",
    "d_to_empty",
    "enumerate_paths",
    "f_eval",
    "f_table",
    "factorize_check",
    "precedes",
    "remove_twos",
]
