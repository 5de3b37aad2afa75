"""Boundary measures ``mu_w`` on the levels of the Young-Fibonacci graph.

For an infinite word ``w`` the finite-stage measure at level ``n`` is

    mu_w(v, m) = d(e, v) d(v, w_m) / d(e, w_m),

and ``mu_w(v)`` is its limit as ``m`` grows.  The limit is a finite sum of
f-values times infinite products over the clocks of ``w``; when ``w`` has
infinitely many 2s those products are enclosed in rational intervals.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import ceil, prod
from typing import Optional

from .infinite import FiniteTwos, InfiniteWordSpec, Positivity
from .intervals import ONE, UNIT, ZERO, IntervalValue, interval_sum
from .paths import PreconditionError, _f, d_count, d_from_twos, d_to_empty
from .words import (
    Word,
    clocks,
    common_suffix_len,
    common_suffix_rank,
    concat,
    enumerate_level,
    splits,
    twos,
)

log = logging.getLogger(__name__)

DEFAULT_TOL = Fraction(1, 10**12)


class ToleranceError(RuntimeError):
    """A requested enclosure width cannot be certified for this word."""


class EnclosureError(AssertionError):
    """An enclosure fell outside the range the mathematics allows."""


class BudgetExceeded(RuntimeError):
    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


# -- suffix statistics against infinite words -------------------------------


def h_inf(v: Word, w: InfiniteWordSpec) -> int:
    return common_suffix_len(v, w.suffix(len(v) + 1))


def h_prime_inf(v: Word, w: InfiniteWordSpec) -> int:
    return common_suffix_rank(v, w.suffix(len(v) + 1))


def is_positive_boundary(w: InfiniteWordSpec) -> Positivity:
    """Whether ``pi(w) > 0``: decided from the growth of the clocks, since
    ``pi(w) > 0`` exactly when the reciprocals of the clocks are summable."""
    return w.positivity()


def _check_delta(delta) -> Fraction:
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise PreconditionError(f"delta must lie strictly between 0 and 1, got {delta}")
    return delta


# -- pi ---------------------------------------------------------------------


def pi_finite(x: Word) -> Fraction:
    """Product of ``(g - 1)/g`` over the clocks of ``x`` exceeding 1."""
    out = Fraction(1)
    for c in clocks(x):
        if c > 1:
            out *= Fraction(c - 1, c)
    return out


def _tol_bits(tol: Fraction) -> int:
    return max(1, math.ceil(math.log2(1 / tol))) + 16


def _first_tail_index(w: InfiniteWordSpec, tol: Fraction, need: int = 0) -> int:
    """Smallest J with a tail bound at most ``tol`` and ``g(w, J+1) > need``."""
    J = w.min_tail_index
    while True:
        T = w.tail_sum_bound(J)
        if T is not None and T <= tol and w.clock(J + 1) > need:
            return J
        J += 1


def pi_infinite(w: InfiniteWordSpec, tol=DEFAULT_TOL) -> IntervalValue:
    """Enclosure of ``pi(w)`` of width at most ``tol``."""
    tol = Fraction(tol)
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    if isinstance(w, FiniteTwos):
        return IntervalValue.point(pi_finite(w.prefix))
    status = w.positivity()
    if status is Positivity.NO:
        # reciprocal clocks not summable: the product is exactly 0
        return ZERO
    if status is Positivity.UNKNOWN:
        raise ToleranceError(f"no tail bound available for {w.spec()}")
    J = _first_tail_index(w, tol / 2)
    partial = Fraction(1)
    for k in range(1, J + 1):
        c = w.clock(k)
        if c > 1:
            partial *= Fraction(c - 1, c)
    T = w.tail_sum_bound(J)
    return IntervalValue(partial * max(Fraction(0), 1 - T), partial).outward(_tol_bits(tol))


# -- mu ---------------------------------------------------------------------


def mu_finite(w: InfiniteWordSpec, v: Word, m: int) -> Fraction:
    """``d(e, v) d(v, w_m) / d(e, w_m)`` exactly."""
    wm = w.suffix(m)
    if wm.rank < v.rank:
        return Fraction(0)
    return Fraction(d_to_empty(v) * d_count(v, wm), d_to_empty(wm))


def _coefficients(w: InfiniteWordSpec, v: Word) -> list[Fraction]:
    h = h_inf(v, w)
    dv = d_to_empty(v)
    return [dv * _f(v.rev, i, h) for i in range(v.rank + 1)]


@lru_cache(maxsize=256)
def _kernel(w: InfiniteWordSpec, J: int, imax: int, bits: int) -> tuple[IntervalValue, ...]:
    """Enclosures of ``prod_j (1 - i/g(w, j))`` over all ``j``, ``i <= imax``."""
    T = w.tail_sum_bound(J)
    cl = [w.clock(j) for j in range(1, J + 1)]
    out = [ONE]
    for i in range(1, imax + 1):
        partial = Fraction(prod(c - i for c in cl), prod(cl))
        tail = IntervalValue(max(Fraction(0), 1 - i * T), 1)
        out.append((tail * partial).outward(bits))
    return tuple(out)


def _finite_kernel(w: FiniteTwos, imax: int) -> list[Fraction]:
    cl = clocks(w.prefix)
    den = prod(cl)
    return [Fraction(prod(c - i for c in cl), den) for i in range(imax + 1)]


def _clamp_unit(value: IntervalValue, what: str) -> IntervalValue:
    clamped = value.intersect(UNIT)
    if clamped is None:
        raise EnclosureError(f"{what} enclosure {value} misses [0, 1]")
    return clamped


def mu_limit(w: InfiniteWordSpec, v: Word, tol=DEFAULT_TOL) -> IntervalValue:
    """Enclosure of ``mu_w(v)`` of width at most ``tol``, clamped to [0, 1]."""
    tol = Fraction(tol)
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    if v.rank == 0:
        return ONE
    coeffs = _coefficients(w, v)
    if isinstance(w, FiniteTwos):
        kernel = _finite_kernel(w, v.rank)
        value = sum(c * k for c, k in zip(coeffs, kernel))
        return _clamp_unit(IntervalValue.point(value), f"mu({v.label})")
    status = w.positivity()
    if status is Positivity.NO:
        # every product with i >= 1 tends to 0
        return _clamp_unit(IntervalValue.point(coeffs[0]), f"mu({v.label})")
    if status is Positivity.UNKNOWN:
        raise ToleranceError(f"no tail bound available for {w.spec()}")
    scale = sum(abs(c) for c in coeffs) * v.rank
    J = _first_tail_index(w, tol / max(scale, 1), need=v.rank)
    bits = _tol_bits(tol / max(scale, 1))
    for _ in range(64):
        kernel = _kernel(w, J, v.rank, bits)
        value = interval_sum(k * c for c, k in zip(coeffs, kernel))
        if value.width <= tol:
            return _clamp_unit(value, f"mu({v.label})")
        J += 2
        bits += 8
    raise ToleranceError(f"could not reach width {tol} for mu({v.label})")


def mu_limit_approx(w: InfiniteWordSpec, v: Word, J: int = 80) -> float:
    """Floating-point evaluation of ``mu_w(v)`` truncating products at ``J``."""
    if v.rank == 0:
        return 1.0
    coeffs = _coefficients(w, v)
    if isinstance(w, FiniteTwos):
        cl = clocks(w.prefix)
    elif w.positivity() is Positivity.NO:
        return float(coeffs[0])
    else:
        cl = [w.clock(j) for j in range(1, J + 1)]
    total = 0.0
    for i, c in enumerate(coeffs):
        if c:
            total += float(c) * math.prod(1.0 - i / g for g in cl)
    return total


def level_masses(w: InfiniteWordSpec, n: int, m: int) -> Fraction:
    """Sum of ``mu_w(v, m)`` over the level ``n``; equals 1."""
    if w.suffix(m).rank < n:
        raise PreconditionError(f"rank(w_{m}) < {n}")
    return sum((mu_finite(w, v, m) for v in enumerate_level(n)), Fraction(0))


# -- level reports ------------------------------------------------------------


def proof_bound(n: int, delta) -> float:
    """``3 n ((2/3)^(delta/2))^n``."""
    return 3 * n * ((2 / 3) ** (float(delta) / 2)) ** n


def in_P(h_prime: int, n: int, delta: Fraction) -> bool:
    return h_prime >= (1 - delta) * n


@dataclass(frozen=True)
class VertexRow:
    word: Word
    mu: IntervalValue
    h_prime: int
    pi: Fraction
    in_P: bool
    in_Q: bool
    in_R: Optional[bool]


@dataclass
class LevelReport:
    w: InfiniteWordSpec
    n: int
    delta: Fraction
    l: int
    eps: Optional[Fraction]
    rows: list[VertexRow]
    pi_w: Optional[IntervalValue] = None
    m: Optional[int] = None
    bound_value: float = 0.0
    masses: dict = field(default_factory=dict)

    def mass(self, name: str) -> IntervalValue:
        return self.masses[name]


def _r_membership(pi_v: Fraction, pi_w: IntervalValue, eps: Fraction) -> Optional[bool]:
    lo_edge = pi_w * (1 - eps)
    hi_edge = pi_w * (1 + eps)
    if pi_v > lo_edge.hi and pi_v < hi_edge.lo:
        return True
    if pi_v <= lo_edge.lo or pi_v >= hi_edge.hi:
        return False
    return None


def classify_level(
    w: InfiniteWordSpec,
    n: int,
    delta=Fraction(1, 2),
    l: int = 0,
    eps=None,
    tol=DEFAULT_TOL,
    m: Optional[int] = None,
) -> LevelReport:
    """Masses and P/Q/R membership for every vertex of level ``n``.

    With ``m`` given the finite-stage measure ``mu_w(., m)`` is used
    exactly; otherwise the limit measure within ``tol`` per vertex.  R
    membership is computed only when ``eps`` is given and needs
    ``pi(w) > 0``.
    """
    delta = _check_delta(delta)
    tol = Fraction(tol)
    level = enumerate_level(n)
    if m is not None and w.suffix(m).rank < n:
        raise PreconditionError(f"rank(w_{m}) < {n}")

    pi_w = None
    if eps is not None:
        eps = Fraction(eps)
        if eps <= 0:
            raise PreconditionError("eps must be positive")
        if is_positive_boundary(w) is not Positivity.YES:
            raise PreconditionError(f"{w.spec()} is not a positive boundary word")
        pi_w = pi_infinite(w, tol)

    rows = []
    for v in level:
        if m is None:
            mu = mu_limit(w, v, tol)
        else:
            mu = IntervalValue.point(mu_finite(w, v, m))
        hp = h_prime_inf(v, w)
        pv = pi_finite(v)
        r = None
        if pi_w is not None:
            r = _r_membership(pv, pi_w, eps)
            refine = tol
            while r is None:
                refine /= 2**32
                if refine < Fraction(1, 2**4096):
                    raise ToleranceError(f"cannot decide R membership of {v.label}")
                pi_w = pi_infinite(w, refine)
                r = _r_membership(pv, pi_w, eps)
        rows.append(VertexRow(v, mu, hp, pv, in_P(hp, n, delta), hp >= l, r))

    def mass(pred):
        return interval_sum(row.mu for row in rows if pred(row))

    masses = {
        "total": mass(lambda r: True),
        "P": mass(lambda r: r.in_P),
        "Pbar": mass(lambda r: not r.in_P),
        "Q": mass(lambda r: r.in_Q),
        "Qbar": mass(lambda r: not r.in_Q),
    }
    if pi_w is not None:
        masses["R"] = mass(lambda r: r.in_R)
        masses["Rbar"] = mass(lambda r: not r.in_R)
    if 1 not in masses["total"]:
        raise EnclosureError(f"total mass {masses['total']} excludes 1")
    return LevelReport(
        w=w,
        n=n,
        delta=delta,
        l=l,
        eps=eps,
        rows=rows,
        pi_w=pi_w,
        m=m,
        bound_value=proof_bound(n, delta),
        masses=masses,
    )


def complement_P(w: InfiniteWordSpec, n: int, delta) -> list[Word]:
    delta = _check_delta(delta)
    return [v for v in enumerate_level(n) if not in_P(h_prime_inf(v, w), n, delta)]


def complement_Q(w: InfiniteWordSpec, n: int, l: int) -> list[Word]:
    return [v for v in enumerate_level(n) if h_prime_inf(v, w) < l]


@dataclass(frozen=True)
class SeriesPoint:
    n: int
    pbar_mass: IntervalValue
    bound: float
    approx: Optional[float] = None


def concentration_series(
    w: InfiniteWordSpec,
    delta,
    n_from: int,
    n_to: int,
    tol=DEFAULT_TOL,
    approx: bool = False,
    budget_seconds: Optional[float] = None,
) -> list[SeriesPoint]:
    """Mass of the complement of ``P(w, n, delta)`` for each ``n`` in range.

    ``tol`` bounds the width of each level's enclosure.  In approximate mode
    the masses are evaluated in floating point; the interval is then the
    degenerate point of the rounded float and carries no certificate.
    """
    delta = _check_delta(delta)
    tol = Fraction(tol)
    if n_to < n_from or n_from < 0:
        raise PreconditionError("need 0 <= n_from <= n_to")
    if is_positive_boundary(w) is not Positivity.YES:
        raise PreconditionError(f"{w.spec()} is not a positive boundary word")
    start = time.monotonic()
    out: list[SeriesPoint] = []
    for n in range(n_from, n_to + 1):
        if budget_seconds is not None and time.monotonic() - start > budget_seconds:
            raise BudgetExceeded(
                f"stopped before level {n}: budget of {budget_seconds}s spent", out
            )
        members = complement_P(w, n, delta)
        if approx:
            value = sum(mu_limit_approx(w, v) for v in members)
            out.append(
                SeriesPoint(n, IntervalValue.point(Fraction(value)), proof_bound(n, delta), value)
            )
            continue
        per_vertex = tol / max(len(members), 1)
        mass = interval_sum(mu_limit(w, v, per_vertex) for v in members)
        log.debug("level %d: Pbar mass %s", n, mass)
        out.append(SeriesPoint(n, mass, proof_bound(n, delta)))
    return out


# -- proof-stage checks -------------------------------------------------------


def pi_ratio_lower(n: int, delta) -> Fraction:
    """``prod_{i=a}^{a+b-1} (2i - 1)/(2i)`` with ``a = ceil((1-delta)n/2)``,
    ``b = ceil(delta n / 2)``."""
    delta = _check_delta(delta)
    a = ceil((1 - delta) * n / 2)
    b = ceil(delta * n / 2)
    return prod((Fraction(2 * i - 1, 2 * i) for i in range(a, a + b)), start=Fraction(1))


def pi_ratio_bounds_check(
    w: InfiniteWordSpec, delta, n: int, v: Word, tol=DEFAULT_TOL
) -> tuple[Fraction, IntervalValue]:
    """The lower bound on ``pi(v)/pi(w)`` for ``v`` in ``P(w, n, delta)``,
    alongside an enclosure of the ratio itself."""
    delta = _check_delta(delta)
    if n < 1 or v.rank != n:
        raise PreconditionError("need n >= 1 and v on level n")
    if is_positive_boundary(w) is not Positivity.YES:
        raise PreconditionError(f"{w.spec()} is not a positive boundary word")
    if not in_P(h_prime_inf(v, w), n, delta):
        raise PreconditionError(f"{v.label} is not in P(w, {n}, {delta})")
    ratio = pi_infinite(w, tol).reciprocal() * pi_finite(v)
    return pi_ratio_lower(n, delta), ratio


def ass_inequality_check(
    w: InfiniteWordSpec, n: int, delta, m: int
) -> tuple[Fraction, Fraction]:
    """Both sides of the path-splitting bound on the complement mass.

    Left: finite-stage mass of the complement of ``P(w, n, delta)``.  Right:
    sum over splits ``w_m = a b`` with ``rank(b) < (1-delta) n`` and integers
    ``k > delta n / 2`` of ``d(e, 2^k b) d(2^k, a) / d(e, w_m)``; terms with
    ``k > d(a)`` vanish and are dropped.
    """
    delta = _check_delta(delta)
    if m < n:
        raise PreconditionError("need m >= n")
    wm = w.suffix(m)
    total = d_to_empty(wm)
    lhs = Fraction(0)
    for v in complement_P(w, n, delta):
        lhs += d_to_empty(v) * d_count(v, wm)
    rhs = Fraction(0)
    k_min = math.floor(delta * n / 2) + 1
    for a, b in splits(wm):
        if not b.rank < (1 - delta) * n:
            continue
        for k in range(max(k_min, 1), a.twos + 1):
            rhs += d_to_empty(concat(twos(k), b)) * d_from_twos(a, k)
    return lhs / total, rhs / total


__all__ = [
    "BudgetExceeded",
    "DEFAULT_TOL",
    "EnclosureError",
    "LevelReport",
    "SeriesPoint",
    "ToleranceError",
    "VertexRow",
    "ass_inequality_check",
    "classify_level",
    "complement_P",
    "complement_Q",
    "concentration_series",
    "h_inf",
    "h_prime_inf",
    "in_P",
    "is_positive_boundary",
    "level_masses",
    "mu_finite",
    "mu_limit",
    "mu_limit_approx",
    "pi_finite",
    "pi_infinite",
    "pi_ratio_bounds_check",
    "pi_ratio_lower",
    "proof_bound",
]
