"""Interval and LR-type fuzzy-number primitives.

A symmetric trapezoidal fuzzy number is written ``<center, spread>``; its
support is the interval ``[center - spread, center + spread]``.  Pairs of
fuzzy quantities are ordered through a dominance index: the peak difference
scaled by the facing spreads.  An index of at least 1 is total dominance,
anything in (0, 1) is partial dominance, and 0 leaves the pair
non-comparable, where the decision maker's attitude (pessimistic or
optimistic) breaks the tie on spread.

All types are immutable values and every operation is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class DegenerateComparisonError(ValueError):
    """Dominance index requested for a pair of crisp (zero-spread) numbers."""


class Attitude(Enum):
    """Tie-break policy when two numbers share the same center."""

    PESSIMISTIC = "pessimistic"  # prefers the smaller support
    OPTIMISTIC = "optimistic"  # prefers the larger support


class Relation(Enum):
    TOTALLY_LESS = "totally-less"
    PARTIALLY_LESS = "partially-less"
    NON_COMPARABLE = "non-comparable"


class Choice(Enum):
    A = "a"
    B = "b"


@dataclass(frozen=True)
class Interval:
    """Closed real interval [lo, hi]."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: [{self.lo}, {self.hi}]")

    @classmethod
    def from_midpoint(cls, midpoint: float, halfwidth: float) -> "Interval":
        if halfwidth < 0:
            raise ValueError(f"halfwidth must be nonnegative, got {halfwidth}")
        return cls(midpoint - halfwidth, midpoint + halfwidth)

    @property
    def midpoint(self) -> float:
        return (self.lo + self.hi) / 2

    @property
    def halfwidth(self) -> float:
        return (self.hi - self.lo) / 2


def interval_add(i: Interval, j: Interval) -> Interval:
    """Endpoint-wise sum; midpoints and halfwidths add."""
    return Interval(i.lo + j.lo, i.hi + j.hi)


def di_interval(i: Interval, j: Interval) -> float:
    """Dominance index of ``i`` over ``j``: positive means ``i`` sits lower.

    Defined as (midpoint(j) - midpoint(i)) / (halfwidth(i) + halfwidth(j)).
    Antisymmetric in its arguments.  Undefined when both intervals are
    degenerate points.
    """
    width = i.halfwidth + j.halfwidth
    if width == 0:
        raise DegenerateComparisonError(
            "both intervals are points; compare their midpoints directly"
        )
    return (j.midpoint - i.midpoint) / width


@dataclass(frozen=True)
class LRTriple:
    """Fuzzy number as (left spread, peak, right spread), spreads >= 0."""

    left: float
    peak: float
    right: float

    def __post_init__(self) -> None:
        if self.left < 0 or self.right < 0:
            raise ValueError(f"spreads must be nonnegative, got ({self.left}, {self.right})")


@dataclass(frozen=True)
class FuzzyNum:
    """Symmetric trapezoidal fuzzy number <center, spread>."""

    center: float
    spread: float

    def __post_init__(self) -> None:
        if self.spread < 0:
            raise ValueError(f"spread must be nonnegative, got {self.spread}")

    def as_lr_triple(self) -> LRTriple:
        return LRTriple(self.spread, self.center, self.spread)

    def support(self) -> Interval:
        return Interval(self.center - self.spread, self.center + self.spread)

    @property
    def is_crisp(self) -> bool:
        return self.spread == 0

    def __str__(self) -> str:
        return f"<{self.center}, {self.spread}>"


@dataclass(frozen=True)
class TrapezoidMF:
    """Trapezoidal membership function with knots a <= b <= c <= d."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        if not (self.a <= self.b <= self.c <= self.d):
            raise ValueError(
                f"trapezoid knots out of order: ({self.a}, {self.b}, {self.c}, {self.d})"
            )


def trapezoid_eval(x: float, mf: TrapezoidMF) -> float:
    """Membership grade of ``x`` under ``mf``, in [0, 1].

    Zero outside [a, d], one on the plateau [b, c], linear on the edges.
    A degenerate edge (a == b or c == d) evaluates to 1 at the shared point.
    """
    if x < mf.a or x > mf.d:
        return 0.0
    if mf.b <= x <= mf.c:
        return 1.0
    if x < mf.b:
        return (x - mf.a) / (mf.b - mf.a)
    return (mf.d - x) / (mf.d - mf.c)


def fuzzy_to_membership(f: FuzzyNum, plateau_fraction: float = 0.5) -> TrapezoidMF:
    """Render <m, w> as a trapezoid with support exactly [m - w, m + w].

    The plateau occupies ``plateau_fraction`` of the spread on each side of
    the center; 0 gives a triangle, 1 a rectangle.  The fraction is a
    rendering convention only and never feeds the solver.
    """
    if not 0 <= plateau_fraction <= 1:
        raise ValueError(f"plateau_fraction must be in [0, 1], got {plateau_fraction}")
    m, w = f.center, f.spread
    rho = plateau_fraction
    return TrapezoidMF(m - w, m - rho * w, m + rho * w, m + w)


def di_fuzzy(a: LRTriple, b: LRTriple) -> float:
    """Dominance index of ``a`` over ``b``.

    (peak(b) - peak(a)) / (right(a) + left(b)).  Positive means ``a`` is the
    smaller number, i.e. preferred in the sense of minimization; at least 1
    is total dominance.  Undefined when the facing spreads are both zero.
    """
    denom = a.right + b.left
    if denom == 0:
        raise DegenerateComparisonError(
            "facing spreads are both zero; compare the peaks directly"
        )
    return (b.peak - a.peak) / denom


@dataclass(frozen=True)
class Ranking:
    """Classification of one fuzzy number against another.

    ``di`` keeps the sign of the oriented index: positive means the first
    operand dominates in minimization, negative that the reversed
    proposition holds (to the same degree); the relation classifies the
    magnitude.  Callers wanting the reversed reading query rank(b, a).
    """

    relation: Relation
    di: float


def _classify(di: float) -> Relation:
    magnitude = abs(di)
    if magnitude >= 1:
        return Relation.TOTALLY_LESS
    if magnitude > 0:
        return Relation.PARTIALLY_LESS
    return Relation.NON_COMPARABLE


def rank(a: LRTriple, b: LRTriple) -> Ranking:
    """Rank ``a`` against ``b`` by dominance index.

    Crisp-versus-crisp pairs, where the index is undefined, fall back to a
    direct peak comparison: the index degenerates to +/-infinity (total
    dominance) or 0 (non-comparable equals).
    """
    if a.right + b.left == 0:
        diff = b.peak - a.peak
        di = math.inf if diff > 0 else (-math.inf if diff < 0 else 0.0)
    else:
        di = di_fuzzy(a, b)
    return Ranking(_classify(di), di)


def prefer_min(a: FuzzyNum, b: FuzzyNum, attitude: Attitude = Attitude.PESSIMISTIC) -> Choice:
    """Which of two fuzzy numbers a minimizer should pick.

    The smaller center wins outright.  Equal centers fall back to the
    attitude: pessimistic takes the smaller spread, optimistic the larger.
    Exact ties go to the first argument.
    """
    if a.center != b.center:
        return Choice.A if a.center < b.center else Choice.B
    return _prefer_spread(a, b, attitude)


def prefer_max(a: FuzzyNum, b: FuzzyNum, attitude: Attitude = Attitude.PESSIMISTIC) -> Choice:
    """Mirror of :func:`prefer_min` for a maximizer; same spread policy."""
    if a.center != b.center:
        return Choice.A if a.center > b.center else Choice.B
    return _prefer_spread(a, b, attitude)


def _prefer_spread(a: FuzzyNum, b: FuzzyNum, attitude: Attitude) -> Choice:
    if a.spread == b.spread:
        return Choice.A
    narrower = Choice.A if a.spread < b.spread else Choice.B
    if attitude is Attitude.PESSIMISTIC:
        return narrower
    return Choice.B if narrower is Choice.A else Choice.A
