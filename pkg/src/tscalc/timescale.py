"""Finitely-representable time scales and their point topology.

A time scale here is a finite, ordered union of disjoint closed bounded
intervals ``[l_1, r_1] u ... u [l_n, r_n]`` with ``r_i < l_(i+1)``; a
degenerate interval (``l_i == r_i``) stands for an isolated point.  This
representation keeps the jump operators computable by binary search and lets
every integral decompose into classical integrals over the non-degenerate
components plus finitely many weighted point masses.

The forward jump ``sigma(t)`` is the least point of the scale strictly to the
right of ``t`` (clamped to ``t`` at the maximum); the backward jump ``rho(t)``
mirrors it on the left.  The graininess functions ``mu(t) = sigma(t) - t`` and
``nu(t) = t - rho(t)`` measure the gap to the neighbouring point and classify
``t`` as right/left dense (zero gap) or scattered (positive gap).

Membership tests compare endpoints exactly: a float is either a point of the
scale or it is not.  No tolerance is applied anywhere in this module.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import DomainError, InputError

__all__ = [
    "TimeScale",
    "PointInfo",
    "KappaSets",
    "build_time_scale",
    "point_info",
    "sigma",
    "rho",
    "kappa_restrictions",
    "grid",
]


@dataclass(frozen=True)
class TimeScale:
    """Ordered union of disjoint closed intervals, degenerate ones allowed."""

    components: tuple[tuple[float, float], ...]

    @property
    def min(self) -> float:
        return self.components[0][0]

    @property
    def max(self) -> float:
        return self.components[-1][1]

    @property
    def is_discrete(self) -> bool:
        """True when every component is a single isolated point."""
        return all(l == r for l, r in self.components)

    @cached_property
    def _lefts(self) -> tuple[float, ...]:
        return tuple(l for l, _ in self.components)

    def component_index(self, t: float) -> int:
        """Index of the component containing ``t``, or -1 when ``t`` is outside."""
        i = bisect_right(self._lefts, t) - 1
        if i >= 0 and t <= self.components[i][1]:
            return i
        return -1

    def __contains__(self, t: float) -> bool:
        return self.component_index(t) >= 0


@dataclass(frozen=True)
class PointInfo:
    """Jump operators and graininess of one point of a time scale."""

    t: float
    sigma: float
    rho: float
    mu: float
    nu: float

    @property
    def right_scattered(self) -> bool:
        return self.mu > 0

    @property
    def right_dense(self) -> bool:
        return self.mu == 0

    @property
    def left_scattered(self) -> bool:
        return self.nu > 0

    @property
    def left_dense(self) -> bool:
        return self.nu == 0

    @property
    def is_isolated(self) -> bool:
        return self.right_scattered and self.left_scattered

    @property
    def is_dense(self) -> bool:
        return self.right_dense and self.left_dense

    @property
    def classification(self) -> tuple[str, str]:
        right = "right-scattered" if self.right_scattered else "right-dense"
        left = "left-scattered" if self.left_scattered else "left-dense"
        return (right, left)


class KappaSets(NamedTuple):
    """The three derivative domains carved out of a time scale.

    ``upper`` drops a left-scattered maximum (delta-derivative domain),
    ``lower`` drops a right-scattered minimum (nabla-derivative domain), and
    ``both`` is their intersection (diamond-derivative domain).  ``both`` is
    ``None`` exactly when the intersection is empty, which happens only for a
    scale made of two isolated points.
    """

    upper: TimeScale
    lower: TimeScale
    both: Optional[TimeScale]


def build_time_scale(intervals: Iterable[Sequence[float]]) -> TimeScale:
    """Normalise a list of closed intervals into a canonical ``TimeScale``.

    Intervals are sorted and overlapping or touching ones are merged, so the
    result is independent of input order and two inputs describing the same
    point set produce equal values.
    """
    cleaned: list[tuple[float, float]] = []
    for pair in intervals:
        l, r = float(pair[0]), float(pair[1])
        if not (math.isfinite(l) and math.isfinite(r)):
            raise InputError(f"interval ({l}, {r}) has a non-finite endpoint")
        if l > r:
            raise InputError(f"interval ({l}, {r}) has left endpoint above right")
        cleaned.append((l, r))
    if not cleaned:
        raise InputError("a time scale needs at least one interval")
    cleaned.sort()
    merged = [cleaned[0]]
    for l, r in cleaned[1:]:
        pl, pr = merged[-1]
        if l <= pr:  # closed intervals touching at an endpoint form one interval
            merged[-1] = (pl, max(pr, r))
        else:
            merged.append((l, r))
    return TimeScale(tuple(merged))


def _require_member(ts: TimeScale, t: float) -> int:
    i = ts.component_index(t)
    if i < 0:
        raise DomainError(f"{t!r} is not a point of the time scale")
    return i


def sigma(ts: TimeScale, t: float) -> float:
    """Forward jump: least point strictly after ``t``, clamped at the maximum."""
    i = _require_member(ts, t)
    if t < ts.components[i][1]:
        return t
    if i + 1 < len(ts.components):
        return ts.components[i + 1][0]
    return t


def rho(ts: TimeScale, t: float) -> float:
    """Backward jump: greatest point strictly before ``t``, clamped at the minimum."""
    i = _require_member(ts, t)
    if t > ts.components[i][0]:
        return t
    if i > 0:
        return ts.components[i - 1][1]
    return t


def point_info(ts: TimeScale, t: float) -> PointInfo:
    """Jump operators, graininess, and density classification at ``t``."""
    s = sigma(ts, t)
    r = rho(ts, t)
    return PointInfo(t=t, sigma=s, rho=r, mu=s - t, nu=t - r)


def _drops_max(ts: TimeScale) -> bool:
    # the maximum is left-scattered iff the last component is an isolated point
    # that has a predecessor; a single-point scale keeps its point (rho clamps)
    c = ts.components
    return len(c) > 1 and c[-1][0] == c[-1][1]


def _drops_min(ts: TimeScale) -> bool:
    c = ts.components
    return len(c) > 1 and c[0][0] == c[0][1]


def kappa_restrictions(ts: TimeScale) -> KappaSets:
    """Restrict ``ts`` to the domains where derivatives are defined."""
    comps = ts.components
    lo = 1 if _drops_min(ts) else 0
    hi = len(comps) - 1 if _drops_max(ts) else len(comps)
    upper = TimeScale(comps[: len(comps) - 1]) if _drops_max(ts) else ts
    lower = TimeScale(comps[1:]) if _drops_min(ts) else ts
    both = TimeScale(comps[lo:hi]) if lo < hi else None
    return KappaSets(upper=upper, lower=lower, both=both)


def grid(ts: TimeScale, max_step: float) -> list[float]:
    """Strictly increasing sample of the scale.

    Every isolated point and every component endpoint is included; interior
    points of non-degenerate components are spaced at most ``max_step`` apart.
    """
    if not (max_step > 0) or not math.isfinite(max_step):
        raise InputError(f"max_step must be positive and finite, got {max_step!r}")
    pts: list[float] = []
    for l, r in ts.components:
        if l == r:
            pts.append(l)
            continue
        n = max(1, math.ceil((r - l) / max_step))
        width = r - l
        pts.extend(l + width * j / n for j in range(n))
        pts.append(r)
    return pts
