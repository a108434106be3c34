"""Delta, nabla, and diamond-alpha derivatives and integrals.

At a right-scattered point the delta derivative is the exact forward
difference quotient ``(f(sigma(t)) - f(t)) / mu(t)``; at a right-dense point
it is approximated by a one-sided fourth-order finite-difference stencil kept
inside the containing interval, with step ``dense_diff_step_factor`` times the
interval length.  The nabla derivative mirrors this on the left, and the
diamond-alpha derivative is the convex combination
``alpha * delta + (1 - alpha) * nabla``.

Integrals decompose into classical integrals over the non-degenerate
components (adaptive Simpson to ``abs_tol`` with a recursion depth cap) plus
exact weighted sums over scattered points: the delta integral weights each
right-scattered ``t`` in ``[a, b)`` by ``mu(t)``, the nabla integral weights
each left-scattered ``t`` in ``(a, b]`` by ``nu(t)``.  The diamond-alpha
integral is computed literally as ``alpha * delta + (1 - alpha) * nabla`` of
the same two evaluations, so its linearity in alpha is exact in floating
point and the endpoint weights reproduce the pure modes bit for bit.

Double integrals are strictly iterated, inner ``x`` then outer ``y``; no
order exchange is assumed anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .errors import DomainError, InputError
from .timescale import TimeScale, _drops_max, _drops_min, rho as _rho, sigma as _sigma

__all__ = [
    "Alpha",
    "IntegralMode",
    "QuadratureConfig",
    "DEFAULT_QUADRATURE",
    "DELTA",
    "NABLA",
    "ScalarField1D",
    "ScalarField2D",
    "diamond",
    "parse_mode",
    "differentiate",
    "integrate",
    "double_integrate",
    "partial_diamond",
    "compose_jump",
]

ScalarField1D = Callable[[float], float]
ScalarField2D = Callable[[float, float], float]


@dataclass(frozen=True)
class Alpha:
    """Convex weight between the delta (1) and nabla (0) endpoints."""

    value: float

    def __post_init__(self) -> None:
        v = self.value
        if not (isinstance(v, (int, float)) and math.isfinite(v) and 0.0 <= v <= 1.0):
            raise InputError(f"alpha must lie in [0, 1], got {v!r}")


@dataclass(frozen=True)
class IntegralMode:
    """One of the three evaluation modes: delta, nabla, or diamond(alpha)."""

    kind: str
    alpha: Optional[Alpha] = None

    def __post_init__(self) -> None:
        if self.kind not in ("delta", "nabla", "diamond"):
            raise InputError(f"unknown mode kind {self.kind!r}")
        if (self.kind == "diamond") != (self.alpha is not None):
            raise InputError("diamond mode carries an alpha; delta/nabla do not")


DELTA = IntegralMode("delta")
NABLA = IntegralMode("nabla")


def diamond(alpha: Alpha | float) -> IntegralMode:
    """Diamond-alpha mode with the given weight."""
    a = alpha if isinstance(alpha, Alpha) else Alpha(float(alpha))
    return IntegralMode("diamond", a)


def parse_mode(text: str) -> IntegralMode:
    """Parse ``"delta"``, ``"nabla"``, or ``"diamond:<alpha>"``."""
    if text == "delta":
        return DELTA
    if text == "nabla":
        return NABLA
    if text.startswith("diamond:"):
        try:
            value = float(text.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad alpha in mode string {text!r}") from None
        return diamond(value)
    raise InputError(f"unknown mode string {text!r}")


@dataclass(frozen=True)
class QuadratureConfig:
    """Numeric knobs for the dense parts of the calculus."""

    abs_tol: float = 1e-10
    max_depth: int = 40
    dense_diff_step_factor: float = 1e-6

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0 and math.isfinite(self.abs_tol)):
            raise InputError(f"abs_tol must be positive, got {self.abs_tol!r}")
        if self.max_depth < 1:
            raise InputError(f"max_depth must be at least 1, got {self.max_depth!r}")
        if not (0 < self.dense_diff_step_factor < 1):
            raise InputError("dense_diff_step_factor must lie in (0, 1)")


DEFAULT_QUADRATURE = QuadratureConfig()


# --------------------------------------------------------------------------
# quadrature

# refinement stops once the local error estimate falls below this multiple
# of the local integral of |f|: past that point the requested tolerance asks
# for digits double precision does not carry, and the recursion would chase
# roundoff noise across the whole segment.  The Richardson difference
# cancels catastrophically, so its noise reaches ~1e2 ulps of the local
# sums; the margin above that costs at most ~1e-12 relative error
_ROUNDOFF_FLOOR = 1e-13


def _adaptive_simpson(f: ScalarField1D, a: float, b: float, tol: float, max_depth: int) -> float:
    m = 0.5 * (a + b)
    fa, fm, fb = f(a), f(m), f(b)
    whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0
    return _simpson_step(f, a, m, b, fa, fm, fb, whole, tol, max_depth)


def _simpson_step(f, a, m, b, fa, fm, fb, whole, tol, depth):
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = (m - a) * (fa + 4.0 * flm + fm) / 6.0
    right = (b - m) * (fm + 4.0 * frm + fb) / 6.0
    err = left + right - whole
    floor = _ROUNDOFF_FLOOR * (m - a) * (
        abs(fa) + 4.0 * abs(flm) + 2.0 * abs(fm) + 4.0 * abs(frm) + abs(fb)
    )
    if depth <= 0 or abs(err) <= max(15.0 * tol, floor):
        return left + right + err / 15.0
    half = 0.5 * tol
    return (
        _simpson_step(f, a, lm, m, fa, flm, fm, left, half, depth - 1)
        + _simpson_step(f, m, rm, b, fm, frm, fb, right, half, depth - 1)
    )


# --------------------------------------------------------------------------
# scale decomposition (cached per scale and limits; TimeScale is hashable)

@lru_cache(maxsize=None)
def _scatter_entries(ts: TimeScale, a: float, b: float) -> tuple[tuple[float, float, float], ...]:
    """``(t, delta weight, nabla weight)`` for scattered points seen by [a, b]."""
    comps = ts.components
    weights: dict[float, list[float]] = {}
    for i in range(len(comps) - 1):
        t = comps[i][1]  # right-scattered
        if a <= t < b:
            weights.setdefault(t, [0.0, 0.0])[0] = comps[i + 1][0] - t
        s = comps[i + 1][0]  # left-scattered
        if a < s <= b:
            weights.setdefault(s, [0.0, 0.0])[1] = s - comps[i][1]
    return tuple((t, w[0], w[1]) for t, w in sorted(weights.items()))


@lru_cache(maxsize=None)
def _dense_segments(ts: TimeScale, a: float, b: float) -> tuple[tuple[float, float], ...]:
    segs = []
    for l, r in ts.components:
        lo, hi = max(l, a), min(r, b)
        if hi > lo:
            segs.append((lo, hi))
    return tuple(segs)


# --------------------------------------------------------------------------
# integration

def integrate(
    ts: TimeScale,
    f: ScalarField1D,
    a: float,
    b: float,
    mode: IntegralMode,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> float:
    """Integral of ``f`` over ``[a, b]`` in the given mode.

    Both limits must be points of the scale with ``a <= b``; an empty range
    integrates to exactly 0.0.
    """
    if ts.component_index(a) < 0:
        raise InputError(f"lower limit {a!r} is not a point of the time scale")
    if ts.component_index(b) < 0:
        raise InputError(f"upper limit {b!r} is not a point of the time scale")
    if a > b:
        raise InputError("integration limits must satisfy a <= b")
    if a == b:
        return 0.0

    dense = 0.0
    segs = _dense_segments(ts, a, b)
    if segs:
        tol = cfg.abs_tol / len(segs)
        for lo, hi in segs:
            dense += _adaptive_simpson(f, lo, hi, tol, cfg.max_depth)

    dsum = 0.0
    nsum = 0.0
    for t, wd, wn in _scatter_entries(ts, a, b):
        v = f(t)
        if wd:
            dsum += wd * v
        if wn:
            nsum += wn * v

    if mode.kind == "delta":
        return dense + dsum
    if mode.kind == "nabla":
        return dense + nsum
    al = mode.alpha.value
    return al * (dense + dsum) + (1.0 - al) * (dense + nsum)


def double_integrate(
    ts: TimeScale,
    f: ScalarField2D,
    a: float,
    b: float,
    mode: IntegralMode,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> float:
    """Iterated integral over ``[a, b]^2``: inner in ``x``, outer in ``y``."""

    def outer(y: float) -> float:
        return integrate(ts, lambda x: f(x, y), a, b, mode, cfg)

    return integrate(ts, outer, a, b, mode, cfg)


# --------------------------------------------------------------------------
# differentiation

def _delta_value(ts: TimeScale, f: ScalarField1D, t: float, i: int, cfg: QuadratureConfig) -> float:
    comps = ts.components
    l, r = comps[i]
    if t == r and i + 1 < len(comps):  # right-scattered: exact quotient
        s = comps[i + 1][0]
        return (f(s) - f(t)) / (s - t)
    if l == r:
        raise DomainError(f"derivative undefined at {t!r}: no neighbourhood inside the scale")
    length = r - l
    if t < r:
        h = min(cfg.dense_diff_step_factor * length, (r - t) / 4.0)
        return _forward_stencil(f, t, h)
    # right-dense by clamping at the scale maximum: differentiate from the left
    h = min(cfg.dense_diff_step_factor * length, (t - l) / 4.0)
    return _backward_stencil(f, t, h)


def _nabla_value(ts: TimeScale, f: ScalarField1D, t: float, i: int, cfg: QuadratureConfig) -> float:
    comps = ts.components
    l, r = comps[i]
    if t == l and i > 0:  # left-scattered: exact quotient
        s = comps[i - 1][1]
        return (f(t) - f(s)) / (t - s)
    if l == r:
        raise DomainError(f"derivative undefined at {t!r}: no neighbourhood inside the scale")
    length = r - l
    if t > l:
        h = min(cfg.dense_diff_step_factor * length, (t - l) / 4.0)
        return _backward_stencil(f, t, h)
    # left-dense by clamping at the scale minimum: differentiate from the right
    h = min(cfg.dense_diff_step_factor * length, (r - t) / 4.0)
    return _forward_stencil(f, t, h)


def _forward_stencil(f: ScalarField1D, t: float, h: float) -> float:
    return (
        -25.0 * f(t) + 48.0 * f(t + h) - 36.0 * f(t + 2 * h)
        + 16.0 * f(t + 3 * h) - 3.0 * f(t + 4 * h)
    ) / (12.0 * h)


def _backward_stencil(f: ScalarField1D, t: float, h: float) -> float:
    return (
        25.0 * f(t) - 48.0 * f(t - h) + 36.0 * f(t - 2 * h)
        - 16.0 * f(t - 3 * h) + 3.0 * f(t - 4 * h)
    ) / (12.0 * h)


def differentiate(
    ts: TimeScale,
    f: ScalarField1D,
    t: float,
    mode: IntegralMode,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> float:
    """Derivative of ``f`` at ``t`` in the given mode.

    The point must lie in the matching kappa restriction: the delta derivative
    excludes a left-scattered maximum, the nabla derivative a right-scattered
    minimum, and the diamond derivative excludes both.
    """
    i = ts.component_index(t)
    if i < 0:
        raise DomainError(f"{t!r} is not a point of the time scale")
    need_delta = mode.kind != "nabla"
    need_nabla = mode.kind != "delta"
    if need_delta and t == ts.max and _drops_max(ts):
        raise DomainError(f"delta derivative undefined at the left-scattered maximum {t!r}")
    if need_nabla and t == ts.min and _drops_min(ts):
        raise DomainError(f"nabla derivative undefined at the right-scattered minimum {t!r}")
    if mode.kind == "delta":
        return _delta_value(ts, f, t, i, cfg)
    if mode.kind == "nabla":
        return _nabla_value(ts, f, t, i, cfg)
    al = mode.alpha.value
    return al * _delta_value(ts, f, t, i, cfg) + (1.0 - al) * _nabla_value(ts, f, t, i, cfg)


def partial_diamond(
    ts: TimeScale,
    f: ScalarField2D,
    axis: int,
    point: tuple[float, float],
    alpha: Alpha | float,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> float:
    """Diamond-alpha partial derivative along one axis at a fixed point.

    ``axis`` is 1 to vary the first coordinate and 2 to vary the second; the
    varied coordinate must admit both one-sided derivatives.
    """
    x0, y0 = point
    if axis == 1:
        return differentiate(ts, lambda x: f(x, y0), x0, diamond(alpha), cfg)
    if axis == 2:
        return differentiate(ts, lambda y: f(x0, y), y0, diamond(alpha), cfg)
    raise InputError(f"axis must be 1 or 2, got {axis!r}")


def compose_jump(ts: TimeScale, f: ScalarField1D, which: str) -> ScalarField1D:
    """Compose a field with a jump operator: ``f(sigma(t))`` or ``f(rho(t))``."""
    if which == "sigma":
        return lambda t: f(_sigma(ts, t))
    if which == "rho":
        return lambda t: f(_rho(ts, t))
    raise InputError(f"which must be 'sigma' or 'rho', got {which!r}")
