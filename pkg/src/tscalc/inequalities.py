"""Evaluators for Holder- and Hardy-type inequalities on time scales.

Every evaluator computes the two sides of one inequality with the
diamond-alpha calculus from :mod:`tscalc.calculus` and returns an
:class:`IneqReport` whose ``holds`` flag is derived from the reported numbers
and tolerance alone: ``lhs <= rhs + tolerance * max(|lhs|, |rhs|, 1)``.
Nothing is clamped or patched to force a verdict; if the numerics say the
inequality failed, the report says so.

The Hardy-type evaluators work against a nonnegative kernel ``K(x, y)`` and a
pair of strictly positive weight fields.  From these they derive the two
moment fields

    F(x) = integral of K(x, y) * psi(y)^(-p)  over y in [a, b],
    G(y) = integral of K(x, y) * phi(x)^(-q)  over x in [a, b],

and compare the kernel-weighted bilinear form against the product of weighted
p- and q-norms (the "bilinear" report), as well as the equivalent single-sided
form obtained by eliminating ``g`` (the "dual" report).  The second factor of
the bilinear bound is raised to ``1/q``; with symmetric exponents
``p = q = 2`` this coincides with the ``1/p`` variant that sometimes appears
in print, and the Holder step in the derivation forces ``1/q`` in general.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

from .calculus import (
    DEFAULT_QUADRATURE,
    Alpha,
    QuadratureConfig,
    ScalarField1D,
    ScalarField2D,
    diamond,
    integrate,
)
from .errors import DegenerateKernelError, InputError
from .timescale import TimeScale, grid

__all__ = [
    "DEFAULT_TOLERANCE",
    "HolderPair",
    "BoundsMN",
    "WeightPair",
    "Kernel",
    "GeneralHardySpec",
    "IneqReport",
    "HardyReports",
    "make_report",
    "reverse_holder",
    "holder_2d",
    "cauchy_schwarz_2d",
    "hardy_weights",
    "hardy_pair",
    "hardy_dual_g",
    "triangular_kernel",
    "bounded_hardy",
    "general_kernel_pair",
    "equality_witness",
    "young",
]

DEFAULT_TOLERANCE = 1e-9

# tolerance for "computed weight exceeds its declared bound" checks, which
# must absorb quadrature noise without hiding a genuinely wrong bound
_BOUND_SLACK = 1e-12


# ---------------------------------------------------------------------------
# value types

@dataclass(frozen=True)
class HolderPair:
    """Conjugate exponents ``p > 1`` and ``q = p / (p - 1)``."""

    p: float
    q: float = field(init=False)

    def __post_init__(self) -> None:
        if not (isinstance(self.p, (int, float)) and math.isfinite(self.p) and self.p > 1):
            raise InputError(f"p must be a finite real > 1, got {self.p!r}")
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "q", self.p / (self.p - 1.0))
        assert abs(1.0 / self.p + 1.0 / self.q - 1.0) <= 1e-12


@dataclass(frozen=True)
class BoundsMN:
    """Positive lower/upper bounds ``0 < m <= M`` for a ratio field."""

    m: float
    M: float

    def __post_init__(self) -> None:
        if not (self.m > 0 and math.isfinite(self.m) and math.isfinite(self.M)):
            raise InputError(f"bounds need 0 < m and finite M, got ({self.m!r}, {self.M!r})")
        if self.m > self.M:
            raise InputError(f"lower bound {self.m!r} exceeds upper bound {self.M!r}")


@dataclass(frozen=True)
class WeightPair:
    """Strictly positive weight fields; positivity is checked where evaluated."""

    phi: ScalarField1D
    psi: ScalarField1D

    def phi_at(self, x: float) -> float:
        return _positive(self.phi, x, "phi")

    def psi_at(self, y: float) -> float:
        return _positive(self.psi, y, "psi")


@dataclass(frozen=True)
class Kernel:
    """Nonnegative two-place kernel; the sign is checked where evaluated."""

    fn: ScalarField2D

    def __call__(self, x: float, y: float) -> float:
        v = self.fn(x, y)
        if v < 0:
            raise InputError(f"kernel is negative at ({x!r}, {y!r}): {v!r}")
        return v


@dataclass(frozen=True)
class GeneralHardySpec:
    """Data for the general-kernel inequality pair.

    ``divisor`` couples the two coordinates (it divides ``F(x) * G(y)``),
    ``x_moment`` and ``y_moment`` weight the two moment integrals, and
    ``constant`` is the multiplicative constant on the bound.  All three maps
    must be strictly positive where evaluated.
    """

    divisor: ScalarField2D
    x_moment: Callable[[float], float]
    y_moment: Callable[[float], float]
    constant: float

    def __post_init__(self) -> None:
        if not (self.constant > 0 and math.isfinite(self.constant)):
            raise InputError(f"constant must be positive and finite, got {self.constant!r}")


@dataclass(frozen=True)
class IneqReport:
    """Two evaluated sides of an inequality plus the derived verdict."""

    lhs: float
    rhs: float
    abs_slack: float
    rel_slack: float
    holds: bool
    tolerance: float

    def as_dict(self) -> dict:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_slack": self.abs_slack,
            "rel_slack": self.rel_slack,
            "holds": self.holds,
            "tolerance": self.tolerance,
        }


class HardyReports(NamedTuple):
    """The two reports a Hardy-type evaluator produces."""

    bilinear: IneqReport
    dual: IneqReport


def make_report(lhs: float, rhs: float, tolerance: float = DEFAULT_TOLERANCE) -> IneqReport:
    """Assemble a report; ``holds`` follows from the three numbers alone."""
    scale_ref = max(abs(lhs), abs(rhs), 1.0)
    abs_slack = rhs - lhs
    if math.isinf(abs_slack) and math.isinf(scale_ref):
        # one side saturated: report the limit of (rhs - lhs) / scale
        rel_slack = math.copysign(1.0, abs_slack)
    else:
        rel_slack = abs_slack / scale_ref
    return IneqReport(
        lhs=lhs,
        rhs=rhs,
        abs_slack=abs_slack,
        rel_slack=rel_slack,
        holds=lhs <= rhs + tolerance * scale_ref,
        tolerance=tolerance,
    )


# ---------------------------------------------------------------------------
# shared helpers

def _positive(fn: ScalarField1D, t: float, name: str) -> float:
    v = fn(t)
    if not v > 0:
        raise InputError(f"{name}({t!r}) = {v!r}; a strictly positive value is required")
    return v


def _nonneg_power(value: float, exponent: float, what: str) -> float:
    # value is an integral of a nonnegative integrand; quadrature may leave
    # harmless negative dust, which is clamped before a fractional power
    if value < 0:
        if value > -1e-9:
            value = 0.0
        else:
            raise InputError(f"{what} = {value!r} is negative; integrand must be nonnegative")
    return value ** exponent


def _default_grid(ts: TimeScale, a: float, b: float) -> list[float]:
    step = (b - a) / 256.0 if b > a else 1.0
    return [t for t in grid(ts, step) if a <= t <= b]


def _memoized(fn: ScalarField1D) -> ScalarField1D:
    cache: dict[float, float] = {}

    def wrapped(t: float) -> float:
        v = cache.get(t)
        if v is None:
            v = fn(t)
            cache[t] = v
        return v

    return wrapped


# ---------------------------------------------------------------------------
# reverse Holder

def reverse_holder(
    ts: TimeScale,
    a: float,
    b: float,
    alpha: Alpha | float,
    f: ScalarField1D,
    g: ScalarField1D,
    pair: HolderPair,
    bounds: Optional[BoundsMN] = None,
    *,
    tolerance: float = DEFAULT_TOLERANCE,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> IneqReport:
    """Reverse Holder inequality for positive fields with a bounded ratio.

    With ``0 < m <= f(t)^p / g(t)^q <= M`` on ``[a, b]``, the product of the
    p- and q-norms is bounded by ``(M/m)^(1/(p*q))`` times the integral of
    ``f * g``.  When ``bounds`` is omitted, ``m`` and ``M`` are taken as the
    ratio extrema over the default sampling grid.
    """
    p, q = pair.p, pair.q
    pts = _default_grid(ts, a, b)
    fvals = [_positive(f, t, "f") for t in pts]
    gvals = [_positive(g, t, "g") for t in pts]
    if bounds is None:
        ratios = [fv**p / gv**q for fv, gv in zip(fvals, gvals)]
        bounds = BoundsMN(min(ratios), max(ratios))
    mode = diamond(alpha)
    int_fp = integrate(ts, lambda t: f(t) ** p, a, b, mode, cfg)
    int_gq = integrate(ts, lambda t: g(t) ** q, a, b, mode, cfg)
    int_fg = integrate(ts, lambda t: f(t) * g(t), a, b, mode, cfg)
    lhs = _nonneg_power(int_fp, 1.0 / p, "integral of f^p") * _nonneg_power(
        int_gq, 1.0 / q, "integral of g^q"
    )
    rhs = (bounds.M / bounds.m) ** (1.0 / (p * q)) * int_fg
    return make_report(lhs, rhs, tolerance)


# ---------------------------------------------------------------------------
# two-dimensional Holder and Cauchy-Schwarz

def holder_2d(
    ts: TimeScale,
    a: float,
    b: float,
    alpha: Alpha | float,
    h: ScalarField2D,
    f: ScalarField2D,
    g: ScalarField2D,
    pair: HolderPair,
    *,
    tolerance: float = DEFAULT_TOLERANCE,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> IneqReport:
    """Weighted two-dimensional Holder inequality over ``[a, b]^2``.

    The iterated integral of ``|h f g|`` is bounded by the product of the
    ``h``-weighted p-norm of ``f`` and q-norm of ``g``.
    """
    p, q = pair.p, pair.q
    mode = diamond(alpha)

    def iterated(fn: ScalarField2D) -> float:
        return integrate(
            ts, lambda y: integrate(ts, lambda x: fn(x, y), a, b, mode, cfg), a, b, mode, cfg
        )

    lhs = iterated(lambda x, y: abs(h(x, y) * f(x, y) * g(x, y)))
    norm_f = iterated(lambda x, y: abs(h(x, y)) * abs(f(x, y)) ** p)
    norm_g = iterated(lambda x, y: abs(h(x, y)) * abs(g(x, y)) ** q)
    rhs = _nonneg_power(norm_f, 1.0 / p, "weighted f-norm") * _nonneg_power(
        norm_g, 1.0 / q, "weighted g-norm"
    )
    return make_report(lhs, rhs, tolerance)


def cauchy_schwarz_2d(
    ts: TimeScale,
    a: float,
    b: float,
    alpha: Alpha | float,
    h: ScalarField2D,
    f: ScalarField2D,
    g: ScalarField2D,
    *,
    tolerance: float = DEFAULT_TOLERANCE,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> IneqReport:
    """Cauchy-Schwarz over ``[a, b]^2``: Holder with ``p = q = 2``, verbatim."""
    return holder_2d(
        ts, a, b, alpha, h, f, g, HolderPair(2.0), tolerance=tolerance, cfg=cfg
    )


# ---------------------------------------------------------------------------
# Hardy-type machinery

def hardy_weights(
    ts: TimeScale,
    a: float,
    b: float,
    alpha: Alpha | float,
    kernel: Kernel,
    w: WeightPair,
    pair: HolderPair,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> tuple[ScalarField1D, ScalarField1D]:
    """Kernel moments ``F(x)`` and ``G(y)`` against the dual weights.

    ``F`` integrates ``K(x, .) * psi^(-p)`` in the second slot and ``G``
    integrates ``K(., y) * phi^(-q)`` in the first.  Both are memoized per
    point, which keeps repeated use inside the inequality evaluators cheap;
    the fill is idempotent, so racing threads at worst duplicate work.
    """
    p, q = pair.p, pair.q
    mode = diamond(alpha)
    # on dense scales the moment integrals for different points revisit the
    # same quadrature nodes; caching the weight powers takes the repeated
    # pow/positivity work off the hot path
    psi_pow = _memoized(lambda y: w.psi_at(y) ** (-p))
    phi_pow = _memoized(lambda x: w.phi_at(x) ** (-q))

    def f_moment(x: float) -> float:
        return integrate(ts, lambda y: kernel(x, y) * psi_pow(y), a, b, mode, cfg)

    def g_moment(y: float) -> float:
        return integrate(ts, lambda x: kernel(x, y) * phi_pow(x), a, b, mode, cfg)

    return _memoized(f_moment), _memoized(g_moment)


def _hardy_reports(
    ts: TimeScale,
    a: float,
    b: float,
    alpha: Alpha | float,
    kernel: Kernel,
    f: ScalarField1D,
    g: ScalarField1D,
    w: WeightPair,
    pair: HolderPair,
    F: ScalarField1D,
    G: ScalarField1D,
    tolerance: float,
    cfg: QuadratureConfig,
) -> HardyReports:
    """Shared shape of the exact and bounded Hardy evaluations."""
    p, q = pair.p, pair.q
    mode = diamond(alpha)

    # the inner x-integral of the bilinear form is g(y) times the inner
    # integral of the dual form, so one memoized field feeds both
    inner = _memoized(
        lambda y: integrate(ts, lambda x: kernel(x, y) * f(x), a, b, mode, cfg)
    )

    bilinear_lhs = integrate(ts, lambda y: inner(y) * g(y), a, b, mode, cfg)
    x_norm = integrate(ts, lambda x: w.phi_at(x) ** p * F(x) * f(x) ** p, a, b, mode, cfg)
    y_norm = integrate(ts, lambda y: w.psi_at(y) ** q * G(y) * g(y) ** q, a, b, mode, cfg)
    bilinear_rhs = _nonneg_power(x_norm, 1.0 / p, "weighted f-moment") * _nonneg_power(
        y_norm, 1.0 / q, "weighted g-moment"
    )

    def dual_integrand(y: float) -> float:
        gy = G(y)
        if not gy > 0:
            # G(y) and the inner integral run over the same measure against a
            # positive weight, so a vanished moment forces a vanished inner
            # integral and the integrand's limit is 0 (happens at a boundary
            # point under a triangular kernel).  A positive inner integral
            # with no moment to divide by is genuinely degenerate.
            if abs(inner(y)) <= 1e-12:
                return 0.0
            raise DegenerateKernelError(
                f"kernel moment G({y!r}) = {gy!r} but the inner integral is"
                f" {inner(y)!r}; the dual form needs a positive moment"
            )
        return gy ** (1.0 - p) * w.psi_at(y) ** (-p) * _nonneg_power(
            inner(y), p, "inner kernel integral"
        )

    dual_lhs = integrate(ts, dual_integrand, a, b, mode, cfg)
    dual_rhs = x_norm

    return HardyReports(
        bilinear=make_report(bilinear_lhs, bilinear_rhs, tolerance),
        dual=make_report(dual_lhs, dual_rhs, tolerance),
    )


def hardy_pair(
    ts: TimeScale,
    a: float,
    b: float,
    alpha: Alpha | float,
    kernel: Kernel,
    f: ScalarField1D,
    g: ScalarField1D,
    w: WeightPair,
    pair: HolderPair,
    *,
    tolerance: float = DEFAULT_TOLERANCE,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> HardyReports:
    """Kernel-weighted Hardy inequality in both of its equivalent forms.

    The bilinear report compares the iterated integral of ``K f g`` with
    ``(integral of phi^p F f^p)^(1/p) * (integral of psi^q G g^q)^(1/q)``.
    The dual report eliminates ``g``: it compares the integral of
    ``G^(1-p) psi^(-p) (integral of K f)^p`` against the unexponentiated
    first factor.
    """
    F, G = hardy_weights(ts, a, b, alpha, kernel, w, pair, cfg)
    return _hardy_reports(ts, a, b, alpha, kernel, f, g, w, pair, F, G, tolerance, cfg)


def hardy_dual_g(
    ts: TimeScale,
    a: float,
    b: float,
    alpha: Alpha | float,
    kernel: Kernel,
    f: ScalarField1D,
    w: WeightPair,
    pair: HolderPair,
    *,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> ScalarField1D:
    """The extremal ``g`` that turns the bilinear form into the dual form.

    ``g(y) = G(y)^(1-p) * psi(y)^(-p) * (integral of K(., y) f)^(p-1)``; a
    vanishing moment ``G(y)`` makes the construction degenerate.
    """
    p = pair.p
    _, G = hardy_weights(ts, a, b, alpha, kernel, w, pair, cfg)
    mode = diamond(alpha)
    inner = _memoized(
        lambda y: integrate(ts, lambda x: kernel(x, y) * f(x), a, b, mode, cfg)
    )

    def dual_g(y: float) -> float:
        gy = G(y)
        if not gy > 0:
            raise DegenerateKernelError(
                f"kernel moment G({y!r}) = {gy!r}; the extremal g needs it positive"
            )
        return gy ** (1.0 - p) * w.psi_at(y) ** (-p) * _nonneg_power(
            inner(y), p - 1.0, "inner kernel integral"
        )

    return _memoized(dual_g)


def triangular_kernel(h: ScalarField1D, orientation: str) -> Kernel:
    """Kernel supported on one side of the diagonal.

    ``upper`` keeps ``h(y)`` where ``x <= y``; ``lower`` keeps it where
    ``x > y``.  Everything else is zero.
    """
    if orientation == "upper":
        return Kernel(lambda x, y: h(y) if x <= y else 0.0)
    if orientation == "lower":
        return Kernel(lambda x, y: h(y) if x > y else 0.0)
    raise InputError(f"orientation must be 'upper' or 'lower', got {orientation!r}")


def bounded_hardy(
    ts: TimeScale,
    a: float,
    b: float,
    alpha: Alpha | float,
    kernel: Kernel,
    f: ScalarField1D,
    g: ScalarField1D,
    w: WeightPair,
    pair: HolderPair,
    F1: ScalarField1D,
    G1: ScalarField1D,
    *,
    tolerance: float = DEFAULT_TOLERANCE,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> HardyReports:
    """Hardy inequality with caller-supplied majorants of the kernel moments.

    ``F1`` and ``G1`` must dominate the true moments ``F`` and ``G`` on the
    sampling grid; the two reports then take the same shapes as
    :func:`hardy_pair` with the majorants substituted.
    """
    F, G = hardy_weights(ts, a, b, alpha, kernel, w, pair, cfg)
    for t in _default_grid(ts, a, b):
        ft, f1t = F(t), F1(t)
        if ft > f1t + _BOUND_SLACK * max(1.0, abs(f1t)):
            raise InputError(f"F1({t!r}) = {f1t!r} is below the true moment {ft!r}")
        gt, g1t = G(t), G1(t)
        if gt > g1t + _BOUND_SLACK * max(1.0, abs(g1t)):
            raise InputError(f"G1({t!r}) = {g1t!r} is below the true moment {gt!r}")
    return _hardy_reports(ts, a, b, alpha, kernel, f, g, w, pair, F1, G1, tolerance, cfg)


# ---------------------------------------------------------------------------
# general kernel pair

def general_kernel_pair(
    ts: TimeScale,
    x_range: tuple[float, float],
    y_range: tuple[float, float],
    alpha: Alpha | float,
    F: ScalarField1D,
    G: ScalarField1D,
    f: ScalarField1D,
    g: ScalarField1D,
    spec: GeneralHardySpec,
    pair: HolderPair,
    *,
    tolerance: float = DEFAULT_TOLERANCE,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> HardyReports:
    """General coupled inequality pair with an explicit constant.

    The bilinear report compares the iterated integral of
    ``F(x) G(y) / L(f(x), g(y))`` against
    ``C * (integral of M(f)^p F^p)^(1/p) * (integral of N(g)^q G^q)^(1/q)``;
    the dual report compares
    ``integral of N(g)^(-p) (integral of F / L)^p`` against ``C^p`` times the
    first moment integral.  Here ``L`` is the coupling divisor and ``M``/``N``
    the moment maps of ``spec``.
    """
    p, q = pair.p, pair.q
    a, b = x_range
    c, d = y_range
    mode = diamond(alpha)

    def l_at(x: float, y: float) -> float:
        v = spec.divisor(f_at(x), g_at(y))
        if not v > 0:
            raise InputError(f"divisor({x!r}, {y!r}) = {v!r}; must be strictly positive")
        return v

    def f_at(x: float) -> float:
        return _positive(f, x, "f")

    def g_at(y: float) -> float:
        return _positive(g, y, "g")

    def m_at(x: float) -> float:
        v = spec.x_moment(f_at(x))
        if not v > 0:
            raise InputError(f"x_moment(f({x!r})) = {v!r}; must be strictly positive")
        return v

    def n_at(y: float) -> float:
        v = spec.y_moment(g_at(y))
        if not v > 0:
            raise InputError(f"y_moment(g({y!r})) = {v!r}; must be strictly positive")
        return v

    def f_field(x: float) -> float:
        return _positive(F, x, "F")

    def g_field(y: float) -> float:
        return _positive(G, y, "G")

    x_moment_int = integrate(ts, lambda x: m_at(x) ** p * f_field(x) ** p, a, b, mode, cfg)
    y_moment_int = integrate(ts, lambda y: n_at(y) ** q * g_field(y) ** q, c, d, mode, cfg)
    for name, value in (("x", x_moment_int), ("y", y_moment_int)):
        if not (value > 0 and math.isfinite(value)):
            raise InputError(f"{name}-moment integral is {value!r}; must be finite and positive")

    bilinear_lhs = integrate(
        ts,
        lambda y: integrate(
            ts, lambda x: f_field(x) * g_field(y) / l_at(x, y), a, b, mode, cfg
        ),
        c,
        d,
        mode,
        cfg,
    )
    bilinear_rhs = (
        spec.constant
        * _nonneg_power(x_moment_int, 1.0 / p, "x-moment integral")
        * _nonneg_power(y_moment_int, 1.0 / q, "y-moment integral")
    )

    inner = _memoized(
        lambda y: integrate(ts, lambda x: f_field(x) / l_at(x, y), a, b, mode, cfg)
    )
    dual_lhs = integrate(
        ts,
        lambda y: n_at(y) ** (-p) * _nonneg_power(inner(y), p, "inner coupled integral"),
        c,
        d,
        mode,
        cfg,
    )
    dual_rhs = spec.constant**p * x_moment_int

    return HardyReports(
        bilinear=make_report(bilinear_lhs, bilinear_rhs, tolerance),
        dual=make_report(dual_lhs, dual_rhs, tolerance),
    )


# ---------------------------------------------------------------------------
# equality witness and Young's inequality

def equality_witness(
    w: WeightPair, pair: HolderPair, A: float, B: float
) -> tuple[ScalarField1D, ScalarField1D]:
    """Fields that saturate the bilinear Hardy bound.

    ``f^p = A * phi^(-(p+q))`` and ``g^q = B * psi^(-(p+q))``; with these the
    two sides of the bilinear form agree up to arithmetic error.
    """
    if not (A > 0 and B > 0 and math.isfinite(A) and math.isfinite(B)):
        raise InputError(f"witness constants must be positive and finite, got ({A!r}, {B!r})")
    p, q = pair.p, pair.q
    s = p + q

    def f(x: float) -> float:
        return A ** (1.0 / p) * w.phi_at(x) ** (-s / p)

    def g(y: float) -> float:
        return B ** (1.0 / q) * w.psi_at(y) ** (-s / q)

    return f, g


def young(
    xi: float, lam: float, pair: HolderPair, *, tolerance: float = DEFAULT_TOLERANCE
) -> IneqReport:
    """Young's inequality: ``xi * lam <= xi^p / p + lam^q / q``."""
    if not (xi >= 0 and lam >= 0 and math.isfinite(xi) and math.isfinite(lam)):
        raise InputError(f"young needs nonnegative finite arguments, got ({xi!r}, {lam!r})")
    p, q = pair.p, pair.q
    try:
        rhs = xi**p / p + lam**q / q
    except OverflowError:
        # a conjugate exponent near 1 sends the other above 1e3; the power
        # can exceed float range while the inequality itself is trivially true
        rhs = math.inf
    return make_report(xi * lam, rhs, tolerance)
