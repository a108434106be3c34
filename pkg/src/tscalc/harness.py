"""Deterministic fuzzing harness for the calculus and the inequality family.

Instances are generated per ``(seed, index)`` from independent named random
streams, so instance ``k`` of a run is reproducible in isolation and a suite
is byte-for-byte repeatable.  Fields come from a small catalog (constants,
affine and quadratic polynomials, exponentials with bounded rate, positive
step functions), rescaled so their grid values stay inside the configured
range; scales are built on a dyadic lattice so membership arithmetic is
exact.

``discrete_oracle`` recomputes the diamond-alpha integral on purely discrete
scales by direct enumeration of the point masses.  It shares no code with
:func:`tscalc.calculus.integrate`; agreement between the two is evidence, not
tautology.

A violation found by :func:`run_suite` is shrunk by removing scale points one
at a time while it persists, so the reported counterexample is locally
minimal.
"""

from __future__ import annotations

import json
import math
import time
from bisect import bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import inequalities as ineq
from .calculus import DELTA, NABLA, DEFAULT_QUADRATURE, QuadratureConfig, diamond, differentiate, integrate
from .errors import InputError, TscalcError
from .inequalities import (
    DEFAULT_TOLERANCE,
    GeneralHardySpec,
    HolderPair,
    IneqReport,
    Kernel,
    WeightPair,
    make_report,
)
from .timescale import TimeScale, build_time_scale, grid, rho, sigma

__all__ = [
    "FuzzConfig",
    "FuzzInstance",
    "FuzzSummary",
    "Violation",
    "gen_instance",
    "discrete_oracle",
    "run_suite",
    "summary_to_json",
]

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class FuzzConfig:
    """Shape of a fuzz run; every field participates in determinism."""

    seed: int = 42
    instances: int = 10_000
    max_points: int = 6
    max_components: int = 3
    value_range: tuple[float, float] = (0.1, 3.0)
    p_range: tuple[float, float] = (1.1, 10.0)
    alpha_set: tuple[float, ...] = (0.0, 0.25, 0.5, 0.75, 1.0)
    allow_dense: bool = False

    def __post_init__(self) -> None:
        if self.instances < 0:
            raise InputError("instances must be nonnegative")
        if not (2 <= self.max_points <= 16):
            raise InputError(f"max_points must lie in [2, 16], got {self.max_points!r}")
        if self.max_components < 1:
            raise InputError("max_components must be at least 1")
        lo, hi = self.value_range
        if not (0 < lo < hi and math.isfinite(hi)):
            raise InputError(f"value_range needs 0 < lo < hi, got {self.value_range!r}")
        plo, phi = self.p_range
        if not (1 < plo <= phi and math.isfinite(phi)):
            raise InputError(f"p_range needs 1 < lo <= hi, got {self.p_range!r}")
        if not self.alpha_set:
            raise InputError("alpha_set must be nonempty")
        for a in self.alpha_set:
            if not 0 <= a <= 1:
                raise InputError(f"alpha_set entries must lie in [0, 1], got {a!r}")


@dataclass
class FuzzInstance:
    """One generated test case; closures are usable on any shrunken scale."""

    index: int
    scale: TimeScale
    alpha: float
    pair: HolderPair
    f: Callable[[float], float]
    g: Callable[[float], float]
    phi: Callable[[float], float]
    psi: Callable[[float], float]
    h1: Callable[[float], float]
    h2: Callable[[float, float], float]
    f2: Callable[[float, float], float]
    g2: Callable[[float, float], float]
    kernel: Kernel
    bound_slack: tuple[float, float]
    young_pairs: tuple[tuple[float, float], ...]
    witness_consts: tuple[float, float]
    witness_kernel_value: float
    coupling_coeffs: tuple[float, float, float, float]
    labels: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Violation:
    instance: int
    name: str
    report: IneqReport
    scale_points: Optional[tuple[float, ...]]
    detail: Optional[str] = None


@dataclass(frozen=True)
class FuzzSummary:
    seed: int
    total: int
    per_inequality: dict
    min_rel_slack: Optional[float]
    violations: tuple[Violation, ...]
    wall_time: float


# ---------------------------------------------------------------------------
# generation

def _rng(seed: int, index: int) -> np.random.Generator:
    ss = np.random.SeedSequence(entropy=seed & _MASK64, spawn_key=(index,))
    return np.random.Generator(np.random.PCG64(ss))


def _gen_scale(rng: np.random.Generator, cfg: FuzzConfig) -> TimeScale:
    # all endpoints live on the lattice k/16 so membership tests are exact
    if cfg.allow_dense and rng.random() < 0.35:
        comps: list[tuple[float, float]] = []
        n_comp = int(rng.integers(1, cfg.max_components + 1))
        pos = int(rng.integers(-96, -64))
        for _ in range(n_comp):
            pos += int(rng.integers(1, 9))
            left = pos
            if rng.random() < 0.5:
                width = int(rng.integers(4, 17))
                pos = left + width
                comps.append((left / 16.0, pos / 16.0))
            else:
                comps.append((left / 16.0, left / 16.0))
        if len(comps) == 1 and comps[0][0] == comps[0][1]:
            extra = comps[0][0] + 0.5
            comps.append((extra, extra))
        return build_time_scale(comps)
    n = int(rng.integers(2, cfg.max_points + 1))
    offsets = rng.choice(193, size=n, replace=False)
    pts = sorted((int(k) - 96) / 16.0 for k in offsets)
    return build_time_scale([(p, p) for p in pts])


def _rescaled(raw, anchors, lo, hi_target, label):
    vals = [raw(t) for t in anchors]
    vmin, vmax = min(vals), max(vals)
    span = vmax - vmin
    if span <= 1e-12 * max(1.0, abs(vmax)):
        mid = 0.5 * (lo + hi_target)
        return (lambda t, c=mid: c), f"const({mid:.6g})"
    k = (hi_target - lo) / span
    return (lambda t: lo + (raw(t) - vmin) * k), f"{label} into [{lo:.6g}, {hi_target:.6g}]"


def _gen_field1(rng: np.random.Generator, cfg: FuzzConfig, anchors: list[float], smooth: bool = False):
    # step fields are reserved for discrete scales: adaptive quadrature on a
    # jump discontinuity burns its depth budget for nothing
    lo, hi = cfg.value_range
    kind = int(rng.integers(0, 4 if smooth else 5))
    if kind == 0:
        c = float(rng.uniform(lo, hi))
        return (lambda t, c=c: c), f"const({c:.6g})"
    if kind == 4:
        levels = [float(rng.uniform(lo, hi)) for _ in anchors]
        bks = list(anchors)

        def step(t: float, bks=bks, levels=levels) -> float:
            return levels[max(0, bisect_right(bks, t) - 1)]

        return step, f"step({len(levels)} levels)"
    hi_target = float(rng.uniform(lo + 0.25 * (hi - lo), hi))
    if kind == 1:
        c0, c1 = float(rng.uniform(-1, 1)), float(rng.uniform(-1, 1))
        return _rescaled(lambda t: c0 + c1 * t, anchors, lo, hi_target, "affine")
    if kind == 2:
        c0, c1, c2 = (float(rng.uniform(-1, 1)) for _ in range(3))
        return _rescaled(lambda t: c0 + c1 * t + c2 * t * t, anchors, lo, hi_target, "quadratic")
    k = float(rng.uniform(-2, 2))
    return _rescaled(lambda t: math.exp(k * t), anchors, lo, hi_target, f"exp({k:.3g}t)")


def _gen_field2(rng: np.random.Generator, cfg: FuzzConfig, anchors: list[float], smooth: bool = False):
    fa, la = _gen_field1(rng, cfg, anchors, smooth)
    fb, lb = _gen_field1(rng, cfg, anchors, smooth)
    if int(rng.integers(0, 2)) == 0:
        return (lambda x, y: fa(x) * fb(y)), f"({la}) * ({lb})"
    return (lambda x, y: fa(x) + fb(y)), f"({la}) + ({lb})"


def gen_instance(cfg: FuzzConfig, index: int) -> FuzzInstance:
    """Instance ``index`` of the run described by ``cfg``; fully deterministic."""
    rng = _rng(cfg.seed, index)
    scale = _gen_scale(rng, cfg)
    alpha = float(rng.choice(np.asarray(cfg.alpha_set, dtype=float)))
    pair = HolderPair(float(rng.uniform(*cfg.p_range)))
    span = scale.max - scale.min
    anchors = grid(scale, span / 16.0 if span > 0 else 1.0)

    smooth = not scale.is_discrete
    labels: dict[str, str] = {}
    fields1 = {}
    for name in ("f", "g", "phi", "psi", "h1"):
        fn, label = _gen_field1(rng, cfg, anchors, smooth)
        fields1[name] = fn
        labels[name] = label
    fields2 = {}
    for name in ("h2", "f2", "g2", "kernel"):
        fn, label = _gen_field2(rng, cfg, anchors, smooth)
        fields2[name] = fn
        labels[name] = label

    bound_slack = (float(rng.uniform(0.0, 1.0)), float(rng.uniform(0.0, 1.0)))
    young_pairs = tuple(
        (float(rng.uniform(0.0, 3.0)), float(rng.uniform(0.0, 3.0))) for _ in range(3)
    )
    witness_consts = (float(rng.uniform(0.5, 2.0)), float(rng.uniform(0.5, 2.0)))
    witness_kernel_value = float(rng.uniform(0.5, 2.0))
    coupling_coeffs = tuple(float(rng.uniform(0.1, 1.0)) for _ in range(4))

    return FuzzInstance(
        index=index,
        scale=scale,
        alpha=alpha,
        pair=pair,
        f=fields1["f"],
        g=fields1["g"],
        phi=fields1["phi"],
        psi=fields1["psi"],
        h1=fields1["h1"],
        h2=fields2["h2"],
        f2=fields2["f2"],
        g2=fields2["g2"],
        kernel=Kernel(fields2["kernel"]),
        bound_slack=bound_slack,
        young_pairs=young_pairs,
        witness_consts=witness_consts,
        witness_kernel_value=witness_kernel_value,
        coupling_coeffs=coupling_coeffs,
        labels=labels,
    )


# ---------------------------------------------------------------------------
# independent oracle

def discrete_oracle(ts: TimeScale, f, a: float, b: float, alpha: float) -> float:
    """Diamond-alpha integral on a purely discrete scale, by direct enumeration.

    Computes ``alpha * sum(mu(t) f(t) for t in [a, b)) +
    (1 - alpha) * sum(nu(t) f(t) for t in (a, b])`` straight from the point
    list, independently of the calculus implementation.
    """
    if not ts.is_discrete:
        raise InputError("the discrete oracle requires a purely discrete scale")
    pts = [l for l, _ in ts.components]
    if a not in pts or b not in pts:
        raise InputError("oracle limits must be points of the scale")
    if a > b:
        raise InputError("oracle limits must satisfy a <= b")
    i0, i1 = pts.index(a), pts.index(b)
    forward = 0.0
    for i in range(i0, i1):
        forward += (pts[i + 1] - pts[i]) * f(pts[i])
    backward = 0.0
    for i in range(i0 + 1, i1 + 1):
        backward += (pts[i] - pts[i - 1]) * f(pts[i])
    return alpha * forward + (1.0 - alpha) * backward


# ---------------------------------------------------------------------------
# suite

_ALL_NAMES = (
    "reverse_holder",
    "holder_2d",
    "cauchy_schwarz_2d",
    "hardy_bilinear",
    "hardy_dual",
    "hardy_bilinear_upper",
    "hardy_dual_upper",
    "hardy_bilinear_lower",
    "hardy_dual_lower",
    "hardy_equivalence",
    "bounded_bilinear",
    "bounded_dual",
    "general_bilinear",
    "general_dual",
    "equality_witness",
    "young",
    "alpha_linearity",
    "discrete_oracle",
    "product_rule",
)

# names whose rel_slack feeds the extremal-slack statistic; the designed
# equality cases and the synthetic calculus checks would drown it out
_SLACK_TRACKED = frozenset(_ALL_NAMES[:14]) | {"young"}


def _holds(report: IneqReport) -> bool:
    return report.holds


def _close(x: float, y: float, rel: float) -> bool:
    return abs(x - y) <= rel * max(abs(x), abs(y), 1.0)


def holder_bound_constant(
    scale: TimeScale,
    x_range: tuple[float, float],
    y_range: tuple[float, float],
    f,
    g,
    divisor,
    x_moment,
    y_moment,
    pair: HolderPair,
) -> float:
    """The constant the Holder derivation yields for the coupled pair.

    ``sup 1 / (L(f(x), g(y)) M(f(x)) N(g(y)))`` over the grid point pairs,
    times ``(b - a)^(1/q) (d - c)^(1/p)``.  On discrete scales the grid is the
    point set, so the supremum is exact.
    """
    a, b = x_range
    c, d = y_range
    xs = [t for t in grid(scale, (b - a) / 64.0 if b > a else 1.0) if a <= t <= b]
    ys = [t for t in grid(scale, (d - c) / 64.0 if d > c else 1.0) if c <= t <= d]
    sup = 0.0
    for x in xs:
        fx = f(x)
        mfx = x_moment(fx)
        for y in ys:
            val = 1.0 / (divisor(fx, g(y)) * mfx * y_moment(g(y)))
            if val > sup:
                sup = val
    return sup * (b - a) ** (1.0 / pair.q) * (d - c) ** (1.0 / pair.p)


def _instance_checks(inst: FuzzInstance, tol: float, quad: QuadratureConfig):
    al = inst.alpha
    pair = inst.pair
    weights = WeightPair(inst.phi, inst.psi)

    def chk_reverse(scale: TimeScale):
        a, b = scale.min, scale.max
        r = ineq.reverse_holder(scale, a, b, al, inst.f, inst.g, pair, tolerance=tol, cfg=quad)
        return [("reverse_holder", r, _holds)]

    def chk_holder2(scale: TimeScale):
        a, b = scale.min, scale.max
        r = ineq.holder_2d(
            scale, a, b, al, inst.h2, inst.f2, inst.g2, pair, tolerance=tol, cfg=quad
        )
        return [("holder_2d", r, _holds)]

    def chk_cs(scale: TimeScale):
        a, b = scale.min, scale.max
        rcs = ineq.cauchy_schwarz_2d(
            scale, a, b, al, inst.h2, inst.f2, inst.g2, tolerance=tol, cfg=quad
        )
        rh = ineq.holder_2d(
            scale, a, b, al, inst.h2, inst.f2, inst.g2, HolderPair(2.0), tolerance=tol, cfg=quad
        )
        same = _close(rcs.lhs, rh.lhs, 1e-15) and _close(rcs.rhs, rh.rhs, 1e-15)
        return [("cauchy_schwarz_2d", rcs, lambda r, same=same: r.holds and same)]

    def _hardy_with(scale: TimeScale, kernel: Kernel, suffix: str):
        a, b = scale.min, scale.max
        rep = ineq.hardy_pair(
            scale, a, b, al, kernel, inst.f, inst.g, weights, pair, tolerance=tol, cfg=quad
        )
        return [
            (f"hardy_bilinear{suffix}", rep.bilinear, _holds),
            (f"hardy_dual{suffix}", rep.dual, _holds),
        ]

    def chk_hardy(scale: TimeScale):
        return _hardy_with(scale, inst.kernel, "")

    def chk_hardy_upper(scale: TimeScale):
        return _hardy_with(scale, ineq.triangular_kernel(inst.h1, "upper"), "_upper")

    def chk_hardy_lower(scale: TimeScale):
        return _hardy_with(scale, ineq.triangular_kernel(inst.h1, "lower"), "_lower")

    def chk_equivalence(scale: TimeScale):
        a, b = scale.min, scale.max
        g_star = ineq.hardy_dual_g(scale, a, b, al, inst.kernel, inst.f, weights, pair, cfg=quad)
        rep = ineq.hardy_pair(
            scale, a, b, al, inst.kernel, inst.f, g_star, weights, pair, tolerance=tol, cfg=quad
        )
        # with the extremal g the bilinear left side collapses onto the dual
        # left side, so the dual must hold whenever the bilinear does
        bridge = _close(rep.bilinear.lhs, rep.dual.lhs, 1e-9)
        ok = (not rep.bilinear.holds) or (rep.dual.holds and bridge)
        return [("hardy_equivalence", rep.dual, lambda r, ok=ok: ok)]

    def chk_bounded(scale: TimeScale):
        a, b = scale.min, scale.max
        fm, gm = ineq.hardy_weights(scale, a, b, al, inst.kernel, weights, pair, quad)
        du, dv = inst.bound_slack
        rep = ineq.bounded_hardy(
            scale,
            a,
            b,
            al,
            inst.kernel,
            inst.f,
            inst.g,
            weights,
            pair,
            lambda x: (1.0 + du) * fm(x),
            lambda y: (1.0 + dv) * gm(y),
            tolerance=tol,
            cfg=quad,
        )
        return [("bounded_bilinear", rep.bilinear, _holds), ("bounded_dual", rep.dual, _holds)]

    def chk_general(scale: TimeScale):
        a, b = scale.min, scale.max
        cu, cv, cm, cn = inst.coupling_coeffs
        divisor = lambda fu, gv: 1.0 + cu * fu + cv * gv
        x_moment = lambda fu: 1.0 + cm * fu
        y_moment = lambda gv: 1.0 + cn * gv
        constant = holder_bound_constant(
            scale, (a, b), (a, b), inst.f, inst.g, divisor, x_moment, y_moment, pair
        )
        spec = GeneralHardySpec(divisor, x_moment, y_moment, constant)
        rep = ineq.general_kernel_pair(
            scale,
            (a, b),
            (a, b),
            al,
            inst.phi,
            inst.psi,
            inst.f,
            inst.g,
            spec,
            pair,
            tolerance=tol,
            cfg=quad,
        )
        return [("general_bilinear", rep.bilinear, _holds), ("general_dual", rep.dual, _holds)]

    def chk_witness(scale: TimeScale):
        a, b = scale.min, scale.max
        kv = inst.witness_kernel_value
        kern = Kernel(lambda x, y, kv=kv: kv)
        wa, wb = inst.witness_consts
        wf, wg = ineq.equality_witness(weights, pair, wa, wb)
        rep = ineq.hardy_pair(
            scale, a, b, al, kern, wf, wg, weights, pair, tolerance=tol, cfg=quad
        )
        return [("equality_witness", rep.bilinear, lambda r: abs(r.rel_slack) <= 1e-6)]

    def chk_young(scale: TimeScale):
        worst = None
        for xi, lam in inst.young_pairs:
            r = ineq.young(xi, lam, pair, tolerance=tol)
            if worst is None or r.rel_slack < worst.rel_slack:
                worst = r
        return [("young", worst, _holds)]

    def chk_alpha_linearity(scale: TimeScale):
        a, b = scale.min, scale.max
        d = integrate(scale, inst.f, a, b, DELTA, quad)
        n = integrate(scale, inst.f, a, b, NABLA, quad)
        dia = integrate(scale, inst.f, a, b, diamond(al), quad)
        err = abs(dia - (al * d + (1.0 - al) * n)) / max(abs(dia), 1.0)
        return [("alpha_linearity", make_report(err, 1e-15, 0.0), _holds)]

    def chk_oracle(scale: TimeScale):
        if not scale.is_discrete:
            return []
        a, b = scale.min, scale.max
        got = integrate(scale, inst.f, a, b, diamond(al), quad)
        want = discrete_oracle(scale, inst.f, a, b, al)
        err = abs(got - want) / max(abs(want), 1.0)
        return [("discrete_oracle", make_report(err, 1e-12, 0.0), _holds)]

    def chk_product_rule(scale: TimeScale):
        comps = scale.components
        interior = [
            l for i, (l, r) in enumerate(comps) if l == r and 0 < i < len(comps) - 1
        ]
        if not interior:
            return []
        worst = 0.0
        fg = lambda t: inst.f(t) * inst.g(t)
        for t in interior:
            lhs = differentiate(scale, fg, t, diamond(al), quad)
            fd = differentiate(scale, inst.f, t, diamond(al), quad)
            gd_delta = differentiate(scale, inst.g, t, DELTA, quad)
            gd_nabla = differentiate(scale, inst.g, t, NABLA, quad)
            rhs = (
                fd * inst.g(t)
                + al * inst.f(sigma(scale, t)) * gd_delta
                + (1.0 - al) * inst.f(rho(scale, t)) * gd_nabla
            )
            err = abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0)
            if err > worst:
                worst = err
        return [("product_rule", make_report(worst, 1e-10, 0.0), _holds)]

    return [
        ("reverse_holder", chk_reverse),
        ("holder_2d", chk_holder2),
        ("cauchy_schwarz_2d", chk_cs),
        ("hardy", chk_hardy),
        ("hardy_upper", chk_hardy_upper),
        ("hardy_lower", chk_hardy_lower),
        ("hardy_equivalence", chk_equivalence),
        ("bounded", chk_bounded),
        ("general", chk_general),
        ("equality_witness", chk_witness),
        ("young", chk_young),
        ("alpha_linearity", chk_alpha_linearity),
        ("discrete_oracle", chk_oracle),
        ("product_rule", chk_product_rule),
    ]


def _violates(fn, name: str, scale: TimeScale) -> bool:
    try:
        triples = fn(scale)
    except TscalcError:
        return False
    for n, report, ok_fn in triples:
        if n == name:
            return not ok_fn(report)
    return False


def _shrink(inst: FuzzInstance, fn, name: str) -> Optional[tuple[float, ...]]:
    if not inst.scale.is_discrete:
        return None
    pts = [l for l, _ in inst.scale.components]
    changed = True
    while changed and len(pts) > 2:
        changed = False
        for i in range(len(pts)):
            cand = pts[:i] + pts[i + 1 :]
            cand_scale = build_time_scale([(p, p) for p in cand])
            if _violates(fn, name, cand_scale):
                pts = cand
                changed = True
                break
    return tuple(pts)


def _run_instance(cfg, index, tol, quad, mutate):
    inst = gen_instance(cfg, index)
    counts = dict.fromkeys(_ALL_NAMES, 0)
    violations: list[Violation] = []
    min_slack: Optional[float] = None
    for check_id, fn in _instance_checks(inst, tol, quad):
        try:
            triples = fn(inst.scale)
        except TscalcError as exc:
            counts[check_id] = counts.get(check_id, 0) + 1
            violations.append(
                Violation(index, check_id, make_report(1.0, 0.0, tol), None, detail=str(exc))
            )
            continue
        for name, report, ok_fn in triples:
            counts[name] += 1
            if mutate is not None:
                report = mutate(name, report)
            if name in _SLACK_TRACKED:
                if min_slack is None or report.rel_slack < min_slack:
                    min_slack = report.rel_slack
            if not ok_fn(report):
                points = _shrink(inst, fn, name)
                violations.append(Violation(index, name, report, points))
    return counts, min_slack, violations


def run_suite(
    cfg: FuzzConfig,
    *,
    workers: int = 1,
    tolerance: float = DEFAULT_TOLERANCE,
    quad: QuadratureConfig = DEFAULT_QUADRATURE,
    _mutate_report=None,
) -> FuzzSummary:
    """Run every check over ``cfg.instances`` generated instances.

    Violations are data, not errors: the summary collects them along with
    per-check counts and the minimum relative slack seen across the genuine
    inequality reports.  Results do not depend on ``workers``.

    ``_mutate_report`` is a test-only hook applied to each report before its
    verdict is taken; production callers leave it unset.
    """
    start = time.perf_counter()
    if workers <= 1:
        results = [
            _run_instance(cfg, i, tolerance, quad, _mutate_report)
            for i in range(cfg.instances)
        ]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(
                    lambda i: _run_instance(cfg, i, tolerance, quad, _mutate_report),
                    range(cfg.instances),
                )
            )
    counts = dict.fromkeys(_ALL_NAMES, 0)
    violations: list[Violation] = []
    min_slack: Optional[float] = None
    for c, s, v in results:
        for name in _ALL_NAMES:
            counts[name] += c[name]
        if s is not None and (min_slack is None or s < min_slack):
            min_slack = s
        violations.extend(v)
    return FuzzSummary(
        seed=cfg.seed,
        total=cfg.instances,
        per_inequality=counts,
        min_rel_slack=min_slack,
        violations=tuple(violations),
        wall_time=time.perf_counter() - start,
    )


def summary_to_json(summary: FuzzSummary) -> str:
    """Stable JSON rendering; ``wall_time`` is the only run-dependent field."""
    payload = {
        "seed": summary.seed,
        "total": summary.total,
        "per_inequality": summary.per_inequality,
        "min_rel_slack": summary.min_rel_slack,
        "violations": [
            {
                "instance": v.instance,
                "name": v.name,
                "report": v.report.as_dict(),
                "scale_points": list(v.scale_points) if v.scale_points is not None else None,
                "detail": v.detail,
            }
            for v in summary.violations
        ],
        "wall_time": summary.wall_time,
    }
    return json.dumps(payload, indent=2)
