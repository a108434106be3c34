"""Command line front end.

Four subcommands: ``eval`` computes a single integral or derivative from an
expression, ``check`` evaluates one inequality instance described by a JSON
file, ``fuzz`` runs the deterministic suite, and ``report`` pretty-prints a
saved fuzz summary.

Exit codes: 0 means the requested value was computed or every checked
inequality held, 1 means a violation was found (or the checked file records
one), 2 means the input could not be parsed or was out of contract.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Optional

from . import inequalities as ineq
from .calculus import DEFAULT_QUADRATURE, QuadratureConfig, differentiate, integrate, parse_mode
from .errors import InputError, TscalcError
from .exprlang import compile_function
from .harness import FuzzConfig, run_suite, summary_to_json
from .inequalities import (
    DEFAULT_TOLERANCE,
    BoundsMN,
    GeneralHardySpec,
    HolderPair,
    Kernel,
    WeightPair,
)
from .timescale import TimeScale, build_time_scale

__all__ = ["main", "entrypoint"]


def _parse_scale(text_or_obj) -> TimeScale:
    """Accept ``[[l, r], ...]`` components or ``[t0, t1, ...]`` isolated points."""
    if isinstance(text_or_obj, str):
        try:
            obj = json.loads(text_or_obj)
        except json.JSONDecodeError as exc:
            raise InputError(f"time scale is not valid JSON: {exc}") from None
    else:
        obj = text_or_obj
    if not isinstance(obj, list) or not obj:
        raise InputError("time scale must be a nonempty JSON list")
    comps = []
    for entry in obj:
        if isinstance(entry, (int, float)) and not isinstance(entry, bool):
            comps.append((float(entry), float(entry)))
        elif (
            isinstance(entry, list)
            and len(entry) == 2
            and all(isinstance(e, (int, float)) and not isinstance(e, bool) for e in entry)
        ):
            comps.append((float(entry[0]), float(entry[1])))
        else:
            raise InputError(f"bad time-scale entry {entry!r}: expected a number or [left, right]")
    return build_time_scale(comps)


def _quad_config(ns) -> QuadratureConfig:
    tol = getattr(ns, "quad_tol", None)
    if tol is None:
        return DEFAULT_QUADRATURE
    return QuadratureConfig(abs_tol=tol)


# ---------------------------------------------------------------------------
# eval

def _cmd_eval_integral(ns) -> int:
    ts = _parse_scale(ns.scale)
    f = compile_function(ns.fn, ("t",))
    mode = parse_mode(ns.mode)
    value = integrate(ts, f, ns.from_, ns.to, mode, _quad_config(ns))
    print(repr(value))
    return 0


def _cmd_eval_derivative(ns) -> int:
    ts = _parse_scale(ns.scale)
    f = compile_function(ns.fn, ("t",))
    mode = parse_mode(ns.mode)
    value = differentiate(ts, f, ns.at, mode, _quad_config(ns))
    print(repr(value))
    return 0


# ---------------------------------------------------------------------------
# check

def _need(data: dict, key: str, kind: str):
    if key not in data:
        raise InputError(f"{kind} instance file is missing required key {key!r}")
    return data[key]


def _number(data: dict, key: str, kind: str, default: Optional[float] = None) -> float:
    if key not in data:
        if default is None:
            raise InputError(f"{kind} instance file is missing required key {key!r}")
        return default
    val = data[key]
    if isinstance(val, bool) or not isinstance(val, (int, float)) or not math.isfinite(val):
        raise InputError(f"key {key!r} must be a finite number, got {val!r}")
    return float(val)


def _fn(data: dict, key: str, variables: tuple[str, ...], kind: str, default: Optional[str] = None):
    src = data.get(key, default)
    if src is None:
        raise InputError(f"{kind} instance file is missing required key {key!r}")
    if not isinstance(src, str):
        raise InputError(f"key {key!r} must be an expression string, got {src!r}")
    return compile_function(src, variables)


def _check_common(data: dict, kind: str):
    ts = _parse_scale(_need(data, "time_scale", kind))
    alpha = _number(data, "alpha", kind, default=1.0)
    a = _number(data, "a", kind, default=ts.min)
    b = _number(data, "b", kind, default=ts.max)
    tol = _number(data, "tolerance", kind, default=DEFAULT_TOLERANCE)
    return ts, alpha, a, b, tol


def _check_reverse_holder(data, quad):
    kind = "reverse_holder"
    ts, alpha, a, b, tol = _check_common(data, kind)
    pair = HolderPair(_number(data, "p", kind))
    f = _fn(data, "f", ("t",), kind)
    g = _fn(data, "g", ("t",), kind)
    bounds = None
    if "m" in data or "M" in data:
        bounds = BoundsMN(_number(data, "m", kind), _number(data, "M", kind))
    r = ineq.reverse_holder(ts, a, b, alpha, f, g, pair, bounds, tolerance=tol, cfg=quad)
    return {"report": r.as_dict()}, r.holds


def _check_holder_2d(data, quad):
    kind = "holder_2d"
    ts, alpha, a, b, tol = _check_common(data, kind)
    pair = HolderPair(_number(data, "p", kind))
    h = _fn(data, "h", ("x", "y"), kind)
    f = _fn(data, "f", ("x", "y"), kind)
    g = _fn(data, "g", ("x", "y"), kind)
    r = ineq.holder_2d(ts, a, b, alpha, h, f, g, pair, tolerance=tol, cfg=quad)
    return {"report": r.as_dict()}, r.holds


def _check_cauchy_schwarz(data, quad):
    kind = "cauchy_schwarz_2d"
    ts, alpha, a, b, tol = _check_common(data, kind)
    h = _fn(data, "h", ("x", "y"), kind)
    f = _fn(data, "f", ("x", "y"), kind)
    g = _fn(data, "g", ("x", "y"), kind)
    r = ineq.cauchy_schwarz_2d(ts, a, b, alpha, h, f, g, tolerance=tol, cfg=quad)
    return {"report": r.as_dict()}, r.holds


def _hardy_parts(data, kind):
    pair = HolderPair(_number(data, "p", kind))
    kernel = Kernel(_fn(data, "K", ("x", "y"), kind))
    weights = WeightPair(_fn(data, "phi", ("x",), kind), _fn(data, "psi", ("y",), kind))
    return pair, kernel, weights


def _check_hardy_pair(data, quad):
    kind = "hardy_pair"
    ts, alpha, a, b, tol = _check_common(data, kind)
    pair, kernel, weights = _hardy_parts(data, kind)
    f = _fn(data, "f", ("x",), kind)
    g = _fn(data, "g", ("y",), kind)
    rep = ineq.hardy_pair(ts, a, b, alpha, kernel, f, g, weights, pair, tolerance=tol, cfg=quad)
    return (
        {"bilinear": rep.bilinear.as_dict(), "dual": rep.dual.as_dict()},
        rep.bilinear.holds and rep.dual.holds,
    )


def _check_bounded_hardy(data, quad):
    kind = "bounded_hardy"
    ts, alpha, a, b, tol = _check_common(data, kind)
    pair, kernel, weights = _hardy_parts(data, kind)
    f = _fn(data, "f", ("x",), kind)
    g = _fn(data, "g", ("y",), kind)
    f_major = _fn(data, "F1", ("x",), kind)
    g_major = _fn(data, "G1", ("y",), kind)
    rep = ineq.bounded_hardy(
        ts, a, b, alpha, kernel, f, g, weights, pair, f_major, g_major, tolerance=tol, cfg=quad
    )
    return (
        {"bilinear": rep.bilinear.as_dict(), "dual": rep.dual.as_dict()},
        rep.bilinear.holds and rep.dual.holds,
    )


def _check_general_kernel(data, quad):
    kind = "general_kernel_pair"
    ts, alpha, a, b, tol = _check_common(data, kind)
    pair = HolderPair(_number(data, "p", kind))
    spec = GeneralHardySpec(
        divisor=_fn(data, "L", ("u", "v"), kind),
        x_moment=_fn(data, "M", ("u",), kind),
        y_moment=_fn(data, "N", ("v",), kind),
        constant=_number(data, "C", kind),
    )
    x_field = _fn(data, "F", ("x",), kind)
    y_field = _fn(data, "G", ("y",), kind)
    f = _fn(data, "f", ("x",), kind)
    g = _fn(data, "g", ("y",), kind)
    x_range = tuple(data["x_range"]) if "x_range" in data else (a, b)
    y_range = tuple(data["y_range"]) if "y_range" in data else (a, b)
    rep = ineq.general_kernel_pair(
        ts, x_range, y_range, alpha, x_field, y_field, f, g, spec, pair, tolerance=tol, cfg=quad
    )
    return (
        {"bilinear": rep.bilinear.as_dict(), "dual": rep.dual.as_dict()},
        rep.bilinear.holds and rep.dual.holds,
    )


def _check_equality_witness(data, quad):
    kind = "equality_witness"
    ts, alpha, a, b, tol = _check_common(data, kind)
    pair, kernel, weights = _hardy_parts({**data, "K": data.get("K", "1")}, kind)
    big_a = _number(data, "A", kind, default=1.0)
    big_b = _number(data, "B", kind, default=1.0)
    eq_tol = _number(data, "equality_tolerance", kind, default=1e-6)
    f, g = ineq.equality_witness(weights, pair, big_a, big_b)
    rep = ineq.hardy_pair(ts, a, b, alpha, kernel, f, g, weights, pair, tolerance=tol, cfg=quad)
    holds = rep.bilinear.holds and abs(rep.bilinear.rel_slack) <= eq_tol
    return {"bilinear": rep.bilinear.as_dict(), "dual": rep.dual.as_dict()}, holds


def _check_young(data, quad):
    kind = "young"
    pair = HolderPair(_number(data, "p", kind))
    xi = _number(data, "xi", kind)
    lam = _number(data, "lambda", kind)
    tol = _number(data, "tolerance", kind, default=DEFAULT_TOLERANCE)
    r = ineq.young(xi, lam, pair, tolerance=tol)
    return {"report": r.as_dict()}, r.holds


_CHECKS = {
    "reverse_holder": _check_reverse_holder,
    "holder_2d": _check_holder_2d,
    "cauchy_schwarz_2d": _check_cauchy_schwarz,
    "hardy_pair": _check_hardy_pair,
    "bounded_hardy": _check_bounded_hardy,
    "general_kernel_pair": _check_general_kernel,
    "equality_witness": _check_equality_witness,
    "young": _check_young,
}


def _cmd_check(ns) -> int:
    try:
        with open(ns.file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"instance file is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError("instance file must contain a JSON object")
    kind = data.get("inequality")
    if kind not in _CHECKS:
        known = ", ".join(sorted(_CHECKS))
        raise InputError(f"unknown inequality {kind!r}; expected one of: {known}")
    reports, holds = _CHECKS[kind](data, _quad_config(ns))
    out = {"inequality": kind, "instance": data, "reports": reports, "holds": holds}
    print(json.dumps(out, indent=2))
    return 0 if holds else 1


# ---------------------------------------------------------------------------
# fuzz / report

def _default_seed() -> int:
    raw = os.environ.get("TSCALC_SEED")
    if raw is None:
        return 42
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"TSCALC_SEED must be an integer, got {raw!r}") from None


def _cmd_fuzz(ns) -> int:
    seed = ns.seed if ns.seed is not None else _default_seed()
    cfg = FuzzConfig(
        seed=seed,
        instances=ns.instances,
        max_points=ns.max_points,
        allow_dense=ns.allow_dense,
    )
    quad = _quad_config(ns)
    summary = run_suite(cfg, workers=ns.workers, tolerance=ns.ineq_tol, quad=quad)
    text = summary_to_json(summary)
    if ns.json is not None:
        with open(ns.json, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    slack = summary.min_rel_slack
    print(
        f"instances={summary.total} violations={len(summary.violations)}"
        f" min_rel_slack={repr(slack) if slack is not None else 'n/a'}"
        f" wall_time={summary.wall_time:.3f}s"
    )
    for v in summary.violations[:20]:
        where = f" scale_points={list(v.scale_points)}" if v.scale_points else ""
        extra = f" detail={v.detail}" if v.detail else ""
        print(f"  violation instance={v.instance} name={v.name}{where}{extra}")
    if len(summary.violations) > 20:
        print(f"  ... and {len(summary.violations) - 20} more")
    return 0 if not summary.violations else 1


def _cmd_report(ns) -> int:
    try:
        with open(ns.file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"summary file is not valid JSON: {exc}") from None
    for key in ("seed", "total", "per_inequality", "violations"):
        if not isinstance(data, dict) or key not in data:
            raise InputError(f"summary file is missing key {key!r}")
    print(f"seed:        {data['seed']}")
    print(f"instances:   {data['total']}")
    print(f"wall_time:   {data.get('wall_time', 'n/a')}")
    print(f"min_rel_slack: {data.get('min_rel_slack', 'n/a')}")
    print("checks:")
    counts = data["per_inequality"]
    width = max((len(k) for k in counts), default=0)
    for name, count in counts.items():
        print(f"  {name:<{width}}  {count}")
    violations = data["violations"]
    if not violations:
        print("violations: none")
        return 0
    print(f"violations: {len(violations)}")
    for v in violations:
        rep = v.get("report", {})
        line = (
            f"  instance={v.get('instance')} name={v.get('name')}"
            f" lhs={rep.get('lhs')} rhs={rep.get('rhs')}"
        )
        if v.get("scale_points"):
            line += f" scale_points={v['scale_points']}"
        if v.get("detail"):
            line += f" detail={v['detail']}"
        print(line)
    return 1


# ---------------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tscalc",
        description="time-scale calculus and dynamic-inequality checker",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an integral or a derivative")
    eval_sub = p_eval.add_subparsers(dest="what", required=True)

    p_int = eval_sub.add_parser("integral", help="integral of an expression in t")
    p_int.add_argument("--scale", required=True, help="JSON: [[l, r], ...] or [t0, t1, ...]")
    p_int.add_argument("--fn", required=True, help="expression in t")
    p_int.add_argument("--mode", default="delta", help="delta | nabla | diamond:<alpha>")
    p_int.add_argument("--from", dest="from_", required=True, type=float, metavar="A")
    p_int.add_argument("--to", required=True, type=float, metavar="B")
    p_int.add_argument("--quad-tol", type=float, default=None)
    p_int.set_defaults(handler=_cmd_eval_integral)

    p_der = eval_sub.add_parser("derivative", help="derivative of an expression in t")
    p_der.add_argument("--scale", required=True, help="JSON: [[l, r], ...] or [t0, t1, ...]")
    p_der.add_argument("--fn", required=True, help="expression in t")
    p_der.add_argument("--mode", default="delta", help="delta | nabla | diamond:<alpha>")
    p_der.add_argument("--at", required=True, type=float)
    p_der.add_argument("--quad-tol", type=float, default=None)
    p_der.set_defaults(handler=_cmd_eval_derivative)

    p_check = sub.add_parser("check", help="check one inequality instance from a JSON file")
    p_check.add_argument("file")
    p_check.add_argument("--quad-tol", type=float, default=None)
    p_check.set_defaults(handler=_cmd_check)

    p_fuzz = sub.add_parser("fuzz", help="run the deterministic fuzz suite")
    p_fuzz.add_argument("--seed", type=int, default=None, help="default 42, or TSCALC_SEED if set")
    p_fuzz.add_argument("--instances", type=int, default=1000)
    p_fuzz.add_argument("--max-points", type=int, default=6)
    p_fuzz.add_argument("--allow-dense", action="store_true")
    p_fuzz.add_argument("--workers", type=int, default=1)
    p_fuzz.add_argument("--json", default=None, metavar="OUT", help="write the full summary here")
    p_fuzz.add_argument("--quad-tol", type=float, default=None)
    p_fuzz.add_argument("--ineq-tol", type=float, default=DEFAULT_TOLERANCE)
    p_fuzz.set_defaults(handler=_cmd_fuzz)

    p_rep = sub.add_parser("report", help="pretty-print a saved fuzz summary")
    p_rep.add_argument("file")
    p_rep.set_defaults(handler=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return ns.handler(ns)
    except TscalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())
