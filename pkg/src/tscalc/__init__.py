"""Calculus on closed subsets of the reals, and a family of dynamic
inequalities checked numerically on top of it.

The package is organized bottom-up: :mod:`tscalc.timescale` models the
domain, :mod:`tscalc.calculus` provides derivatives and integrals in the
forward, backward, and blended senses, :mod:`tscalc.inequalities` evaluates
the inequality family and reports slack, :mod:`tscalc.exprlang` is a small
expression language for describing functions in text, :mod:`tscalc.harness`
is a deterministic fuzzer over all of it, and :mod:`tscalc.cli` exposes the
lot on the command line.
"""

from .calculus import (
    DELTA,
    DEFAULT_QUADRATURE,
    NABLA,
    Alpha,
    IntegralMode,
    QuadratureConfig,
    compose_jump,
    diamond,
    differentiate,
    double_integrate,
    integrate,
    parse_mode,
    partial_diamond,
)
from .errors import DegenerateKernelError, DomainError, InputError, TscalcError
from .exprlang import (
    EvalError,
    ExprError,
    LexError,
    ParseError,
    compile_function,
    eval_expr,
    free_variables,
    parse,
    parse_source,
    to_source,
    tokenize,
)
from .harness import (
    FuzzConfig,
    FuzzInstance,
    FuzzSummary,
    Violation,
    discrete_oracle,
    gen_instance,
    run_suite,
    summary_to_json,
)
from .inequalities import (
    DEFAULT_TOLERANCE,
    BoundsMN,
    GeneralHardySpec,
    HardyReports,
    HolderPair,
    IneqReport,
    Kernel,
    WeightPair,
    bounded_hardy,
    cauchy_schwarz_2d,
    equality_witness,
    general_kernel_pair,
    hardy_dual_g,
    hardy_pair,
    hardy_weights,
    holder_2d,
    make_report,
    reverse_holder,
    triangular_kernel,
    young,
)
from .timescale import (
    KappaSets,
    PointInfo,
    TimeScale,
    build_time_scale,
    grid,
    kappa_restrictions,
    point_info,
    rho,
    sigma,
)

__version__ = "0.1.0"

__all__ = [
    "Alpha",
    "BoundsMN",
    "DEFAULT_QUADRATURE",
    "DEFAULT_TOLERANCE",
    "DELTA",
    "DegenerateKernelError",
    "DomainError",
    "EvalError",
    "ExprError",
    "FuzzConfig",
    "FuzzInstance",
    "FuzzSummary",
    "GeneralHardySpec",
    "HardyReports",
    "HolderPair",
    "IneqReport",
    "InputError",
    "IntegralMode",
    "KappaSets",
    "Kernel",
    "LexError",
    "NABLA",
    "ParseError",
    "PointInfo",
    "QuadratureConfig",
    "TimeScale",
    "TscalcError",
    "Violation",
    "WeightPair",
    "bounded_hardy",
    "build_time_scale",
    "cauchy_schwarz_2d",
    "compile_function",
    "compose_jump",
    "diamond",
    "differentiate",
    "discrete_oracle",
    "double_integrate",
    "equality_witness",
    "eval_expr",
    "free_variables",
    "gen_instance",
    "general_kernel_pair",
    "grid",
    "hardy_dual_g",
    "hardy_pair",
    "hardy_weights",
    "holder_2d",
    "integrate",
    "kappa_restrictions",
    "make_report",
    "parse",
    "parse_mode",
    "parse_source",
    "partial_diamond",
    "point_info",
    "reverse_holder",
    "rho",
    "run_suite",
    "sigma",
    "summary_to_json",
    "to_source",
    "tokenize",
    "triangular_kernel",
    "young",
]
