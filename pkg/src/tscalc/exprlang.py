"""A tiny arithmetic expression language for describing scalar fields.

Grammar (longest-match lexing, no implicit multiplication)::

    expr   := term  (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | power
    power  := atom ("^" unary)?          -- right-associative, binds tightest
    atom   := NUMBER | VARIABLE | FUNC "(" expr ("," expr)* ")" | "(" expr ")"

Numbers are unsigned decimals with optional fraction and exponent.  The only
variables are ``t`` (one-dimensional fields), ``x`` and ``y`` (two-dimensional
fields), and ``u`` and ``v`` (arguments of comparison maps).  The function set
is fixed: ``exp``, ``log``, ``sqrt``, ``abs`` take one argument; ``min``,
``max``, ``pow`` take two.

All failures carry a character offset: lexing rejects illegal characters,
parsing rejects malformed syntax, unknown names, and wrong arities, and
evaluation rejects unbound variables and numeric domain faults (division by
zero, log/sqrt of a negative number, overflow to a non-finite value).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable, Union

from .errors import TscalcError

__all__ = [
    "ExprError",
    "LexError",
    "ParseError",
    "EvalError",
    "Token",
    "Const",
    "Var",
    "Neg",
    "BinOp",
    "Call",
    "Expr",
    "FUNCTIONS",
    "VARIABLES",
    "tokenize",
    "parse",
    "parse_source",
    "eval_expr",
    "to_source",
    "free_variables",
    "compile_function",
]

FUNCTIONS = {"exp": 1, "log": 1, "sqrt": 1, "abs": 1, "min": 2, "max": 2, "pow": 2}
VARIABLES = frozenset({"t", "x", "y", "u", "v"})


class ExprError(TscalcError):
    """Base for expression failures; carries the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class LexError(ExprError):
    pass


class ParseError(ExprError):
    pass


class EvalError(ExprError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # number | identifier | operator | lparen | rparen | comma
    text: str
    position: int


# ---------------------------------------------------------------------------
# syntax tree; positions are carried for error messages but ignored by ==

@dataclass(frozen=True)
class Const:
    value: float
    pos: int = field(compare=False, default=-1)


@dataclass(frozen=True)
class Var:
    name: str
    pos: int = field(compare=False, default=-1)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    pos: int = field(compare=False, default=-1)


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * / ^
    left: "Expr"
    right: "Expr"
    pos: int = field(compare=False, default=-1)


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple["Expr", ...]
    pos: int = field(compare=False, default=-1)


Expr = Union[Const, Var, Neg, BinOp, Call]


# ---------------------------------------------------------------------------
# lexer

# ASCII-only on purpose: anything outside these classes is an illegal
# character, not a crash (the lexer is fed arbitrary user bytes)
_NUMBER = re.compile(r"[0-9]+(?:\.[0-9]+)?(?:[eE][+-]?[0-9]+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_OPERATORS = "+-*/^"


def tokenize(source: str) -> list[Token]:
    """Split ``source`` into tokens, longest match first."""
    tokens: list[Token] = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch in " \t\r\n":
            i += 1
            continue
        m = _NUMBER.match(source, i)
        if m is not None:
            tokens.append(Token("number", m.group(), i))
            i = m.end()
            continue
        m = _IDENT.match(source, i)
        if m is not None:
            tokens.append(Token("identifier", m.group(), i))
            i = m.end()
            continue
        if ch in _OPERATORS:
            tokens.append(Token("operator", ch, i))
        elif ch == "(":
            tokens.append(Token("lparen", ch, i))
        elif ch == ")":
            tokens.append(Token("rparen", ch, i))
        elif ch == ",":
            tokens.append(Token("comma", ch, i))
        else:
            raise LexError(f"illegal character {ch!r}", i)
        i += 1
    return tokens


# ---------------------------------------------------------------------------
# parser

class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0
        if tokens:
            last = tokens[-1]
            self.end = last.position + len(last.text)
        else:
            self.end = 0

    def peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("expected an operand but input ended", self.end)
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"expected {what} but input ended", self.end)
        if tok.kind != kind:
            raise ParseError(f"expected {what}, found {tok.text!r}", tok.position)
        self.i += 1
        return tok

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "operator" and tok.text in "+-":
                self.i += 1
                rhs = self.parse_term()
                node = BinOp(tok.text, node, rhs, pos=tok.position)
            else:
                return node

    def parse_term(self) -> Expr:
        node = self.parse_unary()
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "operator" and tok.text in "*/":
                self.i += 1
                rhs = self.parse_unary()
                node = BinOp(tok.text, node, rhs, pos=tok.position)
            else:
                return node

    def parse_unary(self) -> Expr:
        tok = self.peek()
        if tok is not None and tok.kind == "operator" and tok.text == "-":
            self.i += 1
            return Neg(self.parse_unary(), pos=tok.position)
        return self.parse_power()

    def parse_power(self) -> Expr:
        base = self.parse_atom()
        tok = self.peek()
        if tok is not None and tok.kind == "operator" and tok.text == "^":
            self.i += 1
            exponent = self.parse_unary()  # right-associative, may be negated
            return BinOp("^", base, exponent, pos=tok.position)
        return base

    def parse_atom(self) -> Expr:
        tok = self.next()
        if tok.kind == "number":
            return Const(float(tok.text), pos=tok.position)
        if tok.kind == "lparen":
            node = self.parse_expr()
            self.expect("rparen", "')'")
            return node
        if tok.kind == "identifier":
            nxt = self.peek()
            if nxt is not None and nxt.kind == "lparen":
                return self.parse_call(tok)
            if tok.text not in VARIABLES:
                raise ParseError(
                    f"unknown variable {tok.text!r} (allowed: {', '.join(sorted(VARIABLES))})",
                    tok.position,
                )
            return Var(tok.text, pos=tok.position)
        raise ParseError(f"expected an operand, found {tok.text!r}", tok.position)

    def parse_call(self, name: Token) -> Expr:
        if name.text not in FUNCTIONS:
            raise ParseError(f"unknown function {name.text!r}", name.position)
        self.expect("lparen", "'('")
        args = [self.parse_expr()]
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "comma":
                self.i += 1
                args.append(self.parse_expr())
            else:
                break
        self.expect("rparen", "')' closing the call")
        arity = FUNCTIONS[name.text]
        if len(args) != arity:
            raise ParseError(
                f"{name.text} takes {arity} argument(s), got {len(args)}", name.position
            )
        return Call(name.text, tuple(args), pos=name.position)


def parse(tokens: list[Token]) -> Expr:
    """Parse a token list into a syntax tree, consuming all input."""
    parser = _Parser(tokens)
    node = parser.parse_expr()
    extra = parser.peek()
    if extra is not None:
        raise ParseError(f"unexpected trailing input {extra.text!r}", extra.position)
    return node


def parse_source(source: str) -> Expr:
    return parse(tokenize(source))


# ---------------------------------------------------------------------------
# evaluation

def _check_finite(value: float, what: str, pos: int) -> float:
    if not math.isfinite(value):
        raise EvalError(f"{what} produced a non-finite value", pos)
    return value


def eval_expr(expr: Expr, bindings: dict[str, float]) -> float:
    """Evaluate ``expr`` with the given variable bindings."""
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Var):
        try:
            return bindings[expr.name]
        except KeyError:
            raise EvalError(f"unbound variable {expr.name!r}", expr.pos) from None
    if isinstance(expr, Neg):
        return -eval_expr(expr.operand, bindings)
    if isinstance(expr, BinOp):
        a = eval_expr(expr.left, bindings)
        b = eval_expr(expr.right, bindings)
        op = expr.op
        try:
            if op == "+":
                value = a + b
            elif op == "-":
                value = a - b
            elif op == "*":
                value = a * b
            elif op == "/":
                if b == 0:
                    raise EvalError("division by zero", expr.pos)
                value = a / b
            else:  # ^
                value = math.pow(a, b)
        except EvalError:
            raise
        except (ValueError, OverflowError, ZeroDivisionError) as exc:
            raise EvalError(f"'{op}' failed: {exc}", expr.pos) from None
        return _check_finite(value, f"'{op}'", expr.pos)
    if isinstance(expr, Call):
        args = [eval_expr(a, bindings) for a in expr.args]
        try:
            if expr.func == "exp":
                value = math.exp(args[0])
            elif expr.func == "log":
                value = math.log(args[0])
            elif expr.func == "sqrt":
                value = math.sqrt(args[0])
            elif expr.func == "abs":
                value = abs(args[0])
            elif expr.func == "min":
                value = min(args)
            elif expr.func == "max":
                value = max(args)
            else:  # pow
                value = math.pow(args[0], args[1])
        except (ValueError, OverflowError, ZeroDivisionError) as exc:
            raise EvalError(f"{expr.func} failed: {exc}", expr.pos) from None
        return _check_finite(value, expr.func, expr.pos)
    raise EvalError(f"not an expression node: {expr!r}", -1)


# ---------------------------------------------------------------------------
# rendering and helpers

def to_source(expr: Expr) -> str:
    """Render a tree to source that reparses to a structurally equal tree."""
    if isinstance(expr, Const):
        if expr.value < 0 or math.copysign(1.0, expr.value) < 0:
            return f"(-{expr.value.__abs__()!r})"
        return repr(expr.value)
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Neg):
        return f"(-{to_source(expr.operand)})"
    if isinstance(expr, BinOp):
        return f"({to_source(expr.left)} {expr.op} {to_source(expr.right)})"
    if isinstance(expr, Call):
        return f"{expr.func}({', '.join(to_source(a) for a in expr.args)})"
    raise TypeError(f"not an expression node: {expr!r}")


def free_variables(expr: Expr) -> frozenset[str]:
    if isinstance(expr, Var):
        return frozenset({expr.name})
    if isinstance(expr, Neg):
        return free_variables(expr.operand)
    if isinstance(expr, BinOp):
        return free_variables(expr.left) | free_variables(expr.right)
    if isinstance(expr, Call):
        out: frozenset[str] = frozenset()
        for a in expr.args:
            out |= free_variables(a)
        return out
    return frozenset()


def compile_function(source: str, variables: tuple[str, ...]) -> Callable[..., float]:
    """Compile source text into a positional function of ``variables``.

    Lex/parse errors surface immediately; a reference to a variable outside
    ``variables`` is rejected up front so field arity mistakes fail fast.
    """
    expr = parse_source(source)
    extra = free_variables(expr) - set(variables)
    if extra:
        raise ParseError(
            f"expression uses {', '.join(sorted(extra))} but only"
            f" ({', '.join(variables)}) are bound here",
            0,
        )
    names = tuple(variables)

    def fn(*values: float) -> float:
        return eval_expr(expr, dict(zip(names, values)))

    return fn
