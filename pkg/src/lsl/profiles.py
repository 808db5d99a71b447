"""Scalar and vector profile functions with first and second derivatives.

User-facing profiles are written as infix expressions in the variable ``u``,
e.g. ``"exp(2*u)"`` or ``"u^2 - 3*sinh(u)"``.  Expressions are parsed with
:mod:`ast` against a whitelist and differentiated symbolically.
"""

import ast
from dataclasses import dataclass
from typing import Callable

import numpy as np
import sympy as sp

from .errors import ParseError

_U = sp.Symbol("u", real=True)

FUNCTIONS = {
    "sin": sp.sin,
    "cos": sp.cos,
    "sinh": sp.sinh,
    "cosh": sp.cosh,
    "exp": sp.exp,
    "sqrt": sp.sqrt,
    "pow": sp.Pow,
}

CONSTANTS = {"pi": sp.pi, "e": sp.E}

_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
    ast.Pow: lambda a, b: a**b,
    ast.BitXor: lambda a, b: a**b,  # `^` reads as power
}


def _to_sympy(node, text):
    pos = getattr(node, "col_offset", None)
    if isinstance(node, ast.Expression):
        return _to_sympy(node.body, text)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
        return sp.Integer(node.value) if isinstance(node.value, int) else sp.Float(node.value)
    if isinstance(node, ast.Name):
        if node.id == "u":
            return _U
        if node.id in CONSTANTS:
            return CONSTANTS[node.id]
        raise ParseError(f"unknown name {node.id!r}", pos)
    if isinstance(node, ast.BinOp):
        op = _BINOPS.get(type(node.op))
        if op is None:
            raise ParseError(f"unsupported operator {type(node.op).__name__}", pos)
        return op(_to_sympy(node.left, text), _to_sympy(node.right, text))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _to_sympy(node.operand, text)
        return -inner if isinstance(node.op, ast.USub) else inner
    if isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.func.id not in FUNCTIONS:
            raise ParseError("unknown function", pos)
        if node.keywords:
            raise ParseError("keyword arguments are not allowed", pos)
        name = node.func.id
        want = 2 if name == "pow" else 1
        if len(node.args) != want:
            raise ParseError(f"{name} takes {want} argument(s)", pos)
        return FUNCTIONS[name](*[_to_sympy(a, text) for a in node.args])
    raise ParseError(f"unsupported syntax {type(node).__name__}", pos)


def parse_expression(text):
    """Parse ``text`` into a sympy expression in ``u``."""
    if not text or not text.strip():
        raise ParseError("empty expression", 0)
    lead = len(text) - len(text.lstrip())
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        offset = None if exc.offset is None else exc.offset - 1 + lead
        raise ParseError(f"invalid expression {text!r}: {exc.msg}", offset) from None
    try:
        return _to_sympy(tree, text)
    except ParseError as exc:
        pos = None if exc.position is None else exc.position + lead
        raise ParseError(f"{exc.reason} in {text!r}", pos) from None


@dataclass(frozen=True)
class Profile:
    """A scalar function of one variable with its first two derivatives."""

    f: Callable[[float], float]
    df: Callable[[float], float]
    d2f: Callable[[float], float]
    text: str = "<callable>"

    def __call__(self, u):
        return self.f(u), self.df(u), self.d2f(u)

    @classmethod
    def from_expr(cls, text):
        expr = parse_expression(text)
        d1 = sp.diff(expr, _U)
        d2 = sp.diff(d1, _U)
        fns = [sp.lambdify(_U, e, modules="math") for e in (expr, d1, d2)]
        return cls(*[_as_float(fn) for fn in fns], text=text)

    @classmethod
    def constant(cls, c):
        c = float(c)
        return cls(lambda u: c, lambda u: 0.0, lambda u: 0.0, text=repr(c))

    def scaled(self, c):
        """Profile of ``u -> self(c * u)``."""
        f, df, d2f = self.f, self.df, self.d2f
        return Profile(
            lambda u: f(c * u),
            lambda u: c * df(c * u),
            lambda u: c * c * d2f(c * u),
            text=f"({self.text})@({c}*u)",
        )


def _as_float(fn):
    return lambda u: float(fn(u))


@dataclass(frozen=True)
class CurveProfile:
    """A curve in R^4_1 with first and second derivatives.

    Each callable maps a parameter to a shape-(4,) array.
    """

    pos: Callable[[float], np.ndarray]
    d1: Callable[[float], np.ndarray]
    d2: Callable[[float], np.ndarray]
    text: str = "<callable>"

    def __call__(self, t):
        return np.asarray(self.pos(t), float), np.asarray(self.d1(t), float), np.asarray(self.d2(t), float)

    @classmethod
    def from_exprs(cls, texts):
        """Build a curve from four component expressions in ``u``."""
        if len(texts) != 4:
            raise ParseError(f"a curve needs 4 components, got {len(texts)}")
        comps = [Profile.from_expr(t) for t in texts]
        return cls(
            lambda t: np.array([c.f(t) for c in comps]),
            lambda t: np.array([c.df(t) for c in comps]),
            lambda t: np.array([c.d2f(t) for c in comps]),
            text=",".join(texts),
        )

    def transformed(self, L, offset=None):
        """Image of the curve under ``x -> L @ x + offset``."""
        L = np.asarray(L, dtype=float)
        off = np.zeros(4) if offset is None else np.asarray(offset, dtype=float)
        p, d1, d2 = self.pos, self.d1, self.d2
        return CurveProfile(
            lambda t: L @ p(t) + off,
            lambda t: L @ d1(t),
            lambda t: L @ d2(t),
            text=self.text,
        )


def split_components(text):
    """Split ``"a, b, c, d"`` on top-level commas (commas inside calls kept)."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return parts
