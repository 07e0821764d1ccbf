"""Small expression language over 6-dimensional hypercomplex values.

Grammar (whitespace-insensitive)::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor | factor)*      # juxtaposition multiplies
    factor := unary ("^" int)?
    unary  := "-" unary | atom
    atom   := number | "h1".."h5" | ident "(" expr ("," expr)* ")" | "(" expr ")"

``^`` takes an integer literal exponent; real powers go through the
two-argument function ``pow(u, m)``.  Every node carries its source span
so errors point at the offending characters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from . import elementary
from .algebra import ZERO_COMPONENT_RTOL, HexaNumber, Variant
from .errors import DomainError, ParseError

__all__ = [
    "Expression",
    "Number",
    "BasisSymbol",
    "Negate",
    "BinaryOp",
    "Power",
    "Call",
    "parse",
    "unparse",
    "evaluate",
    "FUNCTION_NAMES",
]

FUNCTION_NAMES = ("exp", "ln", "sin", "cos", "sinh", "cosh", "inv", "pow")
_FUNCTION_ARITY = {name: 1 for name in FUNCTION_NAMES}
_FUNCTION_ARITY["pow"] = 2

Span = tuple[int, int]


@dataclass(frozen=True)
class Number:
    value: float
    span: Span = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class BasisSymbol:
    index: int
    span: Span = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class Negate:
    operand: "Expression"
    span: Span = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: "Expression"
    right: "Expression"
    span: Span = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class Power:
    base: "Expression"
    exponent: int
    span: Span = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["Expression", ...]
    span: Span = field(compare=False, default=(0, 0))


Expression = Union[Number, BasisSymbol, Negate, BinaryOp, Power, Call]


_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^(),])
""", re.VERBOSE)


@dataclass(frozen=True)
class _Token:
    kind: str  # number | ident | op | end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            line, column = _line_column(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, column,
                             frozenset({"number", "identifier", "operator"}))
        if m.lastgroup != "ws":
            tokens.append(_Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


def _line_column(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    last_nl = text.rfind("\n", 0, pos)
    return line, pos - last_nl if last_nl >= 0 else pos + 1


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _fail(self, expected: set[str]) -> ParseError:
        tok = self.current
        line, column = _line_column(self.text, tok.pos)
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        return ParseError(f"unexpected {what}", line, column, frozenset(expected))

    def _advance(self) -> _Token:
        tok = self.current
        self.index += 1
        return tok

    def _accept_op(self, *ops: str) -> _Token | None:
        tok = self.current
        if tok.kind == "op" and tok.text in ops:
            return self._advance()
        return None

    def _expect_op(self, op: str) -> _Token:
        tok = self._accept_op(op)
        if tok is None:
            raise self._fail({f"'{op}'"})
        return tok

    def parse(self) -> Expression:
        node = self.expression()
        if self.current.kind != "end":
            raise self._fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"})
        return node

    def expression(self) -> Expression:
        node = self.term()
        while True:
            tok = self._accept_op("+", "-")
            if tok is None:
                return node
            right = self.term()
            node = BinaryOp(tok.text, node, right, (node.span[0], right.span[1]))

    def _starts_factor(self) -> bool:
        tok = self.current
        return tok.kind in ("number", "ident") or (tok.kind == "op" and tok.text == "(")

    def term(self) -> Expression:
        node = self.factor()
        while True:
            tok = self._accept_op("*", "/")
            if tok is not None:
                right = self.factor()
                node = BinaryOp(tok.text, node, right, (node.span[0], right.span[1]))
            elif self._starts_factor():
                right = self.factor()
                node = BinaryOp("*", node, right, (node.span[0], right.span[1]))
            else:
                return node

    def factor(self) -> Expression:
        node = self.unary()
        if self._accept_op("^") is not None:
            negative = self._accept_op("-") is not None
            tok = self.current
            if tok.kind != "number" or not re.fullmatch(r"\d+", tok.text):
                raise self._fail({"integer exponent"})
            self._advance()
            exponent = int(tok.text)
            node = Power(node, -exponent if negative else exponent,
                         (node.span[0], tok.pos + len(tok.text)))
        return node

    def unary(self) -> Expression:
        tok = self._accept_op("-")
        if tok is not None:
            operand = self.unary()
            return Negate(operand, (tok.pos, operand.span[1]))
        return self.atom()

    def atom(self) -> Expression:
        tok = self.current
        if tok.kind == "number":
            self._advance()
            return Number(float(tok.text), (tok.pos, tok.pos + len(tok.text)))
        if tok.kind == "ident":
            self._advance()
            if re.fullmatch(r"h[1-5]", tok.text):
                return BasisSymbol(int(tok.text[1]), (tok.pos, tok.pos + len(tok.text)))
            if tok.text not in FUNCTION_NAMES:
                line, column = _line_column(self.text, tok.pos)
                raise ParseError(f"unknown name {tok.text!r}", line, column,
                                 frozenset({"h1..h5", *FUNCTION_NAMES}))
            self._expect_op("(")
            args = [self.expression()]
            while self._accept_op(",") is not None:
                args.append(self.expression())
            closing = self._expect_op(")")
            arity = _FUNCTION_ARITY[tok.text]
            if len(args) != arity:
                line, column = _line_column(self.text, tok.pos)
                raise ParseError(
                    f"{tok.text} takes {arity} argument{'s' if arity > 1 else ''}, got {len(args)}",
                    line, column, frozenset())
            return Call(tok.text, tuple(args), (tok.pos, closing.pos + 1))
        if tok.kind == "op" and tok.text == "(":
            self._advance()
            node = self.expression()
            self._expect_op(")")
            return node
        raise self._fail({"number", "h1..h5", "function call", "'('"})


def parse(text: str) -> Expression:
    """Parse the expression language; raises :class:`ParseError` with position."""
    return _Parser(text).parse()


_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2}


def _node_precedence(node: Expression) -> int:
    if isinstance(node, BinaryOp):
        return _PRECEDENCE[node.op]
    if isinstance(node, Negate):
        return 3
    if isinstance(node, Power):
        return 4
    return 9


def _wrap(text: str, needed: bool) -> str:
    return f"({text})" if needed else text


def unparse(node: Expression) -> str:
    """Text form that re-parses to a structurally equal tree."""
    if isinstance(node, Number):
        return repr(node.value)
    if isinstance(node, BasisSymbol):
        return f"h{node.index}"
    if isinstance(node, Negate):
        inner = unparse(node.operand)
        # '^' binds above unary minus here (-x^2 reads as (-x)^2), so a
        # negated power needs parentheses just like a negated sum
        return "-" + _wrap(inner, isinstance(node.operand, (BinaryOp, Power)))
    if isinstance(node, Power):
        base = unparse(node.base)
        return _wrap(base, _node_precedence(node.base) < 9) + f"^{node.exponent}"
    if isinstance(node, Call):
        return f"{node.name}({', '.join(unparse(a) for a in node.args)})"
    if isinstance(node, BinaryOp):
        p = _PRECEDENCE[node.op]
        left = _wrap(unparse(node.left), _node_precedence(node.left) < p)
        # the grammar associates left, so a same-precedence right child needs parens
        right = _wrap(unparse(node.right), _node_precedence(node.right) <= p)
        return f"{left} {node.op} {right}"
    raise TypeError(f"not an expression node: {node!r}")


def _as_scalar(value: HexaNumber) -> float:
    tol = 1e-12 * (1.0 + abs(value.components[0]))
    if any(abs(c) > tol for c in value.components[1:]):
        raise DomainError("pow exponent must evaluate to a real scalar")
    return value.components[0]


def evaluate(node: Expression, variant: Variant,
             zero_rtol: float = ZERO_COMPONENT_RTOL) -> HexaNumber:
    """Evaluate an expression tree in the given variant.

    Division multiplies by the inverse, so dividing by a zero divisor
    raises :class:`ZeroDivisorError` naming the vanished component.
    """
    if isinstance(node, Number):
        return HexaNumber.from_real(variant, node.value)
    if isinstance(node, BasisSymbol):
        return HexaNumber.basis(variant, node.index)
    if isinstance(node, Negate):
        return -evaluate(node.operand, variant, zero_rtol)
    if isinstance(node, BinaryOp):
        left = evaluate(node.left, variant, zero_rtol)
        right = evaluate(node.right, variant, zero_rtol)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        return left * right.inverse(zero_rtol)
    if isinstance(node, Power):
        base = evaluate(node.base, variant, zero_rtol)
        if node.exponent < 0:
            base = base.inverse(zero_rtol)
            return base ** (-node.exponent)
        return base ** node.exponent
    if isinstance(node, Call):
        args = [evaluate(a, variant, zero_rtol) for a in node.args]
        if node.name == "inv":
            return args[0].inverse(zero_rtol)
        if node.name == "pow":
            return elementary.pow_real(args[0], _as_scalar(args[1]))
        fn = getattr(elementary, node.name)
        return fn(args[0])
    raise TypeError(f"not an expression node: {node!r}")
