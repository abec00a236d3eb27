"""Parsing and expansion of human-written polynomial expressions.

Grammar (whitespace insignificant, multiplication always explicit):

    expr     := ('+' | '-')? term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := var | rational | '(' expr ')'
    rational := uint ('/' uint)?

Variable names are declared up front; juxtaposition is not multiplication
(write ``2*x*y``, not ``2xy``), which keeps multi-character names unambiguous.
Exponents are literal nonnegative integers.  An optional leading sign on any
(sub)expression is accepted so inputs like ``-x + y`` parse naturally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import ParseError
from .polynomial import Polynomial

# ---------------------------------------------------------------------------
# abstract syntax


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Neg:
    operand: "PolyExpr"


@dataclass(frozen=True)
class Add:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Sub:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Mul:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Pow:
    base: "PolyExpr"
    exponent: int


PolyExpr = Union[Var, Lit, Neg, Add, Sub, Mul, Pow]


# ---------------------------------------------------------------------------
# tokenizer

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>\d+)
  | (?P<op>[-+*^/()])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = _tokenize(text)
        self.index = 0
        self.variables = tuple(variables)

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, kind: str, value: str | None = None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            raise ParseError(f"expected {want!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return self.advance()

    def parse(self) -> PolyExpr:
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return node

    def expr(self) -> PolyExpr:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.advance()
            node: PolyExpr = self.term()
            if tok[1] == "-":
                node = Neg(node)
        else:
            node = self.term()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.advance()
                rhs = self.term()
                node = Add(node, rhs) if tok[1] == "+" else Sub(node, rhs)
            else:
                return node

    def term(self) -> PolyExpr:
        node = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.advance()
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self) -> PolyExpr:
        node = self.base()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.advance()
            etok = self.peek()
            if etok[0] != "int":
                raise ParseError(
                    "exponent must be a literal nonnegative integer", etok[2]
                )
            self.advance()
            return Pow(node, int(etok[1]))
        return node

    def base(self) -> PolyExpr:
        tok = self.peek()
        if tok[0] == "name":
            self.advance()
            if tok[1] not in self.variables:
                raise ParseError(f"unknown variable {tok[1]!r}", tok[2])
            return Var(tok[1])
        if tok[0] == "int":
            self.advance()
            numerator = int(tok[1])
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.advance()
                dtok = self.peek()
                if dtok[0] != "int":
                    raise ParseError("denominator must be a positive integer", dtok[2])
                self.advance()
                if int(dtok[1]) == 0:
                    raise ParseError("zero denominator", dtok[2])
                return Lit(Fraction(numerator, int(dtok[1])))
            return Lit(Fraction(numerator))
        if tok[0] == "op" and tok[1] == "(":
            self.advance()
            node = self.expr()
            self.expect("op", ")")
            return node
        raise ParseError(
            f"expected a variable, number, or '(' but found {tok[1] or 'end of input'!r}",
            tok[2],
        )


# ---------------------------------------------------------------------------
# public operations


def parse_expr(text: str, variables: Sequence[str]) -> PolyExpr:
    """Parse ``text`` into an abstract syntax tree over the declared variables."""
    names = tuple(variables)
    if len(set(names)) != len(names):
        raise ParseError(f"duplicate variable in declaration {names}", 0)
    for name in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise ParseError(f"invalid variable name {name!r}", 0)
    return _Parser(text, names).parse()


def expand(e: PolyExpr, variables: Sequence[str]) -> Polynomial:
    """Expand the syntax tree to a canonical term map.

    Products are distributed, powers expanded by repeated squaring, like
    terms collected, zero coefficients dropped.  Coefficients stay exact.
    """
    names = tuple(variables)
    if isinstance(e, Var):
        return Polynomial.variable(names, names.index(e.name))
    if isinstance(e, Lit):
        return Polynomial.constant(names, e.value)
    if isinstance(e, Neg):
        return -expand(e.operand, names)
    if isinstance(e, Add):
        return expand(e.left, names) + expand(e.right, names)
    if isinstance(e, Sub):
        return expand(e.left, names) - expand(e.right, names)
    if isinstance(e, Mul):
        return expand(e.left, names) * expand(e.right, names)
    if isinstance(e, Pow):
        return expand(e.base, names) ** e.exponent
    raise TypeError(f"not a PolyExpr node: {e!r}")


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse and expand in one step."""
    return expand(parse_expr(text, variables), variables)


def unparse(e: PolyExpr) -> str:
    """Render a syntax tree back to text (fully parenthesized where needed)."""
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Lit):
        return str(e.value)
    if isinstance(e, Neg):
        return f"-({unparse(e.operand)})"
    if isinstance(e, Add):
        return f"({unparse(e.left)} + {unparse(e.right)})"
    if isinstance(e, Sub):
        return f"({unparse(e.left)} - {unparse(e.right)})"
    if isinstance(e, Mul):
        return f"({unparse(e.left)} * {unparse(e.right)})"
    if isinstance(e, Pow):
        return f"({unparse(e.base)})^{e.exponent}"
    raise TypeError(f"not a PolyExpr node: {e!r}")
