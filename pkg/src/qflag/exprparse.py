"""Expression parser for the CLI surface syntax.

Grammar (whitespace separates tokens and is otherwise ignored):

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor | factor)*     juxtaposition multiplies
    factor := atom ['^' ['-'] INT]
    atom   := INT | 'q' | GEN | '(' expr ')'

Generator tokens are the per-algebra labels (u11..u33, a, g, u, U1, U2) with
a postfix apostrophe for the adjoint.  'q' is the deformation parameter.
Division requires a scalar, nonzero divisor; negative powers require a
scalar, nonzero base.  Errors carry the byte offset of the offending token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .coeff import QRat, as_qrat
from .errors import AlgebraMismatchError, ArithmeticDomainError, ParseError
from .presentation import NCPoly, Presentation

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*'?)|([-+*/^()]))")

# cap on literal exponents so that a typo cannot allocate a gigantic word
MAX_WORD_POWER = 512


@dataclass(frozen=True)
class Token:
    kind: str  # int | ident | op | end
    text: str
    pos: int


def tokenize(src: str):
    tokens = []
    pos = 0
    n = len(src)
    while pos < n:
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            stripped = src[pos:].lstrip()
            if not stripped:
                break
            at = n - len(stripped)
            raise ParseError(f"unexpected character {src[at]!r}", at)
        if m.group(1) is not None:
            tokens.append(Token("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(Token("ident", m.group(2), m.start(2)))
        else:
            tokens.append(Token("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, src: str, pres: Presentation):
        self.src = src
        self.pres = pres
        self.tokens = tokenize(src)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, text: str):
        tok = self.next()
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r}", tok.pos)

    # -- grammar -------------------------------------------------------------

    def parse(self) -> NCPoly:
        if self.peek().kind == "end":
            raise ParseError("empty expression", 0)
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"trailing input {tok.text!r}", tok.pos)
        return value

    def expr(self) -> NCPoly:
        negate = False
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.next()
            negate = tok.text == "-"
        value = self.term()
        if negate:
            value = -value
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.next()
                rhs = self.term()
                value = value - rhs if tok.text == "-" else value + rhs
            else:
                return value

    def _starts_factor(self, tok: Token) -> bool:
        return tok.kind in ("int", "ident") or (
            tok.kind == "op" and tok.text == "("
        )

    def term(self) -> NCPoly:
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "*/":
                self.next()
                rhs = self.factor()
                if tok.text == "*":
                    value = value * rhs
                else:
                    value = self._divide(value, rhs, tok.pos)
            elif self._starts_factor(tok):
                value = value * self.factor()
            else:
                return value

    def _divide(self, value: NCPoly, rhs: NCPoly, pos: int) -> NCPoly:
        if not rhs.is_scalar():
            raise ParseError("divisor must be a scalar", pos)
        c = rhs.scalar_coeff()
        if c.is_zero():
            raise ArithmeticDomainError("division by zero in expression")
        return value.scale(c.inverse())

    def factor(self) -> NCPoly:
        value = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.next()
            sign = 1
            tok2 = self.peek()
            if tok2.kind == "op" and tok2.text == "-":
                self.next()
                sign = -1
            tok2 = self.next()
            if tok2.kind != "int":
                raise ParseError("expected an integer exponent", tok2.pos)
            n = sign * int(tok2.text)
            if n < 0:
                if not value.is_scalar():
                    raise ParseError(
                        "negative power of a non-scalar", tok2.pos
                    )
                c = value.scalar_coeff()
                if c.is_zero():
                    raise ArithmeticDomainError("zero to a negative power")
                return self.pres.scalar(c ** n)
            if n > MAX_WORD_POWER and not value.is_scalar():
                raise ParseError(f"exponent {n} too large", tok2.pos)
            return value ** n
        return value

    def atom(self) -> NCPoly:
        tok = self.next()
        if tok.kind == "int":
            return self.pres.scalar(int(tok.text))
        if tok.kind == "ident":
            if tok.text == "q":
                return self.pres.scalar(QRat.q())
            g = self.pres.find_gen(tok.text)
            if g is None:
                raise AlgebraMismatchError(
                    f"{tok.text!r} is not a generator of {self.pres.name}",
                    tok.pos,
                )
            return self.pres.gen_poly(g)
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected token {tok.text!r}", tok.pos)


def parse(src: str, pres: Presentation) -> NCPoly:
    """Parse the expression into an (unreduced) NCPoly of the presentation."""
    return _Parser(src, pres).parse()
