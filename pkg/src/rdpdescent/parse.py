"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace ignored everywhere):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := integer
            | variable ('^' positive-integer)?
            | '(' expr ')'

Integer literals of any size are accepted and reduced mod p, so equations
written over the integers can be pasted directly.  Juxtaposition is NOT
multiplication: 'xy' is an error unless 'xy' is a declared variable name.
This is the wire format used by the CLI and the catalog file.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .errors import UsageError
from .poly import Mono, Polynomial, Ring, _from_dict, mono_mul


class ParseError(UsageError):
    """Syntax or lookup error, with the byte offset where it happened."""

    def __init__(self, position: int, message: str):
        self.position = position
        self.message = message
        super().__init__(f"parse error at position {position}: {message}")


class _Parser:
    def __init__(self, src: str, ring: Ring):
        self.src = src
        self.ring = ring
        self.n = len(src)
        self.pos = 0

    def _skip_ws(self):
        while self.pos < self.n and self.src[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.src[self.pos] if self.pos < self.n else ""

    def _expect(self, ch: str):
        if self._peek() != ch:
            raise ParseError(self.pos, f"expected {ch!r}")
        self.pos += 1

    def _integer(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < self.n and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(start, "expected an integer")
        return int(self.src[start:self.pos])

    def _identifier(self) -> Tuple[int, str]:
        self._skip_ws()
        start = self.pos
        while self.pos < self.n and (self.src[self.pos].isalnum() or self.src[self.pos] == "_"):
            self.pos += 1
        return start, self.src[start:self.pos]

    # Terms are carried around as {monomial: coeff} dicts and only packed
    # into a Polynomial at the very end.

    def expr(self) -> Dict[Mono, int]:
        acc = self.term()
        while True:
            ch = self._peek()
            if ch != "+" and ch != "-":
                return acc
            self.pos += 1
            rhs = self.term()
            sign = 1 if ch == "+" else -1
            for m, c in rhs.items():
                acc[m] = acc.get(m, 0) + sign * c

    def term(self) -> Dict[Mono, int]:
        acc = self.factor()
        while self._peek() == "*":
            self.pos += 1
            rhs = self.factor()
            prod: Dict[Mono, int] = {}
            for ma, ca in acc.items():
                for mb, cb in rhs.items():
                    m = mono_mul(ma, mb)
                    prod[m] = prod.get(m, 0) + ca * cb
            acc = prod
        return acc

    def factor(self) -> Dict[Mono, int]:
        ch = self._peek()
        if ch == "":
            raise ParseError(self.pos, "unexpected end of input")
        unit: Mono = (0,) * self.ring.nvars
        if ch.isdigit():
            return {unit: self._integer()}
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self._peek() != ")":
                raise ParseError(self.pos, "unbalanced parentheses: expected ')'")
            self.pos += 1
            return inner
        if ch.isalpha() or ch == "_":
            start, name = self._identifier()
            try:
                idx = self.ring.names.index(name)
            except ValueError:
                hint = ""
                if len(name) > 1 and all(c in self.ring.names for c in name):
                    hint = " (juxtaposition is not multiplication; write explicit '*')"
                raise ParseError(start, f"unknown variable {name!r}{hint}") from None
            e = 1
            if self._peek() == "^":
                self.pos += 1
                epos = self.pos
                self._skip_ws()
                if self.pos >= self.n or not self.src[self.pos].isdigit():
                    raise ParseError(epos, "malformed exponent: expected a positive integer")
                e = self._integer()
                if e < 1:
                    raise ParseError(epos, "malformed exponent: must be >= 1")
            exps = [0] * self.ring.nvars
            exps[idx] = e
            return {tuple(exps): 1}
        raise ParseError(self.pos, f"unexpected character {ch!r}")


def parse_poly(src: str, ring: Ring) -> Polynomial:
    """Parse src into a polynomial of the given ambient ring.

    Every failure raises ParseError carrying the offending byte offset;
    the parser never crashes on malformed text.
    """
    if not isinstance(src, str) or not src.strip():
        raise ParseError(0, "empty input")
    parser = _Parser(src, ring)
    acc = parser.expr()
    parser._skip_ws()
    if parser.pos != parser.n:
        raise ParseError(parser.pos, f"unexpected trailing input {src[parser.pos:]!r}")
    return _from_dict(ring, acc)
