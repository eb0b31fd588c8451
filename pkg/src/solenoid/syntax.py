"""Parser for the ``key=rat; prime:rat; ...`` mini-language.

    spec := item (';' item)*
    item := name '=' rat | prime ':' rat
    rat  := ['-'] int ['/' nat]

Whitespace between tokens is ignored.  Extensions use the names ``sigma`` and
``tail``; solenoid classes use ``real`` and ``tail``.  Every name defaults to 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from solenoid.adele import AdeleClass, FiniteAdele, canonicalize
from solenoid.exact_arith import is_prime
from solenoid.extension import RigidExt

_TOKEN = re.compile(r"\s*(?:(?P<int>[0-9]+)|(?P<name>[A-Za-z_]+)|(?P<op>[-/=:;])|(?P<bad>\S))")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, token: str):
        self.line, self.column, self.token = line, column, token
        shown = "end of input" if token == "" else repr(token)
        super().__init__(f"line {line}, column {column}: {message} (at {shown})")


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(_Tok("end", "", len(text.rstrip())))
    return toks


@dataclass
class ExtSpec:
    sigma: Fraction = Fraction(0)
    tail: Fraction = Fraction(0)
    overrides: dict[int, Fraction] = field(default_factory=dict)

    def to_rigid(self) -> RigidExt:
        return RigidExt.of(FiniteAdele(self.tail, tuple(self.overrides.items())), self.sigma)


class _Parser:
    def __init__(self, text: str, names: tuple[str, ...]):
        self.text = text
        self.names = names
        self.toks = _tokenize(text)
        self.i = 0

    def where(self, tok: _Tok) -> tuple[int, int]:
        before = self.text[: tok.pos]
        return before.count("\n") + 1, tok.pos - (before.rfind("\n") + 1) + 1

    def fail(self, message: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        line, col = self.where(tok)
        raise ParseError(message, line, col, tok.text)

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> _Tok:
        tok = self.peek()
        if tok.kind != "op" or tok.text != op:
            self.fail(f"expected {op!r}")
        return self.take()

    def rat(self) -> Fraction:
        sign = 1
        if self.peek().kind == "op" and self.peek().text == "-":
            self.take()
            sign = -1
        tok = self.peek()
        if tok.kind != "int":
            self.fail("expected an integer")
        num = int(self.take().text)
        den = 1
        if self.peek().kind == "op" and self.peek().text == "/":
            self.take()
            tok = self.peek()
            if tok.kind != "int":
                self.fail("expected a denominator")
            den = int(self.take().text)
            if den == 0:
                self.fail("zero denominator", tok)
        return Fraction(sign * num, den)

    def parse(self) -> tuple[dict[str, Fraction], dict[int, Fraction]]:
        keyed: dict[str, Fraction] = {}
        primes: dict[int, Fraction] = {}
        if self.peek().kind == "end":
            return keyed, primes
        while True:
            tok = self.peek()
            if tok.kind == "name":
                if tok.text not in self.names:
                    self.fail(f"unknown name, expected one of {', '.join(self.names)}")
                if tok.text in keyed:
                    self.fail("duplicate key")
                self.take()
                self.expect_op("=")
                keyed[tok.text] = self.rat()
            elif tok.kind == "int":
                p = int(tok.text)
                if not is_prime(p):
                    self.fail("not a prime")
                if p in primes:
                    self.fail("duplicate key")
                self.take()
                self.expect_op(":")
                primes[p] = self.rat()
            else:
                self.fail("expected a name or a prime")
            tok = self.peek()
            if tok.kind == "end":
                return keyed, primes
            self.expect_op(";")


def parse_items(text: str, names: tuple[str, ...]):
    return _Parser(text, names).parse()


def parse_ext_spec(text: str) -> ExtSpec:
    keyed, primes = parse_items(text, ("sigma", "tail"))
    return ExtSpec(keyed.get("sigma", Fraction(0)), keyed.get("tail", Fraction(0)), primes)


def parse_rigid(text: str) -> RigidExt:
    return parse_ext_spec(text).to_rigid()


def parse_class(text: str) -> AdeleClass:
    """Parse ``real=..; tail=..; p:r`` and canonicalize."""
    keyed, primes = parse_items(text, ("real", "tail"))
    fin = FiniteAdele(keyed.get("tail", Fraction(0)), tuple(primes.items()))
    return canonicalize(keyed.get("real", Fraction(0)), fin)
