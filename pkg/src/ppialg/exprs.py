"""Expression grammar for algebra elements.

    expr    := term (('+' | '-') term)*
    term    := factor (('*' factor) | factor)*        juxtaposition multiplies
    factor  := '-' factor | power
    power   := primary ('^' INT)?                     INT >= 1
    primary := SCALAR | atom | 'adj' '(' expr ')' | '(' expr ')'
    atom    := 'v' | 'v*' | 'e' | 'p' | 'pt'
             | 'pi[' n ']' | 'pit[' n ']' | 'z[' n ']'
             | 'eu[' n ',' i ',' j ']' | 'f[' i ',' j ']' | 'ft[' i ',' j ']'
    SCALAR  := INT ('/' INT)? 'i'? | 'i'              exact Gaussian rationals

`v*` binds the star to the letter; a free-standing `*` is multiplication.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import algebra
from .algebra import Element
from .scalars import IMAG, GaussianRational


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "name", "op"
    value: object
    pos: int


_NUM_RE = re.compile(r"\d+(?:/\d+)?(i?)")
_NAME_RE = re.compile(r"[A-Za-z]+")
_NAMES = {"v", "v*", "e", "p", "pt", "pi", "pit", "z", "eu", "f", "ft", "adj", "i"}
_OPS = set("+-*^()[],")


def _tokenize(text: str) -> list[_Token]:
    out: list[_Token] = []
    pos, n = 0, len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "−":
            ch = "-"
        if text.startswith("v*", pos):
            out.append(_Token("name", "v*", pos))
            pos += 2
            continue
        if ch.isdigit():
            m = _NUM_RE.match(text, pos)
            frac = Fraction(m.group(0)[:-1] if m.group(1) else m.group(0))
            val = GaussianRational(Fraction(0), frac) if m.group(1) else GaussianRational(frac)
            out.append(_Token("num", val, pos))
            pos = m.end()
            continue
        if ch.isalpha():
            m = _NAME_RE.match(text, pos)
            name = m.group(0)
            if name == "i":
                out.append(_Token("num", IMAG, pos))
            elif name in _NAMES:
                out.append(_Token("name", name, pos))
            else:
                raise ExprSyntaxError(f"unknown name {name!r}", pos)
            pos = m.end()
            continue
        if ch in _OPS:
            out.append(_Token("op", ch, pos))
            pos += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", pos)
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.idx = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.idx] if self.idx < len(self.tokens) else None

    def next(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ExprSyntaxError("unexpected end of expression", len(self.text))
        self.idx += 1
        return tok

    def expect(self, value: str) -> _Token:
        tok = self.next()
        if tok.kind != "op" or tok.value != value:
            raise ExprSyntaxError(f"expected {value!r}", tok.pos)
        return tok

    def parse(self) -> Element:
        value = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ExprSyntaxError("trailing input", tok.pos)
        return value

    def expr(self) -> Element:
        value = self.term()
        while True:
            tok = self.peek()
            if tok and tok.kind == "op" and tok.value in "+-":
                self.next()
                rhs = self.term()
                value = value + rhs if tok.value == "+" else value - rhs
            else:
                return value

    def _starts_factor(self, tok: _Token | None) -> bool:
        if tok is None:
            return False
        if tok.kind in ("num", "name"):
            return True
        return tok.kind == "op" and tok.value == "("

    def term(self) -> Element:
        value = self.factor()
        while True:
            tok = self.peek()
            if tok and tok.kind == "op" and tok.value == "*":
                self.next()
                value = value * self.factor()
            elif self._starts_factor(tok):
                value = value * self.factor()
            else:
                return value

    def factor(self) -> Element:
        tok = self.peek()
        if tok and tok.kind == "op" and tok.value == "-":
            self.next()
            return -self.factor()
        return self.power()

    def power(self) -> Element:
        value = self.primary()
        tok = self.peek()
        if tok and tok.kind == "op" and tok.value == "^":
            self.next()
            k = self._int(minimum=1)
            out = value
            for _ in range(k - 1):
                out = out * value
            return out
        return value

    def _int(self, minimum: int) -> int:
        tok = self.next()
        if tok.kind != "num" or tok.value.im or tok.value.re.denominator != 1:
            raise ExprSyntaxError("expected an integer", tok.pos)
        k = int(tok.value.re)
        if k < minimum:
            raise ExprSyntaxError(f"expected an integer >= {minimum}", tok.pos)
        return k

    def _indices(self, count: int, minimum: int = 0) -> list[int]:
        self.expect("[")
        out = [self._int(minimum)]
        for _ in range(count - 1):
            self.expect(",")
            out.append(self._int(minimum))
        self.expect("]")
        return out

    def primary(self) -> Element:
        tok = self.next()
        if tok.kind == "num":
            return Element(unit=tok.value)
        if tok.kind == "op" and tok.value == "(":
            value = self.expr()
            self.expect(")")
            return value
        if tok.kind == "name":
            name = tok.value
            if name == "v":
                return algebra.v_power(1)
            if name == "v*":
                return algebra.vstar_power(1)
            if name == "e":
                return algebra.e_elem()
            if name == "p":
                return algebra.p_elem()
            if name == "pt":
                return algebra.ptilde_elem()
            if name == "adj":
                self.expect("(")
                value = self.expr()
                self.expect(")")
                return value.adjoint()
            if name in ("pi", "pit", "z"):
                (n,) = self._indices(1, minimum=1)
                fn = {"pi": algebra.pi, "pit": algebra.pitilde, "z": algebra.z}[name]
                return fn(n)
            if name == "eu":
                n, i, j = self._indices(3)
                return algebra.matrix_unit(n, i, j)
            if name in ("f", "ft"):
                i, j = self._indices(2)
                return (algebra.f if name == "f" else algebra.ftilde)(i, j)
        raise ExprSyntaxError("expected a scalar, atom, or parenthesised expression", tok.pos)


def parse_element(text: str) -> Element:
    """Parse an element expression; raises ExprSyntaxError with a position."""
    if not text.strip():
        raise ExprSyntaxError("empty expression", 0)
    return _Parser(text).parse()
