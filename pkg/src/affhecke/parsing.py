"""Text forms accepted on the command line.

Element expressions combine atoms with +, -, *, ^ and parentheses:

    T[s1 s0 r-]      basis element named by a word in the generators
    T(w[-1,2])       basis element named by a window
    X2               one of the commuting positive generators
    v, 3, (v^-2-1)   scalars

A caret takes integer exponents; negative exponents are allowed for
scalars and for single basis terms with unit coefficient, where the
basis inverse is expanded exactly.
"""

from __future__ import annotations

import re

from . import hecke, weyl
from .errors import ElementParseError
from .laurent import LaurentPoly

_TOKEN = re.compile(r"(T\(w\[[^\]]*\]\)|T\[[^\]]*\]|X\d+|v|\d+|\^|\+|-|\*|\(|\))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ElementParseError(f"unexpected input at position {pos}: {text[pos:]!r}")
        tokens.append(m.group(0))
        pos = m.end()
    return tokens


def parse_window(text: str) -> tuple[int, ...]:
    m = re.fullmatch(r"\s*w\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]\s*", text)
    if m is None:
        raise ElementParseError(f"not a window: {text!r} (expected like w[-1,2])")
    return tuple(int(x) for x in m.group(1).split(","))


def parse_perm(n: int, text: str) -> weyl.AffinePerm:
    try:
        return weyl.AffinePerm(n, parse_window(text))
    except ValueError as exc:
        raise ElementParseError(str(exc)) from None


def parse_partition(text: str) -> tuple[int, ...]:
    m = re.fullmatch(r"\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*", text)
    if m is None:
        raise ElementParseError(f"not a comma-separated integer tuple: {text!r}")
    return tuple(int(x) for x in m.group(1).split(","))


class _Parser:
    def __init__(self, n: int, tokens: list[str]):
        self.n = n
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ElementParseError("unexpected end of expression")
        self.pos += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.take()
        if got != tok:
            raise ElementParseError(f"expected {tok!r}, got {got!r}")

    def expression(self) -> hecke.HeckeElt:
        out = self._signed_term()
        while self.peek() in ("+", "-"):
            op = self.take()
            term = self._signed_term()
            out = out + term if op == "+" else out - term
        return out

    def _signed_term(self) -> hecke.HeckeElt:
        sign = 1
        while self.peek() == "-":
            self.take()
            sign = -sign
        term = self.term()
        return term if sign == 1 else term.scale(-1)

    def term(self) -> hecke.HeckeElt:
        out = self.factor()
        while self.peek() == "*":
            self.take()
            out = out * self.factor()
        return out

    def factor(self) -> hecke.HeckeElt:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            base = _power(self.n, base, self.integer())
        return base

    def integer(self) -> int:
        tok = self.take()
        sign = 1
        if tok == "-":
            sign = -1
            tok = self.take()
        if not tok.isdigit():
            raise ElementParseError(f"expected an integer exponent, got {tok!r}")
        return sign * int(tok)

    def atom(self) -> hecke.HeckeElt:
        tok = self.take()
        if tok == "(":
            inner = self.expression()
            self.expect(")")
            return inner
        if tok == "v":
            return hecke.one(self.n).scale(LaurentPoly.monomial(1))
        if tok.isdigit():
            return hecke.one(self.n).scale(int(tok))
        if tok.startswith("T["):
            try:
                word = weyl.Word.parse(self.n, tok[2:-1])
            except ValueError as exc:
                raise ElementParseError(str(exc)) from None
            return hecke.t_basis(word.to_perm())
        if tok.startswith("T(w["):
            window = tuple(int(x) for x in tok[4:-2].split(",")) if tok[4:-2].strip() else ()
            try:
                return hecke.t_basis(weyl.AffinePerm(self.n, window))
            except ValueError as exc:
                raise ElementParseError(str(exc)) from None
        if tok.startswith("X"):
            i = int(tok[1:])
            if not 1 <= i <= self.n:
                raise ElementParseError(f"X{i} out of range 1..{self.n}")
            return hecke.x_element(self.n, i)
        raise ElementParseError(f"unexpected token {tok!r}")


def _invert(n: int, elt: hecke.HeckeElt) -> hecke.HeckeElt:
    terms = list(elt.terms.items())
    if len(terms) != 1:
        raise ElementParseError("negative powers need a single-term base")
    w, c = terms[0]
    items = c.items()
    if len(items) != 1 or items[0][1] not in (1, -1):
        raise ElementParseError("negative powers need a unit coefficient")
    exp, coef = items[0]
    return hecke.invert_t(w).scale(LaurentPoly.monomial(-exp, coef))


def _power(n: int, base: hecke.HeckeElt, k: int) -> hecke.HeckeElt:
    if k < 0:
        base = _invert(n, base)
        k = -k
    out = hecke.one(n)
    for _ in range(k):
        out = out * base
    return out


def parse_element(n: int, text: str) -> hecke.HeckeElt:
    parser = _Parser(n, _tokenize(text))
    out = parser.expression()
    if parser.peek() is not None:
        raise ElementParseError(f"trailing tokens starting at {parser.peek()!r}")
    return out
