"""Text grammar for scalars.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary | implicit)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'i' | 'a' | 'b' | 'c' | '(' expr ')'

Implicit multiplication is accepted between adjacent atoms ("2a", "3(b+1)").
Decimal points are rejected: all values are exact.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import DivisionByZero, ParseError
from . import poly as P
from .gaussian import GaussianRational, I
from .ratfunc import RationalFunction, Scalar, var

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def _tokenize(text: str):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            if m.end() < n and text[m.end()] == ".":
                raise ParseError("decimal numbers are not allowed; use p/q", column=m.end() + 1)
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", column=start + 1)
            toks.append(("op", ch, start))
        pos = m.end()
    toks.append(("end", None, n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, column=tok[2] + 1)

    def parse(self) -> Scalar:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        v = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self):
        v = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "*/":
                tok = self.take()
                rhs = self.unary()
                if val == "*":
                    v = v * rhs
                else:
                    if not rhs:
                        raise ParseError("division by zero", column=tok[2] + 1)
                    v = v / rhs
            elif kind in ("int", "name") or (kind == "op" and val == "("):
                v = v * self.power()
            else:
                return v

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            v = self.unary()
            return -v if val == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise self.error("exponent must be a non-negative integer", tok)
            try:
                return base ** tok[1]
            except DivisionByZero:
                raise self.error("zero to a negative power", tok)
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return Fraction(val)
        if kind == "name":
            if val == "i":
                return I
            if val in P.VARS:
                return var(val)
            raise self.error(f"unknown name {val!r}", tok)
        if kind == "op" and val == "(":
            v = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                raise self.error("expected ')'", close)
            return v
        if kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected {val!r}", tok)


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar string such as ``"(c^2-1)/(2*a)"`` or ``"i/2"``."""
    return _Parser(text).parse()


# --- formatting -------------------------------------------------------------

def _fmt_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fmt_coeff(c) -> str:
    """Coefficient as a standalone string (may carry a leading sign)."""
    if isinstance(c, GaussianRational):
        re_, im = c.re, c.im
        if im == 1:
            ims = "i"
        elif im == -1:
            ims = "-i"
        else:
            ims = f"{_fmt_frac(im)}*i"
        if re_ == 0:
            return ims
        sep = "" if ims.startswith("-") else "+"
        return f"{_fmt_frac(re_)}{sep}{ims}"
    return _fmt_frac(Fraction(c))


def _monomial(e) -> str:
    parts = []
    for name, k in zip(P.VARS, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(terms) -> str:
    if not terms:
        return "0"
    out = []
    for e, c in sorted(terms.items(), key=lambda t: P.grlex_key(t[0]), reverse=True):
        mono = _monomial(e)
        if isinstance(c, GaussianRational) and c.re != 0:
            body = f"({_fmt_coeff(c)})"
            sign = "+"
        else:
            s = _fmt_coeff(c)
            sign = "-" if s.startswith("-") else "+"
            body = s.lstrip("-")
        if mono:
            body = mono if body == "1" else f"{body}*{mono}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def format_scalar(x) -> str:
    """Canonical string form, parseable by ``parse_scalar``."""
    if isinstance(x, RationalFunction):
        num = format_poly(x.num.terms)
        den = x.den
        if den == P.MultivarPoly.constant(Fraction(1)):
            return num
        if len(x.num.terms) > 1:
            num = f"({num})"
        return f"{num}/({format_poly(den.terms)})"
    if isinstance(x, int):
        x = Fraction(x)
    return _fmt_coeff(x)
