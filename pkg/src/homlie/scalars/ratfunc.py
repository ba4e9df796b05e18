"""Rational functions over Q(i) in a, b, c, and the Scalar helpers.

A Scalar is a Fraction, a GaussianRational or a RationalFunction.  Every
arithmetic result is returned in the smallest of these that holds it, so a
rational function never has a constant value and equality of scalars is
equality of canonical forms.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

from ..errors import DenominatorVanishes, DivisionByZero
from . import poly as P
from .gaussian import GaussianRational, gauss

_COEFF = (Fraction, GaussianRational, int)


class RationalFunction:
    """num/den with gcd(num, den) = 1 and den monic in graded-lex order."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num, den=None):
        n = _as_dict(num)
        d = P.ONE if den is None else _as_dict(den)
        if not d:
            raise DivisionByZero("zero denominator")
        n, d = _reduce(n, d)
        self._num, self._den, self._hash = n, d, None

    @classmethod
    def _raw(cls, n, d):
        obj = cls.__new__(cls)
        obj._num, obj._den, obj._hash = n, d, None
        return obj

    @property
    def num(self) -> P.MultivarPoly:
        return P.MultivarPoly._raw(self._num)

    @property
    def den(self) -> P.MultivarPoly:
        return P.MultivarPoly._raw(self._den)

    def variables(self) -> set[str]:
        return self.num.variables() | self.den.variables()

    def __add__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        return _make(*_add(self._num, self._den, *o))

    __radd__ = __add__

    def __sub__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        return _make(*_add(self._num, self._den, P.neg(o[0]), o[1]))

    def __rsub__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        return _make(*_add(o[0], o[1], P.neg(self._num), self._den))

    def __mul__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        return _make(*_mul(self._num, self._den, *o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        return _make(*_mul(self._num, self._den, *_inv(*o)))

    def __rtruediv__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        return _make(*_mul(o[0], o[1], *_inv(self._num, self._den)))

    def __neg__(self):
        return RationalFunction._raw(P.neg(self._num), self._den)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        num, den = self._num, self._den
        if n < 0:
            num, den = _inv(num, den)
            n = -n
        return _make(P.power(num, n), P.power(den, n))

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self._num == other._num and self._den == other._den
        if isinstance(other, _COEFF):
            return P.is_const(self._num) and self._den == P.ONE and \
                self._num.get(P.ZERO_EXP, 0) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self._num.items()), frozenset(self._den.items())))
        return self._hash

    def __bool__(self):
        return bool(self._num)

    def __repr__(self):
        from .parse import format_scalar
        return f"RationalFunction({format_scalar(self)!r})"

    def __str__(self):
        from .parse import format_scalar
        return format_scalar(self)


Scalar = Union[Fraction, GaussianRational, RationalFunction]


def _as_dict(x):
    if isinstance(x, P.MultivarPoly):
        return dict(x.terms)
    if isinstance(x, dict):
        return {e: c for e, c in x.items() if c}
    if isinstance(x, int):
        x = Fraction(x)
    return P.const(x)


def _parts(x):
    if isinstance(x, RationalFunction):
        return x._num, x._den
    if isinstance(x, (Fraction, GaussianRational)):
        return P.const(x), P.ONE
    if isinstance(x, Rational):
        return P.const(Fraction(x)), P.ONE
    if isinstance(x, P.MultivarPoly):
        return x.terms, P.ONE
    return None


def _reduce(n, d):
    if not n:
        return {}, P.ONE
    if not P.is_const(d):
        g = P.gcd(n, d)
        if not P.is_const(g):
            n, d = P.divexact(n, g), P.divexact(d, g)
    _, lc = P.leading(d)
    if lc != 1:
        inv = 1 / lc
        n, d = P.scale(n, inv), P.scale(d, inv)
    return n, d


def _make(n, d):
    """Scalar from an already reduced pair with monic denominator."""
    if P.is_const(n) and P.is_const(d):
        return n.get(P.ZERO_EXP, Fraction(0))
    return RationalFunction._raw(n, d)


def _add(n1, d1, n2, d2):
    if not n1:
        return n2, d2
    if not n2:
        return n1, d1
    if d1 == d2:
        n = P.add(n1, n2)
        if not n:
            return {}, P.ONE
        if P.is_const(d1):
            return n, d1
        g = P.gcd(n, d1)
        if P.is_const(g):
            return n, d1
        return P.divexact(n, g), P.divexact(d1, g)
    if P.is_const(d1) and P.is_const(d2):
        return P.add(n1, n2), P.ONE
    g = P.gcd(d1, d2)
    if P.is_const(g):
        return P.add(P.mul(n1, d2), P.mul(n2, d1)), P.mul(d1, d2)
    d1g, d2g = P.divexact(d1, g), P.divexact(d2, g)
    n = P.add(P.mul(n1, d2g), P.mul(n2, d1g))
    if not n:
        return {}, P.ONE
    d = P.mul(d1, d2g)
    h = P.gcd(n, g)
    if not P.is_const(h):
        n, d = P.divexact(n, h), P.divexact(d, h)
    return n, d


def _mul(n1, d1, n2, d2):
    if not n1 or not n2:
        return {}, P.ONE
    if P.is_const(d1) and P.is_const(d2):
        return P.mul(n1, n2), P.ONE
    if not P.is_const(d2) and not P.is_const(n1):
        g = P.gcd(n1, d2)
        if not P.is_const(g):
            n1, d2 = P.divexact(n1, g), P.divexact(d2, g)
    if not P.is_const(d1) and not P.is_const(n2):
        g = P.gcd(n2, d1)
        if not P.is_const(g):
            n2, d1 = P.divexact(n2, g), P.divexact(d1, g)
    n, d = P.mul(n1, n2), P.mul(d1, d2)
    _, lc = P.leading(d)
    if lc != 1:
        inv = 1 / lc
        n, d = P.scale(n, inv), P.scale(d, inv)
    return n, d


def _inv(n, d):
    if not n:
        raise DivisionByZero("division by zero")
    _, lc = P.leading(n)
    inv = 1 / lc
    return P.scale(d, inv), P.scale(n, inv)


# --- Scalar API -------------------------------------------------------------

def to_scalar(x) -> Scalar:
    """Coerce ints, Fractions, Gaussian rationals or polynomials to a Scalar."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (Fraction, GaussianRational, RationalFunction)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, P.MultivarPoly):
        return _make(dict(x.terms), P.ONE)
    if isinstance(x, str):
        from .parse import parse_scalar
        return parse_scalar(x)
    if isinstance(x, complex):
        raise TypeError("floating point complex numbers are not exact scalars")
    if isinstance(x, Rational):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to a scalar")


def is_zero(x) -> bool:
    return not x


def invert(x) -> Scalar:
    x = to_scalar(x)
    if not x:
        raise DivisionByZero("cannot invert zero")
    return 1 / x


def variables_of(x) -> set[str]:
    return x.variables() if isinstance(x, RationalFunction) else set()


def substitute(x, bindings) -> Scalar:
    """Evaluate the parameters named in ``bindings`` at exact constants.

    Unbound parameters stay symbolic.  Raises DenominatorVanishes when the
    denominator evaluates to zero.
    """
    x = to_scalar(x)
    if not isinstance(x, RationalFunction):
        return x
    vals = {}
    for name, v in bindings.items():
        if name not in P.VARS:
            raise KeyError(f"unknown variable {name!r}")
        v = to_scalar(v)
        if isinstance(v, RationalFunction):
            raise TypeError("bindings must be constants")
        vals[P.VARS.index(name)] = v
    n = P.evaluate(x._num, vals)
    d = P.evaluate(x._den, vals)
    if not d:
        raise DenominatorVanishes(f"denominator of {x} vanishes at {dict(bindings)}")
    return _make(*_reduce(n, d))


def var(name: str) -> RationalFunction:
    return RationalFunction._raw(P.variable(name), P.ONE)


def symbols():
    """The three parameters (a, b, c) as scalars."""
    return tuple(var(v) for v in P.VARS)


def re_im(x):
    """Real and imaginary parts of a constant scalar."""
    if isinstance(x, GaussianRational):
        return x.re, x.im
    if isinstance(x, RationalFunction):
        raise TypeError("not a constant")
    return Fraction(x), Fraction(0)


__all__ = [
    "RationalFunction", "Scalar", "to_scalar", "is_zero", "invert", "substitute",
    "var", "symbols", "variables_of", "gauss", "re_im",
]
