"""Gaussian rationals: the field Q(i) with Fraction components."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from ..errors import DivisionByZero


def gauss(re, im=0):
    """Return re + i*im in its smallest representation.

    A value with zero imaginary part comes back as a plain Fraction so that
    equality between scalars reduces to equality of canonical forms.
    """
    re = Fraction(re)
    im = Fraction(im)
    if im == 0:
        return re
    return GaussianRational(re, im)


def parts(x) -> tuple[Fraction, Fraction]:
    if isinstance(x, GaussianRational):
        return x.re, x.im
    return Fraction(x), Fraction(0)


class GaussianRational:
    """An element re + i*im of Q(i) with nonzero imaginary part.

    Arithmetic returns a Fraction whenever the result is real.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    def conjugate(self):
        return gauss(self._re, -self._im)

    def norm(self) -> Fraction:
        return self._re * self._re + self._im * self._im

    def __add__(self, other):
        if not isinstance(other, (GaussianRational, Rational)):
            return NotImplemented
        ore, oim = parts(other)
        return gauss(self._re + ore, self._im + oim)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (GaussianRational, Rational)):
            return NotImplemented
        ore, oim = parts(other)
        return gauss(self._re - ore, self._im - oim)

    def __rsub__(self, other):
        if not isinstance(other, Rational):
            return NotImplemented
        return gauss(Fraction(other) - self._re, -self._im)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return gauss(self._re * other._re - self._im * other._im,
                         self._re * other._im + self._im * other._re)
        if isinstance(other, Rational):
            return gauss(self._re * other, self._im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (GaussianRational, Rational)):
            return self * _inverse(other)
        return NotImplemented

    def __rtruediv__(self, other):
        if not isinstance(other, Rational):
            return NotImplemented
        return _inverse(self) * other

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return _inverse(self) ** (-n)
        result = Fraction(1)
        base = self
        while n:
            if n & 1:
                result = base * result
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, Rational):
            return self._im == 0 and self._re == other
        return NotImplemented

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __repr__(self):
        return f"GaussianRational({self._re!s}, {self._im!s})"

    def __str__(self):
        from .parse import format_scalar
        return format_scalar(self)


def _inverse(x):
    re, im = parts(x)
    n = re * re + im * im
    if n == 0:
        raise DivisionByZero("division by zero")
    return gauss(re / n, -im / n)


I = GaussianRational(0, 1)
