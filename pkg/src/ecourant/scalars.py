"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals.

Rational scalars are plain :class:`fractions.Fraction` values, which already
keep themselves in lowest terms with a positive denominator.  Gaussian
rationals are :class:`GaussianRational`, a pair of fractions.  Mixed
arithmetic promotes to the Gaussian field.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Any, Union

__all__ = [
    "Fraction",
    "GaussianRational",
    "I",
    "Scalar",
    "ScalarParseError",
    "complexify",
    "conjugate",
    "format_scalar",
    "is_gaussian",
    "parse_scalar",
]


class ScalarParseError(ValueError):
    pass


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Any = 0, im: Any = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Rational)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def inverse(self) -> GaussianRational:
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(self.re / norm, -self.im / norm)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, GaussianRational]

I = GaussianRational(0, 1)


def is_gaussian(x) -> bool:
    return isinstance(x, GaussianRational)


def conjugate(x):
    if isinstance(x, GaussianRational):
        return x.conjugate()
    return x


def complexify(t):
    """Embed a scalar or a nested tuple/list tensor into Q(i).

    Imaginary parts are zero; containers keep their type.
    """
    if isinstance(t, (tuple, list)):
        return type(t)(complexify(x) for x in t)
    if isinstance(t, GaussianRational):
        return t
    return GaussianRational(t)


_RAT = r"-?(?:0|[1-9][0-9]*)(?:/[1-9][0-9]*)?"
_RAT_RE = re.compile(rf"^{_RAT}$")
_IMAG_RE = re.compile(rf"^(?P<re>{_RAT})(?P<sign>[+-])(?P<im>(?:0|[1-9][0-9]*)(?:/[1-9][0-9]*)?)i$")


def _parse_rational(text: str) -> Fraction:
    if not _RAT_RE.match(text):
        raise ScalarParseError(f"malformed rational {text!r}")
    if text == "-0" or text.startswith("-0/"):
        raise ScalarParseError(f"non-canonical rational {text!r}")
    num, _, den = text.partition("/")
    if den:
        p, q = int(num), int(den)
        value = Fraction(p, q)
        if q == 1 or value.denominator != q or p == 0:
            raise ScalarParseError(f"non-canonical rational {text!r}")
        return value
    return Fraction(int(num))


def parse_scalar(text: str, field: str = "rational") -> Scalar:
    """Parse the canonical text form of a scalar.

    Rationals are ``"p"`` or ``"p/q"`` in lowest terms with ``q > 1``.
    Gaussian rationals are ``"a+bi"`` / ``"a-bi"`` with canonical rational
    parts and nonzero imaginary part (a zero imaginary part is written as a
    plain rational).  Non-canonical input is rejected, never normalised.
    """
    if not isinstance(text, str):
        raise ScalarParseError(f"scalar must be a string, got {type(text).__name__}")
    if field not in ("rational", "gaussian"):
        raise ValueError(f"unknown scalar field {field!r}")
    if text.endswith("i"):
        if field != "gaussian":
            raise ScalarParseError(f"imaginary scalar {text!r} in a rational document")
        m = _IMAG_RE.match(text)
        if not m:
            raise ScalarParseError(f"malformed Gaussian rational {text!r}")
        re_part = _parse_rational(m.group("re"))
        im_part = _parse_rational(m.group("im"))
        if im_part == 0:
            raise ScalarParseError(f"non-canonical Gaussian rational {text!r}")
        if m.group("sign") == "-":
            im_part = -im_part
        return GaussianRational(re_part, im_part)
    value = _parse_rational(text)
    if field == "gaussian":
        return GaussianRational(value)
    return value


def _format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(x) -> str:
    if isinstance(x, GaussianRational):
        if x.im == 0:
            return _format_rational(x.re)
        sign = "-" if x.im < 0 else "+"
        return f"{_format_rational(x.re)}{sign}{_format_rational(abs(x.im))}i"
    return _format_rational(Fraction(x))
