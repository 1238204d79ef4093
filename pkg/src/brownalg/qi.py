"""Exact arithmetic in Q(i): the one number system used everywhere else.

A value is a pair of ``fractions.Fraction`` components (real, imaginary).
Everything is immutable and exact; there is no floating point anywhere in
this package.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

__all__ = ["QI", "qi", "ZERO", "ONE", "I", "pow_i", "parse_qi", "format_qi"]


class QI:
    """A Gaussian rational re + im*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if isinstance(re, Fraction) else Fraction(re))
        object.__setattr__(self, "im", im if isinstance(im, Fraction) else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("QI values are immutable")

    def __reduce__(self):
        return (QI, (self.re, self.im))

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    # -- structure ---------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, QI):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.re == other and not self.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"QI({format_qi(self)!r})"

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        other = qi(other)
        return QI(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __sub__(self, other):
        other = qi(other)
        return QI(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return qi(other) - self

    def __mul__(self, other):
        other = qi(other)
        return QI(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = qi(other)
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return QI(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return qi(other) / self

    def inverse(self):
        return ONE / self

    def conj(self):
        return QI(self.re, -self.im)

    def norm(self):
        """re^2 + im^2, a nonnegative Fraction."""
        return self.re * self.re + self.im * self.im

    def is_rational(self):
        return not self.im

    def is_integer(self):
        return self.im == 0 and self.re.denominator == 1


def qi(x) -> QI:
    """Coerce an int, Fraction or QI to QI."""
    if isinstance(x, QI):
        return x
    return QI(x)


ZERO = QI(0)
ONE = QI(1)
I = QI(0, 1)

_POW_I = (ONE, I, QI(-1), QI(0, -1))


def pow_i(k: int) -> QI:
    """i**k, reduced mod 4."""
    return _POW_I[k % 4]


# -- textual codec: "a/b+c/d*i" with omitted zero parts ---------------------

_TERM = r"[+-]?\d+(?:/\d+)?"


def format_qi(x: QI) -> str:
    """Canonical string form, e.g. "2", "-1/3*i", "1/2+2*i", "0"."""
    if not x:
        return "0"
    if not x.im:
        return str(x.re)
    ims = str(x.im) + "*i"
    if not x.re:
        return ims
    return str(x.re) + ("+" + ims if x.im > 0 else ims)


def parse_qi(text: str) -> QI:
    """Parse the canonical string form back to a QI (exact round-trip)."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty Q(i) literal")
    m = _re.fullmatch(rf"(?P<im>{_TERM})\*i", s)
    if m:
        return QI(0, Fraction(m.group("im")))
    m = _re.fullmatch(rf"(?P<re>{_TERM})(?P<im>[+-]\d+(?:/\d+)?)\*i", s)
    if m:
        return QI(Fraction(m.group("re")), Fraction(m.group("im")))
    m = _re.fullmatch(_TERM, s)
    if m:
        return QI(Fraction(s))
    raise ValueError(f"not a Q(i) literal: {text!r}")
