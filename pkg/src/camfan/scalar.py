"""Exact scalars: rationals (``fractions.Fraction``) and elements of Q(sqrt d).

Crystallographic groups only ever need rationals.  Groups with a bond
label 5 need Q(sqrt 5), provided here by :class:`QuadraticNumber`.  Values of
both kinds mix freely in arithmetic and compare/hash consistently, so
``QuadraticNumber(3, 0) == 3`` and both can key the same dict.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "QuadraticNumber",
    "as_scalar",
    "format_scalar",
    "parse_scalar",
    "sign",
    "to_float",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


class QuadraticNumber:
    """The number ``a + b*sqrt(d)`` with rational ``a``, ``b`` and square-free ``d > 1``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 5):
        self.a = _frac(a)
        self.b = _frac(b)
        self.d = d

    def _coerce(self, other) -> QuadraticNumber | None:
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise ValueError(f"cannot mix sqrt({self.d}) and sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(
            self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a, self.d
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        num = self * o.conjugate()
        return QuadraticNumber(num.a / n, num.b / n, self.d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return QuadraticNumber(1, 0, self.d) / (self ** (-k))
        out = QuadraticNumber(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 against d*b^2
        if self.a * self.a > self.d * self.b * self.b:
            return sa
        return sb

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadraticNumber):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def _cmp(self, other) -> int | None:
        o = self._coerce(other)
        if o is None:
            return None
        return (self - o).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * self.d**0.5

    def __repr__(self) -> str:
        return f"QuadraticNumber({self.a!s}, {self.b!s}, d={self.d})"

    def __str__(self) -> str:
        return format_scalar(self)


def as_scalar(x):
    """Promote ints to ``Fraction`` so that ``/`` stays exact."""
    if isinstance(x, int):
        return Fraction(x)
    return x


def sign(x) -> int:
    if isinstance(x, QuadraticNumber):
        return x.sign()
    return (x > 0) - (x < 0)


def to_float(x) -> float:
    return float(x)


def _fmt_rational(q: Fraction) -> str:
    q = _frac(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Serialize as ``"p/q"`` or ``"p/q+r/t√d"`` (rational part omitted when zero)."""
    if isinstance(x, QuadraticNumber):
        if x.b == 0:
            return _fmt_rational(x.a)
        coeff = "" if abs(x.b) == 1 else _fmt_rational(abs(x.b))
        irr = f"{coeff}√{x.d}"
        if x.a == 0:
            return irr if x.b > 0 else "-" + irr
        return f"{_fmt_rational(x.a)}{'+' if x.b > 0 else '-'}{irr}"
    return _fmt_rational(x)


_Q = r"\d+(?:/\d+)?"
_RATIONAL_RE = re.compile(rf"^([+-]?{_Q})$")
_MIXED_RE = re.compile(rf"^([+-]?{_Q})([+-])({_Q})?√(\d+)$")
_PURE_RE = re.compile(rf"^([+-]?)({_Q})?√(\d+)$")


def parse_scalar(text: str, d: int | None = None):
    """Inverse of :func:`format_scalar`.

    A purely rational string gives a ``Fraction`` unless ``d`` is given, in
    which case a ``QuadraticNumber`` over ``sqrt(d)`` is returned.
    """
    t = text.replace(" ", "")
    m = _RATIONAL_RE.match(t)
    if m:
        a = Fraction(m.group(1))
        return a if d is None else QuadraticNumber(a, 0, d)
    m = _MIXED_RE.match(t)
    if m:
        a = Fraction(m.group(1))
        b = Fraction(m.group(3) or 1) * (-1 if m.group(2) == "-" else 1)
        dd = int(m.group(4))
    else:
        m = _PURE_RE.match(t)
        if not m:
            raise ValueError(f"not a scalar: {text!r}")
        a = Fraction(0)
        b = Fraction(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
        dd = int(m.group(3))
    if d is not None and dd != d:
        raise ValueError(f"expected sqrt({d}), got sqrt({dd})")
    return QuadraticNumber(a, b, dd)
