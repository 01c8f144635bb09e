"""Exact arithmetic in Q(sqrt 5)."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Union

RationalLike = Union[int, Fraction]


def _coerce(other) -> QuadNumber | None:
    if isinstance(other, QuadNumber):
        return other
    if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
        return QuadNumber(other)
    if isinstance(other, Rational):
        return QuadNumber(Fraction(other))
    return None


class QuadNumber:
    """The number ``a + b*sqrt(5)`` with rational ``a`` and ``b``.

    Instances are immutable; equality and hashing are structural on the
    reduced fractions, which is exact because sqrt(5) is irrational.
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0) -> None:
        if isinstance(a, float) or isinstance(b, float):
            raise TypeError("QuadNumber takes exact rationals; convert floats with Fraction explicitly")
        self._a = Fraction(a)
        self._b = Fraction(b)

    a = property(lambda self: self._a)
    b = property(lambda self: self._b)

    @classmethod
    def sqrt5(cls) -> QuadNumber:
        return cls(0, 1)

    def __repr__(self) -> str:
        return f"QuadNumber({self._a!s}, {self._b!s})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        rad = "sqrt(5)" if abs(self._b) == 1 else f"{abs(self._b)}*sqrt(5)"
        if self._a == 0:
            return f"-{rad}" if self._b < 0 else rad
        return f"{self._a} {'-' if self._b < 0 else '+'} {rad}"

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __neg__(self) -> QuadNumber:
        return QuadNumber(-self._a, -self._b)

    def __pos__(self) -> QuadNumber:
        return self

    def __add__(self, other) -> QuadNumber:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return QuadNumber(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __sub__(self, other) -> QuadNumber:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return QuadNumber(self._a - o._a, self._b - o._b)

    def __rsub__(self, other) -> QuadNumber:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> QuadNumber:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return QuadNumber(self._a * o._a + 5 * self._b * o._b, self._a * o._b + self._b * o._a)

    __rmul__ = __mul__

    def conjugate(self) -> QuadNumber:
        return QuadNumber(self._a, -self._b)

    def norm(self) -> Fraction:
        """Field norm a^2 - 5 b^2; zero only for zero."""
        return self._a * self._a - 5 * self._b * self._b

    def __truediv__(self, other) -> QuadNumber:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        num = self * o.conjugate()
        d = o.norm()
        return QuadNumber(num._a / d, num._b / d)

    def __rtruediv__(self, other) -> QuadNumber:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def sign(self) -> int:
        a, b = self._a, self._b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: the larger of a^2 and 5 b^2 decides
        return sa if a * a > 5 * b * b else sb

    def __lt__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __float__(self) -> float:
        # a + b sqrt5 loses precision under cancellation; use the conjugate form then
        x = float(self._a) + float(self._b) * math.sqrt(5)
        if self._a and self._b and abs(x) < 1e-3 * (abs(float(self._a)) + 1):
            return float(self.norm()) / (float(self._a) - float(self._b) * math.sqrt(5))
        return x
