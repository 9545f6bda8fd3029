"""Exact scalars: rationals, and rationals extended by one square root.

Every number in this package is either a ``fractions.Fraction`` or a
``Quad`` element ``a + b*sqrt(c)`` of a real quadratic extension.  There is
no floating point anywhere; arithmetic is exact by construction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Q = Fraction

ScalarLike = Union[int, Fraction, "Quad"]


class ContextMismatch(Exception):
    """Two quadratic scalars with different discriminants were combined."""


def rational_sqrt(x: Fraction):
    """Return sqrt(x) as a Fraction if x is a perfect square, else None."""
    if x < 0:
        return None
    rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Q(rn, rd)
    return None


class Quad:
    """An element a + b*sqrt(c) with a, b rational and c a fixed non-square.

    Instances normalise themselves: a Quad with b == 0 never escapes the
    constructor helper :func:`quad`, so plain rationals stay plain.
    """

    __slots__ = ("a", "b", "c")

    def __init__(self, a, b, c):
        self.a = Q(a)
        self.b = Q(b)
        self.c = c

    # -- helpers -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Quad):
            if other.c != self.c:
                raise ContextMismatch(
                    f"cannot mix sqrt({self.c}) with sqrt({other.c})")
            return other
        if isinstance(other, (int, Fraction)):
            return Quad(other, 0, self.c)
        return None

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad(self.a + o.a, self.b + o.b, self.c)

    __radd__ = __add__

    def __neg__(self):
        return Quad(-self.a, -self.b, self.c)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad(self.a - o.a, self.b - o.b, self.c)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad(self.a * o.a + self.b * o.b * self.c,
                    self.a * o.b + self.b * o.a, self.c)

    __rmul__ = __mul__

    def inverse(self):
        n = self.a * self.a - self.b * self.b * self.c
        if n == 0:
            raise ZeroDivisionError("quadratic scalar has no inverse")
        return quad(self.a / n, -self.b / n, self.c)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out: ScalarLike = Q(1)
        base: ScalarLike = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Quad):
            return self.c == other.c and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.c))

    def __repr__(self):
        return scalar_to_string(self)


def quad(a, b, c) -> ScalarLike:
    """Build a + b*sqrt(c), collapsing to a Fraction when b vanishes."""
    b = Q(b)
    if b == 0:
        return Q(a)
    root = rational_sqrt(Q(c))
    if root is not None:
        return Q(a) + b * root
    return Quad(a, b, c)


def sqrt_scalar(x, context_c=None) -> ScalarLike:
    """Exact square root of a rational x, opening sqrt(context_c) if needed.

    If x is a perfect square the result is rational.  Otherwise x must be of
    the form r**2 * context_c, and the result lives in Q(sqrt(context_c)).
    """
    x = Q(x)
    r = rational_sqrt(x)
    if r is not None:
        return r
    if context_c is not None:
        ratio = x / Q(context_c)
        r = rational_sqrt(ratio)
        if r is not None:
            return quad(0, r, context_c)
    raise ValueError(f"no exact square root of {x} in the current context")


# -- canonical string form -------------------------------------------------

def _frac_to_string(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def scalar_to_string(x: ScalarLike) -> str:
    """Canonical serialisation: "p/q" or "p/q+r/s*sqrt(c)" (reduced, q,s>0)."""
    if isinstance(x, Quad):
        head = _frac_to_string(x.a)
        if x.b < 0:
            return f"{head}-{_frac_to_string(-x.b)}*sqrt({x.c})"
        return f"{head}+{_frac_to_string(x.b)}*sqrt({x.c})"
    return _frac_to_string(Q(x))


def scalar_from_string(s: str) -> ScalarLike:
    """Parse the canonical form produced by :func:`scalar_to_string`."""
    s = s.strip().replace(" ", "")
    if "sqrt" not in s:
        return Q(s)
    # split  A+B*sqrt(c)  /  A-B*sqrt(c)  at the sign before the B term
    star = s.index("*sqrt(")
    c = int(s[star + len("*sqrt("):-1])
    cut = max(s.rfind("+", 1, star), s.rfind("-", 1, star))
    if cut <= 0:
        raise ValueError(f"bad scalar string {s!r}")
    head, tail = s[:cut], s[cut:star]
    b = Q(tail[1:])
    if tail[0] == "-":
        b = -b
    return quad(Q(head), b, c)
