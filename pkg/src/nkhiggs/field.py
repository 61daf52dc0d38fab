"""Exact arithmetic in Q(i) and in a single quadratic extension Q(i)(t), t^2 = theta.

GaussRat is the base field. FieldElem is a + b*t with a, b in Q(i); elements
with b = 0 mix freely with any extension, two elements from different
extensions cannot be combined (NestedExtension).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .errors import NestedExtension

_ZERO = Fraction(0)


def _mk(re, im) -> "GaussRat":
    re, im = Fraction(re), Fraction(im)
    d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
    return _raw(re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)


def _raw(a: int, b: int, d: int) -> "GaussRat":
    """(a + b i)/d, reduced here; d > 0."""
    if d != 1:
        g = gcd(gcd(a, b), d)
        if g != 1:
            a, b, d = a // g, b // g, d // g
    z = object.__new__(GaussRat)
    z._a = a
    z._b = b
    z._d = d
    return z


class GaussRat:
    """Gaussian rational (a + b i)/d stored with integers over a common denominator."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        if type(re) is int and type(im) is int:
            self._a, self._b, self._d = re, im, 1
            return
        z = _mk(re, im)
        self._a, self._b, self._d = z._a, z._b, z._d

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @classmethod
    def coerce(cls, x) -> "GaussRat":
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, FieldElem):
            return x.to_base()
        if isinstance(x, (complex, float)):
            raise TypeError("floating point values are not accepted")
        return cls(x)

    def __add__(self, o):
        if isinstance(o, FieldElem):
            return NotImplemented
        if not isinstance(o, GaussRat):
            o = GaussRat(o)
        d1, d2 = self._d, o._d
        if d1 == d2:
            return _raw(self._a + o._a, self._b + o._b, d1)
        return _raw(self._a * d2 + o._a * d1, self._b * d2 + o._b * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, o):
        if isinstance(o, FieldElem):
            return NotImplemented
        if not isinstance(o, GaussRat):
            o = GaussRat(o)
        d1, d2 = self._d, o._d
        if d1 == d2:
            return _raw(self._a - o._a, self._b - o._b, d1)
        return _raw(self._a * d2 - o._a * d1, self._b * d2 - o._b * d1, d1 * d2)

    def __rsub__(self, o):
        return GaussRat.coerce(o) - self

    def __neg__(self):
        return _raw(-self._a, -self._b, self._d)

    def __mul__(self, o):
        if isinstance(o, FieldElem):
            return NotImplemented
        if not isinstance(o, GaussRat):
            o = GaussRat(o)
        a, b, c, e = self._a, self._b, o._a, o._b
        return _raw(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def conj(self) -> "GaussRat":
        return _raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def inverse(self) -> "GaussRat":
        n = self._a * self._a + self._b * self._b
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        # d/(a + b i) = d (a - b i)/n
        return _raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, o):
        if isinstance(o, FieldElem):
            return NotImplemented
        return self * GaussRat.coerce(o).inverse()

    def __rtruediv__(self, o):
        return GaussRat.coerce(o) * self.inverse()

    def __eq__(self, o):
        if isinstance(o, GaussRat):
            return self._a == o._a and self._b == o._b and self._d == o._d
        if isinstance(o, FieldElem):
            return o == self
        if isinstance(o, (int, Fraction)):
            return self._b == 0 and Fraction(self._a, self._d) == o
        return NotImplemented

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def is_zero(self) -> bool:
        return not self

    def __repr__(self):
        if self._b == 0:
            return f"GaussRat({self.re})"
        return f"GaussRat({self.re}, {self.im})"


def _frac_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def gauss_sqrt(z: GaussRat) -> GaussRat | None:
    """A square root of z inside Q(i), or None if z is not a square there."""
    z = GaussRat.coerce(z)
    p, q = z.re, z.im
    if q == 0:
        r = _frac_sqrt(p) if p >= 0 else _frac_sqrt(-p)
        if r is None:
            return None
        return _mk(r, _ZERO) if p >= 0 else _mk(_ZERO, r)
    r = _frac_sqrt(p * p + q * q)
    if r is None:
        return None
    x = _frac_sqrt((p + r) / 2)
    y = _frac_sqrt((r - p) / 2)
    if x is None or y is None:
        return None
    if q < 0:
        y = -y
    return _mk(x, y)


def _merge(t1, b1, t2, b2):
    if not b1:
        return t2 if t2 is not None else t1
    if not b2:
        return t1
    if t1 != t2:
        raise NestedExtension(f"cannot combine extensions t^2={t1!r} and t^2={t2!r}")
    return t1


class FieldElem:
    """a + b*t with t^2 = theta (theta None means no extension in use)."""

    __slots__ = ("a", "b", "theta")

    def __init__(self, a=0, b=0, theta=None):
        self.a = GaussRat.coerce(a)
        self.b = GaussRat.coerce(b)
        self.theta = None if theta is None else GaussRat.coerce(theta)
        if self.b and self.theta is None:
            raise ValueError("nonzero t-coefficient needs an extension")

    @classmethod
    def coerce(cls, x) -> "FieldElem":
        if isinstance(x, FieldElem):
            return x
        return cls(x)

    def in_base(self) -> bool:
        return not self.b

    def to_base(self) -> GaussRat:
        if self.b:
            raise ValueError(f"{self!r} does not lie in Q(i)")
        return self.a

    def __add__(self, o):
        o = FieldElem.coerce(o)
        th = _merge(self.theta, self.b, o.theta, o.b)
        return FieldElem(self.a + o.a, self.b + o.b, th)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(-self.a, -self.b, self.theta)

    def __sub__(self, o):
        return self + (-FieldElem.coerce(o))

    def __rsub__(self, o):
        return FieldElem.coerce(o) - self

    def __mul__(self, o):
        o = FieldElem.coerce(o)
        th = _merge(self.theta, self.b, o.theta, o.b)
        a = self.a * o.a
        if self.b and o.b:
            a = a + self.b * o.b * th
        b = self.a * o.b + self.b * o.a
        return FieldElem(a, b, th)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if not self.b:
            return FieldElem(self.a.inverse(), 0, self.theta)
        n = self.a * self.a - self.b * self.b * self.theta
        ni = n.inverse()
        return FieldElem(self.a * ni, -self.b * ni, self.theta)

    def __truediv__(self, o):
        return self * FieldElem.coerce(o).inverse()

    def __rtruediv__(self, o):
        return FieldElem.coerce(o) * self.inverse()

    def __eq__(self, o):
        if isinstance(o, (FieldElem, GaussRat, int, Fraction)):
            o = FieldElem.coerce(o)
            if self.b or o.b:
                _merge(self.theta, self.b, o.theta, o.b)
            return self.a == o.a and self.b == o.b
        return NotImplemented

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.theta))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_zero(self) -> bool:
        return not self

    def __repr__(self):
        if not self.b:
            return f"FieldElem({self.a!r})"
        return f"FieldElem({self.a!r} + {self.b!r}*t, t^2={self.theta!r})"


def sqrt_in_tower(theta) -> FieldElem:
    """t with t^2 = theta, adjoining t only when theta is not a square in Q(i)."""
    theta = GaussRat.coerce(theta)
    r = gauss_sqrt(theta)
    if r is not None:
        return FieldElem(r)
    return FieldElem(0, 1, theta)
