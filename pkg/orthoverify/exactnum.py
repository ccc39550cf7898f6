# -*- coding: utf-8 -*-
"""
orthoverify.exactnum
~~~~~~~~~~~~~~~~~~~~

The scalar layer: exact rationals, the quadratic extension Q(sqrt(d)) and
Pochhammer symbols.

Rationals are plain ``fractions.Fraction`` values; ``QuadExt`` mixes with
them (and with ``int``) through the usual numeric operators.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import math
import numbers
from fractions import Fraction

from .errors import FieldMismatchError, ParameterRangeError

Rational = Fraction


def as_rational(value):
    """
    Convert a parameter value to an exact rational.

    Accepts ints, Fractions and strings such as "1/3" or "-2". Floats are
    refused, since their binary expansion is almost never the value meant.

    Raises:
        TypeError for floats, QuadExt values and other non-exact inputs.
        ValueError for unparsable strings.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational parameters")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError("cannot use {0!r} as an exact rational".format(value))


def is_integer(value):
    """True if ``value`` is an exact rational with denominator 1."""
    return isinstance(value, (numbers.Integral, Fraction)) and Fraction(value).denominator == 1


def rational_sqrt(value):
    """
    Return the rational square root of ``value`` or None if it has none.

    Uses the reduced form: p/q is a square exactly when p and q are.
    """
    value = as_rational(value)
    if value < 0:
        return None
    p, q = value.numerator, value.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


class QuadExt(object):
    """
    An element a + b*sqrt(d) of Q(sqrt(d)).

    ``d`` is a rational that is not the square of a rational and is stored
    on every element; arithmetic between elements of different radicands
    raises ``FieldMismatchError``.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        d = as_rational(d)
        if rational_sqrt(d) is not None:
            raise ParameterRangeError(
                "radicand {0} is a rational square; use a Rational instead".format(d)
            )
        self.a = as_rational(a)
        self.b = as_rational(b)
        self.d = d

    @classmethod
    def _raw(cls, a, b, d):
        # Skips the radicand check; only for results of field operations.
        obj = cls.__new__(cls)
        obj.a = a
        obj.b = b
        obj.d = d
        return obj

    @classmethod
    def sqrt(cls, d):
        """The element sqrt(d) itself."""
        return cls(0, 1, d)

    def _parts(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise FieldMismatchError(
                    "cannot combine elements of Q(sqrt({0})) and Q(sqrt({1}))".format(
                        self.d, other.d
                    )
                )
            return other.a, other.b
        if isinstance(other, (numbers.Integral, Fraction)) and not isinstance(other, bool):
            return Fraction(other), Fraction(0)
        return None

    @property
    def is_rational(self):
        return self.b == 0

    def to_rational(self):
        """
        Return the element as a Fraction.

        Raises:
            ValueError if the irrational part is not exactly zero.
        """
        if self.b != 0:
            raise ValueError("{0} is not rational".format(self))
        return self.a

    def conjugate(self):
        return QuadExt._raw(self.a, -self.b, self.d)

    def norm(self):
        """a^2 - d*b^2, the product of the element with its conjugate."""
        return self.a * self.a - self.d * self.b * self.b

    def invert(self):
        """
        Multiplicative inverse via the conjugate.

        Raises:
            ZeroDivisionError for the zero element.
        """
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt({0}))".format(self.d))
        return QuadExt._raw(self.a / n, -self.b / n, self.d)

    def __add__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return QuadExt._raw(self.a + parts[0], self.b + parts[1], self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return QuadExt._raw(self.a - parts[0], self.b - parts[1], self.d)

    def __rsub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return QuadExt._raw(parts[0] - self.a, parts[1] - self.b, self.d)

    def __mul__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        a, b = parts
        return QuadExt._raw(
            self.a * a + self.d * self.b * b, self.a * b + self.b * a, self.d
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QuadExt):
            self._parts(other)
            return self * other.invert()
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        if parts[0] == 0:
            raise ZeroDivisionError("division by zero")
        return QuadExt._raw(self.a / parts[0], self.b / parts[0], self.d)

    def __rtruediv__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return QuadExt._raw(parts[0], parts[1], self.d) * self.invert()

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (numbers.Integral, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __str__(self):
        return "({0})+({1})*sqrt({2})".format(self.a, self.b, self.d)

    def __repr__(self):
        return "QuadExt({0!r}, {1!r}, {2!r})".format(
            str(self.a), str(self.b), str(self.d)
        )


def qx_invert(v):
    """Inverse of a QuadExt element; see ``QuadExt.invert``."""
    return v.invert()


def one_like(value):
    """The multiplicative unit in the field ``value`` lives in."""
    if isinstance(value, QuadExt):
        return QuadExt._raw(Fraction(1), Fraction(0), value.d)
    return Fraction(1)


def pochhammer(a, k):
    """
    The shifted factorial (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1.

    Works for Rationals and QuadExt elements alike.

    Raises:
        ValueError if k is negative or not an integer.
    """
    if not isinstance(k, numbers.Integral) or k < 0:
        raise ValueError("Pochhammer index must be a nonnegative integer, got {0!r}".format(k))
    result = one_like(a)
    for j in range(k):
        result = result * (a + j)
    return result


def factorial(n):
    """n! as a Fraction."""
    return Fraction(math.factorial(n))
