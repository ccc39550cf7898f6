# -*- coding: utf-8 -*-
"""
orthoverify.polycore
~~~~~~~~~~~~~~~~~~~~

Dense exact polynomials, orthogonal families from their three-term
recurrence, expansion in an orthogonal basis and h_0-normalized inner
products.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import numbers
from fractions import Fraction

from .errors import DegreeRangeError, NonzeroConstantTermError
from .exactnum import QuadExt, as_rational

_ZERO = Fraction(0)


def _trim(coefficients):
    end = len(coefficients)
    while end and coefficients[end - 1] == 0:
        end -= 1
    return tuple(coefficients[:end])


class Poly(object):
    """
    A univariate polynomial with Fraction coefficients.

    ``coefficients[i]`` is the coefficient of x^i; trailing zeros are
    trimmed, so the zero polynomial has no coefficients and degree -1.
    Instances are immutable and hashable.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        self.coefficients = _trim([as_rational(c) for c in coefficients])

    @classmethod
    def _raw(cls, coefficients):
        obj = cls.__new__(cls)
        obj.coefficients = _trim(coefficients)
        return obj

    @classmethod
    def zero(cls):
        return cls._raw([])

    @classmethod
    def one(cls):
        return cls._raw([Fraction(1)])

    @classmethod
    def x(cls):
        return cls._raw([_ZERO, Fraction(1)])

    @classmethod
    def constant(cls, value):
        return cls([value])

    @classmethod
    def monomial(cls, degree, value=1):
        return cls([0] * degree + [value])

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def lead(self):
        if not self.coefficients:
            return _ZERO
        return self.coefficients[-1]

    def is_zero(self):
        return not self.coefficients

    def coefficient(self, i):
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return _ZERO

    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (numbers.Integral, Fraction)) and not isinstance(other, bool):
            return Poly._raw([Fraction(other)])
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        result = list(a)
        for i, c in enumerate(b):
            result[i] += c
        return Poly._raw(result)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coefficients])

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly.zero()
            result = [_ZERO] * (len(self.coefficients) + len(other.coefficients) - 1)
            for i, a in enumerate(self.coefficients):
                if a == 0:
                    continue
                for j, b in enumerate(other.coefficients):
                    result[i + j] += a * b
            return Poly._raw(result)
        if isinstance(other, (numbers.Integral, Fraction)) and not isinstance(other, bool):
            return Poly._raw([c * other for c in self.coefficients])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (numbers.Integral, Fraction)) and not isinstance(other, bool):
            return Poly._raw([c / other for c in self.coefficients])
        return NotImplemented

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.coefficients == other.coefficients

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.coefficients)

    def __call__(self, x):
        """Horner evaluation; exact for Fraction and QuadExt arguments."""
        result = _ZERO
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def derivative(self):
        return Poly._raw([i * c for i, c in enumerate(self.coefficients)][1:])

    def compose(self, inner):
        """p(inner(x)) for a polynomial ``inner``."""
        result = Poly.zero()
        for c in reversed(self.coefficients):
            result = result * inner + c
        return result

    def shift(self, h):
        """The polynomial x -> p(x + h)."""
        return self.compose(Poly._raw([as_rational(h), Fraction(1)]))

    def __repr__(self):
        return "Poly([{0}])".format(", ".join('"{0}"'.format(c) for c in self.coefficients))

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("({0})*x".format(c))
            else:
                terms.append("({0})*x^{1}".format(c, i))
        return " + ".join(terms)


class BasisCoeffs(object):
    """
    Coefficients a_0..a_m of a polynomial in an orthogonal basis.

    Params:
        - values    tuple of Fractions, a_k multiplying p_k
    """

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = tuple(values)

    def recombine(self, family):
        """Rebuild sum a_k p_k as a Poly."""
        if not self.values:
            return Poly.zero()
        ops = generate_ops(family, len(self.values) - 1)
        result = Poly.zero()
        for a, p in zip(self.values, ops):
            if a:
                result = result + p * a
        return result

    def __eq__(self, other):
        if not isinstance(other, BasisCoeffs):
            return NotImplemented
        return self.values == other.values

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "BasisCoeffs({0})".format([str(v) for v in self.values])


# family.key -> tuple(p_0, ..., p_m); entries are replaced, never mutated
_OPS_CACHE = {}


def clear_cache():
    """Forget every generated polynomial sequence."""
    _OPS_CACHE.clear()


def generate_ops(family, nmax):
    """
    p_0 .. p_nmax from the three-term recurrence
    p_{n+1} = (A_n x + B_n) p_n - C_n p_{n-1}, p_{-1} = 0, p_0 = 1.

    Sequences are cached per family and extended on demand.

    Raises:
        DegreeRangeError for negative nmax or nmax beyond a finite family.
    """
    if nmax < 0:
        raise DegreeRangeError("nmax must be nonnegative, got {0}".format(nmax))
    family.check_degree(nmax)
    cached = _OPS_CACHE.get(family.key, ())
    if len(cached) > nmax:
        return list(cached[: nmax + 1])
    polys = list(cached) or [Poly.one()]
    while len(polys) <= nmax:
        n = len(polys) - 1
        a, b, c = family.recurrence(n)
        step = polys[n] * Poly._raw([b, a])
        if n >= 1 and c:
            step = step - polys[n - 1] * c
        polys.append(step)
    _OPS_CACHE[family.key] = tuple(polys)
    return polys


def poly_eval(p, x):
    """Evaluate ``p`` at ``x`` (Rational or QuadExt)."""
    if isinstance(x, QuadExt) or isinstance(x, Fraction):
        return p(x)
    return p(as_rational(x))


def deflate_at_zero(p):
    """
    Return q with x*q(x) = p(x).

    Raises:
        NonzeroConstantTermError when p(0) != 0.
    """
    if p.coefficient(0) != 0:
        raise NonzeroConstantTermError(
            "constant term {0} is not zero; p is not divisible by x".format(p.coefficient(0))
        )
    return Poly._raw(list(p.coefficients[1:]))


def basis_expand(p, family):
    """
    Coefficients of ``p`` in the basis p_0, p_1, ... of ``family``.

    Top-down elimination: a_m = lead(p)/k_m, subtract a_m p_m, repeat.

    Raises:
        DegreeRangeError if deg p exceeds a finite family's range.
    """
    m = p.degree
    if m < 0:
        return BasisCoeffs(())
    family.check_degree(m)
    ops = generate_ops(family, m)
    remainder = p
    values = [_ZERO] * (m + 1)
    for k in range(m, -1, -1):
        c = remainder.coefficient(k)
        if c == 0:
            continue
        a = c / ops[k].lead
        values[k] = a
        remainder = remainder - ops[k] * a
    if not remainder.is_zero():
        raise ArithmeticError("basis elimination left a remainder {0}".format(remainder))
    return BasisCoeffs(values)


def inner_product_n(p, q, family, via=None):
    """
    <p, q> / h_0 for the family's orthogonality measure.

    Continuous families expand both polynomials in the orthogonal basis and
    return sum a_k b_k h_k/h_0. Discrete families sum p(x) q(x) w_x / h_0 over
    the support; ``via="basis"`` forces the basis path there as well.

    Raises:
        DegreeRangeError if a degree is outside the family's range.
    """
    if via is None:
        via = "sum" if family.is_discrete else "basis"
    if via == "sum":
        if not family.is_discrete:
            raise ValueError("direct summation needs a discrete family")
        family.check_degree(max(p.degree, 0))
        family.check_degree(max(q.degree, 0))
        total = _ZERO
        for x, w in zip(family.support(), family.weights()):
            total += p(x) * q(x) * w
        return total / family.total_mass()
    if via != "basis":
        raise ValueError("unknown inner product path {0!r}".format(via))
    a = basis_expand(p, family).values
    b = basis_expand(q, family).values
    total = _ZERO
    for k in range(min(len(a), len(b))):
        if a[k] and b[k]:
            total += a[k] * b[k] * family.norm_ratio(k)
    return total
