# -*- coding: utf-8 -*-
"""
orthoverify.hyp
~~~~~~~~~~~~~~~

Terminating hypergeometric series.

A ``TruncatedSeries`` always carries its last term index explicitly; it is
never inferred from a nonpositive numerator, since the very-well-poised
series used here hold -n in both parameter rows.

Before summation, identical numerator/denominator parameters cancel, and a
numerator equal to a denominator plus one collapses to the factor (b+k)/b.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
from fractions import Fraction

from .errors import IdentityMismatch, VanishingDenominatorError
from .exactnum import QuadExt, as_rational, factorial, one_like, pochhammer
from .polycore import Poly
from .util import require_equal

logger = logging.getLogger(__name__)


def _exact(value):
    if isinstance(value, (QuadExt, Fraction)):
        return value
    return as_rational(value)


class TruncatedSeries(object):
    """
    sum_{k=0}^{trunc} prod (a)_k / prod (b)_k * z^k / k!

    Params:
        - num_params    numerator parameters a
        - den_params    denominator parameters b
        - argument      z
        - trunc         last term index, >= 0; a negative value is the empty sum
    """

    def __init__(self, num_params, den_params, argument, trunc):
        self.num_params = tuple(_exact(a) for a in num_params)
        self.den_params = tuple(_exact(b) for b in den_params)
        self.argument = _exact(argument)
        self.trunc = int(trunc)

    def __repr__(self):
        return "<TruncatedSeries {0}F{1} num={2} den={3} z={4} trunc={5}>".format(
            len(self.num_params),
            len(self.den_params),
            [str(a) for a in self.num_params],
            [str(b) for b in self.den_params],
            self.argument,
            self.trunc,
        )


def reduce_params(num, den):
    """
    Cancel identical parameters, then contiguous ones.

    Returns:
        (numerators, denominators, pairs) where each b in ``pairs`` stands
        for the factor (b+k)/b left by a numerator b+1 over a denominator b.
    """
    num = list(num)
    den = list(den)
    for a in list(num):
        for i, b in enumerate(den):
            if a == b:
                num.remove(a)
                del den[i]
                break
    pairs = []
    for a in list(num):
        for i, b in enumerate(den):
            if a == b + 1:
                num.remove(a)
                del den[i]
                pairs.append(b)
                break
    return num, den, pairs


def eval_truncated(series):
    """
    Sum a TruncatedSeries exactly, in Q or in Q(sqrt(d)).

    Terms are accumulated by multiplying the previous term by its ratio.

    Raises:
        VanishingDenominatorError if a denominator Pochhammer symbol or a
        contiguous-pair base vanishes within the summation range.
    """
    num, den, pairs = reduce_params(series.num_params, series.den_params)
    z = series.argument
    trunc = series.trunc
    for b in pairs:
        if b == 0:
            raise VanishingDenominatorError("contiguous pair with base 0 in {0!r}".format(series))
    for b in den:
        for j in range(trunc):
            if b + j == 0:
                raise VanishingDenominatorError(
                    "denominator ({0})_k vanishes at k={1} in {2!r}".format(b, j + 1, series)
                )
    seed = next((v for v in series.num_params + series.den_params if isinstance(v, QuadExt)), z)
    term = one_like(seed)
    total = term * 0
    for k in range(trunc + 1):
        factor = one_like(seed)
        for b in pairs:
            factor = factor * (b + k) / b
        total = total + term * factor
        if k == trunc:
            break
        step = z / (k + 1)
        for a in num:
            step = step * (a + k)
        for b in den:
            step = step / (b + k)
        term = term * step
        if term == 0:
            break
    return total


def as_rational_result(identity, value):
    """
    Return ``value`` as a Fraction.

    Raises:
        IdentityMismatch if a QuadExt value has a nonzero irrational part.
    """
    if isinstance(value, QuadExt):
        if not value.is_rational:
            raise IdentityMismatch(identity, value, "a rational value", link="irrational part")
        return value.to_rational()
    return value


def _vanishes_within(b, n):
    return any(b + j == 0 for j in range(n))


def chu_vandermonde(n, b, c):
    """
    2F1(-n, b; c; 1) = (c-b)_n / (c)_n, checked against direct summation.

    Raises:
        VanishingDenominatorError for c in {0, -1, ..., -n+1}.
    """
    b, c = as_rational(b), as_rational(c)
    if _vanishes_within(c, n):
        raise VanishingDenominatorError("(c)_n vanishes for c={0}, n={1}".format(c, n))
    closed = pochhammer(c - b, n) / pochhammer(c, n)
    series = eval_truncated(TruncatedSeries([-n, b], [c], 1, n))
    return require_equal("hyp.chu_vandermonde", series, closed)


def pfaff_saalschutz(a, b, c, n):
    """
    The balanced 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n),
    checked against direct summation.

    Raises:
        VanishingDenominatorError when (c)_n or (c-a-b)_n vanishes.
    """
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    if _vanishes_within(c, n) or _vanishes_within(c - a - b, n):
        raise VanishingDenominatorError(
            "closed form denominator vanishes for a={0}, b={1}, c={2}, n={3}".format(a, b, c, n)
        )
    closed = pochhammer(c - a, n) * pochhammer(c - b, n) / (pochhammer(c, n) * pochhammer(c - a - b, n))
    series = eval_truncated(TruncatedSeries([-n, a, b], [c, 1 + a + b - c - n], 1, n))
    return require_equal("hyp.pfaff_saalschutz", series, closed)


def contiguous_check(num, den, z, trunc):
    """
    The contiguous relation in the last numerator parameter, truncated:

        F(a_1..a_r; b; z) - F(a_1..a_{r-1}, a_r - 1; b; z)
            = (a_1...a_{r-1} z / (b_1...b_s)) F(a_1+1..a_{r-1}+1, a_r; b+1; z)

    with both left series cut at ``trunc`` and the right one at trunc-1.
    The relation holds term by term, so any parameters work.

    Returns:
        (lhs, rhs)
    """
    num = [as_rational(a) for a in num]
    den = [as_rational(b) for b in den]
    z = as_rational(z)
    head, last = num[:-1], num[-1]
    lhs = eval_truncated(TruncatedSeries(num, den, z, trunc)) - eval_truncated(
        TruncatedSeries(head + [last - 1], den, z, trunc)
    )
    if trunc < 1:
        rhs = Fraction(0)
    else:
        coefficient = z
        for a in head:
            coefficient = coefficient * a
        for b in den:
            coefficient = coefficient / b
        shifted = TruncatedSeries([a + 1 for a in head] + [last], [b + 1 for b in den], z, trunc - 1)
        rhs = coefficient * eval_truncated(shifted) if coefficient else Fraction(0)
    require_equal("hyp.contiguous", lhs, rhs)
    return lhs, rhs


def appell_f2_terminating(a, b1, b2, c1, c2, x, y, trunc1, trunc2):
    """
    sum_{m<=trunc1} sum_{j<=trunc2} (a)_{m+j} (b1)_m (b2)_j / ((c1)_m (c2)_j m! j!) x^m y^j

    Raises:
        VanishingDenominatorError if (c1)_m or (c2)_j vanishes in range.
    """
    a, b1, b2, c1, c2, x, y = (as_rational(v) for v in (a, b1, b2, c1, c2, x, y))
    if _vanishes_within(c1, trunc1) or _vanishes_within(c2, trunc2):
        raise VanishingDenominatorError("Appell F2 denominator vanishes in range")
    total = Fraction(0)
    outer = Fraction(1)
    for m in range(trunc1 + 1):
        inner = outer
        for j in range(trunc2 + 1):
            total += inner
            inner = inner * (a + m + j) * (b2 + j) / ((c2 + j) * (j + 1)) * y
            if inner == 0:
                break
        outer = outer * (a + m) * (b1 + m) / ((c1 + m) * (m + 1)) * x
        if outer == 0:
            break
    return total


def laguerre_f2_chain(alpha, n):
    """
    (alpha+2)_n/n! three ways: the closed form, ((alpha+2)_n/n!)^2 times the
    terminating F2(alpha+1; -n, -n; alpha+2, alpha+2; 1, 1), and the same
    square times the single sum left after summing the inner 2F1 by
    Chu-Vandermonde.

    Returns:
        The common value.
    """
    alpha = as_rational(alpha)
    closed = pochhammer(alpha + 2, n) / factorial(n)
    f2 = appell_f2_terminating(alpha + 1, -n, -n, alpha + 2, alpha + 2, 1, 1, n, n)
    single = Fraction(0)
    for m in range(n + 1):
        inner = chu_vandermonde(n, alpha + m + 1, alpha + 2)
        single += pochhammer(alpha + 1, m) * pochhammer(Fraction(-n), m) / (
            factorial(m) * pochhammer(alpha + 2, m)
        ) * inner
    require_equal("hyp.laguerre_f2_chain", closed * closed * f2, closed, link="double sum")
    require_equal("hyp.laguerre_f2_chain", closed * closed * single, closed, link="single sum")
    return closed


class HyperTerm(object):
    """
    A hypergeometric term in k:

        scale * prod (a)_k / prod (b)_k * z^k * factor(k)

    There is no implicit k!; put 1 among the denominators for it.

    Params:
        - num       numerator parameters
        - den       denominator parameters
        - z         argument (default 1)
        - scale     constant multiplier (default 1)
        - factor    Poly in k (default 1)
    """

    def __init__(self, num, den, z=1, scale=1, factor=None):
        self.num = tuple(as_rational(a) for a in num)
        self.den = tuple(as_rational(b) for b in den)
        self.z = as_rational(z)
        self.scale = as_rational(scale)
        self.factor = factor if factor is not None else Poly.one()

    def value(self, k):
        result = self.scale * self.z ** k * self.factor(k)
        for a in self.num:
            result = result * pochhammer(a, k)
        for b in self.den:
            d = pochhammer(b, k)
            if d == 0:
                raise VanishingDenominatorError("({0})_{1} vanishes".format(b, k))
            result = result / d
        return result

    def ratio(self, k):
        """value(k+1)/value(k) as a rational number."""
        result = self.z * self.factor(k + 1) / self.factor(k)
        for a in self.num:
            result = result * (a + k)
        for b in self.den:
            result = result / (b + k)
        return result

    def __repr__(self):
        return "<HyperTerm num={0} den={1} z={2} scale={3} factor={4}>".format(
            [str(a) for a in self.num], [str(b) for b in self.den], self.z, self.scale, self.factor
        )


def indefinite_sum_certificate(term, closed, nmax, identity="hyp.certificate"):
    """
    Verify sum_{k<=n} c_k = s_n for all n <= nmax through
    s_0 = c_0 and s_n - s_{n-1} = c_n.

    Raises:
        IdentityMismatch carrying the first failing n.
    """
    previous = closed.value(0)
    require_equal(identity, previous, term.value(0), index=0)
    for n in range(1, nmax + 1):
        current = closed.value(n)
        require_equal(identity, current - previous, term.value(n), index=n)
        previous = current
    logger.debug("%s certified up to n=%d", identity, nmax)
    return nmax


def jacobi_kernel_terms(alpha, beta):
    """
    Summand and partial sum of sum_k p_k(1)^2/(h_k/h_0) for Jacobi(alpha, beta):

        c_k = (s)_k (1+s/2)_k (alpha+1)_k / ((s/2)_k (beta+1)_k k!),  s = alpha+beta+1
        s_n = (alpha+2)_n (alpha+beta+2)_n / ((beta+1)_n n!)
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    s = alpha + beta + 1
    term = HyperTerm([s, 1 + s / 2, alpha + 1], [s / 2, beta + 1, 1])
    closed = HyperTerm([alpha + 2, alpha + beta + 2], [beta + 1, 1])
    return term, closed


def jacobi_kernel_series(alpha, beta, n):
    """The very-well-poised 5F4 whose value is s_n of ``jacobi_kernel_terms``."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    s = alpha + beta + 1
    return TruncatedSeries(
        [s, 1 + s / 2, alpha + 1, -n, n + s + 1],
        [s / 2, beta + 1, -n, n + s + 1],
        1,
        n,
    )


def laguerre_kernel_terms(alpha):
    """c_k = (alpha+1)_k/k! and s_n = (alpha+2)_n/n!."""
    alpha = as_rational(alpha)
    return HyperTerm([alpha + 1], [1]), HyperTerm([alpha + 2], [1])
