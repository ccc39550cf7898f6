# -*- coding: utf-8 -*-
"""
orthoverify.symmetric
~~~~~~~~~~~~~~~~~~~~~

The integral I_n of (p_{2n+1}(x)/x)^2 against an even measure, in units of
h_0, by recurrence, direct integration and the kernel sum, together with
its closed forms and the projection property of p_{2n+1}(x)/x.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

from fractions import Fraction

from .cdkernel import kernel_series
from .errors import DegreeRangeError, UsageError
from .exactnum import as_rational, factorial, pochhammer
from .families import explicit_recurrence, recur_coeffs, special_values
from .polycore import deflate_at_zero, generate_ops, inner_product_n
from .util import require_equal

METHODS = ("recurrence", "direct", "cd_sum")


class PSResult(object):
    """
    One computed value of I_n/h_0.

    Params:
        - n         index
        - value     I_n/h_0 as a Fraction
        - method    one of METHODS or "closed_form"
    """

    __slots__ = ("n", "value", "method")

    def __init__(self, n, value, method):
        self.n = n
        self.value = value
        self.method = method

    def __repr__(self):
        return "<PSResult n={0} {1}={2}>".format(self.n, self.method, self.value)


def _require_even(family):
    if not family.is_even:
        raise UsageError("{0} does not have an even measure".format(family.label))


def _p0(family, n):
    return special_values(family, n).value("p(0)")


def _dp0(family, n):
    return special_values(family, n).value("dp(0)")


# family.key -> (I_0, I_1, ...) from the recurrence
_RECURRENCE_CACHE = {}


def _by_recurrence(family, n):
    cached = _RECURRENCE_CACHE.get(family.key, ())
    if len(cached) > n:
        return cached[n]
    values = list(cached) or [family.lead(1) ** 2]
    while len(values) <= n:
        m = len(values)
        a, _, c = recur_coeffs(family, 2 * m)
        values.append(c * c * values[-1] + a * a * family.norm_ratio(2 * m))
    _RECURRENCE_CACHE[family.key] = tuple(values)
    return values[n]


def _by_direct(family, n):
    q = deflate_at_zero(generate_ops(family, 2 * n + 1)[2 * n + 1])
    return inner_product_n(q, q, family)


def _cd_factor(family, n):
    return (
        family.lead(2 * n + 1)
        * family.norm_ratio(2 * n)
        / (family.lead(2 * n) * _p0(family, 2 * n))
    )


def _by_cd_sum(family, n):
    total = Fraction(0)
    for k in range(n + 1):
        total += _p0(family, 2 * k) ** 2 / family.norm_ratio(2 * k)
    return _cd_factor(family, n) ** 2 * total


_METHODS = {
    "recurrence": _by_recurrence,
    "direct": _by_direct,
    "cd_sum": _by_cd_sum,
}


def ps_integral(family, n, method="recurrence"):
    """
    I_n/h_0 for an even family.

    Params:
        - family    gegenbauer, legendre, a Chebyshev kind or hermite
        - n         index >= 0
        - method    "recurrence", "direct" or "cd_sum"

    Raises:
        UsageError for a family without an even measure or an unknown method.
        DegreeRangeError for n < 0.
    """
    _require_even(family)
    if n < 0:
        raise DegreeRangeError("index {0} is negative".format(n))
    if method not in _METHODS:
        raise UsageError(
            "unknown method {0!r}; known: {1}".format(method, ", ".join(METHODS))
        )
    return _METHODS[method](family, n)


def ps_closed_form(family, n):
    """
    k_{2n+1} (h_{2n}/h_0) p'_{2n+1}(0) / (k_{2n} p_{2n}(0)).
    """
    _require_even(family)
    return _cd_factor(family, n) * _dp0(family, 2 * n + 1)


def ps_results(family, n, direct=True):
    """Every available evaluation of I_n/h_0, closed form last."""
    methods = [m for m in METHODS if direct or m != "direct"]
    results = [PSResult(n, ps_integral(family, n, m), m) for m in methods]
    results.append(PSResult(n, ps_closed_form(family, n), "closed_form"))
    return results


def gegenbauer_closed_form(alpha, n):
    """(alpha+1)_{2n+1}^2 / ((2 alpha+2)_{2n} (2n+1)!)."""
    alpha = as_rational(alpha)
    return pochhammer(alpha + 1, 2 * n + 1) ** 2 / (
        pochhammer(2 * alpha + 2, 2 * n) * factorial(2 * n + 1)
    )


def hermite_closed_form(n):
    """2^{2n+2} (2n+1)!."""
    return Fraction(4) ** (n + 1) * factorial(2 * n + 1)


def chebyshev_value(family, n):
    """
    I_n of the classical T or U polynomial in units of pi.

    T gives 2n+1 and U gives 2n+2.
    """
    if family.pi_units is None:
        raise UsageError("{0} is not a Chebyshev kind".format(family.label))
    scale = family.rescale(2 * n + 1)
    return scale * scale * ps_integral(family, n) * family.pi_units


def ps_projection_check(family, n, p):
    """
    (k_{2n} p_{2n}(0) / (k_{2n+1} h_{2n}/h_0)) <p, p_{2n+1}/x>/h_0 = p(0)
    for deg p <= 2n+1.

    Raises:
        DegreeRangeError for deg p > 2n+1.
    """
    _require_even(family)
    if p.degree > 2 * n + 1:
        raise DegreeRangeError("deg p = {0} exceeds 2n+1 = {1}".format(p.degree, 2 * n + 1))
    q = deflate_at_zero(generate_ops(family, 2 * n + 1)[2 * n + 1])
    value = inner_product_n(p, q, family) / _cd_factor(family, n)
    return require_equal("symmetric.projection", value, p(0))


def ps_cd_proportionality(family, n):
    """
    h_0 K_{2n}(., 0) is (k_{2n} p_{2n}(0) / (k_{2n+1} h_{2n}/h_0)) p_{2n+1}(x)/x,
    and h_0 K_{2n+1}(., 0) is the same polynomial.

    Returns:
        The polynomial h_0 K_{2n}(., 0).
    """
    _require_even(family)
    kernel = kernel_series(family, 0, 2 * n)
    q = deflate_at_zero(generate_ops(family, 2 * n + 1)[2 * n + 1])
    require_equal("symmetric.cd_proportionality", kernel, q / _cd_factor(family, n))
    require_equal(
        "symmetric.cd_proportionality", kernel_series(family, 0, 2 * n + 1), kernel, link="odd"
    )
    return kernel


def ps_recurrence_form_check(family, n):
    """
    The coefficients of I_n = u_n I_{n-1} + v_n written through k, h and
    p(0) data agree with (C_{2n}^2, A_{2n}^2 h_{2n}/h_0), n >= 1, where A and C
    come from the explicit recurrence formulas rather than from k and h.

    Returns:
        (u_n, v_n)
    """
    _require_even(family)
    if n < 1:
        raise DegreeRangeError("index must be >= 1, got {0}".format(n))
    k = family.lead
    h = family.norm_ratio
    u = (
        k(2 * n - 2)
        * k(2 * n + 1)
        * h(2 * n)
        * _p0(family, 2 * n - 2)
        / (k(2 * n - 1) * k(2 * n) * h(2 * n - 2) * _p0(family, 2 * n))
    ) ** 2
    v = (k(2 * n + 1) / k(2 * n)) ** 2 * h(2 * n)
    a, c = explicit_recurrence(family, 2 * n)
    require_equal("symmetric.recurrence_form", u, c * c, link="u")
    require_equal("symmetric.recurrence_form", v, a * a * h(2 * n), link="v")
    return u, v
