# -*- coding: utf-8 -*-
"""
orthoverify.cdkernel
~~~~~~~~~~~~~~~~~~~~

Christoffel-Darboux kernels and kernel polynomials.

Every kernel is returned multiplied by h_0, so values stay rational:
``h_0 K_n(x, y) = sum_k p_k(x) p_k(y) / (h_k/h_0)``.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

from fractions import Fraction

from .errors import DegreeRangeError, UsageError, VanishingDenominatorError
from .exactnum import as_rational, factorial, pochhammer
from .families import jacobi, kernel_family
from .polycore import Poly, deflate_at_zero, generate_ops, inner_product_n
from .util import require_equal


class KernelPolyResult(object):
    """
    The kernel polynomial q_n = c_n K_n(x0, .) of a family.

    Params:
        - q             the polynomial q_n
        - cn_over_h0    c_n/h_0
        - x0            the kernel point
    """

    def __init__(self, q, cn_over_h0, x0):
        self.q = q
        self.cn_over_h0 = cn_over_h0
        self.x0 = x0

    @property
    def degree(self):
        return self.q.degree

    def __repr__(self):
        return "<KernelPolyResult x0={0} c_n/h_0={1} q={2}>".format(
            self.x0, self.cn_over_h0, self.q
        )


def _scalar(x):
    if isinstance(x, (int, str)):
        return as_rational(x)
    return x


def cd_kernel(family, n, x, y, form="sum"):
    """
    h_0 K_n(x, y) in sum or quotient form.

    The quotient form is k_n/(k_{n+1} h_n/h_0) times
    (p_{n+1}(x) p_n(y) - p_n(x) p_{n+1}(y)) / (x - y).

    Raises:
        UsageError for x == y in quotient form or an unknown form.
        DegreeRangeError when n is outside the family's range.
    """
    x, y = _scalar(x), _scalar(y)
    if form == "sum":
        ops = generate_ops(family, n)
        total = Fraction(0)
        for k, p in enumerate(ops):
            total = total + p(x) * p(y) / family.norm_ratio(k)
        return total
    if form != "quotient":
        raise UsageError("unknown kernel form {0!r}".format(form))
    if x == y:
        raise UsageError("the quotient form needs x != y; use cd_confluent")
    ops = generate_ops(family, n + 1)
    p_n, p_next = ops[n], ops[n + 1]
    factor = family.lead(n) / (family.lead(n + 1) * family.norm_ratio(n))
    return factor * (p_next(x) * p_n(y) - p_n(x) * p_next(y)) / (x - y)


def cd_confluent(family, n, x):
    """
    h_0 K_n(x, x) from derivatives:
    k_n/(k_{n+1} h_n/h_0) (p'_{n+1}(x) p_n(x) - p'_n(x) p_{n+1}(x)).
    """
    x = _scalar(x)
    ops = generate_ops(family, n + 1)
    p_n, p_next = ops[n], ops[n + 1]
    factor = family.lead(n) / (family.lead(n + 1) * family.norm_ratio(n))
    return factor * (p_next.derivative()(x) * p_n(x) - p_n.derivative()(x) * p_next(x))


def cd_confluent_origin(family, n):
    """
    h_0 K_{2n}(0, 0) for an even measure, where only one product survives:
    k_{2n}/(k_{2n+1} h_{2n}/h_0) p'_{2n+1}(0) p_{2n}(0).

    Raises:
        UsageError for a family without an even measure.
    """
    if not family.is_even:
        raise UsageError("{0} does not have an even measure".format(family.label))
    ops = generate_ops(family, 2 * n + 1)
    factor = family.lead(2 * n) / (family.lead(2 * n + 1) * family.norm_ratio(2 * n))
    return factor * ops[2 * n + 1].derivative()(0) * ops[2 * n](0)


def delta(p):
    """Forward difference (Delta p)(x) = p(x+1) - p(x)."""
    return p.shift(1) - p


def cd_discrete(family, n, x):
    """
    h_0 K_n(x, x-1) through forward differences:
    k_n/(k_{n+1} h_n/h_0) (p_n(x) (Delta p_{n+1})(x-1) - p_{n+1}(x) (Delta p_n)(x-1)).

    Raises:
        UsageError for a non-Hahn family.
    """
    if not family.is_discrete:
        raise UsageError("cd_discrete needs a Hahn family, got {0}".format(family.label))
    x = _scalar(x)
    ops = generate_ops(family, n + 1)
    p_n, p_next = ops[n], ops[n + 1]
    factor = family.lead(n) / (family.lead(n + 1) * family.norm_ratio(n))
    return factor * (p_n(x) * delta(p_next)(x - 1) - p_next(x) * delta(p_n)(x - 1))


def kernel_series(family, x0, n):
    """The polynomial h_0 K_n(x0, .) = sum_k p_k(x0) p_k / (h_k/h_0)."""
    x0 = _scalar(x0)
    result = Poly.zero()
    for k, p in enumerate(generate_ops(family, n)):
        c = p(x0) / family.norm_ratio(k)
        if c:
            result = result + p * c
    return result


def kernel_poly(family, x0, n):
    """
    The kernel polynomial q_n = c_n K_n(x0, .), normalized so that its
    leading coefficient is that of p_n in the kernel family.

    c_n/h_0 = k'_n (h_n/h_0) / (k_n p_n(x0)), with k'_n taken from the kernel
    family. The series-built q_n is compared coefficient-wise with p_n of the
    kernel family before it is returned.

    Raises:
        UsageError when no kernel family is known for x0.
        VanishingDenominatorError when p_n(x0) = 0.
        IdentityMismatch when the two constructions disagree.
    """
    x0 = as_rational(x0)
    target = kernel_family(family, x0)
    target.check_degree(n)
    p_n = generate_ops(family, n)[n]
    value = p_n(x0)
    if value == 0:
        raise VanishingDenominatorError("p_{0}({1}) = 0 for {2}".format(n, x0, family.label))
    cn_over_h0 = target.lead(n) * family.norm_ratio(n) / (family.lead(n) * value)
    q = kernel_series(family, x0, n) * cn_over_h0
    require_equal("cdkernel.kernel_poly", q, generate_ops(target, n)[n])
    return KernelPolyResult(q, cn_over_h0, x0)


def reproduce(family, n, p, y):
    """
    <p, h_0 K_n(., y)>/h_0, which equals p(y) for deg p <= n.

    Raises:
        DegreeRangeError for deg p > n.
    """
    if p.degree > n:
        raise DegreeRangeError("deg p = {0} exceeds n = {1}".format(p.degree, n))
    return inner_product_n(p, kernel_series(family, y, n), family)


def reproduce_check(family, n, p, y):
    y = as_rational(y)
    return require_equal("cdkernel.reproduce", reproduce(family, n, p, y), p(y))


def kernel_orthogonality_check(family, x0, n, p):
    """<q_n, p>/h_0 = (c_n/h_0) p(x0) for deg p <= n."""
    if p.degree > n:
        raise DegreeRangeError("deg p = {0} exceeds n = {1}".format(p.degree, n))
    kp = kernel_poly(family, x0, n)
    return require_equal(
        "cdkernel.kernel_orthogonality",
        inner_product_n(kp.q, p, family),
        kp.cn_over_h0 * p(kp.x0),
    )


def kernel_norm_check(family, x0, n):
    """<q_n, q_n>/h_0 = (c_n/h_0) q_n(x0); returns the common value."""
    kp = kernel_poly(family, x0, n)
    return require_equal(
        "cdkernel.kernel_norm",
        inner_product_n(kp.q, kp.q, family),
        kp.cn_over_h0 * kp.q(kp.x0),
    )


def kernel_diagonal_check(family, x0, n):
    """(c_n/h_0) h_0 K_n(x0, x0) = q_n(x0)."""
    kp = kernel_poly(family, x0, n)
    return require_equal(
        "cdkernel.kernel_diagonal",
        kp.cn_over_h0 * cd_kernel(family, n, kp.x0, kp.x0),
        kp.q(kp.x0),
    )


def cross_kernel_check(family, n, x0, x1):
    """
    h_0 K_n(x0, x1) against <h_0 K_n(x0, .), h_0 K_n(x1, .)>/h_0.

    Returns:
        The common value.
    """
    x0, x1 = as_rational(x0), as_rational(x1)
    lhs = cd_kernel(family, n, x0, x1)
    rhs = inner_product_n(kernel_series(family, x0, n), kernel_series(family, x1, n), family)
    return require_equal("cdkernel.cross_kernel", lhs, rhs)


def quadratic_transformation_check(family, n):
    """
    For an even Jacobi family, p_{2n+1}(x)/x is a constant multiple of
    q_n(2x^2 - 1), q_n the kernel polynomial of jacobi(alpha, -1/2) at -1.

    Returns:
        The proportionality constant.

    Raises:
        UsageError for anything but an even Jacobi family.
        NonzeroConstantTermError if p_{2n+1}(0) != 0.
        IdentityMismatch when the two polynomials are not proportional.
    """
    if family.base != "jacobi" or not family.is_even:
        raise UsageError("{0} is not an even Jacobi family".format(family.label))
    lhs = deflate_at_zero(generate_ops(family, 2 * n + 1)[2 * n + 1])
    q = kernel_poly(jacobi(family.alpha, Fraction(-1, 2)), -1, n).q
    rhs = q.compose(Poly([-1, 0, 2]))
    constant = lhs.lead / rhs.lead
    require_equal("cdkernel.quadratic_transformation", lhs, rhs * constant)
    return constant


def jacobi_kernel_norm(alpha, beta, n):
    """
    <q_n, q_n>/h_0 for the Jacobi kernel polynomial at 1:
    (alpha+2)_n (beta+1)_n / ((alpha+beta+2)_n n!).
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    return (
        pochhammer(alpha + 2, n)
        * pochhammer(beta + 1, n)
        / (pochhammer(alpha + beta + 2, n) * factorial(n))
    )


def laguerre_kernel_norm(alpha, n):
    """<q_n, q_n>/h_0 for the Laguerre kernel polynomial at 0: (alpha+2)_n / n!."""
    return pochhammer(as_rational(alpha) + 2, n) / factorial(n)


def jacobi_explicit(alpha, beta, n):
    """
    P_n^(alpha,beta) summed from (alpha+1)_n/n! 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2),
    without the three-term recurrence.
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    half = Poly([Fraction(1, 2), Fraction(-1, 2)])
    coefficient = pochhammer(alpha + 1, n) / factorial(n)
    result = Poly.zero()
    power = Poly.one()
    for k in range(n + 1):
        result = result + power * coefficient
        coefficient = coefficient * (k - n) * (n + alpha + beta + 1 + k) / ((alpha + 1 + k) * (k + 1))
        power = power * half
    return result
