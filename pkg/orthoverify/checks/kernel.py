# -*- coding: utf-8 -*-
"""
orthoverify.checks.kernel
~~~~~~~~~~~~~~~~~~~~~~~~~

Kernel-polynomial checks for the Jacobi and Laguerre families.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

from ..cdkernel import (
    cd_kernel,
    jacobi_explicit,
    jacobi_kernel_norm,
    kernel_diagonal_check,
    kernel_norm_check,
    kernel_poly,
    laguerre_kernel_norm,
    quadratic_transformation_check,
)
from ..errors import SkipCheck, UsageError
from ..exactnum import factorial, pochhammer
from ..families import kernel_family, special_values
from ..hyp import (
    eval_truncated,
    indefinite_sum_certificate,
    jacobi_kernel_series,
    jacobi_kernel_terms,
    laguerre_f2_chain,
    laguerre_kernel_terms,
)
from ..polycore import deflate_at_zero, generate_ops
from ..util import require_equal
from . import same
from .core import FamilyCheck


def kernel_point(family):
    """The kernel point whose norm has a closed form: 1 for Jacobi, 0 for Laguerre."""
    return 0 if family.base == "laguerre" else 1


def closed_kernel_norm(family, n):
    if family.base == "laguerre":
        return laguerre_kernel_norm(family.alpha, n)
    return jacobi_kernel_norm(family.alpha, family.beta, n)


def _skip_unbalanced(family):
    if family.alpha + family.beta == -1:
        raise SkipCheck("alpha + beta = -1 has no well-poised form")


class KernelNormCheck(FamilyCheck):
    """<q_n, q_n>/h_0 = (c_n/h_0) q_n(x0) against its closed form."""

    identity = "kernel.norm"

    def compute(self):
        value = kernel_norm_check(self.family, kernel_point(self.family), self.n)
        return value, closed_kernel_norm(self.family, self.n)


class KernelPolyCheck(FamilyCheck):
    """
    The Jacobi kernel polynomial at x0 = 1 or -1 against the explicit 2F1 form
    of the shifted family, and its norm against the closed form. At -1 the
    closed form is the one at 1 with alpha and beta swapped.
    """

    identity = "kernel.poly"

    def __init__(self, family, n, x0):
        super(KernelPolyCheck, self).__init__(family, n, extra={"x0": str(x0)})
        self.x0 = x0

    def compute(self):
        family = self.family
        if family.base != "jacobi":
            raise UsageError("kernel polynomial check needs a Jacobi family, got {0}".format(family.label))
        kp = kernel_poly(family, self.x0, self.n)
        target = kernel_family(family, kp.x0)
        require_equal(
            self.identity, kp.q, jacobi_explicit(target.alpha, target.beta, self.n), link="explicit 2F1"
        )
        a, b = (family.beta, family.alpha) if kp.x0 == -1 else (family.alpha, family.beta)
        return kernel_norm_check(family, kp.x0, self.n), jacobi_kernel_norm(a, b, self.n)


class KernelDiagonalCheck(FamilyCheck):
    identity = "kernel.diagonal"

    def compute(self):
        return same(kernel_diagonal_check(self.family, kernel_point(self.family), self.n))


class KernelSumCheck(FamilyCheck):
    """h_0 K_n(x0, x0) in closed form, x0 = 1 for Jacobi and 0 for Laguerre."""

    identity = "kernel.sum"

    def compute(self):
        family = self.family
        x0 = kernel_point(family)
        if family.base == "laguerre":
            closed = laguerre_kernel_terms(family.alpha)[1]
        else:
            closed = jacobi_kernel_terms(family.alpha, family.beta)[1]
        return cd_kernel(family, self.n, x0, x0), closed.value(self.n)


class WellPoisedSeriesCheck(FamilyCheck):
    """The very-well-poised 5F4 sums to h_0 K_n(1, 1)."""

    identity = "kernel.well_poised"

    def compute(self):
        _skip_unbalanced(self.family)
        series = jacobi_kernel_series(self.family.alpha, self.family.beta, self.n)
        return eval_truncated(series), cd_kernel(self.family, self.n, 1, 1)


class CertificateCheck(FamilyCheck):
    """
    s_0 = c_0 and s_n - s_{n-1} = c_n for the kernel-sum closed form,
    every n up to ``n``. Both sides are the certified range.
    """

    identity = "kernel.certificate"

    def compute(self):
        family = self.family
        if family.base == "laguerre":
            term, closed = laguerre_kernel_terms(family.alpha)
        else:
            _skip_unbalanced(family)
            term, closed = jacobi_kernel_terms(family.alpha, family.beta)
        certified = indefinite_sum_certificate(
            term, closed, self.n, identity="kernel.certificate"
        )
        return certified, self.n


class SummandCheck(FamilyCheck):
    """The certificate summand c_k is p_k(x0)^2/(h_k/h_0)."""

    identity = "kernel.summand"

    def compute(self):
        family = self.family
        x0 = kernel_point(family)
        label = "p(0)" if x0 == 0 else "p(1)"
        if family.base == "laguerre":
            term = laguerre_kernel_terms(family.alpha)[0]
        else:
            _skip_unbalanced(family)
            term = jacobi_kernel_terms(family.alpha, family.beta)[0]
        data = special_values(family, self.n)
        return term.value(self.n), data.value(label) ** 2 / data.norm_ratio


class LaguerreChainCheck(FamilyCheck):
    """The kernel norm through the inner product, the Appell F2 and its single-sum reduction."""

    identity = "kernel.laguerre_f2_chain"

    def compute(self):
        return kernel_norm_check(self.family, 0, self.n), laguerre_f2_chain(self.family.alpha, self.n)


class QuadraticTransformationCheck(FamilyCheck):
    """
    p_{2n+1}(x)/x = K q_n(2x^2 - 1); both sides are the constant K, once from
    the leading coefficients and once from the values at x = 1.
    """

    identity = "kernel.quadratic_transformation"

    def compute(self):
        n, alpha = self.n, self.family.alpha
        constant = quadratic_transformation_check(self.family, n)
        p = deflate_at_zero(generate_ops(self.family, 2 * n + 1)[2 * n + 1])
        # q_n(1) = P_n^{(alpha,1/2)}(1)
        q1 = pochhammer(alpha + 1, n) / factorial(n)
        return constant, p(1) / q1
