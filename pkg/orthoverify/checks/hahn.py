# -*- coding: utf-8 -*-
"""
orthoverify.checks.hahn
~~~~~~~~~~~~~~~~~~~~~~~

Checks of the Hahn kernel identities at one (alpha, beta, N) grid point.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

from ..cdkernel import cd_discrete, kernel_poly
from ..hahn import (
    build_rn,
    derivation_chain_check,
    first_identity,
    first_identity_rhs,
    hahn_certificate,
    hahn_connection_check,
    lambda_eigen_check,
    second_identity_check,
)
from . import IdentityCheck, same


class HahnCheck(IdentityCheck):
    """A check at one HahnContext, optionally at one index n."""

    def __init__(self, ctx, n=None, extra=None):
        params = ctx.params()
        if n is not None:
            params["n"] = str(n)
        params.update(extra or {})
        super(HahnCheck, self).__init__(params)
        self.ctx = ctx
        self.n = n


class ConnectionCheck(HahnCheck):
    """Q_n(x; alpha, beta+1, N-1) as a kernel sum, coefficient by coefficient."""

    identity = "hahn.connection"

    def compute(self):
        return hahn_connection_check(self.ctx, self.n), kernel_poly(
            self.ctx.family, self.ctx.big_n, self.n
        ).q


class FirstIdentityCheck(HahnCheck):
    """q_n(N-1) by one of the finite sum, the 6F5 pair or the 8F7 over Q(sqrt(d))."""

    def __init__(self, ctx, n, form):
        super(FirstIdentityCheck, self).__init__(ctx, n)
        self.form = form
        self.identity = "hahn.first_identity.{0}".format(form)

    def compute(self):
        return first_identity(self.ctx, self.n, self.form), first_identity_rhs(self.ctx, self.n)


class KernelDifferenceCheck(HahnCheck):
    """(c_n/h_0) h_0 K_n(N, N-1) through forward differences is q_n(N-1)."""

    identity = "hahn.kernel_difference"

    def compute(self):
        ctx = self.ctx
        value = ctx.cn_over_h0(self.n) * cd_discrete(ctx.family, self.n, ctx.big_n)
        return value, first_identity_rhs(ctx, self.n)


class DerivationChainCheck(HahnCheck):
    """Every link from the 6F5 pair down to the Pfaff-Saalschutz product."""

    identity = "hahn.derivation_chain"

    def compute(self):
        values = derivation_chain_check(self.ctx, self.n)
        return values["well_poised_pair"], values["closed_form"]


class CertificateCheck(HahnCheck):
    """The kernel sum's closed form certified for every n <= N."""

    identity = "hahn.certificate"

    def compute(self):
        return hahn_certificate(self.ctx), self.ctx.big_n


class LambdaCheck(HahnCheck):
    identity = "hahn.lambda"

    def compute(self):
        return same(lambda_eigen_check(self.ctx, self.n))


class RnCheck(HahnCheck):
    """r_n from the two-term display, from Lambda and from the kernel agree."""

    identity = "hahn.rn"

    def compute(self):
        return same(build_rn(self.ctx, self.n).r)


class SecondIdentityCheck(HahnCheck):
    identity = "hahn.second_identity"

    def compute(self):
        return second_identity_check(self.ctx, self.n)
