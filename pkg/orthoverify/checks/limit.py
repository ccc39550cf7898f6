# -*- coding: utf-8 -*-
"""
orthoverify.checks.limit
~~~~~~~~~~~~~~~~~~~~~~~~

The Jacobi limit of the second Hahn identity. These are the only checks
with a tolerance; their sides are floats.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from ..cdkernel import jacobi_kernel_norm
from ..hahn import jacobi_limit_check, jacobi_limit_value, limit_coherence, limit_tolerance
from ..util import stringify
from . import IdentityCheck

logger = logging.getLogger(__name__)


def _params(alpha, beta, n, **extra):
    params = {"alpha": stringify(alpha), "beta": stringify(beta), "n": str(n)}
    params.update({key: str(value) for key, value in extra.items()})
    return params


class JacobiLimitCheck(IdentityCheck):
    """
    N^{-(alpha+beta+1)} times the left side of the second identity at the
    largest N, against the limit constant.

    The decay across ``big_ns`` is asserted by ``jacobi_limit_check``.
    """

    identity = "limit.jacobi"

    def __init__(self, alpha, beta, n, big_ns):
        big_ns = sorted(int(v) for v in big_ns)
        super(JacobiLimitCheck, self).__init__(
            _params(alpha, beta, n, bigN=",".join(str(v) for v in big_ns))
        )
        self.alpha, self.beta, self.n, self.big_ns = alpha, beta, n, big_ns
        self.tolerance = limit_tolerance(n, big_ns[-1])

    def compute(self):
        limit, points = jacobi_limit_check(self.alpha, self.beta, self.n, self.big_ns)
        for point in points:
            logger.debug("%s N=%d relative error %.3e", self.identity, point.big_n, point.error)
        return points[-1].value, limit


class LimitRewriteCheck(IdentityCheck):
    """The exact limit factor through the Jacobi kernel at -1 and the swapped norm at 1."""

    identity = "limit.rewrite"

    def __init__(self, alpha, beta, n):
        super(LimitRewriteCheck, self).__init__(_params(alpha, beta, n))
        self.alpha, self.beta, self.n = alpha, beta, n

    def compute(self):
        return jacobi_limit_value(self.alpha, self.beta, self.n), jacobi_kernel_norm(
            self.beta, self.alpha, self.n
        )


class CoherenceCheck(IdentityCheck):
    """At large N the 6F5 pair approaches the Jacobi kernel sum with alpha and beta swapped."""

    identity = "limit.coherence"
    tolerance = 1e-2

    def __init__(self, alpha, beta, n, big_n=10000):
        super(CoherenceCheck, self).__init__(_params(alpha, beta, n, bigN=big_n))
        self.alpha, self.beta, self.n, self.big_n = alpha, beta, n, big_n

    def compute(self):
        difference = limit_coherence(self.alpha, self.beta, self.n, self.big_n)
        return 1.0 + difference, 1.0
