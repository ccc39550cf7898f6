# -*- coding: utf-8 -*-
"""
orthoverify.checks.symmetric
~~~~~~~~~~~~~~~~~~~~~~~~~~~~

Checks of the even-measure integral I_n and its companions.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

from ..cdkernel import cd_confluent_origin, cd_kernel
from ..errors import UsageError
from ..polycore import Poly
from ..symmetric import (
    chebyshev_value,
    gegenbauer_closed_form,
    hermite_closed_form,
    ps_cd_proportionality,
    ps_closed_form,
    ps_integral,
    ps_projection_check,
    ps_recurrence_form_check,
)
from . import same
from .core import FamilyCheck


def reference_value(family, n):
    """I_n/h_0 from the family's own closed form."""
    if family.base == "hermite":
        return hermite_closed_form(n)
    if family.base == "jacobi" and family.is_even:
        return gegenbauer_closed_form(family.alpha, n)
    raise UsageError("{0} has no closed form for I_n".format(family.label))


class IntegralMethodCheck(FamilyCheck):
    """One evaluation of I_n/h_0 against the family's closed form."""

    identity = "symmetric.integral"

    def __init__(self, family, n, method):
        super(IntegralMethodCheck, self).__init__(family, n, extra={"method": method})
        self.method = method

    def compute(self):
        if self.method == "closed_form":
            value = ps_closed_form(self.family, self.n)
        else:
            value = ps_integral(self.family, self.n, self.method)
        return value, reference_value(self.family, self.n)


class ChebyshevCheck(FamilyCheck):
    """The classical T_n (U_n) integral is 2n+1 (2n+2) in units of pi."""

    identity = "symmetric.chebyshev"

    def compute(self):
        offset = 1 if self.family.kind == "chebyshev_t" else 2
        return chebyshev_value(self.family, self.n), 2 * self.n + offset


class ProportionalityCheck(FamilyCheck):
    identity = "symmetric.cd_proportionality"

    def compute(self):
        return same(ps_cd_proportionality(self.family, self.n))


class ProjectionCheck(FamilyCheck):
    """<p, p_{2n+1}/x> recovers p(0) for p = 1 + x + ... + x^{2n+1}."""

    identity = "symmetric.projection"

    def compute(self):
        p = Poly([1] * (2 * self.n + 2))
        return ps_projection_check(self.family, self.n, p), p(0)


class ConfluentOriginCheck(FamilyCheck):
    """h_0 K_{2n}(0, 0) from the single surviving derivative product."""

    identity = "symmetric.confluent_origin"

    def compute(self):
        return cd_confluent_origin(self.family, self.n), cd_kernel(self.family, 2 * self.n, 0, 0)


class RecurrenceFormCheck(FamilyCheck):
    identity = "symmetric.recurrence_form"

    def compute(self):
        return same(ps_recurrence_form_check(self.family, self.n))
