# -*- coding: utf-8 -*-
"""
orthoverify.checks.core
~~~~~~~~~~~~~~~~~~~~~~~

Checks of the family constants against the generated polynomials.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

from fractions import Fraction

from ..families import (
    even_c_identity,
    explicit_recurrence,
    hahn_h0,
    recur_coeffs,
    special_point,
    special_values,
)
from ..polycore import generate_ops, inner_product_n
from . import IdentityCheck


class FamilyCheck(IdentityCheck):
    """A check about one family, optionally at one degree."""

    def __init__(self, family, n=None, extra=None):
        params = family.params()
        if n is not None:
            params["n"] = str(n)
        params.update(extra or {})
        super(FamilyCheck, self).__init__(params)
        self.family = family
        self.n = n


class OrthogonalityCheck(FamilyCheck):
    """
    <p_m, p_n>/h_0 = delta_{mn} h_n/h_0 for all m, n <= nmax.

    For Hahn families both inner-product paths are compared.
    Both sides are the number of failing pairs and 0.
    """

    identity = "core.orthogonality"

    def __init__(self, family, nmax):
        super(OrthogonalityCheck, self).__init__(family, extra={"nmax": str(nmax)})
        self.nmax = nmax

    def compute(self):
        ops = generate_ops(self.family, self.nmax)
        failures = 0
        for m, p in enumerate(ops):
            for n in range(m, len(ops)):
                expected = self.family.norm_ratio(n) if m == n else Fraction(0)
                value = inner_product_n(p, ops[n], self.family)
                if value != expected:
                    failures += 1
                if self.family.is_discrete:
                    if inner_product_n(p, ops[n], self.family, via="basis") != value:
                        failures += 1
        return failures, 0


class LeadCoefficientCheck(FamilyCheck):
    """The generated p_n has leading coefficient k_n."""

    identity = "core.lead"

    def compute(self):
        return generate_ops(self.family, self.n)[self.n].lead, self.family.lead(self.n)


class SpecialValueCheck(FamilyCheck):
    """A closed-form special value against the generated polynomial."""

    identity = "core.special_value"

    def __init__(self, family, n, label):
        super(SpecialValueCheck, self).__init__(family, n, extra={"point": label})
        self.label = label

    def compute(self):
        x, order = special_point(self.family, self.label)
        p = generate_ops(self.family, self.n)[self.n]
        for _ in range(order):
            p = p.derivative()
        return p(x), special_values(self.family, self.n).value(self.label)


class RecurrenceCheck(FamilyCheck):
    """
    A_n = k_{n+1}/k_n and C_n = k_{n-1} k_{n+1} h_n/(k_n^2 h_{n-1}) agree with
    the family's explicit three-term coefficients.
    """

    identity = "core.recurrence"

    def compute(self):
        a, _, c = recur_coeffs(self.family, self.n)
        explicit_a, explicit_c = explicit_recurrence(self.family, self.n)
        return (a, c), (explicit_a, explicit_c)


class EvenRecurrenceCheck(FamilyCheck):
    """C_{2n-1} = -p_{2n}(0)/p_{2n-2}(0) for an even measure."""

    identity = "core.even_recurrence"

    def compute(self):
        return even_c_identity(self.family, self.n)


class HahnWeightsCheck(FamilyCheck):
    """Hahn weights are positive and sum to h_0 = (alpha+beta+2)_N/N!."""

    identity = "core.hahn_weights"

    def compute(self):
        w = self.family.weights()
        if any(v <= 0 for v in w):
            return min(w), "positive weights"
        return sum(w, Fraction(0)), hahn_h0(self.family)
