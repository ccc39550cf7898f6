# -*- coding: utf-8 -*-
"""
orthoverify.checks.property
~~~~~~~~~~~~~~~~~~~~~~~~~~~

Randomized instances of the kernel, projection, recurrence and contiguity
identities.

Every instance is drawn when the check is built, from a
``numpy.random.Generator`` seeded with (seed, category), so a run's
instances do not depend on the worker count or on which categories run.

Usage:

    >>> checks = property_checks(seed=7, instances=100)
    >>> reports = [c.run() for c in checks]
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import zlib
from fractions import Fraction

import numpy as np

from ..cdkernel import (
    cd_confluent,
    cd_discrete,
    cd_kernel,
    cross_kernel_check,
    kernel_orthogonality_check,
    kernel_poly,
    reproduce_check,
)
from ..families import (
    explicit_recurrence,
    gegenbauer,
    hahn,
    jacobi,
    laguerre,
    make_family,
    recur_coeffs,
)
from ..hyp import contiguous_check
from ..polycore import Poly, basis_expand
from ..symmetric import ps_projection_check
from ..util import stringify
from . import IdentityCheck

CATEGORIES = (
    "cd_quotient",
    "cd_confluent",
    "cd_discrete",
    "reproduce",
    "kernel_orthogonality",
    "cross_kernel",
    "projection",
    "recurrence",
    "contiguous",
    "basis",
)


class Sampler(object):
    """
    Draws exact parameters from a seeded numpy Generator.

    Params:
        - seed      run seed
        - category  mixed into the seed so categories draw independently
    """

    def __init__(self, seed, category):
        self.rng = np.random.default_rng([int(seed), zlib.crc32(category.encode("utf-8"))])

    def integer(self, low, high):
        """Uniform integer in [low, high]."""
        return int(self.rng.integers(low, high + 1))

    def choice(self, options):
        return options[self.integer(0, len(options) - 1)]

    def rational(self, low=-3, high=3, denominators=(1, 2, 3, 4, 5)):
        q = self.choice(denominators)
        return Fraction(self.integer(low * q, high * q), q)

    def parameter(self):
        """A rational in (-1, 3]."""
        q = self.choice((1, 2, 3, 4))
        return Fraction(self.integer(1 - q, 3 * q), q)

    def non_integer(self):
        """A rational with denominator > 1, so no (b)_k ever vanishes."""
        q = self.choice((2, 3, 5, 7))
        p = self.integer(-3 * q, 3 * q)
        while p % q == 0:
            p = self.integer(-3 * q, 3 * q)
        return Fraction(p, q)

    def poly(self, degree):
        """Random rational coefficients with a nonzero leading one."""
        coefficients = [self.rational() for _ in range(degree + 1)]
        while coefficients[-1] == 0:
            coefficients[-1] = self.rational()
        return Poly(coefficients)

    def continuous_family(self):
        kind = self.choice(("jacobi", "gegenbauer", "laguerre", "hermite", "legendre"))
        return make_family(kind, {"alpha": self.parameter(), "beta": self.parameter()})

    def hahn_family(self):
        while True:
            alpha, beta = self.parameter(), self.parameter()
            if alpha + beta != -1:
                return hahn(alpha, beta, self.integer(2, 8))

    def family(self):
        if self.integer(0, 3) == 0:
            return self.hahn_family()
        return self.continuous_family()

    def even_family(self):
        if self.integer(0, 3) == 0:
            return make_family("hermite")
        return gegenbauer(self.parameter())

    def degree(self, family, high=8):
        """A degree n with n+1 still inside the family's range."""
        if family.is_discrete:
            high = min(high, family.big_n - 1)
        return self.integer(0, high)

    def distinct_points(self):
        x = self.rational()
        y = self.rational()
        while y == x:
            y = self.rational()
        return x, y


class PropertyCheck(IdentityCheck):
    """
    One randomized instance.

    Args:
        category (str): one of CATEGORIES
        index (int): instance number within the category
        seed (int): run seed
        draws (dict): exact values drawn for the instance
        func (callable): computes (lhs, rhs) from ``draws``
    """

    def __init__(self, category, index, seed, draws, func):
        params = {"instance": str(index), "seed": str(seed)}
        for key, value in draws.items():
            if hasattr(value, "params"):
                params.update(value.params())
            else:
                params[key] = stringify(value)
        super(PropertyCheck, self).__init__(params, identity="property.{0}".format(category))
        self.category = category
        self.draws = draws
        self.func = func

    def compute(self):
        return self.func(**self.draws)


def _cd_quotient(family, n, x, y):
    return cd_kernel(family, n, x, y), cd_kernel(family, n, x, y, form="quotient")


def _cd_confluent(family, n, x):
    return cd_kernel(family, n, x, x), cd_confluent(family, n, x)


def _cd_discrete(family, n, x):
    return cd_kernel(family, n, x, x - 1), cd_discrete(family, n, x)


def _reproduce(family, n, p, y):
    return reproduce_check(family, n, p, y), p(y)


def _kernel_orthogonality(family, x0, n, p):
    kp = kernel_poly(family, x0, n)
    return kernel_orthogonality_check(family, x0, n, p), kp.cn_over_h0 * p(x0)


def _cross_kernel(family, n, x0, x1):
    return cross_kernel_check(family, n, x0, x1), cd_kernel(family, n, x0, x1, form="quotient")


def _projection(family, n, p):
    return ps_projection_check(family, n, p), p(0)


def _recurrence(family, n):
    a, _, c = recur_coeffs(family, n)
    return (a, c), explicit_recurrence(family, n)


def _contiguous(num, den, z, trunc):
    return contiguous_check(num, den, z, trunc)


def _basis(family, p):
    return basis_expand(p, family).recombine(family), p


def _draw(category, sampler):
    if category == "cd_quotient":
        family = sampler.family()
        x, y = sampler.distinct_points()
        return {"family": family, "n": sampler.degree(family), "x": x, "y": y}, _cd_quotient
    if category == "cd_confluent":
        family = sampler.family()
        return {"family": family, "n": sampler.degree(family), "x": sampler.rational()}, _cd_confluent
    if category == "cd_discrete":
        family = sampler.hahn_family()
        return {"family": family, "n": sampler.degree(family), "x": sampler.rational()}, _cd_discrete
    if category == "reproduce":
        family = sampler.family()
        n = sampler.degree(family)
        p = sampler.poly(sampler.integer(0, n))
        return {"family": family, "n": n, "p": p, "y": sampler.rational()}, _reproduce
    if category == "kernel_orthogonality":
        kind = sampler.choice(("jacobi", "laguerre", "hahn"))
        if kind == "hahn":
            family = sampler.hahn_family()
            x0 = family.big_n
        elif kind == "laguerre":
            family, x0 = laguerre(sampler.parameter()), 0
        else:
            family, x0 = jacobi(sampler.parameter(), sampler.parameter()), sampler.choice((1, -1))
        n = sampler.degree(family)
        p = sampler.poly(sampler.integer(0, n))
        return {"family": family, "x0": x0, "n": n, "p": p}, _kernel_orthogonality
    if category == "cross_kernel":
        family = sampler.family()
        x0, x1 = sampler.distinct_points()
        return {"family": family, "n": sampler.degree(family), "x0": x0, "x1": x1}, _cross_kernel
    if category == "projection":
        family = sampler.even_family()
        n = sampler.integer(0, 4)
        p = sampler.poly(sampler.integer(0, 2 * n + 1))
        return {"family": family, "n": n, "p": p}, _projection
    if category == "recurrence":
        family = sampler.family()
        return {"family": family, "n": sampler.degree(family, high=12)}, _recurrence
    if category == "contiguous":
        num = [sampler.rational() for _ in range(sampler.integer(1, 3))]
        den = [sampler.non_integer() for _ in range(sampler.integer(0, 2))]
        z = sampler.rational(-2, 2)
        return {"num": num, "den": den, "z": z, "trunc": sampler.integer(0, 8)}, _contiguous
    if category == "basis":
        family = sampler.family()
        return {"family": family, "p": sampler.poly(sampler.degree(family))}, _basis
    raise ValueError(
        "Unknown property category: {0}. Available categories: {1}".format(
            category, ", ".join(CATEGORIES)
        )
    )


def property_checks(seed, instances=100, categories=CATEGORIES):
    """
    ``instances`` checks per category, drawn from ``seed``.

    Returns:
        list of PropertyCheck
    """
    checks = []
    for category in categories:
        sampler = Sampler(seed, category)
        for index in range(instances):
            draws, func = _draw(category, sampler)
            checks.append(PropertyCheck(category, index, seed, draws, func))
    return checks
