# -*- coding: utf-8 -*-
"""
orthoverify.errors
~~~~~~~~~~~~~~~~~~

Exceptions raised by the verification library.

All of them derive from built-in exceptions, so callers that only care
about "bad input" can keep catching ``ValueError``.
"""

from __future__ import absolute_import, division, print_function, unicode_literals


class ParameterRangeError(ValueError):
    """A family or context parameter is outside its admissible range."""


class DegreeRangeError(ValueError):
    """A degree or index is outside the range a family defines."""


class UsageError(ValueError):
    """An operation was asked for something it does not define."""


class FieldMismatchError(ValueError):
    """Two quadratic-extension elements live in different fields."""


class NonzeroConstantTermError(ValueError):
    """A polynomial that should vanish at 0 does not."""


class VanishingDenominatorError(ZeroDivisionError):
    """A denominator Pochhammer symbol vanishes inside the summation range."""


class SkipCheck(Exception):
    """The requested grid point lies outside the identity's domain."""


class IdentityMismatch(AssertionError):
    """
    An exact identity did not hold.

    Params:
        - identity  Name of the identity that failed
        - lhs       Left-hand side value (or None)
        - rhs       Right-hand side value (or None)
        - index     (Optional) first failing index of a certificate
        - link      (Optional) failing link of a derivation chain
    """

    def __init__(self, identity, lhs=None, rhs=None, index=None, link=None):
        self.identity = identity
        self.lhs = lhs
        self.rhs = rhs
        self.index = index
        self.link = link
        message = "{0} failed".format(identity)
        if link is not None:
            message += " at link {0}".format(link)
        if index is not None:
            message += " at n={0}".format(index)
        message += ": {0!s} != {1!s}".format(lhs, rhs)
        super(IdentityMismatch, self).__init__(message)
