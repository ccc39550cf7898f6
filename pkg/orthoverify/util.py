# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import numbers
import re
from fractions import Fraction

from .errors import IdentityMismatch
from .exactnum import QuadExt

_NUMERIC = re.compile(r"^-?\d+(/\d+)?$")


def stringify(value):
    """
    Canonical text form of a scalar.

    Rationals become "p/q" (or "p" when q = 1), QuadExt elements become
    "(a)+(b)*sqrt(d)", floats use repr so nothing is lost. Strings pass
    through untouched.
    """
    if isinstance(value, str):
        return value
    if isinstance(value, QuadExt):
        return str(value)
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(stringify(v) for v in value) + ")"
    return str(value)


def sort_value(text):
    """
    Sort key for a parameter value string.

    Numeric strings ("3", "-1/2") sort by value and before everything else,
    so n=10 lands after n=9.
    """
    if _NUMERIC.match(text):
        return (0, Fraction(text), "")
    return (1, Fraction(0), text)


def params_key(params):
    """Stable ordering key for a params mapping."""
    return tuple((key, sort_value(value)) for key, value in sorted(params.items()))


def require_equal(identity, lhs, rhs, link=None, index=None):
    """
    Raise IdentityMismatch unless ``lhs == rhs`` exactly; return ``lhs``.
    """
    if lhs != rhs:
        raise IdentityMismatch(identity, lhs, rhs, index=index, link=link)
    return lhs
