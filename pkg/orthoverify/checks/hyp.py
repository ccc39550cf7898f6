# -*- coding: utf-8 -*-
"""
orthoverify.checks.hyp
~~~~~~~~~~~~~~~~~~~~~~

Classical summation formulas against direct summation.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

from ..exactnum import as_rational, factorial, pochhammer
from ..hyp import (
    TruncatedSeries,
    appell_f2_terminating,
    chu_vandermonde,
    contiguous_check,
    eval_truncated,
)
from ..util import stringify
from . import IdentityCheck


def _params(**values):
    return {key: stringify(value) for key, value in values.items()}


class ChuVandermondeCheck(IdentityCheck):
    """2F1(-n, b; c; 1) = (c-b)_n/(c)_n."""

    identity = "hyp.chu_vandermonde"

    def __init__(self, n, b, c):
        super(ChuVandermondeCheck, self).__init__(_params(n=n, b=b, c=c))
        self.n, self.b, self.c = n, as_rational(b), as_rational(c)

    def compute(self):
        closed = pochhammer(self.c - self.b, self.n) / pochhammer(self.c, self.n)
        return chu_vandermonde(self.n, self.b, self.c), closed


class SaalschutzCheck(IdentityCheck):
    """The balanced 3F2 at 1 against (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)."""

    identity = "hyp.pfaff_saalschutz"

    def __init__(self, a, b, c, n):
        super(SaalschutzCheck, self).__init__(_params(a=a, b=b, c=c, n=n))
        self.a, self.b, self.c, self.n = as_rational(a), as_rational(b), as_rational(c), n

    def compute(self):
        a, b, c, n = self.a, self.b, self.c, self.n
        series = eval_truncated(TruncatedSeries([-n, a, b], [c, 1 + a + b - c - n], 1, n))
        closed = pochhammer(c - a, n) * pochhammer(c - b, n) / (
            pochhammer(c, n) * pochhammer(c - a - b, n)
        )
        return series, closed


class ContiguousCheck(IdentityCheck):
    """The truncated contiguous relation in the last numerator parameter."""

    identity = "hyp.contiguous"

    def __init__(self, num, den, z, trunc):
        super(ContiguousCheck, self).__init__(
            {
                "num": ",".join(stringify(as_rational(a)) for a in num),
                "den": ",".join(stringify(as_rational(b)) for b in den),
                "z": stringify(as_rational(z)),
                "trunc": str(trunc),
            }
        )
        self.num, self.den, self.z, self.trunc = list(num), list(den), z, trunc

    def compute(self):
        return contiguous_check(self.num, self.den, self.z, self.trunc)


class AppellReductionCheck(IdentityCheck):
    """
    F2(a; -n, b2; c1, c2; 1, y), truncated at n in the first index, against
    the single sum left by Chu-Vandermonde in that index:
    sum_j (a)_j (b2)_j y^j / ((c2)_j j!) (c1-a-j)_n/(c1)_n.
    """

    identity = "hyp.appell_f2"

    def __init__(self, a, n, b2, c1, c2, y, trunc2):
        super(AppellReductionCheck, self).__init__(
            _params(a=a, n=n, b2=b2, c1=c1, c2=c2, y=y, trunc2=trunc2)
        )
        self.a, self.b2, self.c1, self.c2, self.y = (as_rational(v) for v in (a, b2, c1, c2, y))
        self.n, self.trunc2 = n, trunc2

    def compute(self):
        a, b2, c1, c2, y, n = self.a, self.b2, self.c1, self.c2, self.y, self.n
        double = appell_f2_terminating(a, -n, b2, c1, c2, 1, y, n, self.trunc2)
        single = 0
        for j in range(self.trunc2 + 1):
            single += (
                pochhammer(a, j) * pochhammer(b2, j) * y ** j / (pochhammer(c2, j) * factorial(j))
                * pochhammer(c1 - a - j, n) / pochhammer(c1, n)
            )
        return double, single
