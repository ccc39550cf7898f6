# -*- coding: utf-8 -*-
"""
orthoverify.families
~~~~~~~~~~~~~~~~~~~~

Exact constants of the supported orthogonal families: leading coefficients
k_n, norm ratios h_n/h_0, recurrence coefficients, special values and the
measure descriptor.

Every family is one of four base engines (jacobi, hermite, laguerre, hahn);
gegenbauer, legendre and the Chebyshev kinds are Jacobi aliases.

Usage:

    >>> fam = make_family("jacobi", {"alpha": "1/3", "beta": "0"})
    >>> fam.recurrence(2)
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import functools
from fractions import Fraction

from .errors import DegreeRangeError, ParameterRangeError, UsageError
from .exactnum import as_rational, factorial, is_integer, pochhammer
from .util import stringify

HALF = Fraction(1, 2)

KINDS = (
    "jacobi",
    "gegenbauer",
    "legendre",
    "chebyshev_t",
    "chebyshev_u",
    "hermite",
    "laguerre",
    "hahn",
)

CONTINUOUS_EVEN = "continuous-even"
CONTINUOUS = "continuous"
DISCRETE = "discrete"


class FamilySpec(object):
    """
    A validated orthogonal family. Immutable and hashable.

    Params:
        - kind      One of ``KINDS``
        - base      The engine computing the constants
        - alpha     Rational or None
        - beta      Rational or None
        - big_n     int or None (Hahn only)
    """

    __slots__ = ("kind", "base", "alpha", "beta", "big_n")

    def __init__(self, kind, base, alpha=None, beta=None, big_n=None):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "big_n", big_n)

    def __setattr__(self, name, value):
        raise AttributeError("FamilySpec is immutable")

    @property
    def key(self):
        """Identifies the polynomial sequence; aliases share keys with their base."""
        return (self.base, self.alpha, self.beta, self.big_n)

    def __eq__(self, other):
        if not isinstance(other, FamilySpec):
            return NotImplemented
        return self.kind == other.kind and self.key == other.key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.kind,) + self.key)

    @property
    def measure(self):
        if self.base == "hahn":
            return DISCRETE
        if self.base == "hermite" or (self.base == "jacobi" and self.alpha == self.beta):
            return CONTINUOUS_EVEN
        return CONTINUOUS

    @property
    def is_discrete(self):
        return self.measure == DISCRETE

    @property
    def is_even(self):
        return self.measure == CONTINUOUS_EVEN

    @property
    def label(self):
        if self.kind in ("legendre", "chebyshev_t", "chebyshev_u", "hermite"):
            return self.kind
        if self.kind in ("gegenbauer", "laguerre"):
            return "{0}({1})".format(self.kind, self.alpha)
        if self.kind == "jacobi":
            return "jacobi({0},{1})".format(self.alpha, self.beta)
        return "hahn({0},{1},{2})".format(self.alpha, self.beta, self.big_n)

    def params(self):
        """Parameters as a string map, the form reports carry."""
        result = {"family": self.kind}
        if self.alpha is not None and self.kind not in ("legendre", "chebyshev_t", "chebyshev_u"):
            result["alpha"] = stringify(self.alpha)
        if self.beta is not None and self.kind in ("jacobi", "hahn"):
            result["beta"] = stringify(self.beta)
        if self.big_n is not None:
            result["bigN"] = stringify(self.big_n)
        return result

    def __repr__(self):
        return "<FamilySpec {0}>".format(self.label)

    def check_degree(self, n):
        """
        Raises:
            DegreeRangeError for n < 0 or, for Hahn, n > N.
        """
        if n < 0:
            raise DegreeRangeError("degree {0} is negative".format(n))
        if self.base == "hahn" and n > self.big_n:
            raise DegreeRangeError(
                "degree {0} exceeds N={1} for {2}".format(n, self.big_n, self.label)
            )

    def lead(self, n):
        """k_n, the leading coefficient of p_n."""
        self.check_degree(n)
        return _lead(self, n)

    def norm_ratio(self, n):
        """h_n/h_0."""
        self.check_degree(n)
        return _norm_ratio(self, n)

    def recurrence(self, n):
        """(A_n, B_n, C_n); see ``recur_coeffs``."""
        return recur_coeffs(self, n)

    def rescale(self, n):
        """Factor taking the Jacobi-normalized p_n to the classical T_n or U_n."""
        if self.kind == "chebyshev_t":
            return factorial(n) / pochhammer(HALF, n)
        if self.kind == "chebyshev_u":
            return factorial(n + 1) / pochhammer(Fraction(3, 2), n)
        return Fraction(1)

    @property
    def pi_units(self):
        """h_0/pi for the Chebyshev kinds, None otherwise."""
        if self.kind == "chebyshev_t":
            return Fraction(1)
        if self.kind == "chebyshev_u":
            return HALF
        return None

    def support(self):
        if not self.is_discrete:
            raise UsageError("{0} has no finite support".format(self.label))
        return range(self.big_n + 1)

    def weights(self):
        return weights(self)

    def total_mass(self):
        return hahn_h0(self)


def _need(params, name, kind):
    if params.get(name) is None:
        raise UsageError("{0} needs parameter {1!r}".format(kind, name))
    return as_rational(params[name])


def _check_param(name, value):
    if value <= -1:
        raise ParameterRangeError("{0} must exceed -1, got {1}".format(name, value))


def make_family(kind, params=None):
    """
    Build and validate a FamilySpec.

    Params:
        - kind      One of ``KINDS``
        - params    mapping with "alpha", "beta" and "bigN" as the kind needs;
                    values are ints, Fractions or strings like "1/3"

    Raises:
        UsageError for an unknown kind or missing parameter.
        ParameterRangeError for alpha <= -1, beta <= -1, N not an integer >= 1,
        or a Hahn family with alpha + beta = -1.
    """
    params = params or {}
    if kind not in KINDS:
        raise UsageError("unknown family kind {0!r}".format(kind))
    if kind == "legendre":
        return FamilySpec(kind, "jacobi", Fraction(0), Fraction(0))
    if kind == "chebyshev_t":
        return FamilySpec(kind, "jacobi", -HALF, -HALF)
    if kind == "chebyshev_u":
        return FamilySpec(kind, "jacobi", HALF, HALF)
    if kind == "hermite":
        return FamilySpec(kind, "hermite")
    alpha = _need(params, "alpha", kind)
    _check_param("alpha", alpha)
    if kind == "gegenbauer":
        return FamilySpec(kind, "jacobi", alpha, alpha)
    if kind == "laguerre":
        return FamilySpec(kind, "laguerre", alpha)
    beta = _need(params, "beta", kind)
    _check_param("beta", beta)
    if kind == "jacobi":
        return FamilySpec(kind, "jacobi", alpha, beta)
    big_n = params.get("bigN", params.get("N"))
    if big_n is None:
        raise UsageError("hahn needs parameter 'bigN'")
    big_n = as_rational(big_n)
    if not is_integer(big_n) or big_n < 1:
        raise ParameterRangeError("N must be an integer >= 1, got {0}".format(big_n))
    if alpha + beta == -1:
        raise ParameterRangeError(
            "hahn({0},{1},N) has alpha + beta = -1; no convention is defined there".format(
                alpha, beta
            )
        )
    return FamilySpec(kind, "hahn", alpha, beta, int(big_n))


def jacobi(alpha, beta):
    return make_family("jacobi", {"alpha": alpha, "beta": beta})


def gegenbauer(alpha):
    return make_family("gegenbauer", {"alpha": alpha})


def laguerre(alpha):
    return make_family("laguerre", {"alpha": alpha})


def hahn(alpha, beta, big_n):
    return make_family("hahn", {"alpha": alpha, "beta": beta, "bigN": big_n})


def _jacobi_lead(fam, n):
    return pochhammer(n + fam.alpha + fam.beta + 1, n) / (2 ** n * factorial(n))


def _jacobi_norm(fam, n):
    a, b = fam.alpha, fam.beta
    if n == 0:
        return Fraction(1)
    return (
        pochhammer(a + 1, n)
        * pochhammer(b + 1, n)
        / ((2 * n + a + b + 1) * pochhammer(a + b + 2, n - 1) * factorial(n))
    )


def _jacobi_b(fam, n):
    a, b = fam.alpha, fam.beta
    if a == b:
        return Fraction(0)
    if n == 0:
        return (a - b) / 2
    return (2 * n + a + b + 1) * (a * a - b * b) / (
        2 * (n + 1) * (n + a + b + 1) * (2 * n + a + b)
    )


def _hermite_lead(fam, n):
    return Fraction(2) ** n


def _hermite_norm(fam, n):
    return Fraction(2) ** n * factorial(n)


def _laguerre_lead(fam, n):
    return Fraction((-1) ** n) / factorial(n)


def _laguerre_norm(fam, n):
    return pochhammer(fam.alpha + 1, n) / factorial(n)


def _laguerre_b(fam, n):
    return (2 * n + fam.alpha + 1) / (n + 1)


def _hahn_s(fam):
    return fam.alpha + fam.beta + 1


def _hahn_lead(fam, n):
    s = _hahn_s(fam)
    return pochhammer(n + s, n) / (pochhammer(fam.alpha + 1, n) * pochhammer(Fraction(-fam.big_n), n))


def _hahn_norm(fam, n):
    a, b, big_n = fam.alpha, fam.beta, fam.big_n
    s = _hahn_s(fam)
    return (
        (n + s)
        / (2 * n + s)
        * (-1) ** n
        * factorial(n)
        / pochhammer(Fraction(-big_n), n)
        * pochhammer(b + 1, n)
        / pochhammer(a + 1, n)
        * pochhammer(big_n + s + 1, n)
        / pochhammer(s + 1, n)
    )


def _hahn_up_down(fam, n):
    # coefficients of -x Q_n = up Q_{n+1} - (up + down) Q_n + down Q_{n-1}
    a, b, big_n = fam.alpha, fam.beta, fam.big_n
    s = _hahn_s(fam)
    up = (n + s) * (n + a + 1) * (big_n - n) / ((2 * n + s) * (2 * n + s + 1))
    if n == 0:
        down = Fraction(0)
    else:
        down = n * (n + s + big_n) * (n + b) / ((2 * n + s - 1) * (2 * n + s))
    return up, down


def _hahn_b(fam, n):
    up, down = _hahn_up_down(fam, n)
    return (up + down) / up


_LEAD = {
    "jacobi": _jacobi_lead,
    "hermite": _hermite_lead,
    "laguerre": _laguerre_lead,
    "hahn": _hahn_lead,
}

_NORM = {
    "jacobi": _jacobi_norm,
    "hermite": _hermite_norm,
    "laguerre": _laguerre_norm,
    "hahn": _hahn_norm,
}

_B = {
    "jacobi": _jacobi_b,
    "hermite": lambda fam, n: Fraction(0),
    "laguerre": _laguerre_b,
    "hahn": _hahn_b,
}


@functools.lru_cache(maxsize=8192)
def _lead(fam, n):
    return _LEAD[fam.base](fam, n)


@functools.lru_cache(maxsize=8192)
def _norm_ratio(fam, n):
    return _NORM[fam.base](fam, n)


def recur_coeffs(family, n):
    """
    (A_n, B_n, C_n) of p_{n+1} = (A_n x + B_n) p_n - C_n p_{n-1}.

    A_n = k_{n+1}/k_n and C_n = k_{n-1} k_{n+1} h_n / (k_n^2 h_{n-1}), with
    C_0 = 0; B_n comes from the family's explicit formula.

    Raises:
        DegreeRangeError for n < 0 or, for Hahn, n > N-1.
    """
    if n < 0:
        raise DegreeRangeError("recurrence index {0} is negative".format(n))
    family.check_degree(n + 1)
    k_prev = family.lead(n - 1) if n else None
    k_n = family.lead(n)
    k_next = family.lead(n + 1)
    a = k_next / k_n
    b = _B[family.base](family, n)
    if n == 0:
        c = Fraction(0)
    else:
        c = k_prev * k_next * family.norm_ratio(n) / (k_n * k_n * family.norm_ratio(n - 1))
    return a, b, c


def explicit_recurrence(family, n):
    """
    (A_n, C_n) from the classical explicit formulas, independent of k_n and h_n.

    Jacobi, with t = 2n+alpha+beta:
        A_n = (t+1)(t+2) / (2(n+1)(n+alpha+beta+1))
        C_n = (n+alpha)(n+beta)(t+2) / ((n+1)(n+alpha+beta+1) t)
    Hahn: A_n = -1/up_n, C_n = down_n/up_n with the coefficients of
    -x Q_n = up_n Q_{n+1} - (up_n + down_n) Q_n + down_n Q_{n-1}.
    """
    family.check_degree(n + 1)
    if family.base == "hermite":
        return Fraction(2), Fraction(2 * n)
    if family.base == "laguerre":
        if n == 0:
            return Fraction(-1), Fraction(0)
        return Fraction(-1, n + 1), (n + family.alpha) / (n + 1)
    if family.base == "hahn":
        up, down = _hahn_up_down(family, n)
        return -1 / up, down / up
    a, b = family.alpha, family.beta
    if n == 0:
        return (a + b + 2) / 2, Fraction(0)
    t = 2 * n + a + b
    return (
        (t + 1) * (t + 2) / (2 * (n + 1) * (n + a + b + 1)),
        (n + a) * (n + b) * (t + 2) / ((n + 1) * (n + a + b + 1) * t),
    )


SPECIAL_POINTS = {
    "p(0)": (0, 0),
    "dp(0)": (0, 1),
    "p(1)": (1, 0),
    "p(-1)": (-1, 0),
}


def special_point(family, label):
    """
    The point and derivative order a special-value label refers to.

    Returns:
        (x, order) with x a Fraction.

    Raises:
        UsageError for labels the family does not define.
    """
    if family.base == "hahn" and label in ("p(N)", "p(N-1)"):
        x = family.big_n if label == "p(N)" else family.big_n - 1
        return Fraction(x), 0
    if label in SPECIAL_POINTS and label in defined_labels(family):
        x, order = SPECIAL_POINTS[label]
        return Fraction(x), order
    raise UsageError("{0} does not define {1}".format(family.label, label))


def defined_labels(family):
    if family.base == "jacobi":
        labels = ["p(1)", "p(-1)"]
        if family.is_even:
            labels += ["p(0)", "dp(0)"]
        return labels
    if family.base == "hermite":
        return ["p(0)", "dp(0)"]
    if family.base == "laguerre":
        return ["p(0)"]
    return ["p(0)", "p(N)", "p(N-1)"]


class SpecialValues(object):
    """
    Closed-form data of p_n.

    Params:
        - n             degree
        - lead          k_n
        - norm_ratio    h_n/h_0
        - values        dict label -> Fraction, e.g. {"p(1)": ...}
    """

    def __init__(self, n, lead, norm_ratio, values):
        self.n = n
        self.lead = lead
        self.norm_ratio = norm_ratio
        self.values = values

    def value(self, label):
        """
        Raises:
            UsageError if the family does not define ``label``.
        """
        try:
            return self.values[label]
        except KeyError:
            raise UsageError("value {0} is not defined here".format(label))

    def __repr__(self):
        return "<SpecialValues n={0} {1}>".format(
            self.n, ", ".join("{0}={1}".format(k, v) for k, v in sorted(self.values.items()))
        )


def _even_jacobi_values(alpha, n):
    m = n // 2
    if n % 2 == 0:
        p0 = Fraction((-1) ** m) * pochhammer(alpha + m + 1, m) / (4 ** m * factorial(m))
        return p0, Fraction(0)
    dp0 = Fraction((-1) ** m) * pochhammer(alpha + m + 1, m + 1) / (4 ** m * factorial(m))
    return Fraction(0), dp0


def _hermite_p0(m):
    return Fraction((-1) ** m) * 4 ** m * pochhammer(HALF, m)


def special_values(family, n):
    """
    k_n, h_n/h_0 and the family's closed-form special values of p_n.

    Jacobi: p(1), p(-1); even Jacobi and Hermite add p(0) and dp(0)
    (zero where parity forces it); Laguerre: p(0); Hahn: p(0), p(N), p(N-1).

    Raises:
        DegreeRangeError when n is outside the family's range.
    """
    family.check_degree(n)
    values = {}
    if family.base == "jacobi":
        a, b = family.alpha, family.beta
        values["p(1)"] = pochhammer(a + 1, n) / factorial(n)
        values["p(-1)"] = (-1) ** n * pochhammer(b + 1, n) / factorial(n)
        if family.is_even:
            values["p(0)"], values["dp(0)"] = _even_jacobi_values(a, n)
    elif family.base == "hermite":
        m = n // 2
        if n % 2 == 0:
            values["p(0)"], values["dp(0)"] = _hermite_p0(m), Fraction(0)
        else:
            values["p(0)"], values["dp(0)"] = Fraction(0), 2 * n * _hermite_p0(m)
    elif family.base == "laguerre":
        values["p(0)"] = pochhammer(family.alpha + 1, n) / factorial(n)
    else:
        a, b, big_n = family.alpha, family.beta, family.big_n
        p_n = (-1) ** n * pochhammer(b + 1, n) / pochhammer(a + 1, n)
        values["p(0)"] = Fraction(1)
        values["p(N)"] = p_n
        values["p(N-1)"] = p_n * (1 - n * (n + a + b + 1) / ((b + 1) * big_n))
    return SpecialValues(n, family.lead(n), family.norm_ratio(n), values)


def weights(family):
    """
    Hahn weights w_x = (alpha+1)_x/x! * (beta+1)_{N-x}/(N-x)! for x = 0..N.

    Raises:
        UsageError for a non-Hahn family.
    """
    if family.base != "hahn":
        raise UsageError("{0} has no discrete weights".format(family.label))
    return _weights(family)


@functools.lru_cache(maxsize=512)
def _weights(family):
    a, b, big_n = family.alpha, family.beta, family.big_n
    w = pochhammer(b + 1, big_n) / factorial(big_n)
    result = [w]
    for x in range(big_n):
        w = w * (a + 1 + x) / (x + 1) * (big_n - x) / (b + big_n - x)
        result.append(w)
    return tuple(result)


def hahn_h0(family):
    """h_0 = (alpha+beta+2)_N / N!, the total Hahn mass."""
    if family.base != "hahn":
        raise UsageError("{0} is not a Hahn family".format(family.label))
    return pochhammer(family.alpha + family.beta + 2, family.big_n) / factorial(family.big_n)


def kernel_family(family, x0):
    """
    The family whose p_n is the kernel polynomial of ``family`` at ``x0``.

    jacobi at 1 -> jacobi(alpha+1, beta); at -1 -> jacobi(alpha, beta+1);
    laguerre at 0 -> laguerre(alpha+1); hahn at N -> hahn(alpha, beta+1, N-1).

    Raises:
        UsageError when no closed-form kernel family is known for x0.
        ParameterRangeError for hahn with N < 2.
    """
    x0 = as_rational(x0)
    if family.base == "jacobi" and x0 == 1:
        return jacobi(family.alpha + 1, family.beta)
    if family.base == "jacobi" and x0 == -1:
        return jacobi(family.alpha, family.beta + 1)
    if family.base == "laguerre" and x0 == 0:
        return laguerre(family.alpha + 1)
    if family.base == "hahn" and x0 == family.big_n:
        if family.big_n < 2:
            raise ParameterRangeError("hahn kernel family needs N >= 2")
        return hahn(family.alpha, family.beta + 1, family.big_n - 1)
    raise UsageError("no kernel family for {0} at x0={1}".format(family.label, x0))


def even_c_identity(family, n):
    """
    For an even measure, C_{2n-1} = -p_{2n}(0)/p_{2n-2}(0), n >= 1.

    Returns:
        (C_{2n-1} from the recurrence, the quotient of special values)

    Raises:
        UsageError for a family without an even measure.
    """
    if not family.is_even:
        raise UsageError("{0} does not have an even measure".format(family.label))
    if n < 1:
        raise DegreeRangeError("index must be >= 1, got {0}".format(n))
    c = recur_coeffs(family, 2 * n - 1)[2]
    ratio = -special_values(family, 2 * n).value("p(0)") / special_values(family, 2 * n - 2).value(
        "p(0)"
    )
    return c, ratio
