# -*- coding: utf-8 -*-
"""
orthoverify.hahn
~~~~~~~~~~~~~~~~

Identities for Hahn polynomials Q_n(x; alpha, beta, N) built on the kernel
polynomial at x0 = N and the kernel value at x1 = N-1:

* the connection formula expressing Q_n(x; alpha, beta+1, N-1) in the
  Q_k(x; alpha, beta, N),
* the first identity, as a finite sum, a pair of 6F5 series at -1 and a
  single 8F7 whose parameters live in Q(sqrt(d)),
* the derivation of its closed form through two 0-balanced 3F2 series,
* the second identity, a weighted sum of products of Hahn polynomials,
  and its Jacobi limit as N grows.

Usage:

    >>> ctx = HahnContext(0, 0, 5)
    >>> first_identity(ctx, 2, "f87_quadext")
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import math
from fractions import Fraction

import numpy as np

from .cdkernel import delta, jacobi_kernel_norm, kernel_poly, kernel_series
from .errors import DegreeRangeError, IdentityMismatch, ParameterRangeError, UsageError
from .exactnum import QuadExt, as_rational, factorial, pochhammer, rational_sqrt
from .families import hahn, jacobi, special_values
from .hyp import (
    HyperTerm,
    TruncatedSeries,
    as_rational_result,
    contiguous_check,
    eval_truncated,
    indefinite_sum_certificate,
    jacobi_kernel_terms,
    pfaff_saalschutz,
)
from .polycore import Poly, generate_ops
from .util import require_equal, stringify

logger = logging.getLogger(__name__)

FORMS = ("finite_sum", "f65_pair", "f87_quadext")

LIMIT_MAX_N = 400


class HahnContext(object):
    """
    Parameters of one Hahn grid point and the three families it uses.

    Params:
        - alpha     > -1
        - beta      > -1, alpha + beta != -1
        - big_n     integer N >= 2

    Raises:
        ParameterRangeError for parameters outside those ranges.
    """

    def __init__(self, alpha, beta, big_n):
        self.alpha = as_rational(alpha)
        self.beta = as_rational(beta)
        self.big_n = int(big_n)
        if self.big_n < 2:
            raise ParameterRangeError("Hahn identities need N >= 2, got {0}".format(big_n))
        # validates alpha, beta and alpha + beta != -1
        self.family = hahn(self.alpha, self.beta, self.big_n)
        self._kernel_family = None
        self._aux_family = None

    @property
    def s(self):
        return self.alpha + self.beta + 1

    @property
    def kernel_family(self):
        """hahn(alpha, beta+1, N-1)."""
        if self._kernel_family is None:
            self._kernel_family = hahn(self.alpha, self.beta + 1, self.big_n - 1)
        return self._kernel_family

    @property
    def aux_family(self):
        """hahn(alpha+1, beta+2, N-2); needs N >= 3."""
        if self._aux_family is None:
            if self.big_n < 3:
                raise ParameterRangeError("hahn(alpha+1, beta+2, N-2) needs N >= 3")
            self._aux_family = hahn(self.alpha + 1, self.beta + 2, self.big_n - 2)
        return self._aux_family

    def q(self, n):
        """Q_n(x; alpha, beta+1, N-1)."""
        return generate_ops(self.kernel_family, n)[n]

    def aux(self, m):
        """Q_m(x; alpha+1, beta+2, N-2), with the constant 1 for m = 0."""
        if m == 0:
            return Poly.one()
        return generate_ops(self.aux_family, m)[m]

    def check_index(self, n, low=0):
        if not low <= n <= self.big_n - 1:
            raise DegreeRangeError(
                "n must lie in [{0}, {1}] for N={2}, got {3}".format(low, self.big_n - 1, self.big_n, n)
            )

    def cn_over_h0(self, n):
        """c_n/h_0 of the kernel polynomial at N: (N+s+1)_n n! / ((s+1)_n (-N+1)_n)."""
        s, big_n = self.s, self.big_n
        return (
            pochhammer(big_n + s + 1, n)
            * factorial(n)
            / (pochhammer(s + 1, n) * pochhammer(Fraction(1 - big_n), n))
        )

    def params(self):
        return {
            "alpha": stringify(self.alpha),
            "beta": stringify(self.beta),
            "bigN": stringify(self.big_n),
        }

    def __repr__(self):
        return "<HahnContext alpha={0} beta={1} N={2}>".format(self.alpha, self.beta, self.big_n)


def hahn_explicit(alpha, beta, big_n, n):
    """
    Q_n(x; alpha, beta, N) from its terminating 3F2(-n, n+s, -x; alpha+1, -N; 1),
    s = alpha+beta+1, as a polynomial in x.
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    s = alpha + beta + 1
    result = Poly.zero()
    falling = Poly.one()
    coefficient = Fraction(1)
    for k in range(n + 1):
        result = result + falling * coefficient
        if k == n:
            break
        coefficient = coefficient * (k - n) * (n + s + k) / ((alpha + 1 + k) * (k - big_n) * (k + 1))
        falling = falling * Poly([k, -1])
    return result


def lambda_apply(ctx, f):
    """
    (Lambda f)(x) = (x+alpha+1)(x-N)(Delta f)(x) - x(x-beta-N-1)(Delta f)(x-1).

    The two quadratic leading terms cancel, so Lambda never raises degree.
    """
    df = delta(f)
    x = Poly.x()
    first = (x + ctx.alpha + 1) * (x - ctx.big_n) * df
    second = x * (x - ctx.beta - ctx.big_n - 1) * df.shift(-1)
    return first - second


def lambda_eigen_check(ctx, n):
    """
    Lambda q_n = n(n+s+1) q_n + n(n+s+1)/((alpha+1)(N-1)) (x+alpha+1) Q_{n-1}(x; alpha+1, beta+2, N-2)
    for q_n = Q_n(x; alpha, beta+1, N-1).

    Returns:
        Lambda q_n.
    """
    ctx.check_index(n)
    q = ctx.q(n)
    lhs = lambda_apply(ctx, q)
    if n == 0:
        return require_equal("hahn.lambda", lhs, Poly.zero())
    eigen = n * (n + ctx.s + 1)
    rhs = q * eigen + (Poly.x() + ctx.alpha + 1) * ctx.aux(n - 1) * (
        eigen / ((ctx.alpha + 1) * (ctx.big_n - 1))
    )
    return require_equal("hahn.lambda", lhs, rhs)


def hahn_connection_check(ctx, n):
    """
    Q_n(x; alpha, beta+1, N-1) = (c_n/h_0) sum_k Q_k(N) Q_k(x) / (h_k/h_0),
    with Q_k(N) and c_n/h_0 from their closed forms, compared coefficient-wise
    with the recurrence-built and the explicit 3F2 polynomial.

    Returns:
        The polynomial.
    """
    ctx.check_index(n)
    family = ctx.family
    rhs = Poly.zero()
    for k, p in enumerate(generate_ops(family, n)):
        rhs = rhs + p * (special_values(family, k).value("p(N)") / family.norm_ratio(k))
    rhs = rhs * ctx.cn_over_h0(n)
    lhs = ctx.q(n)
    require_equal("hahn.connection", lhs, rhs, link="kernel sum")
    explicit = hahn_explicit(ctx.alpha, ctx.beta + 1, ctx.big_n - 1, n)
    require_equal("hahn.connection", lhs, explicit, link="explicit")
    return lhs


def first_identity_rhs(ctx, n):
    """q_n(N-1) = (-1)^n (beta+2)_n / (alpha+1)_n."""
    return (-1) ** n * pochhammer(ctx.beta + 2, n) / pochhammer(ctx.alpha + 1, n)


def well_poised_rhs(ctx, n):
    """
    Value of the 6F5 pair and of the 8F7:
    (beta+2)_n (s+1)_n / ((alpha+1)_n n!) * (-1)^n (-N+1)_n / (N+s+1)_n.
    """
    s, big_n = ctx.s, ctx.big_n
    return (
        pochhammer(ctx.beta + 2, n)
        * pochhammer(s + 1, n)
        / (pochhammer(ctx.alpha + 1, n) * factorial(n))
        * (-1) ** n
        * pochhammer(Fraction(1 - big_n), n)
        / pochhammer(big_n + s + 1, n)
    )


def _finite_sum(ctx, n):
    family, s, big_n = ctx.family, ctx.s, ctx.big_n
    total = Fraction(0)
    for k in range(n + 1):
        coefficient = (
            (2 * k + s)
            / (k + s)
            * pochhammer(s + 1, k)
            / pochhammer(big_n + s + 1, k)
            * pochhammer(Fraction(-big_n), k)
            / factorial(k)
        )
        total += coefficient * special_values(family, k).value("p(N-1)")
    return total


def f65_series(ctx, n):
    """
    The two very-well-poised 6F5 series at -1.

    Returns:
        (first, second, coefficient) with value first - coefficient * second.
    """
    a, b, s, big_n = ctx.alpha, ctx.beta, ctx.s, ctx.big_n
    first = TruncatedSeries(
        [s, 1 + s / 2, b + 1, -big_n, n + s + 1, -n],
        [s / 2, a + 1, big_n + s + 1, -n, n + s + 1],
        -1,
        n,
    )
    second = TruncatedSeries(
        [s + 2, 2 + s / 2, b + 2, 1 - big_n, n + s + 2, 1 - n],
        [(s + 2) / 2, a + 2, big_n + s + 2, 1 - n, n + s + 2],
        -1,
        n - 1,
    )
    coefficient = (s + 1) * (s + 2) / ((big_n + s + 1) * (a + 1))
    return first, second, coefficient


def quadext_parameter(ctx):
    """
    c = s/2 + sqrt(d), d = (beta+1)N + s^2/4, the root of c(s-c) = -(beta+1)N.

    Returns:
        A Fraction when d is a rational square, a QuadExt otherwise.
    """
    s = ctx.s
    d = (ctx.beta + 1) * ctx.big_n + s * s / 4
    root = rational_sqrt(d)
    if root is not None:
        return s / 2 + root
    return QuadExt(s / 2, 1, d)


def f87_series(ctx, n):
    """The single very-well-poised 8F7 at -1, with c from ``quadext_parameter``."""
    a, b, s, big_n = ctx.alpha, ctx.beta, ctx.s, ctx.big_n
    c = quadext_parameter(ctx)
    return TruncatedSeries(
        [s, 1 + s / 2, c + 1, s + 1 - c, b + 1, -big_n, n + s + 1, -n],
        [s / 2, c, s - c, a + 1, big_n + s + 1, -n, n + s + 1],
        -1,
        n,
    )


def first_identity_series(ctx, n, form):
    """
    sum_k p_k(N)p_k(N-1)/(h_k/h_0), the kernel sum without c_n/h_0, by ``form``.

    The 8F7 is summed in Q(sqrt(d)); its irrational part must vanish.
    """
    ctx.check_index(n)
    if form == "finite_sum":
        return _finite_sum(ctx, n)
    if form == "f65_pair":
        first, second, coefficient = f65_series(ctx, n)
        return eval_truncated(first) - coefficient * eval_truncated(second)
    if form == "f87_quadext":
        return as_rational_result("hahn.first_identity.f87_quadext", eval_truncated(f87_series(ctx, n)))
    raise UsageError("unknown form {0!r}; known: {1}".format(form, ", ".join(FORMS)))


def first_identity(ctx, n, form="finite_sum"):
    """
    q_n(N-1) computed as (c_n/h_0) times the kernel sum, through ``form``.

    Each form is checked against its own right-hand side before the value
    is returned, so all three return (-1)^n (beta+2)_n / (alpha+1)_n.

    Raises:
        DegreeRangeError for n outside [0, N-1].
        UsageError for an unknown form.
        IdentityMismatch when the identity fails.
    """
    series = first_identity_series(ctx, n, form)
    identity = "hahn.first_identity.{0}".format(form)
    if form != "finite_sum":
        require_equal(identity, series, well_poised_rhs(ctx, n), link="series")
    value = ctx.cn_over_h0(n) * series
    return require_equal(identity, value, first_identity_rhs(ctx, n))


def derivation_chain_check(ctx, n):
    """
    The 6F5 pair, the two 0-balanced 3F2 series, the single 3F2 and the
    Pfaff-Saalschutz product all take the same value.

    Returns:
        A dict link -> value.

    Raises:
        IdentityMismatch naming the first broken link.
    """
    ctx.check_index(n)
    a, s, big_n = ctx.alpha, ctx.s, ctx.big_n
    prefactor = (-1) ** n * pochhammer(s + 1, n) / factorial(n)
    pair = first_identity_series(ctx, n, "f65_pair")

    upper = eval_truncated(TruncatedSeries([big_n + a + 1, n + s + 1, -n], [big_n + s + 1, a + 1], 1, n))
    if n:
        lower = eval_truncated(
            TruncatedSeries([big_n + a + 1, n + s + 2, 1 - n], [big_n + s + 2, a + 2], 1, n - 1)
        )
        weight = n * (n + s + 1) / ((big_n + s + 1) * (a + 1))
    else:
        lower, weight = Fraction(0), Fraction(0)
    balanced_pair = prefactor * (upper + weight * lower)

    single = prefactor * eval_truncated(
        TruncatedSeries([big_n + a, n + s + 1, -n], [big_n + s + 1, a + 1], 1, n)
    )
    saalschutz = prefactor * pfaff_saalschutz(big_n + a, n + s + 1, a + 1, n)

    _, shifted = contiguous_check([-n, n + s + 1, big_n + a + 1], [big_n + s + 1, a + 1], 1, n)
    require_equal("hahn.derivation_chain", prefactor * (upper - shifted), single, link="contiguous")

    values = {
        "well_poised_pair": pair,
        "balanced_pair": balanced_pair,
        "single_balanced": single,
        "saalschutz": saalschutz,
        "closed_form": well_poised_rhs(ctx, n),
    }
    order = ["well_poised_pair", "balanced_pair", "single_balanced", "saalschutz", "closed_form"]
    for left, right in zip(order, order[1:]):
        require_equal(
            "hahn.derivation_chain",
            values[left],
            values[right],
            link="{0}->{1}".format(left, right),
        )
    return values


def hahn_kernel_terms(ctx):
    """
    Summand and partial sum of the kernel sum at (N, N-1):

        c_k = (s)_k (1+s/2)_k (-N)_k (beta+1)_k / ((s/2)_k (N+s+1)_k (alpha+1)_k k!)
              * (-1)^k (1 - k(k+s)/((beta+1)N))
        s_n = (-1)^n (beta+2)_n (s+1)_n (-N+1)_n / ((alpha+1)_n (N+s+1)_n n!)
    """
    a, b, s, big_n = ctx.alpha, ctx.beta, ctx.s, ctx.big_n
    scale = (b + 1) * big_n
    factor = Poly([1, -s / scale, -1 / scale])
    term = HyperTerm([s, 1 + s / 2, -big_n, b + 1], [s / 2, big_n + s + 1, a + 1, 1], -1, factor=factor)
    closed = HyperTerm([b + 2, s + 1, 1 - big_n], [a + 1, big_n + s + 1, 1], -1)
    return term, closed


def hahn_certificate(ctx):
    """Certify the kernel sum's closed form for every n <= N."""
    term, closed = hahn_kernel_terms(ctx)
    return indefinite_sum_certificate(term, closed, ctx.big_n, identity="hahn.certificate")


class RnPoly(object):
    """
    r_n(x) = c_n K_n(N-1, x), in units where the kernel carries h_0.

    Params:
        - n     degree
        - r     the polynomial
    """

    def __init__(self, n, r):
        self.n = n
        self.r = r

    def __repr__(self):
        return "<RnPoly n={0} r={1}>".format(self.n, self.r)


def _second_coefficients(ctx, n):
    a, b, s, big_n = ctx.alpha, ctx.beta, ctx.s, ctx.big_n
    eigen = n * (n + s + 1)
    c1 = 1 - eigen / ((b + 1) * big_n)
    c2 = eigen / (big_n * (big_n - 1) * (a + 1) * (b + 1))
    return c1, c2


def build_rn(ctx, n):
    """
    r_n three ways: the two-term combination of q_n and (x+alpha+1)Q_{n-1},
    q_n - Lambda q_n/((beta+1)N), and (c_n/h_0) h_0 K_n(N-1, .).

    Raises:
        IdentityMismatch when the constructions disagree.
    """
    ctx.check_index(n)
    c1, c2 = _second_coefficients(ctx, n)
    q = ctx.q(n)
    if n:
        display = q * c1 - (Poly.x() + ctx.alpha + 1) * ctx.aux(n - 1) * c2
    else:
        display = q
    from_lambda = q - lambda_apply(ctx, q) / ((ctx.beta + 1) * ctx.big_n)
    from_kernel = kernel_series(ctx.family, ctx.big_n - 1, n) * ctx.cn_over_h0(n)
    require_equal("hahn.rn", display, from_lambda, link="lambda")
    require_equal("hahn.rn", display, from_kernel, link="kernel")
    return RnPoly(n, display)


def second_identity_rhs(ctx, n):
    """h_0 (c_n/h_0) q_n(N-1)."""
    return ctx.family.total_mass() * ctx.cn_over_h0(n) * first_identity_rhs(ctx, n)


def second_identity_check(ctx, n):
    """
    c1 sum_x q_n(x)^2 w_x - c2 sum_x q_n(x) Q_{n-1}(x) (x+alpha+1) w_x
    = h_0 (c_n/h_0) q_n(N-1), with Hahn weights w_x of hahn(alpha, beta, N).

    Also checks q_n(N-1) against its closed form and the left side against
    sum_x r_n(x) q_n(x) w_x.

    Returns:
        (lhs, rhs)
    """
    ctx.check_index(n)
    q = ctx.q(n)
    require_equal(
        "hahn.second_identity", q(ctx.big_n - 1), first_identity_rhs(ctx, n), link="q_n(N-1)"
    )
    c1, c2 = _second_coefficients(ctx, n)
    aux = (Poly.x() + ctx.alpha + 1) * ctx.aux(n - 1) if n else Poly.zero()
    squares = Fraction(0)
    cross = Fraction(0)
    via_rn = Fraction(0)
    r = build_rn(ctx, n).r
    for x, w in zip(ctx.family.support(), ctx.family.weights()):
        qx = q(x)
        squares += qx * qx * w
        if n:
            cross += qx * aux(x) * w
        via_rn += r(x) * qx * w
    lhs = c1 * squares - c2 * cross
    rhs = second_identity_rhs(ctx, n)
    require_equal("hahn.second_identity", lhs, via_rn, link="r_n")
    require_equal("hahn.second_identity", lhs, rhs)
    return lhs, rhs


def jacobi_limit_value(alpha, beta, n):
    """
    Exact h_0-free target: (alpha+1)_n (beta+2)_n / ((alpha+beta+2)_n n!),
    computed as <q_n, q_n>/h_0 of the Jacobi kernel polynomial at -1 and
    compared with the kernel norm at 1 after swapping alpha and beta.
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    closed = (
        pochhammer(alpha + 1, n)
        * pochhammer(beta + 2, n)
        / (pochhammer(alpha + beta + 2, n) * factorial(n))
    )
    kp = kernel_poly(jacobi(alpha, beta), -1, n)
    require_equal("hahn.limit_rewrite", kp.cn_over_h0 * kp.q(-1), closed, link="kernel at -1")
    require_equal("hahn.limit_rewrite", jacobi_kernel_norm(beta, alpha, n), closed, link="swap")
    return closed


def _hyp3f2_float(n, upper, lower1, lower2, x):
    # 3F2(-n, upper, -x; lower1, lower2; 1) summed elementwise over x
    total = np.ones_like(x)
    term = np.ones_like(x)
    for k in range(n):
        term = term * (k - n) * (upper + k) * (k - x) / ((lower1 + k) * (lower2 + k) * (k + 1))
        total = total + term
    return total


def _limit_lhs(alpha, beta, n, big_n):
    a, b = float(alpha), float(beta)
    s = a + b + 1
    x = np.arange(big_n + 1, dtype=float)
    log_w0 = math.lgamma(b + 1 + big_n) - math.lgamma(b + 1) - math.lgamma(big_n + 1)
    ratios = (a + 1 + x[:-1]) / (x[:-1] + 1) * (big_n - x[:-1]) / (b + big_n - x[:-1])
    w = math.exp(log_w0) * np.concatenate(([1.0], np.cumprod(ratios)))
    q = _hyp3f2_float(n, n + s + 1, a + 1, 1 - big_n, x)
    eigen = n * (n + s + 1)
    c1 = 1 - eigen / ((b + 1) * big_n)
    lhs = c1 * np.sum(q * q * w)
    if n:
        aux = _hyp3f2_float(n - 1, n + s + 2, a + 2, 2 - big_n, x)
        c2 = eigen / (big_n * (big_n - 1) * (a + 1) * (b + 1))
        lhs -= c2 * np.sum(q * aux * (x + a + 1) * w)
    return float(lhs)


class LimitPoint(object):
    """One N of the Jacobi limit: rescaled left side and its relative error."""

    __slots__ = ("big_n", "value", "error")

    def __init__(self, big_n, value, error):
        self.big_n = big_n
        self.value = value
        self.error = error

    def __repr__(self):
        return "<LimitPoint N={0} value={1!r} error={2!r}>".format(self.big_n, self.value, self.error)


def limit_tolerance(n, big_n):
    return 10.0 * (n + 1) ** 2 / big_n


def jacobi_limit_check(alpha, beta, n, big_ns):
    """
    N^{-(alpha+beta+1)} times the left side of the second identity, in
    floating point, against its limit (n!/(alpha+1)_n)^2 E / Gamma(alpha+beta+2),
    E = ``jacobi_limit_value``.

    Returns:
        (limit, [LimitPoint, ...])

    Raises:
        ParameterRangeError for an empty or unsorted N list, N < 2n+2 or N > 400.
        IdentityMismatch when the largest N misses the tolerance
        10 (n+1)^2 / N or the error does not shrink.
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    big_ns = [int(v) for v in big_ns]
    if not big_ns or big_ns != sorted(set(big_ns)):
        raise ParameterRangeError("N list must be non-empty and strictly increasing: {0}".format(big_ns))
    if big_ns[0] < 2 * n + 2 or big_ns[-1] > LIMIT_MAX_N:
        raise ParameterRangeError(
            "N must lie in [{0}, {1}], got {2}".format(2 * n + 2, LIMIT_MAX_N, big_ns)
        )
    hahn(alpha, beta, big_ns[0])
    exact = (factorial(n) / pochhammer(alpha + 1, n)) ** 2 * jacobi_limit_value(alpha, beta, n)
    limit = float(exact) / math.gamma(float(alpha + beta + 2))
    exponent = float(alpha + beta + 1)
    points = []
    for big_n in big_ns:
        value = _limit_lhs(alpha, beta, n, big_n) / big_n ** exponent
        points.append(LimitPoint(big_n, value, abs(value - limit) / abs(limit)))
        logger.debug("limit alpha=%s beta=%s n=%d N=%d error=%.3e", alpha, beta, n, big_n, points[-1].error)
    last = points[-1]
    tolerance = limit_tolerance(n, last.big_n)
    if last.error > tolerance:
        raise IdentityMismatch("hahn.jacobi_limit", last.error, tolerance, link="tolerance")
    if len(points) > 1 and not (last.error < points[0].error or last.error <= 1e-12):
        raise IdentityMismatch("hahn.jacobi_limit", last.error, points[0].error, link="decay")
    return limit, points


def limit_coherence(alpha, beta, n, big_n=10000):
    """
    At large N the well-poised pair approaches the Jacobi kernel sum with
    alpha and beta interchanged.

    Returns:
        The relative difference as a float.

    Raises:
        IdentityMismatch above 1e-2.
    """
    ctx = HahnContext(alpha, beta, big_n)
    pair = first_identity_series(ctx, n, "f65_pair")
    _, closed = jacobi_kernel_terms(ctx.beta, ctx.alpha)
    target = closed.value(n)
    difference = float(abs(pair - target) / abs(target))
    if difference > 1e-2:
        raise IdentityMismatch("hahn.limit_coherence", pair, target)
    return difference
