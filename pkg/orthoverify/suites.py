# -*- coding: utf-8 -*-
"""
orthoverify.suites
~~~~~~~~~~~~~~~~~~

Turns a SuiteConfig into the list of checks each suite runs.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
from fractions import Fraction

from .check_factory import create_check
from .checks.property import property_checks
from .errors import ParameterRangeError
from .families import defined_labels, make_family
from .hahn import FORMS, HahnContext
from .symmetric import METHODS

logger = logging.getLogger(__name__)

EVEN_KINDS = ("legendre", "gegenbauer", "chebyshev_t", "chebyshev_u", "hermite")

LIMIT_PAIRS = (
    (Fraction(0), Fraction(0)),
    (Fraction(1), Fraction(0)),
    (Fraction(1, 2), Fraction(1, 3)),
)

SAALSCHUTZ_PARAMS = (
    (Fraction(1, 2), Fraction(1, 3), Fraction(2)),
    (Fraction(2, 3), Fraction(1, 4), Fraction(5, 2)),
    (Fraction(1), Fraction(1, 2), Fraction(7, 3)),
)

CHU_VANDERMONDE_PARAMS = (
    (Fraction(1, 2), Fraction(3, 2)),
    (Fraction(-1, 3), Fraction(2)),
    (Fraction(2), Fraction(7, 3)),
    (Fraction(5), Fraction(1, 2)),
)

CONTIGUOUS_PARAMS = (
    ([Fraction(1, 2), 2, Fraction(-3, 2)], [Fraction(5, 3), Fraction(7, 2)], 1, 6),
    ([-4, Fraction(1, 3)], [Fraction(3, 2)], -1, 5),
    ([2], [], Fraction(1, 2), 7),
)

APPELL_PARAMS = (
    (Fraction(1, 2), -3, Fraction(5, 2), Fraction(4, 3), 1, 3),
    (2, Fraction(1, 3), Fraction(7, 2), 2, Fraction(-1, 2), 6),
)


def grid_families(config, kinds=None):
    """
    Every family the config's kinds and grid describe. Hahn families skip
    alpha + beta = -1.
    """
    families = []
    for kind in kinds or config.families:
        if kind in ("legendre", "chebyshev_t", "chebyshev_u", "hermite"):
            families.append(make_family(kind))
        elif kind in ("gegenbauer", "laguerre"):
            families.extend(make_family(kind, {"alpha": a}) for a in config.alphas())
        elif kind == "jacobi":
            families.extend(
                make_family(kind, {"alpha": a, "beta": b}) for a, b in config.pairs()
            )
        else:
            families.extend(
                make_family(kind, {"alpha": a, "beta": b, "bigN": big_n})
                for a, b in config.pairs(balanced=False)
                for big_n in config.bigN
            )
    return families


def hahn_contexts(config):
    contexts = []
    for a, b in config.pairs(balanced=False):
        for big_n in config.bigN:
            contexts.append(HahnContext(a, b, big_n))
    return contexts


def _degree_cap(family, config):
    if family.is_discrete:
        return min(config.nmax, family.big_n)
    return config.nmax


def core_checks(config):
    checks = []
    for family in grid_families(config):
        cap = _degree_cap(family, config)
        checks.append(create_check("orthogonality", family, cap))
        for n in range(cap + 1):
            checks.append(create_check("lead", family, n))
            for label in defined_labels(family):
                checks.append(create_check("special_value", family, n, label))
        top = min(cap, family.big_n - 1) if family.is_discrete else cap
        for n in range(top + 1):
            checks.append(create_check("recurrence", family, n))
        if family.is_even:
            for n in range(1, cap // 2 + 1):
                checks.append(create_check("even_recurrence", family, n))
        if family.is_discrete:
            checks.append(create_check("hahn_weights", family))
    return checks


def _symmetric_cap(family, config):
    if family.kind == "legendre":
        return config.legendre_nmax
    if family.kind == "hermite":
        return config.hermite_nmax
    return config.nmax


def symmetric_checks(config):
    checks = []
    kinds = [k for k in config.families if k in EVEN_KINDS]
    for family in grid_families(config, kinds):
        cap = _symmetric_cap(family, config)
        for method in METHODS + ("closed_form",):
            top = min(cap, config.direct_nmax) if method == "direct" else cap
            for n in range(top + 1):
                checks.append(create_check("integral", family, n, method))
        for n in range(config.nmax + 1):
            if family.kind in ("chebyshev_t", "chebyshev_u"):
                checks.append(create_check("chebyshev", family, n))
            checks.append(create_check("cd_proportionality", family, n))
            checks.append(create_check("projection", family, n))
            checks.append(create_check("confluent_origin", family, n))
            if n:
                checks.append(create_check("recurrence_form", family, n))
            if family.base == "jacobi":
                checks.append(create_check("quadratic_transformation", family, n))
    return checks


def jacobi_checks(config):
    checks = []
    for family in grid_families(config, ["jacobi"]):
        for n in range(config.nmax + 1):
            checks.append(create_check("kernel_norm", family, n))
            checks.append(create_check("kernel_diagonal", family, n))
            checks.append(create_check("kernel_sum", family, n))
            checks.append(create_check("summand", family, n))
            for x0 in (1, -1):
                checks.append(create_check("kernel_poly", family, n, x0))
        for n in range(config.sum_nmax + 1):
            checks.append(create_check("well_poised", family, n))
        checks.append(create_check("kernel_certificate", family, config.sum_nmax))
    return checks


def laguerre_checks(config):
    checks = []
    for family in grid_families(config, ["laguerre"]):
        for n in range(config.laguerre_nmax + 1):
            checks.append(create_check("kernel_norm", family, n))
            checks.append(create_check("kernel_diagonal", family, n))
            checks.append(create_check("kernel_sum", family, n))
            checks.append(create_check("summand", family, n))
        for n in range(config.direct_nmax + 1):
            checks.append(create_check("laguerre_f2_chain", family, n))
        checks.append(create_check("kernel_certificate", family, config.sum_nmax))
    return checks


def hahn_checks(config):
    checks = []
    for ctx in hahn_contexts(config):
        checks.append(create_check("hahn_certificate", ctx))
        for n in range(ctx.big_n):
            checks.append(create_check("connection", ctx, n))
            for form in FORMS:
                checks.append(create_check("first_identity", ctx, n, form))
            checks.append(create_check("kernel_difference", ctx, n))
            checks.append(create_check("derivation_chain", ctx, n))
            checks.append(create_check("lambda", ctx, n))
            checks.append(create_check("rn", ctx, n))
            checks.append(create_check("second_identity", ctx, n))
    return checks


def hyp_checks(config):
    checks = []
    for n in range(8):
        for b, c in CHU_VANDERMONDE_PARAMS:
            checks.append(create_check("chu_vandermonde", n, b, c))
        for a, b, c in SAALSCHUTZ_PARAMS:
            checks.append(create_check("pfaff_saalschutz", a, b, c, n))
    for num, den, z, trunc in CONTIGUOUS_PARAMS:
        checks.append(create_check("contiguous", num, den, z, trunc))
    for a, b2, c1, c2, y, trunc2 in APPELL_PARAMS:
        for n in range(6):
            checks.append(create_check("appell_f2", a, n, b2, c1, c2, y, trunc2))
    return checks


def limit_checks(config):
    checks = []
    for alpha, beta in LIMIT_PAIRS:
        for n in range(config.limit_n + 1):
            if min(config.limit_bigN) < 2 * n + 2:
                raise ParameterRangeError(
                    "limit_bigN must start at {0} or more for n = {1}".format(2 * n + 2, n)
                )
            checks.append(create_check("jacobi_limit", alpha, beta, n, config.limit_bigN))
            checks.append(create_check("limit_coherence", alpha, beta, n))
    for alpha, beta in config.pairs():
        for n in range(config.limit_n + 1):
            checks.append(create_check("limit_rewrite", alpha, beta, n))
    return checks


def properties_checks(config):
    return property_checks(config.seed, config.instances)


SUITE_BUILDERS = {
    "core": core_checks,
    "symmetric": symmetric_checks,
    "jacobi": jacobi_checks,
    "laguerre": laguerre_checks,
    "hahn": hahn_checks,
    "hyp": hyp_checks,
    "limits": limit_checks,
    "properties": properties_checks,
}


def build_checks(config):
    """
    Every check of every selected suite, in suite order.

    Raises:
        ParameterRangeError when a grid value is outside a suite's domain.
    """
    checks = []
    for suite in config.suites:
        built = SUITE_BUILDERS[suite](config)
        logger.info("suite %s: %d checks", suite, len(built))
        checks.extend(built)
    return checks
