# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import unittest
from fractions import Fraction

import pytest

from orthoverify.cdkernel import cd_discrete, kernel_poly
from orthoverify.config import SuiteConfig
from orthoverify.errors import DegreeRangeError, IdentityMismatch, ParameterRangeError, UsageError
from orthoverify.exactnum import QuadExt
from orthoverify.hahn import (
    FORMS,
    HahnContext,
    build_rn,
    derivation_chain_check,
    first_identity,
    first_identity_rhs,
    hahn_certificate,
    hahn_connection_check,
    hahn_explicit,
    jacobi_limit_check,
    jacobi_limit_value,
    lambda_apply,
    lambda_eigen_check,
    limit_coherence,
    limit_tolerance,
    quadext_parameter,
    second_identity_check,
    well_poised_rhs,
)
from orthoverify.polycore import Poly
from orthoverify.suites import hahn_contexts

F = Fraction


class TestHahnContext(unittest.TestCase):
    def test_ranges(self):
        self.assertRaises(ParameterRangeError, HahnContext, 0, 0, 1)
        self.assertRaises(ParameterRangeError, HahnContext, F(-1, 2), F(-1, 2), 4)
        self.assertRaises(ParameterRangeError, lambda: HahnContext(0, 0, 2).aux_family)
        self.assertRaises(DegreeRangeError, HahnContext(0, 0, 2).check_index, 2)

    def test_families(self):
        ctx = HahnContext(F(1, 2), 1, 5)
        self.assertEqual(ctx.kernel_family.params()["beta"], "2")
        self.assertEqual(ctx.aux_family.big_n, 3)
        self.assertEqual(ctx.params(), {"alpha": "1/2", "beta": "1", "bigN": "5"})

    def test_cn_over_h0(self):
        ctx = HahnContext(0, 0, 2)
        self.assertEqual(ctx.cn_over_h0(1), -2)
        for n in range(ctx.big_n):
            self.assertEqual(ctx.cn_over_h0(n), kernel_poly(ctx.family, ctx.big_n, n).cn_over_h0)


class TestPolynomials(unittest.TestCase):
    def test_explicit(self):
        self.assertEqual(hahn_explicit(0, 0, 2, 1), Poly([1, -1]))

    def test_lambda(self):
        ctx = HahnContext(0, 0, 3)
        self.assertEqual(lambda_apply(ctx, Poly.x()), Poly([-3, 2]))
        for n in range(ctx.big_n):
            lambda_eigen_check(ctx, n)
        self.assertEqual(lambda_eigen_check(ctx, 0), Poly.zero())

    def test_lambda_keeps_degree(self):
        ctx = HahnContext(F(1, 2), F(7, 3), 8)
        for n in range(ctx.big_n):
            f = Poly.monomial(n)
            self.assertLessEqual(lambda_apply(ctx, f).degree, n)

    def test_connection(self):
        ctx = HahnContext(0, 0, 3)
        self.assertEqual(hahn_connection_check(ctx, 2), hahn_explicit(0, 1, 2, 2))


class TestFirstIdentity(unittest.TestCase):
    def test_small_case(self):
        ctx = HahnContext(0, 0, 2)
        for form in FORMS:
            self.assertEqual(first_identity(ctx, 1, form), -2)

    def test_kernel_value(self):
        ctx = HahnContext(0, 0, 5)
        self.assertEqual(first_identity_rhs(ctx, 2), 3)
        self.assertEqual(ctx.q(2)(4), 3)
        self.assertEqual(
            ctx.cn_over_h0(2) * cd_discrete(ctx.family, 2, ctx.big_n), first_identity_rhs(ctx, 2)
        )

    def test_all_forms_agree(self):
        for alpha, beta, big_n in ((F(1, 2), F(1, 3), 5), (F(-1, 3), 1, 4), (0, F(7, 3), 6)):
            ctx = HahnContext(alpha, beta, big_n)
            for n in range(big_n):
                values = set(first_identity(ctx, n, form) for form in FORMS)
                self.assertEqual(values, {first_identity_rhs(ctx, n)})

    def test_unknown_form(self):
        self.assertRaises(UsageError, first_identity, HahnContext(0, 0, 2), 1, "f43")
        self.assertRaises(DegreeRangeError, first_identity, HahnContext(0, 0, 2), 2)

    def test_quadext_parameter(self):
        self.assertEqual(quadext_parameter(HahnContext(0, 0, 2)), 2)
        c = quadext_parameter(HahnContext(0, 0, 3))
        self.assertIsInstance(c, QuadExt)
        self.assertEqual(c.d, F(13, 4))
        self.assertEqual(c * (1 - c), -3)

    def test_derivation_chain(self):
        ctx = HahnContext(0, 0, 2)
        values = derivation_chain_check(ctx, 1)
        self.assertEqual(set(values.values()), {1})
        self.assertEqual(well_poised_rhs(ctx, 1), 1)
        ctx = HahnContext(F(1, 2), F(7, 3), 6)
        for n in range(ctx.big_n):
            values = derivation_chain_check(ctx, n)
            self.assertEqual(values["well_poised_pair"], values["closed_form"])

    def test_certificate(self):
        self.assertEqual(hahn_certificate(HahnContext(F(1, 2), F(1, 3), 5)), 5)


class TestSecondIdentity(unittest.TestCase):
    def test_small_case(self):
        self.assertEqual(second_identity_check(HahnContext(0, 0, 2), 1), (12, 12))

    def test_rn(self):
        ctx = HahnContext(F(1, 2), 1, 5)
        for n in range(ctx.big_n):
            lhs, rhs = second_identity_check(ctx, n)
            self.assertEqual(lhs, rhs)
        self.assertEqual(build_rn(ctx, 0).r, ctx.q(0))


class TestHahnGrid(unittest.TestCase):
    """Lambda, r_n and the second identity up to n = N-1 on larger contexts."""

    def _check_context(self, ctx):
        for n in range(ctx.big_n):
            with self.subTest(ctx=ctx, n=n):
                lambda_eigen_check(ctx, n)
                self.assertLessEqual(build_rn(ctx, n).r.degree, n)
                lhs, rhs = second_identity_check(ctx, n)
                self.assertEqual(lhs, rhs)

    def test_nonzero_parameters(self):
        for alpha, beta, big_n in ((F(1, 2), F(7, 3), 8), (F(-1, 3), F(1, 2), 12), (F(7, 3), F(-1, 2), 8)):
            self._check_context(HahnContext(alpha, beta, big_n))

    def test_top_degree(self):
        ctx = HahnContext(1, F(-1, 3), 12)
        n = ctx.big_n - 1
        self.assertEqual(lambda_apply(ctx, ctx.q(n)).degree, n)
        lhs, rhs = second_identity_check(ctx, n)
        self.assertEqual(lhs, rhs)

    @pytest.mark.slow
    def test_default_grid(self):
        for ctx in hahn_contexts(SuiteConfig()):
            self._check_context(ctx)


class TestJacobiLimit(unittest.TestCase):
    def test_limit_value(self):
        self.assertEqual(jacobi_limit_value(0, 0, 1), 1)
        self.assertEqual(limit_tolerance(0, 400), 0.025)

    def test_degree_zero(self):
        limit, points = jacobi_limit_check(0, 0, 0, [50, 400])
        self.assertEqual(limit, 1.0)
        self.assertAlmostEqual(points[-1].error, 1.0 / 400, places=9)

    @pytest.mark.slow
    def test_error_shrinks(self):
        limit, points = jacobi_limit_check(F(1, 2), F(1, 3), 4, [50, 100, 200, 400])
        errors = [p.error for p in points]
        self.assertLess(errors[-1], errors[0])
        self.assertLessEqual(errors[-1], limit_tolerance(4, 400))

    def test_bad_grids(self):
        self.assertRaises(ParameterRangeError, jacobi_limit_check, 0, 0, 1, [400, 50])
        self.assertRaises(ParameterRangeError, jacobi_limit_check, 0, 0, 1, [500])
        self.assertRaises(ParameterRangeError, jacobi_limit_check, 0, 0, 4, [8, 50])
        self.assertRaises(ParameterRangeError, jacobi_limit_check, 0, 0, 1, [])

    def test_coherence(self):
        self.assertLess(limit_coherence(0, 0, 1), 1e-2)

    def test_coherence_fails_at_small_n(self):
        self.assertRaises(IdentityMismatch, limit_coherence, 0, 0, 1, 3)
