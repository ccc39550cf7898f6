# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import unittest
from fractions import Fraction

import numpy as np

from orthoverify.cdkernel import cd_kernel
from orthoverify.errors import IdentityMismatch, VanishingDenominatorError
from orthoverify.exactnum import QuadExt, factorial, pochhammer
from orthoverify.families import make_family
from orthoverify.hyp import (
    HyperTerm,
    TruncatedSeries,
    appell_f2_terminating,
    as_rational_result,
    chu_vandermonde,
    contiguous_check,
    eval_truncated,
    indefinite_sum_certificate,
    jacobi_kernel_series,
    jacobi_kernel_terms,
    laguerre_f2_chain,
    laguerre_kernel_terms,
    pfaff_saalschutz,
    reduce_params,
)

F = Fraction


class TestTruncatedSeries(unittest.TestCase):
    def test_cancellation(self):
        self.assertEqual(reduce_params([-2, 5], [5]), ([-2], [], []))
        self.assertEqual(eval_truncated(TruncatedSeries([-2, 5], [5], 1, 2)), 0)

    def test_contiguous_pair(self):
        self.assertEqual(reduce_params([3], [2]), ([], [], [2]))
        self.assertEqual(eval_truncated(TruncatedSeries([3], [2], 1, 2)), F(7, 2))

    def test_explicit_truncation(self):
        # -n in both rows does not end the sum early
        series = TruncatedSeries([-2, 1], [-2], 1, 3)
        self.assertEqual(eval_truncated(series), 4)
        self.assertEqual(eval_truncated(TruncatedSeries([1], [], 1, -1)), 0)

    def test_vanishing_denominator(self):
        self.assertRaises(VanishingDenominatorError, eval_truncated, TruncatedSeries([1], [-1, 1], 1, 3))
        self.assertRaises(VanishingDenominatorError, eval_truncated, TruncatedSeries([1], [0], 1, 2))

    def test_quadext_parameters(self):
        series = TruncatedSeries([QuadExt.sqrt(2)], [], 1, 1)
        self.assertEqual(eval_truncated(series), QuadExt(1, 1, 2))

    def test_rational_result(self):
        self.assertEqual(as_rational_result("x", QuadExt(3, 0, 2)), 3)
        self.assertRaises(IdentityMismatch, as_rational_result, "x", QuadExt(1, 1, 2))


class TestClassicalSums(unittest.TestCase):
    def test_chu_vandermonde(self):
        self.assertEqual(chu_vandermonde(2, 1, 3), F(1, 2))
        self.assertRaises(VanishingDenominatorError, chu_vandermonde, 3, 1, -1)

    def test_pfaff_saalschutz(self):
        self.assertEqual(pfaff_saalschutz(F(1, 2), F(1, 3), 2, 2), F(100, 91))

    def test_contiguous(self):
        lhs, rhs = contiguous_check([1, 2], [3], F(1, 2), 4)
        self.assertEqual(lhs, rhs)
        lhs, rhs = contiguous_check([F(1, 3), -2, F(5, 2)], [F(7, 4), 2], -1, 0)
        self.assertEqual((lhs, rhs), (0, 0))

    def test_appell_f2(self):
        self.assertEqual(appell_f2_terminating(1, -1, -1, 2, 2, 1, 1, 1, 1), F(1, 2))
        self.assertEqual(laguerre_f2_chain(0, 1), 2)
        for n in range(5):
            self.assertEqual(laguerre_f2_chain(F(1, 2), n), laguerre_kernel_terms(F(1, 2))[1].value(n))


class TestCertificates(unittest.TestCase):
    def test_hyper_term(self):
        term = HyperTerm([F(1, 2)], [1], z=2)
        self.assertEqual(term.value(2), F(3, 4) / 2 * 4)
        self.assertEqual(term.ratio(2), term.value(3) / term.value(2))

    def test_laguerre_certificate(self):
        term, closed = laguerre_kernel_terms(0)
        self.assertEqual(indefinite_sum_certificate(term, closed, 10), 10)

    def test_broken_closed_form(self):
        term, _ = laguerre_kernel_terms(0)
        with self.assertRaises(IdentityMismatch) as caught:
            indefinite_sum_certificate(term, HyperTerm([3], [1]), 5)
        self.assertEqual(caught.exception.index, 1)

    def test_jacobi_kernel_sum(self):
        legendre = make_family("legendre")
        self.assertEqual(eval_truncated(jacobi_kernel_series(0, 0, 2)), 9)
        self.assertEqual(cd_kernel(legendre, 2, 1, 1), 9)
        term, closed = jacobi_kernel_terms(F(1, 2), F(1, 3))
        self.assertEqual(indefinite_sum_certificate(term, closed, 8), 8)
        self.assertEqual(
            eval_truncated(jacobi_kernel_series(F(1, 2), F(1, 3), 4)), closed.value(4)
        )


class TestRandomClassicalSums(unittest.TestCase):
    """Closed forms against direct summation on random admissible parameters."""

    def setUp(self):
        self.rng = np.random.default_rng(11)

    def _draw(self, denominator):
        # only c carries sevenths, so c and c-a-b are never integers
        k = int(self.rng.integers(-6, 7))
        j = int(self.rng.integers(1, denominator))
        return Fraction(denominator * k + j, denominator)

    def test_chu_vandermonde(self):
        for _ in range(500):
            n = int(self.rng.integers(0, 13))
            b, c = self._draw(5), self._draw(7)
            chu_vandermonde(n, b, c)

    def test_pfaff_saalschutz(self):
        for _ in range(500):
            n = int(self.rng.integers(0, 13))
            a, b, c = self._draw(3), self._draw(5), self._draw(7)
            pfaff_saalschutz(a, b, c, n)

    def test_integer_parameters(self):
        for n in range(13):
            self.assertEqual(chu_vandermonde(n, -n, 1), pochhammer(Fraction(1 + n), n) / factorial(n))
            self.assertEqual(pfaff_saalschutz(2, 3, 7, n), pfaff_saalschutz(3, 2, 7, n))


class TestLaguerreCertificate(unittest.TestCase):
    def test_third(self):
        term, closed = laguerre_kernel_terms(F(1, 3))
        self.assertEqual(indefinite_sum_certificate(term, closed, 30), 30)
        total = sum(term.value(k) for k in range(31))
        self.assertEqual(total, pochhammer(F(7, 3), 30) / factorial(30))
