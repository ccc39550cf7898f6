# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import unittest
from fractions import Fraction

from orthoverify.cdkernel import (
    cd_confluent,
    cd_confluent_origin,
    cd_discrete,
    cd_kernel,
    cross_kernel_check,
    delta,
    jacobi_explicit,
    jacobi_kernel_norm,
    kernel_diagonal_check,
    kernel_norm_check,
    kernel_orthogonality_check,
    kernel_poly,
    laguerre_kernel_norm,
    quadratic_transformation_check,
    reproduce_check,
)
from orthoverify.errors import DegreeRangeError, UsageError
from orthoverify.families import hahn, jacobi, laguerre, make_family
from orthoverify.polycore import Poly, generate_ops

F = Fraction


class TestKernelValues(unittest.TestCase):
    def setUp(self):
        self.legendre = make_family("legendre")

    def test_sum_and_quotient(self):
        self.assertEqual(cd_kernel(self.legendre, 1, 0, 0), 1)
        self.assertEqual(cd_kernel(self.legendre, 1, 1, 1), 4)
        self.assertEqual(cd_kernel(self.legendre, 1, 1, 0), 1)
        self.assertEqual(cd_kernel(self.legendre, 1, 1, 0, form="quotient"), 1)

    def test_quotient_matches_sum(self):
        family = jacobi(F(1, 2), F(7, 3))
        for n in range(5):
            self.assertEqual(
                cd_kernel(family, n, F(1, 3), F(-2, 5)),
                cd_kernel(family, n, F(1, 3), F(-2, 5), form="quotient"),
            )

    def test_confluent(self):
        self.assertEqual(cd_confluent(self.legendre, 1, 1), 4)
        family = laguerre(F(1, 2))
        self.assertEqual(cd_confluent(family, 3, F(2, 3)), cd_kernel(family, 3, F(2, 3), F(2, 3)))
        hermite = make_family("hermite")
        self.assertEqual(cd_confluent_origin(hermite, 2), cd_kernel(hermite, 4, 0, 0))

    def test_bad_forms(self):
        self.assertRaises(UsageError, cd_kernel, self.legendre, 1, 1, 1, "quotient")
        self.assertRaises(UsageError, cd_kernel, self.legendre, 1, 0, 1, "product")
        self.assertRaises(UsageError, cd_confluent_origin, jacobi(1, 0), 1)

    def test_discrete(self):
        self.assertEqual(delta(Poly.monomial(2)), Poly([1, 2]))
        family = hahn(F(1, 2), 1, 5)
        for n in range(4):
            self.assertEqual(cd_discrete(family, n, 5), cd_kernel(family, n, 5, 4))
        self.assertRaises(UsageError, cd_discrete, self.legendre, 1, 1)


class TestKernelPolynomials(unittest.TestCase):
    def test_legendre_at_one(self):
        kp = kernel_poly(make_family("legendre"), 1, 1)
        self.assertEqual(kp.q, Poly([F(1, 2), F(3, 2)]))
        self.assertEqual(kp.cn_over_h0, F(1, 2))
        self.assertEqual(kp.degree, 1)

    def test_explicit_jacobi(self):
        self.assertEqual(jacobi_explicit(1, 0, 1), Poly([F(1, 2), F(3, 2)]))
        for alpha, beta in ((F(1, 2), F(1, 3)), (F(-1, 2), F(-1, 2)), (2, F(7, 3))):
            ops = generate_ops(jacobi(alpha, beta), 6)
            for n in range(7):
                self.assertEqual(jacobi_explicit(alpha, beta, n), ops[n], (alpha, beta, n))

    def test_kernel_polynomial_at_minus_one(self):
        kp = kernel_poly(make_family("legendre"), -1, 1)
        self.assertEqual(kp.q, Poly([F(-1, 2), F(3, 2)]))
        self.assertEqual(kp.cn_over_h0, F(-1, 2))
        family = jacobi(F(1, 2), F(7, 3))
        for n in range(5):
            self.assertEqual(kernel_poly(family, -1, n).q, jacobi_explicit(F(1, 2), F(10, 3), n))
            self.assertEqual(kernel_norm_check(family, -1, n), jacobi_kernel_norm(F(7, 3), F(1, 2), n))

    def test_no_kernel_family(self):
        self.assertRaises(UsageError, kernel_poly, make_family("hermite"), 0, 1)

    def test_norms(self):
        self.assertEqual(kernel_norm_check(make_family("legendre"), 1, 1), 1)
        self.assertEqual(jacobi_kernel_norm(0, 0, 1), 1)
        for n in range(5):
            family = jacobi(F(1, 2), F(1, 3))
            self.assertEqual(kernel_norm_check(family, 1, n), jacobi_kernel_norm(F(1, 2), F(1, 3), n))
            self.assertEqual(kernel_norm_check(laguerre(0), 0, n), laguerre_kernel_norm(0, n))
        self.assertEqual(laguerre_kernel_norm(0, 2), 3)

    def test_orthogonality_and_diagonal(self):
        family = jacobi(1, F(1, 2))
        kp = kernel_poly(family, 1, 3)
        self.assertEqual(kernel_orthogonality_check(family, 1, 3, Poly([1, 2, 0, 1])), kp.cn_over_h0 * 4)
        self.assertEqual(kernel_diagonal_check(family, 1, 3), kp.q(1))
        self.assertRaises(DegreeRangeError, kernel_orthogonality_check, family, 1, 1, Poly.monomial(2))

    def test_reproduce(self):
        legendre = make_family("legendre")
        self.assertEqual(reproduce_check(legendre, 2, Poly.monomial(2), "1/2"), F(1, 4))
        self.assertEqual(
            reproduce_check(hahn(0, 1, 4), 3, Poly([1, -1, 0, 1]), 2), F(7)
        )
        self.assertRaises(DegreeRangeError, reproduce_check, legendre, 1, Poly.monomial(2), 0)

    def test_cross_kernel(self):
        self.assertEqual(cross_kernel_check(make_family("legendre"), 2, 0, 1), F(-3, 2))

    def test_quadratic_transformation(self):
        self.assertEqual(quadratic_transformation_check(make_family("legendre"), 1), 1)
        self.assertRaises(UsageError, quadratic_transformation_check, make_family("hermite"), 1)
