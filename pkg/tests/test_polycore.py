# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import unittest
from fractions import Fraction

import numpy as np
import sympy

from orthoverify.errors import DegreeRangeError, NonzeroConstantTermError
from orthoverify.exactnum import QuadExt
from orthoverify.families import hahn, jacobi, laguerre, make_family
from orthoverify.polycore import (
    BasisCoeffs,
    Poly,
    basis_expand,
    clear_cache,
    deflate_at_zero,
    generate_ops,
    inner_product_n,
    poly_eval,
)

F = Fraction


def from_sympy(expr, x):
    coefficients = sympy.Poly(sympy.expand(expr), x).all_coeffs()[::-1]
    return Poly([F(int(c.p), int(c.q)) for c in map(sympy.Rational, coefficients)])


class TestPoly(unittest.TestCase):
    def test_arithmetic(self):
        self.assertEqual(Poly([1, 2]) * Poly([1, -2]), Poly([1, 0, -4]))
        self.assertEqual(Poly([1, 1]) - Poly([1, 1]), Poly.zero())
        self.assertEqual(Poly.zero().degree, -1)
        self.assertEqual(3 - Poly.x(), Poly([3, -1]))
        self.assertEqual(Poly([2, 4]) / 2, Poly([1, 2]))

    def test_calculus(self):
        self.assertEqual(Poly([1, 0, 3]).derivative(), Poly([0, 6]))
        self.assertEqual(Poly.monomial(2).shift(1), Poly([1, 2, 1]))
        inner = Poly([-1, 0, 2])
        self.assertEqual(Poly.x().compose(inner), inner)

    def test_evaluation(self):
        p = Poly([1, 0, 1])
        self.assertEqual(p(F(1, 2)), F(5, 4))
        self.assertEqual(poly_eval(p, "2"), F(5))
        self.assertEqual(p(QuadExt.sqrt(2)), 3)

    def test_deflate_at_zero(self):
        self.assertEqual(deflate_at_zero(Poly([0, 3, 0, 5])), Poly([3, 0, 5]))
        self.assertRaises(NonzeroConstantTermError, deflate_at_zero, Poly([1, 1]))


class TestGenerateOps(unittest.TestCase):
    def tearDown(self):
        clear_cache()

    def test_legendre(self):
        ops = generate_ops(make_family("legendre"), 3)
        self.assertEqual(ops[2], Poly([F(-1, 2), 0, F(3, 2)]))
        self.assertEqual(ops[3], Poly([0, F(-3, 2), 0, F(5, 2)]))

    def test_hermite_and_laguerre(self):
        self.assertEqual(generate_ops(make_family("hermite"), 2)[2], Poly([-2, 0, 4]))
        self.assertEqual(generate_ops(laguerre(0), 2)[2], Poly([1, -2, F(1, 2)]))

    def test_against_sympy(self):
        x = sympy.Symbol("x")
        a, b = sympy.Rational(1, 2), sympy.Rational(1, 3)
        ops = generate_ops(jacobi(F(1, 2), F(1, 3)), 5)
        for n in range(6):
            self.assertEqual(ops[n], from_sympy(sympy.jacobi(n, a, b, x), x))
        ops = generate_ops(laguerre(F(1, 2)), 5)
        for n in range(6):
            self.assertEqual(ops[n], from_sympy(sympy.assoc_laguerre(n, a, x), x))
        ops = generate_ops(make_family("hermite"), 6)
        for n in range(7):
            self.assertEqual(ops[n], from_sympy(sympy.hermite(n, x), x))

    def test_cache_extends(self):
        family = make_family("legendre")
        short = generate_ops(family, 2)
        longer = generate_ops(family, 5)
        self.assertEqual(longer[:3], short)
        self.assertEqual(len(longer), 6)

    def test_degree_range(self):
        self.assertRaises(DegreeRangeError, generate_ops, hahn(0, 0, 2), 3)
        self.assertRaises(DegreeRangeError, generate_ops, make_family("legendre"), -1)

    def test_hahn(self):
        self.assertEqual(generate_ops(hahn(0, 0, 2), 1)[1], Poly([1, -1]))


class TestBasisAndInnerProduct(unittest.TestCase):
    def test_basis_expand(self):
        legendre = make_family("legendre")
        coeffs = basis_expand(Poly.monomial(2), legendre)
        self.assertEqual(coeffs, BasisCoeffs([F(1, 3), 0, F(2, 3)]))
        self.assertEqual(coeffs.recombine(legendre), Poly.monomial(2))
        self.assertEqual(basis_expand(Poly.zero(), legendre).values, ())

    def test_continuous_norm(self):
        legendre = make_family("legendre")
        p2 = generate_ops(legendre, 2)[2]
        self.assertEqual(inner_product_n(p2, p2, legendre), F(1, 5))
        self.assertEqual(inner_product_n(p2, Poly.x(), legendre), 0)

    def test_discrete_paths_agree(self):
        family = hahn(0, 0, 2)
        p1 = generate_ops(family, 1)[1]
        self.assertEqual(inner_product_n(p1, p1, family), F(2, 3))
        self.assertEqual(inner_product_n(p1, p1, family, via="basis"), F(2, 3))

    def test_sum_path_needs_discrete_family(self):
        self.assertRaises(ValueError, inner_product_n, Poly.one(), Poly.one(), laguerre(0), "sum")


class TestRandomPolynomials(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(7)

    def _poly(self, degree):
        numerators = self.rng.integers(-9, 10, size=degree + 1)
        denominators = self.rng.integers(1, 10, size=degree + 1)
        return Poly([F(int(a), int(b)) for a, b in zip(numerators, denominators)])

    def test_deflate_after_multiply(self):
        for _ in range(200):
            q = self._poly(int(self.rng.integers(0, 13)))
            self.assertEqual(deflate_at_zero(Poly.x() * q), q)

    def test_basis_round_trip(self):
        families = [
            make_family("legendre"),
            jacobi(F(1, 2), F(1, 3)),
            make_family("chebyshev_t"),
            make_family("hermite"),
            laguerre(F(7, 3)),
            hahn(F(1, 2), F(1, 3), 12),
        ]
        for family in families:
            for _ in range(200):
                p = self._poly(int(self.rng.integers(0, 13)))
                self.assertEqual(basis_expand(p, family).recombine(family), p, family)

    def test_discrete_coefficients_match_sums(self):
        family = hahn(F(1, 2), F(1, 3), 12)
        ops = generate_ops(family, 12)
        for _ in range(10):
            p = self._poly(12)
            coeffs = basis_expand(p, family).values
            for k, pk in enumerate(ops):
                self.assertEqual(coeffs[k], inner_product_n(p, pk, family, "sum") / family.norm_ratio(k))
