# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import unittest
from fractions import Fraction

from flexmock import flexmock

from orthoverify.check_factory import CHECK_TYPES, FirstIdentityCheck, create_check
from orthoverify.checks import FunctionCheck, IdentityCheck, same
from orthoverify.checks.core import FamilyCheck
from orthoverify.checks.limit import CoherenceCheck
from orthoverify.checks.property import CATEGORIES, Sampler, property_checks
from orthoverify.errors import IdentityMismatch, ParameterRangeError, SkipCheck
from orthoverify.families import gegenbauer, hahn, jacobi, laguerre, make_family
from orthoverify.hahn import HahnContext

F = Fraction


class TestIdentityCheck(unittest.TestCase):
    def test_compute_is_abstract(self):
        self.assertRaises(NotImplementedError, IdentityCheck().compute)

    def test_pass(self):
        report = FunctionCheck("demo.pass", {"n": "1"}, same, F(1, 2)).run()
        self.assertEqual(report.status, "pass")
        self.assertEqual((report.lhs, report.rhs), ("1/2", "1/2"))
        self.assertEqual(report.identity_id, "demo.pass")
        self.assertIsNone(report.detail)

    def test_unequal_sides(self):
        report = FunctionCheck("demo.fail", {}, lambda: (1, 2)).run()
        self.assertEqual(report.status, "fail")
        self.assertEqual((report.lhs, report.rhs), ("1", "2"))

    def test_mismatch_becomes_report(self):
        check = FunctionCheck("demo.mismatch", {}, same, 0)
        flexmock(check).should_receive("compute").and_raise(
            IdentityMismatch, "demo.mismatch", F(3), F(4), link="first"
        )
        report = check.run()
        self.assertEqual(report.status, "fail")
        self.assertEqual((report.lhs, report.rhs), ("3", "4"))
        self.assertIn("at link first", report.detail)

    def test_skip(self):
        check = FunctionCheck("demo.skip", {}, same, 0)
        flexmock(check).should_receive("compute").and_raise(SkipCheck, "outside domain")
        report = check.run()
        self.assertEqual(report.status, "skipped")
        self.assertEqual(report.detail, "outside domain")
        self.assertEqual(report.lhs, "")

    def test_domain_error(self):
        check = FunctionCheck("demo.range", {}, same, 0)
        flexmock(check).should_receive("compute").and_raise(ParameterRangeError, "N too small")
        report = check.run()
        self.assertEqual(report.status, "fail")
        self.assertEqual(report.detail, "ParameterRangeError: N too small")

    def test_tolerance(self):
        check = CoherenceCheck(0, 0, 1)
        self.assertTrue(check.passed(1.005, 1.0))
        self.assertFalse(check.passed(1.02, 1.0))


class TestCheckFactory(unittest.TestCase):
    def test_unknown_type(self):
        with self.assertRaises(ValueError) as caught:
            create_check("fourier")
        self.assertIn("Available types", str(caught.exception))

    def test_family_params(self):
        check = create_check("lead", jacobi(F(1, 2), 0), 3)
        self.assertIsInstance(check, FamilyCheck)
        self.assertEqual(
            check.params, {"family": "jacobi", "alpha": "1/2", "beta": "0", "n": "3"}
        )
        self.assertEqual(check.run().status, "pass")

    def test_every_type_is_a_check(self):
        for name, cls in CHECK_TYPES.items():
            self.assertTrue(issubclass(cls, IdentityCheck), name)

    def test_core_checks(self):
        legendre = make_family("legendre")
        checks = [
            create_check("orthogonality", hahn(F(1, 2), 1, 4), 4),
            create_check("special_value", legendre, 3, "dp(0)"),
            create_check("recurrence", laguerre(F(7, 3)), 4),
            create_check("even_recurrence", make_family("hermite"), 2),
            create_check("hahn_weights", hahn(0, 0, 2)),
        ]
        for check in checks:
            self.assertEqual(check.run().status, "pass", check.identity)

    def test_symmetric_checks(self):
        legendre = make_family("legendre")
        self.assertEqual(create_check("integral", legendre, 1, "cd_sum").run().status, "pass")
        report = create_check("chebyshev", make_family("chebyshev_u"), 2).run()
        self.assertEqual((report.status, report.lhs), ("pass", "6"))
        for name in ("cd_proportionality", "projection", "confluent_origin", "recurrence_form"):
            self.assertEqual(create_check(name, gegenbauer(F(1, 2)), 2).run().status, "pass", name)

    def test_kernel_checks(self):
        family = jacobi(F(1, 2), F(1, 3))
        for name in ("kernel_norm", "kernel_diagonal", "kernel_sum", "well_poised", "summand"):
            self.assertEqual(create_check(name, family, 3).run().status, "pass", name)
        self.assertEqual(create_check("kernel_poly", family, 3, -1).run().status, "pass")
        report = create_check("kernel_poly", make_family("legendre"), 1, -1).run()
        self.assertEqual((report.status, report.lhs, report.rhs), ("pass", "1", "1"))
        self.assertEqual(create_check("kernel_poly", laguerre(0), 2, 0).run().status, "fail")
        self.assertEqual(create_check("kernel_certificate", family, 10).run().status, "pass")
        self.assertEqual(create_check("laguerre_f2_chain", laguerre(0), 3).run().status, "pass")
        self.assertEqual(
            create_check("quadratic_transformation", make_family("legendre"), 2).run().status, "pass"
        )

    def test_unbalanced_jacobi_skips(self):
        family = jacobi(F(-1, 2), F(-1, 2))
        self.assertEqual(create_check("well_poised", family, 2).run().status, "skipped")
        self.assertEqual(create_check("kernel_norm", family, 2).run().status, "pass")

    def test_first_identity(self):
        report = FirstIdentityCheck(HahnContext(0, 0, 2), 1, "finite_sum").run()
        self.assertEqual(report.identity_id, "hahn.first_identity.finite_sum")
        self.assertEqual(report.params, {"alpha": "0", "beta": "0", "bigN": "2", "n": "1"})
        self.assertEqual((report.status, report.lhs, report.rhs), ("pass", "-2", "-2"))

    def test_hahn_checks(self):
        ctx = HahnContext(F(1, 2), F(1, 3), 4)
        for name in (
            "connection",
            "kernel_difference",
            "derivation_chain",
            "lambda",
            "rn",
            "second_identity",
        ):
            self.assertEqual(create_check(name, ctx, 2).run().status, "pass", name)
        self.assertEqual(create_check("hahn_certificate", ctx).run().status, "pass")

    def test_hyp_checks(self):
        self.assertEqual(create_check("chu_vandermonde", 2, 1, 3).run().lhs, "1/2")
        self.assertEqual(create_check("pfaff_saalschutz", F(1, 2), F(1, 3), 2, 2).run().lhs, "100/91")
        report = create_check("contiguous", [F(1, 2), 2], [F(5, 3)], 1, 4).run()
        self.assertEqual(report.status, "pass")
        self.assertEqual(report.params["num"], "1/2,2")
        report = create_check("appell_f2", F(1, 2), 3, -3, F(5, 2), F(4, 3), 1, 3).run()
        self.assertEqual(report.status, "pass")

    def test_limit_checks(self):
        report = create_check("jacobi_limit", 0, 0, 0, [50, 400]).run()
        self.assertEqual(report.status, "pass")
        self.assertEqual(report.params["bigN"], "50,400")
        self.assertEqual(create_check("limit_rewrite", F(1, 2), F(1, 3), 3).run().status, "pass")
        self.assertEqual(create_check("limit_coherence", 1, 0, 2).run().status, "pass")


class TestPropertyChecks(unittest.TestCase):
    def test_sampler_is_deterministic(self):
        first = Sampler(7, "basis")
        second = Sampler(7, "basis")
        self.assertEqual(
            [first.rational() for _ in range(20)], [second.rational() for _ in range(20)]
        )
        for _ in range(50):
            self.assertGreater(first.parameter(), -1)
            self.assertNotEqual(first.non_integer().denominator, 1)
            family = first.hahn_family()
            self.assertNotEqual(family.alpha + family.beta, -1)
            self.assertLess(first.degree(family), family.big_n)

    def test_same_seed_same_instances(self):
        first = [c.params for c in property_checks(3, instances=4)]
        second = [c.params for c in property_checks(3, instances=4)]
        self.assertEqual(first, second)
        self.assertEqual(len(first), 4 * len(CATEGORIES))
        self.assertNotEqual(first, [c.params for c in property_checks(4, instances=4)])

    def test_instances_pass(self):
        for check in property_checks(11, instances=3):
            report = check.run()
            self.assertEqual(report.status, "pass", (report.identity_id, report.params, report.detail))

    def test_unknown_category(self):
        self.assertRaises(ValueError, property_checks, 0, 1, ("fourier",))
