# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import json
import unittest

from pydantic import ValidationError

from orthoverify.report import (
    REPORT_VERSION,
    IdentityReport,
    exit_code,
    render_json,
    render_text,
    sort_reports,
    summarize,
)


def _report(identity, status="pass", **params):
    return IdentityReport(
        identity_id=identity, params=params, lhs="1", rhs="1", status=status, elapsed_ms=2.5
    )


class TestIdentityReport(unittest.TestCase):
    def test_status_is_validated(self):
        self.assertRaises(ValidationError, IdentityReport, identity_id="x", status="maybe")

    def test_as_dict(self):
        report = _report("core.lead", n="1")
        self.assertNotIn("detail", report.as_dict())
        self.assertIn("elapsed_ms", report.as_dict())
        self.assertNotIn("elapsed_ms", report.as_dict(timings=False))

    def test_sorting(self):
        reports = [_report("core.lead", n="10"), _report("core.lead", n="9"), _report("core.ch", n="1")]
        ordered = sort_reports(reports)
        self.assertEqual(
            [(r.identity_id, r.params["n"]) for r in ordered],
            [("core.ch", "1"), ("core.lead", "9"), ("core.lead", "10")],
        )


class TestRendering(unittest.TestCase):
    def setUp(self):
        self.reports = [
            _report("core.lead", n="1"),
            _report("hyp.contiguous", status="fail", trunc="4"),
            _report("kernel.well_poised", status="skipped", n="2"),
        ]

    def test_summary_and_exit_code(self):
        self.assertEqual(summarize(self.reports), {"pass": 1, "fail": 1, "skipped": 1})
        self.assertEqual(exit_code(self.reports), 1)
        self.assertEqual(exit_code(self.reports[:1]), 0)
        self.assertEqual(exit_code([]), 0)

    def test_json(self):
        document = json.loads(render_json({"seed": 0}, self.reports, timings=False))
        self.assertEqual(document["version"], REPORT_VERSION)
        self.assertEqual(document["config"], {"seed": 0})
        self.assertEqual(document["summary"], {"pass": 1, "fail": 1, "skipped": 1})
        self.assertEqual(document["reports"][0]["identity_id"], "core.lead")
        self.assertNotIn("elapsed_ms", document["reports"][0])

    def test_text(self):
        lines = render_text(self.reports).splitlines()
        self.assertEqual(len(lines), 4)
        self.assertTrue(lines[0].startswith("PASS"))
        self.assertIn("n=1", lines[0])
        self.assertEqual(lines[-1], "1 passed, 1 failed, 1 skipped")
        self.assertEqual(render_text([]), "0 passed, 0 failed, 0 skipped")
