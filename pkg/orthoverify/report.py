# -*- coding: utf-8 -*-
"""
orthoverify.report
~~~~~~~~~~~~~~~~~~

Identity reports and their JSON and text renderings.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import json
from typing import Dict, Optional

from pydantic import BaseModel, Field, field_validator

from .util import params_key

STATUSES = ("pass", "fail", "skipped")

REPORT_VERSION = 1


class IdentityReport(BaseModel):
    """One checked identity instance."""

    identity_id: str
    params: Dict[str, str] = Field(default_factory=dict)
    lhs: str = ""
    rhs: str = ""
    status: str
    elapsed_ms: float = 0.0
    detail: Optional[str] = None

    @field_validator("status")
    @classmethod
    def _known_status(cls, value):
        if value not in STATUSES:
            raise ValueError("status must be one of {0}, got {1!r}".format(", ".join(STATUSES), value))
        return value

    @property
    def passed(self):
        return self.status == "pass"

    def sort_key(self):
        return (self.identity_id, params_key(self.params))

    def as_dict(self, timings=True):
        data = self.model_dump(exclude_none=True)
        if not timings:
            data.pop("elapsed_ms", None)
        return data


def sort_reports(reports):
    """Stable order: by identity id, then by parameters."""
    return sorted(reports, key=lambda r: r.sort_key())


def summarize(reports):
    summary = {status: 0 for status in STATUSES}
    for report in reports:
        summary[report.status] += 1
    return summary


def exit_code(reports):
    return 1 if any(r.status == "fail" for r in reports) else 0


def render_json(config, reports, timings=True):
    """
    The JSON document {"version", "config", "reports", "summary"}.

    Params:
        - config    a mapping, usually ``SuiteConfig.as_dict()``
        - reports   sorted IdentityReport list
        - timings   (Optional) include elapsed_ms; off for determinism checks
    """
    document = {
        "version": REPORT_VERSION,
        "config": config,
        "reports": [r.as_dict(timings=timings) for r in reports],
        "summary": summarize(reports),
    }
    return json.dumps(document, indent=2, sort_keys=True)


def _format_params(params):
    return " ".join("{0}={1}".format(k, v) for k, v in sorted(params.items()))


def render_text(reports):
    """One aligned line per report and a closing summary line."""
    rows = [
        (r.status.upper(), r.identity_id, _format_params(r.params), r.lhs, r.rhs, r.detail or "")
        for r in reports
    ]
    lines = []
    if rows:
        widths = [max(len(row[i]) for row in rows) for i in range(4)]
        for row in rows:
            head = "  ".join(cell.ljust(width) for cell, width in zip(row[:4], widths))
            line = "{0}  {1}".format(head, row[4])
            if row[5]:
                line += "  # " + row[5]
            lines.append(line.rstrip())
    summary = summarize(reports)
    lines.append(
        "{0} passed, {1} failed, {2} skipped".format(summary["pass"], summary["fail"], summary["skipped"])
    )
    return "\n".join(lines)
