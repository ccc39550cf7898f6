# -*- coding: utf-8 -*-
"""
orthoverify.checks
~~~~~~~~~~~~~~~~~~

Base class for identity checks.

A check computes both sides of one identity instance and turns the outcome
into an ``IdentityReport``; runners and pools only ever call ``run()``.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import time

from ..errors import IdentityMismatch, SkipCheck
from ..report import IdentityReport
from ..util import stringify

logger = logging.getLogger(__name__)


class IdentityCheck(object):
    """
    Base class for all identity checks.

    Args:
        identity (str): dotted identity id, e.g. "hahn.first_identity.finite_sum"
        params (dict, optional): parameters of the instance, values as strings
        tolerance (float, optional): relative tolerance; None means exact
    """

    identity = None
    tolerance = None

    def __init__(self, params=None, identity=None):
        if identity is not None:
            self.identity = identity
        self.params = dict(params or {})

    def compute(self):
        """
        Compute both sides of the identity.

        Returns:
            (lhs, rhs)

        Raises:
            NotImplementedError: If not implemented by subclass
        """
        raise NotImplementedError("Subclasses must implement the compute() method")

    def passed(self, lhs, rhs):
        if self.tolerance is None:
            return stringify(lhs) == stringify(rhs)
        return abs(lhs - rhs) <= self.tolerance * abs(rhs)

    def _report(self, status, lhs, rhs, started, detail=None):
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        return IdentityReport(
            identity_id=self.identity,
            params=self.params,
            lhs=stringify(lhs) if lhs is not None else "",
            rhs=stringify(rhs) if rhs is not None else "",
            status=status,
            elapsed_ms=elapsed_ms,
            detail=detail,
        )

    def run(self):
        """
        Execute the check.

        Mismatches and domain errors become "fail" reports, SkipCheck a
        "skipped" one; nothing propagates.

        Returns:
            IdentityReport
        """
        started = time.perf_counter()
        try:
            lhs, rhs = self.compute()
        except SkipCheck as e:
            logger.debug("%s %s skipped: %s", self.identity, self.params, e)
            return self._report("skipped", None, None, started, detail=str(e))
        except IdentityMismatch as e:
            logger.warning("%s %s failed: %s", self.identity, self.params, e)
            return self._report("fail", e.lhs, e.rhs, started, detail=str(e))
        except (ValueError, ArithmeticError) as e:
            logger.warning("%s %s raised %s", self.identity, self.params, e)
            return self._report(
                "fail", None, None, started, detail="{0}: {1}".format(type(e).__name__, e)
            )
        if self.passed(lhs, rhs):
            report = self._report("pass", lhs, rhs, started)
        else:
            logger.warning("%s %s failed: %s != %s", self.identity, self.params, lhs, rhs)
            report = self._report("fail", lhs, rhs, started)
        logger.debug("%s %s %s in %.1f ms", self.identity, self.params, report.status, report.elapsed_ms)
        return report


class FunctionCheck(IdentityCheck):
    """
    A check whose sides come from a callable returning (lhs, rhs).

    Args:
        identity (str): dotted identity id
        params (dict): parameters of the instance
        func (callable): computes (lhs, rhs)
        *args, **kwargs: passed to ``func``
    """

    def __init__(self, identity, params, func, *args, **kwargs):
        super(FunctionCheck, self).__init__(params, identity=identity)
        self.func = func
        self.args = args
        self.kwargs = kwargs

    def compute(self):
        return self.func(*self.args, **self.kwargs)


def same(value):
    """Both sides of a check whose library call already asserted equality."""
    return value, value
