# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from .check_factory import create_check
from .families import make_family
from .hahn import HahnContext
from .report import sort_reports, summarize

logger = logging.getLogger(__name__)


class Base(object):
    """
    The "Base" runner object, handles the common verification tasks
    (one integral, one Hahn identity, a whole batch). This is an "abstract"
    class, both Runner and Pool implement it.
    """

    def family(self, kind, **params):
        """
        Build a validated family.

        Usage:

        >>> runner.family('gegenbauer', alpha='1/2')
        """
        return make_family(kind, params)

    def integral(self, family, n, method="recurrence"):
        """
        Check one evaluation of the even-measure integral I_n/h_0.

        Params:
            - family    an even family, e.g. runner.family('legendre')
            - n         index
            - method    (Optional) "recurrence", "direct", "cd_sum" or "closed_form"

        Returns:
            - An IdentityReport, or a future that wraps it if used with a pool.
        """
        return self.run(create_check("integral", family, n, method))

    def first_identity(self, alpha, beta, big_n, n, form="finite_sum"):
        """
        Check q_n(N-1) of the Hahn kernel polynomial through one form.

        Usage:

        >>> runner.first_identity(0, 0, 2, 1, 'f65_pair')
        """
        return self.run(create_check("first_identity", HahnContext(alpha, beta, big_n), n, form))

    def second_identity(self, alpha, beta, big_n, n):
        return self.run(create_check("second_identity", HahnContext(alpha, beta, big_n), n))

    def run(self, check):
        """
        Executes an IdentityCheck and returns the result

        Params:
            - check An instance of IdentityCheck

        """
        return self._handle_check(check)

    def run_all(self, checks):
        """
        Run every check and return the reports in stable order.

        Params:
            - checks    iterable of IdentityCheck

        Returns:
            list of IdentityReport sorted by identity id, then parameters
        """
        handles = [self.run(check) for check in checks]
        reports = sort_reports(self._collect(handles))
        summary = summarize(reports)
        logger.info(
            "%d checks: %d passed, %d failed, %d skipped",
            len(reports),
            summary["pass"],
            summary["fail"],
            summary["skipped"],
        )
        return reports

    def _handle_check(self, check):
        """
        An abstract method, to be implemented by inheriting classes
        """
        raise NotImplementedError

    def _collect(self, handles):
        """
        An abstract method, to be implemented by inheriting classes
        """
        raise NotImplementedError


class Runner(Base):
    """
    The basic implementation of a runner: checks execute one after another.
    """

    def _handle_check(self, check):
        """
        Implements IdentityCheck execution.

        Params:
            - check       IdentityCheck object to run

        """
        return check.run()

    def _collect(self, handles):
        return list(handles)
