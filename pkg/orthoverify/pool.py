# -*- coding: utf-8 -*-
"""
orthoverify.pool
~~~~~~~~~~~~~~~~

Threaded runner: every identity check becomes a Future on a shared executor.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

from concurrent.futures import ThreadPoolExecutor, as_completed, wait

from .runner import Base


class Pool(Base):
    def __init__(self, size=5):
        """
        Run identity checks on a fixed number of worker threads.

        Params:
            - size      (Optional) Worker threads evaluating checks
              (Defaults to 5)

        Notes:
            - Checks only read the per-family polynomial caches, and cache
              entries are replaced whole, so workers need no locking.
            - run_all sorts the reports, so the output matches a serial
              Runner given the same checks.
            - Leaving a ``with`` block shuts the executor down.
        """
        super(Pool, self).__init__()
        self.executor = ThreadPoolExecutor(max_workers=size)

    def _handle_check(self, check):
        """
        Submit ``check.run`` to the executor.

        Returns:
            A Future resolving to the check's IdentityReport.
        """
        return self.executor.submit(check.run)

    def _collect(self, handles):
        return self.all_completed(handles)

    def close(self, wait=True):
        """
        Shut the executor down.

        Params:
            - wait      (Optional) Block until queued checks finish
              (Defaults to True)
        """
        self.executor.shutdown(wait)

    def as_completed(self, futures, timeout=None):
        """
        Yield reports in completion order, not submission order.

        Params:
            - futures   Futures returned by ``run``
            - timeout   (Optional) Seconds before TimeoutError
        """
        for r in as_completed(futures, timeout):
            yield r.result()

    def all_completed(self, futures, timeout=None):
        """
        Wait for every check and return the reports, unordered.

        Params:
            - futures   Futures returned by ``run``
            - timeout   (Optional) Seconds to wait; checks still running
              after it are left out
        """
        done = wait(futures, timeout)[0]
        return [f.result() for f in done]

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()
