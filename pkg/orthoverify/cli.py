# -*- coding: utf-8 -*-
"""
orthoverify.cli
~~~~~~~~~~~~~~~

Command-line entry point.

    $ orthoverify --suite symmetric --family legendre --nmax 20
    $ orthoverify --suite hahn --alpha 0 --beta 0 --bigN 2 --format json

Exit codes: 0 when every check passes, 1 on any failure, 2 on a
configuration error.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import argparse
import logging
import sys

from pydantic import ValidationError

from .config import FORMATS, SUITES, build_config
from .pool import Pool
from .report import exit_code, render_json, render_text
from .runner import Runner
from .suites import build_checks

logger = logging.getLogger(__name__)

EXIT_CONFIG = 2


def run_suites(config):
    """
    Run every check the config selects.

    Params:
        - config    a SuiteConfig

    Returns:
        (reports, exit code) with reports sorted by identity id, then params
    """
    checks = build_checks(config)
    if config.jobs > 1:
        with Pool(size=config.jobs) as pool:
            reports = pool.run_all(checks)
    else:
        reports = Runner().run_all(checks)
    return reports, exit_code(reports)


def render(config, reports, timings=True):
    if config.format == "json":
        return render_json(config.as_dict(), reports, timings=timings)
    return render_text(reports)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="orthoverify",
        description="Verify orthogonal-polynomial kernel identities in exact arithmetic.",
    )
    ap.add_argument(
        "--suite",
        action="append",
        dest="suites",
        metavar="NAME",
        help="Suite to run, repeatable or comma-separated ({0}).".format(", ".join(SUITES)),
    )
    ap.add_argument(
        "--family",
        action="append",
        dest="families",
        metavar="KIND",
        help="Family kind for the core and symmetric suites, repeatable.",
    )
    ap.add_argument("--alpha", help="Comma-separated alpha grid, e.g. '0,1/2'.")
    ap.add_argument("--beta", help="Comma-separated beta grid.")
    ap.add_argument("--bigN", dest="bigN", help="Comma-separated Hahn N grid.")
    ap.add_argument(
        "--nmax",
        type=int,
        help="Largest degree; also caps the Legendre and Hermite runs (default: 10).",
    )
    ap.add_argument("--format", choices=FORMATS, help="Report format (default: text).")
    ap.add_argument("--jobs", type=int, help="Worker threads (default: 1).")
    ap.add_argument("--seed", type=int, help="Seed of the property suite (default: 0).")
    ap.add_argument("--config", metavar="PATH", help="Flat key = value config file.")
    ap.add_argument("--no-timings", action="store_true", help="Leave elapsed_ms out of the report.")
    ap.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG to stderr.")
    return ap


def _overrides(args):
    overrides = {
        "alpha": args.alpha,
        "beta": args.beta,
        "bigN": args.bigN,
        "nmax": args.nmax,
        "format": args.format,
        "jobs": args.jobs,
        "seed": args.seed,
    }
    if args.suites:
        overrides["suites"] = ",".join(args.suites)
    if args.families:
        overrides["families"] = ",".join(args.families)
    if args.nmax is not None:
        overrides["legendre_nmax"] = args.nmax
        overrides["hermite_nmax"] = args.nmax
    return overrides


def _diagnostic(e):
    if isinstance(e, ValidationError):
        first = e.errors()[0]
        where = ".".join(str(part) for part in first.get("loc", ()))
        return "{0}: {1}".format(where, first.get("msg"))
    return str(e)


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = build_config(args.config, _overrides(args))
        reports, code = run_suites(config)
    except ValueError as e:
        # ValidationError, UsageError and ParameterRangeError all land here
        print("orthoverify: config error: {0}".format(_diagnostic(e)), file=sys.stderr)
        return EXIT_CONFIG
    print(render(config, reports, timings=not args.no_timings))
    return code


if __name__ == "__main__":
    sys.exit(main())
