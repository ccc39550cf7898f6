# -*- coding: utf-8 -*-
"""
orthoverify.config
~~~~~~~~~~~~~~~~~~

Suite configuration: model defaults, then a flat ``key = value`` file,
then command-line overrides.

A config file looks like::

    # quick run
    suites = symmetric, hahn
    alpha = 0, 1/2
    bigN = 3, 5
    nmax = 6
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import io
import logging
from typing import List

from pydantic import BaseModel, Field, field_validator

from .errors import UsageError
from .exactnum import as_rational
from .families import KINDS
from .util import stringify

logger = logging.getLogger(__name__)

SUITES = ("core", "symmetric", "jacobi", "laguerre", "hahn", "hyp", "limits", "properties")

FORMATS = ("text", "json")

GRID = ("-1/2", "-1/3", "0", "1/2", "1", "7/3")

DEFAULT_FAMILIES = (
    "legendre",
    "gegenbauer",
    "chebyshev_t",
    "chebyshev_u",
    "hermite",
    "jacobi",
    "laguerre",
    "hahn",
)

LIST_KEYS = ("suites", "families", "alpha", "beta", "bigN", "limit_bigN")


def _split(value):
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip()]
    return value


class SuiteConfig(BaseModel):
    """
    Everything a run depends on. Two runs with equal configs produce the
    same reports.
    """

    suites: List[str] = Field(default_factory=lambda: list(SUITES))
    families: List[str] = Field(default_factory=lambda: list(DEFAULT_FAMILIES))
    alpha: List[str] = Field(default_factory=lambda: list(GRID))
    beta: List[str] = Field(default_factory=lambda: list(GRID))
    bigN: List[int] = Field(default_factory=lambda: [3, 5, 8, 12])
    nmax: int = Field(default=10, ge=0)
    direct_nmax: int = Field(default=6, ge=0)
    legendre_nmax: int = Field(default=20, ge=0)
    hermite_nmax: int = Field(default=12, ge=0)
    laguerre_nmax: int = Field(default=15, ge=0)
    sum_nmax: int = Field(default=30, ge=0)
    limit_n: int = Field(default=4, ge=0)
    limit_bigN: List[int] = Field(default_factory=lambda: [50, 100, 200, 400])
    instances: int = Field(default=100, ge=1)
    seed: int = Field(default=0, ge=0)
    jobs: int = Field(default=1, ge=1)
    format: str = "text"

    @field_validator(*LIST_KEYS, mode="before")
    @classmethod
    def _comma_lists(cls, value):
        return _split(value)

    @field_validator("suites")
    @classmethod
    def _known_suites(cls, value):
        unknown = [s for s in value if s not in SUITES]
        if unknown:
            raise ValueError(
                "unknown suite(s) {0}; known: {1}".format(", ".join(unknown), ", ".join(SUITES))
            )
        if not value:
            raise ValueError("no suite selected")
        return value

    @field_validator("families")
    @classmethod
    def _known_families(cls, value):
        unknown = [f for f in value if f not in KINDS]
        if unknown:
            raise ValueError(
                "unknown family kind(s) {0}; known: {1}".format(", ".join(unknown), ", ".join(KINDS))
            )
        return value

    @field_validator("alpha", "beta")
    @classmethod
    def _rational_grid(cls, value):
        if not value:
            raise ValueError("parameter grid is empty")
        result = []
        for text in value:
            try:
                number = as_rational(text)
            except (TypeError, ValueError, ZeroDivisionError):
                raise ValueError("{0!r} is not a rational number".format(text))
            if number <= -1:
                raise ValueError("grid value {0} must exceed -1".format(text))
            result.append(stringify(number))
        return result

    @field_validator("bigN", "limit_bigN")
    @classmethod
    def _size_grid(cls, value):
        if not value:
            raise ValueError("N grid is empty")
        if any(v < 2 for v in value):
            raise ValueError("every N must be at least 2, got {0}".format(value))
        return value

    @field_validator("format")
    @classmethod
    def _known_format(cls, value):
        if value not in FORMATS:
            raise ValueError("format must be one of {0}, got {1!r}".format(", ".join(FORMATS), value))
        return value

    def alphas(self):
        return [as_rational(a) for a in self.alpha]

    def betas(self):
        return [as_rational(b) for b in self.beta]

    def pairs(self, balanced=True):
        """
        (alpha, beta) grid points. ``balanced=False`` drops alpha + beta = -1.
        """
        return [
            (a, b) for a in self.alphas() for b in self.betas() if balanced or a + b != -1
        ]

    def as_dict(self):
        return self.model_dump()


def parse_config_text(text, source="<config>"):
    """
    Parse flat ``key = value`` lines; ``#`` starts a comment.

    Returns:
        dict of raw string values

    Raises:
        UsageError for a malformed line or an unknown key.
    """
    values = {}
    for number, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError("{0}:{1}: expected key = value, got {2!r}".format(source, number, line))
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in SuiteConfig.model_fields:
            raise UsageError("{0}:{1}: unknown key {2!r}".format(source, number, key))
        values[key] = value
    return values


def load_config_file(path):
    """
    Raises:
        UsageError when the file cannot be read or parsed.
    """
    try:
        with io.open(path, encoding="utf-8") as f:
            text = f.read()
    except (IOError, OSError) as e:
        raise UsageError("cannot read config {0}: {1}".format(path, e))
    return parse_config_text(text, source=path)


def build_config(path=None, overrides=None):
    """
    Merge defaults, the config file at ``path`` and ``overrides``; None
    values in ``overrides`` are ignored.

    Raises:
        UsageError for file problems.
        pydantic.ValidationError for invalid values.
    """
    values = load_config_file(path) if path else {}
    values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    logger.debug("config values: %s", values)
    return SuiteConfig(**values)
