# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from .config import SuiteConfig
from .exactnum import QuadExt, Rational
from .families import make_family
from .polycore import Poly
from .pool import Pool
from .runner import Runner

__title__ = "orthoverify"
__version__ = "1.0.0"
__license__ = "MIT"
__all__ = ["Runner", "Pool", "SuiteConfig", "Poly", "QuadExt", "Rational", "make_family"]
