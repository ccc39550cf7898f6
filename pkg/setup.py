# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

install_requires = ["pydantic >= 2.0", "numpy >= 1.20"]

setup(
    name="orthoverify",
    version="1.0.0",
    description=(
        "Exact-arithmetic verification of Christoffel-Darboux kernel identities "
        "for classical and Hahn orthogonal polynomials"
    ),
    packages=["orthoverify", "orthoverify.checks"],
    license="MIT",
    classifiers=[
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
    ],
    platforms="Any",
    keywords=("orthogonal polynomials", "christoffel-darboux", "hypergeometric", "hahn", "exact"),
    package_dir={"": "."},
    install_requires=install_requires,
    tests_require=["pytest", "flexmock", "sympy"],
    entry_points={"console_scripts": ["orthoverify = orthoverify.cli:main"]},
)
