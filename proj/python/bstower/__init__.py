"""Certificates and Brauer-Siegel bounds for class field towers.

The report functions return the decoded ``bstower-report/1`` document.
"""

import json

from . import _bstower
from ._bstower import BstowerError, bs_ratio, bundled_example

__all__ = [
    "BstowerError",
    "bounds",
    "bs_ratio",
    "bundled_example",
    "field_invariants",
    "splitting",
    "table",
    "verify",
]


def verify(example, document=None):
    """Run the verification pipeline for example 1 or 2."""
    return json.loads(_bstower.verify(example, document))


def splitting(document, bound):
    """Splitting report for prime powers q <= bound."""
    return json.loads(_bstower.splitting(document, bound))


def bounds(document, ineq=None):
    """Brauer-Siegel bounds, optionally with other inequality coefficients."""
    return json.loads(_bstower.bounds(document, ineq))


def table(config=None):
    """Summary table report; the rendered table is in ``["output"]``."""
    return json.loads(_bstower.table(config))


def field_invariants(poly):
    """Return ``(disc(f), r1, r2)`` for the monic irreducible ``poly``."""
    disc, r1, r2 = _bstower.field_invariants(poly)
    return int(disc), r1, r2
