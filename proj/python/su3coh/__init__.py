"""Cohomogeneity-one SU(3) classification machinery.

Exact root/Weyl calculus on su(3), slice-representation enumeration,
principal-stabilizer computation, gluing-class counting, and a seeded
numerical verification layer for the twisted conjugation action and the
3-form function on oriented 3-planes.
"""

import json as _json

from ._core import *  # noqa: F401,F403
from . import _core as _c

__all__ = [name for name in dir(_c) if not name.startswith("_")] + [
    "emit_tables",
    "emit_tables_delta",
    "verify_suite",
    "verify_torus_lemma",
]


def emit_tables(bound=5):
    """Slice and gluing-class tables as a list of dicts."""
    return _json.loads(_c.emit_tables_json(bound))


def emit_tables_delta(bound=5):
    """The same tables from the closed delta formulas (independent oracle)."""
    return _json.loads(_c.emit_tables_delta_json(bound))


def verify_suite(seed=42, samples=1000, group="all"):
    """Run the seeded verification checks; returns a list of report dicts."""
    return _json.loads(_c.verify_suite_json(seed, samples, group))


def verify_torus_lemma(bound=5):
    """Grid-oracle component counts against gcd for all weights in the bound."""
    return _json.loads(_c.verify_torus_lemma_json(bound))
