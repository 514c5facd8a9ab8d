"""Exact invariants and 0-surgery characterization reports for genus-one nearly fibered knots."""

import json
import os
from fractions import Fraction
from pathlib import Path

_packaged = Path(__file__).with_name("fixtures")
if _packaged.is_dir():
    os.environ.setdefault("CHARSLOPE_FIXTURE_DIR", str(_packaged))

from . import _charslope
from ._charslope import (
    DomainError,
    Error,
    UsageError,
    alexander,
    canonical,
    covers,
    fox_alexander,
    invariants,
    pretzel_seifert,
    signature,
)

__all__ = [
    "DomainError",
    "Error",
    "UsageError",
    "alexander",
    "canonical",
    "characterize",
    "covers",
    "distinguish",
    "fox_alexander",
    "invariants",
    "lambda1",
    "lambda1_routes",
    "pretzel_seifert",
    "signature",
    "v3",
]


def lambda1(knot, fixtures=""):
    return Fraction(_charslope.lambda1(knot, fixtures))


def lambda1_routes(delta, p1):
    a, b = _charslope.lambda1_routes(delta, p1)
    return Fraction(a), Fraction(b)


def v3(knot, fixtures=""):
    return Fraction(_charslope.v3(knot, fixtures))


def characterize(knot, recompute_covers=False, fixtures=""):
    """Report of the 0-surgery argument as a dict (the JSON schema of the CLI)."""
    return json.loads(_charslope.characterize(knot, recompute_covers, fixtures))


def distinguish(a, b, slope, fixtures=""):
    return json.loads(_charslope.distinguish(a, b, str(slope), fixtures))
