"""Python access to the isopar core: polynomials, extracted forms, suites and pencil scans."""

import json

from ._isopar import (
    DimensionError,
    DomainError,
    ParseError,
    UsageError,
    forms,
    nullity,
    scan,
)
from . import _isopar

__all__ = [
    "DimensionError",
    "DomainError",
    "ParseError",
    "UsageError",
    "build_polynomial",
    "verify_cm",
    "forms",
    "blocks",
    "run_suite",
    "nullity",
    "scan",
]


def build_polynomial(example):
    """Cartan-Muenzner polynomial of `example` ("h45" or "fkm69") as a JSON dict."""
    return json.loads(_isopar.build_polynomial(example))


def verify_cm(poly, g=4, m1=0, m2=0):
    """Accepts the dict from build_polynomial or a JSON string."""
    text = poly if isinstance(poly, str) else json.dumps(poly)
    return _isopar.verify_cm(text, g, m1, m2)


def blocks(example):
    return json.loads(_isopar.blocks_json(example))


def run_suite(name, example="both", seed=0, samples=1000, with_timing=True):
    return json.loads(_isopar.suite_json(name, example, seed, samples, with_timing))
