"""Twisted standard complexes: construction, verification and Hecke algebra queries."""

import json

from ._tsc import (
    Certificate,
    InvalidArgument,
    flatten,
    hecke,
    hecke_standard,
    is_smooth,
    kl,
    preferred_word,
    run_suite,
)
from . import _tsc


def build_f(n, backend="sign"):
    """The complex F as a dict with keys n, backend, summands and diff."""
    return json.loads(_tsc.build_f_json(n, backend))


def verify_complex(data):
    """Check d^2 = mu delta on a dict produced by build_f."""
    return _tsc.verify_complex_json(json.dumps(data))


__all__ = [
    "Certificate",
    "InvalidArgument",
    "build_f",
    "flatten",
    "hecke",
    "hecke_standard",
    "is_smooth",
    "kl",
    "preferred_word",
    "run_suite",
    "verify_complex",
]
