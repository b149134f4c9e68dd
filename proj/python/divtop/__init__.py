"""Divisor topology on modules: Python front end to the C++ core."""

import json

from ._core import (
    BoundExceeded,
    DivtopError,
    InvalidPair,
    Module,
    NotInSharp,
    ParseError,
    SWEEP_SCHEMA_VERSION,
    TOPOLOGY_SCHEMA_VERSION,
    Topology,
    UnknownTheorem,
    UnsupportedFamily,
    WindowTooSmall,
    symbolic_compactness,
    theorems,
    topology,
)
from ._core import _verify_json


def verify(theorem, shape=None, bound=0, threads=0, class_bound=16):
    """Run one theorem sweep and return its report as a dict.

    shape is one of cyclic, abelian, vector-spaces, trivial-extensions,
    pairs or symbolic; bound 0 keeps the theorem's default family.
    """
    doc = json.loads(_verify_json(theorem, shape, bound, threads, class_bound))
    return doc["reports"][0]


__all__ = [
    "BoundExceeded",
    "DivtopError",
    "InvalidPair",
    "Module",
    "NotInSharp",
    "ParseError",
    "SWEEP_SCHEMA_VERSION",
    "TOPOLOGY_SCHEMA_VERSION",
    "Topology",
    "UnknownTheorem",
    "UnsupportedFamily",
    "WindowTooSmall",
    "symbolic_compactness",
    "theorems",
    "topology",
    "verify",
]
