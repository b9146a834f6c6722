"""Intersection polynomials of virtual knots, computed from Gauss codes."""

import json

from ._core import (
    GaussDiagram,
    InvariantSet,
    LaurentPoly,
    apply_move,
    bounds,
    distinguish,
    format_appendix,
    horizontal_mirror,
    invariants,
    parse_appendix,
    random_diagram,
    random_walk,
    record,
    reverse,
    selftest,
    symmetry_identities_hold,
    third_classes_equal,
    vertical_mirror,
)


def record_dict(code, name=""):
    """The JSON record of `code` as a dict."""
    return json.loads(record(code, name))


__all__ = [
    "GaussDiagram",
    "InvariantSet",
    "LaurentPoly",
    "apply_move",
    "bounds",
    "distinguish",
    "format_appendix",
    "horizontal_mirror",
    "invariants",
    "parse_appendix",
    "random_diagram",
    "random_walk",
    "record",
    "record_dict",
    "reverse",
    "selftest",
    "symmetry_identities_hold",
    "third_classes_equal",
    "vertical_mirror",
]
