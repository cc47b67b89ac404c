"""Exact modular representations of symmetric groups and Sergeev superalgebras.

Thin wrappers over the C++ core; build documents come back as plain dicts,
matching the files written by the ``modrep build`` CLI byte for byte.
"""

import json as _json

from ._core import (
    classify,
    conjugate,
    count_standard,
    cross_check,
    dim_sergeev,
    dim_sym,
    field_info,
    hook_length,
    is_cs_weight,
    p_standard_tableaux,
    partitions,
    radical_dim,
    residue_sequence,
    residue_table,
    standard_tableaux,
    build_sergeev_json,
    build_sym_json,
    verify_sergeev,
    verify_sym,
    weight_orbit_json,
)

__all__ = [
    "classify",
    "conjugate",
    "count_standard",
    "cross_check",
    "dim_sergeev",
    "dim_sym",
    "field_info",
    "hook_length",
    "is_cs_weight",
    "p_standard_tableaux",
    "partitions",
    "radical_dim",
    "residue_sequence",
    "residue_table",
    "standard_tableaux",
    "build_sergeev",
    "build_sergeev_json",
    "build_sym",
    "build_sym_json",
    "verify_sergeev",
    "verify_sym",
    "weight_orbit",
    "weight_orbit_json",
]


def build_sym(parts, p):
    """Construct D^lambda and return its export document as a dict."""
    return _json.loads(build_sym_json(parts, p))


def build_sergeev(parts, p):
    """Construct V^xi and return its export document as a dict."""
    return _json.loads(build_sergeev_json(parts, p))


def weight_orbit(parts, p):
    """Orbit of the row-reading tableau of a strict shape under admissible moves."""
    return _json.loads(weight_orbit_json(parts, p))
