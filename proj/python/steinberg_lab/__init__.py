"""Exact Steinberg-module and Frobenius-pushforward computations."""

import json

from ._core import (
    InternalError,
    PreconditionError,
    ResourceError,
    RootSystem,
    ValidationError,
    bott_cohomology,
    demazure,
    euler_character,
    hirzebruch_riemann_roch,
    is_acyclic_over_Z,
    kempf_identity,
    longest_word,
    orthogonality_check,
    p1_closed_formula,
    p1_pushforward,
    steinberg_character,
    verify_all_json,
    verify_steinberg_grr,
    verify_steinberg_p1,
    weyl_character,
    weyl_dimension,
)


def verify_all(config=None, jobs=1):
    """Run the verification suites and return the structured report as a dict."""
    return json.loads(verify_all_json(config, jobs))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
