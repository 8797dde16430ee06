"""Majorization, transport certificates and points of convexity."""

import json as _json

from ._core import (
    ConvergenceError,
    DomainError,
    HypothesisError,
    InputError,
    convexity_boundary,
    eigenvalues,
    hlp_transfer_matrix,
    is_majorized,
    malamud_majorization_check,
    popoviciu_verify,
    relative_concavity_verify,
    roots,
    schur_horn_check,
    support_line_certify,
    trace_inequality_verify,
    weighted_majorization_decide,
)
from ._core import reproduce as _reproduce


def reproduce(only="all", seed=7):
    """Run reproduction entries and return the parsed report."""
    return _json.loads(_reproduce(only, seed))


__all__ = [
    "ConvergenceError",
    "DomainError",
    "HypothesisError",
    "InputError",
    "convexity_boundary",
    "eigenvalues",
    "hlp_transfer_matrix",
    "is_majorized",
    "malamud_majorization_check",
    "popoviciu_verify",
    "relative_concavity_verify",
    "reproduce",
    "roots",
    "schur_horn_check",
    "support_line_certify",
    "trace_inequality_verify",
    "weighted_majorization_decide",
]
