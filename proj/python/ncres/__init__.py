"""Exact residue engine for perturbed de Rham Hodge operators."""

import json

from . import _ncres
from ._ncres import ParseError, expr_equal, fiber_trace, interior_prefactor, normalize, theorem_tags

__all__ = [
    "ParseError",
    "expr_equal",
    "fiber_trace",
    "interior_prefactor",
    "normalize",
    "theorem",
    "theorem_tags",
    "verify_manifest",
]


def theorem(tag, perturbation="A", show_cases=True, numeric=False):
    """Interior and boundary terms of one theorem as a dict of exact expression strings."""
    return json.loads(_ncres.theorem_json(tag, perturbation, show_cases, numeric))


def verify_manifest(path, numeric=False):
    """Run a manifest and return the verification report."""
    return json.loads(_ncres.manifest_json(str(path), numeric))
