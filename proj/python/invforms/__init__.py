"""Invariant and horizontal differential forms for diagonal torus and finite abelian actions."""

import json

from ._core import (
    ActionSpec,
    InvformsError,
    PreconditionError,
    ResourceError,
    ValidationError,
    __version__,
    cyclic_action,
    euler_homology,
    hilbert_basis,
    invariant_ring_series,
    quotient_dimension,
    torsion_free_rank,
    torus_action,
    trivial_action,
)
from . import _core


def analyze(action, max_degree=None, form_degrees=()):
    """Full report as a dict (same content as `invforms analyze`)."""
    return json.loads(_core._analyze(action, max_degree, list(form_degrees)))


def surjectivity(action, k, bound):
    return json.loads(_core._surjectivity(action, k, bound))


def smoothness(action, bound):
    return json.loads(_core._smoothness(action, bound))


def canonical(action, truncation=10):
    return json.loads(_core._canonical(action, truncation))


def load(path):
    with open(path, encoding="utf-8") as fh:
        return ActionSpec.from_json(fh.read())


__all__ = [
    "ActionSpec",
    "InvformsError",
    "PreconditionError",
    "ResourceError",
    "ValidationError",
    "analyze",
    "canonical",
    "cyclic_action",
    "euler_homology",
    "hilbert_basis",
    "invariant_ring_series",
    "load",
    "quotient_dimension",
    "smoothness",
    "surjectivity",
    "torsion_free_rank",
    "torus_action",
    "trivial_action",
]
