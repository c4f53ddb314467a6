"""One entry point from a path to each of its representations."""

from __future__ import annotations

from .core import DyckPath, path_to_matrix, phi, profile_of_path
from .errors import InvalidArgument
from .lediagram import le_from_path
from .necklace import necklace_explicit
from .permutation import southwest_perm
from .plabic import build_plabic
from .polytope import CORRECTED, hrep_general, hrep_refined

TARGETS = (
    "matrix",
    "extended",
    "necklace",
    "perm",
    "le",
    "plabic",
    "polytope-general",
    "polytope-refined",
)


def convert(path: DyckPath, target: str, *, refined_variant: str = CORRECTED):
    """The ``target`` representation of ``path``; every result has ``to_json``."""
    if target == "matrix":
        return path_to_matrix(path)
    if target == "extended":
        return phi(path_to_matrix(path))
    if target == "necklace":
        return necklace_explicit(profile_of_path(path))
    if target == "perm":
        return southwest_perm(path)
    if target == "le":
        return le_from_path(path)
    if target == "plabic":
        return build_plabic(path)
    if target == "polytope-general":
        return hrep_general(necklace_explicit(profile_of_path(path)))
    if target == "polytope-refined":
        return hrep_refined(profile_of_path(path), refined_variant)
    raise InvalidArgument(f"unknown conversion target {target!r}; choose from {TARGETS}")
