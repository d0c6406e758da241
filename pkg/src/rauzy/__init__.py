"""Rauzy classes, interval exchange transformations and their invariants."""
from .perm import Permutation, PermutationError, ReducibleError
from .iet import IET, InductionTieError
from .paths import RauzyPath
from .classes import rauzy_class, standardize, same_class
from .invariants import Signature, singularity_profile, genus, spin_parity, class_key, invariants
from .builder import ClassKey, NoSuchClass, build_self_inverse, assemble
from .lagrangian import is_lagrangian, is_transposition_lagrangian

__all__ = [
    "Permutation", "PermutationError", "ReducibleError", "IET", "InductionTieError",
    "RauzyPath", "rauzy_class", "standardize", "same_class", "Signature",
    "singularity_profile", "genus", "spin_parity", "class_key", "invariants",
    "ClassKey", "NoSuchClass", "build_self_inverse", "assemble",
    "is_lagrangian", "is_transposition_lagrangian",
]
