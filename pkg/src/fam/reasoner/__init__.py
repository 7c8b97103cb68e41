"""Diagram-backed reasoning: counting, validity, propagation, slice, merge."""

from fam.reasoner.analysis import (
    DESELECTED,
    EXCLUDING,
    INCLUDING,
    INITIAL,
    PROPAGATED,
    SDIFF,
    SELECTED,
    SINTER,
    SUNION,
    UNDECIDED,
    USER,
    TriState,
    build,
    configs,
    cores,
    counting,
    deads,
    is_valid,
    merge,
    propagate,
    slice_model,
)
from fam.reasoner.bdd import Bdd, ordering_of
from fam.reasoner.kernel import IMPLEMENTATION, available_kernels

__all__ = [
    "Bdd",
    "DESELECTED",
    "EXCLUDING",
    "IMPLEMENTATION",
    "INCLUDING",
    "INITIAL",
    "PROPAGATED",
    "SDIFF",
    "SELECTED",
    "SINTER",
    "SUNION",
    "TriState",
    "UNDECIDED",
    "USER",
    "available_kernels",
    "build",
    "configs",
    "cores",
    "counting",
    "deads",
    "is_valid",
    "merge",
    "ordering_of",
    "propagate",
    "slice_model",
]
