"""Feature-model types, semantics, formats, and the enumeration oracle."""

from fam.core.encode import encode, space_formula
from fam.core.interchange import from_interchange, to_interchange
from fam.core.model import (MANDATORY, MUTEX, OPTIONAL, OR, XOR,
                            Configuration, FeatureModel, FlatModel, Group,
                            alphabet_of)
from fam.core.oracle import enumerate_space, satisfying_count
from fam.core.text import parse_fm, parse_formula, render_fm

__all__ = [
    "Configuration", "FeatureModel", "FlatModel", "Group",
    "MANDATORY", "OPTIONAL", "XOR", "OR", "MUTEX",
    "alphabet_of", "encode", "space_formula",
    "enumerate_space", "satisfying_count",
    "parse_fm", "parse_formula", "render_fm",
    "to_interchange", "from_interchange",
]
