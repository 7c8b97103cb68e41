"""Propositional semantics of a feature diagram.

A configuration (selected features true, the rest false) satisfies the
encoding exactly when it is a product of the model. The conjunct order
is fixed so that equal models encode to structurally equal formulas:
root literal, child-to-parent edges in declaration order, mandatory
implications in declaration order, group constraints in group order,
cross-tree constraints last.
"""

from itertools import combinations

from fam.core import formula as fm
from fam.core.model import MANDATORY, MUTEX, OR, XOR, FeatureModel, FlatModel


def _at_most_one(names):
    # pairwise; groups are small so the quadratic clause count is fine
    return fm.conjoin(fm.Not(fm.And(fm.Var(a), fm.Var(b)))
                      for a, b in combinations(names, 2))


def _at_least_one(names):
    return fm.disjoin(fm.Var(n) for n in names)


def _exactly_one(names):
    return fm.And(_at_least_one(names), _at_most_one(names))


def encode(model: FeatureModel) -> fm.Formula:
    parts = [fm.Var(model.root)]
    for child in model.features:
        if child != model.root:
            parts.append(fm.Implies(fm.Var(child), fm.Var(model.parent[child])))
    for child in model.features:
        if model.optionality.get(child) == MANDATORY:
            parts.append(fm.Implies(fm.Var(model.parent[child]), fm.Var(child)))
    for group in model.groups:
        parent = fm.Var(group.parent)
        if group.kind == XOR:
            parts.append(fm.Implies(parent, _exactly_one(group.members)))
        elif group.kind == OR:
            parts.append(fm.Implies(parent, _at_least_one(group.members)))
        elif group.kind == MUTEX:
            parts.append(_at_most_one(group.members))
    parts.extend(model.constraints)
    return fm.conjoin(parts)


def space_formula(space) -> fm.Formula:
    """The defining formula of either kind of space."""
    if isinstance(space, FeatureModel):
        return encode(space)
    if isinstance(space, FlatModel):
        return space.formula
    raise TypeError(f"not a model space: {space!r}")
