"""Seeded random feature models for the property suites.

Shapes follow the desk-scale profile the suites exercise: small trees,
a handful of groups, a few binary cross-tree constraints. Generation is
deterministic for a given Random instance.
"""

from fam.core import formula as fm
from fam.core.model import (
    MANDATORY,
    MUTEX,
    OPTIONAL,
    OR,
    XOR,
    FeatureModel,
    Group,
)

GROUP_KINDS = (XOR, OR, MUTEX)


def random_model(rng, max_features=12, name_pool=None,
                 max_groups_per_kind=2, max_constraints=3):
    n = rng.randint(1, max_features)
    if name_pool is None:
        names = [f"F{i}" for i in range(1, n + 1)]
    else:
        names = rng.sample(name_pool, n)
    root = names[0]
    parent = {names[i]: names[rng.randrange(i)] for i in range(1, n)}

    children = {name: [] for name in names}
    for child in names[1:]:
        children[parent[child]].append(child)

    groups = []
    grouped = set()
    for kind in GROUP_KINDS:
        for _ in range(rng.randint(0, max_groups_per_kind)):
            candidates = [p for p in names
                          if len([c for c in children[p] if c not in grouped]) >= 2]
            if not candidates:
                break
            p = rng.choice(candidates)
            free = [c for c in children[p] if c not in grouped]
            picked = set(rng.sample(free, rng.randint(2, len(free))))
            members = [c for c in children[p] if c in picked]
            groups.append(Group(p, tuple(members), kind))
            grouped.update(members)

    optionality = {name: rng.choice((MANDATORY, OPTIONAL))
                   for name in names[1:] if name not in grouped}

    constraints = []
    if n >= 2:
        for _ in range(rng.randint(0, max_constraints)):
            a, b = rng.sample(names, 2)
            shape = rng.randrange(4)
            if shape == 0:
                constraints.append(fm.Implies(fm.Var(a), fm.Var(b)))
            elif shape == 1:
                constraints.append(fm.Implies(fm.Var(a), fm.Not(fm.Var(b))))
            elif shape == 2:
                constraints.append(fm.Or(fm.Var(a), fm.Var(b)))
            else:
                constraints.append(fm.Iff(fm.Var(a), fm.Var(b)))

    return FeatureModel(root, names, parent, optionality,
                        tuple(groups), tuple(constraints))


def random_model_pair(rng, max_features=10, pool_size=10):
    """Two models over one shared name pool, so alphabets overlap."""
    pool = [f"F{i}" for i in range(1, pool_size + 1)]
    return (random_model(rng, max_features, name_pool=pool),
            random_model(rng, max_features, name_pool=pool))


def random_decisions(rng, model, count=3):
    """Up to `count` distinct user decisions over the model's features."""
    names = rng.sample(model.features, min(count, len(model.features)))
    return {name: rng.random() < 0.5 for name in names}
