"""Feature-model data types and their construction-time invariants."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from fam.errors import NameClash, SemanticError, UnknownFeature
from fam.core import formula as fm

MANDATORY = "mandatory"
OPTIONAL = "optional"

XOR = "xor"
OR = "or"
MUTEX = "mutex"
GROUP_KINDS = (XOR, OR, MUTEX)

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def check_name(name):
    if not isinstance(name, str) or not NAME_RE.match(name):
        raise SemanticError(f"invalid feature name {name!r}")
    return name


@dataclass(frozen=True)
class Group:
    """xor / or / mutex group of sibling features."""

    parent: str
    members: tuple[str, ...]
    kind: str

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if self.kind not in GROUP_KINDS:
            raise SemanticError(f"unknown group kind {self.kind!r}")
        if len(self.members) < 2:
            raise SemanticError(f"group under {self.parent!r} needs at least 2 members")
        if len(set(self.members)) != len(self.members):
            raise SemanticError(f"group under {self.parent!r} repeats a member")


@dataclass(frozen=True)
class Configuration:
    """A set of selected features; a product when it satisfies the model."""

    selected: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "selected", frozenset(self.selected))

    def sort_key(self):
        return tuple(sorted(self.selected))

    def render(self) -> str:
        return "{" + ", ".join(sorted(self.selected)) + "}"

    def __contains__(self, name):
        return name in self.selected

    def __iter__(self):
        return iter(sorted(self.selected))

    def __len__(self):
        return len(self.selected)


class FeatureModel:
    """Feature tree plus groups and cross-tree constraints.

    `features` keeps declaration order; it fixes the default variable
    ordering downstream. Equality is structural and ignores that order.
    Instances are immutable by convention: nothing mutates them after
    `__init__` and they are safe to share across threads.
    """

    __slots__ = ("root", "features", "parent", "optionality", "groups",
                 "constraints", "_children", "_group_of")

    def __init__(self, root, features, parent, optionality, groups=(), constraints=()):
        self.root = root
        self.features = tuple(features)
        self.parent = dict(parent)
        self.optionality = dict(optionality)
        self.groups = tuple(groups)
        self.constraints = tuple(constraints)
        self._validate()
        children = {name: [] for name in self.features}
        for name in self.features:
            if name != self.root:
                children[self.parent[name]].append(name)
        self._children = children
        group_of = {}
        for group in self.groups:
            for member in group.members:
                group_of[member] = group
        self._group_of = group_of

    def _validate(self):
        seen = set()
        for name in self.features:
            check_name(name)
            if name in seen:
                raise SemanticError(f"duplicate feature {name!r}")
            seen.add(name)
        if self.root not in seen:
            raise SemanticError(f"root {self.root!r} is not among the features")
        if self.root in self.parent:
            raise SemanticError(f"root {self.root!r} must not have a parent")
        for child, parent in self.parent.items():
            if child not in seen:
                raise SemanticError(f"parent map mentions unknown feature {child!r}")
            if parent not in seen:
                raise SemanticError(f"{child!r} has unknown parent {parent!r}")
        for name in self.features:
            if name != self.root and name not in self.parent:
                raise SemanticError(f"feature {name!r} has no parent")
        # reachability from the root doubles as the cycle check
        reached = {self.root}
        frontier = [self.root]
        children = {}
        for child, parent in self.parent.items():
            children.setdefault(parent, []).append(child)
        while frontier:
            for child in children.get(frontier.pop(), ()):
                if child not in reached:
                    reached.add(child)
                    frontier.append(child)
        unreachable = [f for f in self.features if f not in reached]
        if unreachable:
            raise SemanticError(f"features not reachable from the root: {unreachable}")

        grouped = set()
        for group in self.groups:
            if group.parent not in seen:
                raise SemanticError(f"group parent {group.parent!r} is unknown")
            for member in group.members:
                if self.parent.get(member) != group.parent:
                    raise SemanticError(
                        f"group member {member!r} is not a child of {group.parent!r}")
                if member in grouped:
                    raise SemanticError(f"feature {member!r} is in more than one group")
                grouped.add(member)
        for name, mark in self.optionality.items():
            if name not in seen or name == self.root:
                raise SemanticError(f"optionality mark on invalid feature {name!r}")
            if name in grouped:
                raise SemanticError(f"group member {name!r} must not carry an optionality mark")
            if mark not in (MANDATORY, OPTIONAL):
                raise SemanticError(f"bad optionality {mark!r} for {name!r}")
        for name in self.features:
            if name != self.root and name not in grouped and name not in self.optionality:
                raise SemanticError(f"feature {name!r} lacks an optionality mark")
        for constraint in self.constraints:
            for name in fm.names_of(constraint):
                if name not in seen:
                    raise SemanticError(f"constraint mentions unknown feature {name!r}")

    # -- structure queries -------------------------------------------------

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.features

    def children(self, name) -> tuple[str, ...]:
        return tuple(self._children[name])

    def group_of(self, name):
        return self._group_of.get(name)

    def preorder(self):
        """Features in depth-first pre-order, children in declaration order."""
        out = []
        stack = [self.root]
        while stack:
            name = stack.pop()
            out.append(name)
            stack.extend(reversed(self._children[name]))
        return tuple(out)

    def elements(self, name):
        """Children of `name` as render elements, groups folded in place.

        Yields ("feature", child) for plain children and ("group", Group)
        at the position of each group's first member.
        """
        for child in self._children[name]:
            group = self._group_of.get(child)
            if group is None:
                yield ("feature", child)
            elif group.members[0] == child:
                yield ("group", group)

    # -- equality ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FeatureModel):
            return NotImplemented
        return (self.root == other.root
                and set(self.features) == set(other.features)
                and self.parent == other.parent
                and self.optionality == other.optionality
                and set(self.groups) == set(other.groups)
                and self.constraints == other.constraints)

    __hash__ = None

    def __repr__(self):
        return f"FeatureModel(root={self.root!r}, {len(self.features)} features)"

    # -- derived models ----------------------------------------------------

    def rename(self, old, new):
        """Fresh model with `old` renamed to `new` everywhere."""
        if old not in self._children:
            raise UnknownFeature(old)
        check_name(new)
        if new in self._children:
            raise NameClash(new)

        swap = lambda name: new if name == old else name
        return FeatureModel(
            root=swap(self.root),
            features=tuple(swap(f) for f in self.features),
            parent={swap(c): swap(p) for c, p in self.parent.items()},
            optionality={swap(f): mark for f, mark in self.optionality.items()},
            groups=tuple(
                Group(swap(g.parent), tuple(swap(m) for m in g.members), g.kind)
                for g in self.groups),
            constraints=tuple(fm.rename_var(c, old, new) for c in self.constraints),
        )


@dataclass(frozen=True)
class FlatModel:
    """Alphabet plus one formula; the closed form for slice/merge results."""

    alphabet: tuple[str, ...]
    formula: fm.Formula = field(default_factory=lambda: fm.TRUE)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        seen = set()
        for name in self.alphabet:
            check_name(name)
            if name in seen:
                raise SemanticError(f"duplicate feature {name!r}")
            seen.add(name)
        for name in fm.names_of(self.formula):
            if name not in seen:
                raise SemanticError(f"formula mentions unknown feature {name!r}")


def alphabet_of(space) -> tuple[str, ...]:
    """Ordered alphabet of a FeatureModel or FlatModel."""
    if isinstance(space, (FeatureModel, FlatModel)):
        return space.alphabet
    raise TypeError(f"not a model space: {space!r}")
