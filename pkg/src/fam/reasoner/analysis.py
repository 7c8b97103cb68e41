"""Semantic analyses over feature spaces.

Every operation builds a fresh diagram for its input, runs entirely off
that diagram, and returns plain immutable values. Slice and merge close
over FlatModel so their results feed back into any other operation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from fam import settings
from fam.core import formula as fm
from fam.core.encode import space_formula
from fam.core.model import Configuration, FlatModel, alphabet_of
from fam.errors import ArityError, InvalidModel, LimitExceeded, UnknownFeature
from fam.reasoner.bdd import FALSE, Bdd

SELECTED = "selected"
DESELECTED = "deselected"
UNDECIDED = "undecided"

USER = "user"
PROPAGATED = "propagated"
INITIAL = "initial"

INCLUDING = "including"
EXCLUDING = "excluding"

SUNION = "sunion"
SINTER = "sinter"
SDIFF = "sdiff"


@dataclass
class TriState:
    """Per-feature decision state: status plus where the status came from."""

    status: dict[str, str]
    origin: dict[str, str]
    conflict: bool = field(default=False)

    @classmethod
    def initial(cls, alphabet) -> "TriState":
        names = tuple(alphabet)
        return cls({n: UNDECIDED for n in names}, {n: INITIAL for n in names})

    @classmethod
    def from_decisions(cls, alphabet, decisions) -> "TriState":
        state = cls.initial(alphabet)
        for name, value in decisions.items():
            if name not in state.status:
                raise UnknownFeature(name)
            state.status[name] = SELECTED if value else DESELECTED
            state.origin[name] = USER
        return state

    def user_decisions(self) -> dict[str, bool]:
        return {name: status == SELECTED
                for name, status in self.status.items()
                if self.origin[name] == USER and status != UNDECIDED}

    def with_conflict(self) -> "TriState":
        return TriState(dict(self.status), dict(self.origin), True)


def build(space, *, max_nodes=None) -> Bdd:
    return Bdd.for_space(space, max_nodes=max_nodes)


def counting(space) -> int:
    return build(space).sat_count()


def is_valid(space) -> bool:
    return build(space).root != FALSE


def _backbone(space, forced_value):
    bdd = build(space)
    if bdd.root == FALSE:
        raise InvalidModel("no configurations")
    names = []
    for name in alphabet_of(space):
        if bdd.restrict(bdd.root, {name: forced_value}) == FALSE:
            names.append(name)
    return tuple(names)


def cores(space) -> tuple[str, ...]:
    """Features selected in every configuration, in alphabet order."""
    return _backbone(space, False)


def deads(space) -> tuple[str, ...]:
    """Features selected in no configuration, in alphabet order."""
    return _backbone(space, True)


def propagate(space, decisions: TriState) -> TriState:
    """Close user decisions under the model's constraints.

    User decisions come through verbatim; every other feature is forced
    to the only value the remaining configurations allow, or left
    undecided. A contradictory decision set returns the input with the
    conflict flag raised.
    """
    alphabet = alphabet_of(space)
    user = decisions.user_decisions()
    for name in user:
        if name not in alphabet:
            raise UnknownFeature(name)
    bdd = build(space)
    remaining = bdd.restrict(bdd.root, user)
    if remaining == FALSE:
        return decisions.with_conflict()
    result = TriState.initial(alphabet)
    for name, value in user.items():
        result.status[name] = SELECTED if value else DESELECTED
        result.origin[name] = USER
    for name in alphabet:
        if name in user:
            continue
        if bdd.restrict(remaining, {name: True}) == FALSE:
            result.status[name] = DESELECTED
            result.origin[name] = PROPAGATED
        elif bdd.restrict(remaining, {name: False}) == FALSE:
            result.status[name] = SELECTED
            result.origin[name] = PROPAGATED
    return result


def slice_model(space, mode, names) -> FlatModel:
    """Project the configuration set onto a feature subset."""
    if mode not in (INCLUDING, EXCLUDING):
        raise ValueError(f"unknown slice mode: {mode!r}")
    alphabet = alphabet_of(space)
    chosen = set()
    for name in names:
        if name not in alphabet:
            raise UnknownFeature(name)
        chosen.add(name)
    if mode == INCLUDING:
        kept = tuple(a for a in alphabet if a in chosen)
    else:
        kept = tuple(a for a in alphabet if a not in chosen)
    dropped = [a for a in alphabet if a not in kept]
    bdd = build(space)
    node = bdd.exists(bdd.root, dropped)
    return FlatModel(kept, bdd.extract_formula(node))


def merge(mode, spaces) -> FlatModel:
    """Combine configuration sets: sunion, sinter, or sdiff.

    Operand sets are lifted to the union alphabet first: a feature a
    model never mentions is deselected in all of its configurations.
    """
    if mode not in (SUNION, SINTER, SDIFF):
        raise ValueError(f"unknown merge mode: {mode!r}")
    spaces = list(spaces)
    if mode == SDIFF and len(spaces) != 2:
        raise ArityError(f"sdiff takes exactly 2 operands, got {len(spaces)}")
    if len(spaces) < 2:
        raise ArityError(f"merge takes at least 2 operands, got {len(spaces)}")
    union: list[str] = []
    seen = set()
    for space in spaces:
        for name in alphabet_of(space):
            if name not in seen:
                seen.add(name)
                union.append(name)

    def lift(space):
        absent = [fm.Not(fm.Var(a)) for a in union if a not in set(alphabet_of(space))]
        return fm.conjoin([space_formula(space), *absent])

    lifted = [lift(space) for space in spaces]
    if mode == SUNION:
        combined = fm.disjoin(lifted)
    elif mode == SINTER:
        combined = fm.conjoin(lifted)
    else:
        combined = fm.And(lifted[0], fm.Not(lifted[1]))
    return FlatModel(tuple(union), combined)


def configs(space, limit=None) -> list[Configuration]:
    """All configurations, lexicographic; refuses to enumerate past limit."""
    bound = settings.max_enum() if limit is None else limit
    bdd = build(space)
    count = bdd.sat_count()
    if count > bound:
        raise LimitExceeded(count, bound)
    return bdd.configurations(bdd.root)
