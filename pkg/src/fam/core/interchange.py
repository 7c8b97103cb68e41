"""Lossless JSON interchange documents for feature models.

Keys: root, features[], edges[] (child/parent/optionality), groups[]
(parent/kind/members[]), constraints[] (canonical formula strings).
Group members carry optionality "group"; their presence is governed by
the group alone. features[] order is preserved, so round trips keep the
declaration order exactly.
"""

import json

from fam.core import formula as fm
from fam.core.model import GROUP_KINDS, MANDATORY, OPTIONAL, FeatureModel, Group
from fam.core.text import parse_formula
from fam.errors import ParseError, SchemaError

GROUPED = "group"


def to_interchange(model: FeatureModel) -> dict:
    edges = []
    for child in model.features:
        if child == model.root:
            continue
        mark = GROUPED if model.group_of(child) else model.optionality[child]
        edges.append({"child": child, "parent": model.parent[child], "optionality": mark})
    return {
        "root": model.root,
        "features": list(model.features),
        "edges": edges,
        "groups": [
            {"parent": g.parent, "kind": g.kind, "members": list(g.members)}
            for g in model.groups
        ],
        "constraints": [fm.render(c) for c in model.constraints],
    }


def dumps(model: FeatureModel) -> str:
    return json.dumps(to_interchange(model), indent=2) + "\n"


def _require(doc, key, kind):
    if key not in doc:
        raise SchemaError(f"document missing {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise SchemaError(f"{key!r} must be a {kind.__name__}")
    return value


def _str_items(seq, where):
    for item in seq:
        if not isinstance(item, str):
            raise SchemaError(f"{where} entries must be strings")
    return seq


def from_interchange(document) -> FeatureModel:
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise SchemaError("document must be an object")

    root = _require(document, "root", str)
    features = _str_items(_require(document, "features", list), "features")

    parent = {}
    optionality = {}
    grouped_marks = set()
    for edge in _require(document, "edges", list):
        if not isinstance(edge, dict):
            raise SchemaError("edges entries must be objects")
        child = _require(edge, "child", str)
        if child in parent:
            raise SchemaError(f"two edges for feature {child!r}")
        parent[child] = _require(edge, "parent", str)
        mark = _require(edge, "optionality", str)
        if mark in (MANDATORY, OPTIONAL):
            optionality[child] = mark
        elif mark == GROUPED:
            grouped_marks.add(child)
        else:
            raise SchemaError(f"bad optionality {mark!r} for {child!r}")

    groups = []
    grouped = set()
    for entry in _require(document, "groups", list):
        if not isinstance(entry, dict):
            raise SchemaError("groups entries must be objects")
        kind = _require(entry, "kind", str)
        if kind not in GROUP_KINDS:
            raise SchemaError(f"unknown group kind {kind!r}")
        members = _str_items(_require(entry, "members", list), "members")
        groups.append(Group(_require(entry, "parent", str), tuple(members), kind))
        grouped.update(members)
    if grouped != grouped_marks:
        raise SchemaError("edge optionality marks disagree with group membership")

    constraints = []
    for text in _str_items(_require(document, "constraints", list), "constraints"):
        try:
            constraints.append(parse_formula(text))
        except ParseError as exc:
            raise SchemaError(f"bad constraint {text!r}: {exc}") from exc

    return FeatureModel(root, features, parent, optionality, groups, constraints)
