"""Propositional formulas over feature names.

Binary connectives only; n-ary constraints are folded into left-nested
binary trees by the builders in `encode`. Nodes are immutable and
shareable, so extraction code may reuse subtrees freely.
"""

from __future__ import annotations

from dataclasses import dataclass


class Formula:
    """Base class; concrete nodes below."""

    __slots__ = ()

    def __and__(self, other):
        return And(self, other)

    def __or__(self, other):
        return Or(self, other)

    def __invert__(self):
        return Not(self)


@dataclass(frozen=True)
class Var(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class TrueConst(Formula):
    pass


@dataclass(frozen=True)
class FalseConst(Formula):
    pass


TRUE = TrueConst()
FALSE = FalseConst()

_BINARY = {And: "&", Or: "|", Implies: "->", Iff: "<->"}

# rendering precedence: ! > & > | > -> (right-assoc) > <-> (left-assoc)
_PREC = {Iff: 0, Implies: 1, Or: 2, And: 3, Not: 4}
_ATOM_PREC = 5
_RIGHT_ASSOC = (Implies,)


def conjoin(parts):
    """Left-fold a sequence into nested Ands; empty sequence is TRUE."""
    result = None
    for part in parts:
        result = part if result is None else And(result, part)
    return TRUE if result is None else result


def disjoin(parts):
    result = None
    for part in parts:
        result = part if result is None else Or(result, part)
    return FALSE if result is None else result


def names_of(formula) -> frozenset[str]:
    """All Var names occurring in the formula."""
    out = set()
    stack = [formula]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            out.add(node.name)
        elif isinstance(node, Not):
            stack.append(node.operand)
        elif isinstance(node, (And, Or, Implies, Iff)):
            stack.append(node.left)
            stack.append(node.right)
    return frozenset(out)


def evaluate(formula, selected) -> bool:
    """Truth value under the assignment (members of `selected` true, rest false)."""
    if isinstance(formula, Var):
        return formula.name in selected
    if isinstance(formula, Not):
        return not evaluate(formula.operand, selected)
    if isinstance(formula, And):
        return evaluate(formula.left, selected) and evaluate(formula.right, selected)
    if isinstance(formula, Or):
        return evaluate(formula.left, selected) or evaluate(formula.right, selected)
    if isinstance(formula, Implies):
        return (not evaluate(formula.left, selected)) or evaluate(formula.right, selected)
    if isinstance(formula, Iff):
        return evaluate(formula.left, selected) == evaluate(formula.right, selected)
    if isinstance(formula, TrueConst):
        return True
    if isinstance(formula, FalseConst):
        return False
    raise TypeError(f"not a formula node: {formula!r}")


def rename_var(formula, old, new):
    """Fresh formula with every Var(old) replaced by Var(new)."""
    if isinstance(formula, Var):
        return Var(new) if formula.name == old else formula
    if isinstance(formula, Not):
        return Not(rename_var(formula.operand, old, new))
    if isinstance(formula, (And, Or, Implies, Iff)):
        return type(formula)(rename_var(formula.left, old, new),
                             rename_var(formula.right, old, new))
    return formula


def _prec(node):
    return _PREC.get(type(node), _ATOM_PREC)


def render(formula) -> str:
    """Canonical text: minimal parentheses, single spaces around binary ops.

    parse_formula(render(f)) reconstructs f exactly, so association that
    differs from the parser's default is parenthesized.
    """
    if isinstance(formula, Var):
        return formula.name
    if isinstance(formula, TrueConst):
        return "true"
    if isinstance(formula, FalseConst):
        return "false"
    if isinstance(formula, Not):
        inner = render(formula.operand)
        if _prec(formula.operand) < _PREC[Not]:
            inner = f"({inner})"
        return f"!{inner}"
    op = _BINARY[type(formula)]
    prec = _PREC[type(formula)]
    left = render(formula.left)
    right = render(formula.right)
    if isinstance(formula, _RIGHT_ASSOC):
        if _prec(formula.left) <= prec:
            left = f"({left})"
        if _prec(formula.right) < prec:
            right = f"({right})"
    else:
        if _prec(formula.left) < prec:
            left = f"({left})"
        if _prec(formula.right) <= prec:
            right = f"({right})"
    return f"{left} {op} {right}"
