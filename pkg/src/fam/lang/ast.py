"""Pivot syntax tree shared by the parser, the emitters, and the recorder.

Equality is structural and ignores spans, so round-trip tests compare
trees directly. Node class names double as template keys in dialect
files; the shape variants (Run/RunWith, If/IfElse) are picked by the
emitter from the optional fields.
"""

from dataclasses import dataclass, field

from fam.errors import Span


def _span_field():
    return field(default=None, compare=False, repr=False)


# -- expressions -----------------------------------------------------------


@dataclass(frozen=True)
class FmLiteral:
    text: str
    span: Span = _span_field()


@dataclass(frozen=True)
class Var:
    name: str
    span: Span = _span_field()


@dataclass(frozen=True)
class IntLit:
    value: int
    span: Span = _span_field()


@dataclass(frozen=True)
class StrLit:
    value: str
    span: Span = _span_field()


@dataclass(frozen=True)
class BoolLit:
    value: bool
    span: Span = _span_field()


@dataclass(frozen=True)
class Counting:
    operand: object
    span: Span = _span_field()


@dataclass(frozen=True)
class IsValid:
    operand: object
    span: Span = _span_field()


@dataclass(frozen=True)
class Configs:
    operand: object
    span: Span = _span_field()


@dataclass(frozen=True)
class Cores:
    operand: object
    span: Span = _span_field()


@dataclass(frozen=True)
class Deads:
    operand: object
    span: Span = _span_field()


@dataclass(frozen=True)
class Features:
    operand: object
    span: Span = _span_field()


@dataclass(frozen=True)
class Merge:
    mode: str
    operands: tuple
    span: Span = _span_field()


@dataclass(frozen=True)
class Slice:
    operand: object
    mode: str
    names: tuple
    span: Span = _span_field()


@dataclass(frozen=True)
class Rename:
    operand: object
    old: str
    new: str
    span: Span = _span_field()


@dataclass(frozen=True)
class Run:
    path: str
    args: tuple = ()
    span: Span = _span_field()


@dataclass(frozen=True)
class Binary:
    op: str
    left: object
    right: object
    span: Span = _span_field()


@dataclass(frozen=True)
class Unary:
    op: str
    operand: object
    span: Span = _span_field()


# -- statements ------------------------------------------------------------


@dataclass(frozen=True)
class Assign:
    name: str
    value: object
    span: Span = _span_field()


@dataclass(frozen=True)
class ExprStmt:
    value: object
    span: Span = _span_field()


@dataclass(frozen=True)
class Foreach:
    var: str
    source: object
    body: tuple
    span: Span = _span_field()


@dataclass(frozen=True)
class If:
    cond: object
    then: tuple
    orelse: tuple = ()
    span: Span = _span_field()


EXPR_KINDS = (FmLiteral, Var, IntLit, StrLit, BoolLit, Counting, IsValid,
              Configs, Cores, Deads, Features, Merge, Slice, Rename, Run,
              Binary, Unary)
STMT_KINDS = (Assign, ExprStmt, Foreach, If)
