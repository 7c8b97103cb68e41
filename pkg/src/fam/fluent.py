"""Fluent model-analysis surface embedded in Python.

Every call on a handle routes through the same evaluator the scripting
language uses, so both shapes render results byte for byte the same.
A context runs in one of two modes:

* ``execute``: each call is evaluated immediately; handles carry the
  resulting value.
* ``record``: nothing is computed; each call appends one assignment to
  the context's script, ready for :func:`extract_script`.

Either way a call allocates a fresh name (v1, v2, ...) and the handle's
provenance is a variable reference to it, so chains recorded in one
mode replay identically in the other.
"""

import io

from fam.errors import ArityError, MixedContext, WrongMode
from fam.lang import ast
from fam.lang.interp import Environment, Interpreter
from fam.lang.values import ConfigListValue, FeatureSetValue, StrValue
from fam.reasoner import SDIFF, SINTER, SUNION, configs as _configs_of

EXECUTE = "execute"
RECORD = "record"

__all__ = [
    "EXECUTE", "RECORD", "SUNION", "SINTER", "SDIFF",
    "FluentContext", "FluentValue", "FluentModel", "FluentCount",
    "FluentBool", "FluentStr", "FluentConfigList", "FluentFeatureSet",
    "load", "merge", "extract_script",
]


class FluentContext:
    """Name supply plus either an evaluator or a recorded script."""

    def __init__(self, mode: str = EXECUTE):
        if mode not in (EXECUTE, RECORD):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.recorded: list = []
        self._counter = 0
        self._env = Environment()
        self._interp = Interpreter(out=io.StringIO(), echo=False)

    def load(self, text: str) -> "FluentModel":
        return self._apply(ast.FmLiteral(text), FluentModel)

    def extract_script(self) -> list:
        if self.mode != RECORD:
            raise WrongMode("extract_script needs a record-mode context")
        return list(self.recorded)

    # -- plumbing ------------------------------------------------------------

    def _fresh(self) -> str:
        self._counter += 1
        return f"v{self._counter}"

    def _apply(self, expr, cls=None) -> "FluentValue":
        """Assign ``expr`` to a fresh name; evaluate or record it."""
        name = self._fresh()
        stmt = ast.Assign(name, expr)
        if self.mode == RECORD:
            self.recorded.append(stmt)
            return _wrap(self, name, None, cls)
        value = self._interp.exec_stmt(stmt, self._env)
        return _wrap(self, name, value, cls)

    def _adopt(self, value, cls=None) -> "FluentValue":
        # bind an already-computed value (e.g. an iteration item) so the
        # handle still has a name other calls can reference
        name = self._fresh()
        self._env.bind(name, value)
        return _wrap(self, name, value, cls)

    def _operand(self, handle: "FluentValue"):
        if handle.ctx is not self:
            raise MixedContext("operands come from different contexts")
        return handle.expr

    def _lift(self, arg):
        """Expression for a handle or a plain Python literal."""
        if isinstance(arg, FluentValue):
            return self._operand(arg)
        if isinstance(arg, bool):
            return ast.BoolLit(arg)
        if isinstance(arg, int):
            return ast.IntLit(arg)
        if isinstance(arg, str):
            return ast.StrLit(arg)
        raise TypeError(f"cannot use {type(arg).__name__} as an operand")

    def _name_arg(self, arg) -> str:
        """Feature-name argument: a literal string or a bound handle."""
        if isinstance(arg, FluentValue):
            self._operand(arg)
            return arg.name
        if isinstance(arg, str):
            return arg
        raise TypeError(f"feature name must be a string, not "
                        f"{type(arg).__name__}")


class FluentValue:
    """Immutable handle: context, assigned name, value (execute only)."""

    __slots__ = ("ctx", "name", "value")

    def __init__(self, ctx: FluentContext, name: str, value):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "value", value)

    def __setattr__(self, attr, _value):
        raise AttributeError(f"handles are immutable, cannot set {attr!r}")

    @property
    def expr(self):
        return ast.Var(self.name)

    def __repr__(self):
        shown = "recorded" if self.value is None else self.value.render()
        return f"<{type(self).__name__} {self.name} = {shown}>"

    # Operators build the same syntax tree the parser would, then run it
    # through the shared evaluator (or record it).

    def _binary(self, op, other, reflected=False):
        try:
            rhs = self.ctx._lift(other)
        except TypeError:
            return NotImplemented
        lhs = self.ctx._operand(self)
        if reflected:
            lhs, rhs = rhs, lhs
        return self.ctx._apply(ast.Binary(op, lhs, rhs))

    def __eq__(self, other):
        return self._binary("==", other)

    def __ne__(self, other):
        return self._binary("!=", other)

    __hash__ = None

    def __lt__(self, other):
        return self._binary("<", other)

    def __le__(self, other):
        return self._binary("<=", other)

    def __gt__(self, other):
        return self._binary(">", other)

    def __ge__(self, other):
        return self._binary(">=", other)

    def __add__(self, other):
        return self._binary("+", other)

    def __radd__(self, other):
        return self._binary("+", other, reflected=True)

    def __sub__(self, other):
        return self._binary("-", other)

    def __rsub__(self, other):
        return self._binary("-", other, reflected=True)

    def __and__(self, other):
        return self._binary("&&", other)

    def __rand__(self, other):
        return self._binary("&&", other, reflected=True)

    def __or__(self, other):
        return self._binary("||", other)

    def __ror__(self, other):
        return self._binary("||", other, reflected=True)

    def __invert__(self):
        return self.ctx._apply(ast.Unary("!", self.ctx._operand(self)))

    def __neg__(self):
        return self.ctx._apply(ast.Unary("-", self.ctx._operand(self)))


class FluentModel(FluentValue):

    def counting(self) -> "FluentCount":
        return self.ctx._apply(ast.Counting(self.expr), FluentCount)

    def isValid(self) -> "FluentBool":
        return self.ctx._apply(ast.IsValid(self.expr), FluentBool)

    def cores(self) -> "FluentFeatureSet":
        return self.ctx._apply(ast.Cores(self.expr), FluentFeatureSet)

    def deads(self) -> "FluentFeatureSet":
        return self.ctx._apply(ast.Deads(self.expr), FluentFeatureSet)

    def features(self) -> "FluentFeatureSet":
        return self.ctx._apply(ast.Features(self.expr), FluentFeatureSet)

    def configs(self, limit=None) -> "FluentConfigList":
        if limit is not None and self.ctx.mode == EXECUTE:
            value = ConfigListValue(tuple(_configs_of(self.value.space,
                                                      limit)))
            return self.ctx._adopt(value, FluentConfigList)
        # the script form has no limit slot, so a recorded call keeps the
        # default bound
        return self.ctx._apply(ast.Configs(self.expr), FluentConfigList)

    def rename(self, old, new) -> "FluentModel":
        node = ast.Rename(self.expr, self.ctx._name_arg(old),
                          self.ctx._name_arg(new))
        return self.ctx._apply(node, FluentModel)

    def slice(self) -> "SliceBuilder":
        return SliceBuilder(self)


class FluentCount(FluentValue):
    pass


class FluentBool(FluentValue):

    def __bool__(self):
        if self.ctx.mode == RECORD:
            raise WrongMode("cannot branch on a recorded value")
        return self.value.value


class FluentStr(FluentValue):
    pass


class FluentConfigList(FluentValue):

    def __iter__(self):
        if self.ctx.mode == RECORD:
            raise WrongMode("cannot iterate a recorded value")
        for config in self.value.configs:
            item = FeatureSetValue(tuple(sorted(config.selected)))
            yield self.ctx._adopt(item, FluentFeatureSet)

    def __len__(self):
        if self.ctx.mode == RECORD:
            raise WrongMode("cannot measure a recorded value")
        return len(self.value)


class FluentFeatureSet(FluentValue):

    def __iter__(self):
        if self.ctx.mode == RECORD:
            raise WrongMode("cannot iterate a recorded value")
        for name in self.value.names:
            yield self.ctx._adopt(StrValue(name), FluentStr)

    def __len__(self):
        if self.ctx.mode == RECORD:
            raise WrongMode("cannot measure a recorded value")
        return len(self.value)


class SliceBuilder:
    """Intermediate step of ``m.slice().including(...)``."""

    __slots__ = ("_model",)

    def __init__(self, model: FluentModel):
        self._model = model

    def including(self, names) -> FluentModel:
        return self._finish("including", names)

    def excluding(self, names) -> FluentModel:
        return self._finish("excluding", names)

    def _finish(self, mode, names):
        ctx = self._model.ctx
        if isinstance(names, (str, FluentValue)):
            names = [names]
        elif isinstance(names, (set, frozenset)):
            names = sorted(names, key=lambda n: n.name
                           if isinstance(n, FluentValue) else n)
        picked = tuple(ctx._name_arg(n) for n in names)
        node = ast.Slice(self._model.expr, mode, picked)
        return ctx._apply(node, FluentModel)


class MergeBuilder:
    """Accumulates ``merge(mode).with_(m1).with_(m2)...`` operands."""

    __slots__ = ("_mode", "_operands")

    def __init__(self, mode: str, operands=()):
        self._mode = mode
        self._operands = tuple(operands)

    def with_(self, model: FluentModel) -> "MergeBuilder":
        return MergeBuilder(self._mode, self._operands + (model,))

    def get(self) -> FluentModel:
        if len(self._operands) < 2:
            raise ArityError(f"merge {self._mode} takes at least 2 operands, "
                             f"got {len(self._operands)}")
        ctx = self._operands[0].ctx
        node = ast.Merge(self._mode,
                         tuple(ctx._operand(m) for m in self._operands))
        return ctx._apply(node, FluentModel)


def load(ctx: FluentContext, text: str) -> FluentModel:
    return ctx.load(text)


def merge(mode: str) -> MergeBuilder:
    if mode not in (SUNION, SINTER, SDIFF):
        raise ValueError(f"unknown merge mode {mode!r}")
    return MergeBuilder(mode)


def extract_script(ctx: FluentContext) -> list:
    return ctx.extract_script()


_TAG_CLASSES = {
    "model": FluentModel,
    "int": FluentCount,
    "bool": FluentBool,
    "str": FluentStr,
    "configs": FluentConfigList,
    "features": FluentFeatureSet,
}


def _wrap(ctx, name, value, cls):
    if value is not None:
        cls = _TAG_CLASSES.get(value.tag, FluentValue)
    elif cls is None:
        cls = FluentValue
    return cls(ctx, name, value)
