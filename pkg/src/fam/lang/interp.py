"""Tree-walking evaluator for the scripting language.

One Interpreter serves one session (a file run or a REPL); it is
single-threaded by design. Evaluation is deterministic: the same
script over the same environment produces the same values and the
same output bytes.
"""

import os
import sys

from fam.core import formula as fm
from fam.core.model import FeatureModel, FlatModel, alphabet_of, check_name
from fam.core.text import parse_fm
from fam.errors import (
    EvalError,
    EvalTypeError,
    FamError,
    IoError,
    NameClash,
    ParseError,
    Span,
    UnboundVariable,
    UnknownFeature,
)
from fam.lang import ast
from fam.lang.parser import parse_script
from fam.lang.values import (
    UNIT,
    BoolValue,
    ConfigListValue,
    FeatureSetValue,
    IntValue,
    ModelValue,
    StrValue,
)
from fam.reasoner import analysis

_DISPLAY = {"model": "Model", "int": "Int", "bool": "Bool", "str": "Str",
            "configs": "ConfigList", "features": "FeatureSet", "unit": "Unit"}


def _shown(value):
    return _DISPLAY[value.tag]


class Environment:
    """Name → Value map with lexical child scopes.

    Lookup walks the chain innermost-first. Assignment always lands on
    the nearest enclosing script scope: foreach scopes hold only their
    loop variable, run scopes are scripts of their own.
    """

    def __init__(self, parent=None, script=True):
        self.bindings = {}
        self.parent = parent
        self.script = script

    def get(self, name):
        env = self
        while env is not None:
            if name in env.bindings:
                return env.bindings[name]
            env = env.parent
        return None

    def bind(self, name, value):
        self.bindings[name] = value

    def assign(self, name, value):
        env = self
        while not env.script:
            env = env.parent
        env.bindings[name] = value

    def visible(self):
        out = {}
        chain = []
        env = self
        while env is not None:
            chain.append(env)
            env = env.parent
        for env in reversed(chain):
            out.update(env.bindings)
        return out


def _relocate(span, base):
    """Map a span inside an FM literal to script coordinates."""
    if base is None:
        return span
    if span is None:
        return base
    if span.line == 1:
        line, column = base.line, base.column + span.column - 1
    else:
        line, column = base.line + span.line - 1, span.column
    if span.end_line == 1:
        end_line, end_column = base.line, base.column + span.end_column - 1
    else:
        end_line, end_column = base.line + span.end_line - 1, span.end_column
    return Span(line, column, end_line, end_column)


class Interpreter:

    def __init__(self, out=None, base_dir=None, echo=True):
        self.out = out if out is not None else sys.stdout
        self.echo = echo
        self.dir_stack = [base_dir or os.getcwd()]

    # -- statements ----------------------------------------------------------

    def run_script(self, stmts, env):
        result = UNIT
        for stmt in stmts:
            result = self.exec_stmt(stmt, env)
        return result

    def exec_stmt(self, stmt, env):
        if isinstance(stmt, ast.Assign):
            value = self.eval(stmt.value, env)
            env.assign(stmt.name, value)
            return value
        if isinstance(stmt, ast.ExprStmt):
            value = self.eval(stmt.value, env)
            if self.echo and value is not UNIT:
                self.out.write(value.render() + "\n")
            return value
        if isinstance(stmt, ast.Foreach):
            self._foreach(stmt, env)
            return UNIT
        if isinstance(stmt, ast.If):
            cond = self.eval(stmt.cond, env)
            if not isinstance(cond, BoolValue):
                raise EvalTypeError("Bool", _shown(cond), stmt.cond.span)
            branch = stmt.then if cond.value else stmt.orelse
            for inner in branch:
                self.exec_stmt(inner, env)
            return UNIT
        raise TypeError(f"not a statement: {stmt!r}")

    def _foreach(self, stmt, env):
        source = self.eval(stmt.source, env)
        if isinstance(source, ConfigListValue):
            items = [FeatureSetValue(tuple(sorted(c.selected)))
                     for c in source.configs]
        elif isinstance(source, FeatureSetValue):
            items = [StrValue(name) for name in source.names]
        else:
            raise EvalTypeError("ConfigList or FeatureSet", _shown(source),
                                stmt.source.span)
        scope = Environment(parent=env, script=False)
        for item in items:
            scope.bind(stmt.var, item)
            for inner in stmt.body:
                self.exec_stmt(inner, scope)

    # -- expressions -----------------------------------------------------------

    def eval(self, node, env):
        method = getattr(self, "_eval_" + type(node).__name__)
        return method(node, env)

    def _reasoner(self, node, call):
        try:
            return call()
        except FamError as error:
            if getattr(error, "span", None) is None:
                error.span = node.span
            raise

    def _model_of(self, node, env):
        value = self.eval(node, env)
        if not isinstance(value, ModelValue):
            raise EvalTypeError("Model", _shown(value), node.span)
        return value.space

    def _feature_name(self, name, env):
        # an identifier argument names a feature literally, unless it is
        # a variable holding a string (the foreach-over-features idiom)
        bound = env.get(name)
        if isinstance(bound, StrValue):
            return bound.value
        return name

    def _eval_FmLiteral(self, node, env):
        try:
            return ModelValue(parse_fm(node.text))
        except FamError as error:
            error.span = _relocate(getattr(error, "span", None), node.span)
            raise

    def _eval_Var(self, node, env):
        value = env.get(node.name)
        if value is None:
            raise UnboundVariable(node.name, node.span)
        return value

    def _eval_IntLit(self, node, env):
        return IntValue(node.value)

    def _eval_StrLit(self, node, env):
        return StrValue(node.value)

    def _eval_BoolLit(self, node, env):
        return BoolValue(node.value)

    def _eval_Counting(self, node, env):
        space = self._model_of(node.operand, env)
        return self._reasoner(node, lambda: IntValue(analysis.counting(space)))

    def _eval_IsValid(self, node, env):
        space = self._model_of(node.operand, env)
        return self._reasoner(node, lambda: BoolValue(analysis.is_valid(space)))

    def _eval_Configs(self, node, env):
        space = self._model_of(node.operand, env)
        return self._reasoner(
            node, lambda: ConfigListValue(tuple(analysis.configs(space))))

    def _eval_Cores(self, node, env):
        space = self._model_of(node.operand, env)
        return self._reasoner(node, lambda: FeatureSetValue(analysis.cores(space)))

    def _eval_Deads(self, node, env):
        space = self._model_of(node.operand, env)
        return self._reasoner(node, lambda: FeatureSetValue(analysis.deads(space)))

    def _eval_Features(self, node, env):
        space = self._model_of(node.operand, env)
        return FeatureSetValue(alphabet_of(space))

    def _eval_Merge(self, node, env):
        spaces = [self._model_of(operand, env) for operand in node.operands]
        return self._reasoner(
            node, lambda: ModelValue(analysis.merge(node.mode, spaces)))

    def _eval_Slice(self, node, env):
        space = self._model_of(node.operand, env)
        names = [self._feature_name(n, env) for n in node.names]
        return self._reasoner(
            node, lambda: ModelValue(analysis.slice_model(space, node.mode, names)))

    def _eval_Rename(self, node, env):
        space = self._model_of(node.operand, env)
        old = self._feature_name(node.old, env)
        new = self._feature_name(node.new, env)
        return self._reasoner(node, lambda: ModelValue(_rename(space, old, new)))

    def _eval_Run(self, node, env):
        path = node.path
        if not os.path.isabs(path):
            path = os.path.join(self.dir_stack[-1], path)
        try:
            with open(path, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as error:
            failure = IoError(f"cannot read script {node.path!r}: {error}")
            failure.span = node.span
            raise failure from error
        try:
            stmts = parse_script(text)
        except ParseError as error:
            raise EvalError(f"in {node.path}: {error}", node.span) from error
        scope = Environment(parent=env, script=True)
        for i, arg in enumerate(node.args, start=1):
            scope.bind(f"%{i}", self.eval(arg, env))
        self.dir_stack.append(os.path.dirname(path) or ".")
        try:
            return self.run_script(stmts, scope)
        finally:
            self.dir_stack.pop()

    def _eval_Unary(self, node, env):
        value = self.eval(node.operand, env)
        if node.op == "!":
            if not isinstance(value, BoolValue):
                raise EvalTypeError("Bool", _shown(value), node.operand.span)
            return BoolValue(not value.value)
        if node.op == "-":
            if not isinstance(value, IntValue):
                raise EvalTypeError("Int", _shown(value), node.operand.span)
            return IntValue(-value.value)
        raise TypeError(f"unknown unary operator {node.op!r}")

    def _eval_Binary(self, node, env):
        op = node.op
        if op in ("&&", "||"):
            left = self._bool_of(node.left, env)
            if op == "&&" and not left.value:
                return BoolValue(False)
            if op == "||" and left.value:
                return BoolValue(True)
            return self._bool_of(node.right, env)
        left = self.eval(node.left, env)
        right = self.eval(node.right, env)
        if op == "==":
            return BoolValue(left == right)
        if op == "!=":
            return BoolValue(left != right)
        if op == "+":
            if isinstance(left, IntValue) and isinstance(right, IntValue):
                return IntValue(left.value + right.value)
            if isinstance(left, StrValue) or isinstance(right, StrValue):
                return StrValue(_concat_text(left) + _concat_text(right))
            bad, where = ((right, node.right) if isinstance(left, IntValue)
                          else (left, node.left))
            raise EvalTypeError("Int or Str", _shown(bad), where.span)
        if op == "-":
            return IntValue(self._int_of(left, node.left).value
                            - self._int_of(right, node.right).value)
        if op in ("<", "<=", ">", ">="):
            a = self._int_of(left, node.left).value
            b = self._int_of(right, node.right).value
            result = {"<": a < b, "<=": a <= b, ">": a > b, ">=": a >= b}[op]
            return BoolValue(result)
        raise TypeError(f"unknown operator {op!r}")

    def _bool_of(self, node, env):
        value = self.eval(node, env)
        if not isinstance(value, BoolValue):
            raise EvalTypeError("Bool", _shown(value), node.span)
        return value

    def _int_of(self, value, node):
        if not isinstance(value, IntValue):
            raise EvalTypeError("Int", _shown(value), node.span)
        return value


def _concat_text(value):
    return value.value if isinstance(value, StrValue) else value.render()


def _rename(space, old, new):
    if isinstance(space, FeatureModel):
        return space.rename(old, new)
    if old not in space.alphabet:
        raise UnknownFeature(old)
    check_name(new)
    if new in space.alphabet:
        raise NameClash(new)
    return FlatModel(tuple(new if name == old else name for name in space.alphabet),
                     fm.rename_var(space.formula, old, new))


def run_file(path, out=None):
    """Execute a script file and hand back its final environment."""
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as error:
        raise IoError(f"cannot read script {path!r}: {error}") from error
    stmts = parse_script(text)
    base = os.path.dirname(os.path.abspath(path))
    interpreter = Interpreter(out=out, base_dir=base)
    env = Environment()
    interpreter.run_script(stmts, env)
    return env
