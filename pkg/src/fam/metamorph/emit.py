"""Emitters from the shared syntax tree to any dialect's text."""

import re

from fam.lang import ast, parse_script
from fam.metamorph.dialect import Dialect, load_dialect

_PLACEHOLDER = re.compile(r"%\{(\w+)(?::(\w+))?\}")


def quote(text: str) -> str:
    escaped = (text.replace("\\", "\\\\").replace('"', '\\"')
               .replace("\n", "\\n").replace("\t", "\\t"))
    return f'"{escaped}"'


def _indent(text: str) -> str:
    return "\n".join("    " + line if line else line
                     for line in text.split("\n"))


class _Emitter:

    def __init__(self, dialect: Dialect):
        self.dialect = dialect

    def script(self, stmts) -> str:
        sep = self.dialect.get("sep.statements", "\n")
        body = sep.join(self.stmt(s) for s in stmts)
        parts = [part for part in (self.dialect.get("preamble"), body,
                                   self.dialect.get("postamble")) if part]
        text = "\n".join(parts)
        return text + "\n" if text else ""

    def fill(self, kind: str, children: dict) -> str:
        template = self.dialect.template(kind)

        def substitute(match):
            text = children[match.group(1)]
            if match.group(2) == "quote":
                return quote(text)
            if match.group(2) == "indent":
                if not text:
                    text = self.dialect.get("block.empty")
                return _indent(text)
            return text

        return _PLACEHOLDER.sub(substitute, template)

    def items(self, kind: str, pieces) -> str:
        item = self.dialect.get(f"{kind}.item", "%{item}")
        sep = self.dialect.get(f"{kind}.sep", " ")
        return sep.join(
            _PLACEHOLDER.sub(
                lambda m, p=piece: quote(p) if m.group(2) == "quote" else p,
                item)
            for piece in pieces)

    def block(self, stmts) -> str:
        sep = self.dialect.get("sep.statements", "\n")
        return sep.join(self.stmt(s) for s in stmts)

    # -- statements ------------------------------------------------------

    def stmt(self, node) -> str:
        if isinstance(node, ast.Assign):
            self.dialect.template("Assign")
            return self.fill("Assign", {
                "name": self.dialect.mangle(node.name),
                "value": self.expr(node.value)})
        if isinstance(node, ast.ExprStmt):
            self.dialect.template("ExprStmt")
            return self.fill("ExprStmt", {"value": self.expr(node.value)})
        if isinstance(node, ast.Foreach):
            self.dialect.template("Foreach")
            return self.fill("Foreach", {
                "var": self.dialect.mangle(node.var),
                "source": self.expr(node.source),
                "body": self.block(node.body)})
        if isinstance(node, ast.If):
            kind = "IfElse" if node.orelse else "If"
            self.dialect.template(kind)
            children = {"cond": self.expr(node.cond),
                        "then": self.block(node.then)}
            if node.orelse:
                children["orelse"] = self.block(node.orelse)
            return self.fill(kind, children)
        raise TypeError(f"not a statement: {node!r}")

    # -- expressions -----------------------------------------------------

    def expr(self, node) -> str:
        return getattr(self, "_emit_" + type(node).__name__)(node)

    def operand(self, node) -> str:
        """Expression in a position where open-ended syntax must nest."""
        text = self.expr(node)
        if type(node).__name__ in self.dialect.group_kinds:
            return self.fill("group", {"inner": text}) \
                if "group" in self.dialect.entries else f"({text})"
        return text

    def _emit_FmLiteral(self, node):
        return self.fill("FmLiteral", {"text": node.text})

    def _emit_Var(self, node):
        return self.fill("Var", {"name": self.dialect.mangle(node.name)})

    def _emit_IntLit(self, node):
        return self.fill("IntLit", {"value": str(node.value)})

    def _emit_StrLit(self, node):
        return self.fill("StrLit", {"value": node.value})

    def _emit_BoolLit(self, node):
        key = "lit.true" if node.value else "lit.false"
        spelled = self.dialect.get(key, "true" if node.value else "false")
        return self.fill("BoolLit", {"value": spelled})

    def _unary_op(self, kind, node):
        return self.fill(kind, {"operand": self.expr(node.operand)})

    def _emit_Counting(self, node):
        return self._unary_op("Counting", node)

    def _emit_IsValid(self, node):
        return self._unary_op("IsValid", node)

    def _emit_Configs(self, node):
        return self._unary_op("Configs", node)

    def _emit_Cores(self, node):
        return self._unary_op("Cores", node)

    def _emit_Deads(self, node):
        return self._unary_op("Deads", node)

    def _emit_Features(self, node):
        return self._unary_op("Features", node)

    def _emit_Merge(self, node):
        operands = self.items("Merge",
                              [self.operand(op) for op in node.operands])
        return self.fill("Merge", {"mode": node.mode, "operands": operands})

    def _emit_Slice(self, node):
        return self.fill("Slice", {
            "operand": self.operand(node.operand),
            "mode": node.mode,
            "names": self.items("Slice", node.names)})

    def _emit_Rename(self, node):
        return self.fill("Rename", {
            "operand": self.operand(node.operand),
            "old": node.old, "new": node.new})

    def _emit_Run(self, node):
        if not node.args:
            return self.fill("Run", {"path": node.path})
        args = self.items("Run", [self.operand(a) for a in node.args])
        return self.fill("RunWith", {"path": node.path, "args": args})

    def _emit_Binary(self, node):
        return self.fill("Binary", {
            "op": self.dialect.get(f"op.{node.op}", node.op),
            "left": self.operand(node.left),
            "right": self.operand(node.right)})

    def _emit_Unary(self, node):
        return self.fill("Unary", {
            "op": self.dialect.get(f"op.{node.op}", node.op),
            "operand": self.operand(node.operand)})


def emit(stmts, dialect) -> str:
    """Render a statement list in the given dialect (name or instance)."""
    return _Emitter(load_dialect(dialect)).script(list(stmts))


def morph(text: str, from_shape: str = "external",
          to_shape: str = "embedded") -> str:
    """Reshape script text: parse the external form, emit another."""
    if from_shape != "external":
        raise ValueError("only the external shape can be parsed; "
                         "recover other shapes through fluent recording")
    return emit(parse_script(text), to_shape)
