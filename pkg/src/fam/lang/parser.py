"""Recursive-descent parser with statement-level error recovery.

On a syntax error the parser skips to the next statement boundary and
keeps going, inside blocks too; the ParseError finally raised carries
every collected error on `.errors`, first one foremost.
"""

from fam.errors import ParseError
from fam.lang import ast
from fam.lang.tokens import tokenize

_SEPARATORS = ("NEWLINE", ";;")

_UNARY_OPS = ("!", "-")
_COMPARISONS = ("==", "!=", "<", "<=", ">", ">=")
_ADDITIVE = ("+", "-")

_SIMPLE_OPS = {
    "counting": ast.Counting,
    "isValid": ast.IsValid,
    "configs": ast.Configs,
    "cores": ast.Cores,
    "deads": ast.Deads,
    "features": ast.Features,
}

_EXPR_STARTERS = frozenset(
    ("FMLIT", "INT", "STRING", "ID", "true", "false", "(", "!", "-",
     "merge", "slice", "rename", "run", *_SIMPLE_OPS))

_MERGE_MODES = ("sunion", "sinter", "sdiff")
_SLICE_MODES = ("including", "excluding")


class Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0
        self.errors = []

    # -- token plumbing ------------------------------------------------------

    def peek(self, ahead=0):
        i = min(self.pos + ahead, len(self.tokens) - 1)
        return self.tokens[i]

    def at(self, *kinds):
        return self.peek().kind in kinds

    def advance(self):
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def fail(self, expected):
        tok = self.peek()
        found = tok.kind if tok.kind != "EOF" else "end of input"
        raise ParseError(f"expected {expected}, found {found}",
                         tok.span, expected=(expected,), found=found)

    def expect(self, kind, expected=None):
        if not self.at(kind):
            self.fail(expected or f"'{kind}'")
        return self.advance()

    def skip_separators(self):
        while self.at(*_SEPARATORS):
            self.advance()

    def synchronize(self, stops):
        while True:
            if self.at("EOF") or self.at(*stops):
                return
            tok = self.advance()
            if tok.kind in _SEPARATORS:
                return

    # -- statements ------------------------------------------------------------

    def statements(self, stops):
        out = []
        while True:
            self.skip_separators()
            if self.at("EOF") or self.at(*stops):
                return out
            try:
                out.append(self.statement())
                if not (self.at("EOF") or self.at(*stops)):
                    if not self.at(*_SEPARATORS):
                        self.fail("end of statement")
                    self.advance()
            except ParseError as error:
                self.errors.append(error)
                self.synchronize(stops)

    def statement(self):
        if self.at("foreach"):
            return self.foreach()
        if self.at("if"):
            return self.ifstmt()
        if self.at("ID") and self.peek(1).kind == "=":
            name = self.advance()
            self.advance()
            value = self.expr()
            return ast.Assign(name.text, value,
                              span=name.span.merge(value.span))
        value = self.expr()
        return ast.ExprStmt(value, span=value.span)

    def foreach(self):
        start = self.expect("foreach")
        self.expect("(")
        var = self.expect("ID", "loop variable")
        self.expect("in")
        source = self.expr()
        self.expect(")")
        self.expect("do")
        body = self.statements(("end",))
        end = self.expect("end")
        return ast.Foreach(var.text, source, tuple(body),
                           span=start.span.merge(end.span))

    def ifstmt(self):
        start = self.expect("if")
        cond = self.expr()
        self.expect("then")
        then = self.statements(("end", "else"))
        orelse = []
        if self.at("else"):
            self.advance()
            orelse = self.statements(("end",))
        end = self.expect("end")
        return ast.If(cond, tuple(then), tuple(orelse),
                      span=start.span.merge(end.span))

    # -- expressions -------------------------------------------------------------

    def expr(self):
        node = self.and_expr()
        while self.at("||"):
            self.advance()
            right = self.and_expr()
            node = ast.Binary("||", node, right,
                              span=node.span.merge(right.span))
        return node

    def and_expr(self):
        node = self.comparison()
        while self.at("&&"):
            self.advance()
            right = self.comparison()
            node = ast.Binary("&&", node, right,
                              span=node.span.merge(right.span))
        return node

    def comparison(self):
        node = self.additive()
        while self.at(*_COMPARISONS):
            op = self.advance()
            right = self.additive()
            node = ast.Binary(op.kind, node, right,
                              span=node.span.merge(right.span))
        return node

    def additive(self):
        node = self.unary()
        while self.at(*_ADDITIVE):
            op = self.advance()
            right = self.unary()
            node = ast.Binary(op.kind, node, right,
                              span=node.span.merge(right.span))
        return node

    def unary(self):
        if self.at(*_UNARY_OPS):
            op = self.advance()
            operand = self.unary()
            return ast.Unary(op.kind, operand,
                             span=op.span.merge(operand.span))
        return self.primary()

    def primary(self):
        tok = self.peek()
        if tok.kind == "FMLIT":
            self.advance()
            return ast.FmLiteral(tok.text, span=tok.span)
        if tok.kind == "INT":
            self.advance()
            return ast.IntLit(tok.value, span=tok.span)
        if tok.kind == "STRING":
            self.advance()
            return ast.StrLit(tok.value, span=tok.span)
        if tok.kind in ("true", "false"):
            self.advance()
            return ast.BoolLit(tok.kind == "true", span=tok.span)
        if tok.kind == "ID":
            self.advance()
            return ast.Var(tok.text, span=tok.span)
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            close = self.expect(")")
            fields = {f: getattr(node, f)
                      for f in node.__dataclass_fields__ if f != "span"}
            return type(node)(**fields, span=tok.span.merge(close.span))
        if tok.kind in _SIMPLE_OPS:
            self.advance()
            operand = self.expr()
            return _SIMPLE_OPS[tok.kind](operand,
                                         span=tok.span.merge(operand.span))
        if tok.kind == "merge":
            return self.merge()
        if tok.kind == "slice":
            return self.slice()
        if tok.kind == "rename":
            return self.rename()
        if tok.kind == "run":
            return self.run()
        self.fail("an expression")

    def merge(self):
        start = self.expect("merge")
        if not self.at(*_MERGE_MODES):
            self.fail("sunion, sinter or sdiff")
        mode = self.advance()
        self.expect("{")
        operands = []
        while not self.at("}"):
            if self.at("EOF"):
                self.fail("'}'")
            operands.append(self.expr())
        close = self.advance()
        if len(operands) < 2:
            raise ParseError("merge needs at least 2 operands",
                             start.span.merge(close.span))
        return ast.Merge(mode.kind, tuple(operands),
                         span=start.span.merge(close.span))

    def slice(self):
        start = self.expect("slice")
        operand = self.expr()
        if not self.at(*_SLICE_MODES):
            self.fail("including or excluding")
        mode = self.advance()
        self.expect("{")
        names = [self.expect("ID", "feature name").text]
        while self.at("ID"):
            names.append(self.advance().text)
        close = self.expect("}")
        return ast.Slice(operand, mode.kind, tuple(names),
                         span=start.span.merge(close.span))

    def rename(self):
        start = self.expect("rename")
        operand = self.expr()
        old = self.expect("ID", "feature name")
        self.expect("as")
        new = self.expect("ID", "feature name")
        return ast.Rename(operand, old.text, new.text,
                          span=start.span.merge(new.span))

    def run(self):
        start = self.expect("run")
        path = self.expect("STRING", "script path")
        args = []
        last = path
        if self.at("with"):
            self.advance()
            args.append(self.expr())
            while self.at(*_EXPR_STARTERS):
                args.append(self.expr())
            last = args[-1]
        return ast.Run(path.value, tuple(args),
                       span=start.span.merge(last.span))


def parse_script(text):
    parser = Parser(tokenize(text))
    stmts = parser.statements(())
    if parser.errors:
        first = parser.errors[0]
        raise ParseError(first.message, first.span, expected=first.expected,
                         found=first.found, errors=parser.errors)
    return stmts
