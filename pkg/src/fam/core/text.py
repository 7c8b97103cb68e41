"""The FM textual notation.

    model      := "FM" "(" production+ constraint* ")"
    production := ID ":" element* ";"
    element    := ID | "[" ID "]" | "(" ID ("|" ID)+ ")" ("+"|"?")?
    constraint := formula ";"

`(a|b)` is an xor group, `(a|b)+` an or group, `(a|b)?` a mutex group.
`//` starts a comment; whitespace is insignificant. Canonical rendering
puts productions in pre-order of the tree, children in declaration
order, constraints last, with single spaces and `;` terminators.
"""

from __future__ import annotations

import re

from fam.core import formula as fm
from fam.core.model import (MANDATORY, MUTEX, OPTIONAL, OR, XOR,
                            FeatureModel, Group)
from fam.errors import ParseError, SemanticError, Span

_TOKEN_RE = re.compile(r"""
      (?P<WS>\s+)
    | (?P<COMMENT>//[^\n]*)
    | (?P<ID>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<IFF><->)
    | (?P<IMPLIES>->)
    | (?P<LPAREN>\()
    | (?P<RPAREN>\))
    | (?P<LBRACK>\[)
    | (?P<RBRACK>\])
    | (?P<COLON>:)
    | (?P<SEMI>;)
    | (?P<BAR>\|)
    | (?P<PLUS>\+)
    | (?P<QMARK>\?)
    | (?P<BANG>!)
    | (?P<AMP>&)
""", re.VERBOSE)

_KEYWORDS = {"true": "TRUE", "false": "FALSE"}


class Token:
    __slots__ = ("kind", "text", "span")

    def __init__(self, kind, text, span):
        self.kind = kind
        self.text = text
        self.span = span

    def __repr__(self):
        return f"Token({self.kind}, {self.text!r})"


def _tokenize(text):
    tokens = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            span = Span(line, pos - line_start + 1)
            raise ParseError(f"illegal character {text[pos]!r}", span, found=text[pos])
        kind = match.lastgroup
        chunk = match.group()
        if kind in ("WS", "COMMENT"):
            for i, ch in enumerate(chunk):
                if ch == "\n":
                    line += 1
                    line_start = pos + i + 1
        else:
            if kind == "ID":
                kind = _KEYWORDS.get(chunk, "ID")
            col = pos - line_start + 1
            tokens.append(Token(kind, chunk, Span(line, col, line, col + len(chunk))))
        pos = match.end()
    tokens.append(Token("EOF", "", Span(line, pos - line_start + 1)))
    return tokens


_HUMAN = {
    "ID": "identifier", "LPAREN": "'('", "RPAREN": "')'", "LBRACK": "'['",
    "RBRACK": "']'", "COLON": "':'", "SEMI": "';'", "BAR": "'|'",
    "PLUS": "'+'", "QMARK": "'?'", "BANG": "'!'", "AMP": "'&'",
    "IMPLIES": "'->'", "IFF": "'<->'", "TRUE": "'true'", "FALSE": "'false'",
    "EOF": "end of input",
}


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, ahead=0):
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self):
        token = self.tokens[self.pos]
        if token.kind != "EOF":
            self.pos += 1
        return token

    def fail(self, expected):
        token = self.peek()
        names = sorted(_HUMAN.get(k, k) for k in expected)
        found = _HUMAN.get(token.kind, token.kind)
        if token.kind == "ID":
            found = f"identifier {token.text!r}"
        raise ParseError(f"expected {' or '.join(names)}, found {found}",
                         token.span, expected=expected, found=token.text)

    def expect(self, kind):
        if self.peek().kind != kind:
            self.fail({kind})
        return self.advance()

    # -- grammar -----------------------------------------------------------

    def model(self):
        opener = self.expect("ID")
        if opener.text != "FM":
            raise ParseError(f"expected 'FM', found {opener.text!r}",
                             opener.span, expected={"ID"}, found=opener.text)
        self.expect("LPAREN")
        productions = []
        while self.peek().kind == "ID" and self.peek(1).kind == "COLON":
            productions.append(self.production())
        if not productions:
            self.fail({"ID"})
        constraints = []
        while self.peek().kind != "RPAREN":
            constraints.append(self.constraint())
        self.expect("RPAREN")
        self.expect("EOF")
        return productions, constraints

    def production(self):
        lhs = self.expect("ID")
        self.expect("COLON")
        elements = []
        while self.peek().kind in ("ID", "LBRACK", "LPAREN"):
            elements.append(self.element())
        self.expect("SEMI")
        return lhs, elements

    def element(self):
        token = self.peek()
        if token.kind == "ID":
            return ("mandatory", self.advance().text)
        if token.kind == "LBRACK":
            self.advance()
            name = self.expect("ID").text
            self.expect("RBRACK")
            return ("optional", name)
        self.expect("LPAREN")
        members = [self.expect("ID").text]
        self.expect("BAR")
        members.append(self.expect("ID").text)
        while self.peek().kind == "BAR":
            self.advance()
            members.append(self.expect("ID").text)
        self.expect("RPAREN")
        kind = XOR
        if self.peek().kind == "PLUS":
            self.advance()
            kind = OR
        elif self.peek().kind == "QMARK":
            self.advance()
            kind = MUTEX
        return ("group", kind, members)

    def constraint(self):
        body = self.formula()
        self.expect("SEMI")
        return body

    # precedence climbing: ! > & > | > -> (right-assoc) > <->
    def formula(self):
        return self.iff()

    def iff(self):
        left = self.implies()
        while self.peek().kind == "IFF":
            self.advance()
            left = fm.Iff(left, self.implies())
        return left

    def implies(self):
        left = self.disjunct()
        if self.peek().kind == "IMPLIES":
            self.advance()
            return fm.Implies(left, self.implies())
        return left

    def disjunct(self):
        left = self.conjunct()
        while self.peek().kind == "BAR":
            self.advance()
            left = fm.Or(left, self.conjunct())
        return left

    def conjunct(self):
        left = self.negation()
        while self.peek().kind == "AMP":
            self.advance()
            left = fm.And(left, self.negation())
        return left

    def negation(self):
        if self.peek().kind == "BANG":
            self.advance()
            return fm.Not(self.negation())
        return self.atom()

    def atom(self):
        token = self.peek()
        if token.kind == "ID":
            return fm.Var(self.advance().text)
        if token.kind == "TRUE":
            self.advance()
            return fm.TRUE
        if token.kind == "FALSE":
            self.advance()
            return fm.FALSE
        if token.kind == "LPAREN":
            self.advance()
            body = self.formula()
            self.expect("RPAREN")
            return body
        self.fail({"ID", "TRUE", "FALSE", "BANG", "LPAREN"})


def parse_formula(text) -> fm.Formula:
    """Parse a bare constraint formula (no trailing ';')."""
    parser = _Parser(text)
    body = parser.formula()
    parser.expect("EOF")
    return body


def parse_fm(text) -> FeatureModel:
    productions, constraints = _Parser(text).model()

    root = productions[0][0].text
    features = []
    known = set()

    def introduce(name, where):
        if name in known:
            raise SemanticError(f"duplicate feature {name!r} (line {where.span.line})")
        known.add(name)
        features.append(name)

    introduce(root, productions[0][0])
    produced = set()
    parent = {}
    optionality = {}
    groups = []
    for lhs, elements in productions:
        if lhs.text in produced:
            raise SemanticError(
                f"duplicate production for {lhs.text!r} (line {lhs.span.line})")
        produced.add(lhs.text)
        if lhs.text not in known and lhs.text != root:
            # forward production; the feature must still appear as a child
            introduce(lhs.text, lhs)
        for element in elements:
            if element[0] == "group":
                _, kind, members = element
                for member in members:
                    if member in parent or member == root:
                        raise SemanticError(f"duplicate feature {member!r}")
                    if member not in known:
                        introduce(member, lhs)
                    parent[member] = lhs.text
                groups.append(Group(lhs.text, tuple(members), kind))
            else:
                mark, child = element
                if child in parent or child == root:
                    raise SemanticError(f"duplicate feature {child!r}")
                if child not in known:
                    introduce(child, lhs)
                parent[child] = lhs.text
                optionality[child] = MANDATORY if mark == "mandatory" else OPTIONAL

    try:
        return FeatureModel(root, features, parent, optionality, groups, constraints)
    except SemanticError:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        raise SemanticError(str(exc)) from exc


def _render_production(model, name):
    parts = [name, ":"]
    for element in model.elements(name):
        if element[0] == "feature":
            child = element[1]
            if model.optionality[child] == OPTIONAL:
                parts.append(f"[{child}]")
            else:
                parts.append(child)
        else:
            group = element[1]
            suffix = {XOR: "", OR: "+", MUTEX: "?"}[group.kind]
            parts.append("(" + "|".join(group.members) + ")" + suffix)
    parts.append(";")
    return " ".join(parts)


def _textual_preorder(model):
    # group members surface at the first member's position, so the walk
    # must follow element order or re-parsing would reorder productions
    out = []

    def visit(name):
        out.append(name)
        for element in model.elements(name):
            if element[0] == "feature":
                visit(element[1])
            else:
                for member in element[1].members:
                    visit(member)

    visit(model.root)
    return out


def render_fm(model: FeatureModel) -> str:
    parts = []
    for name in _textual_preorder(model):
        if name == model.root or model.children(name):
            parts.append(_render_production(model, name))
    for constraint in model.constraints:
        parts.append(fm.render(constraint) + " ;")
    return "FM (" + " ".join(parts) + ")"
