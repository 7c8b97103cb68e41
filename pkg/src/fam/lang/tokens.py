"""Tokenizer for the scripting language.

Statements end at newlines (or `;;`), so the lexer emits NEWLINE tokens,
but only at bracket depth zero: inside parentheses and braces a line
break is plain whitespace. FM literals are captured verbatim as single
tokens, balanced-parenthesis aware, and handed to the model parser
untouched at evaluation time.
"""

from fam.errors import LexError, Span

KEYWORDS = frozenset("""
    counting isValid configs cores deads features merge slice rename run
    foreach if then else do end in as true false sunion sinter sdiff
    including excluding with
""".split())

# longest-match first
OPERATORS = ("==", "!=", "<=", ">=", "&&", "||", ";;",
             "=", "<", ">", "!", "+", "-", "(", ")", "{", "}")


class Token:
    __slots__ = ("kind", "text", "span", "value")

    def __init__(self, kind, text, span, value=None):
        self.kind = kind
        self.text = text
        self.span = span
        self.value = value

    def __repr__(self):
        return f"Token({self.kind}, {self.text!r})"


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def eof(self):
        return self.pos >= len(self.text)

    def peek(self, ahead=0):
        i = self.pos + ahead
        return self.text[i] if i < len(self.text) else ""

    def advance(self):
        ch = self.text[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def here(self):
        return self.line, self.col

    def span_from(self, mark):
        return Span(mark[0], mark[1], self.line, self.col)


def _is_ident_start(ch):
    return ch.isalpha() or ch == "_"


def _is_ident(ch):
    return ch.isalnum() or ch == "_"


def _skip_line_comment(s):
    while not s.eof() and s.peek() != "\n":
        s.advance()


def _scan_string(s):
    mark = s.here()
    s.advance()  # opening quote
    out = []
    while True:
        if s.eof() or s.peek() == "\n":
            raise LexError("unterminated string", s.span_from(mark),
                           unterminated=True)
        ch = s.advance()
        if ch == '"':
            return Token("STRING", s.text[0:0], s.span_from(mark), "".join(out))
        if ch == "\\":
            if s.eof():
                raise LexError("unterminated string", s.span_from(mark),
                               unterminated=True)
            esc = s.advance()
            mapped = {"n": "\n", "t": "\t", '"': '"', "\\": "\\"}.get(esc)
            if mapped is None:
                raise LexError(f"unknown escape \\{esc}", s.span_from(mark))
            out.append(mapped)
        else:
            out.append(ch)


def _scan_fm_literal(s, mark, start_pos):
    # called with "FM" consumed; skip space and comments up to the "("
    while not s.eof():
        ch = s.peek()
        if ch in " \t\r\n":
            s.advance()
        elif ch == "/" and s.peek(1) == "/":
            _skip_line_comment(s)
        else:
            break
    if s.eof() or s.peek() != "(":
        return None  # plain identifier "FM" after all
    depth = 0
    while not s.eof():
        ch = s.peek()
        if ch == "/" and s.peek(1) == "/":
            _skip_line_comment(s)
            continue
        s.advance()
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                text = s.text[start_pos:s.pos]
                return Token("FMLIT", text, s.span_from(mark))
    raise LexError("unterminated FM literal", s.span_from(mark),
                   unterminated=True)


def tokenize(text):
    s = _Scanner(text)
    tokens = []
    depth = 0
    while not s.eof():
        ch = s.peek()
        mark = s.here()
        if ch in " \t\r":
            s.advance()
            continue
        if ch == "\n":
            s.advance()
            if depth == 0:
                tokens.append(Token("NEWLINE", "\n", s.span_from(mark)))
            continue
        if ch == "/" and s.peek(1) == "/":
            _skip_line_comment(s)
            continue
        if ch == '"':
            tokens.append(_scan_string(s))
            continue
        if ch.isdigit():
            start = s.pos
            while not s.eof() and s.peek().isdigit():
                s.advance()
            digits = s.text[start:s.pos]
            tokens.append(Token("INT", digits, s.span_from(mark), int(digits)))
            continue
        if _is_ident_start(ch):
            start = s.pos
            while not s.eof() and _is_ident(s.peek()):
                s.advance()
            word = s.text[start:s.pos]
            if word == "FM":
                literal = _scan_fm_literal(s, mark, start)
                if literal is not None:
                    tokens.append(literal)
                    continue
            kind = word if word in KEYWORDS else "ID"
            tokens.append(Token(kind, word, s.span_from(mark)))
            continue
        if ch == "%" and s.peek(1).isdigit():
            start = s.pos
            s.advance()
            while not s.eof() and s.peek().isdigit():
                s.advance()
            word = s.text[start:s.pos]
            tokens.append(Token("ID", word, s.span_from(mark)))
            continue
        for op in OPERATORS:
            if s.text.startswith(op, s.pos):
                for _ in op:
                    s.advance()
                if op in "({":
                    depth += 1
                elif op in ")}":
                    depth = max(0, depth - 1)
                tokens.append(Token(op, op, s.span_from(mark)))
                break
        else:
            raise LexError(f"illegal character {ch!r}", Span(mark[0], mark[1]))
    end = Span(s.line, s.col)
    tokens.append(Token("EOF", "", end))
    return tokens
